#include "relrips/cayley.hpp"

#include <algorithm>
#include <ostream>
#include <queue>
#include <unordered_map>

namespace relrips {

CayleyBall CayleyBall::build(const GroupPresentation& p, int radius, std::size_t vertex_cap) {
    if (radius < 0) throw domain_error("ball radius must be non-negative");

    CayleyBall ball;
    ball.pres_ = &p;
    ball.radius_ = radius;

    std::unordered_map<Word, VertexId, WordHash> index;
    ball.words_.push_back(Word{});
    index.emplace(Word{}, 0);

    // Layered BFS: elements at word-metric distance L are exactly the normal
    // forms of length L. Sorting each layer makes numbering shortlex-global.
    std::vector<VertexId> layer{0};
    for (int len = 1; len <= radius && !layer.empty(); ++len) {
        std::vector<Word> next;
        for (VertexId v : layer) {
            Word w = ball.words_[v];
            w.push_back(0);
            for (Sym g = 0; g < p.gens.size(); ++g) {
                w.back() = g;
                Word nf = p.normal_form(w);
                if (static_cast<int>(nf.size()) != len) continue;
                if (index.count(nf)) continue;
                index.emplace(nf, kNoVertex);  // placeholder to dedupe
                next.push_back(std::move(nf));
            }
        }
        std::sort(next.begin(), next.end(), shortlex_less);
        layer.clear();
        for (Word& nf : next) {
            if (ball.words_.size() >= vertex_cap)
                throw resource_limit_error("ball vertex cap exceeded (" +
                                           std::to_string(vertex_cap) + ")");
            VertexId id = static_cast<VertexId>(ball.words_.size());
            index[nf] = id;
            ball.words_.push_back(std::move(nf));
            layer.push_back(id);
        }
    }

    ball.arc_begin_.assign(ball.words_.size() + 1, 0);
    for (VertexId v = 0; v < ball.words_.size(); ++v) {
        Word w = ball.words_[v];
        w.push_back(0);
        std::size_t count = 0;
        for (Sym g = 0; g < p.gens.size(); ++g) {
            w.back() = g;
            Word nf = p.normal_form(w);
            if (nf == ball.words_[v]) continue;  // degenerate generator equal to identity
            auto it = index.find(nf);
            if (it == index.end()) continue;
            ball.arcs_.push_back({g, it->second});
            ++count;
        }
        ball.arc_begin_[v + 1] = ball.arc_begin_[v] + count;
    }
    return ball;
}

std::optional<VertexId> CayleyBall::find(const Word& normal_form) const {
    // Binary search within the length layer; vertices are shortlex-sorted.
    auto it = std::lower_bound(words_.begin(), words_.end(), normal_form, shortlex_less);
    if (it != words_.end() && *it == normal_form)
        return static_cast<VertexId>(it - words_.begin());
    return std::nullopt;
}

std::vector<std::uint16_t> CayleyBall::distances_from(VertexId source) const {
    constexpr std::uint16_t unreached = std::numeric_limits<std::uint16_t>::max();
    std::vector<std::uint16_t> dist(size(), unreached);
    std::queue<VertexId> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        for (const Arc& a : neighbors(v)) {
            if (dist[a.to] == unreached) {
                dist[a.to] = static_cast<std::uint16_t>(dist[v] + 1);
                queue.push(a.to);
            }
        }
    }
    return dist;
}

BallDistance CayleyBall::graph_distance(VertexId u, VertexId v) const {
    if (u >= size() || v >= size()) throw domain_error("vertex outside the ball");
    auto dist = distances_from(u);
    BallDistance out;
    out.dist = dist[v] == std::numeric_limits<std::uint16_t>::max() ? -1 : dist[v];
    out.boundary_warning = word_length(u) == radius_ || word_length(v) == radius_;
    return out;
}

void CayleyBall::export_edges(std::ostream& out) const {
    for (VertexId v = 0; v < size(); ++v)
        for (const Arc& a : neighbors(v))
            if (v < a.to) out << v << ' ' << a.to << ' ' << pres_->gens.name(a.gen) << '\n';
}

CosetTable coset_table(const CayleyBall& ball, const PeripheralSpec& k) {
    const GroupPresentation& p = ball.presentation();
    const std::size_t n = ball.size();

    // Union by single peripheral-generator steps first; they stay within a
    // coset by definition.
    std::vector<VertexId> parent(n);
    for (VertexId v = 0; v < n; ++v) parent[v] = v;
    auto find_root = [&](VertexId v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    auto unite = [&](VertexId a, VertexId b) {
        a = find_root(a);
        b = find_root(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;  // keep the least vertex as root
    };

    for (VertexId v = 0; v < n; ++v)
        for (const auto& arc : ball.neighbors(v))
            if (k.contains(arc.gen)) unite(v, arc.to);

    // A coset may still be split across classes when the connecting K-path
    // leaves the ball; merge the remaining class representatives pairwise.
    std::vector<VertexId> roots;
    for (VertexId v = 0; v < n; ++v)
        if (find_root(v) == v) roots.push_back(v);
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (find_root(roots[i]) == find_root(roots[j])) continue;
            if (peripheral_distance(ball.word(roots[i]), ball.word(roots[j]), p, k))
                unite(roots[i], roots[j]);
        }

    CosetTable table;
    table.coset_of.assign(n, 0);
    std::unordered_map<VertexId, std::uint32_t> coset_id;
    for (VertexId v = 0; v < n; ++v) {
        VertexId root = find_root(v);  // root is the least vertex of its class
        auto [it, fresh] = coset_id.emplace(root, static_cast<std::uint32_t>(table.representative.size()));
        if (fresh) {
            table.representative.push_back(root);
            table.members.emplace_back();
        }
        table.coset_of[v] = it->second;
        table.members[it->second].push_back(v);
    }
    return table;
}

}  // namespace relrips
