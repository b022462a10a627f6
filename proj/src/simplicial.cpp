#include "relrips/simplicial.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <unordered_map>

namespace relrips {

int SimplicialComplex::dim() const {
    for (int k = static_cast<int>(sims.size()) - 1; k >= 0; --k)
        if (count(k) > 0) return k;
    return -1;
}

std::size_t SimplicialComplex::total_simplices() const {
    std::size_t total = 0;
    for (int k = 0; k < static_cast<int>(sims.size()); ++k) total += count(k);
    return total;
}

std::size_t SimplicialComplex::find_simplex(int k, std::span<const VertexId> tuple) const {
    if (k < 0 || k >= static_cast<int>(sims.size())) return npos;
    const std::size_t width = static_cast<std::size_t>(k) + 1;
    const auto& flat = sims[k];
    std::size_t lo = 0, hi = flat.size() / width;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        const VertexId* p = flat.data() + mid * width;
        if (std::lexicographical_compare(p, p + width, tuple.begin(), tuple.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < flat.size() / width &&
        std::equal(tuple.begin(), tuple.end(), flat.data() + lo * width))
        return lo;
    return npos;
}

SimplicialComplex SimplicialComplex::flag_from_edges(
    std::vector<std::string> labels, std::vector<std::pair<VertexId, VertexId>> edges, int k_max,
    std::size_t clique_cap) {
    if (k_max < 1) throw domain_error("dimension cap must be at least 1");
    SimplicialComplex X;
    X.labels = std::move(labels);
    X.k_max = k_max;
    X.flag_truncated = true;
    const std::size_t n = X.labels.size();
    X.sims.resize(static_cast<std::size_t>(k_max) + 1);

    X.sims[0].resize(n);
    for (VertexId v = 0; v < n; ++v) X.sims[0][v] = v;

    for (auto& [u, v] : edges) {
        if (u == v) throw domain_error("self-loop edge in complex");
        if (u > v) std::swap(u, v);
        if (v >= n) throw domain_error("edge endpoint outside the vertex set");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    X.sims[1].reserve(edges.size() * 2);
    for (auto& [u, v] : edges) {
        X.sims[1].push_back(u);
        X.sims[1].push_back(v);
    }

    // Forward adjacency for clique extension.
    std::vector<std::vector<VertexId>> fwd(n);
    for (auto& [u, v] : edges) fwd[u].push_back(v);

    std::size_t total = n + edges.size();
    for (int k = 2; k <= k_max; ++k) {
        const std::size_t width = static_cast<std::size_t>(k);
        const auto& prev = X.sims[k - 1];
        auto& cur = X.sims[k];
        std::vector<VertexId> common;
        for (std::size_t off = 0; off < prev.size(); off += width) {
            const VertexId* s = prev.data() + off;
            // candidates: common forward neighbors of every vertex of s
            common.assign(fwd[s[0]].begin(), fwd[s[0]].end());
            for (std::size_t i = 1; i < width && !common.empty(); ++i) {
                const auto& list = fwd[s[i]];
                std::vector<VertexId> next;
                std::set_intersection(common.begin(), common.end(), list.begin(), list.end(),
                                      std::back_inserter(next));
                common.swap(next);
            }
            for (VertexId w : common) {
                cur.insert(cur.end(), s, s + width);
                cur.push_back(w);
                if (++total > clique_cap)
                    throw resource_limit_error("clique cap exceeded during flag completion");
            }
        }
    }
    return X;
}

SimplicialComplex SimplicialComplex::from_simplices(
    std::vector<std::string> labels, const std::vector<std::vector<VertexId>>& simplices,
    int k_max) {
    SimplicialComplex X;
    X.labels = std::move(labels);
    X.k_max = k_max;
    X.sims.resize(static_cast<std::size_t>(k_max) + 1);
    std::vector<std::set<std::vector<VertexId>>> per_dim(static_cast<std::size_t>(k_max) + 1);

    // Insert each simplex and all faces.
    auto insert_closed = [&](std::vector<VertexId> s, auto&& self) -> void {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        int k = static_cast<int>(s.size()) - 1;
        if (k > k_max) throw domain_error("simplex above the dimension cap");
        if (k < 0) return;
        if (!per_dim[k].insert(s).second) return;
        if (k == 0) return;
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<VertexId> face;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i) face.push_back(s[j]);
            self(std::move(face), self);
        }
    };
    for (const auto& s : simplices) insert_closed(s, insert_closed);

    for (int k = 0; k <= k_max; ++k)
        for (const auto& s : per_dim[k]) X.sims[k].insert(X.sims[k].end(), s.begin(), s.end());
    for (const auto& s : per_dim[0])
        if (s[0] >= X.labels.size()) throw domain_error("simplex vertex outside the vertex set");
    return X;
}

SimplicialComplex SimplicialComplex::induced(const std::vector<VertexId>& keep) const {
    std::vector<VertexId> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<VertexId> remap(vertex_count(), kNoVertex);
    SimplicialComplex Y;
    Y.k_max = k_max;
    Y.flag_truncated = flag_truncated;  // full subcomplexes of flag complexes stay flag
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        remap[sorted[i]] = static_cast<VertexId>(i);
        Y.labels.push_back(labels[sorted[i]]);
    }
    if (coset_of) {
        Y.coset_of.emplace();
        for (VertexId v : sorted) Y.coset_of->push_back((*coset_of)[v]);
    }
    Y.sims.resize(sims.size());
    for (int k = 0; k < static_cast<int>(sims.size()); ++k) {
        const std::size_t width = static_cast<std::size_t>(k) + 1;
        for (std::size_t off = 0; off < sims[k].size(); off += width) {
            bool inside = true;
            for (std::size_t i = 0; i < width && inside; ++i)
                inside = remap[sims[k][off + i]] != kNoVertex;
            if (!inside) continue;
            for (std::size_t i = 0; i < width; ++i) Y.sims[k].push_back(remap[sims[k][off + i]]);
            if (k == 1 && !edge_provenance.empty())
                Y.edge_provenance.push_back(edge_provenance[off / 2]);
        }
    }
    return Y;
}

void SimplicialComplex::export_text(std::ostream& out) const {
    for (int k = 0; k < static_cast<int>(sims.size()); ++k) {
        const std::size_t width = static_cast<std::size_t>(k) + 1;
        for (std::size_t off = 0; off < sims[k].size(); off += width) {
            for (std::size_t i = 0; i < width; ++i) {
                if (i) out << ' ';
                out << sims[k][off + i];
            }
            out << '\n';
        }
    }
}

SimplicialComplex coset_subcomplex(const SimplicialComplex& X, std::uint32_t coset) {
    if (!X.coset_of) throw domain_error("complex carries no coset table");
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < X.vertex_count(); ++v)
        if ((*X.coset_of)[v] == coset) keep.push_back(v);
    if (keep.empty()) throw domain_error("unknown coset id " + std::to_string(coset));
    return X.induced(keep);
}

InclusionMap inclusion(const SimplicialComplex& source, const SimplicialComplex& target) {
    InclusionMap inc;
    inc.source = &source;
    inc.target = &target;

    std::unordered_map<std::string, VertexId> by_label;
    for (VertexId v = 0; v < target.vertex_count(); ++v) {
        if (!by_label.emplace(target.labels[v], v).second)
            throw domain_error("target complex has duplicate vertex labels");
    }
    inc.vertex_map.reserve(source.vertex_count());
    for (VertexId v = 0; v < source.vertex_count(); ++v) {
        auto it = by_label.find(source.labels[v]);
        if (it == by_label.end())
            throw domain_error("inclusion violated: source vertex '" + source.labels[v] +
                               "' is missing from the target");
        inc.vertex_map.push_back(it->second);
    }

    std::vector<VertexId> image;
    for (int k = 1; k < static_cast<int>(source.sims.size()); ++k) {
        const std::size_t width = static_cast<std::size_t>(k) + 1;
        for (std::size_t off = 0; off < source.sims[k].size(); off += width) {
            image.clear();
            for (std::size_t i = 0; i < width; ++i)
                image.push_back(inc.vertex_map[source.sims[k][off + i]]);
            std::sort(image.begin(), image.end());
            if (target.find_simplex(k, image) == SimplicialComplex::npos)
                throw domain_error(
                    "inclusion violated: a source simplex is missing from the target "
                    "(monotonicity bug)");
        }
    }
    return inc;
}

bool label_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    std::map<std::string, VertexId> bl;
    for (VertexId v = 0; v < b.vertex_count(); ++v) bl[b.labels[v]] = v;
    std::vector<VertexId> map(a.vertex_count());
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
        auto it = bl.find(a.labels[v]);
        if (it == bl.end()) return false;
        map[v] = it->second;
    }
    int top = std::max(static_cast<int>(a.sims.size()), static_cast<int>(b.sims.size()));
    for (int k = 0; k < top; ++k) {
        if (a.count(k) != b.count(k)) return false;
        if (a.count(k) == 0) continue;
        const std::size_t width = static_cast<std::size_t>(k) + 1;
        std::vector<std::vector<VertexId>> xa, xb;
        for (std::size_t off = 0; off + width <= a.sims[k].size(); off += width) {
            std::vector<VertexId> t;
            for (std::size_t i = 0; i < width; ++i) t.push_back(map[a.sims[k][off + i]]);
            std::sort(t.begin(), t.end());
            xa.push_back(std::move(t));
        }
        if (k < static_cast<int>(b.sims.size()))
            for (std::size_t off = 0; off + width <= b.sims[k].size(); off += width)
                xb.emplace_back(b.sims[k].begin() + static_cast<std::ptrdiff_t>(off),
                                b.sims[k].begin() + static_cast<std::ptrdiff_t>(off + width));
        std::sort(xa.begin(), xa.end());
        std::sort(xb.begin(), xb.end());
        if (xa != xb) return false;
    }
    return true;
}

}  // namespace relrips
