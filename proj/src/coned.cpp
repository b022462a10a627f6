#include "relrips/coned.hpp"

#include <algorithm>
#include <queue>

namespace relrips {

ConedBall::ConedBall(const CayleyBall& ball, const PeripheralSpec& k) : ball_(&ball), k_(&k) {
    cosets_ = coset_table(ball, k);
    const std::size_t n = ball.size();

    rank_in_coset_.assign(n, 0);
    for (const auto& members : cosets_.members)
        for (std::size_t i = 0; i < members.size(); ++i)
            rank_in_coset_[members[i]] = static_cast<std::uint32_t>(i);

    // Pairwise d_K inside each coset, packed as a strict lower triangle.
    const GroupPresentation& p = ball.presentation();
    travel_.resize(cosets_.coset_count());
    for (std::size_t c = 0; c < cosets_.coset_count(); ++c) {
        const auto& members = cosets_.members[c];
        const std::size_t t = members.size();
        travel_[c].assign(t * (t - 1) / 2, 0);
        for (std::size_t i = 1; i < t; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                auto d = peripheral_distance(ball.word(members[i]), ball.word(members[j]), p, k);
                if (!d) throw domain_error("coset table inconsistent with peripheral membership");
                travel_[c][i * (i - 1) / 2 + j] = static_cast<std::uint16_t>(*d);
            }
        coset_pair_count_ += t * (t - 1) / 2;
    }

    // Merge Cayley arcs with coset cliques into sorted unique neighbor lists.
    nbr_begin_.assign(n + 1, 0);
    std::vector<VertexId> scratch;
    for (VertexId v = 0; v < n; ++v) {
        scratch.clear();
        for (const auto& arc : ball.neighbors(v)) scratch.push_back(arc.to);
        for (VertexId m : cosets_.members[cosets_.coset_of[v]])
            if (m != v) scratch.push_back(m);
        std::sort(scratch.begin(), scratch.end());
        scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
        nbrs_.insert(nbrs_.end(), scratch.begin(), scratch.end());
        nbr_begin_[v + 1] = nbrs_.size();
    }

    // Same-coset pairs already joined by a Cayley edge, counted once per
    // unordered pair (parallel arcs through different generators dedupe).
    std::size_t same_coset_gamma_pairs = 0;
    {
        std::vector<VertexId> seen;
        for (VertexId v = 0; v < n; ++v) {
            seen.clear();
            for (const auto& arc : ball.neighbors(v))
                if (v < arc.to && same_coset(v, arc.to)) seen.push_back(arc.to);
            std::sort(seen.begin(), seen.end());
            same_coset_gamma_pairs += static_cast<std::size_t>(
                std::unique(seen.begin(), seen.end()) - seen.begin());
        }
    }
    added_edge_count_ = coset_pair_count_ - same_coset_gamma_pairs;
}

bool ConedBall::gamma_adjacent(VertexId u, VertexId v) const {
    for (const auto& arc : ball_->neighbors(u))
        if (arc.to == v) return true;
    return false;
}

int ConedBall::travel(VertexId u, VertexId v) const {
    if (u == v) return 0;
    if (!same_coset(u, v)) throw domain_error("travel queried for vertices in different cosets");
    std::uint32_t i = rank_in_coset_[u], j = rank_in_coset_[v];
    if (i < j) std::swap(i, j);
    return travel_[cosets_.coset_of[u]][static_cast<std::size_t>(i) * (i - 1) / 2 + j];
}

std::vector<std::uint16_t> ConedBall::distances_from(VertexId source) const {
    constexpr std::uint16_t unreached = std::numeric_limits<std::uint16_t>::max();
    std::vector<std::uint16_t> dist(ball_->size(), unreached);
    std::queue<VertexId> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        for (VertexId w : neighbors(v)) {
            if (dist[w] == unreached) {
                dist[w] = static_cast<std::uint16_t>(dist[v] + 1);
                queue.push(w);
            }
        }
    }
    return dist;
}

BallDistance ConedBall::relative_distance(VertexId u, VertexId v) const {
    if (u >= ball_->size() || v >= ball_->size()) throw domain_error("vertex outside the ball");
    auto dist = distances_from(u);
    BallDistance out;
    out.dist = dist[v] == std::numeric_limits<std::uint16_t>::max() ? -1 : dist[v];
    out.boundary_warning = ball_->word_length(u) == ball_->radius() ||
                           ball_->word_length(v) == ball_->radius();
    return out;
}

namespace {

DistanceMatrix matrix_from_bfs(std::size_t n, auto&& bfs_row) {
    if (n > kDistanceMatrixVertexCap)
        throw resource_limit_error("all-pairs distance table too large (" + std::to_string(n) +
                                   " vertices)");
    DistanceMatrix dm;
    dm.n = n;
    dm.d.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = bfs_row(static_cast<VertexId>(i));
        for (std::size_t j = 0; j < n; ++j) {
            if (row[j] == std::numeric_limits<std::uint16_t>::max())
                throw domain_error("graph is disconnected");
            if (row[j] >= 255) throw domain_error("graph diameter too large for distance table");
            dm.d[i * n + j] = static_cast<std::uint8_t>(row[j]);
        }
    }
    return dm;
}

}  // namespace

DistanceMatrix all_pairs_distances(const CayleyBall& ball) {
    return matrix_from_bfs(ball.size(), [&](VertexId v) { return ball.distances_from(v); });
}

DistanceMatrix all_pairs_distances(const ConedBall& cb) {
    return matrix_from_bfs(cb.base().size(), [&](VertexId v) { return cb.distances_from(v); });
}

namespace {

// Maximal same-coset runs of a vertex sequence; singleton runs included.
struct Run {
    std::uint32_t coset;
    std::size_t first, last;  // index range into the sequence, inclusive
};

std::vector<Run> coset_runs(const ConedBall& cb, const std::vector<VertexId>& seq) {
    std::vector<Run> runs;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        std::uint32_t c = cb.coset_of(seq[i]);
        if (!runs.empty() && runs.back().coset == c)
            runs.back().last = i;
        else
            runs.push_back({c, i, i});
    }
    return runs;
}

std::vector<VertexId> loop_erase(const std::vector<VertexId>& seq) {
    std::vector<VertexId> out;
    for (VertexId v : seq) {
        auto it = std::find(out.begin(), out.end(), v);
        if (it != out.end())
            out.erase(it + 1, out.end());
        else
            out.push_back(v);
    }
    return out;
}

}  // namespace

RelativePath project_path(const ConedBall& cb, std::vector<VertexId> steps) {
    if (steps.empty()) throw domain_error("empty path");
    for (std::size_t i = 0; i + 1 < steps.size(); ++i)
        if (!cb.gamma_adjacent(steps[i], steps[i + 1]))
            throw domain_error("consecutive path vertices are not Cayley-adjacent");

    RelativePath path;
    path.steps = steps;

    // Ledger: every same-coset run the raw path spends at least one edge in.
    for (const Run& run : coset_runs(cb, steps))
        if (run.last > run.first) {
            VertexId entry = steps[run.first], exit = steps[run.last];
            path.ledger.push_back({run.coset, entry, exit, cb.travel(entry, exit)});
        }

    // Contract runs to their entry/exit, drop self-loops, erase larger loops;
    // repeat until stable since erasure can create new adjacent runs.
    std::vector<VertexId> seq = std::move(steps);
    while (true) {
        std::vector<VertexId> contracted;
        for (const Run& run : coset_runs(cb, seq)) {
            contracted.push_back(seq[run.first]);
            if (seq[run.last] != seq[run.first]) contracted.push_back(seq[run.last]);
        }
        std::vector<VertexId> erased = loop_erase(contracted);
        if (erased == seq) {
            path.projected = std::move(erased);
            break;
        }
        seq = std::move(erased);
    }
    return path;
}

GeodesicCheck is_relative_geodesic(const ConedBall& cb, const RelativePath& path) {
    GeodesicCheck check;
    check.relative_length = path.relative_length();
    VertexId u = path.projected.front(), v = path.projected.back();
    check.relative_dist = cb.relative_distance(u, v).dist;
    check.is_geodesic = check.relative_length == check.relative_dist;
    const int margin = cb.base().radius() - check.relative_length;
    check.reliable = cb.base().word_length(u) <= margin && cb.base().word_length(v) <= margin;
    return check;
}

QuasigeodesicCheck is_T_relative_quasigeodesic(const ConedBall& cb, const RelativePath& path,
                                               const Rational& T) {
    if (T.num < T.den) throw domain_error("quasi-geodesic constant must be at least 1");
    QuasigeodesicCheck check;
    check.is_quasigeodesic = true;
    const auto& seq = path.projected;
    const int L = path.relative_length();
    for (std::size_t t = 0; t < seq.size() && check.is_quasigeodesic; ++t) {
        auto dist = cb.distances_from(seq[t]);
        for (std::size_t t2 = t + 1; t2 < seq.size(); ++t2) {
            std::int64_t gap = static_cast<std::int64_t>(t2 - t);
            std::int64_t d = dist[seq[t2]];
            // T^-1 |t - t'| <= d; the upper bound holds automatically for a
            // path parameterized by arc length when T >= 1.
            if (T.den * gap > T.num * d) {
                check.is_quasigeodesic = false;
                break;
            }
        }
    }
    VertexId u = seq.front(), v = seq.back();
    const int margin = cb.base().radius() - L;
    check.reliable = cb.base().word_length(u) <= margin && cb.base().word_length(v) <= margin;
    return check;
}

namespace {

// Expand one same-coset hop into the shortlex K-geodesic inside the ball.
void append_coset_lift(const ConedBall& cb, VertexId from, VertexId to,
                       std::vector<VertexId>& out) {
    const CayleyBall& ball = cb.base();
    const GroupPresentation& p = ball.presentation();
    Word diff = p.gens.inverse_word(ball.word(from));
    const Word& target = ball.word(to);
    diff.insert(diff.end(), target.begin(), target.end());
    Word k_word = p.normal_form(diff);
    Word cur = ball.word(from);
    for (Sym s : k_word) {
        cur.push_back(s);
        cur = p.normal_form(cur);
        auto id = ball.find(cur);
        if (!id)
            throw resource_limit_error(
                "coset geodesic leaves the ball; enlarge the radius to lift this path");
        out.push_back(*id);
    }
    if (out.empty() || out.back() != to)
        throw domain_error("coset lift did not reach its target");
}

RelativePath lift_projected(const ConedBall& cb, const std::vector<VertexId>& projected) {
    RelativePath path;
    path.projected = projected;
    path.steps.push_back(projected.front());
    for (std::size_t i = 0; i + 1 < projected.size(); ++i) {
        VertexId a = projected[i], b = projected[i + 1];
        if (cb.same_coset(a, b)) {
            append_coset_lift(cb, a, b, path.steps);
            path.ledger.push_back({cb.coset_of(a), a, b, cb.travel(a, b)});
        } else {
            path.steps.push_back(b);
        }
    }
    return path;
}

}  // namespace

std::vector<RelativePath> enumerate_relative_geodesics(const ConedBall& cb, VertexId u, VertexId v,
                                                       int d_max, std::size_t path_cap) {
    if (u >= cb.base().size() || v >= cb.base().size())
        throw domain_error("vertex outside the ball");
    std::vector<RelativePath> out;
    auto to_v = cb.distances_from(v);
    if (to_v[u] == std::numeric_limits<std::uint16_t>::max() || to_v[u] > d_max) return out;
    if (u == v) {
        out.push_back(lift_projected(cb, {u}));
        return out;
    }

    std::vector<VertexId> prefix{u};
    auto descend = [&](auto&& self, VertexId cur) -> void {
        if (cur == v) {
            if (out.size() >= path_cap)
                throw resource_limit_error("relative geodesic enumeration cap exceeded");
            out.push_back(lift_projected(cb, prefix));
            return;
        }
        for (VertexId w : cb.neighbors(cur)) {
            if (to_v[w] + 1 != to_v[cur]) continue;
            prefix.push_back(w);
            self(self, w);
            prefix.pop_back();
        }
    };
    descend(descend, u);
    return out;
}

std::vector<RelativePath> enumerate_quasigeodesics(const ConedBall& cb, const DistanceMatrix& dm,
                                                   VertexId u, VertexId v, const Rational& T,
                                                   int d_max, std::size_t path_cap) {
    if (T.num < T.den) throw domain_error("quasi-geodesic constant must be at least 1");
    std::vector<RelativePath> out;
    if (dm.at(u, v) > static_cast<unsigned>(d_max)) return out;
    if (u == v) {
        out.push_back(lift_projected(cb, {u}));
        return out;
    }

    std::vector<VertexId> prefix{u};
    std::vector<bool> on_path(cb.base().size(), false);
    on_path[u] = true;
    std::vector<std::uint32_t> left_cosets;  // cosets exited and sealed

    auto descend = [&](auto&& self, VertexId cur) -> void {
        if (cur == v && prefix.size() > 1) {
            if (out.size() >= path_cap)
                throw resource_limit_error("quasi-geodesic enumeration cap exceeded");
            out.push_back(lift_projected(cb, prefix));
            // Paths may continue beyond v only if a longer loop-free
            // quasi-geodesic revisits it, which loop-freeness forbids.
            return;
        }
        if (static_cast<int>(prefix.size()) - 1 >= d_max) return;
        const int remaining = d_max - static_cast<int>(prefix.size()) + 1;
        const std::uint32_t cur_coset = cb.coset_of(cur);
        const bool prev_step_in_coset =
            prefix.size() >= 2 && cb.same_coset(prefix[prefix.size() - 2], cur);
        for (VertexId w : cb.neighbors(cur)) {
            if (on_path[w]) continue;
            if (dm.at(w, v) > static_cast<unsigned>(remaining - 1)) continue;
            const std::uint32_t w_coset = cb.coset_of(w);
            const bool step_in_coset = w_coset == cur_coset;
            if (step_in_coset && prev_step_in_coset) continue;  // not a reduced projection
            if (!step_in_coset) {
                if (std::find(left_cosets.begin(), left_cosets.end(), w_coset) !=
                    left_cosets.end())
                    continue;  // no backtracking into a sealed coset
            }
            // Incremental two-sided check against every earlier position.
            bool ok = true;
            const std::size_t t2 = prefix.size();
            for (std::size_t t = 0; t < prefix.size(); ++t) {
                std::int64_t gap = static_cast<std::int64_t>(t2 - t);
                std::int64_t d = dm.at(prefix[t], w);
                if (T.den * gap > T.num * d) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (!step_in_coset) left_cosets.push_back(cur_coset);
            prefix.push_back(w);
            on_path[w] = true;
            self(self, w);
            on_path[w] = false;
            prefix.pop_back();
            if (!step_in_coset) left_cosets.pop_back();
        }
    };
    descend(descend, u);
    return out;
}

}  // namespace relrips
