#include "relrips/hyperbolicity.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace relrips {

namespace {

inline unsigned defect_of(unsigned s1, unsigned s2, unsigned s3) {
    unsigned hi = std::max(s1, s2), lo = std::min(s1, s2);
    unsigned max3 = std::max(hi, s3);
    unsigned med = std::max(lo, std::min(hi, s3));
    return max3 - med;
}

// Hot loop of the exhaustive scan: for fixed (i, j, k), fold the defect over
// all l in [lo, hi). Byte arithmetic, written to auto-vectorize; vectorization
// is pinned so debug builds stay usable.
#if defined(__x86_64__) && defined(__GNUC__) && !defined(__clang__)
__attribute__((optimize("O3"), target_clones("avx2", "default")))
#endif
std::uint8_t
scan_l(const std::uint8_t* di, const std::uint8_t* dj, const std::uint8_t* dk, std::uint8_t dij,
       std::uint8_t dik, std::uint8_t djk, std::size_t lo, std::size_t hi) {
    std::uint8_t best = 0;
    for (std::size_t l = lo; l < hi; ++l) {
        std::uint8_t s1 = static_cast<std::uint8_t>(dij + dk[l]);
        std::uint8_t s2 = static_cast<std::uint8_t>(dik + dj[l]);
        std::uint8_t s3 = static_cast<std::uint8_t>(djk + di[l]);
        std::uint8_t hi12 = std::max(s1, s2), lo12 = std::min(s1, s2);
        std::uint8_t max3 = std::max(hi12, s3);
        std::uint8_t med = std::max(lo12, std::min(hi12, s3));
        best = std::max(best, static_cast<std::uint8_t>(max3 - med));
    }
    return best;
}

}  // namespace

DeltaEstimate delta_four_point(const DistanceMatrix& dm, const std::vector<VertexId>& vertices,
                               const SamplePlan& plan) {
    DeltaEstimate est;
    est.vertex_count = vertices.size();
    const std::size_t m = vertices.size();
    if (m < 4) {
        est.quadruples = 0;
        return est;  // fewer than four points: delta 0
    }

    // Compact submatrix so the innermost loop reads contiguous rows.
    std::uint8_t max_d = 0;
    std::vector<std::uint8_t> sub(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::uint8_t d = dm.at(vertices[i], vertices[j]);
            sub[i * m + j] = d;
            max_d = std::max(max_d, d);
        }
    if (max_d > 127) throw domain_error("diameter too large for the byte-wise four-point scan");
    auto row = [&](std::size_t i) { return sub.data() + i * m; };

    if (plan.exhaustive) {
        std::uint8_t best = 0;
        for (std::size_t i = 0; i + 3 < m; ++i) {
            const std::uint8_t* di = row(i);
            for (std::size_t j = i + 1; j + 2 < m; ++j) {
                const std::uint8_t* dj = row(j);
                const std::uint8_t dij = di[j];
                for (std::size_t k = j + 1; k + 1 < m; ++k) {
                    best = std::max(best, scan_l(di, dj, row(k), dij, di[k], dj[k], k + 1, m));
                }
            }
        }
        est.two_delta = best;
        est.exact = true;
        est.quadruples = static_cast<std::uint64_t>(m) * (m - 1) * (m - 2) * (m - 3) / 24;
    } else {
        std::mt19937_64 rng(plan.seed);
        std::uniform_int_distribution<std::size_t> pick(0, m - 1);
        unsigned best = 0;
        for (std::size_t q = 0; q < plan.count; ++q) {
            std::size_t idx[4];
            for (int t = 0; t < 4;) {
                std::size_t c = pick(rng);
                bool dup = false;
                for (int u = 0; u < t; ++u) dup |= idx[u] == c;
                if (!dup) idx[t++] = c;
            }
            unsigned s1 = sub[idx[0] * m + idx[1]] + sub[idx[2] * m + idx[3]];
            unsigned s2 = sub[idx[0] * m + idx[2]] + sub[idx[1] * m + idx[3]];
            unsigned s3 = sub[idx[0] * m + idx[3]] + sub[idx[1] * m + idx[2]];
            best = std::max(best, defect_of(s1, s2, s3));
        }
        est.two_delta = static_cast<int>(best);
        est.exact = false;
        est.quadruples = plan.count;
        est.seed = plan.seed;
    }
    return est;
}

DeltaEstimate delta_four_point(const DistanceMatrix& dm, const SamplePlan& plan) {
    std::vector<VertexId> all(dm.n);
    for (std::size_t i = 0; i < dm.n; ++i) all[i] = static_cast<VertexId>(i);
    return delta_four_point(dm, all, plan);
}

namespace {

struct Visit {
    VertexId entry, exit;
    int travel;
};

// Per-coset visits of a reduced projected path; every run is one or two
// vertices since longer same-coset stretches would contract.
std::map<std::uint32_t, Visit> visits_of(const ConedBall& cb,
                                         const std::vector<VertexId>& projected) {
    std::map<std::uint32_t, Visit> visits;
    std::size_t i = 0;
    while (i < projected.size()) {
        std::uint32_t c = cb.coset_of(projected[i]);
        std::size_t j = i;
        while (j + 1 < projected.size() && cb.coset_of(projected[j + 1]) == c) ++j;
        VertexId entry = projected[i], exit = projected[j];
        visits.emplace(c, Visit{entry, exit, entry == exit ? 0 : cb.travel(entry, exit)});
        i = j + 1;
    }
    return visits;
}

}  // namespace

BcpEstimate estimate_rbcp(const ConedBall& cb, const DistanceMatrix& dm, const Rational& T,
                          int d_max, std::size_t path_cap) {
    if (T.num < T.den) throw domain_error("quasi-geodesic constant must be at least 1");
    const CayleyBall& ball = cb.base();

    BcpEstimate est;
    est.T = T;
    est.d_max = d_max;
    est.ball_radius = ball.radius();
    est.interior_margin = (d_max + 1) / 2;

    std::vector<VertexId> interior;
    for (VertexId v = 0; v < ball.size(); ++v)
        if (ball.word_length(v) <= ball.radius() - est.interior_margin) interior.push_back(v);
    if (interior.size() < 2)
        throw domain_error("no valid interior endpoint pairs at this radius; enlarge the ball");

    int r_hat = 0;
    auto raise = [&](int value, BcpWitness w) {
        if (value > r_hat) {
            r_hat = value;
            est.witness = std::move(w);
        }
    };

    for (std::size_t a = 0; a < interior.size(); ++a) {
        for (std::size_t b = a + 1; b < interior.size(); ++b) {
            VertexId u = interior[a], v = interior[b];
            if (dm.at(u, v) > static_cast<unsigned>(d_max)) continue;
            auto paths = enumerate_quasigeodesics(cb, dm, u, v, T, d_max, path_cap);
            if (paths.empty()) continue;
            ++est.endpoint_pairs;
            est.paths_examined += paths.size();

            // Per-coset statistics over the whole path family.
            struct CosetStat {
                std::size_t touched = 0;
                int max_travel = 0;
                std::size_t max_travel_path = 0;
                std::vector<std::pair<VertexId, std::size_t>> entries, exits;  // vertex, path
            };
            std::map<std::uint32_t, CosetStat> stats;
            for (std::size_t pi = 0; pi < paths.size(); ++pi) {
                for (const auto& [c, visit] : visits_of(cb, paths[pi].projected)) {
                    CosetStat& st = stats[c];
                    ++st.touched;
                    if (visit.travel > st.max_travel) {
                        st.max_travel = visit.travel;
                        st.max_travel_path = pi;
                    }
                    st.entries.emplace_back(visit.entry, pi);
                    st.exits.emplace_back(visit.exit, pi);
                }
            }
            for (auto& [c, st] : stats) {
                // Clause 1: a travel must be matched by every other path
                // entering the coset; if one path misses it, r must cover it.
                if (st.touched < paths.size() && st.max_travel > 0) {
                    std::size_t missing = 0;
                    std::vector<bool> seen(paths.size(), false);
                    for (auto& [vtx, pi] : st.entries) seen[pi] = true;
                    while (seen[missing]) ++missing;
                    raise(st.max_travel,
                          BcpWitness{u, v, paths[st.max_travel_path].projected,
                                     paths[missing].projected, c, st.max_travel,
                                     BcpWitness::Clause::travel_unmatched});
                }
                // Clause 2: entry points (and exit points) of any two paths
                // through the coset must be r-close in d_K.
                auto pairwise = [&](std::vector<std::pair<VertexId, std::size_t>>& pts,
                                    BcpWitness::Clause clause) {
                    std::sort(pts.begin(), pts.end());
                    pts.erase(std::unique(pts.begin(), pts.end(),
                                          [](auto& x, auto& y) { return x.first == y.first; }),
                              pts.end());
                    for (std::size_t x = 0; x < pts.size(); ++x)
                        for (std::size_t y = x + 1; y < pts.size(); ++y) {
                            int d = cb.travel(pts[x].first, pts[y].first);
                            raise(d, BcpWitness{u, v, paths[pts[x].second].projected,
                                                paths[pts[y].second].projected, c, d, clause});
                        }
                };
                pairwise(st.entries, BcpWitness::Clause::entry_gap);
                pairwise(st.exits, BcpWitness::Clause::exit_gap);
            }
        }
    }
    est.r_hat = r_hat;
    return est;
}

DerivedParams derive_params(const DeltaEstimate& delta, const ConedBall& cb,
                            const DistanceMatrix& dm, int d_max_cap, std::size_t path_cap) {
    DerivedParams out;
    out.delta = delta;
    int d = 2 * delta.two_delta + 3;  // strictly above 4*delta + 2
    out.bcp = estimate_rbcp(cb, dm, Rational(4 * d), std::min(d, d_max_cap), path_cap);
    int r = out.bcp.r_hat + 1;
    out.triple = ParamTriple{r, d, 4 * r + 1};
    return out;
}

}  // namespace relrips
