#pragma once

#include <tuple>

#include "relrips/coned.hpp"
#include "relrips/simplicial.hpp"

namespace relrips {

/// Filtration parameters. Ordered as dictionary order on (r, d, s).
struct RipsParams {
    int r = 1, d = 1, s = 1;
    int k_max = 1;

    auto key() const { return std::tuple(r, d, s); }
};

struct RipsBuildInfo {
    int trustworthy_depth = 0;  // word-length depth immune to edge truncation
    bool truncation_reliable = true;
    std::size_t same_coset_edges = 0;
    std::size_t geodesic_edges = 0;
};

/// Shared evaluation state for relative Rips complexes over one coned ball:
/// every cross-coset pair's relative geodesics are enumerated once and kept
/// as Pareto-minimal travel profiles (first coset, last coset, worst middle
/// coset), so complexes at many parameter triples are cheap afterwards.
class RipsFamily {
public:
    RipsFamily(const ConedBall& cb, const DistanceMatrix& dm, int d_cap,
               std::size_t path_cap = kDefaultPathCap);

    const ConedBall& coned() const { return *cb_; }
    int d_cap() const { return d_cap_; }

    SimplicialComplex complex(const RipsParams& params,
                              std::size_t clique_cap = kDefaultCliqueCap,
                              RipsBuildInfo* info = nullptr) const;

private:
    struct GeoProfile {
        std::uint8_t first, last, mid;
        std::uint32_t witness_off, witness_len;
    };
    struct PairEntry {
        VertexId v;
        std::uint8_t dist;
        std::uint32_t prof_off, prof_len;
    };

    const ConedBall* cb_;
    const DistanceMatrix* dm_;
    int d_cap_;
    std::vector<std::vector<PairEntry>> pairs_;  // per u: cross-coset partners v > u
    std::vector<GeoProfile> profiles_;
    std::vector<VertexId> witness_pool_;
};

/// One-shot construction of Rips_{r,d,s}(G, K) on a ball: same-coset pairs
/// with d_K <= s, cross-coset pairs with a relative geodesic of length <= d
/// traveling under 3r in its first and last coset and under 2r elsewhere,
/// flag-completed to params.k_max.
SimplicialComplex build_relative_rips(const ConedBall& cb, const DistanceMatrix& dm,
                                      const RipsParams& params,
                                      std::size_t clique_cap = kDefaultCliqueCap,
                                      std::size_t path_cap = kDefaultPathCap,
                                      RipsBuildInfo* info = nullptr);

/// The ordinary Rips complex of a group on its own Cayley ball: edges at
/// word-metric distance <= s, flag-completed.
SimplicialComplex build_plain_rips(const CayleyBall& ball, int s, int k_max,
                                   std::size_t clique_cap = kDefaultCliqueCap);

}  // namespace relrips
