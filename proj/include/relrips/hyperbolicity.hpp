#pragma once

#include <optional>
#include <vector>

#include "relrips/coned.hpp"
#include "relrips/rational.hpp"

namespace relrips {

struct SamplePlan {
    bool exhaustive = true;
    std::size_t count = 0;      // quadruples to draw when sampling
    std::uint64_t seed = 0;
};

struct DeltaEstimate {
    int two_delta = 0;  // delta = two_delta / 2, always a half-integer
    bool exact = true;
    std::size_t vertex_count = 0;
    std::uint64_t quadruples = 0;
    int boundary_margin = 0;
    std::optional<std::uint64_t> seed;  // set when sampled

    double delta() const { return two_delta / 2.0; }
};

/// Four-point hyperbolicity constant: the largest gap between the two
/// largest of the three pairwise distance sums, over vertex quadruples.
/// Exhaustive over the given vertices unless a sampling plan says otherwise.
DeltaEstimate delta_four_point(const DistanceMatrix& dm, const std::vector<VertexId>& vertices,
                               const SamplePlan& plan = {});
DeltaEstimate delta_four_point(const DistanceMatrix& dm, const SamplePlan& plan = {});

struct BcpWitness {
    VertexId from, to;
    std::vector<VertexId> path_a, path_b;  // projected sequences
    std::uint32_t coset;
    int value;
    enum class Clause { travel_unmatched, entry_gap, exit_gap } clause;
};

struct BcpEstimate {
    Rational T;
    int r_hat = 0;
    int d_max = 0;
    int interior_margin = 0;
    int ball_radius = 0;
    std::size_t endpoint_pairs = 0;
    std::size_t paths_examined = 0;
    std::optional<BcpWitness> witness;
};

/// Least r making both coset-penetration clauses hold over every pair of
/// enumerated T-relative quasi-geodesics between interior endpoint pairs.
/// A finite-ball estimate: it can only grow as the scope grows.
BcpEstimate estimate_rbcp(const ConedBall& cb, const DistanceMatrix& dm, const Rational& T,
                          int d_max, std::size_t path_cap = kDefaultPathCap);

struct ParamTriple {
    int r = 0, d = 0, s = 0;
};

struct DerivedParams {
    ParamTriple triple;
    DeltaEstimate delta;
    BcpEstimate bcp;
};

/// d just above 4*delta + 2, r just above the empirical r_hat at T = 4d,
/// s just above 4r.
DerivedParams derive_params(const DeltaEstimate& delta, const ConedBall& cb,
                            const DistanceMatrix& dm, int d_max_cap,
                            std::size_t path_cap = kDefaultPathCap);

}  // namespace relrips
