#pragma once

#include <span>
#include <vector>

#include "relrips/cayley.hpp"
#include "relrips/rational.hpp"

namespace relrips {

inline constexpr std::size_t kDefaultPathCap = 100'000;
inline constexpr std::size_t kDistanceMatrixVertexCap = 16'384;

/// Dense all-pairs distance table of a finite graph; distances here stay
/// tiny, so one byte per entry.
struct DistanceMatrix {
    std::size_t n = 0;
    std::vector<std::uint8_t> d;

    std::uint8_t at(std::size_t i, std::size_t j) const { return d[i * n + j]; }
    const std::uint8_t* row(std::size_t i) const { return d.data() + i * n; }
};

/// The coned-off graph restricted to a Cayley ball: the ball's edges plus an
/// edge between every two distinct vertices of the same peripheral coset.
/// Coset edges are kept implicit through the coset member lists.
class ConedBall {
public:
    ConedBall(const CayleyBall& ball, const PeripheralSpec& k);

    const CayleyBall& base() const { return *ball_; }
    const PeripheralSpec& peripheral() const { return *k_; }
    const CosetTable& cosets() const { return cosets_; }
    std::uint32_t coset_of(VertexId v) const { return cosets_.coset_of[v]; }
    bool same_coset(VertexId u, VertexId v) const {
        return cosets_.coset_of[u] == cosets_.coset_of[v];
    }

    // Sorted unique neighbor list in the coned graph.
    std::span<const VertexId> neighbors(VertexId v) const {
        return {nbrs_.data() + nbr_begin_[v], nbr_begin_[v + 1] - nbr_begin_[v]};
    }

    bool gamma_adjacent(VertexId u, VertexId v) const;

    /// d_K between two same-coset vertices.
    int travel(VertexId u, VertexId v) const;

    std::size_t coset_pair_count() const { return coset_pair_count_; }
    std::size_t added_edge_count() const { return added_edge_count_; }

    BallDistance relative_distance(VertexId u, VertexId v) const;
    std::vector<std::uint16_t> distances_from(VertexId source) const;

private:
    const CayleyBall* ball_;
    const PeripheralSpec* k_;
    CosetTable cosets_;
    std::vector<std::uint32_t> rank_in_coset_;
    std::vector<std::size_t> nbr_begin_;
    std::vector<VertexId> nbrs_;
    // Per coset, a packed strict lower triangle of pairwise d_K values.
    std::vector<std::vector<std::uint16_t>> travel_;
    std::size_t coset_pair_count_ = 0;
    std::size_t added_edge_count_ = 0;
};

DistanceMatrix all_pairs_distances(const CayleyBall& ball);
DistanceMatrix all_pairs_distances(const ConedBall& cb);

/// One maximal same-coset stretch of at least two path vertices. A visit
/// whose entry equals its exit is the paper's "reduced" case, travel 0.
struct CosetVisit {
    std::uint32_t coset;
    VertexId entry;
    VertexId exit;
    int travel;
};

/// A Cayley-ball edge path together with its image in the coned graph after
/// run contraction and loop removal, and the per-coset travel ledger of the
/// raw path.
struct RelativePath {
    std::vector<VertexId> steps;
    std::vector<VertexId> projected;
    std::vector<CosetVisit> ledger;

    int relative_length() const { return static_cast<int>(projected.size()) - 1; }
};

RelativePath project_path(const ConedBall& cb, std::vector<VertexId> steps);

struct GeodesicCheck {
    bool is_geodesic = false;
    bool reliable = true;  // false when ball truncation may distort distances
    int relative_length = 0;
    int relative_dist = 0;
};

GeodesicCheck is_relative_geodesic(const ConedBall& cb, const RelativePath& path);

struct QuasigeodesicCheck {
    bool is_quasigeodesic = false;
    bool reliable = true;
};

QuasigeodesicCheck is_T_relative_quasigeodesic(const ConedBall& cb, const RelativePath& path,
                                               const Rational& T);

/// All relative geodesics from u to v of relative length <= d_max, as reduced
/// projected paths lifted back to canonical Cayley paths (one representative
/// per choice of coset entry/exit vertices). Lexicographic order.
std::vector<RelativePath> enumerate_relative_geodesics(const ConedBall& cb, VertexId u, VertexId v,
                                                       int d_max,
                                                       std::size_t path_cap = kDefaultPathCap);

/// All T-relative quasi-geodesics from u to v of relative length <= d_max
/// whose reduced projections are loop-free and never re-enter a coset once
/// left. Needs the all-pairs table for the two-sided inequality.
std::vector<RelativePath> enumerate_quasigeodesics(const ConedBall& cb, const DistanceMatrix& dm,
                                                   VertexId u, VertexId v, const Rational& T,
                                                   int d_max,
                                                   std::size_t path_cap = kDefaultPathCap);

}  // namespace relrips
