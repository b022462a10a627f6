#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "relrips/presentation.hpp"

namespace relrips {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

inline constexpr std::size_t kDefaultVertexCap = 2'000'000;

struct BallDistance {
    int dist = -1;            // -1: unreachable within the ball
    bool boundary_warning = false;  // an endpoint is on the boundary sphere
};

/// Finite radius-R portion of the Cayley graph. Vertices are normal forms,
/// numbered by length layer and shortlex within each layer, so vertex 0 is
/// the identity and numbering is reproducible run to run.
class CayleyBall {
public:
    struct Arc {
        Sym gen;
        VertexId to;
    };

    static CayleyBall build(const GroupPresentation& p, int radius,
                            std::size_t vertex_cap = kDefaultVertexCap);

    int radius() const { return radius_; }
    std::size_t size() const { return words_.size(); }
    VertexId center() const { return 0; }
    const Word& word(VertexId v) const { return words_[v]; }
    int word_length(VertexId v) const { return static_cast<int>(words_[v].size()); }
    std::span<const Arc> neighbors(VertexId v) const {
        return {arcs_.data() + arc_begin_[v], arc_begin_[v + 1] - arc_begin_[v]};
    }
    std::optional<VertexId> find(const Word& normal_form) const;
    const GroupPresentation& presentation() const { return *pres_; }

    BallDistance graph_distance(VertexId u, VertexId v) const;
    std::vector<std::uint16_t> distances_from(VertexId source) const;

    // Edge list text format: one line "u v g" per undirected edge, u < v.
    void export_edges(std::ostream& out) const;

private:
    const GroupPresentation* pres_ = nullptr;
    int radius_ = 0;
    std::vector<Word> words_;
    std::vector<std::size_t> arc_begin_;
    std::vector<Arc> arcs_;
};

/// Partition of ball vertices into left K-cosets. Coset ids are dense and
/// ordered by their canonical representative (the shortlex-least member).
struct CosetTable {
    std::vector<std::uint32_t> coset_of;        // per vertex
    std::vector<VertexId> representative;       // per coset, the least vertex
    std::vector<std::vector<VertexId>> members; // per coset, sorted

    std::size_t coset_count() const { return representative.size(); }
};

CosetTable coset_table(const CayleyBall& ball, const PeripheralSpec& k);

}  // namespace relrips
