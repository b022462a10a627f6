#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relrips/cayley.hpp"

namespace relrips {

inline constexpr std::size_t kDefaultCliqueCap = 5'000'000;

/// Finite flag-completed simplicial complex with a dimension cap. Simplices
/// are stored per dimension as flat arrays of sorted vertex tuples, tuples in
/// lexicographic order, so indices are reproducible.
class SimplicialComplex {
public:
    struct EdgeProvenance {
        enum class Kind { same_coset, relative_geodesic } kind = Kind::same_coset;
        int d_k = 0;                    // same-coset distance, for the first kind
        std::vector<VertexId> witness;  // projected geodesic, for the second
    };

    std::vector<std::string> labels;  // vertex labels (group element words)
    std::optional<std::vector<std::uint32_t>> coset_of;
    int k_max = 1;
    bool flag_truncated = false;  // built as the k_max-truncated flag complex of its 1-skeleton
    std::vector<std::vector<VertexId>> sims;  // sims[k]: flat (k+1)-tuples
    std::vector<EdgeProvenance> edge_provenance;  // parallel to sims[1]; may be empty

    std::size_t vertex_count() const { return labels.size(); }
    std::size_t count(int k) const {
        if (k < 0 || k >= static_cast<int>(sims.size())) return 0;
        return sims[k].size() / (k + 1);
    }
    std::span<const VertexId> simplex(int k, std::size_t idx) const {
        return {sims[k].data() + idx * (k + 1), static_cast<std::size_t>(k + 1)};
    }
    int dim() const;
    std::size_t total_simplices() const;

    // Index of a sorted tuple within dimension k, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t find_simplex(int k, std::span<const VertexId> tuple) const;

    /// Flag completion of an edge set up to k_max.
    static SimplicialComplex flag_from_edges(std::vector<std::string> labels,
                                             std::vector<std::pair<VertexId, VertexId>> edges,
                                             int k_max,
                                             std::size_t clique_cap = kDefaultCliqueCap);

    /// Complex spanned by explicit simplices (faces are filled in).
    static SimplicialComplex from_simplices(std::vector<std::string> labels,
                                            const std::vector<std::vector<VertexId>>& simplices,
                                            int k_max);

    /// Full subcomplex on the given vertices (sorted, reindexed).
    SimplicialComplex induced(const std::vector<VertexId>& keep) const;

    // One simplex per line, dimension-grouped, sorted vertex indices.
    void export_text(std::ostream& out) const;
};

/// Full subcomplex spanned by one coset's vertices.
SimplicialComplex coset_subcomplex(const SimplicialComplex& X, std::uint32_t coset);

/// Label-preserving simplicial inclusion. Fails loudly when some source
/// simplex is missing from the target.
struct InclusionMap {
    const SimplicialComplex* source = nullptr;
    const SimplicialComplex* target = nullptr;
    std::vector<VertexId> vertex_map;  // source vertex -> target vertex
};

InclusionMap inclusion(const SimplicialComplex& source, const SimplicialComplex& target);

/// Exact label isomorphism of the two complexes (sorted simplex lists agree
/// after translating vertices by label).
bool label_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace relrips
