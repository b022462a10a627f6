#pragma once

#include <optional>

#include "relrips/simplicial.hpp"
#include "relrips/snf.hpp"

namespace relrips {

/// Reduced chain complex of a simplicial complex through dimension k_top.
/// boundary[0] is the augmentation row (all ones), so H-tilde_0 counts
/// components minus one; boundary[k] maps C_k to C_{k-1} with the alternating
/// sign convention on sorted vertex tuples.
struct ChainComplex {
    const SimplicialComplex* X = nullptr;
    int k_top = 0;
    std::vector<IMatrix> boundary;
};

ChainComplex boundary_matrices(const SimplicialComplex& X, int k_top,
                               std::size_t entry_cap = kDefaultDenseEntryCap);

/// Single boundary matrix of dimension k (k = 0 gives the augmentation row).
IMatrix boundary_matrix(const SimplicialComplex& X, int k,
                        std::size_t entry_cap = kDefaultDenseEntryCap);

struct HomologyGroup {
    int k = 0;
    std::size_t betti = 0;
    std::vector<Int> torsion;  // invariant factors > 1, in divisibility order
    std::vector<std::vector<Int>> cycle_basis;  // canonical integral kernel basis of boundary[k]
};

HomologyGroup reduced_homology(const ChainComplex& cc, int k);

/// Betti number and torsion of H-tilde_k without cycle representatives;
/// collapses free faces first so that much larger complexes stay tractable.
struct HomologySummary {
    int k = 0;
    std::size_t betti = 0;
    std::vector<Int> torsion;
    bool via_collapse = false;
    std::size_t core_simplices = 0;
};

HomologySummary homology_summary(const SimplicialComplex& X, int k,
                                 std::size_t entry_cap = kDefaultDenseEntryCap);

/// Elementary free-face collapse to a smaller homotopy-equivalent core.
struct CollapseResult {
    SimplicialComplex core;
    std::size_t pairs_removed = 0;
};

CollapseResult collapse_complex(const SimplicialComplex& X);

/// Strong collapse for truncated flag complexes: repeatedly deletes a vertex
/// whose closed neighborhood sits inside another vertex's, then rebuilds the
/// truncated flag complex of the core graph. Homotopy type (hence homology
/// below the cap) is preserved.
struct StrongCollapseResult {
    SimplicialComplex core;
    std::size_t vertices_removed = 0;
};

StrongCollapseResult strong_collapse_flag(const SimplicialComplex& X,
                                          std::size_t clique_cap = kDefaultCliqueCap);

/// Does the inclusion kill H-tilde_k? Each source cycle-basis element is
/// pushed into the target and tested for being a boundary; the bounding
/// chains are the certificate evidence, re-verifiable by one boundary
/// multiplication.
struct ZeroTestCertificate {
    bool zero = true;
    int k = 0;
    std::vector<std::vector<Int>> source_cycles;    // source C_k coordinates
    std::vector<std::vector<Int>> mapped_cycles;    // target C_k coordinates
    std::vector<std::vector<Int>> bounding_chains;  // target C_{k+1} coordinates
    std::optional<std::size_t> witness;             // first cycle whose class survives
};

ZeroTestCertificate induced_map_zero_test(const InclusionMap& inc, int k,
                                          std::size_t entry_cap = kDefaultDenseEntryCap);

/// Push a source k-chain through a label inclusion, with orientation signs.
std::vector<Int> map_chain(const InclusionMap& inc, int k, std::span<const Int> chain);

}  // namespace relrips
