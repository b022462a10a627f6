#pragma once

#include <optional>
#include <tuple>
#include <string>

#include "relrips/fixture.hpp"
#include "relrips/homology.hpp"
#include "relrips/hyperbolicity.hpp"
#include "relrips/rips.hpp"

namespace relrips {

/// Index into the (r, d, s) filtration, compared in dictionary order.
struct FiltrationIndex {
    int r = 0, d = 0, s = 0;

    auto key() const { return std::tuple(r, d, s); }
    bool operator==(const FiltrationIndex&) const = default;
    bool operator<(const FiltrationIndex& o) const { return key() < o.key(); }
};

struct SearchBudget {
    int steps_per_coord = 4;  // how far past alpha each coordinate may walk
    std::size_t clique_cap = kDefaultCliqueCap;
    std::size_t entry_cap = kDefaultDenseEntryCap;
    std::size_t path_cap = kDefaultPathCap;
};

/// Outcome of the search for a stage beta killing H-tilde_k of stage alpha.
/// Not finding one within the budget is a report, never a refutation.
struct TrivializationCertificate {
    std::string fixture;
    bool plain = false;  // plain Rips filtration of K (indexed by s alone)
    int k = 0;
    int R = 0;
    FiltrationIndex alpha;
    std::optional<FiltrationIndex> beta;
    enum class Status { trivialized, not_found_within_budget } status =
        Status::not_found_within_budget;

    std::size_t alpha_betti = 0;
    std::vector<Int> alpha_torsion;
    std::size_t stages_tested = 0;

    // Bounding-chain evidence when a nontrivial stage was trivialized.
    ZeroTestCertificate evidence;
    std::vector<std::string> caveats;
};

TrivializationCertificate check_essential_triviality(const Fixture& fx, int k,
                                                     FiltrationIndex alpha, int R, bool plain,
                                                     const SearchBudget& budget = {});

/// One filtration stage as a standalone complex (k_max = k + 1).
SimplicialComplex build_stage(const Fixture& fx, const FiltrationIndex& idx, int R, bool plain,
                              int k, const SearchBudget& budget = {});

/// Mayer-Vietoris style decomposition of a cycle into per-coset cycles plus
/// an exact boundary, found by one integer solve over the (k+1)-chains.
struct CosetLocalization {
    bool split_found = false;
    int k = 0;
    std::vector<std::pair<std::uint32_t, std::vector<Int>>> parts;  // coset id, cycle in C_k
    std::vector<Int> remainder;                                     // chain in C_{k+1}
};

CosetLocalization coset_localize(const SimplicialComplex& X, std::span<const Int> z, int k,
                                 std::size_t entry_cap = kDefaultDenseEntryCap);

struct PipelineReport {
    std::string fixture;
    int n = 0;
    int R = 0;
    DeltaEstimate delta;
    BcpEstimate bcp;
    ParamTriple derived;
    std::vector<TrivializationCertificate> peripheral;  // one per degree k < n
    std::vector<TrivializationCertificate> relative;
    std::vector<std::string> caveats;
};

/// Juxtaposes the peripheral filtration's behavior with the relative one for
/// every degree below n, after deriving the parameter triple empirically.
PipelineReport run_theorem_pipeline(const Fixture& fx, int n, int R, int d_max_cap = 3,
                                    const SearchBudget& budget = {});

}  // namespace relrips
