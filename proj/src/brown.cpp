#include "relrips/brown.hpp"

#include <algorithm>
#include <map>

namespace relrips {

namespace {

std::vector<FiltrationIndex> beta_walk(const FiltrationIndex& alpha, bool plain, int steps) {
    std::vector<FiltrationIndex> walk;
    if (plain) {
        for (int s = alpha.s + 1; s <= alpha.s + steps; ++s) walk.push_back({0, 0, s});
        return walk;
    }
    // Component-wise successors of alpha (so stages nest), visited in
    // increasing dictionary order; raising s alone comes first.
    for (int r = alpha.r; r <= alpha.r + steps; ++r)
        for (int d = alpha.d; d <= alpha.d + steps; ++d)
            for (int s = alpha.s; s <= alpha.s + steps; ++s) {
                FiltrationIndex idx{r, d, s};
                if (idx == alpha) continue;
                walk.push_back(idx);
            }
    std::sort(walk.begin(), walk.end());
    return walk;
}

}  // namespace

SimplicialComplex build_stage(const Fixture& fx, const FiltrationIndex& idx, int R, bool plain,
                              int k, const SearchBudget& budget) {
    const int k_max = k + 1;
    if (plain) {
        CayleyBall ball = CayleyBall::build(fx.group, R);
        return build_plain_rips(ball, idx.s, k_max, budget.clique_cap);
    }
    CayleyBall ball = CayleyBall::build(fx.group, R);
    ConedBall coned(ball, fx.peripheral);
    DistanceMatrix dm = all_pairs_distances(coned);
    return build_relative_rips(coned, dm, RipsParams{idx.r, idx.d, idx.s, k_max},
                               budget.clique_cap, budget.path_cap);
}

TrivializationCertificate check_essential_triviality(const Fixture& fx, int k,
                                                     FiltrationIndex alpha, int R, bool plain,
                                                     const SearchBudget& budget) {
    TrivializationCertificate cert;
    cert.fixture = fx.group.name;
    cert.plain = plain;
    cert.k = k;
    cert.R = R;
    cert.alpha = alpha;
    cert.caveats.push_back("empirical at radius " + std::to_string(R) +
                           "; finite-ball stages only");

    const int k_max = k + 1;

    // Stage builders for the two filtration flavors.
    std::optional<CayleyBall> plain_ball;
    std::optional<CayleyBall> ball;
    std::optional<ConedBall> coned;
    std::optional<DistanceMatrix> dm;
    std::optional<RipsFamily> family;
    if (plain) {
        plain_ball.emplace(CayleyBall::build(fx.group, R));
    } else {
        ball.emplace(CayleyBall::build(fx.group, R));
        coned.emplace(*ball, fx.peripheral);
        dm.emplace(all_pairs_distances(*coned));
        family.emplace(*coned, *dm, alpha.d + budget.steps_per_coord, budget.path_cap);
    }
    auto stage = [&](const FiltrationIndex& idx) {
        if (plain) return build_plain_rips(*plain_ball, idx.s, k_max, budget.clique_cap);
        RipsParams params{idx.r, idx.d, idx.s, k_max};
        RipsBuildInfo info;
        SimplicialComplex X = family->complex(params, budget.clique_cap, &info);
        if (!info.truncation_reliable) cert.caveats.push_back("geodesic clause truncated");
        return X;
    };

    SimplicialComplex X_alpha = stage(alpha);
    HomologySummary alpha_h = homology_summary(X_alpha, k, budget.entry_cap);
    cert.alpha_betti = alpha_h.betti;
    cert.alpha_torsion = alpha_h.torsion;
    if (alpha_h.via_collapse)
        cert.caveats.push_back("stage homology computed on a collapsed core");

    if (alpha_h.betti == 0 && alpha_h.torsion.empty()) {
        cert.status = TrivializationCertificate::Status::trivialized;
        cert.beta = alpha;  // the stage is already acyclic in this degree
        return cert;
    }

    for (const FiltrationIndex& beta : beta_walk(alpha, plain, budget.steps_per_coord)) {
        SimplicialComplex X_beta = stage(beta);
        InclusionMap inc = inclusion(X_alpha, X_beta);
        ZeroTestCertificate zt = induced_map_zero_test(inc, k, budget.entry_cap);
        ++cert.stages_tested;
        if (zt.zero) {
            cert.status = TrivializationCertificate::Status::trivialized;
            cert.beta = beta;
            cert.evidence = std::move(zt);
            return cert;
        }
    }
    cert.status = TrivializationCertificate::Status::not_found_within_budget;
    return cert;
}

CosetLocalization coset_localize(const SimplicialComplex& X, std::span<const Int> z, int k,
                                 std::size_t entry_cap) {
    if (!X.coset_of) throw domain_error("complex carries no coset table");
    if (z.size() != X.count(k)) throw domain_error("cycle length mismatch");

    IMatrix dk = boundary_matrix(X, k, entry_cap);
    for (const Int& c : matrix_apply(dk, z))
        if (c != 0) throw domain_error("input chain is not a cycle");

    CosetLocalization res;
    res.k = k;

    // Cycle bases of every coset subcomplex, embedded back into X.
    std::vector<std::uint32_t> coset_ids;
    {
        std::vector<std::uint32_t> sorted = *X.coset_of;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        coset_ids = std::move(sorted);
    }
    std::vector<std::uint32_t> col_coset;              // owning coset of each basis column
    std::vector<std::vector<Int>> basis_columns;       // embedded cycles, length count(k)
    for (std::uint32_t c : coset_ids) {
        SimplicialComplex sub = coset_subcomplex(X, c);
        if (sub.count(k) == 0) continue;
        InclusionMap inc = inclusion(sub, X);
        IMatrix sub_dk = boundary_matrix(sub, k, entry_cap);
        for (auto& cyc : kernel_basis(smith_normal_form(sub_dk, entry_cap))) {
            basis_columns.push_back(map_chain(inc, k, cyc));
            col_coset.push_back(c);
        }
    }

    IMatrix dk1 = boundary_matrix(X, k + 1, entry_cap);
    const std::size_t rows = X.count(k);
    const std::size_t n_basis = basis_columns.size();
    const std::size_t n_chain = dk1.cols();
    IMatrix M(rows, n_basis + n_chain);
    for (std::size_t j = 0; j < n_basis; ++j)
        for (std::size_t i = 0; i < rows; ++i) M.at(i, j) = basis_columns[j][i];
    for (std::size_t j = 0; j < n_chain; ++j)
        for (std::size_t i = 0; i < rows; ++i) M.at(i, n_basis + j) = dk1.at(i, j);

    auto solution = solve_integer(smith_normal_form(M, entry_cap), z);
    if (!solution) {
        res.split_found = false;  // truncated complexes need not split
        return res;
    }
    res.split_found = true;

    // Reassemble per-coset parts from the solved coefficients.
    std::map<std::uint32_t, std::vector<Int>> parts;
    for (std::size_t j = 0; j < n_basis; ++j) {
        const Int& coeff = (*solution)[j];
        if (coeff == 0) continue;
        auto& part = parts.try_emplace(col_coset[j], std::vector<Int>(rows)).first->second;
        for (std::size_t i = 0; i < rows; ++i) part[i] += coeff * basis_columns[j][i];
    }
    for (auto& [c, chain] : parts) {
        bool nonzero = std::any_of(chain.begin(), chain.end(), [](const Int& x) { return x != 0; });
        if (nonzero) res.parts.emplace_back(c, std::move(chain));
    }
    res.remainder.assign(solution->begin() + static_cast<std::ptrdiff_t>(n_basis),
                         solution->end());

    // z - sum(parts) must equal the boundary of the remainder, exactly.
    std::vector<Int> check = matrix_apply(dk1, res.remainder);
    for (std::size_t i = 0; i < rows; ++i) {
        Int sum = 0;
        for (const auto& [c, chain] : res.parts) sum += chain[i];
        if (z[i] - sum != check[i]) throw domain_error("localization identity failed");
    }
    return res;
}

PipelineReport run_theorem_pipeline(const Fixture& fx, int n, int R, int d_max_cap,
                                    const SearchBudget& budget) {
    PipelineReport report;
    report.fixture = fx.group.name;
    report.n = n;
    report.R = R;
    report.caveats.push_back("finite-ball shadow of the criterion; certificates are empirical");

    CayleyBall ball = CayleyBall::build(fx.group, R);
    ConedBall coned(ball, fx.peripheral);
    DistanceMatrix dm = all_pairs_distances(coned);
    report.delta = delta_four_point(dm);
    DerivedParams derived = derive_params(report.delta, coned, dm, d_max_cap, budget.path_cap);
    report.bcp = derived.bcp;
    report.derived = derived.triple;

    GroupPresentation k_group = restrict_to_peripheral(fx.group, fx.peripheral, fx.group.name + "_peripheral");
    PeripheralSpec k_all;
    k_all.is_sub.assign(k_group.gens.size(), true);
    for (Sym s = 0; s < k_group.gens.size(); ++s) k_all.sub_gens.push_back(s);
    Fixture k_fixture{k_group, k_all, {}, {}};

    for (int k = 0; k < n; ++k) {
        report.peripheral.push_back(
            check_essential_triviality(k_fixture, k, FiltrationIndex{0, 0, 1}, R, true, budget));
        report.relative.push_back(check_essential_triviality(
            fx, k,
            FiltrationIndex{derived.triple.r, derived.triple.d, derived.triple.s}, R, false,
            budget));
    }
    return report;
}

}  // namespace relrips
