// Acceptance suite: one pass/fail line per criterion, each with its wall
// clock against the stated budget. Exits nonzero if anything fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "relrips/brown.hpp"
#include "support/fixtures.hpp"
#include "support/rational_rank.hpp"
#include "support/rips_oracle.hpp"
#include "support/word_oracles.hpp"

using namespace relrips;
using namespace relrips::testing;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& what, double budget_seconds,
               const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = error.empty() && elapsed <= budget_seconds;
    if (!ok) ++g_failures;
    std::printf("%s criterion %2d: %s (%.2fs / %.0fs budget)%s%s\n", ok ? "PASS" : "FAIL", num,
                what.c_str(), elapsed, budget_seconds, error.empty() ? "" : " -- ",
                error.c_str());
    std::fflush(stdout);
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

// ---------------------------------------------------------------------------

void criterion_1_rewriting() {
    struct Case {
        const Fixture* fx;
        std::string alphabet;
        std::function<std::string(const std::string&)> canon;
    };
    std::vector<Case> cases = {
        {&f2(), "aAbB", free_reduce},
        {&z2_rel_a(), "aAbB", z2_canonical},
        {&c6(), "aA", c6_canonical},
        {&f2_rel_a(), "aAbB", free_reduce},
    };
    for (const Case& c : cases) {
        // enumeration of the group elements reachable by words of length <= 6,
        // keyed by the independent semantics; the normal form must be the
        // shortlex-least member of each class and distinct across classes
        std::map<std::string, std::string> least;
        least[c.canon("")] = "";
        auto words = all_words(c.alphabet, 6);
        for (const std::string& w : words) {
            auto key = c.canon(w);
            if (!least.count(key)) least[key] = w;  // first hit is shortlex-least
        }
        std::set<std::string> nf_classes;
        for (const std::string& w : words) {
            Word parsed = c.fx->group.gens.parse_word(w);
            std::string nf = c.fx->group.render(c.fx->group.normal_form(parsed));
            require(nf == least[c.canon(w)],
                    c.fx->group.name + ": normal form of '" + w + "' is '" + nf + "', expected '" +
                        least[c.canon(w)] + "'");
        }
        for (auto& [key, word] : least) nf_classes.insert(word);
        require(nf_classes.size() == least.size(), "normal forms collide across classes");
    }
}

void criterion_2_ball_counts() {
    std::vector<std::size_t> expect{1, 5, 17, 53};
    for (int R = 0; R <= 3; ++R) {
        auto ball = CayleyBall::build(f2().group, R);
        require(ball.size() == expect[static_cast<std::size_t>(R)],
                "F2 ball size mismatch at R=" + std::to_string(R));
        // counting oracle: freely reduced words
        std::size_t count = 1;
        for (const std::string& w : all_words("aAbB", R))
            if (free_reduce(w) == w) ++count;
        require(ball.size() == count, "enumeration oracle disagrees at R=" + std::to_string(R));
        if (R >= 1)
            require(ball.size() == 2 * static_cast<std::size_t>(std::pow(3, R)) - 1,
                    "closed formula disagrees");
    }
}

void criterion_3_delta() {
    for (int R = 0; R <= 5; ++R) {
        auto ball = CayleyBall::build(f2().group, R);
        auto dm = all_pairs_distances(ball);
        DeltaEstimate est = delta_four_point(dm);
        require(est.exact, "delta must be exact");
        require(est.two_delta == 0, "F2 ball R=" + std::to_string(R) + " is a tree, delta != 0");
    }
    auto ball = CayleyBall::build(c6().group, 3);
    auto dm = all_pairs_distances(ball);
    DeltaEstimate est = delta_four_point(dm);
    require(est.two_delta == 2, "delta(C6) != 1");
    require(est.quadruples == 15, "C6 quadruple count");
}

void criterion_4_edge_oracle() {
    const Fixture& fx = f2_rel_a();
    auto ball = CayleyBall::build(fx.group, 6);
    ConedBall cb(ball, fx.peripheral);
    auto dm = all_pairs_distances(cb);
    RipsFamily family(cb, dm, 4);
    RipsOracle oracle(ball, fx.group, fx.peripheral, 4);
    for (int r = 1; r <= 3; ++r)
        for (int d = 1; d <= 4; ++d)
            for (int s = 1; s <= 6; ++s) {
                auto X = family.complex({r, d, s, 1});
                std::vector<std::pair<VertexId, VertexId>> mine;
                for (std::size_t i = 0; i < X.count(1); ++i) {
                    auto e = X.simplex(1, i);
                    mine.emplace_back(e[0], e[1]);
                }
                auto theirs = oracle.edges(r, d, s);
                require(mine == theirs, "edge sets differ at (r,d,s)=(" + std::to_string(r) +
                                            "," + std::to_string(d) + "," + std::to_string(s) +
                                            "): " + std::to_string(mine.size()) + " vs " +
                                            std::to_string(theirs.size()));
            }
}

void criterion_5_homology_goldens() {
    auto labels = [](std::size_t n) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
        return out;
    };
    {
        auto X = SimplicialComplex::from_simplices(labels(3), {{0, 1}, {1, 2}, {0, 2}}, 2);
        auto cc = boundary_matrices(X, 2);
        auto h = reduced_homology(cc, 1);
        require(h.betti == 1 && h.torsion.empty(), "hollow triangle H1 != Z");
    }
    {
        auto X = SimplicialComplex::from_simplices(
            labels(4), {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 3);
        auto cc = boundary_matrices(X, 3);
        require(reduced_homology(cc, 2).betti == 1, "tetrahedron boundary H2 != Z");
        require(reduced_homology(cc, 1).betti == 0, "tetrahedron boundary H1 != 0");
    }
    {
        auto X = SimplicialComplex::from_simplices(labels(6),
                                                   {{0, 1, 4},
                                                    {0, 1, 5},
                                                    {0, 2, 3},
                                                    {0, 2, 5},
                                                    {0, 3, 4},
                                                    {1, 2, 3},
                                                    {1, 2, 4},
                                                    {1, 3, 5},
                                                    {2, 4, 5},
                                                    {3, 4, 5}},
                                                   3);
        auto cc = boundary_matrices(X, 3);
        auto h1 = reduced_homology(cc, 1);
        require(h1.betti == 0 && h1.torsion.size() == 1 && h1.torsion[0] == 2,
                "projective plane H1 != Z/2");
        auto h2 = reduced_homology(cc, 2);
        require(h2.betti == 0 && h2.torsion.empty(), "projective plane H2 != 0");
    }
    {
        auto ball = CayleyBall::build(c6().group, 3);
        auto X = build_plain_rips(ball, 2, 3);
        auto cc = boundary_matrices(X, 3);
        require(reduced_homology(cc, 2).betti == 1, "octahedron H2 != Z");
        auto h1 = reduced_homology(cc, 1);
        require(h1.betti == 0 && h1.torsion.empty(), "octahedron H1 != 0");
    }
}

void criterion_6_snf_suite() {
    std::mt19937 rng(987654321);
    std::uniform_int_distribution<int> dim(1, 8), entry(-9, 9);
    for (int trial = 0; trial < 500; ++trial) {
        IMatrix A(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
        for (std::size_t i = 0; i < A.rows(); ++i)
            for (std::size_t j = 0; j < A.cols(); ++j) A.at(i, j) = entry(rng);
        SNFResult snf = smith_normal_form(A);
        require(verify_snf(A, snf), "U*A*V != D at trial " + std::to_string(trial));
        require(snf.rank() == rational_rank(A), "rank mismatch at trial " + std::to_string(trial));
    }
}

void criterion_7_brown_certificate() {
    TrivializationCertificate cert =
        check_essential_triviality(c6(), 1, FiltrationIndex{0, 0, 1}, 3, true);
    require(cert.status == TrivializationCertificate::Status::trivialized, "not trivialized");
    require(cert.beta.has_value() && cert.beta->s == 2, "beta != s=2");
    require(cert.alpha_betti == 1, "alpha stage should carry the hexagon class");
    require(!cert.evidence.bounding_chains.empty(), "missing bounding chains");
    // re-verify the evidence with one boundary multiplication
    auto ball = CayleyBall::build(c6().group, 3);
    auto X2 = build_plain_rips(ball, 2, 2);
    IMatrix d2 = boundary_matrix(X2, 2);
    for (std::size_t i = 0; i < cert.evidence.bounding_chains.size(); ++i)
        require(matrix_apply(d2, cert.evidence.bounding_chains[i]) ==
                    cert.evidence.mapped_cycles[i],
                "bounding chain fails the boundary identity");
}

void criterion_8_parameter_regime() {
    const Fixture& fx = f2_rel_a();
    auto ball = CayleyBall::build(fx.group, 6);
    ConedBall cb(ball, fx.peripheral);
    auto dm = all_pairs_distances(cb);
    DeltaEstimate delta = delta_four_point(dm);
    require(delta.exact, "delta must be exhaustive");
    DerivedParams dp = derive_params(delta, cb, dm, 3);
    require(2 * dp.triple.d > 4 * delta.two_delta + 4, "d > 4*delta + 2 fails");
    require(dp.triple.r > dp.bcp.r_hat, "r > r_hat fails");
    require(dp.triple.s > 4 * dp.triple.r, "s > 4r fails");
    require(dp.bcp.T == Rational(4 * dp.triple.d), "bcp evaluated at T != 4d");
}

void criterion_9_coset_copy() {
    for (const Fixture* fxp : {&f2_rel_a(), &z2_rel_a()}) {
        const Fixture& fx = *fxp;
        auto ball = CayleyBall::build(fx.group, 5);
        ConedBall cb(ball, fx.peripheral);
        auto dm = all_pairs_distances(cb);
        RipsFamily family(cb, dm, 2);
        GroupPresentation k_group = restrict_to_peripheral(fx.group, fx.peripheral, "K");
        auto k_ball = CayleyBall::build(k_group, 5);
        for (int s = 1; s <= 4; ++s) {
            auto X = family.complex({1, 2, s, 2});
            auto sub = coset_subcomplex(X, cb.coset_of(0));
            auto plain = build_plain_rips(k_ball, s, 2);
            require(label_isomorphic(sub, plain),
                    fx.group.name + ": coset copy fails at s=" + std::to_string(s));
        }
    }
}

void criterion_10_localization() {
    auto X = SimplicialComplex::from_simplices(
        {"g0", "g1", "g2", "g3", "g4", "g5"},
        {{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5}, {0, 3, 5}}, 2);
    X.coset_of = std::vector<std::uint32_t>{0, 0, 0, 1, 1, 1};
    auto edge_index = [&](VertexId u, VertexId v) {
        return X.find_simplex(1, std::vector<VertexId>{std::min(u, v), std::max(u, v)});
    };
    std::vector<Int> z(X.count(1), 0);
    // zigzag hexagon 0-3-1-4-2-5-0 with orientation signs
    std::vector<std::pair<VertexId, VertexId>> loop{{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}};
    for (auto [u, v] : loop) z[edge_index(u, v)] += (u < v) ? 1 : -1;

    CosetLocalization loc = coset_localize(X, z, 1);
    require(loc.split_found, "two-coset fixture must split");
    require(!loc.parts.empty(), "expected nonempty per-coset parts");
    IMatrix d1 = boundary_matrix(X, 1);
    IMatrix d2 = boundary_matrix(X, 2);
    for (const auto& [coset, part] : loc.parts) {
        for (const Int& c : matrix_apply(d1, part)) require(c == 0, "part is not a cycle");
        for (std::size_t e = 0; e < X.count(1); ++e) {
            if (part[e] == 0) continue;
            auto edge = X.simplex(1, e);
            require((*X.coset_of)[edge[0]] == coset && (*X.coset_of)[edge[1]] == coset,
                    "part leaves its coset");
        }
    }
    std::vector<Int> boundary = matrix_apply(d2, loc.remainder);
    for (std::size_t e = 0; e < X.count(1); ++e) {
        Int sum = 0;
        for (const auto& [coset, part] : loc.parts) sum += part[e];
        require(z[e] - sum == boundary[e], "integer identity fails");
    }
}

void criterion_11_negative_control() {
    const Fixture& fx = z2_rel_a();
    std::ostringstream csv;
    csv << "R,T,d_max,r_hat,endpoint_pairs,paths\n";
    int prev = -1;
    for (int R = 3; R <= 5; ++R) {
        auto ball = CayleyBall::build(fx.group, R);
        ConedBall cb(ball, fx.peripheral);
        auto dm = all_pairs_distances(cb);
        BcpEstimate est = estimate_rbcp(cb, dm, Rational(4), 3);
        require(est.r_hat > prev, "r_hat must strictly increase along R=3,4,5");
        prev = est.r_hat;
        csv << R << ',' << est.T.str() << ',' << est.d_max << ',' << est.r_hat << ','
            << est.endpoint_pairs << ',' << est.paths_examined << '\n';
    }
    std::ifstream golden(std::string(RELRIPS_FIXTURE_DIR) + "/../tests/golden/z2_bcp_trend.csv");
    require(golden.good(), "golden trend file missing");
    std::stringstream want;
    want << golden.rdbuf();
    require(csv.str() == want.str(), "trend differs from the golden file");
}

void criterion_12_determinism(const std::string& cli) {
    require(!cli.empty(), "pass the relrips binary path as argv[1]");
    std::string base = "/tmp/relrips_accept";
    std::string fixture = std::string(RELRIPS_FIXTURE_DIR) + "/f2_rel_a.grp";
    for (const char* run : {"run1", "run2"}) {
        std::string cmd = cli + " pipeline --fixture " + fixture +
                          " --R 3 --n 2 --out " + base + "/" + run + " > /dev/null 2>&1";
        require(std::system(cmd.c_str()) == 0, "pipeline run failed");
    }
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string a = slurp(base + "/run1/pipeline.json");
    std::string b = slurp(base + "/run2/pipeline.json");
    require(!a.empty(), "empty pipeline report");
    require(a == b, "pipeline reports are not byte-identical");
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    criterion(1, "rewriting matches exhaustive enumeration up to length 6", 10,
              criterion_1_rewriting);
    criterion(2, "F2 ball counts 1, 5, 17, 53", 1, criterion_2_ball_counts);
    criterion(3, "four-point delta: 0 on F2 balls, 1 on C6", 5, criterion_3_delta);
    criterion(4, "relative Rips edges match the brute-force oracle (72 triples)", 120,
              criterion_4_edge_oracle);
    criterion(5, "homology golden values (triangle, sphere, RP2, octahedron)", 5,
              criterion_5_homology_goldens);
    criterion(6, "Smith normal form property suite (500 random matrices)", 30,
              criterion_6_snf_suite);
    criterion(7, "essential-triviality certificate for C6 at s=1 -> s=2", 5,
              criterion_7_brown_certificate);
    criterion(8, "derived (r,d,s) satisfies the strict inequalities at R=6", 120,
              criterion_8_parameter_regime);
    criterion(9, "identity-coset subcomplex is a copy of Rips_s(K), s <= 4", 30,
              criterion_9_coset_copy);
    criterion(10, "Mayer-Vietoris localization identity on the two-coset fixture", 5,
              criterion_10_localization);
    criterion(11, "negative control: Z2 r_hat strictly increases with R", 120,
              criterion_11_negative_control);
    criterion(12, "pipeline reports are byte-identical across reruns", 120,
              [&] { criterion_12_determinism(cli); });
    if (g_failures) std::printf("%d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
