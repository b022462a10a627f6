// relrips: coned-off Cayley graphs, relative Rips complexes, exact homology
// and essential-triviality certificates for finitely presented groups with a
// distinguished peripheral subgroup.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "relrips/brown.hpp"
#include "report_json.hpp"

using namespace relrips;
using relrips::cli::ordered_json;

namespace {

struct CommonOpts {
    std::string fixture;
    int R = 4;
    std::string out_dir;
    std::string format = "json";
    std::size_t vertex_cap = kDefaultVertexCap;
    std::size_t clique_cap = kDefaultCliqueCap;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--fixture", opts.fixture, "presentation file (.grp)")->required();
    cmd->add_option("--R", opts.R, "Cayley ball radius");
    cmd->add_option("--out", opts.out_dir, "directory for report files (default: stdout)");
    cmd->add_option("--format", opts.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
}

void apply_env_caps(CommonOpts& opts) {
    if (const char* v = std::getenv("RELRIPS_CAP_VERTICES")) opts.vertex_cap = std::stoull(v);
    if (const char* v = std::getenv("RELRIPS_CAP_CLIQUES")) opts.clique_cap = std::stoull(v);
}

ordered_json config_json(const CommonOpts& opts, ordered_json extra) {
    ordered_json j;
    j["fixture"] = opts.fixture;
    j["R"] = opts.R;
    j["vertex_cap"] = opts.vertex_cap;
    j["clique_cap"] = opts.clique_cap;
    j["format"] = opts.format;
    for (auto& [key, value] : extra.items()) j[key] = value;
    return j;
}

void write_atomic(const std::filesystem::path& path, const std::string& data) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw domain_error("cannot write '" + path.string() + "'");
        out << data;
    }
    std::filesystem::rename(tmp, path);
}

// Reports go to stdout unless an output directory was requested.
void emit(const CommonOpts& opts, const std::string& name, const std::string& payload) {
    if (opts.out_dir.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::filesystem::create_directories(opts.out_dir);
    write_atomic(std::filesystem::path(opts.out_dir) / name, payload);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

struct PlainOrRelative {
    bool plain = false;
    int r = 1, d = 1, s = 1, k_max = 1;
};

SimplicialComplex build_complex(const Fixture& fx, const CommonOpts& opts,
                                const PlainOrRelative& sel, RipsBuildInfo* info = nullptr) {
    CayleyBall ball = CayleyBall::build(fx.group, opts.R, opts.vertex_cap);
    if (sel.plain) return build_plain_rips(ball, sel.s, sel.k_max, opts.clique_cap);
    ConedBall coned(ball, fx.peripheral);
    DistanceMatrix dm = all_pairs_distances(coned);
    return build_relative_rips(coned, dm, RipsParams{sel.r, sel.d, sel.s, sel.k_max},
                               opts.clique_cap, kDefaultPathCap, info);
}

int run(int argc, char** argv) {
    CLI::App app{"desk-scale toolkit for relatively hyperbolic groups"};
    app.require_subcommand(1);

    CommonOpts opts;
    apply_env_caps(opts);

    auto* cmd_parse = app.add_subcommand("parse", "validate a presentation file");
    add_common(cmd_parse, opts);

    auto* cmd_ball = app.add_subcommand("ball", "build a Cayley ball");
    std::string export_path;
    add_common(cmd_ball, opts);
    cmd_ball->add_option("--export", export_path, "write the edge list to a file");

    auto* cmd_cone = app.add_subcommand("cone", "build the coned-off ball");
    add_common(cmd_cone, opts);

    auto* cmd_delta = app.add_subcommand("delta", "four-point hyperbolicity constant");
    bool delta_gamma = false;
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;
    int margin = 0;
    std::string sweep;
    add_common(cmd_delta, opts);
    cmd_delta->add_flag("--gamma", delta_gamma,
                        "scan the plain Cayley ball instead of the coned one");
    cmd_delta->add_option("--sample", sample_count, "sample this many quadruples instead of all");
    cmd_delta->add_option("--seed", seed, "sampling seed");
    cmd_delta->add_option("--margin", margin,
                          "ignore vertices within this distance of the boundary");
    cmd_delta->add_option("--sweep-R", sweep, "lo:hi radius sweep (csv-friendly)");

    auto* cmd_bcp = app.add_subcommand("bcp", "empirical bounded-coset-penetration constant");
    std::string T_text = "1";
    int d_max = 3;
    add_common(cmd_bcp, opts);
    cmd_bcp->add_option("--T", T_text, "quasi-geodesic constant (integer or p/q)");
    cmd_bcp->add_option("--d-max", d_max, "relative length budget");
    cmd_bcp->add_option("--sweep-R", sweep, "lo:hi radius sweep (csv-friendly)");

    auto* cmd_params = app.add_subcommand("params", "derive the (r, d, s) triple");
    int d_max_cap = 3;
    add_common(cmd_params, opts);
    cmd_params->add_option("--d-max-cap", d_max_cap, "cap on the bcp path budget");

    auto* cmd_rips = app.add_subcommand("rips", "build a (relative) Rips complex");
    PlainOrRelative sel;
    add_common(cmd_rips, opts);
    cmd_rips->add_flag("--plain", sel.plain, "ordinary Rips complex of the group itself");
    cmd_rips->add_option("--r", sel.r);
    cmd_rips->add_option("--d", sel.d);
    cmd_rips->add_option("--s", sel.s);
    cmd_rips->add_option("--k-max", sel.k_max, "flag completion dimension cap");
    cmd_rips->add_option("--export", export_path, "write the simplex list to a file");

    auto* cmd_hom = app.add_subcommand("homology", "reduced integral homology of a stage");
    int degree = 1;
    add_common(cmd_hom, opts);
    cmd_hom->add_flag("--plain", sel.plain);
    cmd_hom->add_option("--r", sel.r);
    cmd_hom->add_option("--d", sel.d);
    cmd_hom->add_option("--s", sel.s);
    cmd_hom->add_option("--k", degree, "homology degree");

    auto* cmd_brown = app.add_subcommand("brown", "essential-triviality certificate");
    FiltrationIndex alpha{1, 1, 1};
    int budget_steps = 4;
    add_common(cmd_brown, opts);
    cmd_brown->add_flag("--plain", sel.plain, "plain Rips filtration of the fixture group");
    cmd_brown->add_option("--k", degree, "homology degree");
    cmd_brown->add_option("--alpha-r", alpha.r);
    cmd_brown->add_option("--alpha-d", alpha.d);
    cmd_brown->add_option("--alpha-s", alpha.s);
    cmd_brown->add_option("--budget", budget_steps, "steps per coordinate past alpha");

    auto* cmd_pipe = app.add_subcommand("pipeline", "full run: params, both filtrations");
    int n_degree = 2;
    add_common(cmd_pipe, opts);
    cmd_pipe->add_option("--n", n_degree, "check degrees k < n");
    cmd_pipe->add_option("--d-max-cap", d_max_cap);
    cmd_pipe->add_option("--budget", budget_steps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        ordered_json err;
        err["error"] = {{"type", "usage"}, {"message", e.what()}};
        std::cerr << err.dump() << '\n';
        return 2;
    }

    SearchBudget budget;
    budget.steps_per_coord = budget_steps;
    budget.clique_cap = opts.clique_cap;

    if (cmd_parse->parsed()) {
        ParsedPresentation parsed = parse_presentation_file(opts.fixture);
        ConfluenceReport conf =
            bounded_confluence_check(parsed.group, parsed.group.confluence_check_length);
        ordered_json j;
        j["command"] = "parse";
        j["config"] = config_json(opts, {});
        std::vector<std::string> names;
        for (Sym s = 0; s < parsed.group.gens.size(); ++s)
            names.push_back(parsed.group.gens.name(s));
        j["group"] = {{"name", parsed.group.name},
                      {"generators", names},
                      {"rules", parsed.group.rws.rules().size()}};
        j["confluence"] = {{"passed", conf.passed},
                           {"checked_length", conf.checked_length},
                           {"words_checked", conf.words_checked}};
        if (!conf.passed) {
            j["confluence"]["witness"] = parsed.group.render(conf.witness);
            j["confluence"]["normal_forms"] = {parsed.group.render(conf.normal_form_a),
                                               parsed.group.render(conf.normal_form_b)};
        }
        ordered_json peri;
        std::vector<std::string> sub;
        for (Sym s : parsed.peripheral.sub_gens) sub.push_back(parsed.group.gens.name(s));
        peri["generators"] = sub;
        bool closed = false;
        if (conf.passed) {
            PeripheralClosureReport closure = check_normal_form_closed(
                parsed.group, parsed.peripheral, parsed.group.confluence_check_length);
            closed = closure.closed;
            peri["normal_form_closed"] = closure.closed;
            if (!closure.closed) peri["witness"] = parsed.group.render(closure.witness);
        } else {
            peri["normal_form_closed"] = nullptr;
        }
        j["peripheral"] = std::move(peri);
        emit(opts, "parse.json", dump(j));
        return conf.passed && closed ? 0 : 1;
    }

    Fixture fx = load_fixture(opts.fixture);

    if (cmd_ball->parsed()) {
        CayleyBall ball = CayleyBall::build(fx.group, opts.R, opts.vertex_cap);
        ordered_json j;
        j["command"] = "ball";
        j["config"] = config_json(opts, {});
        j["group"] = fx.group.name;
        j["radius"] = ball.radius();
        j["vertex_count"] = ball.size();
        std::size_t arcs = 0;
        for (VertexId v = 0; v < ball.size(); ++v) arcs += ball.neighbors(v).size();
        j["edge_count"] = arcs / 2;
        if (!export_path.empty()) {
            std::ostringstream text;
            ordered_json header;
            header["group"] = fx.group.name;
            header["radius"] = ball.radius();
            header["vertex_count"] = ball.size();
            text << header.dump() << '\n';
            ball.export_edges(text);
            write_atomic(export_path, text.str());
            j["export"] = export_path;
        }
        emit(opts, "ball.json", dump(j));
        return 0;
    }

    if (cmd_cone->parsed()) {
        CayleyBall ball = CayleyBall::build(fx.group, opts.R, opts.vertex_cap);
        ConedBall cb(ball, fx.peripheral);
        ordered_json j;
        j["command"] = "cone";
        j["config"] = config_json(opts, {});
        j["group"] = fx.group.name;
        j["radius"] = ball.radius();
        j["vertex_count"] = ball.size();
        j["coset_count"] = cb.cosets().coset_count();
        j["coset_pairs"] = cb.coset_pair_count();
        j["added_edges"] = cb.added_edge_count();
        emit(opts, "cone.json", dump(j));
        return 0;
    }

    auto delta_for_radius = [&](int R) {
        CayleyBall ball = CayleyBall::build(fx.group, R, opts.vertex_cap);
        DistanceMatrix dm;
        if (delta_gamma) {
            dm = all_pairs_distances(ball);
        } else {
            ConedBall cb(ball, fx.peripheral);
            dm = all_pairs_distances(cb);
        }
        std::vector<VertexId> scan;
        for (VertexId v = 0; v < ball.size(); ++v)
            if (ball.word_length(v) <= R - margin) scan.push_back(v);
        SamplePlan plan;
        if (sample_count > 0) plan = SamplePlan{false, sample_count, seed};
        DeltaEstimate est = delta_four_point(dm, scan, plan);
        est.boundary_margin = margin;
        return est;
    };

    auto parse_sweep = [&](int fallback) {
        std::vector<int> radii;
        if (sweep.empty()) {
            radii.push_back(fallback);
        } else {
            auto colon = sweep.find(':');
            if (colon == std::string::npos) throw domain_error("--sweep-R expects lo:hi");
            int lo = std::stoi(sweep.substr(0, colon)), hi = std::stoi(sweep.substr(colon + 1));
            for (int R = lo; R <= hi; ++R) radii.push_back(R);
        }
        return radii;
    };

    if (cmd_delta->parsed()) {
        std::vector<int> radii = parse_sweep(opts.R);
        if (opts.format == "csv") {
            std::ostringstream csv;
            csv << "R,vertices,delta,exact,quadruples\n";
            for (int R : radii) {
                DeltaEstimate est = delta_for_radius(R);
                csv << R << ',' << est.vertex_count << ',' << est.two_delta / 2.0 << ','
                    << (est.exact ? 1 : 0) << ',' << est.quadruples << '\n';
            }
            emit(opts, "delta.csv", csv.str());
            return 0;
        }
        ordered_json j;
        j["command"] = "delta";
        j["config"] = config_json(opts, {{"graph", delta_gamma ? "cayley" : "coned"},
                                         {"margin", margin},
                                         {"sample", sample_count},
                                         {"seed", seed}});
        if (radii.size() == 1) {
            j["estimate"] = cli::delta_json(delta_for_radius(radii[0]));
        } else {
            j["estimates"] = ordered_json::array();
            for (int R : radii) {
                ordered_json row = cli::delta_json(delta_for_radius(R));
                row["R"] = R;
                j["estimates"].push_back(std::move(row));
            }
        }
        emit(opts, "delta.json", dump(j));
        return 0;
    }

    auto bcp_for_radius = [&](int R) {
        CayleyBall ball = CayleyBall::build(fx.group, R, opts.vertex_cap);
        ConedBall cb(ball, fx.peripheral);
        DistanceMatrix dm = all_pairs_distances(cb);
        return estimate_rbcp(cb, dm, Rational::parse(T_text), d_max);
    };

    if (cmd_bcp->parsed()) {
        std::vector<int> radii = parse_sweep(opts.R);
        if (opts.format == "csv") {
            std::ostringstream csv;
            csv << "R,T,d_max,r_hat,endpoint_pairs,paths\n";
            for (int R : radii) {
                BcpEstimate est = bcp_for_radius(R);
                csv << R << ',' << est.T.str() << ',' << est.d_max << ',' << est.r_hat << ','
                    << est.endpoint_pairs << ',' << est.paths_examined << '\n';
            }
            emit(opts, "bcp.csv", csv.str());
            return 0;
        }
        ordered_json j;
        j["command"] = "bcp";
        j["config"] = config_json(opts, {{"T", T_text}, {"d_max", d_max}});
        if (radii.size() == 1) {
            j["estimate"] = cli::bcp_json(bcp_for_radius(radii[0]));
        } else {
            j["estimates"] = ordered_json::array();
            for (int R : radii) {
                ordered_json row = cli::bcp_json(bcp_for_radius(R));
                row["R"] = R;
                j["estimates"].push_back(std::move(row));
            }
        }
        emit(opts, "bcp.json", dump(j));
        return 0;
    }

    if (cmd_params->parsed()) {
        CayleyBall ball = CayleyBall::build(fx.group, opts.R, opts.vertex_cap);
        ConedBall cb(ball, fx.peripheral);
        DistanceMatrix dm = all_pairs_distances(cb);
        DeltaEstimate delta = delta_four_point(dm);
        DerivedParams dp = derive_params(delta, cb, dm, d_max_cap);
        ordered_json j;
        j["command"] = "params";
        j["config"] = config_json(opts, {{"d_max_cap", d_max_cap}});
        j["delta"] = cli::delta_json(dp.delta);
        j["bcp"] = cli::bcp_json(dp.bcp);
        j["triple"] = {{"r", dp.triple.r}, {"d", dp.triple.d}, {"s", dp.triple.s}};
        emit(opts, "params.json", dump(j));
        return 0;
    }

    if (cmd_rips->parsed()) {
        RipsBuildInfo info;
        SimplicialComplex X = build_complex(fx, opts, sel, &info);
        ordered_json j;
        j["command"] = "rips";
        j["config"] = config_json(opts, {{"plain", sel.plain},
                                         {"r", sel.r},
                                         {"d", sel.d},
                                         {"s", sel.s},
                                         {"k_max", sel.k_max}});
        ordered_json counts;
        for (int k = 0; k < static_cast<int>(X.sims.size()); ++k)
            counts[std::to_string(k)] = X.count(k);
        j["n_simplices"] = std::move(counts);
        if (!sel.plain) {
            j["same_coset_edges"] = info.same_coset_edges;
            j["geodesic_edges"] = info.geodesic_edges;
            j["trustworthy_depth"] = info.trustworthy_depth;
            j["truncation_reliable"] = info.truncation_reliable;
        }
        if (!export_path.empty()) {
            std::ostringstream text;
            ordered_json header;
            header["group"] = fx.group.name;
            header["plain"] = sel.plain;
            header["params"] = {{"r", sel.r}, {"d", sel.d}, {"s", sel.s}, {"k_max", sel.k_max}};
            header["R"] = opts.R;
            text << header.dump() << '\n';
            X.export_text(text);
            write_atomic(export_path, text.str());
            j["export"] = export_path;
        }
        emit(opts, "rips.json", dump(j));
        return 0;
    }

    if (cmd_hom->parsed()) {
        sel.k_max = degree + 1;
        SimplicialComplex X = build_complex(fx, opts, sel);
        HomologySummary h = homology_summary(X, degree);
        ordered_json j;
        j["command"] = "homology";
        j["config"] = config_json(opts, {{"plain", sel.plain},
                                         {"r", sel.r},
                                         {"d", sel.d},
                                         {"s", sel.s},
                                         {"k", degree}});
        j["homology"] = cli::homology_json(h, X);
        emit(opts, "homology.json", dump(j));
        return 0;
    }

    if (cmd_brown->parsed()) {
        TrivializationCertificate cert =
            check_essential_triviality(fx, degree, alpha, opts.R, sel.plain, budget);
        ordered_json evidence;
        if (cert.status == TrivializationCertificate::Status::trivialized &&
            !cert.evidence.bounding_chains.empty()) {
            SimplicialComplex alpha_stage =
                build_stage(fx, cert.alpha, opts.R, cert.plain, cert.k, budget);
            SimplicialComplex beta_stage =
                build_stage(fx, *cert.beta, opts.R, cert.plain, cert.k, budget);
            evidence = cli::evidence_json(cert, &alpha_stage, &beta_stage);
        } else {
            evidence = cli::evidence_json(cert, nullptr, nullptr);
        }
        std::string evidence_text = evidence.dump(2) + "\n";
        std::string digest = cli::fnv1a_hex(evidence_text);
        ordered_json j;
        j["command"] = "brown";
        j["config"] = config_json(opts, {{"plain", sel.plain},
                                         {"k", degree},
                                         {"alpha", cli::filtration_json(alpha, sel.plain)},
                                         {"budget", budget_steps}});
        j["certificate"] = cli::certificate_json(cert, digest);
        if (!opts.out_dir.empty()) {
            std::filesystem::create_directories(opts.out_dir);
            write_atomic(std::filesystem::path(opts.out_dir) / (digest + ".evidence.json"),
                         evidence_text);
        }
        emit(opts, "brown.json", dump(j));
        return 0;
    }

    if (cmd_pipe->parsed()) {
        PipelineReport report = run_theorem_pipeline(fx, n_degree, opts.R, d_max_cap, budget);
        ordered_json j;
        j["command"] = "pipeline";
        j["config"] = config_json(opts, {{"n", n_degree},
                                         {"d_max_cap", d_max_cap},
                                         {"budget", budget_steps}});
        j["fixture"] = report.fixture;
        j["delta"] = cli::delta_json(report.delta);
        j["bcp"] = cli::bcp_json(report.bcp);
        j["derived"] = {{"r", report.derived.r}, {"d", report.derived.d}, {"s", report.derived.s}};
        auto certs = [&](const std::vector<TrivializationCertificate>& list) {
            ordered_json arr = ordered_json::array();
            for (const auto& cert : list) {
                std::string digest =
                    cli::fnv1a_hex(cli::evidence_json(cert, nullptr, nullptr).dump());
                arr.push_back(cli::certificate_json(cert, digest));
            }
            return arr;
        };
        j["peripheral"] = certs(report.peripheral);
        j["relative"] = certs(report.relative);
        j["caveats"] = report.caveats;
        emit(opts, "pipeline.json", dump(j));
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const resource_limit_error& e) {
        ordered_json err;
        err["error"] = {{"type", "resource-cap"}, {"message", e.what()}};
        std::cerr << err.dump() << '\n';
        return 3;
    } catch (const parse_error& e) {
        ordered_json err;
        err["error"] = {{"type", "parse"},
                        {"message", e.what()},
                        {"line", e.line()},
                        {"column", e.column()}};
        std::cerr << err.dump() << '\n';
        return 1;
    } catch (const domain_error& e) {
        ordered_json err;
        err["error"] = {{"type", "domain"}, {"message", e.what()}};
        std::cerr << err.dump() << '\n';
        return 1;
    } catch (const std::exception& e) {
        ordered_json err;
        err["error"] = {{"type", "internal"}, {"message", e.what()}};
        std::cerr << err.dump() << '\n';
        return 1;
    }
}
