#pragma once

// JSON views of the core structs for CLI reports. Key order is fixed so that
// identical configurations produce byte-identical output.

#include <json.hpp>

#include "relrips/brown.hpp"

namespace relrips::cli {

using ordered_json = nlohmann::ordered_json;

inline ordered_json int_json(const Int& x) {
    // torsion and chain coefficients stay tiny in practice; fall back to a
    // decimal string if one ever outgrows int64
    if (x >= std::numeric_limits<std::int64_t>::min() &&
        x <= std::numeric_limits<std::int64_t>::max())
        return ordered_json(x.convert_to<std::int64_t>());
    return ordered_json(x.str());
}

inline ordered_json delta_json(const DeltaEstimate& est) {
    ordered_json j;
    j["delta"] = est.two_delta / 2.0;
    j["two_delta"] = est.two_delta;
    j["method"] = "four-point";
    j["exact"] = est.exact;
    j["vertices"] = est.vertex_count;
    j["quadruples"] = est.quadruples;
    j["boundary_margin"] = est.boundary_margin;
    if (est.seed) j["seed"] = *est.seed;
    return j;
}

inline ordered_json bcp_json(const BcpEstimate& est) {
    ordered_json j;
    j["T"] = est.T.str();
    j["d_max"] = est.d_max;
    j["r_hat"] = est.r_hat;
    j["interior_margin"] = est.interior_margin;
    j["ball_radius"] = est.ball_radius;
    j["endpoint_pairs"] = est.endpoint_pairs;
    j["paths_examined"] = est.paths_examined;
    if (est.witness) {
        ordered_json w;
        w["from"] = est.witness->from;
        w["to"] = est.witness->to;
        w["path_a"] = est.witness->path_a;
        w["path_b"] = est.witness->path_b;
        w["coset"] = est.witness->coset;
        w["value"] = est.witness->value;
        switch (est.witness->clause) {
            case BcpWitness::Clause::travel_unmatched: w["clause"] = "travel-unmatched"; break;
            case BcpWitness::Clause::entry_gap: w["clause"] = "entry-gap"; break;
            case BcpWitness::Clause::exit_gap: w["clause"] = "exit-gap"; break;
        }
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

inline ordered_json filtration_json(const FiltrationIndex& idx, bool plain) {
    if (plain) return ordered_json::array({0, 0, idx.s});
    return ordered_json::array({idx.r, idx.d, idx.s});
}

inline ordered_json sparse_chain_json(const SimplicialComplex& X, int k,
                                      const std::vector<Int>& chain) {
    ordered_json entries = ordered_json::array();
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (chain[i] == 0) continue;
        auto s = X.simplex(k, i);
        ordered_json e;
        e["simplex"] = std::vector<VertexId>(s.begin(), s.end());
        e["coeff"] = int_json(chain[i]);
        entries.push_back(std::move(e));
    }
    return entries;
}

inline std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Evidence sidecar: the source cycles and their bounding chains, as sparse
// integer chains over simplex vertex tuples of the beta stage.
inline ordered_json evidence_json(const TrivializationCertificate& cert,
                                  const SimplicialComplex* alpha_stage,
                                  const SimplicialComplex* beta_stage) {
    ordered_json j;
    j["k"] = cert.k;
    j["cycles"] = ordered_json::array();
    j["bounding_chains"] = ordered_json::array();
    if (alpha_stage && beta_stage) {
        for (const auto& cycle : cert.evidence.source_cycles)
            j["cycles"].push_back(sparse_chain_json(*alpha_stage, cert.k, cycle));
        for (const auto& chain : cert.evidence.bounding_chains)
            j["bounding_chains"].push_back(sparse_chain_json(*beta_stage, cert.k + 1, chain));
    }
    return j;
}

inline ordered_json certificate_json(const TrivializationCertificate& cert,
                                     const std::string& evidence_digest) {
    ordered_json j;
    j["fixture"] = cert.fixture;
    j["filtration"] = cert.plain ? "plain" : "relative";
    j["k"] = cert.k;
    j["alpha"] = filtration_json(cert.alpha, cert.plain);
    j["beta"] = cert.beta ? filtration_json(*cert.beta, cert.plain) : ordered_json(nullptr);
    j["R"] = cert.R;
    j["status"] = cert.status == TrivializationCertificate::Status::trivialized
                      ? "trivialized"
                      : "not-found-within-budget";
    j["alpha_betti"] = cert.alpha_betti;
    ordered_json torsion = ordered_json::array();
    for (const Int& t : cert.alpha_torsion) torsion.push_back(int_json(t));
    j["alpha_torsion"] = std::move(torsion);
    j["stages_tested"] = cert.stages_tested;
    j["evidence_digest"] = evidence_digest;
    j["caveats"] = cert.caveats;
    return j;
}

inline ordered_json homology_json(const HomologySummary& h,
                                  const SimplicialComplex& X) {
    ordered_json j;
    j["dim"] = h.k;
    j["betti"] = h.betti;
    ordered_json torsion = ordered_json::array();
    for (const Int& t : h.torsion) torsion.push_back(int_json(t));
    j["torsion"] = std::move(torsion);
    ordered_json counts;
    for (int k = 0; k < static_cast<int>(X.sims.size()); ++k)
        counts[std::to_string(k)] = X.count(k);
    j["n_simplices"] = std::move(counts);
    j["via_collapse"] = h.via_collapse;
    return j;
}

}  // namespace relrips::cli
