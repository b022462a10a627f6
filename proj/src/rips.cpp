#include "relrips/rips.hpp"

#include <algorithm>

namespace relrips {

RipsFamily::RipsFamily(const ConedBall& cb, const DistanceMatrix& dm, int d_cap,
                       std::size_t path_cap)
    : cb_(&cb), dm_(&dm), d_cap_(d_cap) {
    const std::size_t n = dm.n;
    pairs_.resize(n);

    // DFS over reduced projected geodesics u -> v, folding each one into a
    // Pareto-minimal set of (first, last, middle) travel triples.
    std::vector<VertexId> prefix;
    std::vector<GeoProfile> local;
    std::size_t enumerated = 0;

    auto fold_profile = [&](std::uint8_t first, std::uint8_t last, std::uint8_t mid) {
        for (const GeoProfile& p : local)
            if (p.first <= first && p.last <= last && p.mid <= mid) return;  // dominated
        std::erase_if(local, [&](const GeoProfile& p) {
            return first <= p.first && last <= p.last && mid <= p.mid;
        });
        GeoProfile prof{first, last, mid, static_cast<std::uint32_t>(witness_pool_.size()),
                        static_cast<std::uint32_t>(prefix.size())};
        witness_pool_.insert(witness_pool_.end(), prefix.begin(), prefix.end());
        local.push_back(prof);
    };

    for (VertexId u = 0; u < n; ++u) {
        const std::uint8_t* du = dm.row(u);
        for (VertexId v = u + 1; v < n; ++v) {
            if (du[v] > static_cast<unsigned>(d_cap_)) continue;
            if (cb.same_coset(u, v)) continue;  // governed solely by the d_K clause
            const std::uint8_t* dv = dm.row(v);
            const int L = du[v];
            local.clear();
            prefix.assign(1, u);
            // first/last/mid travels carried down the DFS
            auto descend = [&](auto&& self, VertexId cur, std::uint8_t first, std::uint8_t last,
                               std::uint8_t mid) -> void {
                if (cur == v) {
                    fold_profile(first, last, mid);
                    if (++enumerated > path_cap)
                        throw resource_limit_error("geodesic profile enumeration cap exceeded");
                    return;
                }
                for (VertexId w : cb.neighbors(cur)) {
                    if (dv[w] + 1 != dv[cur]) continue;
                    std::uint8_t nf = first, nl = last, nm = mid;
                    if (cb.same_coset(cur, w)) {
                        int t = cb.travel(cur, w);
                        std::uint8_t tb = static_cast<std::uint8_t>(std::min(t, 255));
                        if (cur == u) nf = std::max(nf, tb);
                        if (w == v)
                            nl = std::max(nl, tb);
                        else if (cur != u)
                            nm = std::max(nm, tb);
                    }
                    prefix.push_back(w);
                    self(self, w, nf, nl, nm);
                    prefix.pop_back();
                }
            };
            descend(descend, u, 0, 0, 0);
            if (!local.empty()) {
                std::uint32_t off = static_cast<std::uint32_t>(profiles_.size());
                profiles_.insert(profiles_.end(), local.begin(), local.end());
                pairs_[u].push_back({v, static_cast<std::uint8_t>(L), off,
                                     static_cast<std::uint32_t>(local.size())});
            }
        }
    }
}

SimplicialComplex RipsFamily::complex(const RipsParams& params, std::size_t clique_cap,
                                      RipsBuildInfo* info) const {
    const CayleyBall& ball = cb_->base();
    if (params.d > d_cap_)
        throw domain_error("params.d exceeds the profile cap this family was built with");

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<SimplicialComplex::EdgeProvenance> prov;

    RipsBuildInfo local_info;
    local_info.trustworthy_depth = std::max(ball.radius() - params.d, 0);
    local_info.truncation_reliable = params.d <= ball.radius();

    // Same-coset clause: d_K(u, v) <= s.
    const CosetTable& cosets = cb_->cosets();
    for (const auto& members : cosets.members)
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                VertexId u = std::min(members[i], members[j]);
                VertexId v = std::max(members[i], members[j]);
                int dk = cb_->travel(u, v);
                if (dk <= params.s) {
                    edges.emplace_back(u, v);
                    prov.push_back({SimplicialComplex::EdgeProvenance::Kind::same_coset, dk, {}});
                    ++local_info.same_coset_edges;
                }
            }

    // Relative-geodesic clause for cross-coset pairs.
    for (VertexId u = 0; u < pairs_.size(); ++u)
        for (const PairEntry& pe : pairs_[u]) {
            if (pe.dist > params.d) continue;
            for (std::uint32_t pi = 0; pi < pe.prof_len; ++pi) {
                const GeoProfile& p = profiles_[pe.prof_off + pi];
                if (p.first < 3 * params.r && p.last < 3 * params.r && p.mid < 2 * params.r) {
                    edges.emplace_back(u, pe.v);
                    SimplicialComplex::EdgeProvenance ep;
                    ep.kind = SimplicialComplex::EdgeProvenance::Kind::relative_geodesic;
                    ep.witness.assign(
                        witness_pool_.begin() + p.witness_off,
                        witness_pool_.begin() + p.witness_off + p.witness_len);
                    prov.push_back(std::move(ep));
                    ++local_info.geodesic_edges;
                    break;
                }
            }
        }

    std::vector<std::string> labels;
    labels.reserve(ball.size());
    for (VertexId v = 0; v < ball.size(); ++v)
        labels.push_back(ball.presentation().render(ball.word(v)));

    // Edges were produced sorted within each clause but not globally; sort
    // them together with their provenance.
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
    std::vector<std::pair<VertexId, VertexId>> sorted_edges;
    std::vector<SimplicialComplex::EdgeProvenance> sorted_prov;
    sorted_edges.reserve(edges.size());
    for (std::size_t i : order) {
        sorted_edges.push_back(edges[i]);
        sorted_prov.push_back(std::move(prov[i]));
    }

    SimplicialComplex X = SimplicialComplex::flag_from_edges(std::move(labels), sorted_edges,
                                                             params.k_max, clique_cap);
    X.edge_provenance = std::move(sorted_prov);
    X.coset_of = cosets.coset_of;
    if (info) *info = local_info;
    return X;
}

SimplicialComplex build_relative_rips(const ConedBall& cb, const DistanceMatrix& dm,
                                      const RipsParams& params, std::size_t clique_cap,
                                      std::size_t path_cap, RipsBuildInfo* info) {
    RipsFamily family(cb, dm, params.d, path_cap);
    return family.complex(params, clique_cap, info);
}

SimplicialComplex build_plain_rips(const CayleyBall& ball, int s, int k_max,
                                   std::size_t clique_cap) {
    const GroupPresentation& p = ball.presentation();
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < ball.size(); ++u)
        for (VertexId v = u + 1; v < ball.size(); ++v) {
            Word diff = p.gens.inverse_word(ball.word(u));
            const Word& wv = ball.word(v);
            diff.insert(diff.end(), wv.begin(), wv.end());
            if (static_cast<int>(p.normal_form(diff).size()) <= s) edges.emplace_back(u, v);
        }
    std::vector<std::string> labels;
    labels.reserve(ball.size());
    for (VertexId v = 0; v < ball.size(); ++v) labels.push_back(p.render(ball.word(v)));
    return SimplicialComplex::flag_from_edges(std::move(labels), std::move(edges), k_max,
                                              clique_cap);
}

}  // namespace relrips
