#include "relrips/homology.hpp"

#include <algorithm>
#include <deque>

namespace relrips {

IMatrix boundary_matrix(const SimplicialComplex& X, int k, std::size_t entry_cap) {
    if (k < 0 || k >= static_cast<int>(X.sims.size()))
        throw domain_error("boundary dimension outside the complex's cap");
    const std::size_t cols = X.count(k);
    if (k == 0) {
        IMatrix aug(1, cols);
        for (std::size_t j = 0; j < cols; ++j) aug.at(0, j) = 1;
        return aug;
    }
    const std::size_t rows = X.count(k - 1);
    if (rows * cols > entry_cap)
        throw resource_limit_error("boundary matrix too large for the dense path");
    IMatrix B(rows, cols);
    std::vector<VertexId> face(static_cast<std::size_t>(k));
    for (std::size_t idx = 0; idx < cols; ++idx) {
        auto s = X.simplex(k, idx);
        for (int drop = 0; drop <= k; ++drop) {
            std::size_t w = 0;
            for (int i = 0; i <= k; ++i)
                if (i != drop) face[w++] = s[static_cast<std::size_t>(i)];
            std::size_t fidx = X.find_simplex(k - 1, face);
            if (fidx == SimplicialComplex::npos)
                throw domain_error("complex is not closed under faces");
            B.at(fidx, idx) = (drop % 2 == 0) ? 1 : -1;
        }
    }
    return B;
}

ChainComplex boundary_matrices(const SimplicialComplex& X, int k_top, std::size_t entry_cap) {
    if (k_top < 0 || k_top >= static_cast<int>(X.sims.size()))
        throw domain_error("chain complex dimension exceeds the complex's cap");
    ChainComplex cc;
    cc.X = &X;
    cc.k_top = k_top;
    for (int k = 0; k <= k_top; ++k) cc.boundary.push_back(boundary_matrix(X, k, entry_cap));
    // boundary-of-boundary vanishes; catches orientation or indexing slips
    for (int k = 1; k <= k_top; ++k)
        if (!cc.boundary[static_cast<std::size_t>(k - 1)]
                 .mul(cc.boundary[static_cast<std::size_t>(k)])
                 .is_zero())
            throw domain_error("boundary composition is nonzero");
    return cc;
}

HomologyGroup reduced_homology(const ChainComplex& cc, int k) {
    if (k < 0 || k + 1 > cc.k_top) throw domain_error("homology degree needs boundaries through k+1");
    const IMatrix& dk = cc.boundary[static_cast<std::size_t>(k)];
    const IMatrix& dk1 = cc.boundary[static_cast<std::size_t>(k + 1)];

    SNFResult snf_k = smith_normal_form(dk);
    SNFResult snf_k1 = smith_normal_form(dk1);

    HomologyGroup h;
    h.k = k;
    const std::size_t cycles = dk.cols() - snf_k.rank();
    h.betti = cycles - snf_k1.rank();
    h.torsion = snf_k1.torsion();
    h.cycle_basis = kernel_basis(snf_k);
    return h;
}

CollapseResult collapse_complex(const SimplicialComplex& X) {
    const int dims = static_cast<int>(X.sims.size());
    std::vector<std::vector<char>> alive(static_cast<std::size_t>(dims));
    for (int k = 0; k < dims; ++k) alive[static_cast<std::size_t>(k)].assign(X.count(k), 1);

    // Cofacet incidence lists, built once.
    std::vector<std::vector<std::vector<std::uint32_t>>> cof(static_cast<std::size_t>(dims));
    for (int k = 0; k + 1 < dims; ++k) cof[static_cast<std::size_t>(k)].resize(X.count(k));
    std::vector<VertexId> face;
    for (int k = 1; k < dims; ++k) {
        for (std::size_t idx = 0; idx < X.count(k); ++idx) {
            auto s = X.simplex(k, idx);
            for (int drop = 0; drop <= k; ++drop) {
                face.clear();
                for (int i = 0; i <= k; ++i)
                    if (i != drop) face.push_back(s[static_cast<std::size_t>(i)]);
                std::size_t fidx = X.find_simplex(k - 1, face);
                if (fidx == SimplicialComplex::npos)
                    throw domain_error("complex is not closed under faces");
                cof[static_cast<std::size_t>(k - 1)][fidx].push_back(
                    static_cast<std::uint32_t>(idx));
            }
        }
    }
    std::vector<std::vector<std::uint32_t>> live_cof(static_cast<std::size_t>(dims));
    for (int k = 0; k + 1 < dims; ++k) {
        live_cof[static_cast<std::size_t>(k)].resize(X.count(k));
        for (std::size_t i = 0; i < X.count(k); ++i)
            live_cof[static_cast<std::size_t>(k)][i] =
                static_cast<std::uint32_t>(cof[static_cast<std::size_t>(k)][i].size());
    }

    std::deque<std::pair<int, std::size_t>> queue;
    for (int k = 0; k + 1 < dims; ++k)
        for (std::size_t i = 0; i < X.count(k); ++i)
            if (live_cof[static_cast<std::size_t>(k)][i] == 1) queue.emplace_back(k, i);

    CollapseResult result;
    auto decrement = [&](int k, std::size_t idx) {
        if (--live_cof[static_cast<std::size_t>(k)][idx] == 1 &&
            alive[static_cast<std::size_t>(k)][idx])
            queue.emplace_back(k, idx);
    };

    while (!queue.empty()) {
        auto [k, i] = queue.front();
        queue.pop_front();
        if (!alive[static_cast<std::size_t>(k)][i]) continue;
        if (live_cof[static_cast<std::size_t>(k)][i] != 1) continue;
        std::uint32_t sigma = 0;
        bool found = false;
        for (std::uint32_t c : cof[static_cast<std::size_t>(k)][i])
            if (alive[static_cast<std::size_t>(k + 1)][c]) {
                sigma = c;
                found = true;
                break;
            }
        if (!found) continue;  // stale entry
        alive[static_cast<std::size_t>(k)][i] = 0;
        alive[static_cast<std::size_t>(k + 1)][sigma] = 0;
        ++result.pairs_removed;

        auto s = X.simplex(k + 1, sigma);
        for (int drop = 0; drop <= k + 1; ++drop) {
            face.clear();
            for (int t = 0; t <= k + 1; ++t)
                if (t != drop) face.push_back(s[static_cast<std::size_t>(t)]);
            std::size_t fidx = X.find_simplex(k, face);
            if (fidx != static_cast<std::size_t>(i) && alive[static_cast<std::size_t>(k)][fidx])
                decrement(k, fidx);
        }
        if (k >= 1) {
            auto t = X.simplex(k, i);
            for (int drop = 0; drop <= k; ++drop) {
                face.clear();
                for (int q = 0; q <= k; ++q)
                    if (q != drop) face.push_back(t[static_cast<std::size_t>(q)]);
                std::size_t fidx = X.find_simplex(k - 1, face);
                if (alive[static_cast<std::size_t>(k - 1)][fidx]) decrement(k - 1, fidx);
            }
        }
    }

    // Assemble the core on the surviving vertices.
    std::vector<VertexId> keep;
    for (std::size_t v = 0; v < X.count(0); ++v)
        if (alive[0][v]) keep.push_back(static_cast<VertexId>(v));
    std::vector<VertexId> remap(X.vertex_count(), kNoVertex);
    SimplicialComplex core;
    core.k_max = X.k_max;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        remap[keep[i]] = static_cast<VertexId>(i);
        core.labels.push_back(X.labels[keep[i]]);
    }
    if (X.coset_of) {
        core.coset_of.emplace();
        for (VertexId v : keep) core.coset_of->push_back((*X.coset_of)[v]);
    }
    core.sims.resize(X.sims.size());
    for (int k = 0; k < dims; ++k) {
        const std::size_t width = static_cast<std::size_t>(k) + 1;
        for (std::size_t idx = 0; idx < X.count(k); ++idx) {
            if (!alive[static_cast<std::size_t>(k)][idx]) continue;
            auto s = X.simplex(k, idx);
            for (std::size_t i = 0; i < width; ++i) core.sims[k].push_back(remap[s[i]]);
        }
    }
    result.core = std::move(core);
    return result;
}

StrongCollapseResult strong_collapse_flag(const SimplicialComplex& X, std::size_t clique_cap) {
    if (!X.flag_truncated)
        throw domain_error("strong collapse requires a flag-truncated complex");
    const std::size_t n = X.vertex_count();
    const std::size_t words = (n + 63) / 64;

    // Closed neighborhoods as bitsets.
    std::vector<std::uint64_t> nbhd(n * words, 0);
    auto set_bit = [&](std::size_t v, std::size_t w) {
        nbhd[v * words + w / 64] |= std::uint64_t(1) << (w % 64);
    };
    for (std::size_t v = 0; v < n; ++v) set_bit(v, v);
    for (std::size_t i = 0; i < X.count(1); ++i) {
        auto e = X.simplex(1, i);
        set_bit(e[0], e[1]);
        set_bit(e[1], e[0]);
    }

    std::vector<char> alive(n, 1);
    std::size_t removed = 0;
    // N[v] inside N[u] makes v dominated; deleting it keeps the homotopy
    // type of the flag complex. Iterate to a fixed point.
    for (bool dirty = true; dirty;) {
        dirty = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            const std::uint64_t* nv = nbhd.data() + v * words;
            for (std::size_t u = 0; u < n; ++u) {
                if (u == v || !alive[u]) continue;
                const std::uint64_t* nu = nbhd.data() + u * words;
                bool contained = true;
                for (std::size_t w = 0; w < words && contained; ++w)
                    contained = (nv[w] & ~nu[w]) == 0;
                if (!contained) continue;
                // delete v from every neighborhood
                alive[v] = 0;
                ++removed;
                dirty = true;
                for (std::size_t x = 0; x < n; ++x)
                    nbhd[x * words + v / 64] &= ~(std::uint64_t(1) << (v % 64));
                break;
            }
        }
    }

    std::vector<VertexId> keep;
    for (std::size_t v = 0; v < n; ++v)
        if (alive[v]) keep.push_back(static_cast<VertexId>(v));
    std::vector<VertexId> remap(n, kNoVertex);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        remap[keep[i]] = static_cast<VertexId>(i);
        labels.push_back(X.labels[keep[i]]);
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < X.count(1); ++i) {
        auto e = X.simplex(1, i);
        if (alive[e[0]] && alive[e[1]]) edges.emplace_back(remap[e[0]], remap[e[1]]);
    }
    StrongCollapseResult res;
    res.vertices_removed = removed;
    res.core = SimplicialComplex::flag_from_edges(std::move(labels), std::move(edges), X.k_max,
                                                  clique_cap);
    return res;
}

HomologySummary homology_summary(const SimplicialComplex& X, int k, std::size_t entry_cap) {
    if (k < 0 || k + 1 >= static_cast<int>(X.sims.size()))
        throw domain_error("homology degree needs simplices through k+1");
    HomologySummary out;
    out.k = k;

    auto dense_cost = [&](const SimplicialComplex& C) {
        return C.count(k) * (C.count(k - 1) + C.count(k + 1));
    };

    const SimplicialComplex* target = &X;
    StrongCollapseResult strong;
    CollapseResult collapsed;
    if (dense_cost(X) > entry_cap && X.flag_truncated) {
        strong = strong_collapse_flag(X);
        out.via_collapse = true;
        target = &strong.core;
    }
    if (dense_cost(*target) > entry_cap) {
        collapsed = collapse_complex(*target);
        out.via_collapse = true;
        target = &collapsed.core;
        if (dense_cost(*target) > entry_cap)
            throw resource_limit_error(
                "complex remains too large for exact homology after collapsing");
    }
    out.core_simplices = target->total_simplices();

    IMatrix dk = boundary_matrix(*target, k, entry_cap);
    IMatrix dk1 = boundary_matrix(*target, k + 1, entry_cap);
    SNFResult snf_k = smith_normal_form(dk, entry_cap);
    SNFResult snf_k1 = smith_normal_form(dk1, entry_cap);
    out.betti = (dk.cols() - snf_k.rank()) - snf_k1.rank();
    out.torsion = snf_k1.torsion();
    return out;
}

std::vector<Int> map_chain(const InclusionMap& inc, int k, std::span<const Int> chain) {
    const SimplicialComplex& src = *inc.source;
    const SimplicialComplex& tgt = *inc.target;
    if (chain.size() != src.count(k)) throw domain_error("chain length mismatch");
    std::vector<Int> out(tgt.count(k));
    std::vector<VertexId> image(static_cast<std::size_t>(k) + 1);
    for (std::size_t idx = 0; idx < chain.size(); ++idx) {
        if (chain[idx] == 0) continue;
        auto s = src.simplex(k, idx);
        for (std::size_t i = 0; i <= static_cast<std::size_t>(k); ++i)
            image[i] = inc.vertex_map[s[i]];
        // Sign of the permutation sorting the image (insertion count parity).
        int sign = 1;
        for (std::size_t i = 1; i < image.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (image[j] > image[i]) sign = -sign;
        std::vector<VertexId> sorted_image = image;
        std::sort(sorted_image.begin(), sorted_image.end());
        std::size_t tidx = tgt.find_simplex(k, sorted_image);
        if (tidx == SimplicialComplex::npos)
            throw domain_error("chain maps outside the target complex");
        out[tidx] += sign * chain[idx];
    }
    return out;
}

ZeroTestCertificate induced_map_zero_test(const InclusionMap& inc, int k, std::size_t entry_cap) {
    ZeroTestCertificate cert;
    cert.k = k;

    IMatrix src_dk = boundary_matrix(*inc.source, k, entry_cap);
    SNFResult src_snf = smith_normal_form(src_dk, entry_cap);
    cert.source_cycles = kernel_basis(src_snf);

    if (cert.source_cycles.empty()) return cert;  // no cycles at all

    IMatrix tgt_dk1 = boundary_matrix(*inc.target, k + 1, entry_cap);
    SNFResult tgt_snf = smith_normal_form(tgt_dk1, entry_cap);

    for (std::size_t i = 0; i < cert.source_cycles.size(); ++i) {
        std::vector<Int> mapped = map_chain(inc, k, cert.source_cycles[i]);
        cert.mapped_cycles.push_back(mapped);
        auto chain = solve_integer(tgt_snf, mapped);
        if (!chain) {
            cert.zero = false;
            cert.witness = i;
            return cert;
        }
        cert.bounding_chains.push_back(std::move(*chain));
    }
    return cert;
}

}  // namespace relrips
