#pragma once

#include <vector>

#include "quotient.hpp"
#include "standard_basis.hpp"

namespace vfindex {

/// Generators of { s : sum_i s_i * gens_i = 0 } over the local ring.
///
/// Construction: compute a standard basis G of the nonzero generators with
/// carrier rows (G = A * gens as augmented elements), then reduce, against
/// the augmented basis, (a) each original generator with its own unit
/// carrier attached and (b) every S-vector of G. Each reduction ends with
/// a zero lead block, and the carrier block is then itself a syzygy of the
/// original generators: (a) yields the back-substitution relations, (b)
/// the Schreyer relations, which together generate the whole syzygy
/// module. Zero generators contribute their unit vectors. The returned
/// set is the interreduced standard basis of that generating set, so the
/// output is canonical.
inline std::vector<FreeModuleElement> syzygies(const std::vector<FreeModuleElement>& gens,
                                               const PolyRing& ring,
                                               ComputeControl* ctl = nullptr) {
    const std::size_t n = gens.size();
    if (n == 0) return {};
    const std::size_t rank = gens[0].rank();

    std::vector<FreeModuleElement> raw;
    std::vector<FreeModuleElement> nonzero;
    std::vector<std::size_t> index_of; // nonzero slot -> original index
    for (std::size_t i = 0; i < n; ++i) {
        if (gens[i].rank() != rank) throw ContextMismatchError("syzygy input rank mismatch");
        if (gens[i].is_zero()) {
            raw.push_back(FreeModuleElement::unit_vector(ring, n, i));
        } else {
            nonzero.push_back(gens[i]);
            index_of.push_back(i);
        }
    }

    if (!nonzero.empty()) {
        const std::size_t m = nonzero.size();
        const StandardBasis G = standard_basis(nonzero, rank, ring, ctl, /*track_transform=*/true);

        std::vector<FreeModuleElement> augmented;
        augmented.reserve(G.generators.size());
        for (std::size_t t = 0; t < G.generators.size(); ++t)
            augmented.push_back(detail::concat_blocks(G.generators[t], G.transform[t]));

        auto embed = [&](const FreeModuleElement& sub) {
            std::vector<Polynomial> comps(n, Polynomial::zero(ring));
            for (std::size_t t = 0; t < m; ++t) comps[index_of[t]] = sub[t];
            return FreeModuleElement(ring, std::move(comps));
        };

        auto reduce_to_syzygy = [&](const FreeModuleElement& x, const char* what) {
            const FreeModuleElement h = mora_weak_normal_form_block(x, augmented, rank);
            if (detail::leading_within(h, rank))
                throw InternalConsistencyError(std::string(what) +
                                               " did not reduce to zero against the basis");
            const FreeModuleElement row = detail::sub_block(h, rank, m);
            if (!row.is_zero()) raw.push_back(embed(row));
        };

        // Back-substitution syzygies: gen_a with its own carrier.
        for (std::size_t a = 0; a < m; ++a)
            reduce_to_syzygy(
                detail::concat_blocks(nonzero[a], FreeModuleElement::unit_vector(ring, m, a)),
                "generator");

        // Schreyer syzygies from every S-pair of G (no criteria here; the
        // full set is what the generation theorem certifies).
        for (std::size_t i = 0; i < augmented.size(); ++i) {
            for (std::size_t j = i + 1; j < augmented.size(); ++j) {
                if (G.leading[i].position != G.leading[j].position) continue;
                const Monomial lcm = G.leading[i].mono.lcm(G.leading[j].mono);
                reduce_to_syzygy(detail::spair_combination(augmented[i], augmented[j],
                                                           G.leading[i], G.leading[j], lcm),
                                 "S-pair of a standard basis");
            }
        }
    }

    if (raw.empty()) return {};
    return standard_basis(raw, n, ring, ctl).generators;
}

inline std::vector<FreeModuleElement> syzygies(const std::vector<Polynomial>& gens,
                                               const PolyRing& ring,
                                               ComputeControl* ctl = nullptr) {
    std::vector<FreeModuleElement> g;
    g.reserve(gens.size());
    for (const auto& p : gens) g.push_back(FreeModuleElement::from_poly(p));
    return syzygies(g, ring, ctl);
}

/// Generators of { x in R^p : sum_i x_i * map_cols[i] lies in the span of
/// target_rels } — the kernel of a presented-module map, lifted to the
/// free cover: syzygies of the stacked columns, projected to the first
/// block.
inline std::vector<FreeModuleElement> kernel_modulo(
    const std::vector<FreeModuleElement>& map_cols,
    const std::vector<FreeModuleElement>& target_rels, const PolyRing& ring,
    ComputeControl* ctl = nullptr) {
    const std::size_t p = map_cols.size();
    std::vector<FreeModuleElement> stacked = map_cols;
    stacked.insert(stacked.end(), target_rels.begin(), target_rels.end());
    std::vector<FreeModuleElement> out;
    for (const auto& s : syzygies(stacked, ring, ctl)) {
        std::vector<Polynomial> comps(p, Polynomial::zero(ring));
        for (std::size_t i = 0; i < p; ++i) comps[i] = s[i];
        FreeModuleElement proj(ring, std::move(comps));
        if (!proj.is_zero()) out.push_back(std::move(proj));
    }
    return out;
}

} // namespace vfindex
