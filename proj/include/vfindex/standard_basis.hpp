#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "control.hpp"
#include "mora.hpp"

namespace vfindex {

/// Mora-reduced generating set of a submodule of R^rank (rank 1 = ideal)
/// under the ring's active order. Generators are monic, interreduced (no
/// leading term divides another's) and canonically sorted; every S-pair
/// reduces to zero, which all_spairs_reduce_to_zero re-checks on demand.
struct StandardBasis {
    PolyRing ring;
    std::size_t rank = 0;
    std::vector<FreeModuleElement> generators;
    std::vector<ModuleLeadingTerm> leading; // cached, parallel to generators

    /// Rows expressing each generator over the input list passed to
    /// standard_basis (rank = input size); empty unless tracking was on.
    std::vector<FreeModuleElement> transform;
};

namespace detail {

inline FreeModuleElement concat_blocks(const FreeModuleElement& a, const FreeModuleElement& b) {
    std::vector<Polynomial> comps = a.components();
    comps.insert(comps.end(), b.components().begin(), b.components().end());
    return FreeModuleElement(a.ring(), std::move(comps));
}

inline FreeModuleElement sub_block(const FreeModuleElement& e, std::size_t from,
                                   std::size_t count) {
    std::vector<Polynomial> comps(e.components().begin() + static_cast<long>(from),
                                  e.components().begin() + static_cast<long>(from + count));
    return FreeModuleElement(e.ring(), std::move(comps));
}

/// Cross-multiplied S-vector: leading terms cancel exactly without
/// introducing fractions.
inline FreeModuleElement spair_combination(const FreeModuleElement& a, const FreeModuleElement& b,
                                           const ModuleLeadingTerm& la, const ModuleLeadingTerm& lb,
                                           const Monomial& lcm) {
    return a.scaled(lcm.quotient(la.mono), lb.coeff) - b.scaled(lcm.quotient(lb.mono), la.coeff);
}

struct SPair {
    std::size_t i, j;
    Monomial lcm;
    std::size_t position;
    long degree;
    long seq;
};

} // namespace detail

/// Buchberger loop with Mora normal forms (the tangent-cone algorithm
/// under local orders). Selection is the normal strategy: smallest lcm
/// degree first. The chain criterion is applied in its treated-pairs form;
/// the product criterion only for rank-1 input, where it is valid. When
/// `track_transform` is set, each input generator is augmented with a unit
/// carrier and the whole computation runs on the augmented module, so
/// transform rows fall out of the reduction arithmetic itself.
inline StandardBasis standard_basis(const std::vector<FreeModuleElement>& gens, std::size_t rank,
                                    const PolyRing& ring, ComputeControl* ctl = nullptr,
                                    bool track_transform = false) {
    for (const auto& g : gens) {
        if (g.ring() != ring) throw ContextMismatchError("generator over a different ring/order");
        if (g.rank() != rank) throw ContextMismatchError("generator rank mismatch");
    }

    const std::size_t n_input = gens.size();

    struct Entry {
        FreeModuleElement elem; // augmented when tracking
        ModuleLeadingTerm lt;   // of the lead block
    };
    std::vector<Entry> basis;

    for (std::size_t i = 0; i < n_input; ++i) {
        if (gens[i].is_zero()) continue; // degenerate input is filtered out
        FreeModuleElement e = gens[i];
        if (track_transform)
            e = detail::concat_blocks(e, FreeModuleElement::unit_vector(ring, n_input, i));
        const auto lt = detail::leading_within(e, rank);
        if (lt->coeff != 1) e = e.scaled(Rat(1) / lt->coeff);
        basis.push_back({e, *detail::leading_within(e, rank)});
    }

    using PairKey = std::pair<std::size_t, std::size_t>;
    std::map<PairKey, detail::SPair> pending;
    std::set<PairKey> done;
    long seq = 0;

    auto add_pairs_for = [&](std::size_t s) {
        for (std::size_t t = 0; t < s; ++t) {
            if (basis[t].lt.position != basis[s].lt.position) continue;
            detail::SPair p;
            p.i = t;
            p.j = s;
            p.position = basis[s].lt.position;
            p.lcm = basis[t].lt.mono.lcm(basis[s].lt.mono);
            p.degree = ring.order().degree(p.lcm);
            p.seq = seq++;
            pending.emplace(PairKey{t, s}, std::move(p));
        }
    };
    for (std::size_t s = 0; s < basis.size(); ++s) add_pairs_for(s);

    long stat_processed = 0, stat_zero = 0, stat_added = 0, stat_product = 0, stat_chain = 0;

    auto pop_best = [&]() {
        auto best = pending.end();
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            if (best == pending.end() || it->second.degree < best->second.degree ||
                (it->second.degree == best->second.degree && it->second.seq < best->second.seq))
                best = it;
        }
        detail::SPair p = best->second;
        pending.erase(best);
        return p;
    };

    std::vector<FreeModuleElement> current;
    while (!pending.empty()) {
        const detail::SPair p = pop_best();
        done.insert({p.i, p.j});

        // Product criterion: coprime leading monomials, ideals only.
        if (rank == 1 && basis[p.i].lt.mono.coprime_with(basis[p.j].lt.mono)) {
            ++stat_product;
            if (ctl) ++ctl->spairs_skipped;
            continue;
        }
        // Chain criterion: some third leading term divides the lcm and both
        // flanking pairs were already treated.
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (basis[k].lt.position != p.position) continue;
            if (!basis[k].lt.mono.divides(p.lcm)) continue;
            const PairKey ik{std::min(p.i, k), std::max(p.i, k)};
            const PairKey jk{std::min(p.j, k), std::max(p.j, k)};
            if (done.count(ik) && done.count(jk)) chained = true;
        }
        if (chained) {
            ++stat_chain;
            if (ctl) ++ctl->spairs_skipped;
            continue;
        }

        if (ctl) ctl->count_spair();
        ++stat_processed;

        const FreeModuleElement sp = detail::spair_combination(
            basis[p.i].elem, basis[p.j].elem, basis[p.i].lt, basis[p.j].lt, p.lcm);
        current.clear();
        current.reserve(basis.size());
        for (const auto& e : basis) current.push_back(e.elem);

        FreeModuleElement h = mora_weak_normal_form_block(sp, current, rank);
        const auto hlt = detail::leading_within(h, rank);
        if (!hlt) {
            ++stat_zero;
            continue;
        }
        if (hlt->coeff != 1) h = h.scaled(Rat(1) / hlt->coeff);
        const ModuleLeadingTerm new_lt = *detail::leading_within(h, rank);
        basis.push_back({std::move(h), new_lt});
        ++stat_added;
        add_pairs_for(basis.size() - 1);
    }

    // Interreduction: drop generators whose leading term is divisible by
    // another's (equal leading terms keep the earlier generator).
    std::vector<bool> redundant(basis.size(), false);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (!basis[j].lt.divides(basis[i].lt)) continue;
            const bool equal_lt = basis[j].lt.mono == basis[i].lt.mono;
            if (equal_lt && j > i) continue;
            redundant[i] = true;
            break;
        }
    }

    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!redundant[i]) kept.push_back(i);

    // Canonical output order: by position, then leading monomial descending.
    std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
        if (basis[a].lt.position != basis[b].lt.position)
            return basis[a].lt.position < basis[b].lt.position;
        return ring.order().greater(basis[a].lt.mono, basis[b].lt.mono);
    });

    StandardBasis out;
    out.ring = ring;
    out.rank = rank;
    for (std::size_t idx : kept) {
        const FreeModuleElement monic = basis[idx].elem.scaled(Rat(1) / basis[idx].lt.coeff);
        if (track_transform) {
            out.generators.push_back(detail::sub_block(monic, 0, rank));
            out.transform.push_back(detail::sub_block(monic, rank, n_input));
        } else {
            out.generators.push_back(monic);
        }
        out.leading.push_back(out.generators.back().leading());
    }

    if (ctl && ctl->trace_out) {
        std::ostringstream os;
        os << "[spairs] input=" << gens.size() << " rank=" << rank
           << " processed=" << stat_processed << " to-zero=" << stat_zero
           << " added=" << stat_added << " skipped-product=" << stat_product
           << " skipped-chain=" << stat_chain << " basis=" << out.generators.size();
        ctl->trace(os.str());
    }
    return out;
}

inline StandardBasis standard_basis(const std::vector<Polynomial>& gens, const PolyRing& ring,
                                    ComputeControl* ctl = nullptr, bool track_transform = false) {
    std::vector<FreeModuleElement> g;
    g.reserve(gens.size());
    for (const auto& p : gens) g.push_back(FreeModuleElement::from_poly(p));
    return standard_basis(g, 1, ring, ctl, track_transform);
}

/// True iff `elem` lies in the submodule generated by the basis over the
/// local ring (weak normal form vanishes).
inline bool membership(const FreeModuleElement& elem, const StandardBasis& basis) {
    if (elem.rank() != basis.rank) throw ContextMismatchError("membership rank mismatch");
    return mora_weak_normal_form_block(elem, basis.generators, basis.rank).is_zero();
}

inline bool membership(const Polynomial& p, const StandardBasis& basis) {
    return membership(FreeModuleElement::from_poly(p), basis);
}

/// The defining property, re-checked from scratch: every S-pair of the
/// basis Mora-reduces to zero.
inline bool all_spairs_reduce_to_zero(const StandardBasis& basis) {
    for (std::size_t i = 0; i < basis.generators.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.generators.size(); ++j) {
            if (basis.leading[i].position != basis.leading[j].position) continue;
            const Monomial lcm = basis.leading[i].mono.lcm(basis.leading[j].mono);
            const FreeModuleElement sp =
                detail::spair_combination(basis.generators[i], basis.generators[j],
                                          basis.leading[i], basis.leading[j], lcm);
            if (!mora_weak_normal_form_block(sp, basis.generators, basis.rank).is_zero())
                return false;
        }
    }
    return true;
}

} // namespace vfindex
