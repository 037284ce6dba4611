#pragma once

#include <vector>

#include "syzygy.hpp"

namespace vfindex {

/// Finitely presented module R^rank / (relations).
struct PresentedModule {
    PolyRing ring;
    std::size_t rank = 0;
    std::vector<FreeModuleElement> relations;

    PresentedModule() = default;
    PresentedModule(PolyRing r, std::size_t rk, std::vector<FreeModuleElement> rels)
        : ring(std::move(r)), rank(rk), relations(std::move(rels)) {
        for (const auto& rel : relations)
            if (rel.rank() != rank) throw ContextMismatchError("relation rank mismatch");
    }
};

/// Vector-space dimension of a presented module over the local ring.
inline QuotientDim presented_dimension(const PresentedModule& mod, ComputeControl* ctl = nullptr) {
    StandardBasis b = standard_basis(mod.relations, mod.rank, mod.ring, ctl);
    return quotient_dimension(b);
}

/// Subquotient span(numerator) / span(denominator) of R^r, presented over
/// the numerator generators: relations are the lifts of the denominator
/// generators through the numerator's standard basis plus the syzygies of
/// the numerator generators.
struct SubquotientResult {
    QuotientDim dim;
    StandardBasis numerator_basis;    // standard basis of the numerator span
    StandardBasis presentation_basis; // standard basis of the lifted relations
};

inline SubquotientResult subquotient_dimension(const std::vector<FreeModuleElement>& numerator,
                                               const std::vector<FreeModuleElement>& denominator,
                                               const PolyRing& ring,
                                               ComputeControl* ctl = nullptr) {
    SubquotientResult out;
    const std::size_t m = numerator.size();
    if (m == 0) {
        // Zero module; the denominator must be zero too (a subset).
        for (const auto& d : denominator)
            if (!d.is_zero())
                throw InternalConsistencyError("denominator of an empty subquotient is nonzero");
        out.dim = QuotientDim::finite_value(0);
        return out;
    }

    const std::size_t r = numerator[0].rank();
    out.numerator_basis = standard_basis(numerator, r, ring, ctl, /*track_transform=*/true);

    std::vector<FreeModuleElement> augmented;
    augmented.reserve(out.numerator_basis.generators.size());
    for (std::size_t t = 0; t < out.numerator_basis.generators.size(); ++t)
        augmented.push_back(detail::concat_blocks(out.numerator_basis.generators[t],
                                                  out.numerator_basis.transform[t]));

    std::vector<FreeModuleElement> rels;
    for (const auto& d : denominator) {
        if (d.is_zero()) continue;
        // Reduce d with an empty carrier block: the lead block must vanish
        // (d lies in the numerator span) and the carrier block is then a
        // lift of a unit multiple of d over the numerator generators.
        const FreeModuleElement h = mora_weak_normal_form_block(
            detail::concat_blocks(d, FreeModuleElement(ring, m)), augmented, r);
        if (detail::leading_within(h, r))
            throw InternalConsistencyError("denominator generator lies outside the numerator span");
        FreeModuleElement row = detail::sub_block(h, r, m);
        if (!row.is_zero()) rels.push_back(std::move(row));
    }
    for (auto& s : syzygies(numerator, ring, ctl)) rels.push_back(std::move(s));

    out.presentation_basis = standard_basis(rels, m, ring, ctl);
    out.dim = quotient_dimension(out.presentation_basis);
    return out;
}

} // namespace vfindex
