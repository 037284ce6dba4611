#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "module_element.hpp"

namespace vfindex {

/// Exact certificate of a weak normal form:
///   unit * input = sum_i quotients[i] * basis[i] + remainder
/// as a polynomial identity. `unit` has constant term 1, so it is
/// invertible in the local ring.
struct DivisionRecord {
    Polynomial unit;
    std::vector<Polynomial> quotients;
};

namespace debug {
// Telemetry for performance investigation; incremented by the block NF.
inline long nf_steps = 0;
inline long nf_support = 0;
inline long nf_head_degree = 0;
} // namespace debug

namespace detail {

/// Leading term restricted to the first `lead_rank` positions. Components
/// beyond the boundary are carriers (transform rows riding along with the
/// reduction); they never lead and never block termination.
inline std::optional<ModuleLeadingTerm> leading_within(const FreeModuleElement& e,
                                                       std::size_t lead_rank) {
    for (std::size_t i = 0; i < lead_rank && i < e.rank(); ++i)
        if (!e[i].is_zero()) return ModuleLeadingTerm{i, e[i].leading_monomial(), e[i].leading_coeff()};
    return std::nullopt;
}

inline long order_degree_within(const FreeModuleElement& e, std::size_t lead_rank) {
    long d = -1;
    for (std::size_t i = 0; i < lead_rank && i < e.rank(); ++i)
        d = std::max(d, e[i].order_degree());
    return d;
}

inline long ecart_within(const FreeModuleElement& e, const ModuleLeadingTerm& lt,
                         std::size_t lead_rank) {
    return order_degree_within(e, lead_rank) - e.ring().order().degree(lt.mono);
}

/// Divides by the rational content so all coefficients become coprime
/// integers; the positive scalar keeps every riding invariant intact.
inline FreeModuleElement primitive_part(const FreeModuleElement& e) {
    mpz_class num_gcd = 0, den_lcm = 1;
    bool any = false;
    for (const auto& comp : e.components()) {
        for (const auto& t : comp.terms()) {
            num_gcd = gcd(num_gcd, t.coeff.get_num());
            den_lcm = lcm(den_lcm, t.coeff.get_den());
            any = true;
        }
    }
    if (!any || (num_gcd == 1 && den_lcm == 1)) return e;
    return e.scaled(Rat(den_lcm, num_gcd)); // positive: gcd, lcm >= 1
}

} // namespace detail

/// Mora weak normal form, augmented-module form. Only the first
/// `lead_rank` positions participate in leading terms, divisibility and
/// the écart rule; any further positions are carriers that follow the
/// arithmetic (this is how transform rows, syzygy coordinates and lift
/// coordinates are computed without separate bookkeeping).
///
/// Under a local order the écart selection rule applies and intermediate
/// results join the reducer set, which makes the division terminate on
/// polynomial input. Each step cancels the lead term against a monic
/// reducer, so only the overlapping support is touched.
///
/// Returns the final element: its lead block is zero or has an
/// irreducible leading term. The result is a scalar multiple of a unit
/// multiple of the input modulo the basis span (callers are
/// scale-invariant).
inline FreeModuleElement mora_weak_normal_form_block(const FreeModuleElement& elem,
                                                     const std::vector<FreeModuleElement>& basis,
                                                     std::size_t lead_rank) {
    const PolyRing& ring = elem.ring();
    const bool local = ring.order().is_local();

    struct Reducer {
        bool from_basis;
        std::size_t index; // into basis or monic_intermediates
        ModuleLeadingTerm lt;
        long ecart;
    };
    std::vector<Reducer> reducers;
    std::vector<FreeModuleElement> monic_basis; // scaled copies where needed
    std::vector<FreeModuleElement> intermediates;
    reducers.reserve(basis.size());
    monic_basis.reserve(basis.size());
    for (const auto& g : basis) {
        if (g.ring() != ring) throw ContextMismatchError("basis element over a different ring/order");
        if (g.rank() != elem.rank()) throw ContextMismatchError("basis element rank mismatch");
        const auto lt = detail::leading_within(g, lead_rank);
        if (!lt) continue;
        monic_basis.push_back(lt->coeff == 1 ? g : g.scaled(Rat(1) / lt->coeff));
        reducers.push_back({true, monic_basis.size() - 1,
                            {lt->position, lt->mono, Rat(1)},
                            detail::ecart_within(g, *lt, lead_rank)});
    }

    FreeModuleElement h = elem;

    while (true) {
        const auto lt = detail::leading_within(h, lead_rank);
        if (!lt) break;
        int best = -1;
        long best_ecart = std::numeric_limits<long>::max();
        for (std::size_t i = 0; i < reducers.size(); ++i) {
            if (!reducers[i].lt.divides(*lt)) continue;
            if (reducers[i].ecart < best_ecart) {
                best = static_cast<int>(i);
                best_ecart = reducers[i].ecart;
            }
        }
        if (best < 0) break;

        const long h_ecart = detail::ecart_within(h, *lt, lead_rank);
        if (local && best_ecart > h_ecart) {
            intermediates.push_back(h.scaled(Rat(1) / lt->coeff));
            reducers.push_back({false, intermediates.size() - 1,
                                {lt->position, lt->mono, Rat(1)}, h_ecart});
        }

        const Reducer& t = reducers[static_cast<std::size_t>(best)];
        const FreeModuleElement& te = t.from_basis ? monic_basis[t.index] : intermediates[t.index];
        // Reducers are monic: the step subtracts LC(h)*m*t, touching only
        // the overlapping support.
        h = h - te.scaled(lt->mono.quotient(t.lt.mono), lt->coeff);
        ++debug::nf_steps;
        debug::nf_head_degree = lt->mono.degree();
        long sup = 0;
        for (const auto& c : h.components()) sup += static_cast<long>(c.num_terms());
        debug::nf_support = sup;
    }
    return h;
}

namespace detail {

/// But-for the carriers, identical storage discipline to the block NF:
/// intermediates are copied and their representation data updated, giving
/// the exact division certificate. Used by the public normal-form API and
/// its tests; the engine's hot paths use the augmented block form instead.
struct RecordedReducer {
    FreeModuleElement elem;
    ModuleLeadingTerm lt;
    long ecart;
    bool from_basis;
    std::size_t basis_index;
    Polynomial unit;
    std::vector<Polynomial> quotients;
};

} // namespace detail

/// Mora weak normal form with an exact division certificate.
inline FreeModuleElement mora_weak_normal_form(const FreeModuleElement& elem,
                                               const std::vector<FreeModuleElement>& basis,
                                               DivisionRecord* record = nullptr) {
    const PolyRing& ring = elem.ring();
    if (!record) return mora_weak_normal_form_block(elem, basis, elem.rank());
    const bool local = ring.order().is_local();

    std::vector<detail::RecordedReducer> reducers;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].ring() != ring)
            throw ContextMismatchError("basis element over a different ring/order");
        if (basis[i].rank() != elem.rank()) throw ContextMismatchError("basis element rank mismatch");
        if (basis[i].is_zero()) continue;
        reducers.push_back({basis[i], basis[i].leading(), basis[i].ecart(), true, i, {}, {}});
    }

    FreeModuleElement h = elem;
    Polynomial unit = Polynomial::constant(ring, Rat(1));
    std::vector<Polynomial> quotients(basis.size(), Polynomial::zero(ring));

    while (!h.is_zero()) {
        const ModuleLeadingTerm lt = h.leading();
        int best = -1;
        long best_ecart = std::numeric_limits<long>::max();
        for (std::size_t i = 0; i < reducers.size(); ++i) {
            if (!reducers[i].lt.divides(lt)) continue;
            if (reducers[i].ecart < best_ecart) {
                best = static_cast<int>(i);
                best_ecart = reducers[i].ecart;
            }
        }
        if (best < 0) break;

        const long h_ecart = h.ecart();
        if (local && best_ecart > h_ecart)
            reducers.push_back({h, lt, h_ecart, false, 0, unit, quotients});

        const detail::RecordedReducer& t = reducers[static_cast<std::size_t>(best)];
        const Rat c = lt.coeff / t.lt.coeff;
        const Monomial m = lt.mono.quotient(t.lt.mono);
        h = h - t.elem.scaled(m, c);
        const Polynomial cm = Polynomial::monomial(ring, m, c);
        if (t.from_basis) {
            quotients[t.basis_index] = quotients[t.basis_index] + cm;
        } else {
            unit = unit - cm * t.unit;
            for (std::size_t i = 0; i < quotients.size(); ++i)
                quotients[i] = quotients[i] - cm * t.quotients[i];
        }
    }

    record->unit = std::move(unit);
    record->quotients = std::move(quotients);
    return h;
}

/// Fully reduced normal form: no term of the result is divisible by any
/// basis leading term. Computed as a weak normal form on the head followed
/// by recursive weak normal forms on the tail, all through the recorded
/// (scale-exact) division so the relative coefficients are preserved. The
/// result is zero exactly when `elem` lies in the submodule generated by
/// `basis` over the local ring (for a standard basis), and is the
/// canonical standard-monomial representative whenever that quotient is
/// finite-dimensional or the order is global.
inline FreeModuleElement mora_normal_form(const FreeModuleElement& elem,
                                          const std::vector<FreeModuleElement>& basis) {
    FreeModuleElement done(elem.ring(), elem.rank());
    DivisionRecord rec;
    FreeModuleElement cur = elem;
    while (true) {
        FreeModuleElement r = mora_weak_normal_form(cur, basis, &rec);
        if (r.is_zero()) break;
        done = done + r.leading_element();
        cur = r.drop_leading();
        if (cur.is_zero()) break;
    }
    return done;
}

/// Polynomial (rank-1) convenience overloads.
inline Polynomial mora_weak_normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                                        DivisionRecord* record = nullptr) {
    std::vector<FreeModuleElement> b;
    b.reserve(basis.size());
    for (const auto& g : basis) b.push_back(FreeModuleElement::from_poly(g));
    return mora_weak_normal_form(FreeModuleElement::from_poly(p), b, record)[0];
}

inline Polynomial mora_normal_form(const Polynomial& p, const std::vector<Polynomial>& basis) {
    std::vector<FreeModuleElement> b;
    b.reserve(basis.size());
    for (const auto& g : basis) b.push_back(FreeModuleElement::from_poly(g));
    return mora_normal_form(FreeModuleElement::from_poly(p), b)[0];
}

} // namespace vfindex
