#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kaehler.hpp"

namespace vfindex {

/// Everything the engine knows about one (germ, field) pair. Absent
/// optionals mean the quantity is undefined or was not requested for this
/// input class; `routes` records which identities produced each number.
struct IndexReport {
    std::size_t ambient_dim = 0; // N
    std::size_t codim = 0;       // k
    std::size_t dim = 0;         // n

    std::optional<unsigned long long> mu;
    std::optional<long long> ind_ph;
    std::optional<long long> ind_hom;
    std::optional<long long> ind_gsv;
    std::optional<long long> ind_sch;
    std::optional<long long> ind_virtual;
    std::vector<unsigned long long> homology; // h_0..h_n; empty = not computed

    bool gsv_equality_asserted = false;
    std::vector<std::string> routes;
};

inline long long sign_pow(std::size_t n) { return n % 2 == 0 ? 1 : -1; }

/// GSV index, computed through the homological index (they agree for
/// hypersurface germs). For k >= 2 the equality is an open question and
/// this refuses unless the caller opts into the homological value.
inline long long gsv_index(const VectorFieldGerm& v, const GermVariety& V,
                           ComputeControl* ctl = nullptr, bool allow_icis_homological = false) {
    if (V.codim() >= 2 && !allow_icis_homological)
        throw IcisEqualityUnknownError(
            "GSV/homological equality unknown for complete intersections with k >= 2; "
            "request the homological value explicitly");
    return homological_index(v, V, ctl);
}

/// Schwartz (radial) index via ind_GSV - (-1)^n * mu; mu is 0 for smooth
/// germs and the Milnor number for hypersurfaces. Unavailable for k >= 2.
inline long long schwartz_index(const VectorFieldGerm& v, const GermVariety& V,
                                ComputeControl* ctl = nullptr) {
    if (V.codim() >= 2)
        throw IcisEqualityUnknownError(
            "Schwartz index needs a Milnor number; not available for k >= 2");
    const unsigned long long mu =
        V.is_smooth_model() ? 0ULL : milnor_number(V.defining()[0], ctl);
    const long long gsv = gsv_index(v, V, ctl);
    return gsv - sign_pow(V.dim()) * static_cast<long long>(mu);
}

/// Virtual index: equal to the GSV index for k <= 1; for k >= 2 it is
/// reported as the homological value without asserting equality.
inline long long virtual_index(const VectorFieldGerm& v, const GermVariety& V,
                               ComputeControl* ctl = nullptr) {
    if (V.codim() >= 2) return homological_index(v, V, ctl);
    return gsv_index(v, V, ctl);
}

/// Assembles the full report and validates ind_GSV = ind_Sch + (-1)^n mu
/// before returning; a violation is an engine bug, never a result.
inline IndexReport full_report(const VectorFieldGerm& v, const GermVariety& V,
                               ComputeControl* ctl = nullptr) {
    IndexReport r;
    r.ambient_dim = V.ambient_dim();
    r.codim = V.codim();
    r.dim = V.dim();

    HomologyResult hom;
    const long long chi = homological_index(v, V, ctl, &hom);
    r.ind_hom = chi;
    r.homology = hom.dims;

    if (V.is_smooth_model()) {
        r.ind_ph = static_cast<long long>(poincare_hopf_index(v, ctl));
        if (*r.ind_ph != chi)
            throw InternalConsistencyError(
                "smooth reduction failed: homological index differs from Poincaré-Hopf");
        r.ind_gsv = chi;
        r.ind_sch = chi;
        r.ind_virtual = chi;
        r.gsv_equality_asserted = true;
        r.routes = {"ph=dim O/(v)", "hom=chi(Omega,v)", "smooth: gsv=sch=virtual=ph"};
    } else if (V.codim() == 1) {
        r.mu = milnor_number(V.defining()[0], ctl);
        r.ind_gsv = chi;
        r.ind_virtual = chi;
        r.ind_sch = chi - sign_pow(V.dim()) * static_cast<long long>(*r.mu);
        r.gsv_equality_asserted = true;
        r.routes = {"hom=chi(Omega,v)", "gsv=hom", "sch=gsv-(-1)^n*mu", "virtual=gsv"};
    } else {
        r.ind_virtual = chi;
        r.gsv_equality_asserted = false;
        r.routes = {"hom=chi(Omega,v)",
                    "icis: virtual reported as homological; gsv equality not asserted"};
    }

    // Thm-level identity, re-checked on every emitted report.
    if (r.ind_gsv && r.ind_sch) {
        const long long mu_eff = r.mu ? static_cast<long long>(*r.mu) : 0;
        if (*r.ind_gsv != *r.ind_sch + sign_pow(V.dim()) * mu_eff)
            throw InternalConsistencyError("index identity gsv = sch + (-1)^n mu violated");
    }
    return r;
}

/// One perturbation v' = v + eps*w of the conservation harness.
struct ConservationCase {
    Rat epsilon;
    bool certified = false; // (f_1..f_k, v'_1..v'_N) has finite local dimension
    bool conserved = false; // certified and the homological index is unchanged
    std::optional<long long> index;
    std::string note;
};

struct ConservationReport {
    long long base_index = 0;
    std::vector<ConservationCase> cases;
};

/// Law-of-conservation harness: for each epsilon, certifies that v + eps*w
/// keeps an algebraically isolated zero at the origin and, when certified,
/// checks that the homological index is unchanged. No attempt is made to
/// locate zeros away from the origin; those cases report as inconclusive.
inline ConservationReport conservation_check(const VectorFieldGerm& v, const VectorFieldGerm& w,
                                             const GermVariety& V, const std::vector<Rat>& epsilons,
                                             ComputeControl* ctl = nullptr) {
    if (!is_tangent(v, V, ctl)) throw NotTangentError("base field is not tangent to the germ");
    if (!is_tangent(w, V, ctl))
        throw NotTangentError("perturbation field is not tangent to the germ");

    ConservationReport rep;
    rep.base_index = homological_index(v, V, ctl);

    for (const Rat& eps : epsilons) {
        ConservationCase c;
        c.epsilon = eps;
        const VectorFieldGerm vp = v + w.scaled(eps);
        if (!is_tangent(vp, V, ctl))
            throw NotTangentError("perturbed field is not tangent to the germ");

        std::vector<Polynomial> gens = V.defining();
        for (const auto& comp : vp.components()) gens.push_back(comp);
        const QuotientDim d = detail::local_ideal_dimension(gens, V.ring(), ctl);
        if (!d.finite) {
            c.note = "inconclusive: perturbed zero set through the origin is not isolated";
            rep.cases.push_back(std::move(c));
            continue;
        }
        c.certified = true;
        c.index = homological_index(vp, V, ctl);
        if (*c.index == rep.base_index) {
            c.conserved = true;
            c.note = "index conserved";
        } else {
            c.note = "inconclusive: extra zeros appeared near the origin (index changed from " +
                     std::to_string(rep.base_index) + " to " + std::to_string(*c.index) + ")";
        }
        rep.cases.push_back(std::move(c));
    }
    return rep;
}

} // namespace vfindex
