#pragma once

#include <optional>
#include <string>
#include <vector>

#include "presented_module.hpp"

namespace vfindex {

/// Germ at the origin of the hypersurface / complete intersection cut out
/// by `defining` (k polynomials vanishing at 0; k = 0 encodes a smooth
/// germ, the ambient space itself). n = N - k is the germ dimension.
class GermVariety {
public:
    GermVariety(PolyRing ring, std::vector<Polynomial> defining)
        : ring_(std::move(ring)), defining_(std::move(defining)) {
        if (ring_.nvars() == 0) throw ContextMismatchError("ambient dimension must be positive");
        if (defining_.size() > ring_.nvars())
            throw ContextMismatchError("more defining equations than ambient variables");
        for (const auto& f : defining_) {
            if (f.ring() != ring_) throw ContextMismatchError("defining polynomial ring mismatch");
            if (f.has_nonzero_constant_term())
                throw ContextMismatchError("defining polynomial does not vanish at the origin");
        }
    }

    static GermVariety smooth(PolyRing ring) { return GermVariety(std::move(ring), {}); }

    const PolyRing& ring() const { return ring_; }
    std::size_t ambient_dim() const { return ring_.nvars(); }       // N
    std::size_t codim() const { return defining_.size(); }          // k
    std::size_t dim() const { return ring_.nvars() - defining_.size(); } // n
    bool is_smooth_model() const { return defining_.empty(); }
    const std::vector<Polynomial>& defining() const { return defining_; }

private:
    PolyRing ring_;
    std::vector<Polynomial> defining_;
};

/// Holomorphic vector field germ: N ambient components vanishing at 0.
class VectorFieldGerm {
public:
    VectorFieldGerm(PolyRing ring, std::vector<Polynomial> components)
        : ring_(std::move(ring)), comps_(std::move(components)) {
        if (comps_.size() != ring_.nvars())
            throw ContextMismatchError("vector field needs one component per variable");
        for (const auto& c : comps_) {
            if (c.ring() != ring_) throw ContextMismatchError("component ring mismatch");
            if (c.has_nonzero_constant_term())
                throw ContextMismatchError("vector field does not vanish at the origin");
        }
    }

    const PolyRing& ring() const { return ring_; }
    std::size_t ambient_dim() const { return comps_.size(); }
    const std::vector<Polynomial>& components() const { return comps_; }
    const Polynomial& operator[](std::size_t i) const { return comps_[i]; }

    /// Directional derivative v(f) = sum_j v_j * df/dx_j.
    Polynomial apply(const Polynomial& f) const {
        Polynomial acc = Polynomial::zero(ring_);
        for (std::size_t j = 0; j < comps_.size(); ++j) acc = acc + comps_[j] * f.derivative(j);
        return acc;
    }

    VectorFieldGerm operator+(const VectorFieldGerm& other) const {
        std::vector<Polynomial> out;
        out.reserve(comps_.size());
        for (std::size_t i = 0; i < comps_.size(); ++i) out.push_back(comps_[i] + other.comps_[i]);
        return VectorFieldGerm(ring_, std::move(out));
    }

    VectorFieldGerm scaled(const Rat& c) const {
        std::vector<Polynomial> out;
        out.reserve(comps_.size());
        for (const auto& p : comps_) out.push_back(p.scaled(c));
        return VectorFieldGerm(ring_, std::move(out));
    }

    /// Multiplies every component by a ring element (e.g. a unit 1+x).
    VectorFieldGerm scaled(const Polynomial& u) const {
        std::vector<Polynomial> out;
        out.reserve(comps_.size());
        for (const auto& p : comps_) out.push_back(p * u);
        return VectorFieldGerm(ring_, std::move(out));
    }

private:
    PolyRing ring_;
    std::vector<Polynomial> comps_;
};

/// v = (w_1 x_1, ..., w_N x_N); tangent to every polynomial that is
/// quasihomogeneous with these weights.
inline VectorFieldGerm weighted_euler_field(const PolyRing& ring, const std::vector<long>& weights) {
    if (weights.size() != ring.nvars())
        throw ContextMismatchError("one weight per variable required");
    std::vector<Polynomial> comps;
    comps.reserve(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0) throw ContextMismatchError("weights must be positive");
        comps.push_back(Polynomial::variable(ring, i).scaled(Rat(weights[i])));
    }
    return VectorFieldGerm(ring, std::move(comps));
}

/// Weighted degree d with f(t^w x) = t^d f(x), when f is quasihomogeneous
/// for these weights; nullopt otherwise.
inline std::optional<long> quasihomogeneous_degree(const Polynomial& f,
                                                   const std::vector<long>& weights) {
    std::optional<long> d;
    for (const auto& t : f.terms()) {
        const long wd = t.mono.weighted_degree(weights);
        if (!d) d = wd;
        else if (*d != wd) return std::nullopt;
    }
    return d;
}

namespace detail {

inline PolyRing local_ring(const PolyRing& ring) {
    return ring.order().is_local() ? ring : ring.with_order(MonomialOrder::negdegrevlex());
}

/// Local quotient dimension of an ideal; the basis is computed under a
/// local order regardless of the ring's active one.
inline QuotientDim local_ideal_dimension(const std::vector<Polynomial>& gens, const PolyRing& ring,
                                         ComputeControl* ctl, StandardBasis* basis_out = nullptr) {
    const PolyRing lr = local_ring(ring);
    std::vector<Polynomial> gs;
    gs.reserve(gens.size());
    for (const auto& g : gens) gs.push_back(g.ring() == lr ? g : g.reordered(lr));
    StandardBasis b = standard_basis(gs, lr, ctl);
    QuotientDim d = quotient_dimension(b);
    if (basis_out) *basis_out = std::move(b);
    return d;
}

} // namespace detail

/// Finiteness of the Milnor algebra O/(df/dx_1, ..., df/dx_N); returns the
/// dimension when finite (the Milnor number candidate), nullopt otherwise.
inline std::optional<unsigned long long> isolated_hypersurface_dimension(
    const Polynomial& f, ComputeControl* ctl = nullptr) {
    std::vector<Polynomial> jac;
    for (std::size_t i = 0; i < f.ring().nvars(); ++i) jac.push_back(f.derivative(i));
    QuotientDim d = detail::local_ideal_dimension(jac, f.ring(), ctl);
    if (!d.finite) return std::nullopt;
    return d.value;
}

/// Milnor number of an isolated hypersurface singularity. Throws
/// NonIsolatedError naming a variable direction with no pure power among
/// the Jacobian ideal's leading terms when the singularity is not isolated.
inline unsigned long long milnor_number(const Polynomial& f, ComputeControl* ctl = nullptr) {
    if (f.has_nonzero_constant_term())
        throw ContextMismatchError("hypersurface germ must vanish at the origin");
    std::vector<Polynomial> jac;
    for (std::size_t i = 0; i < f.ring().nvars(); ++i) jac.push_back(f.derivative(i));
    QuotientDim d = detail::local_ideal_dimension(jac, f.ring(), ctl);
    if (!d.finite)
        throw NonIsolatedError("Milnor algebra is infinite-dimensional: singularity not isolated",
                               f.ring().var_name(d.infinite_variable));
    return d.value;
}

/// dim O/(v_1, ..., v_N): the local Poincaré-Hopf index of a holomorphic
/// field with an algebraically isolated zero in smooth ambient space.
inline unsigned long long poincare_hopf_index(const VectorFieldGerm& v,
                                              ComputeControl* ctl = nullptr) {
    QuotientDim d = detail::local_ideal_dimension(v.components(), v.ring(), ctl);
    if (!d.finite)
        throw NonIsolatedError("vector field zero is not algebraically isolated",
                               v.ring().var_name(d.infinite_variable));
    return d.value;
}

/// True iff v(f_i) lies in the ideal (f_1, ..., f_k) for every defining
/// equation: the field restricts to a field on the germ.
inline bool is_tangent(const VectorFieldGerm& v, const GermVariety& V,
                       ComputeControl* ctl = nullptr) {
    if (v.ring() != V.ring()) throw ContextMismatchError("field and germ over different rings");
    if (V.is_smooth_model()) return true;
    const PolyRing lr = detail::local_ring(V.ring());
    std::vector<Polynomial> gens;
    for (const auto& f : V.defining()) gens.push_back(f.ring() == lr ? f : f.reordered(lr));
    StandardBasis b = standard_basis(gens, lr, ctl);
    for (const auto& f : V.defining()) {
        Polynomial vf = v.apply(f);
        if (!membership(vf.ring() == lr ? vf : vf.reordered(lr), b)) return false;
    }
    return true;
}

} // namespace vfindex
