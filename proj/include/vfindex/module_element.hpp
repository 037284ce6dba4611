#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace vfindex {

/// Leading term of a free-module element: position, monomial, coefficient.
struct ModuleLeadingTerm {
    std::size_t position;
    Monomial mono;
    Rat coeff;

    /// Position-over-term divisibility: same position and monomial divides.
    bool divides(const ModuleLeadingTerm& other) const {
        return position == other.position && mono.divides(other.mono);
    }
};

/// Element of a free module R^rank over the polynomial ring. Rank-1
/// elements double as plain ring elements (ideals). Leading data follows
/// the position-over-term order: positions ranked by index (lower index
/// ranks higher), ties broken by the ring's monomial order.
class FreeModuleElement {
public:
    FreeModuleElement() = default;
    FreeModuleElement(PolyRing ring, std::size_t rank)
        : ring_(std::move(ring)), comps_(rank, Polynomial::zero(ring_)) {}
    FreeModuleElement(PolyRing ring, std::vector<Polynomial> comps)
        : ring_(std::move(ring)), comps_(std::move(comps)) {
        for (const auto& c : comps_)
            if (c.ring() != ring_) throw ContextMismatchError("component ring mismatch");
    }

    /// Wraps a single polynomial as a rank-1 element.
    static FreeModuleElement from_poly(const Polynomial& p) {
        return FreeModuleElement(p.ring(), std::vector<Polynomial>{p});
    }

    static FreeModuleElement unit_vector(const PolyRing& ring, std::size_t rank, std::size_t pos) {
        FreeModuleElement e(ring, rank);
        e.comps_[pos] = Polynomial::constant(ring, Rat(1));
        return e;
    }

    const PolyRing& ring() const { return ring_; }
    std::size_t rank() const { return comps_.size(); }
    const Polynomial& operator[](std::size_t i) const { return comps_[i]; }
    const std::vector<Polynomial>& components() const { return comps_; }

    bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// First nonzero component's leading term (position-over-term).
    ModuleLeadingTerm leading() const {
        for (std::size_t i = 0; i < comps_.size(); ++i)
            if (!comps_[i].is_zero())
                return {i, comps_[i].leading_monomial(), comps_[i].leading_coeff()};
        throw InternalConsistencyError("leading term of zero element");
    }

    std::size_t leading_position() const { return leading().position; }

    /// Largest order-degree across the support.
    long order_degree() const {
        long d = -1;
        for (const auto& c : comps_) d = std::max(d, c.order_degree());
        return d;
    }

    long ecart() const {
        if (is_zero()) return 0;
        return order_degree() - ring_.order().degree(leading().mono);
    }

    FreeModuleElement operator+(const FreeModuleElement& other) const {
        check(other);
        std::vector<Polynomial> out;
        out.reserve(comps_.size());
        for (std::size_t i = 0; i < comps_.size(); ++i) out.push_back(comps_[i] + other.comps_[i]);
        return FreeModuleElement(ring_, std::move(out));
    }

    FreeModuleElement operator-(const FreeModuleElement& other) const {
        check(other);
        std::vector<Polynomial> out;
        out.reserve(comps_.size());
        for (std::size_t i = 0; i < comps_.size(); ++i) out.push_back(comps_[i] - other.comps_[i]);
        return FreeModuleElement(ring_, std::move(out));
    }

    FreeModuleElement scaled(const Monomial& m, const Rat& c) const {
        std::vector<Polynomial> out;
        out.reserve(comps_.size());
        for (const auto& p : comps_) out.push_back(p.scaled(m, c));
        return FreeModuleElement(ring_, std::move(out));
    }

    FreeModuleElement scaled(const Polynomial& p) const {
        std::vector<Polynomial> out;
        out.reserve(comps_.size());
        for (const auto& q : comps_) out.push_back(q * p);
        return FreeModuleElement(ring_, std::move(out));
    }

    FreeModuleElement scaled(const Rat& c) const {
        std::vector<Polynomial> out;
        out.reserve(comps_.size());
        for (const auto& q : comps_) out.push_back(q.scaled(c));
        return FreeModuleElement(ring_, std::move(out));
    }

    FreeModuleElement monic() const {
        if (is_zero()) return *this;
        return scaled(Rat(1) / leading().coeff);
    }

    /// Everything except the (position-over-term) leading term.
    FreeModuleElement drop_leading() const {
        const auto lt = leading();
        std::vector<Polynomial> out = comps_;
        out[lt.position] = out[lt.position].tail();
        return FreeModuleElement(ring_, std::move(out));
    }

    /// The leading term alone, as an element.
    FreeModuleElement leading_element() const {
        const auto lt = leading();
        FreeModuleElement e(ring_, comps_.size());
        e.comps_[lt.position] = Polynomial::monomial(ring_, lt.mono, lt.coeff);
        return e;
    }

    bool operator==(const FreeModuleElement& other) const {
        return ring_ == other.ring_ && comps_ == other.comps_;
    }
    bool operator!=(const FreeModuleElement& other) const { return !(*this == other); }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (i) s += ", ";
            s += comps_[i].to_string();
        }
        return s + ")";
    }

private:
    void check(const FreeModuleElement& other) const {
        if (ring_ != other.ring_) throw ContextMismatchError("mismatched variable contexts");
        if (comps_.size() != other.comps_.size()) throw ContextMismatchError("rank mismatch");
    }

    PolyRing ring_;
    std::vector<Polynomial> comps_;
};

} // namespace vfindex
