#pragma once

#include <compare>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"

namespace vfindex {

enum class OrderKind {
    DegRevLex,     // global: every variable ranks above 1
    NegDegRevLex,  // local: lower total degree ranks higher, 1 is largest
    WeightedLocal, // local: lower weighted degree ranks higher
};

/// Total, multiplicative order on power products. Local kinds make the
/// monomial 1 the largest element, which realizes germ-at-0 semantics:
/// a polynomial with nonzero constant term becomes a unit.
class MonomialOrder {
public:
    MonomialOrder() : kind_(OrderKind::NegDegRevLex) {}
    explicit MonomialOrder(OrderKind kind) : kind_(kind) {
        if (kind == OrderKind::WeightedLocal)
            throw ContextMismatchError("weighted-local order requires weights");
    }
    MonomialOrder(OrderKind kind, std::vector<long> weights)
        : kind_(kind), weights_(std::move(weights)) {
        if (kind_ != OrderKind::WeightedLocal)
            throw ContextMismatchError("weights given for an unweighted order");
        for (long w : weights_)
            if (w <= 0) throw ContextMismatchError("order weights must be positive");
    }

    static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::DegRevLex); }
    static MonomialOrder negdegrevlex() { return MonomialOrder(OrderKind::NegDegRevLex); }
    static MonomialOrder weighted_local(std::vector<long> w) {
        return MonomialOrder(OrderKind::WeightedLocal, std::move(w));
    }

    OrderKind kind() const { return kind_; }
    bool is_local() const { return kind_ != OrderKind::DegRevLex; }
    const std::vector<long>& weights() const { return weights_; }

    /// Degree function driving the écart and the pair-selection strategy:
    /// total degree, or weighted total degree for weighted orders.
    long degree(const Monomial& m) const {
        return kind_ == OrderKind::WeightedLocal ? m.weighted_degree(weights_) : m.degree();
    }

    /// greater means `a` ranks above `b`.
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        if (a.nvars() != b.nvars())
            throw ContextMismatchError("compared monomials have different lengths");
        if (kind_ == OrderKind::WeightedLocal && weights_.size() != a.nvars())
            throw ContextMismatchError("weight vector length does not match variable count");
        const long da = degree(a), db = degree(b);
        if (da != db) {
            const bool a_first = is_local() ? (da < db) : (da > db);
            return a_first ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        // Reverse-lexicographic tiebreak: at the last differing exponent,
        // the smaller entry wins.
        for (std::size_t i = a.nvars(); i-- > 0;) {
            if (a[i] != b[i])
                return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return std::strong_ordering::equal;
    }

    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::greater;
    }

    bool operator==(const MonomialOrder& other) const {
        return kind_ == other.kind_ && weights_ == other.weights_;
    }
    bool operator!=(const MonomialOrder& other) const { return !(*this == other); }

private:
    OrderKind kind_;
    std::vector<long> weights_;
};

} // namespace vfindex
