#pragma once

#include <algorithm>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"
#include "order.hpp"
#include "rational.hpp"

namespace vfindex {

/// Variable context plus active monomial order. Cheap to copy (shared
/// immutable payload); equality is by value.
class PolyRing {
public:
    PolyRing() : d_(std::make_shared<const Data>()) {}
    PolyRing(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::negdegrevlex())
        : d_(std::make_shared<const Data>(Data{std::move(vars), std::move(order)})) {
        for (const auto& v : vars_ref())
            if (v.empty()) throw ContextMismatchError("empty variable name");
    }

    std::size_t nvars() const { return d_->vars.size(); }
    const std::vector<std::string>& vars() const { return d_->vars; }
    const std::string& var_name(std::size_t i) const { return d_->vars[i]; }
    const MonomialOrder& order() const { return d_->order; }

    /// Same variables, different active order.
    PolyRing with_order(MonomialOrder order) const {
        return PolyRing(d_->vars, std::move(order));
    }

    bool operator==(const PolyRing& other) const {
        return d_ == other.d_ || (d_->vars == other.d_->vars && d_->order == other.d_->order);
    }
    bool operator!=(const PolyRing& other) const { return !(*this == other); }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < d_->vars.size(); ++i)
            if (d_->vars[i] == name) return static_cast<int>(i);
        return -1;
    }

private:
    struct Data {
        std::vector<std::string> vars;
        MonomialOrder order;
    };
    const std::vector<std::string>& vars_ref() const { return d_->vars; }
    std::shared_ptr<const Data> d_;
};

struct Term {
    Monomial mono;
    Rat coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept strictly descending under the ring's active monomial
/// order and never carry a zero coefficient; values are immutable after
/// construction and safe to share across threads.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(PolyRing ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const PolyRing& ring) { return Polynomial(ring); }

    static Polynomial constant(const PolyRing& ring, Rat c) {
        Polynomial p(ring);
        if (!vfindex::is_zero(c)) p.terms_.push_back({Monomial::one(ring.nvars()), std::move(c)});
        return p;
    }

    static Polynomial variable(const PolyRing& ring, std::size_t i) {
        Polynomial p(ring);
        p.terms_.push_back({Monomial::variable(ring.nvars(), i), Rat(1)});
        return p;
    }

    static Polynomial monomial(const PolyRing& ring, Monomial m, Rat c) {
        Polynomial p(ring);
        if (m.nvars() != ring.nvars())
            throw ContextMismatchError("monomial length does not match ring");
        if (!vfindex::is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    /// Builds from unsorted, possibly duplicated terms.
    static Polynomial from_terms(const PolyRing& ring, std::vector<Term> terms) {
        Polynomial p(ring);
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    const PolyRing& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Term& leading_term() const { return terms_.front(); }
    const Monomial& leading_monomial() const { return terms_.front().mono; }
    const Rat& leading_coeff() const { return terms_.front().coeff; }

    /// Everything below the leading term.
    Polynomial tail() const {
        Polynomial p(ring_);
        p.terms_.assign(terms_.begin() + 1, terms_.end());
        return p;
    }

    bool is_unit() const {
        // A unit of the local ring: nonzero constant term. Under a local
        // order that term is the leading one; under a global order a
        // polynomial is a unit only if it is a nonzero constant.
        if (terms_.empty()) return false;
        if (ring_.order().is_local()) return terms_.front().mono.is_one();
        return terms_.size() == 1 && terms_.front().mono.is_one();
    }

    bool has_nonzero_constant_term() const {
        for (const auto& t : terms_)
            if (t.mono.is_one()) return true;
        return false;
    }

    Rat constant_term() const {
        for (const auto& t : terms_)
            if (t.mono.is_one()) return t.coeff;
        return Rat(0);
    }

    long total_degree() const {
        long d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    /// Largest order-degree over the support (weighted for weighted orders).
    long order_degree() const {
        long d = -1;
        for (const auto& t : terms_) d = std::max(d, ring_.order().degree(t.mono));
        return d;
    }

    /// ecart = order-degree of the polynomial minus that of its leading
    /// monomial. Always 0 under a global order; under a local order it
    /// measures how far the tail reaches above the head.
    long ecart() const {
        if (terms_.empty()) return 0;
        return order_degree() - ring_.order().degree(terms_.front().mono);
    }

    Polynomial operator-() const {
        Polynomial p(ring_);
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({t.mono, -t.coeff});
        return p;
    }

    Polynomial operator+(const Polynomial& other) const {
        check_ring(other);
        Polynomial p(ring_);
        p.terms_.reserve(terms_.size() + other.terms_.size());
        const MonomialOrder& ord = ring_.order();
        auto a = terms_.begin(), ae = terms_.end();
        auto b = other.terms_.begin(), be = other.terms_.end();
        while (a != ae && b != be) {
            const auto cmp = ord.compare(a->mono, b->mono);
            if (cmp == std::strong_ordering::greater) {
                p.terms_.push_back(*a++);
            } else if (cmp == std::strong_ordering::less) {
                p.terms_.push_back(*b++);
            } else {
                Rat c = a->coeff + b->coeff;
                if (!vfindex::is_zero(c)) p.terms_.push_back({a->mono, std::move(c)});
                ++a;
                ++b;
            }
        }
        p.terms_.insert(p.terms_.end(), a, ae);
        p.terms_.insert(p.terms_.end(), b, be);
        return p;
    }

    Polynomial operator-(const Polynomial& other) const { return *this + (-other); }

    Polynomial operator*(const Polynomial& other) const {
        check_ring(other);
        Polynomial acc = zero(ring_);
        // Multiply the smaller support into the larger one term by term.
        const Polynomial& small = terms_.size() <= other.terms_.size() ? *this : other;
        const Polynomial& large = terms_.size() <= other.terms_.size() ? other : *this;
        for (const auto& t : small.terms_) acc = acc + large.scaled(t.mono, t.coeff);
        return acc;
    }

    Polynomial scaled(const Rat& c) const {
        Polynomial p(ring_);
        if (vfindex::is_zero(c)) return p;
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coeff * c});
        return p;
    }

    /// (c * m) * this; multiplying by a monomial preserves term order.
    Polynomial scaled(const Monomial& m, const Rat& c) const {
        Polynomial p(ring_);
        if (vfindex::is_zero(c)) return p;
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
        return p;
    }

    Polynomial monic() const {
        if (terms_.empty()) return *this;
        return scaled(Rat(1) / terms_.front().coeff);
    }

    /// Partial derivative with respect to variable i.
    Polynomial derivative(std::size_t i) const {
        Polynomial p(ring_);
        std::vector<Term> out;
        for (const auto& t : terms_) {
            const int e = t.mono[i];
            if (e == 0) continue;
            Monomial m = t.mono;
            m[i] = e - 1;
            out.push_back({std::move(m), t.coeff * e});
        }
        return from_terms(ring_, std::move(out));
    }

    /// Re-sorts the support under another ring's active order (same variables).
    Polynomial reordered(const PolyRing& ring) const {
        if (ring.vars() != ring_.vars())
            throw ContextMismatchError("reorder across different variable sets");
        Polynomial p(ring);
        p.terms_ = terms_;
        p.sort_terms();
        return p;
    }

    bool operator==(const Polynomial& other) const {
        if (ring_ != other.ring_) return false;
        if (terms_.size() != other.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != other.terms_[i].mono || terms_[i].coeff != other.terms_[i].coeff)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    /// Canonical text form; parsing it back yields the same polynomial.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& t : terms_) {
            const bool neg = sgn(t.coeff) < 0;
            if (first) {
                if (neg) out << "-";
                first = false;
            } else {
                out << (neg ? " - " : " + ");
            }
            Rat mag = abs(t.coeff);
            const bool coeff_one = (mag == 1);
            if (t.mono.is_one()) {
                out << rat_to_string(mag);
                continue;
            }
            if (!coeff_one) out << rat_to_string(mag) << "*";
            bool first_factor = true;
            for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
                const int e = t.mono[i];
                if (e == 0) continue;
                if (!first_factor) out << "*";
                first_factor = false;
                out << ring_.var_name(i);
                if (e > 1) out << "^" << e;
            }
        }
        return out.str();
    }

private:
    void check_ring(const Polynomial& other) const {
        if (ring_ != other.ring_)
            throw ContextMismatchError("mismatched variable contexts");
    }

    void sort_terms() {
        const MonomialOrder& ord = ring_.order();
        std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
            return ord.compare(a.mono, b.mono) == std::strong_ordering::greater;
        });
        // Merge duplicates, drop zeros.
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono) {
                out.back().coeff += t.coeff;
                if (vfindex::is_zero(out.back().coeff)) out.pop_back();
            } else if (!vfindex::is_zero(t.coeff)) {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

    void normalize() { sort_terms(); }

    PolyRing ring_;
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Rat& c, const Polynomial& p) { return p.scaled(c); }

} // namespace vfindex
