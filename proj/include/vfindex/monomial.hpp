#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace vfindex {

/// Exponent vector of a power product. The length is fixed by the enclosing
/// ring context; all entries are non-negative.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial variable(std::size_t nvars, std::size_t i) {
        Monomial m(nvars);
        m.e_[i] = 1;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    int& operator[](std::size_t i) { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }

    long degree() const { return std::accumulate(e_.begin(), e_.end(), 0L); }

    long weighted_degree(const std::vector<long>& w) const {
        long d = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) d += w[i] * e_[i];
        return d;
    }

    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
    }

    bool divides(const Monomial& other) const {
        check_same_length(other);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > other.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        check_same_length(other);
        Monomial m(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + other.e_[i];
        return m;
    }

    /// this / other; requires other.divides(*this).
    Monomial quotient(const Monomial& other) const {
        check_same_length(other);
        Monomial m(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - other.e_[i];
        return m;
    }

    Monomial lcm(const Monomial& other) const {
        check_same_length(other);
        Monomial m(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = std::max(e_[i], other.e_[i]);
        return m;
    }

    bool coprime_with(const Monomial& other) const {
        check_same_length(other);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && other.e_[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& other) const { return e_ == other.e_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

private:
    void check_same_length(const Monomial& other) const {
        if (e_.size() != other.e_.size())
            throw ContextMismatchError("monomial length mismatch");
    }

    std::vector<int> e_;
};

} // namespace vfindex
