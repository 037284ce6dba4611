#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace vfindex {

/// Exact rational scalar. GMP keeps values canonical (gcd(p,q)=1, q>0).
using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

/// Prints `p/q` with q > 0 and gcd(p,q) = 1, or just `p` when q = 1.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

/// Parses an integer or `p/q` literal. Throws ParseError on malformed input.
inline Rat rat_from_string(const std::string& text, std::size_t position_hint = 0) {
    mpq_t tmp;
    mpq_init(tmp);
    if (text.empty() || mpq_set_str(tmp, text.c_str(), 10) != 0) {
        mpq_clear(tmp);
        throw ParseError("malformed rational literal '" + text + "'", position_hint);
    }
    Rat r(tmp);
    mpq_clear(tmp);
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'", position_hint);
    r.canonicalize();
    return r;
}

} // namespace vfindex
