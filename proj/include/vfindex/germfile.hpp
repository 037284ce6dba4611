#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "germ.hpp"
#include "parser.hpp"

namespace vfindex {

/// Parsed germ definition file. Statement grammar (';'-terminated, `#`
/// starts a line comment):
///
///   vars x y z;
///   f: <poly>;            one line per defining equation (k of them; none = smooth)
///   v: <poly>, ..., <poly>;   N components
///   w: <poly>, ..., <poly>;   optional perturbation field (conserve)
///   weights: 7 2 1;       optional positive integers, one per variable
///   eps: 1/5 -1/5 1;      optional rationals for the conservation harness
struct GermInput {
    PolyRing ring;
    std::vector<Polynomial> defining;
    std::optional<VectorFieldGerm> v;
    std::optional<VectorFieldGerm> w;
    std::optional<std::vector<long>> weights;
    std::vector<Rat> epsilons;

    GermVariety variety() const { return GermVariety(ring, defining); }

    /// The field under study: `v:` when given, otherwise the weighted Euler
    /// field of `weights:`.
    VectorFieldGerm field() const {
        if (v) return *v;
        if (weights) return weighted_euler_field(ring, *weights);
        throw ParseError("input file declares neither 'v:' nor 'weights:'", 0);
    }

    VectorFieldGerm perturbation() const {
        if (!w) throw ParseError("this command needs a 'w:' field in the input file", 0);
        return *w;
    }
};

namespace detail {

struct Statement {
    std::string text;
    std::size_t offset; // into the comment-stripped source
};

inline std::vector<Statement> split_statements(const std::string& raw) {
    // Blank out comments, keep byte offsets stable.
    std::string src = raw;
    bool in_comment = false;
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] == '#') in_comment = true;
        if (src[i] == '\n') in_comment = false;
        if (in_comment) src[i] = ' ';
    }
    std::vector<Statement> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= src.size(); ++i) {
        if (i == src.size() || src[i] == ';') {
            std::size_t b = start, e = i;
            while (b < e && std::isspace(static_cast<unsigned char>(src[b]))) ++b;
            while (e > b && std::isspace(static_cast<unsigned char>(src[e - 1]))) --e;
            if (e > b) out.push_back({src.substr(b, e - b), b});
            start = i + 1;
        }
    }
    return out;
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

inline std::vector<std::pair<std::string, std::size_t>> split_commas(const std::string& s,
                                                                     std::size_t base) {
    std::vector<std::pair<std::string, std::size_t>> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size() && s[i] == '(') ++depth;
        if (i < s.size() && s[i] == ')') --depth;
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            out.push_back({s.substr(start, i - start), base + start});
            start = i + 1;
        }
    }
    return out;
}

inline Polynomial parse_rebased(const std::string& expr, const PolyRing& ring, std::size_t base) {
    try {
        return parse_polynomial(expr, ring);
    } catch (const ParseError& e) {
        throw ParseError(e.raw_message(), base + e.position());
    }
}

} // namespace detail

inline GermInput parse_germ_file(const std::string& text) {
    std::optional<PolyRing> ring;
    std::vector<Polynomial> defining;
    std::optional<std::vector<Polynomial>> v_comps, w_comps;
    std::optional<std::vector<long>> weights;
    std::vector<Rat> epsilons;

    for (const auto& st : detail::split_statements(text)) {
        const std::size_t colon = st.text.find(':');
        std::string head = colon == std::string::npos ? st.text.substr(0, st.text.find(' '))
                                                      : st.text.substr(0, colon);
        while (!head.empty() && std::isspace(static_cast<unsigned char>(head.back())))
            head.pop_back();
        const std::size_t body_off =
            colon == std::string::npos ? head.size() : colon + 1;
        const std::string body = st.text.substr(std::min(body_off, st.text.size()));
        const std::size_t body_base = st.offset + body_off;

        if (head == "vars") {
            if (ring) throw ParseError("duplicate 'vars' statement", st.offset);
            const auto names = detail::split_ws(body);
            if (names.empty()) throw ParseError("'vars' needs at least one name", st.offset);
            for (const auto& n : names) {
                if (!std::isalpha(static_cast<unsigned char>(n[0])) && n[0] != '_')
                    throw ParseError("bad variable name '" + n + "'", st.offset);
                for (char c : n)
                    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                        throw ParseError("bad variable name '" + n + "'", st.offset);
            }
            ring = PolyRing(names);
        } else if (head == "f") {
            if (!ring) throw ParseError("'vars' must come before 'f:'", st.offset);
            defining.push_back(detail::parse_rebased(body, *ring, body_base));
        } else if (head == "v" || head == "w") {
            if (!ring) throw ParseError("'vars' must come before '" + head + ":'", st.offset);
            std::vector<Polynomial> comps;
            for (const auto& [expr, off] : detail::split_commas(body, body_base))
                comps.push_back(detail::parse_rebased(expr, *ring, off));
            if (comps.size() != ring->nvars())
                throw ParseError("'" + head + ":' needs one component per variable", st.offset);
            (head == "v" ? v_comps : w_comps) = std::move(comps);
        } else if (head == "weights") {
            if (!ring) throw ParseError("'vars' must come before 'weights:'", st.offset);
            std::vector<long> ws;
            for (const auto& tok : detail::split_ws(body)) {
                const Rat r = rat_from_string(tok, body_base);
                if (r.get_den() != 1 || r <= 0)
                    throw ParseError("weights must be positive integers", body_base);
                ws.push_back(static_cast<long>(r.get_num().get_si()));
            }
            if (ws.size() != ring->nvars())
                throw ParseError("'weights:' needs one entry per variable", st.offset);
            weights = std::move(ws);
        } else if (head == "eps") {
            for (const auto& tok : detail::split_ws(body))
                epsilons.push_back(rat_from_string(tok, body_base));
        } else {
            throw ParseError("unknown statement '" + head + "'", st.offset);
        }
    }

    if (!ring) throw ParseError("missing 'vars' statement", 0);

    GermInput in{*ring, {}, {}, {}, weights, epsilons};
    try {
        in.defining = defining; // germ constraints checked by GermVariety
        if (v_comps) in.v = VectorFieldGerm(*ring, *v_comps);
        if (w_comps) in.w = VectorFieldGerm(*ring, *w_comps);
        // Validate defining polynomials vanish at the origin etc.
        GermVariety check(*ring, defining);
        (void)check;
    } catch (const ContextMismatchError& e) {
        throw ParseError(e.what(), 0);
    }
    return in;
}

} // namespace vfindex
