#include <gtest/gtest.h>

#include <random>

#include "vfindex/parser.hpp"

using namespace vfindex;

namespace {

PolyRing ring3(MonomialOrder ord = MonomialOrder::negdegrevlex()) {
    return PolyRing({"x", "y", "z"}, std::move(ord));
}

Polynomial random_poly(const PolyRing& ring, std::mt19937& rng, int max_terms = 5,
                       int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<Term> terms;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m(ring.nvars());
        for (std::size_t i = 0; i < ring.nvars(); ++i) m[i] = exp(rng);
        terms.push_back({m, Rat(coeff(rng))});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

} // namespace

TEST(Parser, BrieskornExample) {
    const auto ring = ring3();
    const Polynomial f = parse_polynomial("x^2 + y^7 + z^14", ring);
    EXPECT_EQ(f.num_terms(), 3u);
    EXPECT_EQ(f.to_string(), "x^2 + y^7 + z^14");
}

TEST(Parser, ZeroPolynomial) {
    const Polynomial z = parse_polynomial("0", PolyRing({"x"}));
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.to_string(), "0");
}

TEST(Parser, ExpansionIdentity) {
    const PolyRing ring({"x", "y"});
    const Polynomial p = parse_polynomial("(x+y)*(x-y)", ring);
    EXPECT_EQ(p, parse_polynomial("x^2 - y^2", ring));
}

TEST(Parser, RationalLiterals) {
    const PolyRing ring({"x"});
    const Polynomial p = parse_polynomial("3/4*x + 1/2", ring);
    // Local order: the constant monomial ranks highest, so it prints first.
    EXPECT_EQ(p.to_string(), "1/2 + 3/4*x");
    EXPECT_EQ(parse_polynomial("2/4", ring).constant_term(), Rat(1, 2));
}

TEST(Parser, LeadingMinus) {
    const PolyRing ring({"x"});
    const Polynomial p = parse_polynomial("-x^2", ring);
    EXPECT_EQ(p.to_string(), "-x^2");
    EXPECT_EQ(parse_polynomial(p.to_string(), ring), p);
}

TEST(Parser, SyntaxErrorCarriesPosition) {
    const PolyRing ring({"x"});
    try {
        parse_polynomial("x + + 2", ring);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
}

TEST(Parser, UndeclaredVariable) {
    EXPECT_THROW(parse_polynomial("x + q", PolyRing({"x"})), ParseError);
}

TEST(Parser, NegativeExponent) {
    EXPECT_THROW(parse_polynomial("x^-2", PolyRing({"x"})), ParseError);
}

TEST(Parser, TrailingGarbage) {
    EXPECT_THROW(parse_polynomial("x )", PolyRing({"x"})), ParseError);
}

TEST(Arith, PowerRule) {
    const auto ring = ring3();
    const Polynomial f = parse_polynomial("x^2 + y^7 + z^14", ring);
    EXPECT_EQ(f.derivative(0), parse_polynomial("2*x", ring));
    EXPECT_EQ(f.derivative(0).to_string(), "2*x");
}

TEST(Arith, CancellationDeletesZeroTerm) {
    const PolyRing ring({"x", "y"});
    const Polynomial s =
        parse_polynomial("x^2 - y^2", ring) + parse_polynomial("y^2", ring);
    EXPECT_EQ(s, parse_polynomial("x^2", ring));
    EXPECT_EQ(s.num_terms(), 1u);
}

TEST(Arith, BinomialSquare) {
    const PolyRing ring({"x", "y"});
    const Polynomial p = parse_polynomial("x+y", ring);
    EXPECT_EQ(p * p, parse_polynomial("x^2 + 2*x*y + y^2", ring));
}

TEST(Arith, MismatchedContextsThrow) {
    const Polynomial a = parse_polynomial("x", PolyRing({"x"}));
    const Polynomial b = parse_polynomial("y", PolyRing({"y"}));
    EXPECT_THROW(a + b, ContextMismatchError);
    EXPECT_THROW(a * b, ContextMismatchError);
}

TEST(Orders, LocalRanksLowDegreeHigher) {
    const MonomialOrder ord = MonomialOrder::negdegrevlex();
    const Monomial x({1, 0});
    const Monomial x2({2, 0});
    EXPECT_TRUE(ord.greater(x, x2));
    EXPECT_TRUE(ord.greater(Monomial::one(2), x)); // 1 is the largest monomial
}

TEST(Orders, DegRevLexVariableOrder) {
    const MonomialOrder ord = MonomialOrder::degrevlex();
    const Monomial x({1, 0});
    const Monomial y({0, 1});
    EXPECT_TRUE(ord.greater(x, y));
    EXPECT_TRUE(ord.greater(x, Monomial::one(2))); // global: variables above 1
}

TEST(Orders, WeightedLocalExample) {
    // weights (1,3): wdeg(xy) = 4, wdeg(x^2) = 2; lower degree ranks higher.
    const MonomialOrder ord = MonomialOrder::weighted_local({1, 3});
    const Monomial xy({1, 1});
    const Monomial x2({2, 0});
    EXPECT_TRUE(ord.greater(x2, xy));
}

TEST(Orders, LengthMismatchThrows) {
    const MonomialOrder ord = MonomialOrder::negdegrevlex();
    EXPECT_THROW(ord.compare(Monomial({1}), Monomial({1, 0})), ContextMismatchError);
}

TEST(Orders, TotalAndMultiplicative) {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> exp(0, 4);
    const std::vector<MonomialOrder> orders = {
        MonomialOrder::degrevlex(), MonomialOrder::negdegrevlex(),
        MonomialOrder::weighted_local({2, 1, 3})};
    for (const auto& ord : orders) {
        for (int it = 0; it < 500; ++it) {
            Monomial a(3), b(3), m(3);
            for (int i = 0; i < 3; ++i) {
                a[i] = exp(rng);
                b[i] = exp(rng);
                m[i] = exp(rng);
            }
            const auto ab = ord.compare(a, b);
            // Totality: equal only when identical.
            EXPECT_EQ(ab == std::strong_ordering::equal, a == b);
            // Antisymmetry.
            const auto ba = ord.compare(b, a);
            if (ab == std::strong_ordering::greater)
                EXPECT_EQ(ba, std::strong_ordering::less);
            // Multiplicativity: a > b implies m*a > m*b.
            EXPECT_EQ(ord.compare(a * m, b * m), ab);
        }
    }
}

TEST(Properties, RoundTripParsePrint) {
    std::mt19937 rng(987);
    const auto ring = ring3();
    for (int it = 0; it < 300; ++it) {
        const Polynomial p = random_poly(ring, rng);
        EXPECT_EQ(parse_polynomial(p.to_string(), ring), p) << p.to_string();
    }
}

TEST(Properties, RingLaws) {
    std::mt19937 rng(55);
    const auto ring = ring3();
    for (int it = 0; it < 120; ++it) {
        const Polynomial a = random_poly(ring, rng), b = random_poly(ring, rng),
                         c = random_poly(ring, rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + Polynomial::zero(ring), a);
        EXPECT_EQ(a * Polynomial::constant(ring, Rat(1)), a);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(Properties, DerivativeLinearityAndLeibniz) {
    std::mt19937 rng(77);
    const auto ring = ring3();
    for (int it = 0; it < 120; ++it) {
        const Polynomial a = random_poly(ring, rng), b = random_poly(ring, rng);
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_EQ((a + b).derivative(i), a.derivative(i) + b.derivative(i));
            EXPECT_EQ((a * b).derivative(i), a.derivative(i) * b + a * b.derivative(i));
        }
        // Mixed partials commute.
        EXPECT_EQ(a.derivative(0).derivative(1), a.derivative(1).derivative(0));
    }
}

TEST(Properties, CanonicalTermOrderIsDeterministic) {
    const auto ring = ring3();
    const Polynomial p = parse_polynomial("z^14 + x^2 + y^7", ring);
    const Polynomial q = parse_polynomial("x^2 + y^7 + z^14", ring);
    EXPECT_EQ(p.to_string(), q.to_string());
    // Local order: the lowest-degree monomial leads.
    EXPECT_EQ(p.leading_monomial(), Monomial({2, 0, 0}));
}

TEST(Properties, ReorderedKeepsValue) {
    const auto local = ring3();
    const auto global = ring3(MonomialOrder::degrevlex());
    const Polynomial p = parse_polynomial("x^2 + y^7 + z^14", local);
    const Polynomial q = p.reordered(global);
    EXPECT_EQ(q.leading_monomial(), Monomial({0, 0, 14}));
    EXPECT_EQ(q.reordered(local), p);
}
