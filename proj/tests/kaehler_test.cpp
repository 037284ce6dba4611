#include <gtest/gtest.h>

#include "vfindex/kaehler.hpp"
#include "vfindex/parser.hpp"

using namespace vfindex;

namespace {

const PolyRing R3({"x", "y", "z"});
const PolyRing R2({"x", "y"});
const PolyRing R1({"x"});

Polynomial P(const std::string& s, const PolyRing& r) { return parse_polynomial(s, r); }

bool relations_contain(const KaehlerModule& m, const FreeModuleElement& rel) {
    for (const auto& r : m.presentation.relations)
        if (r == rel) return true;
    return false;
}

} // namespace

TEST(KaehlerModule, CuspDegreeOne) {
    // V = {x^2 + y^3 = 0} in C^2, j = 1: generators dx, dy; relations
    // f*dx, f*dy and df = 2x*dx + 3y^2*dy.
    const GermVariety V(R2, {P("x^2 + y^3", R2)});
    const KaehlerModule m = build_kaehler_module(V, 1);
    EXPECT_EQ(m.presentation.rank, 2u);
    ASSERT_EQ(m.presentation.relations.size(), 3u);
    EXPECT_TRUE(relations_contain(m, FreeModuleElement(R2, {P("x^2 + y^3", R2), P("0", R2)})));
    EXPECT_TRUE(relations_contain(m, FreeModuleElement(R2, {P("0", R2), P("x^2 + y^3", R2)})));
    EXPECT_TRUE(relations_contain(m, FreeModuleElement(R2, {P("2*x", R2), P("3*y^2", R2)})));
}

TEST(KaehlerModule, DegreeZeroIsStructureRing) {
    const GermVariety V(R2, {P("x^2 + y^3", R2)});
    const KaehlerModule m = build_kaehler_module(V, 0);
    EXPECT_EQ(m.presentation.rank, 1u);
    ASSERT_EQ(m.presentation.relations.size(), 1u);
    EXPECT_EQ(m.presentation.relations[0], FreeModuleElement::from_poly(P("x^2 + y^3", R2)));
}

TEST(KaehlerModule, SmoothGermIsFree) {
    const GermVariety V = GermVariety::smooth(R3);
    for (int j = 0; j <= 3; ++j) {
        const KaehlerModule m = build_kaehler_module(V, j);
        EXPECT_TRUE(m.presentation.relations.empty());
    }
    EXPECT_EQ(build_kaehler_module(V, 2).presentation.rank, 3u); // C(3,2)
}

TEST(KaehlerModule, DegreeOutOfRange) {
    const GermVariety V(R2, {P("x^2 + y^3", R2)});
    EXPECT_THROW(build_kaehler_module(V, -1), ContextMismatchError);
    EXPECT_THROW(build_kaehler_module(V, 2), ContextMismatchError); // n = 1
}

TEST(Contraction, SignRuleBaseCase) {
    // v = (a, b) on C^2: i_v(dx^dy) = a*dy - b*dx.
    const VectorFieldGerm v(R2, {P("x^3", R2), P("y^5", R2)});
    const ContractionMap m = contraction(v, 2);
    ASSERT_EQ(m.source_rank, 1u);
    ASSERT_EQ(m.target_rank, 2u);
    EXPECT_EQ(m.matrix[0][0], P("-y^5", R2)); // dx coefficient
    EXPECT_EQ(m.matrix[1][0], P("x^3", R2));  // dy coefficient
}

TEST(Contraction, DegreeOneMatrixIsTheField) {
    const VectorFieldGerm v(R3, {P("x", R3), P("y", R3), P("z", R3)});
    const ContractionMap m = contraction(v, 1);
    ASSERT_EQ(m.target_rank, 1u);
    EXPECT_EQ(m.matrix[0][0], P("x", R3));
    EXPECT_EQ(m.matrix[0][1], P("y", R3));
    EXPECT_EQ(m.matrix[0][2], P("z", R3));
}

TEST(Contraction, ComposesToZero) {
    const VectorFieldGerm v(R3, {P("x^2 + y*z", R3), P("y - z^3", R3), P("x*y*z", R3)});
    for (int j = 2; j <= 3; ++j) {
        const auto prod = compose(contraction(v, j - 1), contraction(v, j), R3);
        for (const auto& row : prod)
            for (const auto& e : row) EXPECT_TRUE(e.is_zero());
    }
}

TEST(Contraction, DegreeOutOfRange) {
    const VectorFieldGerm v(R2, {P("x", R2), P("y", R2)});
    EXPECT_THROW(contraction(v, 0), ContextMismatchError);
    EXPECT_THROW(contraction(v, 3), ContextMismatchError);
}

TEST(Homology, SmoothPlaneKoszul) {
    // Smooth C^2, v = (x^2, y^3): h0 = 6, h1 = h2 = 0.
    const GermVariety V = GermVariety::smooth(R2);
    const VectorFieldGerm v(R2, {P("x^2", R2), P("y^3", R2)});
    HomologyResult hom;
    const long long chi = homological_index(v, V, nullptr, &hom);
    EXPECT_EQ(chi, 6);
    ASSERT_EQ(hom.dims.size(), 3u);
    EXPECT_EQ(hom.dims[0], 6u);
    EXPECT_EQ(hom.dims[1], 0u);
    EXPECT_EQ(hom.dims[2], 0u);
}

TEST(Homology, SmoothLineKoszul) {
    // Smooth C^1, v = (x): the Koszul complex of a regular element.
    const GermVariety V = GermVariety::smooth(R1);
    const VectorFieldGerm v(R1, {P("x", R1)});
    HomologyResult hom;
    const long long chi = homological_index(v, V, nullptr, &hom);
    EXPECT_EQ(chi, 1);
    ASSERT_EQ(hom.dims.size(), 2u);
    EXPECT_EQ(hom.dims[0], 1u);
    EXPECT_EQ(hom.dims[1], 0u);
}

TEST(Homology, SphereEulerAlternatingSum) {
    // V = {x^2+y^2+z^2 = 0}, v radial: chi = 1 + (-1)^2 * mu = 2.
    const GermVariety V(R3, {P("x^2 + y^2 + z^2", R3)});
    const VectorFieldGerm v(R3, {P("x", R3), P("y", R3), P("z", R3)});
    HomologyResult hom;
    const long long chi = homological_index(v, V, nullptr, &hom);
    EXPECT_EQ(chi, 2);
    ASSERT_EQ(hom.dims.size(), 3u);
    // h0 = dim O/(f, x, y, z) = 1.
    EXPECT_EQ(hom.dims[0], 1u);
    EXPECT_EQ(static_cast<long long>(hom.dims[0]) - static_cast<long long>(hom.dims[1]) +
                  static_cast<long long>(hom.dims[2]),
              2);
}

TEST(Homology, CuspEulerField) {
    const GermVariety V(R2, {P("x^2 + y^3", R2)});
    const VectorFieldGerm v(R2, {P("3*x", R2), P("2*y", R2)});
    HomologyResult hom;
    const long long chi = homological_index(v, V, nullptr, &hom);
    EXPECT_EQ(chi, -1); // 1 + (-1)^1 * 2; negative indices are legitimate
    ASSERT_EQ(hom.dims.size(), 2u);
    EXPECT_EQ(hom.dims[0], 1u); // dim O/(f, 3x, 2y)
    EXPECT_EQ(hom.dims[1], 2u);
}

TEST(Homology, NonTangentFieldRejected) {
    const GermVariety V(R3, {P("x^2 + y^2 + z^2", R3)});
    const VectorFieldGerm bad(R3, {P("y", R3), P("x", R3), P("z", R3)});
    EXPECT_THROW(homological_index(bad, V), NotTangentError);
}

TEST(Homology, NonIsolatedFieldZeroIsInfinite) {
    // v = (x, 0): zero set {x = 0} is a line through the origin.
    const GermVariety V = GermVariety::smooth(R2);
    const VectorFieldGerm v(R2, {P("x", R2), P("0", R2)});
    EXPECT_THROW(homological_index(v, V), InfiniteDimensionError);
}

TEST(Homology, UnitRescalingKeepsDimensions) {
    const GermVariety V(R2, {P("x^2 + y^3", R2)});
    const VectorFieldGerm v(R2, {P("3*x", R2), P("2*y", R2)});
    const Polynomial unit = P("1 + x", R2);
    const VectorFieldGerm uv(R2, {unit * v[0], unit * v[1]});
    HomologyResult a, b;
    EXPECT_EQ(homological_index(v, V, nullptr, &a), homological_index(uv, V, nullptr, &b));
    EXPECT_EQ(a.dims, b.dims);
}

TEST(Homology, FieldsEqualOnGermAgree) {
    // Adding f*(arbitrary field) leaves the induced contraction unchanged.
    const GermVariety V(R2, {P("x^2 + y^3", R2)});
    const VectorFieldGerm v(R2, {P("3*x", R2), P("2*y", R2)});
    const Polynomial f = V.defining()[0];
    const VectorFieldGerm shifted(R2, {v[0] + f * P("y^2", R2), v[1] + f * P("x - y", R2)});
    HomologyResult a, b;
    EXPECT_EQ(homological_index(v, V, nullptr, &a),
              homological_index(shifted, V, nullptr, &b));
    EXPECT_EQ(a.dims, b.dims);
}
