#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace jetalg;
using jetalg::testing::Gen;
using jetalg::testing::t;

namespace {

LElem X(Axis k, Exp m1, Exp m2, const Rat& c = 1) { return x_basis(k, AMono{m1, m2}, c); }

/// Oracle: the bracket of vector fields pulled back through theta.
LElem bracket_via_fields(const LElem& x, const LElem& y) { return theta_inv(g_bracket(theta(x), theta(y))); }

}  // namespace

TEST(JetLie, StructureConstantExamples) {
    EXPECT_EQ(l_bracket(X(Axis::two, 0, 1), X(Axis::two, 0, 2)), X(Axis::two, 0, 2));
    const LElem expected = X(Axis::two, 2, 0, -2) + X(Axis::two, 3, 0, 2);
    EXPECT_EQ(l_bracket(X(Axis::one, 1, 0), X(Axis::two, 2, 0)), expected);
    EXPECT_EQ(bracket_via_fields(X(Axis::one, 1, 0), X(Axis::two, 2, 0)), expected);
    EXPECT_EQ(l_bracket(X(Axis::one, 1, 0), X(Axis::one, -1, 0)), X(Axis::one, 1, 0) + X(Axis::one, -1, 0));
    EXPECT_TRUE(X(Axis::one, 0, 0).empty());
    EXPECT_THROW(X(Axis::one, 0, -1), std::invalid_argument);
}

TEST(JetLie, StructureConstantsMatchFieldBrackets) {
    for (Axis k : kAxes)
        for (Axis l : kAxes)
            for (Exp m1 = -3; m1 <= 3; ++m1)
                for (Exp m2 = 0; m2 <= 3; ++m2)
                    for (Exp s1 = -3; s1 <= 3; ++s1)
                        for (Exp s2 = 0; s2 <= 3; ++s2) {
                            const LElem x = X(k, m1, m2), y = X(l, s1, s2);
                            ASSERT_EQ(l_bracket(x, y), bracket_via_fields(x, y))
                                << key_text({k, {m1, m2}}) << " " << key_text({l, {s1, s2}});
                        }
}

TEST(JetLie, Theta) {
    EXPECT_EQ(theta(X(Axis::one, 1, 0)), vf_basis({2, 0}, Axis::one) - vf_basis({1, 0}, Axis::one));
    EXPECT_EQ(theta(X(Axis::two, 0, 1)), vf_basis({0, 1}, Axis::two));
    EXPECT_TRUE(theta(LElem{}).is_zero());
}

TEST(JetLie, ThetaInverse) {
    EXPECT_EQ(theta_inv(vf_basis({2, 0}, Axis::one) - vf_basis({1, 0}, Axis::one)), X(Axis::one, 1, 0));
    EXPECT_EQ(theta_inv(vf_basis({0, 1}, Axis::two)), X(Axis::two, 0, 1));
    const VField f = vf_basis({2, 0}, Axis::one) - vf_basis({0, 0}, Axis::one);
    EXPECT_EQ(theta_inv(f), X(Axis::one, 1, 0) - X(Axis::one, -1, 0));
    EXPECT_EQ(theta(X(Axis::one, 1, 0) - X(Axis::one, -1, 0)), f);
    EXPECT_THROW(theta_inv(vf_basis({0, 0}, Axis::two)), NotInSubalgebra);
}

TEST(JetLie, LiftToGl2) {
    const GL2Module v = GL2Module::natural();
    EXPECT_EQ(lift_gl2(X(Axis::two, 0, 1), v), v.of(2, 2));
    EXPECT_EQ(lift_gl2(X(Axis::one, 3, 0), v), Rat(3) * v.of(1, 1));
    EXPECT_EQ(lift_gl2(X(Axis::one, 0, 5), v), Matrix(2));
}

TEST(JetLie, RepresentationsSatisfyRelations) {
    for (const auto& v : {GL2Module::natural(), GL2Module::adjoint(), GL2Module::symmetric_power(2)})
        EXPECT_TRUE(v.satisfies_relations()) << v.name();
    GL2Module bad = GL2Module::natural();
    bad.of(1, 2) += bad.of(1, 1);
    EXPECT_FALSE(bad.satisfies_relations());
}

TEST(JetLie, Rendering) {
    EXPECT_EQ(render(X(Axis::two, 2, 0, -2) + X(Axis::two, 3, 0, 2)), "2*X2(3,0) - 2*X2(2,0)");
    EXPECT_EQ(render(LElem{}), "0");
}

TEST(JetLie, Properties) {
    Gen g(51);
    for (int i = 0; i < 150; ++i) {
        const LElem x = g.lelem(), y = g.lelem(), z = g.lelem();
        ASSERT_TRUE(l_bracket(x, x).empty());
        ASSERT_EQ(l_bracket(x, y), -l_bracket(y, x));
        const LElem jac = l_bracket(x, l_bracket(y, z)) + l_bracket(y, l_bracket(z, x)) + l_bracket(z, l_bracket(x, y));
        ASSERT_TRUE(jac.empty());
        ASSERT_EQ(theta_inv(theta(x)), x);
        ASSERT_TRUE(in_m10_delta(theta(x)));
        ASSERT_EQ(theta(l_bracket(x, y)), g_bracket(theta(x), theta(y)));
        const VField f = g.field_m10();
        ASSERT_EQ(theta(theta_inv(f)), f);
        for (const auto& v : {GL2Module::natural(), GL2Module::adjoint(), GL2Module::symmetric_power(2)})
            ASSERT_EQ(lift_gl2(l_bracket(x, y), v), commutator(lift_gl2(x, v), lift_gl2(y, v)));
    }
}
