#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace jetalg;
using jetalg::testing::dm;
using jetalg::testing::Gen;
using jetalg::testing::t;

namespace {

/// Independent oracle: the action of a single monomial word applied factor by
/// factor, right to left, using only differentiation and multiplication in A.
APoly apply_word(const std::vector<DOp>& word, APoly p) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        APoly next;
        for (const auto& [w, c] : *it) {
            APoly q = p;
            for (Exp i = 0; i < w.d; ++i) q = a_derive(q, Axis::two);
            for (Exp i = 0; i < w.c; ++i) q = a_derive(q, Axis::one);
            next += c * a_mul(a_mono(w.a, w.b), q);
        }
        p = next;
    }
    return p;
}

}  // namespace

TEST(Weyl, CanonicalRelation) {
    EXPECT_EQ(d_mul(dm(0, 0, 1, 0), dm(1, 0, 0, 0)), dm(1, 0, 1, 0) + dm(0, 0, 0, 0));
    EXPECT_EQ(render(d_mul(dm(0, 0, 1, 0), dm(1, 0, 0, 0))), "t1*d1 + 1");
}

TEST(Weyl, DerivativePastInversePower) {
    const DOp expected = dm(-1, 0, 1, 0) - dm(-2, 0, 0, 0);
    for (Exp n = -3; n <= 3; ++n)
        ASSERT_EQ(apply_word({dm(0, 0, 1, 0), dm(-1, 0, 0, 0)}, t(n, 0)), d_apply(expected, t(n, 0))) << n;
    EXPECT_EQ(d_mul(dm(0, 0, 1, 0), dm(-1, 0, 0, 0)), expected);
}

TEST(Weyl, SecondDerivativePastT2) {
    const DOp expected = dm(0, 1, 0, 2) + dm(0, 0, 0, 1, 2);
    for (Exp n = 0; n <= 4; ++n)
        ASSERT_EQ(apply_word({dm(0, 0, 0, 2), dm(0, 1, 0, 0)}, t(0, n)), d_apply(expected, t(0, n))) << n;
    EXPECT_EQ(d_mul(dm(0, 0, 0, 2), dm(0, 1, 0, 0)), expected);
}

TEST(Weyl, Commutators) {
    EXPECT_TRUE(d_commutator(dm(1, 0, 1, 0), dm(0, 1, 0, 1)).empty());
    EXPECT_EQ(d_commutator(dm(0, 0, 0, 1), dm(0, 1, 0, 0)), d_one());
    for (Exp m1 = -3; m1 <= 3; ++m1)
        for (Exp m2 = 0; m2 <= 3; ++m2) {
            const DOp expected = dm(m1, m2, 0, 1, Rat(m1));
            // Oracle: the commutator as operators on every t^n in a window.
            for (Exp n1 = -2; n1 <= 2; ++n1)
                for (Exp n2 = 0; n2 <= 2; ++n2) {
                    const APoly p = t(n1, n2);
                    const APoly lhs = apply_word({dm(1, 0, 1, 0), dm(m1, m2, 0, 1)}, p) -
                                      apply_word({dm(m1, m2, 0, 1), dm(1, 0, 1, 0)}, p);
                    ASSERT_EQ(lhs, d_apply(expected, p));
                }
            ASSERT_EQ(d_commutator(dm(1, 0, 1, 0), dm(m1, m2, 0, 1)), expected);
        }
}

TEST(Weyl, ApplyToA) {
    for (Exp m1 = -2; m1 <= 2; ++m1) EXPECT_EQ(d_apply(dm(1, 0, 1, 0), t(m1, 2)), t(m1, 2, Rat(m1)));
    EXPECT_EQ(d_apply(dm(0, 0, 0, 1), t(0, 3)), t(0, 2, 3));
    EXPECT_EQ(d_apply(dm(0, 1, 1, 0), t(-1, 0)), t(-2, 1, -1));
}

TEST(Weyl, Rendering) {
    EXPECT_EQ(render(dm(-1, 0, 1, 0) - dm(-2, 0, 0, 0)), "t1^-1*d1 - t1^-2");
    EXPECT_EQ(render(DOp{}), "0");
}

TEST(Weyl, AssociativityAndFaithfulness) {
    Gen g(21);
    for (int i = 0; i < 200; ++i) {
        const DOp x = g.dop(), y = g.dop(), z = g.dop();
        ASSERT_EQ(d_mul(d_mul(x, y), z), d_mul(x, d_mul(y, z)));
        const APoly p = g.apoly();
        ASSERT_EQ(d_apply(d_mul(x, y), p), d_apply(x, d_apply(y, p)));
        const DOp jac = d_commutator(x, d_commutator(y, z)) + d_commutator(y, d_commutator(z, x)) +
                        d_commutator(z, d_commutator(x, y));
        ASSERT_TRUE(jac.empty());
    }
}

TEST(Weyl, DerivativeInT2NeverLeavesA) {
    Gen g(22);
    for (int i = 0; i < 200; ++i) {
        const APoly p = g.apoly();
        for (Exp d = 1; d <= 4; ++d)
            for (const auto& [m, c] : d_apply(dm(0, 0, 0, d), p)) ASSERT_GE(m.m2, 0);
    }
}
