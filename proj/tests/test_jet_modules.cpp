#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace jetalg;
using jetalg::testing::dm;
using jetalg::testing::Gen;

namespace {

PElem p(Exp n1, Exp n2, const Rat& c = 1) { return PElem(Shift{n1, n2}, c); }
JetElem w(Exp n1, Exp n2, std::size_t j, const Rat& c = 1) { return JetElem(JetKey{Shift{n1, n2}, j}, c); }

/// Matrix column j of `rep` placed at shift n, scaled by c.
JetElem column_at(const Matrix& rep, std::size_t j, Shift n, const Rat& c) {
    JetElem out;
    for (const auto& [i, r] : rep.column(j)) out.add(JetKey{n, i}, Rat(c * r));
    return out;
}

Grid small_grid(Exp r1, Exp r2) { return Grid{{-r1, r1}, {0, r2}, {-r1, r1}, {0, r2}}; }

}  // namespace

TEST(JetModules, DModuleAction) {
    const WeightDMod poly(Rat(1, 2), 0, Variant::poly);
    EXPECT_EQ(p_act(dm(1, 0, 1, 0), p(0, 0), poly), p(0, 0, Rat(1, 2)));
    EXPECT_TRUE(p_act(dm(0, 0, 0, 1), p(0, 0), poly).empty());
    const WeightDMod laurent(Rat(1, 2), Rat(1, 3), Variant::laurent);
    EXPECT_EQ(p_act(dm(0, 0, 1, 0), p(0, 0), laurent), p(-1, 0, Rat(1, 2)));
    EXPECT_EQ(p_act(dm(0, 0, 0, 1), p(0, 0), laurent), p(0, -1, Rat(1, 3)));
}

TEST(JetModules, VariantsRequireIntegralA2) {
    EXPECT_THROW(WeightDMod(Rat(1, 2), Rat(1, 3), Variant::poly), InvalidConfig);
    EXPECT_THROW(WeightDMod(Rat(1, 2), Rat(1, 3), Variant::quotient), InvalidConfig);
    EXPECT_NO_THROW(WeightDMod(Rat(1, 2), Rat(1, 3), Variant::laurent));
    EXPECT_EQ(WeightDMod(0, 2, Variant::poly).a2(), 0);
    EXPECT_THROW(parse_variant("other"), InvalidConfig);
}

TEST(JetModules, VectorFieldActionExamples) {
    const WeightDMod mod(Rat(1, 2), 0, Variant::poly);
    const GL2Module v = GL2Module::natural();
    for (std::size_t j = 0; j < 2; ++j) {
        const JetElem g = w(1, 2, j);
        // t1 d1 acts on P only.
        EXPECT_EQ(m_act_vf(Axis::one, {0, 0}, g, mod, v), w(1, 2, j, Rat(3, 2)));
        // t1 t2 d2 picks up E12 and E22 corrections.
        const JetElem expected = w(2, 2, j, 2) + column_at(v.of(1, 2), j, Shift{2, 3}, 1) +
                                 column_at(v.of(2, 2), j, Shift{2, 2}, 1);
        EXPECT_EQ(m_act_vf(Axis::two, {1, 1}, g, mod, v), expected);
    }
    EXPECT_TRUE(m_act_vf(Axis::two, {1, 1}, JetElem{}, mod, v).empty());
}

TEST(JetModules, MultiplicationAction) {
    const WeightDMod quotient(0, 0, Variant::quotient);
    EXPECT_TRUE(m_act_a({0, 1}, w(0, -1, 0), quotient).empty());
    EXPECT_EQ(m_act_a({0, 1}, w(0, -2, 1), quotient), w(0, -1, 1));
    const WeightDMod poly(Rat(1, 2), 0, Variant::poly);
    EXPECT_EQ(m_act_a({0, 0}, w(3, 1, 1), poly), w(3, 1, 1));
    EXPECT_EQ(m_act_a({1, 0}, w(3, 1, 1), poly), w(4, 1, 1));
}

TEST(JetModules, EulerOperatorIsDiagonal) {
    for (Variant var : {Variant::poly, Variant::laurent, Variant::quotient}) {
        const WeightDMod mod(Rat(2), 0, var);
        for (const auto& e : sample_basis(mod, GL2Module::adjoint())) {
            const auto& [key, c] = *e.begin();
            const JetElem img = m_act_vf(Axis::one, {0, 0}, e, mod, GL2Module::adjoint());
            EXPECT_EQ(img, Rat(mod.a1() + key.n.n1) * e);
        }
    }
}

TEST(JetModules, QuotientProjectionIntertwines) {
    const WeightDMod laurent(0, 0, Variant::laurent);
    const WeightDMod quotient(0, 0, Variant::quotient);
    Gen g(71);
    for (int i = 0; i < 200; ++i) {
        PElem v;
        for (int j = 0; j < 3; ++j) v.add(Shift{g.pick(-3, 3), g.pick(-3, 3)}, g.coeff());
        const DOp x = g.dop(2);
        ASSERT_EQ(project_quotient(p_act(x, v, laurent)), p_act(x, project_quotient(v), quotient));
    }
}

TEST(JetModules, DModuleActionIsAlgebraAction) {
    Gen g(72);
    const WeightDMod mods[] = {WeightDMod(Rat(1, 2), 0, Variant::poly), WeightDMod(0, Rat(1, 3), Variant::laurent),
                               WeightDMod(2, 0, Variant::quotient)};
    for (const auto& mod : mods)
        for (int i = 0; i < 100; ++i) {
            const DOp x = g.dop(2), y = g.dop(2);
            PElem v;
            v.add(Shift{g.pick(-2, 2), mod.variant() == Variant::quotient ? g.pick(-3, -1) : g.pick(0, 2)}, 1);
            ASSERT_EQ(p_act(d_mul(x, y), v, mod), p_act(x, p_act(y, v, mod), mod)) << mod.describe();
        }
}

TEST(JetModules, AxiomsHoldOnSmallGrid) {
    const Report r = check_jet_axioms(WeightDMod(Rat(1, 2), 0, Variant::poly), GL2Module::natural(), small_grid(2, 2));
    EXPECT_GT(r.cases, 0U);
    EXPECT_TRUE(r.pass()) << (r.failures.empty() ? "" : r.failures.front().key);
}

TEST(JetModules, AxiomsHoldForOtherModules) {
    const Grid grid = small_grid(1, 1);
    for (const auto& sweep : {JetSweep{WeightDMod(0, Rat(1, 3), Variant::laurent), GL2Module::adjoint(), grid},
                              JetSweep{WeightDMod(2, 0, Variant::quotient), GL2Module::natural(), grid},
                              JetSweep{WeightDMod(Rat(1, 2), 0, Variant::poly), GL2Module::symmetric_power(2), grid}}) {
        const Report r = check_jet_axioms(sweep.module, sweep.rep, sweep.grid);
        EXPECT_TRUE(r.pass()) << sweep.module.describe() << " "
                              << (r.failures.empty() ? "" : r.failures.front().key);
    }
}

TEST(JetModules, EmptyRangeGivesEmptyPassingReport) {
    Grid grid = small_grid(1, 1);
    grid.m1 = {1, 0};
    const Report r = check_jet_axioms(WeightDMod(Rat(1, 2), 0, Variant::poly), GL2Module::natural(), grid);
    EXPECT_EQ(r.cases, 0U);
    EXPECT_TRUE(r.pass());
}

TEST(JetModules, CorruptedRepresentationBreaksBracketAxiom) {
    GL2Module bad = GL2Module::natural();
    bad.of(1, 2) += bad.of(1, 1);
    const Report r = check_jet_axioms(WeightDMod(Rat(1, 2), 0, Variant::poly), bad, small_grid(1, 1));
    ASSERT_FALSE(r.pass());
    bool bracket_failure = false;
    for (const auto& f : r.failures) {
        EXPECT_EQ(f.key.find(" assoc "), std::string::npos) << f.key;
        if (f.key.find(" bracket ") != std::string::npos) bracket_failure = true;
    }
    EXPECT_TRUE(bracket_failure);
}
