#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace jetalg;

namespace {

Grid tiny() { return Grid{{-1, 1}, {0, 1}, {-1, 1}, {0, 1}}; }

CheckConfig config(const std::string& id, Grid grid = tiny(), unsigned jobs = 1) {
    CheckConfig cfg;
    cfg.check = id;
    cfg.grid = grid;
    cfg.jobs = jobs;
    return cfg;
}

std::string without_timing(nlohmann::ordered_json j) {
    if (j.contains("reports"))
        for (auto& r : j["reports"]) r.erase("elapsed_ms");
    else
        j.erase("elapsed_ms");
    return j.dump();
}

}  // namespace

TEST(Checks, CatalogPassesOnSmallGrid) {
    for (const auto& id : check_catalog()) {
        if (id == "negative-control") continue;
        const Report r = run_check(config(id));
        EXPECT_GT(r.cases, 0U) << id;
        EXPECT_TRUE(r.pass()) << id << ": " << (r.failures.empty() ? "" : r.failures.front().key + " expected " +
                                                                             r.failures.front().expected + " got " +
                                                                             r.failures.front().actual);
    }
}

TEST(Checks, NegativeControlFails) {
    const Report r = run_check(config("negative-control"));
    EXPECT_FALSE(r.pass());
    EXPECT_FALSE(r.expect_pass);
    EXPECT_TRUE(r.as_expected());
    EXPECT_FALSE(r.failures.empty());
}

TEST(Checks, StructureConstantCaseCount) {
    CheckConfig cfg = config("lemma-3.2", Grid{});
    cfg.jobs = 4;
    const Report r = run_check(cfg);
    EXPECT_EQ(r.cases, 3U * 7 * 7 * 4 * 4);
    EXPECT_TRUE(r.pass());
}

TEST(Checks, InvalidConfigurations) {
    Grid empty = tiny();
    empty.s1 = {2, 1};
    EXPECT_THROW(run_check(config("lemma-3.2", empty)), InvalidConfig);
    Grid negative = tiny();
    negative.m2 = {-1, 1};
    EXPECT_THROW(run_check(config("lemma-3.3", negative)), InvalidConfig);
    EXPECT_THROW(run_check(config("lemma-9.9")), UnknownCheck);
    CheckConfig bad = config("jet-axioms");
    bad.a2 = Rat(1, 3);
    bad.variant = Variant::poly;
    EXPECT_THROW(run_check(bad), InvalidConfig);
    bad.variant.reset();
    bad.a2.reset();
    bad.rep = "sym7";
    EXPECT_THROW(run_check(bad), InvalidConfig);
}

TEST(Checks, ExplicitModuleParameters) {
    CheckConfig cfg = config("jet-axioms");
    cfg.a1 = Rat(0);
    cfg.a2 = Rat(1, 3);
    cfg.variant = Variant::laurent;
    cfg.rep = "sym2";
    const Report r = run_check(cfg);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.config["modules"].size(), 1U);
}

TEST(Checks, DefaultJetSweepsCoverRequiredModules) {
    const auto sweeps = default_jet_sweeps(tiny());
    EXPECT_EQ(sweeps.size(), 14U);
    for (const auto& s : sweeps) {
        EXPECT_TRUE(s.rep.name() == "natural" || s.rep.name() == "adjoint");
        if (s.module.a2() != 0) {
            EXPECT_EQ(s.module.variant(), Variant::laurent);
        }
    }
}

TEST(Checks, ReportsAreDeterministicAcrossThreadCounts) {
    const auto one = to_json(run_all(tiny(), 1));
    const auto many = to_json(run_all(tiny(), 4));
    EXPECT_EQ(without_timing(one), without_timing(many));
    EXPECT_TRUE(one["pass"].get<bool>());
    const Report a = run_check(config("negative-control", tiny(), 1));
    const Report b = run_check(config("negative-control", tiny(), 3));
    EXPECT_EQ(without_timing(to_json(a)), without_timing(to_json(b)));
}

TEST(Checks, ReportJsonShape) {
    const auto j = to_json(run_check(config("lemma-3.3")));
    for (const char* field : {"check", "config", "cases", "failures", "elapsed_ms", "pass"})
        EXPECT_TRUE(j.contains(field)) << field;
    EXPECT_FALSE(j["config"].contains("jobs"));
    EXPECT_EQ(j["config"]["grid"]["m1"], nlohmann::ordered_json::array({-1, 1}));
}

TEST(Sweep, ExceptionsBecomeFailures) {
    std::vector<Case> cases = {{"ok", [](std::vector<Failure>&) {}},
                               {"boom", [](std::vector<Failure>&) { throw std::runtime_error("bad"); }}};
    const auto failures = run_cases(cases, 2);
    ASSERT_EQ(failures.size(), 1U);
    EXPECT_EQ(failures[0].key, "boom");
}
