#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "jetalg/linear_combination.hpp"

namespace jetalg {

struct InvalidConfig : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Closed integer interval [lo, hi].
struct Interval {
    Exp lo = 0;
    Exp hi = 0;

    [[nodiscard]] bool empty() const { return lo > hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Exponent grid for sweeps: m ranges over m1 x m2, s over s1 x s2.
struct Grid {
    Interval m1{-3, 3};
    Interval m2{0, 3};
    Interval s1{-3, 3};
    Interval s2{0, 3};

    void validate() const {
        if (m1.empty() || m2.empty() || s1.empty() || s2.empty()) throw InvalidConfig("empty exponent range");
        if (m2.lo < 0 || s2.lo < 0) throw InvalidConfig("t2 exponent ranges must be nonnegative");
    }
};

inline nlohmann::ordered_json to_json(const Interval& r) { return nlohmann::ordered_json::array({r.lo, r.hi}); }

inline nlohmann::ordered_json to_json(const Grid& g) {
    nlohmann::ordered_json j;
    j["m1"] = to_json(g.m1);
    j["m2"] = to_json(g.m2);
    j["s1"] = to_json(g.s1);
    j["s2"] = to_json(g.s2);
    return j;
}

struct Failure {
    std::string key;
    std::string expected;
    std::string actual;
};

struct Report {
    std::string check;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    std::size_t cases = 0;
    std::vector<Failure> failures;
    double elapsed_ms = 0;
    /// False only for checks whose purpose is to be caught failing.
    bool expect_pass = true;

    [[nodiscard]] bool pass() const { return failures.empty(); }
    [[nodiscard]] bool as_expected() const { return pass() == expect_pass; }
};

inline nlohmann::ordered_json to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["config"] = r.config;
    j["cases"] = r.cases;
    auto fails = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) fails.push_back({{"key", f.key}, {"expected", f.expected}, {"actual", f.actual}});
    j["failures"] = std::move(fails);
    j["elapsed_ms"] = r.elapsed_ms;
    j["pass"] = r.pass();
    j["expect_pass"] = r.expect_pass;
    return j;
}

/// One unit of a sweep. `run` appends failures; exceptions count as failures.
struct Case {
    std::string key;
    std::function<void(std::vector<Failure>&)> run;
};

/// Runs cases on `jobs` threads. Failures come back in case order whatever
/// the thread count.
inline std::vector<Failure> run_cases(const std::vector<Case>& cases, unsigned jobs) {
    std::vector<std::vector<Failure>> results(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cases.size()) return;
            try {
                cases[i].run(results[i]);
            } catch (const std::exception& e) {
                results[i].push_back({cases[i].key, "no exception", std::string("exception: ") + e.what()});
            }
        }
    };
    jobs = std::max(1U, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }
    std::vector<Failure> out;
    for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
    return out;
}

/// Runs the cases and fills count, failures, and timing into `report`.
inline void execute(Report& report, const std::vector<Case>& cases, unsigned jobs) {
    const auto start = std::chrono::steady_clock::now();
    report.cases = cases.size();
    report.failures = run_cases(cases, jobs);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

/// Appends a failure when `expected != actual`.
template <class T>
void expect_equal(std::vector<Failure>& out, const std::string& key, const T& expected, const T& actual) {
    if (!(expected == actual)) out.push_back({key, render(expected), render(actual)});
}

inline void expect_equal(std::vector<Failure>& out, const std::string& key, const std::string& expected,
                         const std::string& actual) {
    if (expected != actual) out.push_back({key, expected, actual});
}

}  // namespace jetalg
