// jetalg: command-line front end for the exact verification sweeps.
//
//   jetalg verify <check-id> [--m1 lo..hi] [--m2 lo..hi] [--s1 lo..hi] [--s2 lo..hi]
//                 [--a1 p/q] [--a2 p/q] [--variant poly|laurent|quotient]
//                 [--rep natural|adjoint|sym2] [--jobs N] [--format json|text]
//   jetalg eval --in <A|D|g|smash|L|DL> "<expr>"
//   jetalg report --all [grid options] [--jobs N] [--format json|text]
//
// Exit codes: 0 pass, 1 a check failed, 2 usage or configuration error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "jetalg/jetalg.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

jetalg::Interval parse_interval(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw jetalg::InvalidConfig("range must look like lo..hi: " + text);
    try {
        std::size_t used = 0;
        const std::string lo = text.substr(0, dots);
        const std::string hi = text.substr(dots + 2);
        jetalg::Interval r{std::stoll(lo, &used), 0};
        if (used != lo.size()) throw std::invalid_argument(lo);
        r.hi = std::stoll(hi, &used);
        if (used != hi.size()) throw std::invalid_argument(hi);
        return r;
    } catch (const std::logic_error&) {
        throw jetalg::InvalidConfig("bad range: " + text);
    }
}

struct GridOptions {
    std::string m1 = "-3..3", m2 = "0..3", s1 = "-3..3", s2 = "0..3";

    void attach(CLI::App* cmd) {
        cmd->add_option("--m1", m1, "t1 exponent range of m (lo..hi)");
        cmd->add_option("--m2", m2, "t2 exponent range of m (lo..hi, lo >= 0)");
        cmd->add_option("--s1", s1, "t1 exponent range of s (lo..hi)");
        cmd->add_option("--s2", s2, "t2 exponent range of s (lo..hi, lo >= 0)");
    }

    [[nodiscard]] jetalg::Grid grid() const {
        return {parse_interval(m1), parse_interval(m2), parse_interval(s1), parse_interval(s2)};
    }
};

void print_text(const jetalg::Report& r) {
    std::cout << (r.pass() ? "PASS " : "FAIL ") << r.check << "  cases=" << r.cases
              << " failures=" << r.failures.size();
    if (!r.expect_pass) std::cout << " (expected to fail)";
    std::cout << "  " << static_cast<long long>(r.elapsed_ms) << " ms\n";
    std::size_t shown = 0;
    for (const auto& f : r.failures) {
        if (++shown > 10) {
            std::cout << "    ... " << (r.failures.size() - 10) << " more\n";
            break;
        }
        std::cout << "    " << f.key << "\n      expected: " << f.expected << "\n      actual:   " << f.actual << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the jet algebra identities for Der C[t1^{+-1}, t2]"};
    app.require_subcommand(1);

    unsigned jobs = 1;
    std::string format = "json";

    auto* verify = app.add_subcommand("verify", "run one check from the catalog");
    std::string check_id;
    GridOptions verify_grid;
    std::string a1, a2, variant, rep;
    verify->add_option("check", check_id, "check id")->required();
    verify_grid.attach(verify);
    verify->add_option("--a1", a1, "weight a1 (p/q)");
    verify->add_option("--a2", a2, "weight a2 (p/q)");
    verify->add_option("--variant", variant, "poly|laurent|quotient");
    verify->add_option("--rep", rep, "natural|adjoint|sym2");
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));

    auto* eval = app.add_subcommand("eval", "evaluate an expression in one of the algebras");
    std::string algebra, expr;
    eval->add_option("--in", algebra, "A|D|g|smash|L|DL")->required();
    eval->add_option("expr", expr, "expression")->required();

    auto* report = app.add_subcommand("report", "run the whole catalog");
    bool all = false;
    GridOptions report_grid;
    report->add_flag("--all", all, "run every check")->required();
    report_grid.attach(report);
    report->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    report->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*eval) {
            std::cout << jetalg::eval_expr(expr, jetalg::parse_algebra(algebra)) << "\n";
            return 0;
        }
        if (*verify) {
            jetalg::CheckConfig cfg;
            cfg.check = check_id;
            cfg.grid = verify_grid.grid();
            cfg.jobs = jobs;
            try {
                if (!a1.empty()) cfg.a1 = jetalg::parse_rat(a1);
                if (!a2.empty()) cfg.a2 = jetalg::parse_rat(a2);
            } catch (const std::invalid_argument& e) {
                throw jetalg::InvalidConfig(e.what());
            }
            if (!variant.empty()) cfg.variant = jetalg::parse_variant(variant);
            if (!rep.empty()) {
                if (rep != "natural" && rep != "adjoint" && rep != "sym2")
                    throw jetalg::InvalidConfig("unknown rep: " + rep);
                cfg.rep = rep;
            }
            const jetalg::Report r = jetalg::run_check(cfg);
            if (format == "json") {
                std::cout << jetalg::to_json(r).dump(2) << "\n";
            } else {
                print_text(r);
            }
            return r.pass() ? 0 : kExitFail;
        }
        const auto reports = jetalg::run_all(report_grid.grid(), jobs);
        bool ok = true;
        for (const auto& r : reports) ok = ok && r.as_expected();
        if (format == "json") {
            std::cout << jetalg::to_json(reports).dump(2) << "\n";
        } else {
            for (const auto& r : reports) print_text(r);
            std::cout << (ok ? "all checks behaved as expected\n" : "some checks did not behave as expected\n");
        }
        return ok ? 0 : kExitFail;
    } catch (const jetalg::SyntaxError& e) {
        std::cerr << e.what() << "\n";
    } catch (const jetalg::ElaborationError& e) {
        std::cerr << "elaboration error: " << e.what() << "\n";
    } catch (const jetalg::UnknownCheck& e) {
        std::cerr << e.what() << "\n";
    } catch (const jetalg::InvalidConfig& e) {
        std::cerr << "invalid config: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
    }
    return kExitUsage;
}
