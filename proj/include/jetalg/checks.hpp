#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "jetalg/jet_modules.hpp"
#include "jetalg/parser.hpp"
#include "jetalg/phi_rho.hpp"
#include "jetalg/smash.hpp"
#include "jetalg/sweep.hpp"

namespace jetalg {

struct UnknownCheck : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CheckConfig {
    std::string check;
    Grid grid;
    std::optional<Rat> a1;
    std::optional<Rat> a2;
    std::optional<Variant> variant;
    std::optional<std::string> rep;
    /// Worker threads; never part of the report.
    unsigned jobs = 1;

    [[nodiscard]] bool has_module_params() const { return a1 || a2 || variant || rep; }
};

inline const std::vector<std::string>& check_catalog() {
    static const std::vector<std::string> ids = {
        "weyl-assoc", "g-jacobi",   "lemma-3.1",           "lemma-3.2",  "lemma-3.3",       "lemma-3.4",
        "gl2-lift",   "thm-2.3-hom", "lemma-4.2-roundtrip", "jet-axioms", "negative-control"};
    return ids;
}

/// Weight modules and reps swept by jet-axioms when none is given explicitly.
inline std::vector<JetSweep> default_jet_sweeps(const Grid& grid) {
    std::vector<JetSweep> out;
    const std::vector<std::pair<Rat, Rat>> weights = {{Rat(1, 2), Rat(0)}, {Rat(0), Rat(1, 3)}, {Rat(2), Rat(0)}};
    for (const auto& [a1, a2] : weights)
        for (Variant v : {Variant::poly, Variant::laurent, Variant::quotient}) {
            if (a2.get_den() != 1 && v != Variant::laurent) continue;
            for (const char* rep : {"natural", "adjoint"})
                out.push_back({WeightDMod(a1, a2, v), gl2_module_by_name(rep), grid});
        }
    return out;
}

/// Natural module with rho(E12) replaced by E12 + E11, which breaks [E11, E12] = E12.
inline GL2Module corrupted_natural() {
    GL2Module v = GL2Module::natural();
    v.of(1, 2) += v.of(1, 1);
    return GL2Module("natural-corrupted", {v.of(1, 1), v.of(1, 2), v.of(2, 1), v.of(2, 2)});
}

namespace detail {

inline std::string mono_key(AMono m) { return "(" + std::to_string(m.m1) + "," + std::to_string(m.m2) + ")"; }
inline std::string x_key(Axis k, AMono m) { return "X" + std::to_string(index(k)) + mono_key(m); }

template <class F>
void for_grid(Interval r1, Interval r2, F&& f) {
    for (Exp a = r1.lo; a <= r1.hi; ++a)
        for (Exp b = r2.lo; b <= r2.hi; ++b) f(AMono{a, b});
}

/// Deterministic sample source; draws are reproducible across platforms.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    Exp uniform(Exp lo, Exp hi) {
        return lo + static_cast<Exp>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rat coeff() {
        Exp v = uniform(1, 3);
        if (uniform(0, 1)) v = -v;
        Rat r(v, uniform(1, 2));
        r.canonicalize();
        return r;
    }

    DOp dop() {
        DOp out;
        const Exp n = uniform(1, 3);
        for (Exp i = 0; i < n; ++i)
            out.add(DMono{uniform(-3, 3), uniform(0, 3), uniform(0, 3), uniform(0, 3)}, coeff());
        return out;
    }

    APoly apoly(Interval r1, Interval r2) {
        APoly out;
        const Exp n = uniform(1, 3);
        for (Exp i = 0; i < n; ++i) out.add(AMono{uniform(r1.lo, r1.hi), uniform(r2.lo, r2.hi)}, coeff());
        return out;
    }

    VField field(const Grid& g) { return {apoly(g.m1, g.m2), apoly(g.m1, g.m2)}; }

    /// Random field vanishing at (1,0).
    VField field_m10(const Grid& g) {
        VField x = field(g);
        for (Axis k : kAxes) x.coeff(k) -= a_const(a_eval_1_0(x.coeff(k)));
        return x;
    }

    /// Random element of m_{1,0}: p - p(1,0).
    APoly ideal_m10(const Grid& g) {
        APoly p = apoly(g.m1, g.m2);
        return p - a_const(a_eval_1_0(p));
    }

    SmashElem smash(const Grid& g) {
        SmashElem out;
        const Exp n = uniform(1, 3);
        for (Exp i = 0; i < n; ++i) {
            const AMono u{uniform(g.m1.lo, g.m1.hi), uniform(g.m2.lo, g.m2.hi)};
            const AMono a{uniform(g.s1.lo, g.s1.hi), uniform(g.s2.lo, g.s2.hi)};
            out.cover.add(SmashKey{u, a, uniform(0, 1) ? Axis::two : Axis::one}, coeff());
        }
        if (uniform(0, 1)) out.apart = apoly(g.m1, g.m2);
        return out;
    }

private:
    std::mt19937_64 rng_;
};

struct Family {
    Axis k;
    Axis l;
    const char* name;
};

/// The three bracket families of L: (X1,X1), (X2,X2), (X1,X2).
inline constexpr Family kFamilies[] = {{Axis::one, Axis::one, "a"}, {Axis::two, Axis::two, "b"}, {Axis::one, Axis::two, "c"}};

inline VField field_of(Axis k, AMono m) { return vf_basis(m + AMono{delta1(k), 0}, k); }

template <class T>
std::string render_opt(const std::optional<T>& x) {
    return x ? render(*x) : std::string("<not in span of X_k(m)>");
}

inline std::vector<Case> weyl_assoc_cases() {
    Sampler s(0x5eed0001);
    std::vector<Case> cases;
    for (int i = 0; i < 500; ++i) {
        auto data = std::make_shared<const std::array<DOp, 3>>(std::array<DOp, 3>{s.dop(), s.dop(), s.dop()});
        auto p = std::make_shared<const APoly>(s.apoly({-3, 3}, {0, 3}));
        const std::string key = "triple#" + std::to_string(i);
        cases.push_back({key + " assoc", [data, key](std::vector<Failure>& out) {
                             const auto& [x, y, z] = *data;
                             expect_equal(out, key + " (xy)z = x(yz)", d_mul(d_mul(x, y), z), d_mul(x, d_mul(y, z)));
                         }});
        cases.push_back({key + " faithful", [data, p, key](std::vector<Failure>& out) {
                             const auto& [x, y, z] = *data;
                             expect_equal(out, key + " (xy)p = x(yp)", d_apply(x, d_apply(y, *p)),
                                          d_apply(d_mul(x, y), *p));
                         }});
    }
    return cases;
}

inline std::vector<Case> g_jacobi_cases(const Grid& g) {
    Sampler s(0x5eed0002);
    std::vector<Case> cases;
    for (int i = 0; i < 500; ++i) {
        auto data = std::make_shared<const std::array<VField, 3>>(std::array<VField, 3>{s.field(g), s.field(g), s.field(g)});
        auto p = std::make_shared<const APoly>(s.apoly(g.s1, g.s2));
        const std::string key = "fields#" + std::to_string(i);
        cases.push_back({key, [data, p, key](std::vector<Failure>& out) {
                             const auto& [x, y, z] = *data;
                             const VField jac = g_bracket(x, g_bracket(y, z)) + g_bracket(y, g_bracket(z, x)) +
                                                g_bracket(z, g_bracket(x, y));
                             expect_equal(out, key + " jacobi", VField{}, jac);
                             expect_equal(out, key + " [X,Y]p = X(Yp) - Y(Xp)", g_apply(g_bracket(x, y), *p),
                                          g_apply(x, g_apply(y, *p)) - g_apply(y, g_apply(x, *p)));
                             expect_equal(out, key + " weyl embedding", g_to_weyl(g_bracket(x, y)),
                                          d_commutator(g_to_weyl(x), g_to_weyl(y)));
                         }});
    }
    for (Axis k : kAxes)
        for (Axis l : kAxes)
            for_grid(g.m1, g.m2, [&](AMono a) {
                for_grid(g.s1, g.s2, [&](AMono b) {
                    const std::string key = "closed-form [t^" + mono_key(a) + "d" + std::to_string(index(k)) + ", t^" +
                                            mono_key(b) + "d" + std::to_string(index(l)) + "]";
                    cases.push_back({key, [a, b, k, l, key](std::vector<Failure>& out) {
                                         VField closed;
                                         for (const auto& t : basis_bracket(a, k, b, l)) closed = closed + vf_basis(t.alpha, t.k, t.coeff);
                                         expect_equal(out, key, g_bracket(vf_basis(a, k), vf_basis(b, l)), closed);
                                     }});
                });
            });
    return cases;
}

inline std::vector<Case> commutation_cases(const Grid& g) {
    std::vector<Case> cases;
    for (Axis k : kAxes)
        for_grid(g.m1, g.m2, [&](AMono m) {
            const std::string key = x_key(k, m);
            cases.push_back({key, [k, m, key](std::vector<Failure>& out) {
                                 const SmashElem x = xk(k, m);
                                 const std::pair<const char*, SmashElem> others[] = {
                                     {"t1.1", embed_a(a_mono(1, 0))},
                                     {"t2.1", embed_a(a_mono(0, 1))},
                                     {"1.t1d1", embed_g(vf_basis({1, 0}, Axis::one))},
                                     {"1.d2", embed_g(vf_basis({0, 0}, Axis::two))}};
                                 const DLElem px = phi(x);
                                 for (const auto& [name, y] : others) {
                                     expect_equal(out, "[" + key + ", " + name + "]", SmashElem{}, smash_bracket(x, y));
                                     expect_equal(out, "[phi " + key + ", phi " + name + "]", DLElem{},
                                                  dl_bracket(px, phi(y)));
                                 }
                             }});
        });
    return cases;
}

inline std::vector<Case> structure_constant_cases(const Grid& g) {
    std::vector<Case> cases;
    for (const auto& fam : kFamilies)
        for_grid(g.m1, g.m2, [&](AMono m) {
            for_grid(g.s1, g.s2, [&](AMono s) {
                const std::string key = "(" + std::string(fam.name) + ") [" + x_key(fam.k, m) + ", " + x_key(fam.l, s) + "]";
                cases.push_back({key, [fam, m, s, key](std::vector<Failure>& out) {
                                     const SmashElem smash = smash_bracket(xk(fam.k, m), xk(fam.l, s));
                                     const LElem x = x_basis(fam.k, m);
                                     const LElem y = x_basis(fam.l, s);
                                     const std::optional<LElem> from_smash = smash_to_l(smash);
                                     const std::optional<LElem> structure = l_bracket(x, y);
                                     const std::optional<LElem> pullback = theta_inv(g_bracket(theta(x), theta(y)));
                                     expect_equal(out, key + " smash vs structure", render_opt(structure), render_opt(from_smash));
                                     expect_equal(out, key + " structure vs theta", render_opt(structure), render_opt(pullback));
                                     expect_equal(out, key + " smash vs theta", render_opt(pullback), render_opt(from_smash));
                                     expect_equal(out, key + " smash rebuilt", xk(*structure), smash);
                                 }});
            });
        });
    return cases;
}

inline std::vector<Case> theta_cases(const Grid& g) {
    std::vector<Case> cases;
    for (const auto& fam : kFamilies)
        for_grid(g.m1, g.m2, [&](AMono m) {
            for_grid(g.s1, g.s2, [&](AMono s) {
                const std::string key = "theta[" + x_key(fam.k, m) + ", " + x_key(fam.l, s) + "]";
                cases.push_back({key, [fam, m, s, key](std::vector<Failure>& out) {
                                     const LElem x = x_basis(fam.k, m);
                                     const LElem y = x_basis(fam.l, s);
                                     expect_equal(out, key, g_bracket(theta(x), theta(y)), theta(l_bracket(x, y)));
                                 }});
            });
        });
    auto inverse_case = [&](Axis k, AMono m) {
        const std::string key = "theta_inv theta " + x_key(k, m);
        cases.push_back({key, [k, m, key](std::vector<Failure>& out) {
                             const LElem x = x_basis(k, m);
                             const VField tx = theta(x);
                             if (!in_m10_delta(tx)) out.push_back({key, "theta image in m10 Delta", render(tx)});
                             expect_equal(out, key, x, theta_inv(tx));
                         }});
    };
    for (Axis k : kAxes) {
        for_grid(g.m1, g.m2, [&](AMono m) { inverse_case(k, m); });
        for_grid(g.s1, g.s2, [&](AMono s) { inverse_case(k, s); });
    }
    Sampler sampler(0x5eed0003);
    for (int i = 0; i < 200; ++i) {
        auto x = std::make_shared<const VField>(sampler.field_m10(g));
        const std::string key = "theta theta_inv field#" + std::to_string(i);
        cases.push_back({key, [x, key](std::vector<Failure>& out) { expect_equal(out, key, *x, theta(theta_inv(*x))); }});
    }
    return cases;
}

inline std::vector<Case> gl2_projection_cases(const Grid& g) {
    std::vector<Case> cases;
    Sampler s(0x5eed0004);
    for (int i = 0; i < 300; ++i) {
        auto data = std::make_shared<const std::array<VField, 2>>(std::array<VField, 2>{s.field_m10(g), s.field_m10(g)});
        const std::string key = "pair#" + std::to_string(i);
        cases.push_back({key, [data, key](std::vector<Failure>& out) {
                             const auto& [x, y] = *data;
                             const VField br = g_bracket(x, y);
                             if (!in_m10_delta(br)) {
                                 out.push_back({key + " closure", "bracket in m10 Delta", render(br)});
                                 return;
                             }
                             expect_equal(out, key + " pi hom", gl2_bracket(pi_project(x), pi_project(y)), pi_project(br));
                         }});
    }
    for (int i = 0; i < 100; ++i) {
        const APoly f = a_mul(s.ideal_m10(g), s.ideal_m10(g));
        auto x = std::make_shared<const VField>(s.uniform(0, 1) ? VField{f, {}} : VField{{}, f});
        const std::string key = "square#" + std::to_string(i);
        cases.push_back({key, [x, key](std::vector<Failure>& out) { expect_equal(out, key + " kernel", GL2Elem{}, pi_project(*x)); }});
    }
    return cases;
}

inline std::vector<Case> gl2_lift_cases(const Grid& g, const std::vector<GL2Module>& reps) {
    std::vector<Case> cases;
    for (const auto& rep : reps) {
        auto v = std::make_shared<const GL2Module>(rep);
        cases.push_back({rep.name() + " relations", [v](std::vector<Failure>& out) {
                             if (!v->satisfies_relations())
                                 out.push_back({v->name() + " relations", "gl2 relations hold", "violated"});
                         }});
        for (const auto& fam : kFamilies)
            for_grid(g.m1, g.m2, [&](AMono m) {
                for_grid(g.s1, g.s2, [&](AMono s) {
                    const std::string key = rep.name() + " [" + x_key(fam.k, m) + ", " + x_key(fam.l, s) + "]";
                    cases.push_back({key, [v, fam, m, s, key](std::vector<Failure>& out) {
                                         const LElem x = x_basis(fam.k, m);
                                         const LElem y = x_basis(fam.l, s);
                                         expect_equal(out, key, commutator(lift_gl2(x, *v), lift_gl2(y, *v)),
                                                      lift_gl2(l_bracket(x, y), *v));
                                     }});
                });
            });
    }
    return cases;
}

/// phi-images carry only multiplication operators next to L.
inline void check_pure_coefficients(std::vector<Failure>& out, const std::string& key, const DLElem& x) {
    for (const auto& [lk, c] : x.part1)
        for (const auto& [w, wc] : c)
            if (w.diff_degree() != 0) out.push_back({key + " coefficient of " + key_text(lk), "multiplication operator", render(c)});
}

inline std::vector<Case> phi_hom_cases(const Grid& g) {
    std::vector<Case> cases;
    auto gen_key = [](Axis k, AMono m) { return "1.t^" + mono_key(m + AMono{delta1(k), 0}) + "d" + std::to_string(index(k)); };
    for (Axis k : kAxes)
        for (Axis l : kAxes)
            for_grid(g.m1, g.m2, [&](AMono m) {
                for_grid(g.s1, g.s2, [&](AMono s) {
                    const std::string key = "[" + gen_key(k, m) + ", " + gen_key(l, s) + "]";
                    cases.push_back({key, [k, l, m, s, key](std::vector<Failure>& out) {
                                         const SmashElem x = embed_g(field_of(k, m));
                                         const SmashElem y = embed_g(field_of(l, s));
                                         const DLElem px = phi(x), py = phi(y);
                                         check_pure_coefficients(out, key, px);
                                         check_pure_coefficients(out, key, py);
                                         expect_equal(out, key, phi(smash_bracket(x, y)), dl_bracket(px, py));
                                     }});
                });
            });
    for (Axis k : kAxes)
        for_grid(g.m1, g.m2, [&](AMono m) {
            for_grid(g.s1, g.s2, [&](AMono s) {
                const std::string key = "[" + gen_key(k, m) + ", t^" + mono_key(s) + ".1]";
                cases.push_back({key, [k, m, s, key](std::vector<Failure>& out) {
                                     const SmashElem x = embed_g(field_of(k, m));
                                     const SmashElem y = embed_a(a_mono(s.m1, s.m2));
                                     expect_equal(out, key, phi(smash_bracket(x, y)), dl_bracket(phi(x), phi(y)));
                                 }});
            });
        });
    return cases;
}

inline std::vector<Case> roundtrip_cases(const Grid& g) {
    std::vector<Case> cases;
    auto smash_case = [&](const std::string& key, SmashElem x) {
        auto px = std::make_shared<const SmashElem>(std::move(x));
        cases.push_back({key, [px, key](std::vector<Failure>& out) { expect_equal(out, "rho phi " + key, *px, rho(phi(*px))); }});
    };
    auto dl_case = [&](const std::string& key, DLElem y) {
        auto py = std::make_shared<const DLElem>(std::move(y));
        cases.push_back({key, [py, key](std::vector<Failure>& out) { expect_equal(out, "phi rho " + key, *py, phi(rho(*py))); }});
    };
    for (Axis k : kAxes)
        for_grid(g.m1, g.m2, [&](AMono m) {
            smash_case("1.t^" + mono_key(m + AMono{delta1(k), 0}) + "d" + std::to_string(index(k)), embed_g(field_of(k, m)));
        });
    for_grid(g.m1, g.m2, [&](AMono m) { smash_case("t^" + mono_key(m) + ".1", embed_a(a_mono(m.m1, m.m2))); });
    for (Axis k : kAxes) {
        dl_case("t" + std::to_string(index(k)) + "(x)1", dl_from_d(d_t(k)));
        dl_case("d" + std::to_string(index(k)) + "(x)1", dl_from_d(d_partial(k)));
    }
    for_grid(g.m1, g.m2, [&](AMono m) { dl_case("t^" + mono_key(m) + "(x)1", dl_from_d(d_mono(m.m1, m.m2, 0, 0))); });
    for (Axis k : kAxes)
        for_grid(g.m1, g.m2, [&](AMono m) {
            if (!m.is_zero()) dl_case("1(x)" + x_key(k, m), dl_from_l(x_basis(k, m)));
        });
    Sampler s(0x5eed0005);
    for (int i = 0; i < 100; ++i) smash_case("random#" + std::to_string(i), s.smash(g));
    return cases;
}

inline Report make_report(const CheckConfig& cfg) {
    Report r;
    r.check = cfg.check;
    r.config["grid"] = to_json(cfg.grid);
    return r;
}

}  // namespace detail

/// Runs one catalog check over the configured grid.
inline Report run_check(const CheckConfig& cfg) {
    using namespace detail;
    const auto& ids = check_catalog();
    if (std::find(ids.begin(), ids.end(), cfg.check) == ids.end()) throw UnknownCheck("unknown check: " + cfg.check);
    cfg.grid.validate();
    const Grid& g = cfg.grid;
    Report r = make_report(cfg);
    std::vector<Case> cases;

    if (cfg.check == "weyl-assoc") {
        cases = weyl_assoc_cases();
    } else if (cfg.check == "g-jacobi") {
        cases = g_jacobi_cases(g);
    } else if (cfg.check == "lemma-3.1") {
        cases = commutation_cases(g);
    } else if (cfg.check == "lemma-3.2") {
        cases = structure_constant_cases(g);
    } else if (cfg.check == "lemma-3.3") {
        cases = theta_cases(g);
    } else if (cfg.check == "lemma-3.4") {
        cases = gl2_projection_cases(g);
    } else if (cfg.check == "gl2-lift") {
        std::vector<GL2Module> reps;
        if (cfg.rep) {
            reps.push_back(gl2_module_by_name(*cfg.rep));
        } else {
            reps = {GL2Module::natural(), GL2Module::adjoint(), GL2Module::symmetric_power(2)};
        }
        auto names = nlohmann::ordered_json::array();
        for (const auto& v : reps) names.push_back(v.name());
        r.config["reps"] = names;
        cases = gl2_lift_cases(g, reps);
    } else if (cfg.check == "thm-2.3-hom") {
        cases = phi_hom_cases(g);
    } else if (cfg.check == "lemma-4.2-roundtrip") {
        cases = roundtrip_cases(g);
    } else if (cfg.check == "jet-axioms" || cfg.check == "negative-control") {
        std::vector<JetSweep> sweeps;
        if (cfg.check == "negative-control") {
            sweeps.push_back({WeightDMod(Rat(1, 2), Rat(0), Variant::poly), corrupted_natural(), g});
            r.expect_pass = false;
        } else if (cfg.has_module_params()) {
            try {
                sweeps.push_back({WeightDMod(cfg.a1.value_or(Rat(1, 2)), cfg.a2.value_or(Rat(0)),
                                             cfg.variant.value_or(Variant::poly)),
                                  gl2_module_by_name(cfg.rep.value_or("natural")), g});
            } catch (const std::invalid_argument& e) {
                throw InvalidConfig(e.what());
            }
        } else {
            sweeps = default_jet_sweeps(g);
        }
        auto modules = nlohmann::ordered_json::array();
        for (const auto& s : sweeps) {
            modules.push_back(s.module.describe() + " V=" + s.rep.name());
            auto more = jet_axiom_cases(s);
            std::move(more.begin(), more.end(), std::back_inserter(cases));
        }
        r.config["modules"] = modules;
    }
    execute(r, cases, cfg.jobs);
    return r;
}

/// Runs the whole catalog with a shared grid.
inline std::vector<Report> run_all(const Grid& grid, unsigned jobs) {
    std::vector<Report> out;
    for (const auto& id : check_catalog()) {
        CheckConfig cfg;
        cfg.check = id;
        cfg.grid = grid;
        cfg.jobs = jobs;
        out.push_back(run_check(cfg));
    }
    return out;
}

inline nlohmann::ordered_json to_json(const std::vector<Report>& reports) {
    nlohmann::ordered_json j;
    auto arr = nlohmann::ordered_json::array();
    bool ok = true;
    for (const auto& r : reports) {
        arr.push_back(to_json(r));
        ok = ok && r.as_expected();
    }
    j["reports"] = std::move(arr);
    j["pass"] = ok;
    return j;
}

}  // namespace jetalg
