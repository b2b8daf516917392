#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "jetalg/gl2.hpp"
#include "jetalg/sweep.hpp"
#include "jetalg/vector_fields.hpp"
#include "jetalg/weyl.hpp"

namespace jetalg {

/// Which piece of t^a C[t1^{+-1}, t2^{+-1}] the module is.
enum class Variant { poly, laurent, quotient };

inline std::string to_string(Variant v) {
    switch (v) {
        case Variant::poly: return "poly";
        case Variant::laurent: return "laurent";
        case Variant::quotient: return "quotient";
    }
    return "?";
}

inline Variant parse_variant(const std::string& s) {
    if (s == "poly") return Variant::poly;
    if (s == "laurent") return Variant::laurent;
    if (s == "quotient") return Variant::quotient;
    throw InvalidConfig("unknown variant: " + s);
}

/// Weight D-module with basis t^{a+n}:
///   poly      t1^{a1} C[t1^{+-1}, t2]                  (n2 >= 0)
///   laurent   t^a C[t1^{+-1}, t2^{+-1}]                (any n2)
///   quotient  laurent (a2 = 0) modulo poly             (n2 < 0 represents its class)
class WeightDMod {
public:
    WeightDMod(Rat a1, Rat a2, Variant variant) : a1_(std::move(a1)), a2_(std::move(a2)), variant_(variant) {
        if (variant_ != Variant::laurent) {
            if (a2_.get_den() != 1)
                throw InvalidConfig("poly and quotient variants need an integral a2");
            a2_ = 0;
        }
    }

    [[nodiscard]] const Rat& a1() const { return a1_; }
    [[nodiscard]] const Rat& a2() const { return a2_; }
    [[nodiscard]] Variant variant() const { return variant_; }

    [[nodiscard]] bool contains(Exp n2) const {
        switch (variant_) {
            case Variant::poly: return n2 >= 0;
            case Variant::quotient: return n2 < 0;
            case Variant::laurent: return true;
        }
        return false;
    }

    [[nodiscard]] std::string describe() const {
        return to_string(variant_) + " a=(" + rat_to_string(a1_) + "," + rat_to_string(a2_) + ")";
    }

private:
    Rat a1_;
    Rat a2_;
    Variant variant_;
};

/// Offset n of the basis vector t^{a+n}.
struct Shift {
    Exp n1 = 0;
    Exp n2 = 0;

    auto operator<=>(const Shift&) const = default;
};

using PElem = LinComb<Shift>;

struct JetKey {
    Shift n;
    std::size_t j = 0;

    auto operator<=>(const JetKey&) const = default;
};

/// Element of M(P, V) = P (x) V on the basis t^{a+n} (x) v_j.
using JetElem = LinComb<JetKey>;

inline PElem p_act(const DOp& x, const PElem& v, const WeightDMod& mod) {
    PElem out;
    for (const auto& [w, wc] : x) {
        for (const auto& [n, c] : v) {
            const Rat f = falling(Rat(mod.a1() + n.n1), w.c) * falling(Rat(mod.a2() + n.n2), w.d);
            if (sgn(f) == 0) continue;
            const Shift next{n.n1 + w.a - w.c, n.n2 + w.b - w.d};
            if (mod.contains(next.n2)) out.add(next, Rat(wc * c * f));
        }
    }
    return out;
}

/// Projection of the Laurent module (a2 = 0) onto the quotient by the polynomial part.
inline PElem project_quotient(const PElem& v) {
    PElem out;
    for (const auto& [n, c] : v)
        if (n.n2 < 0) out.add(n, c);
    return out;
}

/// t^m (g (x) v) = (t^m g) (x) v.
inline JetElem m_act_a(AMono m, const JetElem& w, const WeightDMod& mod) {
    JetElem out;
    for (const auto& [key, c] : w) {
        const Shift next{key.n.n1 + m.m1, key.n.n2 + m.m2};
        if (mod.contains(next.n2)) out.add(JetKey{next, key.j}, c);
    }
    return out;
}

inline JetElem m_act_poly(const APoly& f, const JetElem& w, const WeightDMod& mod) {
    JetElem out;
    for (const auto& [m, c] : f) out.add(m_act_a(m, w, mod), c);
    return out;
}

/// t^{m + [k=1] e1} d_k (g (x) v)
///   = (t^{m + [k=1] e1} d_k g) (x) v + m1 t^m g (x) E_1k v + m2 t^{m - e2} g (x) E_2k v.
inline JetElem m_act_vf(Axis k, AMono m, const JetElem& w, const WeightDMod& mod, const GL2Module& v) {
    if (m.m2 < 0) throw std::invalid_argument("m_act_vf needs m2 >= 0");
    const Exp dk = delta1(k);
    const DOp field = d_mono(m.m1 + dk, m.m2, dk, 1 - dk);
    const int col = index(k);
    JetElem out;
    for (const auto& [key, c] : w) {
        for (const auto& [n, pc] : p_act(field, PElem(key.n), mod)) out.add(JetKey{n, key.j}, Rat(c * pc));
        auto correction = [&](Exp weight, Shift n, const Matrix& rep) {
            if (weight == 0 || !mod.contains(n.n2)) return;
            for (const auto& [i, r] : rep.column(key.j)) out.add(JetKey{n, i}, Rat(c * weight * r));
        };
        correction(m.m1, Shift{key.n.n1 + m.m1, key.n.n2 + m.m2}, v.of(1, col));
        correction(m.m2, Shift{key.n.n1 + m.m1, key.n.n2 + m.m2 - 1}, v.of(2, col));
    }
    return out;
}

/// Action of an arbitrary vector field, by linearity over basis fields.
inline JetElem m_act_field(const VField& x, const JetElem& w, const WeightDMod& mod, const GL2Module& v) {
    JetElem out;
    for (Axis k : kAxes)
        for (const auto& [alpha, c] : x.coeff(k))
            out.add(m_act_vf(k, alpha - AMono{delta1(k), 0}, w, mod, v), c);
    return out;
}

inline std::string render(const JetElem& w) {
    std::vector<std::pair<Rat, std::string>> terms;
    for (auto it = w.terms().rbegin(); it != w.terms().rend(); ++it) {
        const auto& key = it->first;
        terms.emplace_back(it->second, "t^(a+(" + std::to_string(key.n.n1) + "," + std::to_string(key.n.n2) +
                                           "))(x)v" + std::to_string(key.j));
    }
    return render_terms(terms);
}

/// Basis vectors t^{a+n} (x) v_j sampled by the axiom checker: n1 in [-1, 1]
/// and three consecutive n2 values inside the variant's support.
inline std::vector<JetElem> sample_basis(const WeightDMod& mod, const GL2Module& v) {
    Exp n2_lo = 0;
    if (mod.variant() == Variant::quotient) n2_lo = -3;
    if (mod.variant() == Variant::laurent) n2_lo = -1;
    std::vector<JetElem> out;
    for (Exp n1 = -1; n1 <= 1; ++n1)
        for (Exp n2 = n2_lo; n2 < n2_lo + 3; ++n2)
            for (std::size_t j = 0; j < v.dim(); ++j) out.emplace_back(JetKey{Shift{n1, n2}, j});
    return out;
}

struct JetSweep {
    WeightDMod module;
    GL2Module rep;
    Grid grid;
};

/// Builds the jet-module axiom cases over the grid:
///   (i)   t^s (t^r w) = t^{s+r} w
///   (ii)  X (t^s w) = t^s (X w) + X(t^s) w
///   (iii) [X, Y] w = X (Y w) - Y (X w)
/// with X = t^{m+[k=1]e1} d_k for m in the m-grid, Y and t^s from the s-grid, t^r from the m-grid.
inline std::vector<Case> jet_axiom_cases(const JetSweep& sweep) {
    std::vector<Case> cases;
    const auto sp = std::make_shared<const JetSweep>(sweep);
    const auto& g = sweep.grid;
    const std::string tag = sweep.module.describe() + " V=" + sweep.rep.name();
    auto field_of = [](Axis k, AMono m) { return vf_basis(m + AMono{delta1(k), 0}, k); };
    auto mono_key = [](AMono m) { return "(" + std::to_string(m.m1) + "," + std::to_string(m.m2) + ")"; };

    for (Exp s1 = g.s1.lo; s1 <= g.s1.hi; ++s1)
        for (Exp s2 = g.s2.lo; s2 <= g.s2.hi; ++s2)
            for (Exp r1 = g.m1.lo; r1 <= g.m1.hi; ++r1)
                for (Exp r2 = g.m2.lo; r2 <= g.m2.hi; ++r2) {
                    const AMono s{s1, s2}, r{r1, r2};
                    cases.push_back({tag + " assoc s=" + mono_key(s) + " r=" + mono_key(r),
                                     [sp, s, r, tag, mono_key](std::vector<Failure>& out) {
                                         const auto& P = sp->module;
                                         for (const auto& w : sample_basis(P, sp->rep)) {
                                             expect_equal(out, tag + " assoc s=" + mono_key(s) + " r=" + mono_key(r) + " w=" + render(w),
                                                          m_act_a(s + r, w, P), m_act_a(s, m_act_a(r, w, P), P));
                                         }
                                     }});
                }

    for (Axis k : kAxes)
        for (Exp m1 = g.m1.lo; m1 <= g.m1.hi; ++m1)
            for (Exp m2 = g.m2.lo; m2 <= g.m2.hi; ++m2)
                for (Exp s1 = g.s1.lo; s1 <= g.s1.hi; ++s1)
                    for (Exp s2 = g.s2.lo; s2 <= g.s2.hi; ++s2) {
                        const AMono m{m1, m2}, s{s1, s2};
                        const std::string key = tag + " compat X" + std::to_string(index(k)) + mono_key(m) +
                                                " f=t^" + mono_key(s);
                        cases.push_back({key, [sp, k, m, s, key, field_of](std::vector<Failure>& out) {
                                             const auto& P = sp->module;
                                             const auto& V = sp->rep;
                                             const APoly xf = g_apply(field_of(k, m), a_mono(s.m1, s.m2));
                                             for (const auto& w : sample_basis(P, V)) {
                                                 const JetElem lhs = m_act_vf(k, m, m_act_a(s, w, P), P, V);
                                                 const JetElem rhs = m_act_a(s, m_act_vf(k, m, w, P, V), P) +
                                                                     m_act_poly(xf, w, P);
                                                 expect_equal(out, key + " w=" + render(w), lhs, rhs);
                                             }
                                         }});
                    }

    for (Axis k : kAxes)
        for (Axis l : kAxes)
            for (Exp m1 = g.m1.lo; m1 <= g.m1.hi; ++m1)
                for (Exp m2 = g.m2.lo; m2 <= g.m2.hi; ++m2)
                    for (Exp s1 = g.s1.lo; s1 <= g.s1.hi; ++s1)
                        for (Exp s2 = g.s2.lo; s2 <= g.s2.hi; ++s2) {
                            const AMono m{m1, m2}, s{s1, s2};
                            const std::string key = tag + " bracket X" + std::to_string(index(k)) + mono_key(m) +
                                                    " Y" + std::to_string(index(l)) + mono_key(s);
                            cases.push_back({key, [sp, k, l, m, s, key, field_of](std::vector<Failure>& out) {
                                                 const auto& P = sp->module;
                                                 const auto& V = sp->rep;
                                                 const VField br = g_bracket(field_of(k, m), field_of(l, s));
                                                 for (const auto& w : sample_basis(P, V)) {
                                                     const JetElem lhs = m_act_field(br, w, P, V);
                                                     const JetElem rhs =
                                                         m_act_vf(k, m, m_act_vf(l, s, w, P, V), P, V) -
                                                         m_act_vf(l, s, m_act_vf(k, m, w, P, V), P, V);
                                                     expect_equal(out, key + " w=" + render(w), lhs, rhs);
                                                 }
                                             }});
                        }
    return cases;
}

inline Report check_jet_axioms(const WeightDMod& mod, const GL2Module& v, const Grid& grid, unsigned jobs = 1) {
    Report report;
    report.check = "jet-axioms";
    report.config["grid"] = to_json(grid);
    report.config["module"] = mod.describe();
    report.config["rep"] = v.name();
    if (grid.m1.empty() || grid.m2.empty() || grid.s1.empty() || grid.s2.empty()) {
        report.cases = 0;
        return report;
    }
    execute(report, jet_axiom_cases(JetSweep{mod, v, grid}), jobs);
    return report;
}

}  // namespace jetalg
