#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "jetalg/algebra_a.hpp"
#include "jetalg/gl2.hpp"
#include "jetalg/weyl.hpp"

namespace jetalg {

struct NotInSubalgebra : std::domain_error {
    using std::domain_error::domain_error;
};

/// Derivation f1 d1 + f2 d2 of A.
struct VField {
    APoly f1;
    APoly f2;

    [[nodiscard]] const APoly& coeff(Axis k) const { return k == Axis::one ? f1 : f2; }
    APoly& coeff(Axis k) { return k == Axis::one ? f1 : f2; }
    [[nodiscard]] bool is_zero() const { return f1.empty() && f2.empty(); }

    friend VField operator+(VField a, const VField& b) { a.f1 += b.f1; a.f2 += b.f2; return a; }
    friend VField operator-(VField a, const VField& b) { a.f1 -= b.f1; a.f2 -= b.f2; return a; }
    friend VField operator*(const Rat& s, VField a) { a.f1 *= s; a.f2 *= s; return a; }
    friend bool operator==(const VField&, const VField&) = default;
};

/// Basis field t^alpha d_k.
inline VField vf_basis(AMono alpha, Axis k, const Rat& c = 1) {
    VField x;
    x.coeff(k) = a_mono(alpha.m1, alpha.m2, c);
    return x;
}

inline VField vf_lmul(const APoly& f, const VField& x) { return {a_mul(f, x.f1), a_mul(f, x.f2)}; }

inline APoly g_apply(const VField& x, const APoly& p) {
    return a_mul(x.f1, a_derive(p, Axis::one)) + a_mul(x.f2, a_derive(p, Axis::two));
}

/// [X, Y] as derivations: the k-th coefficient is X(g_k) - Y(f_k).
inline VField g_bracket(const VField& x, const VField& y) {
    return {g_apply(x, y.f1) - g_apply(y, x.f1), g_apply(x, y.f2) - g_apply(y, x.f2)};
}

struct BasisTerm {
    Rat coeff;
    AMono alpha;
    Axis k;
};

/// Closed-form bracket of basis fields:
///   [t^a d_i, t^b d_j] = b_i t^{a+b-e_i} d_j - a_j t^{a+b-e_j} d_i.
inline std::vector<BasisTerm> basis_bracket(AMono a, Axis i, AMono b, Axis j) {
    std::vector<BasisTerm> out;
    if (b[i] != 0) out.push_back({Rat(b[i]), a + b - unit(i), j});
    if (a[j] != 0) out.push_back({Rat(-a[j]), a + b - unit(j), i});
    return out;
}

inline DOp g_to_weyl(const VField& x) {
    DOp out;
    for (const auto& [m, c] : x.f1) out.add(DMono{m.m1, m.m2, 1, 0}, c);
    for (const auto& [m, c] : x.f2) out.add(DMono{m.m1, m.m2, 0, 1}, c);
    return out;
}

/// Inverse of g_to_weyl on operators of the form f1 d1 + f2 d2.
inline VField weyl_to_g(const DOp& x) {
    VField out;
    for (const auto& [w, c] : x) {
        if (w.c == 1 && w.d == 0) {
            out.f1.add(AMono{w.a, w.b}, c);
        } else if (w.c == 0 && w.d == 1) {
            out.f2.add(AMono{w.a, w.b}, c);
        } else {
            throw std::domain_error("operator term " + mono_text(w) + " is not a vector field");
        }
    }
    return out;
}

inline bool in_m10_delta(const VField& x) {
    return sgn(a_eval_1_0(x.f1)) == 0 && sgn(a_eval_1_0(x.f2)) == 0;
}

/// Linear part at (1,0) of a field vanishing there, read as a gl_2 element.
inline GL2Elem pi_project(const VField& x) {
    if (!in_m10_delta(x)) throw NotInSubalgebra("pi: field does not vanish at (1,0)");
    GL2Elem out;
    for (Axis k : kAxes) {
        const APoly& f = x.coeff(k);
        out.at(1, index(k)) = a_eval_1_0(a_derive(f, Axis::one));
        out.at(2, index(k)) = a_eval_1_0(a_derive(f, Axis::two));
    }
    return out;
}

/// "(f1)*d1 + (f2)*d2", omitting a zero component.
inline std::string render(const VField& x) {
    if (x.is_zero()) return "0";
    std::string out;
    if (!x.f1.empty()) out = "(" + render(x.f1) + ")*d1";
    if (!x.f2.empty()) out += (out.empty() ? "" : " + ") + std::string("(") + render(x.f2) + ")*d2";
    return out;
}

}  // namespace jetalg
