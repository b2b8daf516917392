#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "jetalg/gl2.hpp"
#include "jetalg/vector_fields.hpp"

namespace jetalg {

/// Basis element X_k(m) of the jet Lie algebra; m != (0,0).
struct LKey {
    Axis k = Axis::one;
    AMono m;

    auto operator<=>(const LKey&) const = default;
};

using LElem = LinComb<LKey>;

/// X_k(m) as an element; X_k(0,0) is zero.
inline LElem x_basis(Axis k, AMono m, const Rat& c = 1) {
    if (m.m2 < 0) throw std::invalid_argument("X_k(m) needs m2 >= 0");
    if (m.is_zero()) return {};
    return LElem(LKey{k, m}, c);
}

namespace detail {

inline void add_x(LElem& out, const Rat& c, Axis k, AMono m) {
    if (sgn(c) == 0 || m.is_zero()) return;
    if (m.m2 < 0) throw std::logic_error("structure constant produced X_k with m2 < 0");
    out.add(LKey{k, m}, c);
}

inline Exp kron0(Exp v) { return v == 0 ? 1 : 0; }

/// [X_1(m), X_2(s)].
inline void bracket_12(LElem& out, const Rat& scale, AMono m, AMono s) {
    const AMono e2{0, 1};
    add_x(out, Rat(scale * (-s.m1 * kron0(m.m2))), Axis::two, s);
    add_x(out, Rat(scale * (m.m2 * kron0(s.m2))), Axis::one, m - e2);
    add_x(out, Rat(scale * s.m1), Axis::two, m + s);
    add_x(out, Rat(scale * (-m.m2)), Axis::one, m + s - e2);
}

}  // namespace detail

/// Structure-constant bracket of two basis elements.
inline LElem l_basis_bracket(const LKey& x, const LKey& y) {
    using detail::add_x;
    using detail::kron0;
    const AMono m = x.m;
    const AMono s = y.m;
    const AMono e2{0, 1};
    LElem out;
    if (x.k == Axis::one && y.k == Axis::one) {
        add_x(out, Rat(m.m1 * kron0(s.m2)), Axis::one, m);
        add_x(out, Rat(-s.m1 * kron0(m.m2)), Axis::one, s);
        add_x(out, Rat(s.m1 - m.m1), Axis::one, m + s);
    } else if (x.k == Axis::two && y.k == Axis::two) {
        add_x(out, Rat(-s.m2 * kron0(m.m2)), Axis::two, s - e2);
        add_x(out, Rat(m.m2 * kron0(s.m2)), Axis::two, m - e2);
        add_x(out, Rat(s.m2 - m.m2), Axis::two, m + s - e2);
    } else if (x.k == Axis::one) {
        detail::bracket_12(out, Rat(1), m, s);
    } else {
        detail::bracket_12(out, Rat(-1), s, m);
    }
    return out;
}

inline LElem l_bracket(const LElem& x, const LElem& y) {
    LElem out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) out.add(l_basis_bracket(kx, ky), Rat(cx * cy));
    return out;
}

/// theta(X_1(m)) = (t^m - [m2 = 0]) t1 d1,  theta(X_2(m)) = (t^m - [m2 = 0]) d2.
inline VField theta(const LElem& x) {
    VField out;
    for (const auto& [key, c] : x) {
        const AMono shift = key.k == Axis::one ? AMono{1, 0} : AMono{0, 0};
        APoly& f = out.coeff(key.k);
        f.add(key.m + shift, c);
        if (key.m.m2 == 0) f.add(shift, Rat(-c));
    }
    return out;
}

inline LElem theta_inv(const VField& x) {
    if (!in_m10_delta(x)) throw NotInSubalgebra("theta_inv: field does not vanish at (1,0)");
    LElem out;
    for (const auto& [m, c] : x.f1) detail::add_x(out, c, Axis::one, m - AMono{1, 0});
    for (const auto& [m, c] : x.f2) detail::add_x(out, c, Axis::two, m);
    return out;
}

/// Action of L on a gl_2-module through the linear part at (1,0):
/// X_k(i,0) -> i E_1k, X_k(i,1) -> E_2k, X_k(m) -> 0 once m2 >= 2.
inline Matrix lift_gl2(const LElem& x, const GL2Module& v) {
    Matrix out(v.dim());
    for (const auto& [key, c] : x) {
        const int k = index(key.k);
        if (key.m.m2 == 0) {
            out += Rat(c * key.m.m1) * v.of(1, k);
        } else if (key.m.m2 == 1) {
            out += c * v.of(2, k);
        }
    }
    return out;
}

inline std::string key_text(const LKey& key) {
    return "X" + std::to_string(index(key.k)) + "(" + std::to_string(key.m.m1) + "," +
           std::to_string(key.m.m2) + ")";
}

inline std::string render(const LElem& x) {
    std::vector<std::pair<Rat, std::string>> terms;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
        terms.emplace_back(it->second, key_text(it->first));
    return render_terms(terms);
}

}  // namespace jetalg
