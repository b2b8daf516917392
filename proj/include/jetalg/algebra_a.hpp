#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "jetalg/linear_combination.hpp"

namespace jetalg {

/// Coordinate index k in t_k, d_k, X_k.
enum class Axis : int { one = 1, two = 2 };

inline constexpr Axis kAxes[] = {Axis::one, Axis::two};

inline int index(Axis k) { return static_cast<int>(k); }
inline Exp delta1(Axis k) { return k == Axis::one ? 1 : 0; }

/// Monomial t1^m1 t2^m2 of A = C[t1^{+-1}, t2]; m2 >= 0.
struct AMono {
    Exp m1 = 0;
    Exp m2 = 0;

    auto operator<=>(const AMono&) const = default;

    [[nodiscard]] bool is_zero() const { return m1 == 0 && m2 == 0; }
    [[nodiscard]] Exp operator[](Axis k) const { return k == Axis::one ? m1 : m2; }
    friend AMono operator+(AMono a, AMono b) { return {a.m1 + b.m1, a.m2 + b.m2}; }
    friend AMono operator-(AMono a, AMono b) { return {a.m1 - b.m1, a.m2 - b.m2}; }
};

inline AMono unit(Axis k) { return k == Axis::one ? AMono{1, 0} : AMono{0, 1}; }

using APoly = LinComb<AMono>;

inline APoly a_mono(Exp m1, Exp m2, const Rat& c = 1) {
    if (m2 < 0) throw std::invalid_argument("negative t2 exponent in A");
    return APoly(AMono{m1, m2}, c);
}

inline APoly a_const(const Rat& c) { return APoly(AMono{}, c); }

inline APoly a_mul(const APoly& p, const APoly& q) {
    APoly out;
    for (const auto& [m, c] : p)
        for (const auto& [n, d] : q) out.add(m + n, Rat(c * d));
    return out;
}

/// Partial derivative d/dt_k, termwise t^m -> m_k t^{m - e_k}.
inline APoly a_derive(const APoly& p, Axis k) {
    APoly out;
    for (const auto& [m, c] : p) {
        const Exp e = m[k];
        if (e == 0) continue;
        out.add(m - unit(k), Rat(c * e));
    }
    return out;
}

/// Value at (t1, t2) = (1, 0). Zero exactly on the maximal ideal m_{1,0}.
inline Rat a_eval_1_0(const APoly& p) {
    Rat out = 0;
    for (const auto& [m, c] : p)
        if (m.m2 == 0) out += c;
    return out;
}

inline std::string mono_text(const AMono& m) {
    return join_factors({power_text("t1", m.m1), power_text("t2", m.m2)});
}

/// Canonical rendering, highest key first: "t1^2*t2 - 3/2*t1^-1 + 1".
inline std::string render(const APoly& p) {
    std::vector<std::pair<Rat, std::string>> terms;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.emplace_back(it->second, mono_text(it->first));
    return render_terms(terms);
}

}  // namespace jetalg
