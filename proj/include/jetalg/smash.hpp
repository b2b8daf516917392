#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetalg/jet_lie.hpp"
#include "jetalg/vector_fields.hpp"

namespace jetalg {

/// Key of the cover term t^u . t^alpha d_k.
struct SmashKey {
    AMono u;
    AMono alpha;
    Axis k = Axis::one;

    auto operator<=>(const SmashKey&) const = default;
};

/// Element sum c t^u . t^alpha d_k + h . 1 of the degree <= 1 part of A # U(g).
struct SmashElem {
    LinComb<SmashKey> cover;
    APoly apart;

    [[nodiscard]] bool is_zero() const { return cover.empty() && apart.empty(); }

    SmashElem& operator+=(const SmashElem& o) { cover += o.cover; apart += o.apart; return *this; }
    SmashElem& operator-=(const SmashElem& o) { cover -= o.cover; apart -= o.apart; return *this; }
    friend SmashElem operator+(SmashElem a, const SmashElem& b) { return a += b; }
    friend SmashElem operator-(SmashElem a, const SmashElem& b) { return a -= b; }
    friend SmashElem operator*(const Rat& s, SmashElem a) { a.cover *= s; a.apart *= s; return a; }
    friend bool operator==(const SmashElem&, const SmashElem&) = default;
};

inline SmashElem embed_a(const APoly& p) { return {{}, p}; }

/// f . X, with X expanded over basis fields.
inline SmashElem smash_term(const APoly& f, const VField& x) {
    SmashElem out;
    for (Axis k : kAxes)
        for (const auto& [alpha, xc] : x.coeff(k))
            for (const auto& [u, fc] : f) out.cover.add(SmashKey{u, alpha, k}, Rat(fc * xc));
    return out;
}

inline SmashElem embed_g(const VField& x) { return smash_term(a_const(1), x); }

/// Left multiplication by A: g (f . X + h . 1) = gf . X + gh . 1.
inline SmashElem smash_lmul(const APoly& g, const SmashElem& x) {
    SmashElem out;
    for (const auto& [key, c] : x.cover)
        for (const auto& [v, gc] : g) out.cover.add(SmashKey{key.u + v, key.alpha, key.k}, Rat(c * gc));
    out.apart = a_mul(g, x.apart);
    return out;
}

/// Commutator in A # U(g), restricted to elements of U(g)-degree <= 1:
///   [f.X, g.Y] = f X(g) . Y - g Y(f) . X + fg . [X,Y]
///   [f.X, h.1] = f X(h) . 1,   [h.1, h'.1] = 0.
inline SmashElem smash_bracket(const SmashElem& x, const SmashElem& y) {
    SmashElem out;
    // X(t^v) for X = t^alpha d_k is v_k t^{alpha + v - e_k}.
    auto act = [](const SmashKey& key, AMono v) -> std::optional<std::pair<Exp, AMono>> {
        const Exp e = v[key.k];
        if (e == 0) return std::nullopt;
        return std::make_pair(e, key.alpha + v - unit(key.k));
    };
    for (const auto& [kx, cx] : x.cover) {
        for (const auto& [ky, cy] : y.cover) {
            const Rat c = cx * cy;
            if (auto d = act(kx, ky.u))
                out.cover.add(SmashKey{kx.u + d->second, ky.alpha, ky.k}, Rat(c * d->first));
            if (auto d = act(ky, kx.u))
                out.cover.add(SmashKey{ky.u + d->second, kx.alpha, kx.k}, Rat(-c * d->first));
            for (const auto& t : basis_bracket(kx.alpha, kx.k, ky.alpha, ky.k))
                out.cover.add(SmashKey{kx.u + ky.u, t.alpha, t.k}, Rat(c * t.coeff));
        }
        for (const auto& [h, ch] : y.apart)
            if (auto d = act(kx, h)) out.apart.add(kx.u + d->second, Rat(cx * ch * d->first));
    }
    for (const auto& [h, ch] : x.apart)
        for (const auto& [ky, cy] : y.cover)
            if (auto d = act(ky, h)) out.apart.add(ky.u + d->second, Rat(-cy * ch * d->first));
    return out;
}

/// X_k(m) = sum_i (-1)^i C(m2,i) t1^{-m1} t2^i . t1^{m1+[k=1]} t2^{m2-i} d_k - [m2=0] 1 . t1^{[k=1]} d_k.
inline SmashElem xk(Axis k, AMono m) {
    if (m.m2 < 0) throw std::invalid_argument("X_k(m) needs m2 >= 0");
    SmashElem out;
    const Exp dk = delta1(k);
    for (Exp i = 0; i <= m.m2; ++i) {
        Rat c = binomial(m.m2, i);
        if (i % 2) c = -c;
        out.cover.add(SmashKey{AMono{-m.m1, i}, AMono{m.m1 + dk, m.m2 - i}, k}, c);
    }
    if (m.m2 == 0) out.cover.add(SmashKey{AMono{}, AMono{dk, 0}, k}, Rat(-1));
    return out;
}

inline SmashElem xk(const LElem& x) {
    SmashElem out;
    for (const auto& [key, c] : x) out += c * xk(key.k, key.m);
    return out;
}

/// Reads a smash element back as a combination of X_k(m), or nullopt when it
/// is not in their span. The term t1^{-m1} . t1^{m1+[k=1]} t2^{m2} d_k occurs
/// in X_k(m) and in no other X_k'(m').
inline std::optional<LElem> smash_to_l(const SmashElem& x) {
    if (!x.apart.empty()) return std::nullopt;
    LElem out;
    for (const auto& [key, c] : x.cover) {
        if (key.u.m2 != 0) continue;
        const AMono m{-key.u.m1, key.alpha.m2};
        if (m.is_zero() || key.alpha.m1 != m.m1 + delta1(key.k)) continue;
        out.add(LKey{key.k, m}, c);
    }
    if (!(xk(out) == x)) return std::nullopt;
    return out;
}

inline std::string render(const SmashElem& x) {
    std::vector<std::pair<Rat, std::string>> terms;
    for (auto it = x.cover.terms().rbegin(); it != x.cover.terms().rend(); ++it) {
        const auto& key = it->first;
        std::string left = mono_text(key.u);
        if (left.empty()) left = "1";
        const std::string right = join_factors({mono_text(key.alpha), "d" + std::to_string(index(key.k))});
        // The unit coefficient is dropped by render_terms, so "1 . X" stays explicit.
        terms.emplace_back(it->second, left + " . " + right);
    }
    if (!x.apart.empty()) terms.emplace_back(Rat(1), "(" + render(x.apart) + ") . 1");
    return render_terms(terms);
}

}  // namespace jetalg
