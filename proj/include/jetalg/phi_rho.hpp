#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "jetalg/jet_lie.hpp"
#include "jetalg/smash.hpp"
#include "jetalg/weyl.hpp"

namespace jetalg {

/// Raised when a bracket in D (x) U(L) would leave PBW degree <= 1.
struct TruncationEscape : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised when rho is asked for an image outside the degree <= 1 smash slice.
struct DegreeTooHigh : std::domain_error {
    using std::domain_error::domain_error;
};

/// part0 (x) 1 + sum_K part1[K] (x) K in D (x) U(L), PBW degree <= 1.
struct DLElem {
    DOp part0;
    std::map<LKey, DOp> part1;

    void add_l(const LKey& key, const DOp& coeff) {
        if (coeff.empty()) return;
        auto [it, inserted] = part1.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.empty()) part1.erase(it);
        }
    }

    void add_l(const LElem& x, const DOp& coeff) {
        for (const auto& [key, c] : x) add_l(key, c * coeff);
    }

    [[nodiscard]] bool is_zero() const { return part0.empty() && part1.empty(); }

    DLElem& operator+=(const DLElem& o) {
        part0 += o.part0;
        for (const auto& [key, d] : o.part1) add_l(key, d);
        return *this;
    }
    DLElem& operator-=(const DLElem& o) {
        part0 -= o.part0;
        for (const auto& [key, d] : o.part1) add_l(key, -d);
        return *this;
    }
    friend DLElem operator+(DLElem a, const DLElem& b) { return a += b; }
    friend DLElem operator-(DLElem a, const DLElem& b) { return a -= b; }
    friend DLElem operator*(const Rat& s, DLElem a) {
        if (sgn(s) == 0) return {};
        a.part0 *= s;
        for (auto& [key, d] : a.part1) d *= s;
        return a;
    }
    friend bool operator==(const DLElem&, const DLElem&) = default;
};

inline DLElem dl_from_d(const DOp& d) { return {d, {}}; }

inline DLElem dl_from_l(const LElem& x) {
    DLElem out;
    out.add_l(x, d_one());
    return out;
}

/// Left multiplication by d (x) 1.
inline DLElem dl_lmul(const DOp& d, const DLElem& x) {
    DLElem out{d_mul(d, x.part0), {}};
    for (const auto& [key, c] : x.part1) out.add_l(key, d_mul(d, c));
    return out;
}

inline DLElem dl_bracket(const DLElem& x, const DLElem& y) {
    DLElem out{d_commutator(x.part0, y.part0), {}};
    for (const auto& [key, c] : y.part1) out.add_l(key, d_commutator(x.part0, c));
    for (const auto& [key, c] : x.part1) out.add_l(key, d_commutator(c, y.part0));
    for (const auto& [kx, cx] : x.part1) {
        for (const auto& [ky, cy] : y.part1) {
            const DOp prod = d_mul(cx, cy);
            if (!(prod == d_mul(cy, cx)))
                throw TruncationEscape("coefficients of " + key_text(kx) + " and " + key_text(ky) +
                                       " do not commute");
            out.add_l(l_basis_bracket(kx, ky), prod);
        }
    }
    return out;
}

/// phi(1 . t^{m + [k=1] e1} d_k) = t^{m + [k=1] e1} d_k (x) 1 + sum_i C(m2,i) t1^{m1} t2^i (x) X_k(m - i e2),
/// phi(t^m . 1) = t^m (x) 1, and phi(f . X) = (f (x) 1) phi(1 . X).
inline DLElem phi(const SmashElem& x) {
    DLElem out{d_from_a(x.apart), {}};
    for (const auto& [key, c] : x.cover) {
        const AMono& u = key.u;
        const AMono m = key.alpha - AMono{delta1(key.k), 0};
        const AMono top = u + key.alpha;
        out.part0.add(DMono{top.m1, top.m2, key.k == Axis::one ? 1 : 0, key.k == Axis::two ? 1 : 0}, c);
        for (Exp i = 0; i <= m.m2; ++i) {
            const AMono target{m.m1, m.m2 - i};
            if (target.is_zero()) continue;
            out.add_l(LKey{key.k, target}, d_mono(u.m1 + m.m1, u.m2 + i, 0, 0, Rat(c * binomial(m.m2, i))));
        }
    }
    return out;
}

/// Inverse of phi on the degree <= 1 slice:
///   t^n (x) 1 -> t^n . 1,  t^n d1 (x) 1 -> t^{n - e1} . t1 d1,  t^n d2 (x) 1 -> t^n . d2,
///   q (x) X_k(m) -> q X_k(m).
inline SmashElem rho(const DLElem& x) {
    SmashElem out;
    for (const auto& [w, c] : x.part0) {
        const AMono n{w.a, w.b};
        if (w.c == 0 && w.d == 0) {
            out.apart.add(n, c);
        } else if (w.c == 1 && w.d == 0) {
            out.cover.add(SmashKey{n - AMono{1, 0}, AMono{1, 0}, Axis::one}, c);
        } else if (w.c == 0 && w.d == 1) {
            out.cover.add(SmashKey{n, AMono{0, 0}, Axis::two}, c);
        } else {
            throw DegreeTooHigh("rho: " + mono_text(w) + " has derivative degree above 1");
        }
    }
    for (const auto& [key, coeff] : x.part1) {
        APoly q;
        for (const auto& [w, c] : coeff) {
            if (w.c != 0 || w.d != 0)
                throw DegreeTooHigh("rho: coefficient of " + key_text(key) + " is not a multiplication operator");
            q.add(AMono{w.a, w.b}, c);
        }
        out += smash_lmul(q, xk(key.k, key.m));
    }
    return out;
}

/// "(D) (x) 1 + (D) (x) Xk(m) + ...".
inline std::string render(const DLElem& x) {
    if (x.is_zero()) return "0";
    std::string out;
    if (!x.part0.empty()) out = "(" + render(x.part0) + ") (x) 1";
    for (auto it = x.part1.rbegin(); it != x.part1.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + render(it->second) + ") (x) " + key_text(it->first);
    }
    return out;
}

}  // namespace jetalg
