#pragma once

#include <string>
#include <vector>

#include "jetalg/algebra_a.hpp"

namespace jetalg {

/// Normal-ordered word t1^a t2^b d1^c d2^d of the localized Weyl algebra.
struct DMono {
    Exp a = 0;
    Exp b = 0;
    Exp c = 0;
    Exp d = 0;

    auto operator<=>(const DMono&) const = default;

    [[nodiscard]] Exp diff_degree() const { return c + d; }
};

using DOp = LinComb<DMono>;

inline DOp d_mono(Exp a, Exp b, Exp c, Exp d, const Rat& coeff = 1) {
    if (b < 0 || c < 0 || d < 0) throw std::invalid_argument("negative t2/d exponent in D");
    return DOp(DMono{a, b, c, d}, coeff);
}

inline DOp d_one() { return d_mono(0, 0, 0, 0); }
inline DOp d_t(Axis k) { return k == Axis::one ? d_mono(1, 0, 0, 0) : d_mono(0, 1, 0, 0); }
inline DOp d_partial(Axis k) { return k == Axis::one ? d_mono(0, 0, 1, 0) : d_mono(0, 0, 0, 1); }

/// A as multiplication operators inside D.
inline DOp d_from_a(const APoly& p) {
    DOp out;
    for (const auto& [m, c] : p) out.add(DMono{m.m1, m.m2, 0, 0}, c);
    return out;
}

/// Product of two normal-ordered words. Moving d1^c past t1^a uses
///   d1^c t1^a = sum_j C(c,j) a(a-1)...(a-j+1) t1^{a-j} d1^{c-j},
/// valid for every integer a; likewise d2^d past t2^b.
inline DOp d_mul(const DOp& x, const DOp& y) {
    DOp out;
    for (const auto& [l, lc] : x) {
        for (const auto& [r, rc] : y) {
            const Rat base = lc * rc;
            for (Exp j = 0; j <= l.c; ++j) {
                const Rat w1 = binomial(l.c, j) * falling(Rat(r.a), j);
                if (sgn(w1) == 0) continue;
                for (Exp i = 0; i <= l.d; ++i) {
                    const Rat w2 = binomial(l.d, i) * falling(Rat(r.b), i);
                    if (sgn(w2) == 0) continue;
                    out.add(DMono{l.a + r.a - j, l.b + r.b - i, l.c + r.c - j, l.d + r.d - i},
                            Rat(base * w1 * w2));
                }
            }
        }
    }
    return out;
}

inline DOp d_commutator(const DOp& x, const DOp& y) { return d_mul(x, y) - d_mul(y, x); }

/// Defining action on A: differentiate first, then multiply.
inline APoly d_apply(const DOp& x, const APoly& p) {
    APoly out;
    for (const auto& [w, wc] : x) {
        for (const auto& [m, mc] : p) {
            if (m.m2 < w.d) continue;
            const Rat f = falling(Rat(m.m1), w.c) * falling(Rat(m.m2), w.d);
            if (sgn(f) == 0) continue;
            out.add(AMono{m.m1 - w.c + w.a, m.m2 - w.d + w.b}, Rat(wc * mc * f));
        }
    }
    return out;
}

inline std::string mono_text(const DMono& w) {
    return join_factors({power_text("t1", w.a), power_text("t2", w.b), power_text("d1", w.c),
                         power_text("d2", w.d)});
}

inline std::string render(const DOp& x) {
    std::vector<std::pair<Rat, std::string>> terms;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
        terms.emplace_back(it->second, mono_text(it->first));
    return render_terms(terms);
}

}  // namespace jetalg
