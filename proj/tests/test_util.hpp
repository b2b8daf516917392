#pragma once

#include <cstdint>
#include <random>

#include "jetalg/jetalg.hpp"

namespace jetalg::testing {

/// Hand-rolled generators for property tests; fixed seeds keep failures reproducible.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    Exp pick(Exp lo, Exp hi) { return lo + static_cast<Exp>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

    Rat coeff() {
        Exp v = pick(1, 4);
        if (pick(0, 1)) v = -v;
        Rat r(v, pick(1, 3));
        r.canonicalize();
        return r;
    }

    APoly apoly(Exp r1 = 3, Exp r2 = 3, Exp terms = 3) {
        APoly p;
        for (Exp i = pick(1, terms); i > 0; --i) p.add(AMono{pick(-r1, r1), pick(0, r2)}, coeff());
        return p;
    }

    DOp dop(Exp bound = 3) {
        DOp x;
        for (Exp i = pick(1, 3); i > 0; --i)
            x.add(DMono{pick(-bound, bound), pick(0, bound), pick(0, bound), pick(0, bound)}, coeff());
        return x;
    }

    VField field() { return {apoly(), apoly()}; }

    VField field_m10() {
        VField x = field();
        for (Axis k : kAxes) x.coeff(k) -= a_const(a_eval_1_0(x.coeff(k)));
        return x;
    }

    LElem lelem() {
        LElem x;
        for (Exp i = pick(1, 3); i > 0; --i) {
            const Axis k = pick(0, 1) ? Axis::two : Axis::one;
            x += x_basis(k, AMono{pick(-3, 3), pick(0, 3)}, coeff());
        }
        return x;
    }

    SmashElem smash() {
        SmashElem x;
        for (Exp i = pick(1, 3); i > 0; --i)
            x.cover.add(SmashKey{AMono{pick(-3, 3), pick(0, 3)}, AMono{pick(-3, 3), pick(0, 3)},
                                 pick(0, 1) ? Axis::two : Axis::one},
                        coeff());
        if (pick(0, 1)) x.apart = apoly();
        return x;
    }

private:
    std::mt19937_64 rng_;
};

inline APoly t(Exp m1, Exp m2, const Rat& c = 1) { return a_mono(m1, m2, c); }
inline DOp dm(Exp a, Exp b, Exp c, Exp d, const Rat& k = 1) { return d_mono(a, b, c, d, k); }

}  // namespace jetalg::testing
