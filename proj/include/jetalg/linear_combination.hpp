#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace jetalg {

/// Exact rational scalar. GMP keeps every result in lowest terms with a
/// positive denominator, so structural equality is numeric equality.
using Rat = mpq_class;

/// Integer exponent type used for all monomials.
using Exp = std::int64_t;

/// Parses "p" or "p/q" into a canonical rational.
inline Rat parse_rat(const std::string& text) {
    Rat r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

/// Binomial coefficient C(n, j) for 0 <= j <= n.
inline Rat binomial(Exp n, Exp j) {
    if (j < 0 || j > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
    return Rat(out);
}

/// Falling factorial x(x-1)...(x-j+1); empty product for j = 0.
inline Rat falling(const Rat& x, Exp j) {
    Rat out = 1;
    for (Exp i = 0; i < j; ++i) out *= x - i;
    return out;
}

/// Sparse formal sum of keys with rational coefficients.
///
/// Zero coefficients are never stored, and keys live in a `std::map`, so two
/// combinations are equal exactly when their term maps are equal.
template <class Key>
class LinComb {
public:
    using map_type = std::map<Key, Rat>;
    using const_iterator = typename map_type::const_iterator;

    LinComb() = default;
    explicit LinComb(const Key& key, const Rat& coeff = 1) { add(key, coeff); }

    void add(const Key& key, const Rat& coeff) {
        if (sgn(coeff) == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    void add(const LinComb& other, const Rat& scale = 1) {
        if (sgn(scale) == 0) return;
        for (const auto& [k, c] : other.terms_) add(k, Rat(c * scale));
    }

    [[nodiscard]] Rat coeff(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    [[nodiscard]] bool empty() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] const map_type& terms() const { return terms_; }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    LinComb& operator+=(const LinComb& o) { add(o); return *this; }
    LinComb& operator-=(const LinComb& o) { add(o, Rat(-1)); return *this; }
    LinComb& operator*=(const Rat& s) {
        if (sgn(s) == 0) { terms_.clear(); return *this; }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(LinComb a) { return a *= Rat(-1); }
    friend LinComb operator*(const Rat& s, LinComb a) { return a *= s; }
    friend LinComb operator*(LinComb a, const Rat& s) { return a *= s; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

private:
    map_type terms_;
};

/// Joins (coefficient, monomial-text) pairs into "a - 3/2*b + c". An empty
/// monomial text denotes the unit; an empty list renders as "0".
inline std::string render_terms(const std::vector<std::pair<Rat, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, mono] : terms) {
        const bool neg = sgn(c) < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        Rat mag = abs(c);
        if (mono.empty()) {
            out += rat_to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += rat_to_string(mag) + "*" + mono;
        }
    }
    return out;
}

/// "t1^3", "t1", or "" when the power is zero.
inline std::string power_text(const char* symbol, Exp p) {
    if (p == 0) return {};
    if (p == 1) return symbol;
    return std::string(symbol) + "^" + std::to_string(p);
}

inline std::string join_factors(std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) out += "*";
        out += p;
    }
    return out;
}

}  // namespace jetalg
