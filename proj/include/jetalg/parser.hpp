#pragma once

#include <cctype>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "jetalg/phi_rho.hpp"
#include "jetalg/smash.hpp"

namespace jetalg {

struct SyntaxError : std::runtime_error {
    SyntaxError(int line_, int column_, std::set<std::string> expected_, const std::string& found)
        : std::runtime_error(format(line_, column_, expected_, found)),
          line(line_),
          column(column_),
          expected(std::move(expected_)) {}

    int line;
    int column;
    std::set<std::string> expected;

private:
    static std::string format(int line, int column, const std::set<std::string>& expected, const std::string& found) {
        std::string out = "syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": found " +
                          found + ", expected one of {";
        bool first = true;
        for (const auto& e : expected) {
            out += (first ? "" : ", ") + e;
            first = false;
        }
        return out + "}";
    }
};

struct ElaborationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Syntax tree of an algebra expression.
struct Expr {
    enum class Kind { number, symbol, x_atom, add, sub, neg, mul, pow, bracket, dot, tensor };

    Kind kind = Kind::number;
    Rat value;            // number
    std::string symbol;   // symbol: t1, t2, d1, d2
    LKey x;               // x_atom
    Exp exponent = 0;     // pow
    std::vector<std::unique_ptr<Expr>> args;
    int line = 1;
    int column = 1;

    [[nodiscard]] const Expr& arg(std::size_t i) const { return *args.at(i); }
};

namespace detail {

struct Token {
    enum class Kind { number, ident, punct, tensor, end };
    Kind kind = Kind::end;
    std::string text;
    Rat value;
    int line = 1;
    int column = 1;

    [[nodiscard]] std::string describe() const {
        if (kind == Kind::end) return "end of input";
        return "'" + text + "'";
    }
};

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        const char ch = src[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            if (j + 1 < src.size() && src[j] == '/' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
                ++j;
                while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            }
            t.kind = Token::Kind::number;
            t.text = src.substr(i, j - i);
            try {
                t.value = parse_rat(t.text);
            } catch (const std::invalid_argument&) {
                throw SyntaxError(line, col, {"nonzero denominator"}, "'" + t.text + "'");
            }
            advance(j - i);
        } else if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
            t.kind = Token::Kind::ident;
            t.text = src.substr(i, j - i);
            advance(j - i);
        } else if (src.compare(i, 3, "(x)") == 0) {
            t.kind = Token::Kind::tensor;
            t.text = "(x)";
            advance(3);
        } else if (src.compare(i, 3, "\xE2\x8A\x97") == 0) {  // U+2297
            t.kind = Token::Kind::tensor;
            t.text = "(x)";
            i += 3;
            ++col;
        } else if (std::string("+-*^()[],.").find(ch) != std::string::npos) {
            t.kind = Token::Kind::punct;
            t.text = std::string(1, ch);
            advance(1);
        } else {
            throw SyntaxError(line, col, {"operator", "atom", "number"}, "'" + std::string(1, ch) + "'");
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.column = col;
    out.push_back(end);
    return out;
}

/// Recursive-descent parser. Precedence, loosest first:
///   + -   <   . (x)   <   *   <   unary -   <   ^
class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    std::unique_ptr<Expr> parse_all() {
        auto e = parse_sum();
        if (peek().kind != Token::Kind::end) fail({"'+'", "'-'", "'*'", "'.'", "'(x)'", "end of input"});
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool is_punct(const char* p) const { return peek().kind == Token::Kind::punct && peek().text == p; }

    [[noreturn]] void fail(std::set<std::string> expected) const {
        throw SyntaxError(peek().line, peek().column, std::move(expected), peek().describe());
    }

    void expect_punct(const char* p) {
        if (!is_punct(p)) fail({std::string("'") + p + "'"});
        ++pos_;
    }

    static std::unique_ptr<Expr> node(Expr::Kind kind, const Token& at) {
        auto e = std::make_unique<Expr>();
        e->kind = kind;
        e->line = at.line;
        e->column = at.column;
        return e;
    }

    static std::unique_ptr<Expr> binary(Expr::Kind kind, const Token& at, std::unique_ptr<Expr> l,
                                        std::unique_ptr<Expr> r) {
        auto e = node(kind, at);
        e->args.push_back(std::move(l));
        e->args.push_back(std::move(r));
        return e;
    }

    std::unique_ptr<Expr> parse_sum() {
        auto lhs = parse_dot();
        while (is_punct("+") || is_punct("-")) {
            const Token op = peek();
            ++pos_;
            auto rhs = parse_dot();
            lhs = binary(op.text == "+" ? Expr::Kind::add : Expr::Kind::sub, op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    std::unique_ptr<Expr> parse_dot() {
        auto lhs = parse_product();
        if (is_punct(".") || peek().kind == Token::Kind::tensor) {
            const Token op = peek();
            ++pos_;
            auto rhs = parse_product();
            lhs = binary(op.kind == Token::Kind::tensor ? Expr::Kind::tensor : Expr::Kind::dot, op, std::move(lhs),
                         std::move(rhs));
        }
        return lhs;
    }

    std::unique_ptr<Expr> parse_product() {
        auto lhs = parse_unary();
        while (is_punct("*")) {
            const Token op = peek();
            ++pos_;
            lhs = binary(Expr::Kind::mul, op, std::move(lhs), parse_unary());
        }
        return lhs;
    }

    std::unique_ptr<Expr> parse_unary() {
        if (is_punct("-")) {
            const Token op = peek();
            ++pos_;
            auto e = node(Expr::Kind::neg, op);
            e->args.push_back(parse_unary());
            return e;
        }
        return parse_power();
    }

    std::unique_ptr<Expr> parse_power() {
        auto base = parse_primary();
        if (!is_punct("^")) return base;
        const Token op = peek();
        ++pos_;
        auto e = node(Expr::Kind::pow, op);
        if (is_punct("(")) {
            ++pos_;
            e->exponent = parse_signed_int();
            expect_punct(")");
        } else {
            e->exponent = parse_signed_int();
        }
        e->args.push_back(std::move(base));
        return e;
    }

    Exp parse_signed_int() {
        bool neg = false;
        if (is_punct("-")) {
            neg = true;
            ++pos_;
        }
        if (peek().kind != Token::Kind::number || peek().value.get_den() != 1) fail({"integer"});
        const Exp v = peek().value.get_num().get_si();
        ++pos_;
        return neg ? -v : v;
    }

    std::unique_ptr<Expr> parse_primary() {
        const Token t = peek();
        if (t.kind == Token::Kind::number) {
            ++pos_;
            auto e = node(Expr::Kind::number, t);
            e->value = t.value;
            return e;
        }
        if (t.kind == Token::Kind::ident) {
            if (t.text == "t1" || t.text == "t2" || t.text == "d1" || t.text == "d2") {
                ++pos_;
                auto e = node(Expr::Kind::symbol, t);
                e->symbol = t.text;
                return e;
            }
            if (t.text == "X1" || t.text == "X2") {
                ++pos_;
                auto e = node(Expr::Kind::x_atom, t);
                e->x.k = t.text == "X1" ? Axis::one : Axis::two;
                expect_punct("(");
                // Both X1(m1,m2) and X1((m1,m2)) are accepted.
                const bool nested = is_punct("(");
                if (nested) ++pos_;
                e->x.m.m1 = parse_signed_int();
                expect_punct(",");
                e->x.m.m2 = parse_signed_int();
                if (nested) expect_punct(")");
                expect_punct(")");
                return e;
            }
            fail({"t1", "t2", "d1", "d2", "X1", "X2"});
        }
        if (t.kind == Token::Kind::punct && t.text == "(") {
            ++pos_;
            auto e = parse_sum();
            expect_punct(")");
            return e;
        }
        if (t.kind == Token::Kind::punct && t.text == "[") {
            ++pos_;
            auto e = node(Expr::Kind::bracket, t);
            e->args.push_back(parse_sum());
            expect_punct(",");
            e->args.push_back(parse_sum());
            expect_punct("]");
            return e;
        }
        fail({"number", "t1", "t2", "d1", "d2", "X1", "X2", "'('", "'['", "'-'"});
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

inline std::string where(const Expr& e) {
    return " at " + std::to_string(e.line) + ":" + std::to_string(e.column);
}

/// No X atoms, dots, tensors, or brackets anywhere below.
inline bool is_plain(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::x_atom:
        case Expr::Kind::dot:
        case Expr::Kind::tensor:
        case Expr::Kind::bracket: return false;
        default: break;
    }
    for (const auto& a : e.args)
        if (!is_plain(*a)) return false;
    return true;
}

inline bool mentions_derivative(const Expr& e) {
    if (e.kind == Expr::Kind::symbol && e.symbol[0] == 'd') return true;
    for (const auto& a : e.args)
        if (mentions_derivative(*a)) return true;
    return false;
}

inline bool is_unit(const Expr& e) { return e.kind == Expr::Kind::number && e.value == 1; }

/// Integer power in a ring; negative powers only of a single t1 monomial.
template <class T, class Mul, class Invert>
T ring_pow(const T& base, Exp n, const T& one, Mul mul, Invert invert) {
    if (n < 0) return ring_pow(invert(base), -n, one, mul, invert);
    T out = one;
    for (Exp i = 0; i < n; ++i) out = mul(out, base);
    return out;
}

}  // namespace detail

inline std::unique_ptr<Expr> parse_expr(const std::string& text) {
    return detail::Parser(detail::tokenize(text)).parse_all();
}

inline APoly elab_a(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::number: return a_const(e.value);
        case K::symbol:
            if (e.symbol == "t1") return a_mono(1, 0);
            if (e.symbol == "t2") return a_mono(0, 1);
            throw ElaborationError("derivative '" + e.symbol + "' is not an element of A" + detail::where(e));
        case K::add: return elab_a(e.arg(0)) + elab_a(e.arg(1));
        case K::sub: return elab_a(e.arg(0)) - elab_a(e.arg(1));
        case K::neg: return -elab_a(e.arg(0));
        case K::mul: return a_mul(elab_a(e.arg(0)), elab_a(e.arg(1)));
        case K::bracket:
            elab_a(e.arg(0));
            elab_a(e.arg(1));
            return {};
        case K::pow: {
            const APoly base = elab_a(e.arg(0));
            return detail::ring_pow(base, e.exponent, a_const(1), a_mul, [&](const APoly& p) {
                if (p.size() != 1 || p.begin()->first.m2 != 0)
                    throw ElaborationError("negative power of a non-invertible element of A" + detail::where(e));
                const auto& [m, c] = *p.begin();
                return a_mono(-m.m1, 0, Rat(1 / c));
            });
        }
        case K::x_atom: throw ElaborationError("X atom is not an element of A" + detail::where(e));
        case K::dot: throw ElaborationError("'.' is not an operation of A" + detail::where(e));
        case K::tensor: throw ElaborationError("'(x)' is not an operation of A" + detail::where(e));
    }
    throw ElaborationError("unhandled expression");
}

inline DOp elab_d(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::number: return d_mono(0, 0, 0, 0, e.value);
        case K::symbol:
            if (e.symbol == "t1") return d_t(Axis::one);
            if (e.symbol == "t2") return d_t(Axis::two);
            if (e.symbol == "d1") return d_partial(Axis::one);
            return d_partial(Axis::two);
        case K::add: return elab_d(e.arg(0)) + elab_d(e.arg(1));
        case K::sub: return elab_d(e.arg(0)) - elab_d(e.arg(1));
        case K::neg: return -elab_d(e.arg(0));
        case K::mul: return d_mul(elab_d(e.arg(0)), elab_d(e.arg(1)));
        case K::bracket: return d_commutator(elab_d(e.arg(0)), elab_d(e.arg(1)));
        case K::pow: {
            const DOp base = elab_d(e.arg(0));
            return detail::ring_pow(base, e.exponent, d_one(), d_mul, [&](const DOp& x) {
                if (x.size() != 1) throw ElaborationError("negative power of a sum in D" + detail::where(e));
                const auto& [w, c] = *x.begin();
                if (w.b != 0 || w.c != 0 || w.d != 0)
                    throw ElaborationError("only t1 is invertible in D" + detail::where(e));
                return d_mono(-w.a, 0, 0, 0, Rat(1 / c));
            });
        }
        case K::x_atom: throw ElaborationError("X atom is not an element of D" + detail::where(e));
        case K::dot: throw ElaborationError("'.' is not an operation of D" + detail::where(e));
        case K::tensor: throw ElaborationError("'(x)' is not an operation of D" + detail::where(e));
    }
    throw ElaborationError("unhandled expression");
}

/// Vector fields are the operators f1 d1 + f2 d2 of D; brackets agree.
inline VField elab_g(const Expr& e) {
    const DOp x = elab_d(e);
    try {
        return weyl_to_g(x);
    } catch (const std::domain_error& err) {
        throw ElaborationError(std::string(err.what()) + detail::where(e));
    }
}

inline LElem elab_l(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::x_atom:
            if (e.x.m.m2 < 0) throw ElaborationError("X_k(m) needs m2 >= 0" + detail::where(e));
            return x_basis(e.x.k, e.x.m);
        case K::add: return elab_l(e.arg(0)) + elab_l(e.arg(1));
        case K::sub: return elab_l(e.arg(0)) - elab_l(e.arg(1));
        case K::neg: return -elab_l(e.arg(0));
        case K::bracket: return l_bracket(elab_l(e.arg(0)), elab_l(e.arg(1)));
        case K::number:
            if (sgn(e.value) == 0) return {};
            throw ElaborationError("nonzero scalar alone is not an element of L" + detail::where(e));
        case K::mul: {
            const Expr& l = e.arg(0);
            if (!detail::is_plain(l) || detail::mentions_derivative(l))
                throw ElaborationError("left factor in L must be a scalar" + detail::where(e));
            const APoly s = elab_a(l);
            if (!(s.empty() || (s.size() == 1 && s.begin()->first.is_zero())))
                throw ElaborationError("left factor in L must be a scalar" + detail::where(e));
            return s.coeff(AMono{}) * elab_l(e.arg(1));
        }
        default: throw ElaborationError("expression is not an element of L" + detail::where(e));
    }
}

inline SmashElem elab_smash(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::add: return elab_smash(e.arg(0)) + elab_smash(e.arg(1));
        case K::sub: return elab_smash(e.arg(0)) - elab_smash(e.arg(1));
        case K::neg: return Rat(-1) * elab_smash(e.arg(0));
        case K::bracket: return smash_bracket(elab_smash(e.arg(0)), elab_smash(e.arg(1)));
        case K::x_atom:
            if (e.x.m.m2 < 0) throw ElaborationError("X_k(m) needs m2 >= 0" + detail::where(e));
            return xk(e.x.k, e.x.m);
        case K::dot: {
            const APoly f = elab_a(e.arg(0));
            if (detail::is_unit(e.arg(1))) return embed_a(f);
            return smash_term(f, elab_g(e.arg(1)));
        }
        case K::tensor: throw ElaborationError("'(x)' is not an operation of A#U(g)" + detail::where(e));
        case K::mul:
            if (!detail::is_plain(e)) return smash_lmul(elab_a(e.arg(0)), elab_smash(e.arg(1)));
            [[fallthrough]];
        default:
            if (detail::mentions_derivative(e)) return embed_g(elab_g(e));
            return embed_a(elab_a(e));
    }
}

inline DLElem elab_dl(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::add: return elab_dl(e.arg(0)) + elab_dl(e.arg(1));
        case K::sub: return elab_dl(e.arg(0)) - elab_dl(e.arg(1));
        case K::neg: return Rat(-1) * elab_dl(e.arg(0));
        case K::bracket: return dl_bracket(elab_dl(e.arg(0)), elab_dl(e.arg(1)));
        case K::x_atom: return dl_from_l(elab_l(e));
        case K::tensor: {
            const DOp d = elab_d(e.arg(0));
            if (detail::is_unit(e.arg(1))) return dl_from_d(d);
            DLElem out;
            out.add_l(elab_l(e.arg(1)), d);
            return out;
        }
        case K::dot: throw ElaborationError("'.' is not an operation of D(x)U(L)" + detail::where(e));
        case K::mul:
            if (!detail::is_plain(e)) return dl_lmul(elab_d(e.arg(0)), elab_dl(e.arg(1)));
            [[fallthrough]];
        default: return dl_from_d(elab_d(e));
    }
}

enum class Algebra { a, d, g, smash, l, dl };

inline Algebra parse_algebra(const std::string& name) {
    if (name == "A") return Algebra::a;
    if (name == "D") return Algebra::d;
    if (name == "g") return Algebra::g;
    if (name == "smash") return Algebra::smash;
    if (name == "L") return Algebra::l;
    if (name == "DL") return Algebra::dl;
    throw std::invalid_argument("unknown algebra '" + name + "' (expected A, D, g, smash, L, DL)");
}

/// Elaborates `e` in the chosen algebra and returns its canonical rendering.
inline std::string eval_expr(const Expr& e, Algebra target) {
    switch (target) {
        case Algebra::a: return render(elab_a(e));
        case Algebra::d: return render(elab_d(e));
        case Algebra::g: return render(elab_g(e));
        case Algebra::smash: return render(elab_smash(e));
        case Algebra::l: return render(elab_l(e));
        case Algebra::dl: return render(elab_dl(e));
    }
    throw std::invalid_argument("unknown algebra");
}

inline std::string eval_expr(const std::string& text, Algebra target) { return eval_expr(*parse_expr(text), target); }

}  // namespace jetalg
