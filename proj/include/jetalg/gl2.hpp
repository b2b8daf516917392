#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "jetalg/linear_combination.hpp"

namespace jetalg {

/// Dense square rational matrix.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, Rat(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    [[nodiscard]] std::size_t dim() const { return n_; }
    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : data_)
            if (sgn(x) != 0) return false;
        return true;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(const Rat& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Rat& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.check_same(b);
        Matrix out(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                if (sgn(a(i, k)) == 0) continue;
                for (std::size_t j = 0; j < a.n_; ++j) out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }

    /// Column vector image of basis vector j.
    [[nodiscard]] std::vector<std::pair<std::size_t, Rat>> column(std::size_t j) const {
        std::vector<std::pair<std::size_t, Rat>> out;
        for (std::size_t i = 0; i < n_; ++i)
            if (sgn((*this)(i, j)) != 0) out.emplace_back(i, (*this)(i, j));
        return out;
    }

private:
    void check_same(const Matrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
    }

    std::size_t n_ = 0;
    std::vector<Rat> data_;
};

inline Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

inline std::string render(const Matrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) out += ", ";
            out += rat_to_string(m(i, j));
        }
        out += "]";
    }
    return out + "]";
}

/// Element of gl_2 stored as its 2x2 matrix; E_ij has a 1 at row i, column j.
struct GL2Elem {
    std::array<Rat, 4> entries{0, 0, 0, 0};  // E11, E12, E21, E22

    static GL2Elem unit(int i, int j) {
        GL2Elem e;
        e.at(i, j) = 1;
        return e;
    }

    Rat& at(int i, int j) { return entries[static_cast<std::size_t>((i - 1) * 2 + (j - 1))]; }
    [[nodiscard]] const Rat& at(int i, int j) const {
        return entries[static_cast<std::size_t>((i - 1) * 2 + (j - 1))];
    }

    [[nodiscard]] Matrix matrix() const {
        Matrix m(2);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) m(i - 1, j - 1) = at(i, j);
        return m;
    }

    friend GL2Elem operator+(GL2Elem a, const GL2Elem& b) {
        for (std::size_t i = 0; i < 4; ++i) a.entries[i] += b.entries[i];
        return a;
    }
    friend GL2Elem operator-(GL2Elem a, const GL2Elem& b) {
        for (std::size_t i = 0; i < 4; ++i) a.entries[i] -= b.entries[i];
        return a;
    }
    friend GL2Elem operator*(const Rat& s, GL2Elem a) {
        for (auto& x : a.entries) x *= s;
        return a;
    }
    friend bool operator==(const GL2Elem&, const GL2Elem&) = default;
};

inline GL2Elem gl2_bracket(const GL2Elem& x, const GL2Elem& y) {
    GL2Elem out;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k) out.at(i, j) += x.at(i, k) * y.at(k, j) - y.at(i, k) * x.at(k, j);
    return out;
}

inline std::string render(const GL2Elem& x) { return render(x.matrix()); }

/// Finite-dimensional gl_2-module given by the images of the four matrix units.
class GL2Module {
public:
    GL2Module() = default;
    GL2Module(std::string name, std::array<Matrix, 4> rep) : name_(std::move(name)), rep_(std::move(rep)) {
        const std::size_t n = rep_[0].dim();
        if (n == 0) throw std::invalid_argument("gl2 module must have positive dimension");
        for (const auto& m : rep_)
            if (m.dim() != n) throw std::invalid_argument("gl2 module matrices differ in size");
    }

    /// C^2 with E_ij acting as itself.
    static GL2Module natural() {
        std::array<Matrix, 4> rep;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) rep[slot(i, j)] = GL2Elem::unit(i, j).matrix();
        return {"natural", std::move(rep)};
    }

    /// gl_2 acting on itself by ad, basis order E11, E12, E21, E22.
    static GL2Module adjoint() {
        std::array<Matrix, 4> rep;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                Matrix m(4);
                const GL2Elem x = GL2Elem::unit(i, j);
                for (std::size_t col = 0; col < 4; ++col) {
                    GL2Elem basis;
                    basis.entries[col] = 1;
                    const GL2Elem img = gl2_bracket(x, basis);
                    for (std::size_t row = 0; row < 4; ++row) m(row, col) = img.entries[row];
                }
                rep[slot(i, j)] = std::move(m);
            }
        return {"adjoint", std::move(rep)};
    }

    /// Sym^n(C^2) on the monomial basis e1^{n-p} e2^p, p = 0..n.
    static GL2Module symmetric_power(int n) {
        if (n < 0) throw std::invalid_argument("negative symmetric power");
        const auto dim = static_cast<std::size_t>(n + 1);
        std::array<Matrix, 4> rep;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                Matrix m(dim);
                // E_ij = e_i (d/de_j): replaces one factor e_j by e_i.
                for (int p = 0; p <= n; ++p) {
                    const int pow_e1 = n - p;
                    const int pow_e2 = p;
                    const int mult = (j == 1) ? pow_e1 : pow_e2;
                    if (mult == 0) continue;
                    int q = p;
                    if (j == 1 && i == 2) q = p + 1;
                    if (j == 2 && i == 1) q = p - 1;
                    m(static_cast<std::size_t>(q), static_cast<std::size_t>(p)) += mult;
                }
                rep[slot(i, j)] = std::move(m);
            }
        return {n == 2 ? "sym2" : "sym" + std::to_string(n), std::move(rep)};
    }

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] std::size_t dim() const { return rep_[0].dim(); }
    [[nodiscard]] const Matrix& of(int i, int j) const { return rep_[slot(i, j)]; }
    Matrix& of(int i, int j) { return rep_[slot(i, j)]; }

    [[nodiscard]] Matrix of(const GL2Elem& x) const {
        Matrix out(dim());
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                if (sgn(x.at(i, j)) != 0) out += x.at(i, j) * of(i, j);
        return out;
    }

    /// [rho(E_ij), rho(E_kl)] = delta_jk rho(E_il) - delta_li rho(E_kj) for all index pairs.
    [[nodiscard]] bool satisfies_relations() const {
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                for (int k = 1; k <= 2; ++k)
                    for (int l = 1; l <= 2; ++l) {
                        Matrix rhs(dim());
                        if (j == k) rhs += of(i, l);
                        if (l == i) rhs -= of(k, j);
                        if (!(commutator(of(i, j), of(k, l)) == rhs)) return false;
                    }
        return true;
    }

private:
    static std::size_t slot(int i, int j) { return static_cast<std::size_t>((i - 1) * 2 + (j - 1)); }

    std::string name_;
    std::array<Matrix, 4> rep_;
};

inline GL2Module gl2_module_by_name(const std::string& name) {
    if (name == "natural") return GL2Module::natural();
    if (name == "adjoint") return GL2Module::adjoint();
    if (name == "sym2") return GL2Module::symmetric_power(2);
    throw std::invalid_argument("unknown gl2 module: " + name);
}

}  // namespace jetalg
