/*
   Copyright 2026 sigmacheck contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SIGMACHECK_POLYMATRIX_HPP
#define SIGMACHECK_POLYMATRIX_HPP

#include "ratfunc.hpp"

namespace sigmacheck {

/// Entry-type hooks for the exact matrix algorithms.
template <class T>
struct ring {
    static T zero() { return T(0); }
    static T one() { return T(1); }
    // Exact quotient; for fields plain division.
    static T exact_div(const T& a, const T& b) { return a / b; }
};

template <>
struct ring<MultiPoly> {
    static MultiPoly zero() { return MultiPoly::zero(); }
    static MultiPoly one() { return MultiPoly::one(); }
    static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
        auto q = MultiPoly::try_divide(a, b);
        if (!q) throw std::logic_error("inexact polynomial division in matrix elimination");
        return *q;
    }
};

/// Dense exact matrix over a commutative ring T.
template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, ring<T>::zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring<T>::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] + b.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] - b.data_[i];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
            }
        return r;
    }

    Matrix scaled(const T& c) const {
        Matrix r = *this;
        for (auto& x : r.data_) x = x * c;
        return r;
    }

    Matrix operator-() const { return scaled(ring<T>::zero() - ring<T>::one()); }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            if (!(a.data_[i] == b.data_[i])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        for (auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix pow(unsigned long e) const {
        require_square();
        Matrix r = identity(rows_), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            if (e >>= 1) base = base * base;
        }
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    T trace() const {
        require_square();
        T t = ring<T>::zero();
        for (std::size_t i = 0; i < rows_; ++i) t = t + at(i, i);
        return t;
    }

    static Matrix kronecker(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                if (a.at(i, j).is_zero()) continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l)
                        r.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
            }
        return r;
    }

    /// Characteristic polynomial of det(tI - A) by the Berkowitz vector method:
    /// division-free, valid over any commutative ring. Returns coefficients
    /// [1, c_1, ..., c_n] with det(tI - A) = t^n + c_1 t^(n-1) + ... + c_n.
    std::vector<T> char_poly() const {
        require_square();
        std::size_t n = rows_;
        std::vector<T> p{ring<T>::one()};
        if (n == 0) return p;
        p.push_back(ring<T>::zero() - at(0, 0));
        for (std::size_t k = 1; k < n; ++k) {
            std::vector<T> t(k + 2, ring<T>::zero());
            t[0] = ring<T>::one();
            t[1] = ring<T>::zero() - at(k, k);
            std::vector<T> v(k);
            for (std::size_t i = 0; i < k; ++i) v[i] = at(i, k);
            for (std::size_t i = 2; i <= k + 1; ++i) {
                T dot = ring<T>::zero();
                for (std::size_t j = 0; j < k; ++j) dot = dot + at(k, j) * v[j];
                t[i] = ring<T>::zero() - dot;
                if (i <= k) {
                    std::vector<T> nv(k, ring<T>::zero());
                    for (std::size_t r = 0; r < k; ++r)
                        for (std::size_t c = 0; c < k; ++c)
                            if (!at(r, c).is_zero()) nv[r] = nv[r] + at(r, c) * v[c];
                    v = std::move(nv);
                }
            }
            std::vector<T> np(k + 2, ring<T>::zero());
            for (std::size_t j = 0; j <= k + 1; ++j)
                for (std::size_t i = 0; i <= j && i <= k + 1; ++i)
                    if (j - i < p.size()) np[j] = np[j] + t[i] * p[j - i];
            p = std::move(np);
        }
        return p;
    }

    /// sigma^(i): coefficient of t^(n-i) in det(tI - A), 0 <= i <= n.
    T sigma(std::size_t i) const {
        auto p = char_poly();
        if (i >= p.size()) throw std::invalid_argument("sigma index out of range");
        return p[i];
    }

    /// Fraction-free determinant (Bareiss); exact over any integral domain.
    T determinant() const {
        require_square();
        std::size_t n = rows_;
        if (n == 0) return ring<T>::one();
        Matrix m = *this;
        T prev = ring<T>::one();
        bool negate = false;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (m.at(k, k).is_zero()) {
                std::size_t r = k + 1;
                while (r < n && m.at(r, k).is_zero()) ++r;
                if (r == n) return ring<T>::zero();
                for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
                negate = !negate;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    m.at(i, j) = ring<T>::exact_div(
                        m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
            prev = m.at(k, k);
        }
        T det = m.at(n - 1, n - 1);
        return negate ? ring<T>::zero() - det : det;
    }

    /// Row rank by Gaussian elimination; requires T to be a field.
    std::size_t rank() const {
        Matrix m = *this;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = r;
            while (sel < rows_ && m.at(sel, c).is_zero()) ++sel;
            if (sel == rows_) continue;
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(r, j));
            T inv = ring<T>::one() / m.at(r, c);
            for (std::size_t j = c; j < cols_; ++j) m.at(r, j) = m.at(r, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || m.at(i, c).is_zero()) continue;
                T f = m.at(i, c);
                for (std::size_t j = c; j < cols_; ++j)
                    m.at(i, j) = m.at(i, j) - f * m.at(r, j);
            }
            ++r;
        }
        return r;
    }

    /// Inverse by Gauss-Jordan; requires T to be a field. Throws on singular input.
    Matrix inverse() const {
        require_square();
        std::size_t n = rows_;
        Matrix m = *this, inv = identity(n);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t sel = c;
            while (sel < n && m.at(sel, c).is_zero()) ++sel;
            if (sel == n) throw std::invalid_argument("singular matrix");
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(sel, j), m.at(c, j));
                std::swap(inv.at(sel, j), inv.at(c, j));
            }
            T piv = ring<T>::one() / m.at(c, c);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(c, j) = m.at(c, j) * piv;
                inv.at(c, j) = inv.at(c, j) * piv;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == c || m.at(i, c).is_zero()) continue;
                T f = m.at(i, c);
                for (std::size_t j = 0; j < n; ++j) {
                    m.at(i, j) = m.at(i, j) - f * m.at(c, j);
                    inv.at(i, j) = inv.at(i, j) - f * inv.at(c, j);
                }
            }
        }
        return inv;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = f(at(i, j));
        return r;
    }

    std::string to_string() const {
        std::ostringstream out;
        for (std::size_t i = 0; i < rows_; ++i) {
            out << "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out << ", ";
                out << at(i, j).to_string();
            }
            out << "]";
            if (i + 1 < rows_) out << "\n";
        }
        return out.str();
    }

    void require_square() const {
        if (rows_ != cols_) throw std::invalid_argument("matrix must be square");
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;

    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }
};

using PolyMatrix = Matrix<MultiPoly>;
using RatMatrix = Matrix<RatFunc>;
using CycloMatrix = Matrix<CycloNum>;

/// Resultant of f and g with respect to `var`: determinant of the Sylvester
/// matrix over the remaining variables. Requires f, g nonzero.
inline MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant requires nonzero inputs");
    auto fc = f.coefficients_in(var);
    auto gc = g.coefficients_in(var);
    std::size_t m = fc.size() - 1, n = gc.size() - 1;
    if (m == 0 && n == 0) return MultiPoly::one();
    if (m == 0) return fc[0].pow(static_cast<unsigned long>(n));
    if (n == 0) return gc[0].pow(static_cast<unsigned long>(m));
    PolyMatrix s(m + n, m + n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) s.at(i, i + j) = fc[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) s.at(n + i, i + j) = gc[n - j];
    return s.determinant();
}

} // namespace sigmacheck

#endif
