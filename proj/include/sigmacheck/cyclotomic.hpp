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

#ifndef SIGMACHECK_CYCLOTOMIC_HPP
#define SIGMACHECK_CYCLOTOMIC_HPP

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace sigmacheck {

// Dense univariate helpers over Rational, coefficients ascending, used only
// within this header for modular arithmetic in Q[t]/(Phi_N).
namespace detail {

inline void poly_trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int poly_deg(const std::vector<Rational>& p) { return static_cast<int>(p.size()) - 1; }

inline std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    poly_trim(c);
    return c;
}

/// Exact division; throws if the remainder is nonzero.
inline std::vector<Rational> poly_div_exact(std::vector<Rational> a, const std::vector<Rational>& b) {
    if (b.empty()) throw DivisionByZero();
    std::vector<Rational> q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0);
    const Rational lead = b.back();
    while (poly_deg(a) >= poly_deg(b)) {
        int shift = poly_deg(a) - poly_deg(b);
        Rational c = a.back() / lead;
        q[static_cast<std::size_t>(shift)] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[static_cast<std::size_t>(shift) + i] -= c * b[i];
        poly_trim(a);
    }
    if (!a.empty()) throw std::invalid_argument("polynomial division is not exact");
    poly_trim(q);
    return q;
}

inline std::vector<Rational> poly_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
    const Rational lead = b.back();
    while (poly_deg(a) >= poly_deg(b)) {
        int shift = poly_deg(a) - poly_deg(b);
        Rational c = a.back() / lead;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[static_cast<std::size_t>(shift) + i] -= c * b[i];
        poly_trim(a);
    }
    return a;
}

/// Extended Euclid: returns (g, s) with s*a = g mod m, g the monic gcd.
inline std::pair<std::vector<Rational>, std::vector<Rational>>
poly_half_xgcd(std::vector<Rational> a, std::vector<Rational> m) {
    std::vector<Rational> s0{Rational(1)}, s1;
    while (!m.empty()) {
        // quotient of a by m
        std::vector<Rational> q(poly_deg(a) >= poly_deg(m)
                                    ? static_cast<std::size_t>(poly_deg(a) - poly_deg(m)) + 1
                                    : 0);
        std::vector<Rational> r = a;
        const Rational lead = m.back();
        while (poly_deg(r) >= poly_deg(m)) {
            int shift = poly_deg(r) - poly_deg(m);
            Rational c = r.back() / lead;
            q[static_cast<std::size_t>(shift)] = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                r[static_cast<std::size_t>(shift) + i] -= c * m[i];
            poly_trim(r);
        }
        poly_trim(q);
        auto qs1 = poly_mul(q, s1);
        std::vector<Rational> s2 = s0;
        if (s2.size() < qs1.size()) s2.resize(qs1.size());
        for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        poly_trim(s2);
        a = std::move(m);
        m = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (a.empty()) throw std::invalid_argument("xgcd of zero polynomials");
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    for (auto& c : s0) c /= lead;
    return {a, s0};
}

} // namespace detail

/// Coefficients of the N-th cyclotomic polynomial, ascending degree, monic.
inline const std::vector<Rational>& cyclotomic_polynomial(unsigned long n) {
    static std::map<unsigned long, std::vector<Rational>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::function<const std::vector<Rational>&(unsigned long)> get =
        [&](unsigned long m) -> const std::vector<Rational>& {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        std::vector<Rational> f(m + 1);
        f[0] = Rational(-1);
        f[m] = Rational(1); // t^m - 1
        for (unsigned long d : divisors(m))
            if (d != m) f = detail::poly_div_exact(f, get(d));
        return cache.emplace(m, std::move(f)).first->second;
    };
    return get(n);
}

/// Element of a cyclotomic field Q(zeta_N), stored in the power basis
/// 1, zeta_N, ..., zeta_N^{phi(N)-1} with coordinates reduced mod Phi_N.
class CycloNum {
  public:
    CycloNum() : level_(1), coords_{Rational(0)} {}
    CycloNum(const Rational& q) : level_(1), coords_{q} {}
    CycloNum(int n) : CycloNum(Rational(n)) {}
    CycloNum(long n) : CycloNum(Rational(n)) {}

    /// Element from explicit power-basis coordinates (size phi(level)).
    CycloNum(unsigned long level, std::vector<Rational> coords) : level_(level) {
        if (level == 0) throw std::invalid_argument("cyclotomic level must be >= 1");
        std::size_t phi = euler_phi(level);
        if (coords.size() != phi)
            throw std::invalid_argument("expected " + std::to_string(phi) +
                                        " coordinates for level " + std::to_string(level));
        coords_ = std::move(coords);
    }

    static CycloNum zero() { return CycloNum(); }
    static CycloNum one() { return CycloNum(Rational(1)); }

    /// zeta_N^k.
    static CycloNum root_of_unity(unsigned long n, long k = 1) {
        if (n == 0) throw std::invalid_argument("root of unity order must be >= 1");
        long r = k % static_cast<long>(n);
        if (r < 0) r += static_cast<long>(n);
        std::vector<Rational> poly(static_cast<std::size_t>(r) + 1);
        poly[static_cast<std::size_t>(r)] = Rational(1);
        return from_poly(n, std::move(poly));
    }

    unsigned long level() const { return level_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        for (auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }

    // The power basis starts at 1, so rationals are exactly the elements whose
    // higher coordinates vanish, at any level.
    bool is_rational() const {
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (!coords_[i].is_zero()) return false;
        return true;
    }

    Rational rational_value() const {
        if (!is_rational()) throw std::invalid_argument("not a rational element");
        return coords_[0];
    }

    CycloNum operator-() const {
        CycloNum r = *this;
        for (auto& c : r.coords_) c = -c;
        return r;
    }

    friend CycloNum operator+(const CycloNum& a, const CycloNum& b) {
        auto [x, y, lvl] = align(a, b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
        return CycloNum(lvl, std::move(x));
    }

    friend CycloNum operator-(const CycloNum& a, const CycloNum& b) {
        auto [x, y, lvl] = align(a, b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
        return CycloNum(lvl, std::move(x));
    }

    friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
        auto [x, y, lvl] = align(a, b);
        return from_poly(lvl, detail::poly_mul(strip(x), strip(y)));
    }

    friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

    CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
    CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
    CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }
    CycloNum& operator/=(const CycloNum& o) { return *this = *this / o; }

    CycloNum inverse() const {
        if (is_zero()) throw DivisionByZero();
        if (is_rational()) return CycloNum(Rational(1) / coords_[0]);
        auto [g, s] = detail::poly_half_xgcd(strip(coords_), cyclotomic_polynomial(level_));
        if (detail::poly_deg(g) != 0)
            throw std::logic_error("cyclotomic polynomial not coprime to nonzero element");
        return from_poly(level_, s);
    }

    CycloNum pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CycloNum r = one(), base = *this;
        unsigned long n = static_cast<unsigned long>(e);
        while (n) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        auto [x, y, lvl] = align(a, b);
        (void)lvl;
        return x == y;
    }
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    /// Rewrites onto the minimal cyclotomic level containing the element.
    CycloNum normalized() const {
        CycloNum r = *this;
        bool changed = true;
        while (changed && r.level_ > 1) {
            changed = false;
            for (auto& [p, mult] : factorize(r.level_)) {
                unsigned long m = r.level_ / p;
                if (auto down = r.express_at(m)) {
                    r = CycloNum(m, std::move(*down));
                    changed = true;
                    break;
                }
            }
        }
        return r;
    }

    /// Canonical serialization; minimal level, ascending powers of zeta.
    std::string to_string() const {
        CycloNum n = normalized();
        if (n.is_rational()) return n.coords_[0].to_string();
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = 0; i < n.coords_.size(); ++i) {
            const Rational& c = n.coords_[i];
            if (c.is_zero()) continue;
            Rational a = c.abs();
            if (first) {
                if (c.sign() < 0) out << "-";
                first = false;
            } else {
                out << (c.sign() < 0 ? " - " : " + ");
            }
            if (i == 0) {
                out << a.to_string();
                continue;
            }
            if (a != Rational(1)) out << a.to_string() << "*";
            out << "zeta(" << n.level_ << ")";
            if (i > 1) out << "^" << i;
        }
        return out.str();
    }

  private:
    unsigned long level_;
    std::vector<Rational> coords_;

    static std::vector<Rational> strip(std::vector<Rational> v) {
        detail::poly_trim(v);
        return v;
    }

    /// Builds an element at `level` from a polynomial in zeta of any degree.
    static CycloNum from_poly(unsigned long level, std::vector<Rational> poly) {
        const auto& phi = cyclotomic_polynomial(level);
        std::size_t deg = phi.size() - 1; // = euler_phi(level) >= 1
        if (poly.size() > deg) poly = detail::poly_rem(std::move(poly), phi);
        poly.resize(deg, Rational(0));
        return CycloNum(level, std::move(poly));
    }

    /// Coordinates of this element lifted to level L (level_ | L).
    std::vector<Rational> lift_coords(unsigned long big) const {
        unsigned long step = big / level_;
        std::vector<Rational> poly;
        poly.resize((coords_.size() - 1) * step + 1, Rational(0));
        for (std::size_t i = 0; i < coords_.size(); ++i) poly[i * step] = coords_[i];
        CycloNum lifted = from_poly(big, std::move(poly));
        return lifted.coords_;
    }

    static std::tuple<std::vector<Rational>, std::vector<Rational>, unsigned long>
    align(const CycloNum& a, const CycloNum& b) {
        unsigned long lvl = lcm_u(a.level_, b.level_);
        return {a.lift_coords(lvl), b.lift_coords(lvl), lvl};
    }

    /// Solves for coordinates at sublevel m (m | level), if the element lies there.
    std::optional<std::vector<Rational>> express_at(unsigned long m) const {
        std::size_t rows = coords_.size();
        std::size_t cols = euler_phi(m);
        // columns: lifts of zeta_m^j, j < phi(m)
        std::vector<std::vector<Rational>> col(cols);
        for (std::size_t j = 0; j < cols; ++j)
            col[j] = root_of_unity(m, static_cast<long>(j)).lift_coords(level_);
        // exact Gaussian elimination on the augmented system
        std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1));
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t j = 0; j < cols; ++j) aug[r][j] = col[j][r];
            aug[r][cols] = coords_[r];
        }
        std::vector<std::size_t> pivot_col;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t sel = r;
            while (sel < rows && aug[sel][c].is_zero()) ++sel;
            if (sel == rows) continue;
            std::swap(aug[sel], aug[r]);
            Rational inv = Rational(1) / aug[r][c];
            for (std::size_t k = c; k <= cols; ++k) aug[r][k] *= inv;
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r || aug[i][c].is_zero()) continue;
                Rational f = aug[i][c];
                for (std::size_t k = c; k <= cols; ++k) aug[i][k] -= f * aug[r][k];
            }
            pivot_col.push_back(c);
            ++r;
        }
        for (std::size_t i = r; i < rows; ++i)
            if (!aug[i][cols].is_zero()) return std::nullopt;
        std::vector<Rational> sol(cols, Rational(0));
        for (std::size_t i = 0; i < pivot_col.size(); ++i) sol[pivot_col[i]] = aug[i][cols];
        return sol;
    }
};

/// Multiplicative order of x if x is a root of unity, nullopt otherwise.
/// Roots of unity in Q(zeta_N) have order dividing lcm(2, N).
inline std::optional<unsigned long> root_of_unity_order(const CycloNum& x) {
    if (x.is_zero()) return std::nullopt;
    unsigned long m = lcm_u(2, x.level());
    if (x.pow(static_cast<long>(m)) != CycloNum::one()) return std::nullopt;
    for (unsigned long d : divisors(m))
        if (x.pow(static_cast<long>(d)) == CycloNum::one()) return d;
    return std::nullopt;
}

} // namespace sigmacheck

#endif
