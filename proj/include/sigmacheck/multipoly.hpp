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

#ifndef SIGMACHECK_MULTIPOLY_HPP
#define SIGMACHECK_MULTIPOLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cyclotomic.hpp"

namespace sigmacheck {

using Monomial = std::vector<unsigned>;

/// Graded lexicographic order, descending (leading term first in map iteration).
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned long da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da > db;
        return a > b; // lex on exponent vectors, vars ascending by name
    }
};

/// Sparse multivariate polynomial over Q(zeta) with named variables kept in
/// sorted order and terms in graded-lex order.
class MultiPoly {
  public:
    MultiPoly() = default;
    MultiPoly(const CycloNum& c) { if (!c.is_zero()) terms_[{}] = c; }
    MultiPoly(const Rational& q) : MultiPoly(CycloNum(q)) {}
    MultiPoly(int n) : MultiPoly(CycloNum(n)) {}
    MultiPoly(long n) : MultiPoly(CycloNum(n)) {}

    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly one() { return MultiPoly(CycloNum::one()); }

    static MultiPoly variable(const std::string& name) {
        MultiPoly p;
        p.vars_ = {name};
        p.terms_[{1u}] = CycloNum::one();
        return p;
    }

    static MultiPoly term(const CycloNum& c, const std::vector<std::string>& vars,
                          const Monomial& exps) {
        MultiPoly p;
        if (c.is_zero()) return p;
        if (vars.size() != exps.size()) throw std::invalid_argument("term shape mismatch");
        p.vars_ = vars;
        p.terms_[exps] = c;
        p.sort_vars();
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Monomial, CycloNum, GrlexGreater>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        for (unsigned e : terms_.begin()->first)
            if (e) return false;
        return true;
    }

    CycloNum constant_value() const {
        if (terms_.empty()) return CycloNum::zero();
        if (!is_constant()) throw std::invalid_argument("not a constant polynomial");
        return terms_.begin()->second;
    }

    /// Total degree; -1 for the zero polynomial.
    long total_degree() const {
        if (terms_.empty()) return -1;
        unsigned long d = 0;
        for (unsigned e : terms_.begin()->first) d += e; // leading term has max degree
        return static_cast<long>(d);
    }

    long degree_in(const std::string& var) const {
        auto idx = var_index(var);
        if (!idx) return terms_.empty() ? -1 : 0;
        long d = terms_.empty() ? -1 : 0;
        for (auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[*idx]));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        std::optional<unsigned long> deg;
        for (auto& [m, c] : terms_) {
            unsigned long d = 0;
            for (unsigned e : m) d += e;
            if (!deg) deg = d;
            else if (*deg != d) return false;
        }
        return true;
    }

    const CycloNum& leading_coeff() const {
        if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
        return terms_.begin()->second;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        auto [x, y] = aligned(a, b);
        for (auto& [m, c] : y.terms_) x.add_term(m, c);
        return x;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        auto [x, y] = aligned(a, b);
        for (auto& [m, c] : y.terms_) x.add_term(m, -c);
        return x;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        if (a.is_zero() || b.is_zero()) return MultiPoly();
        auto [x, y] = aligned(a, b);
        MultiPoly r;
        r.vars_ = x.vars_;
        Monomial m(x.vars_.size());
        for (auto& [ma, ca] : x.terms_)
            for (auto& [mb, cb] : y.terms_) {
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const CycloNum& c) const {
        if (c.is_zero()) return MultiPoly();
        MultiPoly r = *this;
        for (auto& [m, k] : r.terms_) k *= c;
        return r;
    }

    MultiPoly pow(unsigned long e) const {
        MultiPoly r = one(), base = *this;
        while (e) {
            if (e & 1) r *= base;
            if (e >>= 1) base *= base;
        }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        auto [x, y] = aligned(a, b);
        if (x.terms_.size() != y.terms_.size()) return false;
        auto it = x.terms_.begin(), jt = y.terms_.begin();
        for (; it != x.terms_.end(); ++it, ++jt)
            if (it->first != jt->first || !(it->second == jt->second)) return false;
        return true;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Simultaneous substitution of variables by polynomials (partial allowed).
    MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const {
        MultiPoly r;
        for (auto& [m, c] : terms_) {
            MultiPoly t(c);
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (m[i] == 0) continue;
                auto bound = bindings.find(vars_[i]);
                MultiPoly base =
                    bound == bindings.end() ? variable(vars_[i]) : bound->second;
                t *= base.pow(m[i]);
            }
            r += t;
        }
        return r;
    }

    /// Full evaluation at scalar points; every variable must be bound.
    CycloNum evaluate(const std::map<std::string, CycloNum>& point) const {
        CycloNum r = CycloNum::zero();
        for (auto& [m, c] : terms_) {
            CycloNum t = c;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (m[i] == 0) continue;
                auto bound = point.find(vars_[i]);
                if (bound == point.end())
                    throw std::invalid_argument("unbound variable " + vars_[i]);
                t *= bound->second.pow(static_cast<long>(m[i]));
            }
            r += t;
        }
        return r;
    }

    MultiPoly derivative(const std::string& var) const {
        auto idx = var_index(var);
        MultiPoly r;
        if (!idx) return r;
        r.vars_ = vars_;
        for (auto& [m, c] : terms_) {
            if (m[*idx] == 0) continue;
            Monomial d = m;
            --d[*idx];
            r.add_term(d, c * CycloNum(Rational(static_cast<long>(m[*idx]))));
        }
        return r;
    }

    /// Coefficients of this polynomial viewed as univariate in `var`,
    /// ascending powers; coefficients keep the full variable context.
    std::vector<MultiPoly> coefficients_in(const std::string& var) const {
        long d = degree_in(var);
        std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(d + 1, 1L)));
        auto idx = var_index(var);
        if (!idx) {
            out[0] = *this;
            return out;
        }
        for (auto& [m, c] : terms_) {
            Monomial rest = m;
            unsigned e = rest[*idx];
            rest[*idx] = 0;
            out[e].vars_ = vars_;
            out[e].add_term(rest, c);
        }
        return out;
    }

    /// Rebuild from univariate coefficients in `var`.
    static MultiPoly from_coefficients(const std::string& var,
                                       const std::vector<MultiPoly>& coeffs) {
        MultiPoly x = variable(var);
        MultiPoly r;
        for (std::size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
        return r;
    }

    /// Exact division; nullopt when divisor does not divide exactly.
    static std::optional<MultiPoly> try_divide(const MultiPoly& f, const MultiPoly& g) {
        if (g.is_zero()) throw DivisionByZero();
        auto [num, den] = aligned(f, g);
        MultiPoly q;
        q.vars_ = num.vars_;
        const Monomial& gm = den.terms_.begin()->first;
        const CycloNum& gc = den.terms_.begin()->second;
        while (!num.is_zero()) {
            const Monomial& nm = num.terms_.begin()->first;
            Monomial d(nm.size());
            for (std::size_t i = 0; i < nm.size(); ++i) {
                if (nm[i] < gm[i]) return std::nullopt;
                d[i] = nm[i] - gm[i];
            }
            CycloNum c = num.terms_.begin()->second / gc;
            MultiPoly t;
            t.vars_ = num.vars_;
            t.terms_[d] = c;
            q.add_term(d, c);
            num -= t * den;
        }
        return q;
    }

    static bool divides(const MultiPoly& g, const MultiPoly& f) {
        return static_cast<bool>(try_divide(f, g));
    }

    /// Monic under graded-lex: leading coefficient scaled to 1.
    MultiPoly monic() const {
        if (is_zero()) return *this;
        return scaled(leading_coeff().inverse());
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto& [m, c] : terms_) {
            std::string mono = monomial_string(m);
            CycloNum cc = c.normalized();
            bool neg = cc.is_rational() && cc.rational_value().sign() < 0;
            if (first) {
                if (neg) out << "-";
                first = false;
            } else {
                out << (neg ? " - " : " + ");
            }
            CycloNum mag = neg ? -cc : cc;
            std::string cs = mag.to_string();
            if (mono.empty()) {
                out << (mag.is_rational() ? cs : "(" + cs + ")");
            } else {
                if (!mag.is_rational()) out << "(" << cs << ")*";
                else if (cs != "1") out << cs << "*";
                out << mono;
            }
        }
        return out.str();
    }

  private:
    std::vector<std::string> vars_;
    std::map<Monomial, CycloNum, GrlexGreater> terms_;

    std::optional<std::size_t> var_index(const std::string& var) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
        if (it == vars_.end() || *it != var) return std::nullopt;
        return static_cast<std::size_t>(it - vars_.begin());
    }

    void add_term(const Monomial& m, const CycloNum& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void sort_vars() {
        std::vector<std::size_t> order(vars_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return vars_[a] < vars_[b]; });
        for (std::size_t i = 0; i + 1 < vars_.size(); ++i)
            if (vars_[order[i]] == vars_[order[i + 1]])
                throw std::invalid_argument("duplicate variable " + vars_[order[i]]);
        std::vector<std::string> nv(vars_.size());
        for (std::size_t i = 0; i < order.size(); ++i) nv[i] = vars_[order[i]];
        std::map<Monomial, CycloNum, GrlexGreater> nt;
        for (auto& [m, c] : terms_) {
            Monomial nm(m.size());
            for (std::size_t i = 0; i < order.size(); ++i) nm[i] = m[order[i]];
            nt[nm] = c;
        }
        vars_ = std::move(nv);
        terms_ = std::move(nt);
    }

    /// Rewrites a and b over the union of their variables.
    static std::pair<MultiPoly, MultiPoly> aligned(const MultiPoly& a, const MultiPoly& b) {
        if (a.vars_ == b.vars_) return {a, b};
        std::vector<std::string> merged;
        std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                       std::back_inserter(merged));
        return {a.remapped(merged), b.remapped(merged)};
    }

    MultiPoly remapped(const std::vector<std::string>& merged) const {
        MultiPoly r;
        r.vars_ = merged;
        std::vector<std::size_t> where(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::lower_bound(merged.begin(), merged.end(), vars_[i]);
            where[i] = static_cast<std::size_t>(it - merged.begin());
        }
        for (auto& [m, c] : terms_) {
            Monomial nm(merged.size(), 0u);
            for (std::size_t i = 0; i < vars_.size(); ++i) nm[where[i]] = m[i];
            r.terms_[nm] = c;
        }
        return r;
    }

    std::string monomial_string(const Monomial& m) const {
        std::ostringstream out;
        bool any = false;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (m[i] == 0) continue;
            if (any) out << "*";
            out << vars_[i];
            if (m[i] > 1) out << "^" << m[i];
            any = true;
        }
        return out.str();
    }
};

/// Pseudo-remainder of f by g with respect to `var`:
/// lc_x(g)^(deg f - deg g + 1) * f = q*g + prem, with deg_x(prem) < deg_x(g).
inline MultiPoly pseudo_remainder(const MultiPoly& f, const MultiPoly& g,
                                  const std::string& var) {
    long m = f.degree_in(var), n = g.degree_in(var);
    if (n < 0) throw DivisionByZero();
    if (m < n) return f;
    auto gc = g.coefficients_in(var);
    MultiPoly lead = gc.back();
    MultiPoly r = f;
    long e = m - n + 1;
    MultiPoly x = MultiPoly::variable(var);
    while (!r.is_zero() && r.degree_in(var) >= n) {
        auto rc = r.coefficients_in(var);
        long dr = r.degree_in(var);
        MultiPoly shift = x.pow(static_cast<unsigned long>(dr - n));
        r = r * lead - rc[static_cast<std::size_t>(dr)] * shift * g;
        --e;
    }
    for (long i = 0; i < e; ++i) r *= lead;
    return r;
}

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// Gcd of the coefficients of f seen as univariate in `var`.
inline MultiPoly content_in(const MultiPoly& f, const std::string& var) {
    MultiPoly c;
    for (auto& coeff : f.coefficients_in(var)) c = poly_gcd(c, coeff);
    return c;
}

namespace detail {

/// Gcd image check: substitute small integers for every variable except `var`
/// and take a univariate gcd. When both degrees survive specialization and the
/// images are coprime, the primitive parts are coprime.
inline bool images_coprime(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    SplitMix64 rng(0x5eedc0de);
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::map<std::string, MultiPoly> point;
        for (auto& v : f.vars())
            if (v != var) point[v] = MultiPoly(CycloNum(Rational(rng.next_int(-9, 9))));
        for (auto& v : g.vars())
            if (v != var && !point.count(v))
                point[v] = MultiPoly(CycloNum(Rational(rng.next_int(-9, 9))));
        MultiPoly fi = f.substitute(point), gi = g.substitute(point);
        if (fi.degree_in(var) != f.degree_in(var)) continue;
        if (gi.degree_in(var) != g.degree_in(var)) continue;
        // univariate Euclid over the cyclotomic field
        std::vector<MultiPoly> u = fi.coefficients_in(var), w = gi.coefficients_in(var);
        auto deg = [](const std::vector<MultiPoly>& p) { return static_cast<long>(p.size()) - 1; };
        auto trim = [](std::vector<MultiPoly>& p) {
            while (!p.empty() && p.back().is_zero()) p.pop_back();
        };
        trim(u);
        trim(w);
        while (!w.empty()) {
            while (deg(u) >= deg(w)) {
                CycloNum c = u.back().constant_value() / w.back().constant_value();
                std::size_t shift = u.size() - w.size();
                for (std::size_t i = 0; i < w.size(); ++i)
                    u[shift + i] -= w[i].scaled(c);
                trim(u);
                if (u.empty()) break;
            }
            std::swap(u, w);
        }
        return deg(u) == 0;
    }
    return false;
}

} // namespace detail

/// Gcd in Q(zeta)[x1..xn], normalized monic under graded-lex.
/// Subresultant polynomial remainder sequence over a recursively chosen main
/// variable, with trial-division and specialization shortcuts.
inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return MultiPoly::one();

    // main variable: first (sorted) variable of positive degree in either
    std::string var;
    for (auto& v : a.vars())
        if (a.degree_in(v) > 0) { var = v; break; }
    if (var.empty())
        for (auto& v : b.vars())
            if (b.degree_in(v) > 0) { var = v; break; }

    long da = a.degree_in(var), db = b.degree_in(var);
    if (da == 0) return poly_gcd(a, content_in(b, var));
    if (db == 0) return poly_gcd(content_in(a, var), b);

    MultiPoly ca = content_in(a, var), cb = content_in(b, var);
    MultiPoly r0 = *MultiPoly::try_divide(a, ca);
    MultiPoly r1 = *MultiPoly::try_divide(b, cb);
    MultiPoly cg = poly_gcd(ca, cb);
    if (r0.degree_in(var) < r1.degree_in(var)) std::swap(r0, r1);

    if (MultiPoly::divides(r1, r0)) return (cg * r1).monic();
    if (detail::images_coprime(r0, r1, var)) return cg.monic();

    // subresultant PRS (Collins): divide each pseudo-remainder by g*h^d
    MultiPoly g = MultiPoly::one(), h = MultiPoly::one();
    while (true) {
        long d = r0.degree_in(var) - r1.degree_in(var);
        MultiPoly r = pseudo_remainder(r0, r1, var);
        if (r.is_zero()) break;
        MultiPoly divisor = g * h.pow(static_cast<unsigned long>(d));
        MultiPoly next = *MultiPoly::try_divide(r, divisor);
        r0 = std::move(r1);
        r1 = std::move(next);
        g = r0.coefficients_in(var).back();
        if (d >= 1) {
            MultiPoly gp = g.pow(static_cast<unsigned long>(d));
            h = d == 1 ? gp : *MultiPoly::try_divide(gp, h.pow(static_cast<unsigned long>(d - 1)));
        }
        if (r1.degree_in(var) == 0) return cg.monic();
    }
    MultiPoly pp = *MultiPoly::try_divide(r1, content_in(r1, var));
    return (cg * pp).monic();
}

} // namespace sigmacheck

#endif
