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

#ifndef SIGMACHECK_RATFUNC_HPP
#define SIGMACHECK_RATFUNC_HPP

#include "multipoly.hpp"

namespace sigmacheck {

/// Rational function num/den in normal form: den != 0, gcd(num, den) = 1,
/// den monic under graded-lex. Equality is then coordinatewise.
class RatFunc {
  public:
    RatFunc() : num_(), den_(MultiPoly::one()) {}
    RatFunc(const MultiPoly& p) : num_(p), den_(MultiPoly::one()) {}
    RatFunc(const CycloNum& c) : num_(MultiPoly(c)), den_(MultiPoly::one()) {}
    RatFunc(const Rational& q) : RatFunc(CycloNum(q)) {}
    RatFunc(int n) : RatFunc(CycloNum(n)) {}
    RatFunc(const MultiPoly& num, const MultiPoly& den) : num_(num), den_(den) { normalize(); }

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(MultiPoly::one()); }
    static RatFunc variable(const std::string& name) {
        return RatFunc(MultiPoly::variable(name));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == MultiPoly::one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    CycloNum constant_value() const {
        return num_.constant_value() / den_.constant_value();
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero();
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero()) throw DivisionByZero();
        return RatFunc(den_, num_);
    }

    RatFunc pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        RatFunc r = one(), base = *this;
        unsigned long n = static_cast<unsigned long>(e);
        while (n) {
            if (n & 1) r *= base;
            if (n >>= 1) base *= base;
        }
        return r;
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        auto wrap = [](const MultiPoly& p) {
            std::string s = p.to_string();
            bool atom = p.terms().size() == 1;
            return atom ? s : "(" + s + ")";
        };
        return wrap(num_) + " / " + wrap(den_);
    }

  private:
    MultiPoly num_, den_;

    void normalize() {
        if (den_.is_zero()) throw DivisionByZero();
        if (num_.is_zero()) {
            den_ = MultiPoly::one();
            return;
        }
        MultiPoly g = poly_gcd(num_, den_);
        num_ = *MultiPoly::try_divide(num_, g);
        den_ = *MultiPoly::try_divide(den_, g);
        CycloNum lead = den_.leading_coeff();
        num_ = num_.scaled(lead.inverse());
        den_ = den_.scaled(lead.inverse());
    }
};

} // namespace sigmacheck

#endif
