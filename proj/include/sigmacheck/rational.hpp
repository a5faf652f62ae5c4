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

#ifndef SIGMACHECK_RATIONAL_HPP
#define SIGMACHECK_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sigmacheck {

/// Thrown by every exact division with a zero divisor.
struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// Arbitrary-precision rational in canonical lowest terms, positive denominator.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw DivisionByZero();
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(mpz_class(s));
        return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    }

    const mpz_class num() const { return v_.get_num(); }
    const mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational pow(long e) const {
        if (e < 0) {
            if (is_zero()) throw DivisionByZero();
            return Rational(1) / pow(-e);
        }
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        Rational r;
        r.v_ = mpq_class(n, d);
        return r;
    }

    /// Canonical form: "p" for integers, "p/q" otherwise; '-' binds to the numerator.
    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

  private:
    mpq_class v_;
};

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline unsigned long gcd_u(unsigned long a, unsigned long b) { return std::gcd(a, b); }

inline unsigned long lcm_u(unsigned long a, unsigned long b) {
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

/// Prime factorization by trial division, as (prime, multiplicity) pairs in ascending order.
inline std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n) {
    std::vector<std::pair<unsigned long, unsigned>> f;
    for (unsigned long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned m = 0;
        while (n % p == 0) { n /= p; ++m; }
        f.emplace_back(p, m);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

/// Product of the distinct prime divisors (1 for n = 1).
inline unsigned long squarefree_part(unsigned long n) {
    unsigned long r = 1;
    for (auto& [p, m] : factorize(n)) r *= p;
    return r;
}

inline unsigned long euler_phi(unsigned long n) {
    unsigned long r = n;
    for (auto& [p, m] : factorize(n)) r = r / p * (p - 1);
    return r;
}

inline std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> d;
    for (unsigned long i = 1; i * i <= n; ++i) {
        if (n % i) continue;
        d.push_back(i);
        if (i != n / i) d.push_back(n / i);
    }
    std::sort(d.begin(), d.end());
    return d;
}

/// splitmix64: tiny deterministic PRNG used for reproducible sampling.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return bound ? next() % bound : 0; }

    /// Uniform integer in [lo, hi].
    long next_int(long lo, long hi) {
        return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

/// Stable per-trial seed derivation: trial streams never overlap across indices.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0x5851f42d4c957f2dULL * (index + 1)));
    g.next();
    return g.next();
}

} // namespace sigmacheck

#endif
