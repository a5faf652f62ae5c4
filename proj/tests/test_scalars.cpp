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

#include <gtest/gtest.h>

#include <sigmacheck/cyclotomic.hpp>
#include <sigmacheck/rational.hpp>

using namespace sigmacheck;

namespace {

CycloNum zeta(unsigned long n, long k = 1) { return CycloNum::root_of_unity(n, k); }

// Deterministic sampler over a few cyclotomic levels with small coordinates.
CycloNum sample_cyclo(SplitMix64& g) {
    static const unsigned long levels[] = {1, 2, 3, 4, 5, 6, 8, 12};
    unsigned long lvl = levels[g.next_below(8)];
    std::size_t phi = euler_phi(lvl);
    std::vector<Rational> coords(phi);
    for (auto& c : coords) c = Rational(g.next_int(-4, 4), g.next_int(1, 3));
    return CycloNum(lvl, coords);
}

} // namespace

TEST(Rational, CanonicalLowestTerms) {
    Rational r(6, -4);
    EXPECT_EQ(r.num(), mpz_class(-3));
    EXPECT_EQ(r.den(), mpz_class(2));
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(Rational(10, 5).to_string(), "2");
    EXPECT_EQ(Rational::from_string("6/-4"), r);
    EXPECT_EQ(Rational::from_string("-42"), Rational(-42));
}

TEST(Rational, ArithmeticAndPow) {
    Rational a(1, 2), b(1, 3);
    EXPECT_EQ(a + b, Rational(5, 6));
    EXPECT_EQ(a * b, Rational(1, 6));
    EXPECT_EQ(a - b, Rational(1, 6));
    EXPECT_EQ(a / b, Rational(3, 2));
    EXPECT_EQ(a.pow(3), Rational(1, 8));
    EXPECT_EQ(a.pow(-2), Rational(4));
    EXPECT_EQ(Rational(-1).pow(-3), Rational(-1));
    EXPECT_THROW(a / Rational(0), DivisionByZero);
    EXPECT_THROW(Rational(0).pow(-1), DivisionByZero);
}

TEST(IntegerHelpers, Basics) {
    EXPECT_EQ(binomial(5, 2), mpz_class(10));
    EXPECT_EQ(binomial(6, 0), mpz_class(1));
    EXPECT_EQ(squarefree_part(12), 6ul);
    EXPECT_EQ(squarefree_part(1), 1ul);
    EXPECT_EQ(squarefree_part(30), 30ul);
    EXPECT_EQ(euler_phi(1), 1ul);
    EXPECT_EQ(euler_phi(8), 4ul);
    EXPECT_EQ(euler_phi(12), 4ul);
    EXPECT_EQ(divisors(12), (std::vector<unsigned long>{1, 2, 3, 4, 6, 12}));
    auto f = factorize(60);
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0], (std::pair<unsigned long, unsigned>{2, 2}));
    EXPECT_EQ(f[1], (std::pair<unsigned long, unsigned>{3, 1}));
    EXPECT_EQ(f[2], (std::pair<unsigned long, unsigned>{5, 1}));
}

TEST(CyclotomicPolynomial, SmallCases) {
    auto str = [](const std::vector<Rational>& p) {
        std::string s;
        for (auto& c : p) s += c.to_string() + ",";
        return s;
    };
    EXPECT_EQ(str(cyclotomic_polynomial(1)), "-1,1,");
    EXPECT_EQ(str(cyclotomic_polynomial(2)), "1,1,");
    EXPECT_EQ(str(cyclotomic_polynomial(3)), "1,1,1,");
    EXPECT_EQ(str(cyclotomic_polynomial(4)), "1,0,1,");
    EXPECT_EQ(str(cyclotomic_polynomial(6)), "1,-1,1,");
    EXPECT_EQ(str(cyclotomic_polynomial(12)), "1,0,-1,0,1,");
}

TEST(CyclotomicPolynomial, RootsVanishThroughLevel24) {
    for (unsigned long n = 1; n <= 24; ++n) {
        const auto& phi = cyclotomic_polynomial(n);
        CycloNum z = zeta(n);
        CycloNum acc = CycloNum::zero();
        for (std::size_t i = phi.size(); i-- > 0;) acc = acc * z + CycloNum(phi[i]);
        EXPECT_TRUE(acc.is_zero()) << "Phi_" << n << " at zeta_" << n;
        EXPECT_EQ(z.pow(static_cast<long>(n)), CycloNum::one());
    }
}

TEST(CycloNum, SpecExamples) {
    CycloNum i = CycloNum(4, {Rational(0), Rational(1)});
    EXPECT_EQ(i * i, CycloNum(Rational(-1)));
    EXPECT_EQ(zeta(3) + zeta(3, 2), CycloNum(Rational(-1)));
    EXPECT_EQ(CycloNum::one() / zeta(4), zeta(4, 3));
    EXPECT_EQ(zeta(4).pow(6), CycloNum(Rational(-1)));
    EXPECT_EQ(CycloNum(Rational(0)).pow(0), CycloNum::one());
    EXPECT_THROW(CycloNum::zero().inverse(), DivisionByZero);
    EXPECT_THROW(CycloNum(Rational(1)) / CycloNum::zero(), DivisionByZero);
}

TEST(CycloNum, MixedLevelEquality) {
    // zeta_3 expressed at level 12 equals zeta_3 at level 3
    CycloNum a = zeta(12, 4);
    CycloNum b = zeta(3);
    EXPECT_EQ(a, b);
    EXPECT_EQ(zeta(6, 3), CycloNum(Rational(-1)));
    EXPECT_EQ(zeta(8, 2), zeta(4));
    EXPECT_NE(zeta(8), zeta(8, 3));
}

TEST(CycloNum, NormalizedMinimalLevel) {
    EXPECT_EQ(zeta(6, 3).normalized().level(), 1ul);
    EXPECT_EQ(zeta(8, 2).normalized().level(), 4ul);
    EXPECT_EQ(zeta(12, 4).normalized().level(), 3ul);
    EXPECT_EQ((zeta(3) * zeta(3, 2)).normalized().level(), 1ul);
    EXPECT_EQ(zeta(8).normalized().level(), 8ul);
    // level 2 collapses to level 1
    EXPECT_EQ(CycloNum::root_of_unity(2, 1).normalized().level(), 1ul);
}

TEST(CycloNum, Serialization) {
    EXPECT_EQ(CycloNum(Rational(-3, 2)).to_string(), "-3/2");
    EXPECT_EQ(zeta(4).to_string(), "zeta(4)");
    EXPECT_EQ(zeta(8, 3).to_string(), "zeta(8)^3");
    EXPECT_EQ((CycloNum(1) + zeta(3)).to_string(), "1 + zeta(3)");
    EXPECT_EQ((CycloNum(Rational(1, 2)) - CycloNum(Rational(2)) * zeta(3)).to_string(),
              "1/2 - 2*zeta(3)");
    // non-minimal representation prints at minimal level
    EXPECT_EQ(zeta(12, 6).to_string(), "-1");
}

TEST(CycloNum, RingAxiomsRandomized) {
    SplitMix64 g(20260816);
    for (int t = 0; t < 1000; ++t) {
        CycloNum x = sample_cyclo(g), y = sample_cyclo(g), z = sample_cyclo(g);
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x + CycloNum::zero(), x);
        EXPECT_EQ(x * CycloNum::one(), x);
        EXPECT_EQ(x - x, CycloNum::zero());
        if (!x.is_zero()) {
            EXPECT_EQ(x * x.inverse(), CycloNum::one());
            EXPECT_EQ((y / x) * x, y);
        }
    }
}

TEST(CycloNum, PowMatchesRepeatedMultiplication) {
    SplitMix64 g(7);
    for (int t = 0; t < 50; ++t) {
        CycloNum x = sample_cyclo(g);
        CycloNum acc = CycloNum::one();
        for (long e = 0; e <= 6; ++e) {
            EXPECT_EQ(x.pow(e), acc);
            acc *= x;
        }
        if (!x.is_zero()) EXPECT_EQ(x.pow(-2), (x * x).inverse());
    }
}

TEST(RootOfUnityOrder, SpecCases) {
    EXPECT_EQ(root_of_unity_order(CycloNum::one()), 1ul);
    EXPECT_EQ(root_of_unity_order(CycloNum(Rational(-1))), 2ul);
    EXPECT_EQ(root_of_unity_order(zeta(6)), 6ul);
    EXPECT_EQ(root_of_unity_order(CycloNum(Rational(2))), std::nullopt);
    EXPECT_EQ(root_of_unity_order(CycloNum::zero()), std::nullopt);
    EXPECT_EQ(root_of_unity_order(zeta(3, 2)), 3ul);
    EXPECT_EQ(root_of_unity_order(zeta(8, 3)), 8ul);
    EXPECT_EQ(root_of_unity_order(zeta(8, 2)), 4ul);
    EXPECT_EQ(root_of_unity_order(CycloNum(Rational(1, 2)) + zeta(3)), std::nullopt);
    // -zeta_3 has order 6 inside Q(zeta_3): the lcm(2, N) bound matters
    EXPECT_EQ(root_of_unity_order(-zeta(3)), 6ul);
}

TEST(RootOfUnityOrder, AllOrdersThroughTwelve) {
    for (unsigned long n = 1; n <= 12; ++n)
        for (unsigned long k = 0; k < n; ++k) {
            unsigned long expect = k == 0 ? 1 : n / gcd_u(n, k);
            EXPECT_EQ(root_of_unity_order(zeta(n, static_cast<long>(k))), expect)
                << "zeta_" << n << "^" << k;
        }
}
