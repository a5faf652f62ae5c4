// Copyright 2026 The sigmacheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "sigmacheck/algebras.hpp"
#include "sigmacheck/groupfix.hpp"
#include "sigmacheck/octonion.hpp"
#include "sigmacheck/symfun.hpp"
#include "sigmacheck/tables.hpp"

namespace sigmacheck {
namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command =
      std::string(SIGMACHECK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    output.append(buffer, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

// Outcome output of each table step, keyed by the step description.
std::map<std::string, std::string> table_outcomes(const std::string& json) {
  std::map<std::string, std::string> outcomes;
  const nlohmann::json doc = nlohmann::json::parse(json);
  for (const auto& step : doc.at("steps"))
    if (step.at("outputs").contains("outcome"))
      outcomes[step.at("description")] = step.at("outputs").at("outcome");
  return outcomes;
}

AlgebraElement random_element(const TensorModel& model, SplitMix64& rng,
                              unsigned degree_bound) {
  const TensorSpec& spec = model.spec();
  std::vector<std::string> center_vars;
  for (const auto& factor : spec.factors) {
    center_vars.push_back(factor.z_name);
    center_vars.push_back(factor.w_name);
  }
  AlgebraElement elem;
  do {
    elem.coords.clear();
    const unsigned terms = 1 + static_cast<unsigned>(rng.next_below(3));
    for (unsigned t = 0; t < terms; ++t) {
      std::vector<unsigned> exps;
      for (const auto& factor : spec.factors) {
        exps.push_back(static_cast<unsigned>(rng.next_below(factor.r)));
        exps.push_back(static_cast<unsigned>(rng.next_below(factor.r)));
      }
      MultiPoly coeff;
      const unsigned monos = 1 + static_cast<unsigned>(rng.next_below(2));
      for (unsigned m = 0; m < monos; ++m) {
        long c = rng.next_int(-3, 3);
        if (c == 0) continue;
        Monomial mono(center_vars.size(), 0);
        if (degree_bound)
          mono[rng.next_below(mono.size())] =
              static_cast<unsigned>(rng.next_below(degree_bound + 1));
        coeff =
            coeff + MultiPoly::term(CycloNum(Rational(c)), center_vars, mono);
      }
      elem = elem + AlgebraElement::basis_monomial(spec, exps, coeff);
    }
  } while (elem.is_zero());
  return elem;
}

// Each criterion is one test; the teardown prints a single pass/fail line
// and enforces the stated wall-clock bound.
class Acceptance : public ::testing::Test {
 protected:
  void set_bound(double seconds) { bound_seconds_ = seconds; }

  void TearDown() override {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start_)
            .count();
    EXPECT_LE(elapsed, bound_seconds_) << "wall-clock bound exceeded";
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    std::printf("[%s] %s (%.2fs of %.0fs)\n",
                HasFailure() ? "CRITERION FAIL" : "CRITERION PASS",
                info->name(), elapsed, bound_seconds_);
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
  double bound_seconds_ = 0;
};

TEST_F(Acceptance, Criterion01PrintedSpecializationForms) {
  set_bound(1.0);
  const std::array<std::tuple<unsigned, unsigned, unsigned, const char*>, 10>
      forms = {{
          {1, 1, 4, "a + 4*b"},
          {4, 1, 4, "4*a*b^3 + b^4"},
          {2, 2, 3, "a^2 + 6*a*b + 3*b^2"},
          {3, 2, 3, "3*a^2*b + 6*a*b^2 + b^3"},
          {1, 2, 4, "2*a + 4*b"},
          {4, 2, 4, "6*a^2*b^2 + 8*a*b^3 + b^4"},
          {1, 1, 5, "a + 5*b"},
          {5, 1, 5, "5*a*b^4 + b^5"},
          {2, 2, 4, "a^2 + 8*a*b + 6*b^2"},
          {3, 2, 4, "4*a^2*b + 12*a*b^2 + 4*b^3"},
      }};
  for (const auto& [i, n1, n2, text] : forms) {
    const MultiPoly generated = specialize_two_block(i, n1, n2);
    EXPECT_TRUE(generated == parse_poly(text))
        << "blocks (" << n1 << ", " << n2 << "), index " << i << ": got "
        << generated.to_string() << ", want " << text;
  }
}

TEST_F(Acceptance, Criterion02ExclusionTables) {
  set_bound(5.0);
  const RunResult deg5 = run_cli("table deg5");
  ASSERT_EQ(deg5.exit_code, 0);
  auto outcomes5 = table_outcomes(deg5.output);
  for (const char* direct : {"case (1, 2)", "case (1, 4)", "case (2, 3)"})
    EXPECT_EQ(outcomes5[direct], "only_trivial") << direct;
  EXPECT_EQ(outcomes5["case (3, 4)"], "only_trivial via the source case");

  const RunResult deg6 = run_cli("table deg6");
  ASSERT_EQ(deg6.exit_code, 0);
  auto outcomes6 = table_outcomes(deg6.output);
  for (const char* direct : {"case (1, 2)", "case (1, 4)", "case (1, 5)",
                             "case (2, 3)", "case (2, 4)"})
    EXPECT_EQ(outcomes6[direct], "only_trivial") << direct;
  for (const char* reduced : {"case (2, 5)", "case (3, 4)", "case (4, 5)"})
    EXPECT_EQ(outcomes6[reduced], "only_trivial via the source case")
        << reduced;
}

TEST_F(Acceptance, Criterion03PairedCharpolyAllSmallGroups) {
  set_bound(30.0);
  const std::vector<std::vector<unsigned>> groups = {
      {2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}};
  for (const auto& orders : groups) {
    const AbelianGroup group(orders);
    const VerificationReport rep = paired_charpoly_check(group);
    EXPECT_EQ(rep.status, Status::verified) << group.to_string();
    EXPECT_EQ(rep.steps.size(), group.order() * group.order())
        << group.to_string();
  }
}

TEST_F(Acceptance, Criterion04FixedPointFreeCertificates) {
  set_bound(60.0);
  const std::vector<std::tuple<std::vector<unsigned>, unsigned long,
                               unsigned long, unsigned long>>
      instances = {{{2}, 2, 2, 1}, {{2, 2}, 2, 2, 1},
                   {{2, 3}, 6, 6, 1}, {{3}, 3, 3, 2}};
  for (const auto& [orders, m, i, j] : instances) {
    const AbelianGroup group(orders);
    const VerificationReport rep = thm3_certificate(group, m, i, j);
    EXPECT_EQ(rep.status, Status::verified) << group.to_string();
    const unsigned long pairs = group.order() * group.order();
    ASSERT_EQ(rep.steps.size(), pairs + 2) << group.to_string();
    for (unsigned long p = 1; p <= pairs; ++p) {
      bool nonzero_listed = false;
      for (const auto& [key, value] : rep.steps[p].outputs)
        if (key == "sigma_i" && value != "0") nonzero_listed = true;
      EXPECT_TRUE(nonzero_listed) << group.to_string() << " pair " << p;
    }
  }
}

TEST_F(Acceptance, Criterion05TwoBlockFixedPointCertificates) {
  set_bound(5.0);
  for (const auto& [n1, n2, m1, m2] :
       {std::tuple<unsigned, unsigned, unsigned, unsigned>{1, 4, 1, 2},
        {2, 4, 1, 2},
        {1, 5, 1, 5}}) {
    const VerificationReport rep =
        sn_fixed_point_certificate(n1, n2, m1, m2);
    EXPECT_EQ(rep.status, Status::verified)
        << n1 << " " << n2 << " " << m1 << " " << m2;
  }

  const VerificationReport excluded = sn_fixed_point_certificate(2, 2, 1, 3);
  EXPECT_EQ(excluded.status, Status::refuted);
  ASSERT_FALSE(excluded.steps.empty());
  bool type1_reported = false;
  for (const auto& [key, value] : excluded.steps[0].outputs) {
    if (key == "outcome") EXPECT_EQ(value, "Type I fixed point exists");
    if (key == "witness") type1_reported = true;
  }
  EXPECT_TRUE(type1_reported);
}

TEST_F(Acceptance, Criterion06HighPowerTraceSystems) {
  set_bound(30.0);
  for (unsigned n : {3u, 5u}) {
    const VerificationReport rep = high_powers_check(n, true);
    EXPECT_EQ(rep.status, Status::verified) << n;
    EXPECT_EQ(rep.steps.size(), 3u * (n - 1)) << n;
  }
}

TEST_F(Acceptance, Criterion07OctonionBattery) {
  set_bound(60.0);
  Octonion generic;
  for (std::size_t k = 0; k < 8; ++k)
    generic.coords[k] = MultiPoly::variable("x" + std::to_string(k));
  EXPECT_EQ(quadratic_identity_check(OctonionSpec::generic(), generic).status,
            Status::verified);

  const VerificationReport autom = automorphism_check();
  EXPECT_EQ(autom.status, Status::verified);
  ASSERT_GE(autom.steps.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    bool full_sweep = false;
    for (const auto& [key, value] : autom.steps[k].outputs)
      if (key == "pairs_checked" && value == "64") full_sweep = true;
    EXPECT_TRUE(full_sweep) << "tau_" << k + 1;
  }

  const VerificationReport table = character_table_check();
  EXPECT_EQ(table.status, Status::verified);
  bool eight = false;
  for (const auto& step : table.steps)
    for (const auto& [key, value] : step.outputs)
      if (key == "distinct_characters" && value == "8") eight = true;
  EXPECT_TRUE(eight);

  EXPECT_EQ(thm_oct_certificate(1, 1, "x1*x1").status, Status::verified);
  EXPECT_EQ(thm_oct_certificate(2, 1, "x1*x2").status, Status::verified);
  const VerificationReport refuted =
      thm_oct_certificate(2, 2, "(x1*x1) + (x2*x2)");
  EXPECT_EQ(refuted.status, Status::refuted);
  ASSERT_FALSE(refuted.steps.empty());
  EXPECT_EQ(refuted.steps.back().outputs[0].first, "witness");
  EXPECT_EQ(refuted.steps.back().outputs[0].second, "(1,zeta(4))");

  const VerificationReport comp =
      composition_check(OctonionSpec::generic(), 50, 7);
  EXPECT_EQ(comp.status, Status::verified);
  bool clean = false;
  for (const auto& [key, value] : comp.steps.back().outputs)
    if (key == "failures" && value == "0") clean = true;
  EXPECT_TRUE(clean);
}

TEST_F(Acceptance, Criterion08AlgebraModels) {
  set_bound(120.0);
  for (unsigned r = 2; r <= 5; ++r) {
    const TensorModel model(
        TensorSpec::parse("symbol " + std::to_string(r) + " z w"));
    const Matrix<MultiPoly>& x = model.x(0);
    const Matrix<MultiPoly>& y = model.y(0);
    const MultiPoly z_rad = model.center_to_radicals(MultiPoly::variable("z"));
    const MultiPoly w_rad = model.center_to_radicals(MultiPoly::variable("w"));
    EXPECT_TRUE(x.pow(r) == Matrix<MultiPoly>::identity(r).scaled(z_rad)) << r;
    EXPECT_TRUE(y.pow(r) == Matrix<MultiPoly>::identity(r).scaled(w_rad)) << r;
    EXPECT_TRUE(y * x ==
                (x * y).scaled(MultiPoly(CycloNum::root_of_unity(r)))) << r;
  }

  SplitMix64 rng(20260816);
  for (unsigned r : {2u, 3u}) {
    const TensorModel model(
        TensorSpec::parse("symbol " + std::to_string(r) + " z w"));
    for (int t = 0; t < 50; ++t) {
      const AlgebraElement elem = random_element(model, rng, 2);
      for (unsigned i = 1; i <= r; ++i)
        EXPECT_NO_THROW(sigma_in_algebra(model, elem, i)) << r;
    }
  }

  for (unsigned r = 2; r <= 5; ++r) {
    const TensorSpec spec =
        TensorSpec::parse("symbol " + std::to_string(r) + " z w");
    const TensorModel model(spec);
    const AlgebraElement x_elem = parse_element(spec, "x1");
    for (unsigned i = 1; i < r; ++i)
      EXPECT_TRUE(sigma_in_algebra(model, x_elem, i).is_zero()) << r;
    EXPECT_TRUE(sigma_in_algebra(model, x_elem, r) ==
                -MultiPoly::variable("z")) << r;
  }

  for (unsigned n : {2u, 3u}) {
    for (const char* g : {"x", "x^2"})
      EXPECT_EQ(remark38_consistency(n, parse_poly(g)).status,
                Status::verified)
          << n << " " << g;
    EXPECT_EQ(inverse_identity_check(n, parse_poly("x")).status,
              Status::verified)
        << n;
  }
}

TEST_F(Acceptance, Criterion09KernelPropertySuites) {
  set_bound(120.0);

  SplitMix64 rng(97);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng.next_below(4);
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m.at(i, j) = Rational(rng.next_int(-5, 5));
    const std::vector<Rational> cp = m.char_poly();
    Matrix<Rational> value(n, n);
    for (std::size_t k = 0; k <= n; ++k)
      value = value * m + Matrix<Rational>::identity(n).scaled(cp[k]);
    EXPECT_TRUE(value == Matrix<Rational>(n, n)) << "size " << n;
  }

  for (int t = 0; t < 25; ++t) {
    const std::size_t count = 1 + rng.next_below(6);
    std::vector<MultiPoly> values;
    std::vector<Rational> raw;
    for (std::size_t k = 0; k < count; ++k) {
      raw.emplace_back(rng.next_int(-4, 4));
      values.emplace_back(CycloNum(raw.back()));
    }
    std::vector<Rational> e(count + 1), p(count + 1);
    for (std::size_t k = 0; k <= count; ++k)
      e[k] = elem_sym(k, values).constant_value().rational_value();
    for (std::size_t k = 1; k <= count; ++k)
      for (const Rational& v : raw) p[k] = p[k] + v.pow(k);
    for (std::size_t k = 1; k <= count; ++k) {
      Rational rhs;
      for (std::size_t i = 1; i <= k; ++i) {
        const Rational term = e[k - i] * p[i];
        rhs = (i % 2 == 1) ? rhs + term : rhs - term;
      }
      EXPECT_EQ(e[k] * Rational(static_cast<long>(k)), rhs)
          << "k=" << k << " count=" << count;
    }
  }

  const MultiPoly x = MultiPoly::variable("x");
  const MultiPoly shared_root = x * x - MultiPoly(3) * x + MultiPoly(2);
  EXPECT_TRUE(resultant(shared_root,
                        x * x - MultiPoly(5) * x + MultiPoly(6), "x")
                  .is_zero());
  EXPECT_TRUE(resultant(shared_root,
                        x * x - MultiPoly(5) * x + MultiPoly(4), "x")
                  .is_zero());
  EXPECT_EQ(resultant(x - MultiPoly(1), x * x + MultiPoly(1), "x"),
            MultiPoly(2));
  EXPECT_FALSE(resultant(shared_root, x * x + MultiPoly(1), "x").is_zero());

  const std::array<unsigned long, 5> orders = {3, 4, 5, 8, 12};
  auto sample = [&rng, &orders]() {
    const unsigned long n = orders[rng.next_below(orders.size())];
    CycloNum value(Rational(rng.next_int(-4, 4)));
    const unsigned terms = static_cast<unsigned>(rng.next_below(3));
    for (unsigned t = 0; t < terms; ++t)
      value = value + CycloNum(Rational(rng.next_int(-4, 4))) *
                          CycloNum::root_of_unity(
                              n, static_cast<long>(rng.next_below(n)));
    return value;
  };
  for (int t = 0; t < 1000; ++t) {
    const CycloNum a = sample(), b = sample(), c = sample();
    EXPECT_TRUE((a + b) + c == a + (b + c));
    EXPECT_TRUE(a * b == b * a);
    EXPECT_TRUE((a * b) * c == a * (b * c));
    EXPECT_TRUE(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) EXPECT_TRUE(a * a.inverse() == CycloNum::one());
  }
  for (unsigned long n : orders)
    EXPECT_TRUE(CycloNum::root_of_unity(n).pow(static_cast<long>(n)) ==
                CycloNum::one());
}

TEST_F(Acceptance, Criterion10SeededEvidenceSearch) {
  set_bound(120.0);
  const std::string args =
      "search counterexample --algebra 'symbol 2 z w' "
      "--predicate trace0-norm1 --trials 1000 --seed 42 --degree-bound 2";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  EXPECT_EQ(first.exit_code, 3);
  EXPECT_EQ(second.exit_code, 3);
  EXPECT_EQ(first.output, second.output);
  const nlohmann::json doc = nlohmann::json::parse(first.output);
  EXPECT_EQ(doc.at("status"), "evidence");
  EXPECT_EQ(doc.at("steps").at(0).at("outputs").at("hits"), "0");
}

}  // namespace
}  // namespace sigmacheck
