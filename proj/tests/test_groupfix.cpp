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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "sigmacheck/expr.hpp"
#include "sigmacheck/groupfix.hpp"

namespace sigmacheck {
namespace {

const std::vector<std::vector<unsigned>> kGroupsUpTo8 = {
    {2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}};

TEST(AbelianGroupBasics, OrderExponentEnumeration) {
  AbelianGroup g({2, 3});
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.exponent(), 6u);
  EXPECT_EQ(g.to_string(), "2x3");
  auto elems = g.elements();
  ASSERT_EQ(elems.size(), 6u);
  EXPECT_EQ(elems[0], (AbelianGroup::Element{0, 0}));
  EXPECT_EQ(elems[1], (AbelianGroup::Element{0, 1}));
  EXPECT_EQ(elems[3], (AbelianGroup::Element{1, 0}));
  for (std::size_t i = 0; i < elems.size(); ++i)
    EXPECT_EQ(g.index_of(elems[i]), i);

  AbelianGroup trivial({});
  EXPECT_EQ(trivial.order(), 1u);
  EXPECT_EQ(trivial.exponent(), 1u);
  EXPECT_EQ(trivial.to_string(), "1");
  EXPECT_EQ(trivial.elements().size(), 1u);
  EXPECT_THROW(AbelianGroup({1}), std::invalid_argument);
}

TEST(AbelianGroupBasics, ElementOrders) {
  AbelianGroup g({2, 4});
  EXPECT_EQ(g.element_order({0, 0}), 1u);
  EXPECT_EQ(g.element_order({1, 0}), 2u);
  EXPECT_EQ(g.element_order({0, 1}), 4u);
  EXPECT_EQ(g.element_order({1, 2}), 2u);
}

TEST(PermMatrix, KnownMatrices) {
  AbelianGroup z2({2});
  EXPECT_EQ(perm_matrix(z2, {0}), Matrix<CycloNum>::identity(2));
  Matrix<CycloNum> swap2(2, 2);
  swap2.at(0, 1) = CycloNum::one();
  swap2.at(1, 0) = CycloNum::one();
  EXPECT_EQ(perm_matrix(z2, {1}), swap2);
}

TEST(PermMatrix, HomomorphismOnZ6) {
  AbelianGroup g({2, 3});
  for (const auto& a : g.elements())
    for (const auto& b : g.elements())
      EXPECT_EQ(perm_matrix(g, a) * perm_matrix(g, b),
                perm_matrix(g, g.add(a, b)));
}

TEST(DiagMatrix, KnownMatrices) {
  AbelianGroup z2({2});
  EXPECT_EQ(diag_matrix(z2, Character{{0}}), Matrix<CycloNum>::identity(2));
  Matrix<CycloNum> pm(2, 2);
  pm.at(0, 0) = CycloNum::one();
  pm.at(1, 1) = -CycloNum::one();
  EXPECT_EQ(diag_matrix(z2, Character{{1}}), pm);

  AbelianGroup z3({3});
  Matrix<CycloNum> faithful(3, 3);
  for (unsigned k = 0; k < 3; ++k)
    faithful.at(k, k) = CycloNum::root_of_unity(3, k);
  EXPECT_EQ(diag_matrix(z3, Character{{1}}), faithful);
}

TEST(DiagMatrix, CharacterHomomorphism) {
  AbelianGroup g({2, 4});
  for (const auto& e1 : g.elements())
    for (const auto& e2 : g.elements())
      EXPECT_EQ(diag_matrix(g, Character{e1}) * diag_matrix(g, Character{e2}),
                diag_matrix(g, Character{g.add(e1, e2)}));
}

TEST(Commutation, SmallGroupsAndTrivialEdge) {
  auto z2 = commutation_check(AbelianGroup({2}));
  EXPECT_EQ(z2.status, Status::verified);
  EXPECT_EQ(z2.steps.size(), 4u);

  auto klein = commutation_check(AbelianGroup({2, 2}));
  EXPECT_EQ(klein.steps.size(), 16u);

  auto trivial = commutation_check(AbelianGroup({}));
  EXPECT_EQ(trivial.status, Status::verified);
  EXPECT_EQ(trivial.steps.size(), 1u);
}

TEST(Commutation, AllGroupsUpTo8) {
  for (const auto& orders : kGroupsUpTo8) {
    auto rep = commutation_check(AbelianGroup(orders));
    EXPECT_EQ(rep.status, Status::verified) << AbelianGroup(orders).to_string();
  }
}

TEST(PairedCharpoly, KnownClosedForms) {
  // Z/2, a != 1, chi != 1: c = 2, eps = -1, char poly t^2 + 1.
  AbelianGroup z2({2});
  PairedElement pair(z2, {1}, Character{{1}});
  EXPECT_EQ(pair.c, 2u);
  EXPECT_EQ(pair.epsilon, -CycloNum::one());
  auto m = perm_matrix(z2, {1}) * diag_matrix(z2, Character{{1}});
  EXPECT_EQ(m.char_poly(),
            (std::vector<CycloNum>{CycloNum::one(), CycloNum::zero(),
                                   CycloNum::one()}));

  // Z/4 pair of order 4 with chi(a) = zeta_4: eps = zeta_4^6 = -1,
  // char poly t^4 + 1.
  AbelianGroup z4({4});
  PairedElement pair4(z4, {1}, Character{{1}});
  EXPECT_EQ(pair4.c, 4u);
  EXPECT_EQ(pair4.epsilon, -CycloNum::one());
  auto m4 = perm_matrix(z4, {1}) * diag_matrix(z4, Character{{1}});
  std::vector<CycloNum> t4_plus_1(5);
  t4_plus_1[0] = CycloNum::one();
  t4_plus_1[4] = CycloNum::one();
  EXPECT_EQ(m4.char_poly(), t4_plus_1);

  // Trivial pair: (t - 1)^n.
  auto id2 = perm_matrix(z2, {0}) * diag_matrix(z2, Character{{0}});
  EXPECT_EQ(id2.char_poly(), paired_charpoly_closed_form(2, 1, CycloNum::one()));
}

TEST(PairedCharpoly, AllGroupsUpTo8) {
  for (const auto& orders : kGroupsUpTo8) {
    auto rep = paired_charpoly_check(AbelianGroup(orders));
    EXPECT_EQ(rep.status, Status::verified) << AbelianGroup(orders).to_string();
    EXPECT_EQ(rep.steps.size(),
              AbelianGroup(orders).order() * AbelianGroup(orders).order());
  }
}

TEST(PairedCharpoly, SigmaVanishingPattern) {
  // sigma_i(P_a D_chi) is nonzero exactly when c divides i.
  for (const auto& orders : kGroupsUpTo8) {
    AbelianGroup g(orders);
    for (const auto& a : g.elements()) {
      auto pa = perm_matrix(g, a);
      for (const auto& e : g.elements()) {
        PairedElement pair(g, a, Character{e});
        auto cp = (pa * diag_matrix(g, Character{e})).char_poly();
        for (std::size_t i = 1; i < cp.size(); ++i)
          EXPECT_EQ(cp[i].is_zero(), i % pair.c != 0)
              << g.to_string() << " i=" << i << " c=" << pair.c;
      }
    }
  }
}

TEST(BasisCheck, SmallGroups) {
  for (const auto& orders :
       std::vector<std::vector<unsigned>>{{2}, {3}, {2, 2}}) {
    auto rep = basis_check(AbelianGroup(orders));
    EXPECT_EQ(rep.status, Status::verified);
    const unsigned long n = AbelianGroup(orders).order();
    EXPECT_EQ(rep.steps[0].outputs[0].second, std::to_string(n * n));
  }
}

TEST(Thm3, AcceptanceInstances) {
  EXPECT_EQ(thm3_certificate(AbelianGroup({2}), 2, 2, 1).status,
            Status::verified);
  EXPECT_EQ(thm3_certificate(AbelianGroup({2, 2}), 2, 2, 1).status,
            Status::verified);
  EXPECT_EQ(thm3_certificate(AbelianGroup({2, 3}), 6, 6, 1).status,
            Status::verified);
  EXPECT_EQ(thm3_certificate(AbelianGroup({3}), 3, 3, 2).status,
            Status::verified);
}

TEST(Thm3, HypothesisGate) {
  auto rep = thm3_certificate(AbelianGroup({2}), 1, 2, 1);
  EXPECT_EQ(rep.status, Status::hypotheses_not_met);
  EXPECT_EQ(rep.exit_code(), 3);
  EXPECT_THROW(thm3_certificate(AbelianGroup({2}), 2, 3, 1),
               std::invalid_argument);
}

TEST(Thm3, ScalarEndgameBruteForce) {
  // Over t_r in {0} union mu_i, the system t_1^i = ... = t_m^i with
  // t_1...t_m = 0 has only the all-zero solution.
  for (auto [i, m] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 2}, {3, 3}, {6, 6}}) {
    std::vector<CycloNum> candidates = {CycloNum::zero()};
    for (unsigned k = 0; k < i; ++k)
      candidates.push_back(CycloNum::root_of_unity(i, k));
    std::vector<CycloNum> powers;
    for (const auto& c : candidates) powers.push_back(c.pow(i));
    std::vector<unsigned> pick(m, 0);
    unsigned long total = 1;
    for (unsigned t = 0; t < m; ++t) total *= candidates.size();
    for (unsigned long count = 0; count < total; ++count) {
      bool powers_equal = true;
      for (unsigned t = 1; t < m; ++t)
        if (powers[pick[t]] != powers[pick[0]]) powers_equal = false;
      if (powers_equal) {
        CycloNum product = CycloNum::one();
        for (unsigned t = 0; t < m; ++t)
          product = product * candidates[pick[t]];
        if (product.is_zero()) {
          for (unsigned t = 0; t < m; ++t)
            EXPECT_TRUE(candidates[pick[t]].is_zero())
                << "i=" << i << " m=" << m;
        }
      }
      for (unsigned t = m; t-- > 0;) {
        pick[t] = (pick[t] + 1) % candidates.size();
        if (pick[t] != 0) break;
      }
    }
  }
}

TEST(Thm3a, KnownPolynomials) {
  AbelianGroup z2({2});
  // Product of units is never zero.
  auto prod = thm3a_root_condition_check(parse_poly("z1*z2"), 2, 1, 1, 2, z2);
  EXPECT_EQ(prod.status, Status::verified);

  // z1 + z2 vanishes at (1, -1).
  auto sum = thm3a_root_condition_check(parse_poly("z1+z2"), 1, 2, 2, 1, z2);
  EXPECT_EQ(sum.status, Status::refuted);
  bool witnessed = false;
  for (const auto& step : sum.steps)
    if (step.has_output("witness")) witnessed = true;
  EXPECT_TRUE(witnessed);

  // z1^2 + z1 z2 + z2^2 takes values 3, 1, 1, 3 on the four sign tuples.
  auto quad = thm3a_root_condition_check(parse_poly("z1^2 + z1*z2 + z2^2"), 2,
                                         1, 1, 2, z2);
  EXPECT_EQ(quad.status, Status::verified);
  std::vector<std::string> values;
  for (const auto& step : quad.steps)
    for (const auto& [key, value] : step.outputs)
      if (key.rfind("P(", 0) == 0) values.push_back(value);
  EXPECT_EQ(values, (std::vector<std::string>{"3", "1", "1", "3"}));
}

TEST(Thm3a, GatesAndCap) {
  AbelianGroup z2({2});
  EXPECT_THROW(
      thm3a_root_condition_check(parse_poly("z1^2 + z2"), 2, 1, 1, 2, z2),
      std::invalid_argument);
  auto gate = thm3a_root_condition_check(parse_poly("z1*z2"), 1, 1, 1, 2, z2);
  EXPECT_EQ(gate.status, Status::hypotheses_not_met);
  auto capped =
      thm3a_root_condition_check(parse_poly("z1*z2"), 2, 1, 1, 2, z2, 3);
  EXPECT_EQ(capped.status, Status::not_checked);
  EXPECT_EQ(capped.exit_code(), 3);
}

TEST(SnFixedPoint, AcceptanceInstances) {
  EXPECT_EQ(sn_fixed_point_certificate(1, 4, 1, 2).status, Status::verified);
  EXPECT_EQ(sn_fixed_point_certificate(2, 4, 1, 2).status, Status::verified);
  EXPECT_EQ(sn_fixed_point_certificate(1, 5, 1, 5).status, Status::verified);

  auto excluded = sn_fixed_point_certificate(2, 2, 1, 3);
  EXPECT_EQ(excluded.status, Status::refuted);
  bool type1_witness = false;
  for (const auto& step : excluded.steps)
    for (const auto& [key, value] : step.outputs)
      if (key == "witness" && value.find("-1") != std::string::npos)
        type1_witness = true;
  EXPECT_TRUE(type1_witness);
}

TEST(CharacterDecomposition, SmallCases) {
  auto one_two = character_decomposition_check(1, 2);
  EXPECT_EQ(one_two.status, Status::verified);
  bool minus_one_line = false;
  for (const auto& step : one_two.steps)
    for (const auto& [key, value] : step.outputs)
      if (key.rfind("block2_chi", 0) == 0) {
        minus_one_line = true;
        EXPECT_NE(value.find("-1"), std::string::npos);
      }
  EXPECT_TRUE(minus_one_line);

  EXPECT_EQ(character_decomposition_check(2, 2).status, Status::verified);
  EXPECT_EQ(character_decomposition_check(1, 1).status, Status::verified);
  EXPECT_EQ(character_decomposition_check(2, 4).status, Status::verified);
}

TEST(CyclicWitness, MatrixIdentity) {
  auto rep = cyclic_counterexample_check();
  EXPECT_EQ(rep.status, Status::verified);
  bool traces = false, det = false;
  for (const auto& step : rep.steps)
    for (const auto& [key, value] : step.outputs) {
      if (key == "tr(D)") {
        EXPECT_EQ(value, "0");
        traces = true;
      }
      if (key == "det(D)") {
        EXPECT_EQ(value, "1");
        det = true;
      }
    }
  EXPECT_TRUE(traces);
  EXPECT_TRUE(det);
}

}  // namespace
}  // namespace sigmacheck
