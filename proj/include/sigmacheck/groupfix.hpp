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

#ifndef SIGMACHECK_GROUPFIX_HPP
#define SIGMACHECK_GROUPFIX_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sigmacheck/cyclotomic.hpp"
#include "sigmacheck/multipoly.hpp"
#include "sigmacheck/polymatrix.hpp"
#include "sigmacheck/report.hpp"
#include "sigmacheck/symfun.hpp"

namespace sigmacheck {

/// Finite abelian group as a product of cyclic factors.  Elements are
/// exponent tuples enumerated in a fixed lexicographic order (rightmost
/// coordinate fastest), so every derived matrix is reproducible.  An empty
/// factor list is the trivial group.
class AbelianGroup {
 public:
  using Element = std::vector<unsigned>;

  explicit AbelianGroup(std::vector<unsigned> cyclic_orders)
      : orders_(std::move(cyclic_orders)) {
    for (unsigned d : orders_)
      if (d < 2)
        throw std::invalid_argument("cyclic factor orders must be at least 2");
  }

  const std::vector<unsigned>& cyclic_orders() const { return orders_; }

  unsigned long order() const {
    unsigned long n = 1;
    for (unsigned d : orders_) n *= d;
    return n;
  }

  unsigned long exponent() const {
    unsigned long e = 1;
    for (unsigned d : orders_) e = lcm_u(e, d);
    return e;
  }

  Element zero() const { return Element(orders_.size(), 0); }

  std::vector<Element> elements() const {
    std::vector<Element> all;
    Element current = zero();
    all.push_back(current);
    for (unsigned long count = 1; count < order(); ++count) {
      for (std::size_t t = orders_.size(); t-- > 0;) {
        current[t] = (current[t] + 1) % orders_[t];
        if (current[t] != 0) break;
      }
      all.push_back(current);
    }
    return all;
  }

  Element add(const Element& a, const Element& b) const {
    Element c(orders_.size());
    for (std::size_t t = 0; t < orders_.size(); ++t)
      c[t] = (a[t] + b[t]) % orders_[t];
    return c;
  }

  std::size_t index_of(const Element& a) const {
    std::size_t idx = 0;
    for (std::size_t t = 0; t < orders_.size(); ++t)
      idx = idx * orders_[t] + a[t];
    return idx;
  }

  unsigned long element_order(const Element& a) const {
    unsigned long c = 1;
    for (std::size_t t = 0; t < orders_.size(); ++t)
      c = lcm_u(c, orders_[t] / gcd_u(orders_[t], a[t]));
    return c;
  }

  std::string to_string() const {
    if (orders_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t t = 0; t < orders_.size(); ++t)
      os << (t ? "x" : "") << orders_[t];
    return os.str();
  }

  static std::string element_to_string(const Element& a) {
    std::ostringstream os;
    os << "(";
    for (std::size_t t = 0; t < a.size(); ++t) os << (t ? "," : "") << a[t];
    os << ")";
    return os.str();
  }

 private:
  std::vector<unsigned> orders_;
};

/// Character of an abelian group, stored by its exponent tuple; its value at
/// g is the product of zeta_{d_t}^{e_t g_t}.  The dual group is enumerated
/// exactly like the group itself.
struct Character {
  AbelianGroup::Element exponents;

  CycloNum value(const AbelianGroup& group, const AbelianGroup::Element& g)
      const {
    CycloNum v = CycloNum::one();
    const auto& orders = group.cyclic_orders();
    for (std::size_t t = 0; t < orders.size(); ++t)
      v = v * CycloNum::root_of_unity(orders[t],
                                      (exponents[t] * g[t]) % orders[t]);
    return v;
  }

  bool is_trivial() const {
    for (unsigned e : exponents)
      if (e) return false;
    return true;
  }
};

inline std::vector<Character> characters(const AbelianGroup& group) {
  std::vector<Character> all;
  for (const auto& e : group.elements()) all.push_back(Character{e});
  return all;
}

/// Permutation matrix of right translation by a: e_g maps to e_{g+a}.
inline Matrix<CycloNum> perm_matrix(const AbelianGroup& group,
                                    const AbelianGroup::Element& a) {
  const auto elems = group.elements();
  Matrix<CycloNum> m(elems.size(), elems.size());
  for (const auto& g : elems)
    m.at(group.index_of(group.add(g, a)), group.index_of(g)) = CycloNum::one();
  return m;
}

/// Diagonal matrix of a character over the element enumeration.
inline Matrix<CycloNum> diag_matrix(const AbelianGroup& group,
                                    const Character& chi) {
  const auto elems = group.elements();
  Matrix<CycloNum> m(elems.size(), elems.size());
  for (const auto& g : elems) {
    const std::size_t i = group.index_of(g);
    m.at(i, i) = chi.value(group, g);
  }
  return m;
}

/// A pair (a, chi) with its order c in A x A* and the sign
/// epsilon = chi(a)^(c(c-1)/2), asserted to be +1 or -1 on construction.
struct PairedElement {
  AbelianGroup::Element a;
  Character chi;
  unsigned long c;
  CycloNum epsilon;

  PairedElement(const AbelianGroup& group, AbelianGroup::Element a_,
                Character chi_)
      : a(std::move(a_)), chi(std::move(chi_)) {
    c = lcm_u(group.element_order(a), group.element_order(chi.exponents));
    epsilon = chi.value(group, a).pow(c * (c - 1) / 2);
    if (epsilon != CycloNum::one() && epsilon != -CycloNum::one())
      throw std::logic_error("pair sign is expected to be +1 or -1");
  }
};

/// Verifies D_chi P_a = chi(a) P_a D_chi for every pair, exactly.
inline VerificationReport commutation_check(const AbelianGroup& group) {
  VerificationReport rep;
  rep.claim_id = "commutation-relation";
  rep.set_param("group", group.to_string());
  const auto elems = group.elements();
  for (const auto& a : elems) {
    const Matrix<CycloNum> pa = perm_matrix(group, a);
    for (const auto& chi_exp : elems) {
      const Character chi{chi_exp};
      const Matrix<CycloNum> dchi = diag_matrix(group, chi);
      const CycloNum scalar = chi.value(group, a);
      const bool ok = dchi * pa == (pa * dchi).scaled(scalar);
      if (!ok) throw std::logic_error("commutation relation failed");
      rep.add_step("commutation for the pair (a, chi)")
          .in("a", AbelianGroup::element_to_string(a))
          .in("chi", AbelianGroup::element_to_string(chi_exp))
          .out("chi(a)", scalar.to_string())
          .out("relation", "holds");
    }
  }
  rep.status = Status::verified;
  rep.require_valid();
  return rep;
}

/// Expansion of (t^c - eps)^(n/c) as the sigma coefficient vector
/// [1, sigma_1, ..., sigma_n].
inline std::vector<CycloNum> paired_charpoly_closed_form(unsigned long n,
                                                         unsigned long c,
                                                         const CycloNum& eps) {
  std::vector<CycloNum> coeff(n + 1);
  const unsigned long blocks = n / c;
  for (unsigned long j = 0; j <= blocks; ++j)
    coeff[j * c] = CycloNum(Rational(mpz_class(binomial(blocks, j)))) *
                   (-eps).pow(j);
  return coeff;
}

/// For every pair (a, chi): char_poly(P_a D_chi) equals the expansion of
/// (t^c - eps)^(n/c) and (P_a D_chi)^c = eps I, exactly.
inline VerificationReport paired_charpoly_check(const AbelianGroup& group) {
  VerificationReport rep;
  rep.claim_id = "paired-charpoly";
  rep.set_param("group", group.to_string());
  const auto elems = group.elements();
  const unsigned long n = group.order();
  for (const auto& a : elems) {
    const Matrix<CycloNum> pa = perm_matrix(group, a);
    for (const auto& chi_exp : elems) {
      const Character chi{chi_exp};
      const PairedElement pair(group, a, chi);
      const Matrix<CycloNum> m = pa * diag_matrix(group, chi);
      const auto cp = m.char_poly();
      const auto closed = paired_charpoly_closed_form(n, pair.c, pair.epsilon);
      if (cp != closed)
        throw std::logic_error("characteristic polynomial mismatch");
      const Matrix<CycloNum> power = m.pow(pair.c);
      if (power != Matrix<CycloNum>::identity(n).scaled(pair.epsilon))
        throw std::logic_error("c-th power is not epsilon I");
      rep.add_step("characteristic polynomial of the pair (a, chi)")
          .in("a", AbelianGroup::element_to_string(a))
          .in("chi", AbelianGroup::element_to_string(chi_exp))
          .out("c", std::to_string(pair.c))
          .out("epsilon", pair.epsilon.to_string())
          .out("charpoly", "(t^" + std::to_string(pair.c) + " - (" +
                               pair.epsilon.to_string() + "))^" +
                               std::to_string(n / pair.c))
          .out("power_identity", "holds");
    }
  }
  rep.status = Status::verified;
  rep.require_valid();
  return rep;
}

/// Asserts the n^2 matrices P_a D_chi are linearly independent by exact rank
/// of the n^2 x n^2 coordinate matrix.
inline VerificationReport basis_check(const AbelianGroup& group) {
  VerificationReport rep;
  rep.claim_id = "pair-matrix-basis";
  rep.set_param("group", group.to_string());
  const auto elems = group.elements();
  const std::size_t n = elems.size();
  Matrix<CycloNum> coords(n * n, n * n);
  std::size_t row = 0;
  for (const auto& a : elems) {
    const Matrix<CycloNum> pa = perm_matrix(group, a);
    for (const auto& chi_exp : elems) {
      const Matrix<CycloNum> m = pa * diag_matrix(group, Character{chi_exp});
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          coords.at(row, i * n + j) = m.at(i, j);
      ++row;
    }
  }
  const std::size_t rank = coords.rank();
  rep.add_step("rank of the pair-matrix coordinate matrix")
      .in("matrix_count", std::to_string(n * n))
      .in("dimension", std::to_string(n * n))
      .out("rank", std::to_string(rank));
  if (rank != n * n) throw std::logic_error("pair matrices are dependent");
  rep.status = Status::verified;
  rep.require_valid();
  return rep;
}

/// Fixed-point-free certificate: checks the divisibility hypotheses
/// exp(A) | m and exp(A) | i, then for every pair verifies
/// sigma_i(P_a D_chi) != 0 and sigma_j((P_a D_chi)^m) != 0, and records the
/// scalar endgame t_1^i = ... = t_m^i, t_1...t_m = 0 => all t_r = 0.
inline VerificationReport thm3_certificate(const AbelianGroup& group,
                                           unsigned long m, unsigned long i,
                                           unsigned long j) {
  VerificationReport rep;
  rep.claim_id = "fixed-point-free-action";
  rep.set_param("group", group.to_string());
  rep.set_param("m", std::to_string(m));
  rep.set_param("i", std::to_string(i));
  rep.set_param("j", std::to_string(j));
  const unsigned long n = group.order();
  if (i < 1 || i > n || j < 1 || j > n || m < 1)
    throw std::invalid_argument("indices must satisfy 1 <= i, j <= n, m >= 1");

  const unsigned long e = group.exponent();
  Step& gate = rep.add_step("divisibility hypotheses on the group exponent");
  gate.in("exponent", std::to_string(e));
  const bool m_ok = m % e == 0;
  const bool i_ok = i % e == 0;
  gate.out("exponent_divides_m", m_ok ? "yes" : "no");
  gate.out("exponent_divides_i", i_ok ? "yes" : "no");
  if (!m_ok || !i_ok) {
    rep.status = Status::hypotheses_not_met;
    rep.require_valid();
    return rep;
  }

  for (const auto& a : group.elements()) {
    const Matrix<CycloNum> pa = perm_matrix(group, a);
    for (const auto& chi_exp : group.elements()) {
      const Character chi{chi_exp};
      const PairedElement pair(group, a, chi);
      if (m % pair.c != 0 || i % pair.c != 0)
        throw std::logic_error("pair order must divide m and i");
      const Matrix<CycloNum> mat = pa * diag_matrix(group, chi);
      const CycloNum sigma_i = mat.char_poly()[i];
      if (sigma_i.is_zero())
        throw std::logic_error("sigma_i of a pair matrix vanished");
      const Matrix<CycloNum> powered = mat.pow(m);
      const CycloNum sigma_j = powered.char_poly()[j];
      if (sigma_j.is_zero())
        throw std::logic_error("sigma_j of the m-th power vanished");
      rep.add_step("sigma values for the pair (a, chi)")
          .in("a", AbelianGroup::element_to_string(a))
          .in("chi", AbelianGroup::element_to_string(chi_exp))
          .out("c", std::to_string(pair.c))
          .out("sigma_i", sigma_i.to_string())
          .out("sigma_j_of_mth_power", sigma_j.to_string());
    }
  }

  rep.add_step("scalar endgame")
      .in("system", "t_1^" + std::to_string(i) + " = ... = t_" +
                        std::to_string(m) + "^" + std::to_string(i) +
                        ", t_1...t_" + std::to_string(m) + " = 0")
      .out("conclusion",
           "some t_r = 0 forces every t_s^" + std::to_string(i) +
               " = 0, so all t_s = 0");
  rep.status = Status::verified;
  rep.require_valid();
  return rep;
}

/// Root-tuple certificate: checks exp(A) | iu and exp(A) | jd, then
/// enumerates all (ij)^v tuples of (ij)-th roots of unity and asserts the
/// given homogeneous polynomial is nonzero at each.
inline VerificationReport thm3a_root_condition_check(
    const MultiPoly& P, unsigned long i, unsigned long j, unsigned long u,
    unsigned long d, const AbelianGroup& group,
    unsigned long tuple_cap = 1000000) {
  VerificationReport rep;
  rep.claim_id = "root-tuple-nonvanishing";
  rep.set_param("P", P.to_string());
  rep.set_param("group", group.to_string());
  rep.set_param("i", std::to_string(i));
  rep.set_param("j", std::to_string(j));
  rep.set_param("u", std::to_string(u));
  rep.set_param("d", std::to_string(d));
  if (i < 1 || j < 1 || u < 1 || d < 1)
    throw std::invalid_argument("indices must be positive");
  if (!P.is_homogeneous() || P.total_degree() != static_cast<long>(d))
    throw std::invalid_argument(
        "polynomial must be homogeneous of the stated degree");

  const unsigned long e = group.exponent();
  Step& gate = rep.add_step("divisibility hypotheses on the group exponent");
  gate.in("exponent", std::to_string(e));
  const bool iu_ok = (i * u) % e == 0;
  const bool jd_ok = (j * d) % e == 0;
  gate.out("exponent_divides_iu", iu_ok ? "yes" : "no");
  gate.out("exponent_divides_jd", jd_ok ? "yes" : "no");
  if (!iu_ok || !jd_ok) {
    rep.status = Status::hypotheses_not_met;
    rep.require_valid();
    return rep;
  }

  const std::vector<std::string> vars = P.vars();
  const std::size_t v = vars.size();
  const unsigned long order = i * j;
  double tuple_estimate = 1;
  for (std::size_t t = 0; t < v; ++t) tuple_estimate *= order;
  if (tuple_estimate > static_cast<double>(tuple_cap)) {
    rep.add_step("enumeration size against the cap")
        .in("tuples", std::to_string(order) + "^" + std::to_string(v))
        .in("cap", std::to_string(tuple_cap))
        .out("outcome", "enumeration skipped");
    rep.status = Status::not_checked;
    rep.require_valid();
    return rep;
  }

  unsigned long tuple_count = 1;
  for (std::size_t t = 0; t < v; ++t) tuple_count *= order;
  Step& scan = rep.add_step("evaluate at every tuple of (ij)-th roots");
  scan.in("root_order", std::to_string(order));
  scan.in("tuples", std::to_string(tuple_count));
  std::vector<unsigned long> exps(v, 0);
  const bool record_values = tuple_count <= 64;
  for (unsigned long count = 0; count < tuple_count; ++count) {
    std::map<std::string, CycloNum> point;
    std::string label;
    for (std::size_t t = 0; t < v; ++t) {
      point[vars[t]] = CycloNum::root_of_unity(
          static_cast<unsigned>(order), static_cast<unsigned>(exps[t]));
      label += (t ? "," : "(") + point[vars[t]].to_string();
    }
    label += ")";
    const CycloNum value = P.evaluate(point);
    if (record_values) scan.out("P" + label, value.to_string());
    if (value.is_zero()) {
      rep.add_step("violating tuple found")
          .out("witness", label)
          .out("value", value.to_string());
      rep.status = Status::refuted;
      rep.require_valid();
      return rep;
    }
    for (std::size_t t = v; t-- > 0;) {
      exps[t] = (exps[t] + 1) % order;
      if (exps[t] != 0) break;
    }
  }
  scan.out("zeros_found", "0");
  rep.status = Status::verified;
  rep.require_valid();
  return rep;
}

/// Abelian group with one Z/p factor per prime (with multiplicity) of n.
inline AbelianGroup prime_factor_group(unsigned long n) {
  std::vector<unsigned> orders;
  for (const auto& [p, mult] : factorize(n))
    for (unsigned k = 0; k < mult; ++k)
      orders.push_back(static_cast<unsigned>(p));
  return AbelianGroup(orders);
}

/// Fixed-point certificate for the two-block permutation action: Type I
/// (diagonal points) is decided by the trace-kind two-block system, Types II
/// and III (single-block points R_chi) by the character power sums
/// sum over alpha of chi(alpha)^(m_t).
inline VerificationReport sn_fixed_point_certificate(unsigned n1, unsigned n2,
                                                     unsigned m1,
                                                     unsigned m2) {
  VerificationReport rep;
  rep.claim_id = "two-block-fixed-points";
  rep.set_param("n1", std::to_string(n1));
  rep.set_param("n2", std::to_string(n2));
  rep.set_param("m1", std::to_string(m1));
  rep.set_param("m2", std::to_string(m2));

  TwoBlockDecision type1 =
      decide_two_block({n1, n2, m1, m2, TwoBlockKind::trace});
  Step& s1 = rep.add_step("Type I: diagonal points via the trace system");
  s1.in("system", "n1 a^m + n2 b^m = 0 for m = m1, m2");
  if (type1.nontrivial_exists) {
    s1.out("witness", "(a, b) = (" + type1.witness->first.to_string() + ", " +
                          type1.witness->second.to_string() + ")");
    s1.out("outcome", "Type I fixed point exists");
    rep.status = Status::refuted;
    rep.require_valid();
    return rep;
  }
  s1.out("outcome", "no Type I fixed point");

  const char* type_names[2] = {"Type II", "Type III"};
  const unsigned sizes[2] = {n1, n2};
  for (int which = 0; which < 2; ++which) {
    const AbelianGroup h = prime_factor_group(sizes[which]);
    Step& step = rep.add_step(std::string(type_names[which]) +
                              ": single-block points via character sums");
    step.in("block_group", h.to_string());
    for (const auto& chi_exp : h.elements()) {
      const Character chi{chi_exp};
      CycloNum sum1, sum2;
      for (const auto& alpha : h.elements()) {
        const CycloNum value = chi.value(h, alpha);
        sum1 = sum1 + value.pow(m1);
        sum2 = sum2 + value.pow(m2);
      }
      step.out("chi" + AbelianGroup::element_to_string(chi_exp) + "_sums",
               "(" + sum1.to_string() + ", " + sum2.to_string() + ")");
      if (sum1.is_zero() && sum2.is_zero()) {
        rep.add_step("fixed point on a single block")
            .out("witness",
                 std::string(type_names[which]) + " point R_chi for chi = " +
                     AbelianGroup::element_to_string(chi_exp))
            .out("sums", "(0, 0)");
        rep.status = Status::refuted;
        rep.require_valid();
        return rep;
      }
    }
  }

  rep.add_step("conclusion")
      .out("fixed_points", "none of Types I, II, III");
  rep.status = Status::verified;
  rep.require_valid();
  return rep;
}

/// Decomposes the two-block permutation representation: a 2-dimensional
/// trivial-character summand spanned by the block indicators plus n-2
/// eigenlines with pairwise distinct nontrivial characters.
inline VerificationReport character_decomposition_check(unsigned n1,
                                                        unsigned n2) {
  VerificationReport rep;
  rep.claim_id = "permutation-character-decomposition";
  rep.set_param("n1", std::to_string(n1));
  rep.set_param("n2", std::to_string(n2));
  const AbelianGroup h1 = prime_factor_group(n1);
  const AbelianGroup h2 = prime_factor_group(n2);
  const unsigned n = n1 + n2;

  // Candidate simultaneous eigenvectors: (R_chi, 0) and (0, R_eta), with
  // R_chi the value vector of chi over the block group's elements.
  struct Line {
    std::vector<CycloNum> vec;
    std::vector<CycloNum> eigen;  // eigenvalue per (h1, h2) group element
    bool trivial;
    std::string label;
  };
  std::vector<Line> lines;
  const auto h1_elems = h1.elements();
  const auto h2_elems = h2.elements();

  auto block_action = [&](const AbelianGroup::Element& a1,
                          const AbelianGroup::Element& a2) {
    Matrix<CycloNum> m(n, n);
    const Matrix<CycloNum> p1 = perm_matrix(h1, a1);
    const Matrix<CycloNum> p2 = perm_matrix(h2, a2);
    for (unsigned r = 0; r < n1; ++r)
      for (unsigned c = 0; c < n1; ++c) m.at(r, c) = p1.at(r, c);
    for (unsigned r = 0; r < n2; ++r)
      for (unsigned c = 0; c < n2; ++c) m.at(n1 + r, n1 + c) = p2.at(r, c);
    return m;
  };

  for (int which = 0; which < 2; ++which) {
    const AbelianGroup& h = which == 0 ? h1 : h2;
    const unsigned offset = which == 0 ? 0 : n1;
    for (const auto& chi_exp : h.elements()) {
      const Character chi{chi_exp};
      Line line;
      line.vec.assign(n, CycloNum::zero());
      for (const auto& g : h.elements())
        line.vec[offset + h.index_of(g)] = chi.value(h, g);
      line.trivial = chi.is_trivial();
      line.label = std::string(which == 0 ? "block1_chi" : "block2_chi") +
                   AbelianGroup::element_to_string(chi_exp);
      for (const auto& a1 : h1_elems)
        for (const auto& a2 : h2_elems) {
          // translation by a sends R_chi to chi(-a) R_chi
          const auto& a = which == 0 ? a1 : a2;
          AbelianGroup::Element neg(h.cyclic_orders().size());
          for (std::size_t t = 0; t < neg.size(); ++t)
            neg[t] = (h.cyclic_orders()[t] - a[t]) % h.cyclic_orders()[t];
          line.eigen.push_back(chi.value(h, neg));
        }
      lines.push_back(std::move(line));
    }
  }

  // Each candidate is a simultaneous eigenvector with the recorded values.
  std::size_t pair_index = 0;
  for (const auto& a1 : h1_elems) {
    for (const auto& a2 : h2_elems) {
      const Matrix<CycloNum> act = block_action(a1, a2);
      for (const auto& line : lines) {
        for (unsigned r = 0; r < n; ++r) {
          CycloNum image;
          for (unsigned c = 0; c < n; ++c)
            image = image + act.at(r, c) * line.vec[c];
          if (image != line.eigen[pair_index] * line.vec[r])
            throw std::logic_error("candidate line is not an eigenline");
        }
      }
      ++pair_index;
    }
  }
  rep.add_step("simultaneous eigenvector check")
      .in("group", h1.to_string() + " x " + h2.to_string())
      .out("lines", std::to_string(lines.size()))
      .out("eigen_relation", "holds for every group element");

  // The n candidate vectors span the whole space.
  Matrix<CycloNum> basis(n, n);
  for (unsigned c = 0; c < n; ++c)
    for (unsigned r = 0; r < n; ++r) basis.at(r, c) = lines[c].vec[r];
  const std::size_t rank = basis.rank();
  rep.add_step("candidate vectors span the space")
      .out("rank", std::to_string(rank));
  if (rank != n) throw std::logic_error("eigenlines do not span");

  // Exactly two trivial lines (the block indicators), and the nontrivial
  // character tuples are pairwise distinct.
  unsigned trivial_count = 0;
  for (const auto& line : lines)
    if (line.trivial) ++trivial_count;
  std::vector<const Line*> nontrivial;
  for (const auto& line : lines)
    if (!line.trivial) nontrivial.push_back(&line);
  for (std::size_t p = 0; p < nontrivial.size(); ++p)
    for (std::size_t q = p + 1; q < nontrivial.size(); ++q)
      if (nontrivial[p]->eigen == nontrivial[q]->eigen)
        throw std::logic_error("two eigenlines share a character");
  Step& summary = rep.add_step("summand shape");
  summary.out("trivial_summand_dimension", std::to_string(trivial_count));
  summary.out("nontrivial_lines", std::to_string(nontrivial.size()));
  for (const auto* line : nontrivial) {
    std::string eigen_label;
    for (const auto& value : line->eigen)
      eigen_label += (eigen_label.empty() ? "" : ",") + value.to_string();
    summary.out(line->label, eigen_label);
  }
  if (trivial_count != 2 || nontrivial.size() != n - 2u)
    throw std::logic_error("unexpected decomposition shape");

  rep.status = Status::verified;
  rep.require_valid();
  return rep;
}

/// Matrix witness behind the cyclic counterexample: D = diag(1, z, z^2) with
/// z = zeta_3 and the 3-cycle P satisfy P D P^-1 = z^-1 D, tr(D) = tr(D^2) = 0
/// and det(D) = 1.
inline VerificationReport cyclic_counterexample_check() {
  VerificationReport rep;
  rep.claim_id = "cyclic-conjugation-witness";
  const CycloNum z = CycloNum::root_of_unity(3, 1);
  Matrix<CycloNum> d(3, 3);
  for (unsigned k = 0; k < 3; ++k) d.at(k, k) = z.pow(k);
  const AbelianGroup z3({3});
  const Matrix<CycloNum> p = perm_matrix(z3, {1});

  const Matrix<CycloNum> conj = p * d * p.inverse();
  std::optional<unsigned> sign;
  for (unsigned e = 1; e <= 2; ++e)
    if (conj == d.scaled(z.pow(e))) sign = e;
  if (!sign) throw std::logic_error("conjugation is not a root-of-unity twist");
  rep.add_step("conjugation twist")
      .in("D", "diag(1, zeta(3), zeta(3)^2)")
      .in("P", "3-cycle permutation matrix")
      .out("P_D_Pinv", "zeta(3)^" + std::to_string(*sign) + " * D");

  const CycloNum tr1 = d.trace();
  const CycloNum tr2 = (d * d).trace();
  const CycloNum det = d.determinant();
  rep.add_step("trace and determinant values")
      .out("tr(D)", tr1.to_string())
      .out("tr(D^2)", tr2.to_string())
      .out("det(D)", det.to_string());
  if (!tr1.is_zero() || !tr2.is_zero() || det != CycloNum::one())
    throw std::logic_error("cyclic witness values are off");

  rep.status = Status::verified;
  rep.require_valid();
  return rep;
}

}  // namespace sigmacheck

#endif  // SIGMACHECK_GROUPFIX_HPP
