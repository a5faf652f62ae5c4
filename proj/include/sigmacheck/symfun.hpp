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

#ifndef SIGMACHECK_SYMFUN_HPP
#define SIGMACHECK_SYMFUN_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sigmacheck/cyclotomic.hpp"
#include "sigmacheck/multipoly.hpp"
#include "sigmacheck/polymatrix.hpp"
#include "sigmacheck/report.hpp"

namespace sigmacheck {

/// i-th elementary symmetric polynomial of the given values, expanded.
inline MultiPoly elem_sym(unsigned i, const std::vector<MultiPoly>& values) {
  if (i > values.size())
    throw std::invalid_argument("elementary symmetric index out of range");
  std::vector<MultiPoly> e(i + 1);
  e[0] = MultiPoly(CycloNum::one());
  std::size_t used = 0;
  for (const MultiPoly& v : values) {
    ++used;
    for (unsigned k = std::min<std::size_t>(i, used); k >= 1; --k)
      e[k] = e[k] + e[k - 1] * v;
  }
  return e[i];
}

/// Sum of i-th powers of the given values.
inline MultiPoly power_sum(unsigned i, const std::vector<MultiPoly>& values) {
  if (i == 0)
    throw std::invalid_argument("power sum index must be positive");
  MultiPoly total;
  for (const MultiPoly& v : values) total = total + v.pow(i);
  return total;
}

enum class NewtonDirection { powers_to_elementary, elementary_to_powers };

/// Exact conversion between (p_1..p_n) and (s_1..s_n) in characteristic 0,
/// via p_k - s_1 p_{k-1} + ... + (-1)^{k-1} s_{k-1} p_1 + (-1)^k k s_k = 0.
inline std::vector<CycloNum> newton_convert(NewtonDirection direction,
                                            const std::vector<CycloNum>& input) {
  const std::size_t n = input.size();
  std::vector<CycloNum> out(n);
  if (direction == NewtonDirection::powers_to_elementary) {
    const std::vector<CycloNum>& p = input;
    std::vector<CycloNum> s(n + 1);
    s[0] = CycloNum::one();
    for (std::size_t k = 1; k <= n; ++k) {
      CycloNum acc;
      CycloNum sign = CycloNum::one();
      for (std::size_t i = 1; i <= k; ++i) {
        acc = acc + sign * s[k - i] * p[i - 1];
        sign = -sign;
      }
      s[k] = acc / CycloNum(Rational(static_cast<long>(k)));
      out[k - 1] = s[k];
    }
  } else {
    const std::vector<CycloNum>& s = input;
    std::vector<CycloNum> p(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
      CycloNum acc;
      CycloNum sign = CycloNum::one();
      for (std::size_t i = 1; i < k; ++i) {
        acc = acc + sign * s[i - 1] * p[k - i];
        sign = -sign;
      }
      acc = acc + sign * CycloNum(Rational(static_cast<long>(k))) * s[k - 1];
      p[k] = acc;
      out[k - 1] = p[k];
    }
  }
  return out;
}

/// s_i evaluated at n1 copies of a and n2 copies of b, as the closed-form
/// binomial convolution sum_k C(n1,k) C(n2,i-k) a^k b^(i-k).
inline MultiPoly specialize_two_block(unsigned i, unsigned n1, unsigned n2) {
  if (i < 1 || i > n1 + n2)
    throw std::invalid_argument("two-block index out of range");
  MultiPoly result;
  const std::vector<std::string> vars = {"a", "b"};
  for (unsigned k = 0; k <= i; ++k) {
    if (k > n1 || i - k > n2) continue;
    Rational coeff{mpz_class(binomial(n1, k) * binomial(n2, i - k))};
    result = result + MultiPoly::term(CycloNum(coeff), vars, {k, i - k});
  }
  return result;
}

enum class TwoBlockKind { trace, sigma };

/// The bivariate system attached to a pair of block sizes and a pair of
/// indices: either the two-block specializations S_{m1}, S_{m2} (sigma kind)
/// or the power equations n1 a^m + n2 b^m for m = m1, m2 (trace kind).
struct TwoBlockSystem {
  unsigned n1, n2, m1, m2;
  TwoBlockKind kind;

  TwoBlockSystem(unsigned n1_, unsigned n2_, unsigned m1_, unsigned m2_,
                 TwoBlockKind kind_)
      : n1(n1_), n2(n2_), m1(m1_), m2(m2_), kind(kind_) {
    if (n1 < 1 || n2 < 1)
      throw std::invalid_argument("block sizes must be positive");
    if (!(1 <= m1 && m1 < m2 && m2 <= n1 + n2))
      throw std::invalid_argument("indices must satisfy 1 <= m1 < m2 <= n1+n2");
  }

  MultiPoly form(unsigned which) const {
    const unsigned m = which == 0 ? m1 : m2;
    if (kind == TwoBlockKind::sigma) return specialize_two_block(m, n1, n2);
    const std::vector<std::string> vars = {"a", "b"};
    return MultiPoly::term(CycloNum(Rational(static_cast<long>(n1))), vars,
                           {m, 0}) +
           MultiPoly::term(CycloNum(Rational(static_cast<long>(n2))), vars,
                           {0, m});
  }
};

struct TwoBlockDecision {
  bool nontrivial_exists = false;
  std::optional<std::pair<CycloNum, CycloNum>> witness;  // (a, b)
  VerificationReport report;
};

namespace detail {

/// Bounded search for an explicit common zero (t, 1) of the two dehomogenized
/// forms: small rationals and roots of unity of order <= 2(n1+n2).
inline std::optional<CycloNum> bounded_common_root(const MultiPoly& f1,
                                                   const MultiPoly& f2,
                                                   unsigned order_bound) {
  std::vector<CycloNum> candidates;
  for (long p = -4; p <= 4; ++p)
    for (long q = 1; q <= 4; ++q)
      candidates.push_back(CycloNum(Rational(p, q)));
  for (unsigned d = 1; d <= order_bound; ++d)
    for (unsigned k = 0; k < d; ++k)
      candidates.push_back(CycloNum::root_of_unity(d, k));
  for (const CycloNum& t : candidates) {
    std::map<std::string, CycloNum> point = {{"a", t},
                                             {"b", CycloNum::one()}};
    if (f1.evaluate(point).is_zero() && f2.evaluate(point).is_zero()) return t;
  }
  return std::nullopt;
}

}  // namespace detail

/// Decides whether the attached two-equation system has a solution other
/// than (0, 0) over the algebraic closure, with a step-by-step certificate.
/// only_trivial is reported as status verified; a nontrivial solution as
/// status refuted with a witness.
inline TwoBlockDecision decide_two_block(const TwoBlockSystem& system) {
  TwoBlockDecision decision;
  VerificationReport& rep = decision.report;
  rep.claim_id = "two-block-only-trivial";
  rep.set_param("n1", std::to_string(system.n1));
  rep.set_param("n2", std::to_string(system.n2));
  rep.set_param("m1", std::to_string(system.m1));
  rep.set_param("m2", std::to_string(system.m2));
  rep.set_param("kind",
                system.kind == TwoBlockKind::trace ? "trace" : "sigma");

  const MultiPoly F1 = system.form(0);
  const MultiPoly F2 = system.form(1);
  rep.add_step("attach the system forms")
      .in("m1", std::to_string(system.m1))
      .in("m2", std::to_string(system.m2))
      .out("form1", F1.to_string())
      .out("form2", F2.to_string());

  if (system.kind == TwoBlockKind::trace) {
    // Axis branches: a = 0 forces n2 b^m = 0 hence b = 0, and symmetrically.
    rep.add_step("axis branches force the trivial solution")
        .in("n1", std::to_string(system.n1))
        .in("n2", std::to_string(system.n2))
        .out("a_axis", "a = 0 forces b = 0")
        .out("b_axis", "b = 0 forces a = 0");

    // On the b != 0 branch, r = a/b must satisfy r^m1 = q and r^(m2-m1) = 1.
    const CycloNum q = CycloNum(Rational(-static_cast<long>(system.n2),
                                         static_cast<long>(system.n1)));
    const unsigned delta = system.m2 - system.m1;
    auto order = root_of_unity_order(q);
    Step& reduce = rep.add_step("reduce to the ratio r = a/b");
    reduce.in("q = -n2/n1", q.to_string())
        .in("delta = m2 - m1", std::to_string(delta))
        .out("q_root_of_unity_order",
             order ? std::to_string(*order) : "none");

    std::optional<CycloNum> ratio;
    if (order) {
      for (unsigned t = 0; t < delta && !ratio; ++t) {
        CycloNum r = CycloNum::root_of_unity(delta, t);
        if (r.pow(system.m1) == q) ratio = r;
      }
    }
    if (ratio) {
      decision.nontrivial_exists = true;
      decision.witness = std::make_pair(*ratio, CycloNum::one());
      std::map<std::string, CycloNum> point = {{"a", *ratio},
                                               {"b", CycloNum::one()}};
      rep.add_step("exhibit a nontrivial solution")
          .in("r", ratio->to_string())
          .out("witness",
               "(a, b) = (" + ratio->to_string() + ", 1)")
          .out("form1_at_witness", F1.evaluate(point).to_string())
          .out("form2_at_witness", F2.evaluate(point).to_string());
      rep.status = Status::refuted;
    } else {
      rep.add_step("scan the delta-th roots of unity for the ratio")
          .in("candidates", std::to_string(delta))
          .out("ratios_satisfying_r^m1_eq_q", "0");
      rep.status = Status::verified;
    }
    rep.require_valid();
    return decision;
  }

  // Sigma kind: dehomogenize at b = 1 and decide by resultant; the line
  // b = 0 is the one projective point the affine chart misses.
  std::map<std::string, MultiPoly> at_b1 = {
      {"b", MultiPoly(CycloNum::one())}};
  const MultiPoly f1 = F1.substitute(at_b1);
  const MultiPoly f2 = F2.substitute(at_b1);
  const MultiPoly res = resultant(f1, f2, "a");
  rep.add_step("dehomogenize at b = 1 and take the resultant")
      .in("f1", f1.to_string())
      .in("f2", f2.to_string())
      .out("resultant", res.to_string());

  const bool b_axis_zero = system.m1 > system.n1 && system.m2 > system.n1;
  rep.add_step("check the point (a : b) = (1 : 0)")
      .in("coeff_a^m1", binomial(system.n1, system.m1).get_str())
      .in("coeff_a^m2", binomial(system.n1, system.m2).get_str())
      .out("common_zero_at_b_eq_0", b_axis_zero ? "yes" : "no");

  if (res.is_zero() || b_axis_zero) {
    decision.nontrivial_exists = true;
    if (b_axis_zero) {
      decision.witness =
          std::make_pair(CycloNum::one(), CycloNum::zero());
      rep.add_step("exhibit a nontrivial solution on the b = 0 line")
          .out("witness", "(a, b) = (1, 0)");
    } else {
      auto t = detail::bounded_common_root(f1, f2,
                                           2 * (system.n1 + system.n2));
      if (t) {
        decision.witness = std::make_pair(*t, CycloNum::one());
        std::map<std::string, CycloNum> point = {{"a", *t},
                                                 {"b", CycloNum::one()}};
        rep.add_step("exhibit a nontrivial solution")
            .in("t", t->to_string())
            .out("witness", "(a, b) = (" + t->to_string() + ", 1)")
            .out("form1_at_witness", F1.evaluate(point).to_string())
            .out("form2_at_witness", F2.evaluate(point).to_string());
      } else {
        // The vanishing resultant certifies a common root over the closure;
        // its exact location may lie beyond the bounded witness search, but
        // the common factor of the two forms is itself checkable.
        MultiPoly g = poly_gcd(f1, f2);
        rep.add_step("certify via the common factor of the forms")
            .in("search_bound",
                "rationals |p|,q <= 4 and root orders <= " +
                    std::to_string(2 * (system.n1 + system.n2)))
            .out("witness",
                 "any root t of " + g.to_string() + " gives (a, b) = (t, 1)")
            .out("common_factor", g.to_string());
      }
    }
    rep.status = Status::refuted;
  } else {
    rep.add_step("conclude from a nonzero resultant")
        .out("common_affine_zero", "none")
        .out("common_zero_at_b_eq_0", "no");
    rep.status = Status::verified;
  }
  rep.require_valid();
  return decision;
}

/// Exact certificate for the high-power trace system at the point
/// q_zeta = (1, zeta, ..., zeta^(n-1)) for every primitive n-th root zeta:
/// (a) s_i(q_zeta) = 0 for i < n so the initial form vanishes there;
/// (b) every (n-1)x(n-1) Jacobian of (s_1..s_{n-1}) is nonzero at q_zeta;
/// (c) optionally, the power-sum Jacobian equals its Vandermonde product.
inline VerificationReport high_powers_check(unsigned n, bool include_c) {
  auto factors = factorize(n);
  if (factors.size() != 1 || factors[0].second != 1 || n < 3)
    throw std::invalid_argument("degree must be an odd prime >= 3");

  VerificationReport rep;
  rep.claim_id = "high-power-traces";
  rep.set_param("n", std::to_string(n));
  rep.set_param("include_power_sum_jacobian", include_c ? "true" : "false");

  for (unsigned k = 1; k < n; ++k) {
    const CycloNum zeta = CycloNum::root_of_unity(n, k);
    std::vector<CycloNum> q(n);
    for (unsigned j = 0; j < n; ++j) q[j] = zeta.pow(j);
    std::vector<MultiPoly> q_poly;
    for (const CycloNum& c : q) q_poly.emplace_back(c);
    const std::string zeta_name = "zeta(" + std::to_string(n) + ")^" +
                                  std::to_string(k);

    // (a) s_1..s_{n-1} vanish, hence so does the initial form
    // s_1^n s_n^{n-2} + s_2^n s_n^{n-3} + ... + s_{n-1}^n.
    std::vector<CycloNum> s(n + 1);
    for (unsigned i = 1; i <= n; ++i)
      s[i] = elem_sym(i, q_poly).constant_value();
    Step& a_step = rep.add_step("elementary symmetric values at q for " +
                                zeta_name);
    CycloNum initial_form;
    const CycloNum sn = s[n];
    for (unsigned i = 1; i < n; ++i) {
      if (!s[i].is_zero())
        throw std::logic_error("s_i(q_zeta) expected to vanish");
      a_step.out("s_" + std::to_string(i), s[i].to_string());
      initial_form = initial_form + s[i].pow(n) * sn.pow(n - 1 - i);
    }
    a_step.out("s_" + std::to_string(n), sn.to_string());
    a_step.out("initial_form", initial_form.to_string());
    if (!initial_form.is_zero())
      throw std::logic_error("initial form expected to vanish at q_zeta");

    // (b) Jacobians of (s_1..s_{n-1}) over every column selection j != l,
    // using d s_i / d x_j = s_{i-1}(values with x_j removed).
    Step& b_step = rep.add_step("elementary symmetric Jacobians at q for " +
                                zeta_name);
    for (unsigned l = 0; l < n; ++l) {
      Matrix<CycloNum> jac(n - 1, n - 1);
      unsigned col = 0;
      for (unsigned j = 0; j < n; ++j) {
        if (j == l) continue;
        std::vector<MultiPoly> without_j;
        for (unsigned t = 0; t < n; ++t)
          if (t != j) without_j.push_back(q_poly[t]);
        for (unsigned i = 1; i < n; ++i)
          jac.at(i - 1, col) =
              i == 1 ? CycloNum::one()
                     : elem_sym(i - 1, without_j).constant_value();
        ++col;
      }
      const CycloNum det = jac.determinant();
      if (det.is_zero())
        throw std::logic_error("Jacobian expected to be nonzero at q_zeta");
      b_step.out("det_skipping_x" + std::to_string(l + 1), det.to_string());
    }

    // (c) power-sum Jacobian det[i x_j^(i-1)] over columns j != l equals
    // (n-1)! times the Vandermonde product of the remaining coordinates.
    if (include_c) {
      Step& c_step = rep.add_step("power sum Jacobians at q for " + zeta_name);
      for (unsigned l = 0; l < n; ++l) {
        Matrix<CycloNum> jac(n - 1, n - 1);
        std::vector<CycloNum> kept;
        for (unsigned j = 0; j < n; ++j)
          if (j != l) kept.push_back(q[j]);
        for (unsigned i = 1; i < n; ++i)
          for (unsigned col = 0; col < n - 1; ++col)
            jac.at(i - 1, col) =
                CycloNum(Rational(static_cast<long>(i))) *
                kept[col].pow(i - 1);
        const CycloNum det = jac.determinant();
        CycloNum vandermonde = CycloNum(Rational(factorial(n - 1)));
        for (unsigned u = 0; u < kept.size(); ++u)
          for (unsigned v = u + 1; v < kept.size(); ++v)
            vandermonde = vandermonde * (kept[v] - kept[u]);
        if (det != vandermonde || det.is_zero())
          throw std::logic_error(
              "power-sum Jacobian expected to equal its Vandermonde product");
        c_step.out("det_skipping_x" + std::to_string(l + 1), det.to_string());
      }
    }
  }

  rep.status = Status::verified;
  rep.require_valid();
  return rep;
}

}  // namespace sigmacheck

#endif  // SIGMACHECK_SYMFUN_HPP
