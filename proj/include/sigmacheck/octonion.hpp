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

#ifndef SIGMACHECK_OCTONION_HPP
#define SIGMACHECK_OCTONION_HPP

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigmacheck/cyclotomic.hpp"
#include "sigmacheck/expr.hpp"
#include "sigmacheck/multipoly.hpp"
#include "sigmacheck/rational.hpp"
#include "sigmacheck/report.hpp"

namespace sigmacheck {

/// Structure scalars of the Cayley-Dickson algebra: i^2 = a, j^2 = b,
/// l^2 = c.  Scalars may be constants or base-field variables.
struct OctonionSpec {
  MultiPoly a, b, c;

  OctonionSpec(MultiPoly a_, MultiPoly b_, MultiPoly c_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a.is_zero() || b.is_zero() || c.is_zero())
      throw std::invalid_argument("structure scalars must be nonzero");
  }

  static OctonionSpec generic() {
    return {MultiPoly::variable("a"), MultiPoly::variable("b"),
            MultiPoly::variable("c")};
  }
  static OctonionSpec split() {
    return {MultiPoly::one(), MultiPoly::one(), MultiPoly::one()};
  }
};

inline const std::array<std::string, 8>& oct_basis_names() {
  static const std::array<std::string, 8> names = {"1",  "i",  "j",  "ij",
                                                   "l",  "il", "jl", "ijl"};
  return names;
}

/// Octonion with polynomial coordinates in the fixed basis
/// 1, i, j, ij, l, il, jl, ijl.
struct Octonion {
  std::array<MultiPoly, 8> coords;

  static Octonion zero() { return Octonion{}; }
  static Octonion scalar(const MultiPoly& s) {
    Octonion x;
    x.coords[0] = s;
    return x;
  }
  static Octonion basis(std::size_t k) {
    Octonion x;
    x.coords.at(k) = MultiPoly::one();
    return x;
  }

  bool is_zero() const {
    for (const auto& c : coords)
      if (!c.is_zero()) return false;
    return true;
  }
  bool is_scalar() const {
    for (std::size_t k = 1; k < 8; ++k)
      if (!coords[k].is_zero()) return false;
    return true;
  }

  Octonion scaled(const MultiPoly& s) const {
    Octonion x;
    for (std::size_t k = 0; k < 8; ++k) x.coords[k] = coords[k] * s;
    return x;
  }
  Octonion operator-() const {
    return scaled(MultiPoly(CycloNum(Rational(-1))));
  }
  Octonion operator+(const Octonion& o) const {
    Octonion x;
    for (std::size_t k = 0; k < 8; ++k) x.coords[k] = coords[k] + o.coords[k];
    return x;
  }
  Octonion operator-(const Octonion& o) const { return *this + (-o); }
  bool operator==(const Octonion& o) const { return coords == o.coords; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < 8; ++k) {
      if (coords[k].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << coords[k].to_string() << ")";
      if (k) os << "*" << oct_basis_names()[k];
    }
    return os.str();
  }
};

namespace detail {

// Quaternion half in the basis 1, i, j, ij; index k has i-exponent k % 2 and
// j-exponent k / 2.
using Quat = std::array<MultiPoly, 4>;

inline Quat quat_conj(const Quat& q) { return {q[0], -q[1], -q[2], -q[3]}; }

inline Quat quat_add(const Quat& p, const Quat& q) {
  return {p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3]};
}

// Product generated from the defining relations: move j past i with the sign
// from ji = -ij, then reduce i^2 = a, j^2 = b.
inline Quat quat_mul(const OctonionSpec& spec, const Quat& p, const Quat& q) {
  Quat out;
  for (unsigned k1 = 0; k1 < 4; ++k1) {
    if (p[k1].is_zero()) continue;
    const unsigned e1 = k1 % 2, f1 = k1 / 2;
    for (unsigned k2 = 0; k2 < 4; ++k2) {
      if (q[k2].is_zero()) continue;
      const unsigned e2 = k2 % 2, f2 = k2 / 2;
      MultiPoly scale = p[k1] * q[k2];
      if (f1 && e2) scale = -scale;
      if (e1 + e2 == 2) scale = scale * spec.a;
      if (f1 + f2 == 2) scale = scale * spec.b;
      const unsigned target = (e1 + e2) % 2 + 2 * ((f1 + f2) % 2);
      out[target] = out[target] + scale;
    }
  }
  return out;
}

inline Quat quat_scaled(const Quat& q, const MultiPoly& s) {
  return {q[0] * s, q[1] * s, q[2] * s, q[3] * s};
}

}  // namespace detail

/// Exact product via the doubling rule
/// (x + yl)(z + wl) = (xz + c (conj w) y) + (wx + y (conj z)) l.
inline Octonion oct_mul(const OctonionSpec& spec, const Octonion& lhs,
                        const Octonion& rhs) {
  using detail::Quat;
  const Quat x = {lhs.coords[0], lhs.coords[1], lhs.coords[2], lhs.coords[3]};
  const Quat y = {lhs.coords[4], lhs.coords[5], lhs.coords[6], lhs.coords[7]};
  const Quat z = {rhs.coords[0], rhs.coords[1], rhs.coords[2], rhs.coords[3]};
  const Quat w = {rhs.coords[4], rhs.coords[5], rhs.coords[6], rhs.coords[7]};
  const Quat first = detail::quat_add(
      detail::quat_mul(spec, x, z),
      detail::quat_scaled(detail::quat_mul(spec, detail::quat_conj(w), y),
                          spec.c));
  const Quat second = detail::quat_add(
      detail::quat_mul(spec, w, x),
      detail::quat_mul(spec, y, detail::quat_conj(z)));
  Octonion out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.coords[k] = first[k];
    out.coords[4 + k] = second[k];
  }
  return out;
}

/// Conjugation x + yl -> conj(x) - yl: negates every non-unit coordinate.
inline Octonion oct_conj(const Octonion& x) {
  Octonion out = -x;
  out.coords[0] = x.coords[0];
  return out;
}

inline MultiPoly oct_trace(const Octonion& x) {
  return x.coords[0].scaled(CycloNum(2));
}

/// Norm n(x) = x conj(x), asserted to land in the base field.
inline MultiPoly oct_norm(const OctonionSpec& spec, const Octonion& x) {
  const Octonion product = oct_mul(spec, x, oct_conj(x));
  if (!product.is_scalar())
    throw std::logic_error("norm product has a non-scalar coordinate");
  return product.coords[0];
}

/// Verifies x^2 - tr(x) x + n(x) = 0 for one element.
inline VerificationReport quadratic_identity_check(const OctonionSpec& spec,
                                                   const Octonion& x) {
  VerificationReport rep;
  rep.claim_id = "octonion-quadratic-identity";
  rep.set_param("x", x.to_string());
  const Octonion square = oct_mul(spec, x, x);
  const MultiPoly trace = oct_trace(x);
  const MultiPoly norm = oct_norm(spec, x);
  const Octonion residue =
      square - x.scaled(trace) + Octonion::scalar(norm);
  Step& step = rep.add_step("expand x^2 - tr(x) x + n(x)");
  step.in("trace", trace.to_string());
  step.in("norm", norm.to_string());
  if (residue.is_zero()) {
    step.out("residue", "0");
    rep.status = Status::verified;
  } else {
    step.out("residue", residue.to_string());
    rep.add_step("identity fails").out("witness", x.to_string());
    rep.status = Status::refuted;
  }
  rep.require_valid();
  return rep;
}

/// Sign action of tau_k (k = 1, 2, 3): negates the basis elements containing
/// i, j, l respectively, extended linearly.
inline Octonion tau_action(unsigned k, const Octonion& x) {
  if (k < 1 || k > 3) throw std::invalid_argument("tau index must be 1..3");
  Octonion out = x;
  for (std::size_t m = 0; m < 8; ++m) {
    const bool flip = k == 1   ? (m % 4 == 1 || m % 4 == 3)
                      : k == 2 ? (m % 4 == 2 || m % 4 == 3)
                               : m >= 4;
    if (flip) out.coords[m] = -out.coords[m];
  }
  return out;
}

/// Checks in the split algebra that each tau_k is multiplicative on all 64
/// basis pairs, that the tau_k commute, and that each squares to identity.
inline VerificationReport automorphism_check() {
  VerificationReport rep;
  rep.claim_id = "octonion-sign-automorphisms";
  const OctonionSpec spec = OctonionSpec::split();
  for (unsigned k = 1; k <= 3; ++k) {
    Step& step = rep.add_step("tau_" + std::to_string(k) +
                              " is multiplicative on basis pairs");
    unsigned checked = 0;
    for (std::size_t p = 0; p < 8; ++p) {
      for (std::size_t q = 0; q < 8; ++q) {
        const Octonion lhs =
            tau_action(k, oct_mul(spec, Octonion::basis(p), Octonion::basis(q)));
        const Octonion rhs =
            oct_mul(spec, tau_action(k, Octonion::basis(p)),
                    tau_action(k, Octonion::basis(q)));
        if (!(lhs == rhs)) {
          rep.add_step("multiplicativity fails")
              .out("witness", oct_basis_names()[p] + " * " +
                                  oct_basis_names()[q] + " under tau_" +
                                  std::to_string(k));
          rep.status = Status::refuted;
          rep.require_valid();
          return rep;
        }
        ++checked;
      }
    }
    step.out("pairs_checked", std::to_string(checked));
  }
  Step& relations = rep.add_step("the tau_k commute and square to identity");
  for (unsigned k = 1; k <= 3; ++k) {
    for (std::size_t m = 0; m < 8; ++m) {
      const Octonion e = Octonion::basis(m);
      if (!(tau_action(k, tau_action(k, e)) == e))
        throw std::logic_error("tau does not square to identity");
      for (unsigned k2 = 1; k2 <= 3; ++k2)
        if (!(tau_action(k, tau_action(k2, e)) ==
              tau_action(k2, tau_action(k, e))))
          throw std::logic_error("tau actions do not commute");
    }
  }
  relations.out("group", "(Z/2)^3");
  rep.status = Status::verified;
  rep.require_valid();
  return rep;
}

/// Sign triple of a basis line under (tau_1, tau_2, tau_3).
inline std::string basis_character(std::size_t m) {
  std::string label = "(";
  for (unsigned k = 1; k <= 3; ++k) {
    const Octonion image = tau_action(k, Octonion::basis(m));
    const bool flipped = image == -Octonion::basis(m);
    if (!flipped && !(image == Octonion::basis(m)))
      throw std::logic_error("basis line is not an eigenline");
    label += flipped ? "-" : "+";
    if (k < 3) label += ",";
  }
  return label + ")";
}

/// Computes the (Z/2)^3-character of each basis line and asserts the eight
/// characters are pairwise distinct.
inline VerificationReport character_table_check() {
  VerificationReport rep;
  rep.claim_id = "octonion-character-table";
  Step& table = rep.add_step("sign triple of each basis line");
  std::vector<std::string> seen;
  for (std::size_t m = 0; m < 8; ++m) {
    const std::string label = basis_character(m);
    table.out(oct_basis_names()[m], label);
    seen.push_back(label);
  }
  Step& distinct = rep.add_step("characters are pairwise distinct");
  for (std::size_t p = 0; p < seen.size(); ++p)
    for (std::size_t q = p + 1; q < seen.size(); ++q)
      if (seen[p] == seen[q]) {
        rep.steps.back()
            .out("witness", oct_basis_names()[p] + " and " +
                                oct_basis_names()[q] + " share " + seen[p]);
        rep.status = Status::refuted;
        rep.require_valid();
        return rep;
      }
  distinct.out("distinct_characters", std::to_string(seen.size()));
  rep.status = Status::verified;
  rep.require_valid();
  return rep;
}

/// Certificate for the fixed-point argument: every H-fixed candidate is a
/// scalar multiple of a basis line (character table), and the induced scalar
/// system u_1^{2s} = ... = u_m^{2s}, Q(u) = 0 has only the trivial solution
/// because Q is nonzero at every tuple of (2s)-th roots of unity.
inline VerificationReport thm_oct_certificate(unsigned m, unsigned s,
                                              const std::string& q_text,
                                              unsigned long tuple_cap =
                                                  1000000) {
  if (m < 1 || s < 1)
    throw std::invalid_argument("element count and exponent must be positive");
  VerificationReport rep;
  rep.claim_id = "octonion-fixed-point-free";
  rep.set_param("m", std::to_string(m));
  rep.set_param("s", std::to_string(s));
  rep.set_param("Q", q_text);

  const ExprPtr q = parse_expr(q_text);
  require_fully_parenthesized(*q);
  const auto degree = structural_degree(*q);
  if (!degree)
    throw std::invalid_argument("Q must be structurally homogeneous");
  if (*degree <= 0 || *degree % 2 != 0)
    throw std::invalid_argument("Q must have positive even degree");
  std::vector<std::string> q_vars;
  collect_variables(*q, q_vars);
  for (const auto& name : q_vars) {
    bool known = false;
    for (unsigned t = 1; t <= m; ++t)
      known |= name == "x" + std::to_string(t);
    if (!known)
      throw std::invalid_argument("unknown variable '" + name + "' in Q");
  }

  const VerificationReport characters = character_table_check();
  Step& table = rep.add_step("every H-eigenline is a basis line");
  table.out("distinct_characters", "8");
  if (characters.status != Status::verified)
    throw std::logic_error("character table check failed");

  const unsigned long order = 2ul * s;
  double estimate = 1;
  for (unsigned t = 0; t < m; ++t) estimate *= static_cast<double>(order);
  if (estimate > static_cast<double>(tuple_cap)) {
    rep.add_step("enumeration size against the cap")
        .in("tuples", std::to_string(order) + "^" + std::to_string(m))
        .in("cap", std::to_string(tuple_cap))
        .out("outcome", "enumeration skipped");
    rep.status = Status::not_checked;
    rep.require_valid();
    return rep;
  }
  unsigned long tuple_count = 1;
  for (unsigned t = 0; t < m; ++t) tuple_count *= order;

  Step& scan = rep.add_step("evaluate Q at every tuple of (2s)-th roots");
  scan.in("root_order", std::to_string(order));
  scan.in("tuples", std::to_string(tuple_count));
  const bool record_values = tuple_count <= 64;
  std::vector<unsigned long> exps(m, 0);
  for (unsigned long count = 0; count < tuple_count; ++count) {
    std::map<std::string, CycloNum> point;
    std::string label;
    for (unsigned t = 0; t < m; ++t) {
      point["x" + std::to_string(t + 1)] =
          CycloNum::root_of_unity(order, static_cast<long>(exps[t]));
      label += (t ? "," : "(") + point["x" + std::to_string(t + 1)].to_string();
    }
    label += ")";
    const CycloNum value = eval_expr<CycloNum>(
        *q, point, [](const CycloNum& c) { return c; },
        [](const CycloNum& p, const CycloNum& r) { return p * r; });
    if (record_values) scan.out("Q" + label, value.to_string());
    if (value.is_zero()) {
      rep.add_step("violating tuple found")
          .out("witness", label)
          .out("value", value.to_string());
      rep.status = Status::refuted;
      rep.require_valid();
      return rep;
    }
    for (unsigned t = m; t-- > 0;) {
      exps[t] = (exps[t] + 1) % order;
      if (exps[t] != 0) break;
    }
  }
  scan.out("zeros_found", "0");

  rep.add_step("scalar endgame")
      .in("system", "u_1^" + std::to_string(order) + " = ... = u_" +
                        std::to_string(m) + "^" + std::to_string(order) +
                        ", Q(u_1, ..., u_" + std::to_string(m) + ") = 0")
      .out("conclusion", "only the trivial solution");
  rep.status = Status::verified;
  rep.require_valid();
  return rep;
}

/// Checks n(xy) = n(x) n(y) exactly on seeded random pairs with symbolic
/// structure scalars.
inline VerificationReport composition_check(const OctonionSpec& spec,
                                            unsigned long trials,
                                            std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  VerificationReport rep;
  rep.claim_id = "octonion-norm-composition";
  rep.set_param("trials", std::to_string(trials));
  rep.seed = seed;

  const std::vector<std::string> scalar_vars = [&spec] {
    std::vector<std::string> vars;
    for (const MultiPoly* p : {&spec.a, &spec.b, &spec.c})
      for (const auto& name : p->vars()) vars.push_back(name);
    return vars;
  }();

  auto sample = [&scalar_vars](SplitMix64& rng) {
    Octonion x;
    do {
      for (auto& coord : x.coords) {
        coord = MultiPoly();
        const long constant = rng.next_int(-3, 3);
        if (constant)
          coord = coord + MultiPoly(CycloNum(Rational(constant)));
        if (!scalar_vars.empty() && rng.next_below(2)) {
          const long c = rng.next_int(-2, 2);
          if (c)
            coord = coord +
                    MultiPoly::variable(scalar_vars[rng.next_below(
                                            scalar_vars.size())])
                        .scaled(CycloNum(Rational(c)));
        }
      }
    } while (x.is_zero());
    return x;
  };

  for (unsigned long trial = 0; trial < trials; ++trial) {
    SplitMix64 rng(derive_seed(seed, trial));
    const Octonion x = sample(rng);
    const Octonion y = sample(rng);
    const MultiPoly lhs = oct_norm(spec, oct_mul(spec, x, y));
    const MultiPoly rhs = oct_norm(spec, x) * oct_norm(spec, y);
    if (!(lhs == rhs)) {
      rep.add_step("composition fails")
          .out("witness", "x = " + x.to_string() + ", y = " + y.to_string());
      rep.status = Status::refuted;
      rep.require_valid();
      return rep;
    }
  }
  rep.add_step("norm multiplicativity on sampled pairs")
      .in("trials", std::to_string(trials))
      .out("failures", "0");
  rep.status = Status::verified;
  rep.require_valid();
  return rep;
}

}  // namespace sigmacheck

#endif  // SIGMACHECK_OCTONION_HPP
