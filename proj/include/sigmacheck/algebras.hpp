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

#ifndef SIGMACHECK_ALGEBRAS_HPP
#define SIGMACHECK_ALGEBRAS_HPP

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sigmacheck/cyclotomic.hpp"
#include "sigmacheck/expr.hpp"
#include "sigmacheck/multipoly.hpp"
#include "sigmacheck/polymatrix.hpp"
#include "sigmacheck/ratfunc.hpp"
#include "sigmacheck/report.hpp"

namespace sigmacheck {

/// One symbol-algebra factor: generators x, y with x^r = z, y^r = w and
/// yx = zeta_r xy, named by its two center variables.
struct SymbolSpec {
  unsigned r;
  std::string z_name;
  std::string w_name;

  SymbolSpec(unsigned r_, std::string z, std::string w)
      : r(r_), z_name(std::move(z)), w_name(std::move(w)) {
    if (r < 2) throw std::invalid_argument("symbol degree must be at least 2");
  }
};

/// Tensor product of symbol algebras with pairwise distinct center variables.
struct TensorSpec {
  std::vector<SymbolSpec> factors;

  explicit TensorSpec(std::vector<SymbolSpec> f) : factors(std::move(f)) {
    if (factors.empty())
      throw std::invalid_argument("tensor spec needs at least one factor");
    std::vector<std::string> names;
    for (const auto& factor : factors) {
      names.push_back(factor.z_name);
      names.push_back(factor.w_name);
    }
    for (std::size_t p = 0; p < names.size(); ++p)
      for (std::size_t q = p + 1; q < names.size(); ++q)
        if (names[p] == names[q])
          throw std::invalid_argument("center variable names must be distinct");
  }

  unsigned long degree() const {
    unsigned long n = 1;
    for (const auto& factor : factors) n *= factor.r;
    return n;
  }

  /// "symbol <r> <z> <w>" or "tensor <r1> <z1> <w1> <r2> <z2> <w2> ...".
  static TensorSpec parse(const std::string& text) {
    std::istringstream is(text);
    std::string head;
    if (!(is >> head))
      throw std::invalid_argument("empty algebra spec");
    std::vector<SymbolSpec> factors;
    auto read_factor = [&is]() {
      unsigned r;
      std::string z, w;
      if (!(is >> r >> z >> w))
        throw std::invalid_argument(
            "algebra factor needs a degree and two variable names");
      return SymbolSpec(r, z, w);
    };
    if (head == "symbol") {
      factors.push_back(read_factor());
    } else if (head == "tensor") {
      while (!(is >> std::ws).eof()) factors.push_back(read_factor());
    } else {
      throw std::invalid_argument("algebra spec must start with 'symbol' or 'tensor'");
    }
    std::string extra;
    if (is >> extra)
      throw std::invalid_argument("trailing input in algebra spec");
    return TensorSpec(std::move(factors));
  }

  std::string to_string() const {
    std::ostringstream os;
    os << (factors.size() == 1 ? "symbol" : "tensor");
    for (const auto& factor : factors)
      os << " " << factor.r << " " << factor.z_name << " " << factor.w_name;
    return os.str();
  }
};

/// Matrix model of one symbol factor: X = u D with D = diag(1, zeta, ...,
/// zeta^(r-1)) and Y = v P with P the cyclic shift oriented so YX = zeta XY;
/// substituting z = u^r, w = v^r makes X^r = z I and Y^r = w I exact.  The
/// orientation is asserted on construction.
inline std::pair<Matrix<MultiPoly>, Matrix<MultiPoly>> symbol_matrix_model(
    const SymbolSpec& spec, const std::string& u_name = "u",
    const std::string& v_name = "v") {
  const unsigned r = spec.r;
  const MultiPoly u = MultiPoly::variable(u_name);
  const MultiPoly v = MultiPoly::variable(v_name);
  Matrix<MultiPoly> x(r, r), y(r, r);
  for (unsigned k = 0; k < r; ++k) {
    x.at(k, k) = u.scaled(CycloNum::root_of_unity(r, k));
    y.at((k + r - 1) % r, k) = v;
  }
  const CycloNum zeta = CycloNum::root_of_unity(r, 1);
  if (y * x != (x * y).scaled(zeta))
    throw std::logic_error("orientation self-test failed: YX != zeta XY");
  return {x, y};
}

/// The full tensor model: factor t's generators Kronecker-embedded with
/// identities elsewhere, over radical variables u<t>, v<t>.
class TensorModel {
 public:
  explicit TensorModel(TensorSpec spec) : spec_(std::move(spec)) {
    const std::size_t s = spec_.factors.size();
    std::vector<std::pair<Matrix<MultiPoly>, Matrix<MultiPoly>>> local;
    for (std::size_t t = 0; t < s; ++t)
      local.push_back(symbol_matrix_model(spec_.factors[t], u_name(t),
                                          v_name(t)));
    for (std::size_t t = 0; t < s; ++t) {
      Matrix<MultiPoly> gx = Matrix<MultiPoly>::identity(1);
      Matrix<MultiPoly> gy = Matrix<MultiPoly>::identity(1);
      for (std::size_t p = 0; p < s; ++p) {
        const Matrix<MultiPoly> id =
            Matrix<MultiPoly>::identity(spec_.factors[p].r);
        gx = Matrix<MultiPoly>::kronecker(gx, p == t ? local[p].first : id);
        gy = Matrix<MultiPoly>::kronecker(gy, p == t ? local[p].second : id);
      }
      x_.push_back(gx);
      y_.push_back(gy);
    }
  }

  const TensorSpec& spec() const { return spec_; }
  unsigned long degree() const { return spec_.degree(); }
  std::size_t factor_count() const { return spec_.factors.size(); }
  const Matrix<MultiPoly>& x(std::size_t t) const { return x_.at(t); }
  const Matrix<MultiPoly>& y(std::size_t t) const { return y_.at(t); }

  std::string u_name(std::size_t t) const {
    return "u" + std::to_string(t + 1);
  }
  std::string v_name(std::size_t t) const {
    return "v" + std::to_string(t + 1);
  }

  /// Rewrites a center polynomial in the z_t, w_t variables into the radical
  /// variables via z_t = u_t^(r_t), w_t = v_t^(r_t).
  MultiPoly center_to_radicals(const MultiPoly& p) const {
    std::map<std::string, MultiPoly> bindings;
    for (std::size_t t = 0; t < factor_count(); ++t) {
      const unsigned r = spec_.factors[t].r;
      bindings[spec_.factors[t].z_name] =
          MultiPoly::variable(u_name(t)).pow(r);
      bindings[spec_.factors[t].w_name] =
          MultiPoly::variable(v_name(t)).pow(r);
    }
    return p.substitute(bindings);
  }

  /// Inverse rewrite: requires every radical exponent to be a multiple of
  /// its factor degree (the centrality condition).
  MultiPoly radicals_to_center(const MultiPoly& p) const {
    MultiPoly result;
    const auto& vars = p.vars();
    for (const auto& [mono, coeff] : p.terms()) {
      std::map<std::string, unsigned> exps;
      for (std::size_t k = 0; k < vars.size(); ++k)
        if (mono[k]) exps[vars[k]] = mono[k];
      std::vector<std::string> out_vars;
      Monomial out_exps;
      for (std::size_t t = 0; t < factor_count(); ++t) {
        const unsigned r = spec_.factors[t].r;
        for (int radical = 0; radical < 2; ++radical) {
          const std::string name = radical ? v_name(t) : u_name(t);
          auto it = exps.find(name);
          if (it == exps.end()) continue;
          if (it->second % r != 0)
            throw std::logic_error(
                "value is not central: exponent of " + name +
                " is not a multiple of " + std::to_string(r));
          out_vars.push_back(radical ? spec_.factors[t].w_name
                                     : spec_.factors[t].z_name);
          out_exps.push_back(it->second / r);
          exps.erase(it);
        }
      }
      if (!exps.empty())
        throw std::logic_error("unexpected non-radical variable " +
                               exps.begin()->first);
      result = result + MultiPoly::term(coeff, out_vars, out_exps);
    }
    return result;
  }

 private:
  TensorSpec spec_;
  std::vector<Matrix<MultiPoly>> x_, y_;
};

/// Element of a tensor model, stored by coordinates over the monomial basis
/// prod x_t^(i_t) y_t^(j_t); coordinates are polynomials in the center
/// variables.  Basis exponents are reduced modulo each factor degree.
struct AlgebraElement {
  // key: (i_1, j_1, i_2, j_2, ...), one (i, j) pair per factor
  std::map<std::vector<unsigned>, MultiPoly> coords;

  static AlgebraElement basis_monomial(const TensorSpec& spec,
                                       std::vector<unsigned> exps,
                                       MultiPoly coeff) {
    if (exps.size() != 2 * spec.factors.size())
      throw std::invalid_argument("basis exponent tuple has the wrong length");
    for (std::size_t t = 0; t < spec.factors.size(); ++t) {
      exps[2 * t] %= spec.factors[t].r;
      exps[2 * t + 1] %= spec.factors[t].r;
    }
    AlgebraElement e;
    if (!coeff.is_zero()) e.coords[std::move(exps)] = std::move(coeff);
    return e;
  }

  bool is_zero() const {
    for (const auto& [mono, coeff] : coords)
      if (!coeff.is_zero()) return false;
    return true;
  }

  bool is_scalar() const {
    for (const auto& [mono, coeff] : coords)
      for (unsigned e : mono)
        if (e) return false;
    return true;
  }

  AlgebraElement scaled(const MultiPoly& c) const {
    AlgebraElement result;
    if (c.is_zero()) return result;
    for (const auto& [mono, coeff] : coords) result.coords[mono] = coeff * c;
    return result;
  }

  AlgebraElement operator-() const {
    return scaled(MultiPoly(CycloNum(Rational(-1))));
  }

  AlgebraElement operator+(const AlgebraElement& other) const {
    AlgebraElement sum = *this;
    for (const auto& [mono, coeff] : other.coords) {
      auto it = sum.coords.find(mono);
      if (it == sum.coords.end()) {
        sum.coords[mono] = coeff;
      } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) sum.coords.erase(it);
      }
    }
    return sum;
  }

  AlgebraElement operator-(const AlgebraElement& other) const {
    return *this + (-other);
  }

  std::string to_string(const TensorSpec& spec) const {
    if (coords.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : coords) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff.to_string() << ")";
      for (std::size_t t = 0; t < spec.factors.size(); ++t) {
        if (mono[2 * t])
          os << "*x" << t + 1 << "^" << mono[2 * t];
        if (mono[2 * t + 1])
          os << "*y" << t + 1 << "^" << mono[2 * t + 1];
      }
    }
    return os.str();
  }
};

/// Evaluates an element in the matrix model.
inline Matrix<MultiPoly> element_matrix(const TensorModel& model,
                                        const AlgebraElement& elem) {
  const std::size_t n = model.degree();
  Matrix<MultiPoly> result(n, n);
  for (const auto& [mono, coeff] : elem.coords) {
    Matrix<MultiPoly> basis = Matrix<MultiPoly>::identity(n);
    for (std::size_t t = 0; t < model.factor_count(); ++t) {
      for (unsigned k = 0; k < mono[2 * t]; ++k) basis = basis * model.x(t);
      for (unsigned k = 0; k < mono[2 * t + 1]; ++k) basis = basis * model.y(t);
    }
    const MultiPoly scale = model.center_to_radicals(coeff);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        result.at(i, j) = result.at(i, j) + scale * basis.at(i, j);
  }
  return result;
}

/// Exact product in the tensor algebra: within factor t the exponents move
/// past each other via y x = zeta_r x y, overflowing powers reduce through
/// x^r = z, y^r = w; distinct factors commute.
inline AlgebraElement algebra_mul(const TensorSpec& spec,
                                  const AlgebraElement& lhs,
                                  const AlgebraElement& rhs) {
  AlgebraElement product;
  for (const auto& [lm, lc] : lhs.coords) {
    for (const auto& [rm, rc] : rhs.coords) {
      CycloNum twist = CycloNum::one();
      MultiPoly scale = lc * rc;
      std::vector<unsigned> mono(lm.size());
      for (std::size_t t = 0; t < spec.factors.size(); ++t) {
        const unsigned r = spec.factors[t].r;
        const unsigned i1 = lm[2 * t], j1 = lm[2 * t + 1];
        const unsigned i2 = rm[2 * t], j2 = rm[2 * t + 1];
        twist = twist * CycloNum::root_of_unity(
                            r, static_cast<long>(j1) * static_cast<long>(i2));
        unsigned i = i1 + i2, j = j1 + j2;
        if (i >= r) {
          i -= r;
          scale = scale * MultiPoly::variable(spec.factors[t].z_name);
        }
        if (j >= r) {
          j -= r;
          scale = scale * MultiPoly::variable(spec.factors[t].w_name);
        }
        mono[2 * t] = i;
        mono[2 * t + 1] = j;
      }
      product = product +
                AlgebraElement::basis_monomial(spec, mono, scale.scaled(twist));
    }
  }
  return product;
}

/// Parses a linear combination of basis monomials, e.g. "2*x1*y1 + (1/2)*x1".
/// Generators are x<t>, y<t>; center variables may appear in coefficients;
/// division only by nonzero scalar constants.
inline AlgebraElement parse_element(const TensorSpec& spec,
                                    const std::string& text) {
  const std::size_t s = spec.factors.size();
  std::map<std::string, AlgebraElement> atoms;
  const std::vector<unsigned> zeros(2 * s, 0);
  for (std::size_t t = 0; t < s; ++t) {
    std::vector<unsigned> xe = zeros, ye = zeros;
    xe[2 * t] = 1;
    ye[2 * t + 1] = 1;
    atoms["x" + std::to_string(t + 1)] =
        AlgebraElement::basis_monomial(spec, xe, MultiPoly::one());
    atoms["y" + std::to_string(t + 1)] =
        AlgebraElement::basis_monomial(spec, ye, MultiPoly::one());
    atoms[spec.factors[t].z_name] = AlgebraElement::basis_monomial(
        spec, zeros, MultiPoly::variable(spec.factors[t].z_name));
    atoms[spec.factors[t].w_name] = AlgebraElement::basis_monomial(
        spec, zeros, MultiPoly::variable(spec.factors[t].w_name));
  }
  auto scalar = [&](const CycloNum& c) {
    return AlgebraElement::basis_monomial(spec, zeros, MultiPoly(c));
  };
  auto eval = [&](auto&& self, const Expr& node) -> AlgebraElement {
    switch (node.kind) {
      case Expr::Kind::number:
        return scalar(CycloNum(node.number));
      case Expr::Kind::zeta:
        return scalar(CycloNum::root_of_unity(node.zeta_order, 1));
      case Expr::Kind::variable: {
        auto it = atoms.find(node.name);
        if (it == atoms.end())
          throw ParseError("unknown generator '" + node.name + "'",
                           node.position);
        return it->second;
      }
      case Expr::Kind::add:
        return self(self, *node.children[0]) + self(self, *node.children[1]);
      case Expr::Kind::sub:
        return self(self, *node.children[0]) - self(self, *node.children[1]);
      case Expr::Kind::neg:
        return -self(self, *node.children[0]);
      case Expr::Kind::mul:
        return algebra_mul(spec, self(self, *node.children[0]),
                           self(self, *node.children[1]));
      case Expr::Kind::div: {
        const AlgebraElement den = self(self, *node.children[1]);
        if (!den.is_scalar() || den.coords.size() > 1)
          throw ParseError("division only by scalar constants", node.position);
        if (den.is_zero()) throw ParseError("division by zero", node.position);
        const MultiPoly& d = den.coords.begin()->second;
        if (!d.is_constant())
          throw ParseError("division only by scalar constants", node.position);
        return self(self, *node.children[0])
            .scaled(MultiPoly(d.constant_value().inverse()));
      }
      case Expr::Kind::pow: {
        if (node.exponent < 0)
          throw ParseError("negative exponent is not allowed here",
                           node.position);
        AlgebraElement acc = scalar(CycloNum::one());
        const AlgebraElement base = self(self, *node.children[0]);
        for (long k = 0; k < node.exponent; ++k)
          acc = algebra_mul(spec, acc, base);
        return acc;
      }
    }
    throw std::logic_error("unreachable expression kind");
  };
  const ExprPtr tree = parse_expr(text);
  return eval(eval, *tree);
}

/// sigma_i of an element: char_poly in the matrix model, centrality
/// assertion, and rewrite into the center variables z_t, w_t.
inline MultiPoly sigma_in_algebra(const TensorModel& model,
                                  const AlgebraElement& elem, unsigned i) {
  const unsigned long n = model.degree();
  if (i < 1 || i > n)
    throw std::invalid_argument("sigma index out of range");
  const Matrix<MultiPoly> m = element_matrix(model, elem);
  const MultiPoly raw = m.char_poly()[i];
  return model.radicals_to_center(raw);
}

/// The generic n x n matrices: X with entries s<row><col>, Y with t<row><col>.
inline Matrix<MultiPoly> generic_matrix(unsigned n, const std::string& prefix) {
  Matrix<MultiPoly> m(n, n);
  for (unsigned r = 0; r < n; ++r)
    for (unsigned c = 0; c < n; ++c)
      m.at(r, c) = MultiPoly::variable(prefix + std::to_string(r + 1) +
                                       std::to_string(c + 1));
  return m;
}

/// Evaluates a word over the generic matrices X, Y and returns sigma_i of the
/// resulting matrix as an exact polynomial in the s/t entries.
inline MultiPoly ud_sigma(unsigned n, const Expr& word, unsigned i) {
  if (n < 1 || n > 9)
    throw std::invalid_argument("generic matrix degree out of range");
  if (i < 1 || i > n)
    throw std::invalid_argument("sigma index out of range");
  using M = Matrix<MultiPoly>;
  std::map<std::string, M> atoms = {{"X", generic_matrix(n, "s")},
                                    {"Y", generic_matrix(n, "t")}};
  auto embed = [n](const CycloNum& c) {
    return M::identity(n).scaled(MultiPoly(c));
  };
  auto mul = [](const M& a, const M& b) { return a * b; };
  const M value = eval_expr<M>(word, atoms, embed, mul);
  return value.char_poly()[i];
}

inline MultiPoly ud_sigma(unsigned n, const std::string& word, unsigned i) {
  return ud_sigma(n, *parse_expr(word), i);
}

/// Companion matrix of x^n + a1 x^(n-1) + ... + an over the variables
/// a1..an; its sigma_i is a_i by construction.
inline Matrix<MultiPoly> generic_companion_matrix(unsigned n) {
  Matrix<MultiPoly> c(n, n);
  for (unsigned r = 1; r < n; ++r) c.at(r, r - 1) = MultiPoly::one();
  for (unsigned r = 0; r < n; ++r)
    c.at(r, n - 1) = -MultiPoly::variable("a" + std::to_string(n - r));
  return c;
}

/// Evaluates a one-variable polynomial g at a matrix argument.
inline Matrix<MultiPoly> poly_at_matrix(const MultiPoly& g,
                                        const Matrix<MultiPoly>& m) {
  const auto& vars = g.vars();
  if (vars.size() > 1)
    throw std::invalid_argument("element polynomial must be univariate");
  const std::string var = vars.empty() ? "x" : vars[0];
  const auto coeffs = g.coefficients_in(var);  // ascending powers
  const std::size_t n = m.rows();
  Matrix<MultiPoly> acc(n, n);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t d = 0; d < n; ++d)
      acc.at(d, d) = acc.at(d, d) + coeffs[k];
  }
  return acc;
}

/// sigma_i of g(x) in the general extension: evaluate g at the generic
/// companion matrix and read off the coefficient.
inline RatFunc general_ext_sigma(unsigned n, const MultiPoly& g, unsigned i) {
  if (i < 1 || i > n)
    throw std::invalid_argument("sigma index out of range");
  const Matrix<MultiPoly> value = poly_at_matrix(g, generic_companion_matrix(n));
  return RatFunc(value.char_poly()[i]);
}

/// Verifies sigma_(n-i)(g^-1) = sigma_i(g) / sigma_n(g) for i = 1..n-1,
/// both sides computed symbolically over the rational function field.
inline VerificationReport inverse_identity_check(unsigned n,
                                                 const MultiPoly& g) {
  VerificationReport rep;
  rep.claim_id = "inverse-sigma-identity";
  rep.set_param("n", std::to_string(n));
  rep.set_param("g", g.to_string());
  const Matrix<MultiPoly> value =
      poly_at_matrix(g, generic_companion_matrix(n));
  const auto cp = value.char_poly();
  if (cp[n].is_zero())
    throw std::invalid_argument("element is not invertible");

  Matrix<RatFunc> lifted(n, n);
  for (unsigned r = 0; r < n; ++r)
    for (unsigned c = 0; c < n; ++c) lifted.at(r, c) = RatFunc(value.at(r, c));
  const Matrix<RatFunc> inverse = lifted.inverse();
  const auto inv_cp = inverse.char_poly();

  for (unsigned i = 1; i < n; ++i) {
    const RatFunc lhs = inv_cp[n - i];
    const RatFunc rhs = RatFunc(cp[i]) / RatFunc(cp[n]);
    if (!(lhs == rhs))
      throw std::logic_error("inverse identity failed at index " +
                             std::to_string(i));
    rep.add_step("identity at index " + std::to_string(i))
        .in("i", std::to_string(i))
        .out("sigma_(n-i)_of_inverse", lhs.to_string())
        .out("sigma_i_over_sigma_n", rhs.to_string());
  }
  rep.status = Status::verified;
  rep.require_valid();
  return rep;
}

/// Verifies that sigma_i of g(x) in the general extension matches sigma_i of
/// g(X) for a generic matrix X after substituting a_t = sigma_t(X).
inline VerificationReport remark38_consistency(unsigned n,
                                               const MultiPoly& g) {
  VerificationReport rep;
  rep.claim_id = "extension-to-generic-consistency";
  rep.set_param("n", std::to_string(n));
  rep.set_param("g", g.to_string());

  const Matrix<MultiPoly> x = generic_matrix(n, "s");
  const auto x_cp = x.char_poly();
  std::map<std::string, MultiPoly> substitution;
  for (unsigned t = 1; t <= n; ++t)
    substitution["a" + std::to_string(t)] = x_cp[t];

  const Matrix<MultiPoly> g_of_x = poly_at_matrix(g, x);
  const auto rhs_cp = g_of_x.char_poly();
  for (unsigned i = 1; i <= n; ++i) {
    const RatFunc lhs = general_ext_sigma(n, g, i);
    if (!lhs.is_polynomial())
      throw std::logic_error("extension sigma has a denominator");
    const MultiPoly lhs_substituted = lhs.num().substitute(substitution);
    if (!(lhs_substituted == rhs_cp[i]))
      throw std::logic_error("consistency failed at index " +
                             std::to_string(i));
    rep.add_step("sigma index " + std::to_string(i))
        .in("i", std::to_string(i))
        .out("matches_after_substitution", "yes")
        .out("value", rhs_cp[i].to_string());
  }
  rep.status = Status::verified;
  rep.require_valid();
  return rep;
}

struct EvidencePredicate {
  enum class Kind { trace0_norm1, sigma_i_zero };
  Kind kind;
  unsigned i = 0;

  std::string to_string() const {
    if (kind == Kind::trace0_norm1) return "trace0-norm1";
    return "sigma-zero(" + std::to_string(i) + ")";
  }
};

/// Seeded randomized counterexample search.  Samples nonzero elements with
/// polynomial coordinates (degree <= degree_bound, coefficients in [-3, 3]),
/// evaluates the predicate exactly, and reports hits.  Zero hits is evidence,
/// never verification; a hit refutes with the element as witness.
inline VerificationReport evidence_search(const TensorModel& model,
                                          const EvidencePredicate& predicate,
                                          unsigned long trials,
                                          std::uint64_t seed,
                                          unsigned degree_bound) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  VerificationReport rep;
  rep.claim_id = "counterexample-search";
  rep.set_param("algebra", model.spec().to_string());
  rep.set_param("predicate", predicate.to_string());
  rep.set_param("trials", std::to_string(trials));
  rep.set_param("degree_bound", std::to_string(degree_bound));
  rep.seed = seed;

  const unsigned long n = model.degree();
  if (predicate.kind == EvidencePredicate::Kind::sigma_i_zero &&
      (predicate.i < 1 || predicate.i > n))
    throw std::invalid_argument("sigma index out of range");

  // Center variables in a fixed order for coordinate sampling.
  std::vector<std::string> center_vars;
  for (const auto& factor : model.spec().factors) {
    center_vars.push_back(factor.z_name);
    center_vars.push_back(factor.w_name);
  }

  auto sample_coordinate = [&](SplitMix64& rng) {
    MultiPoly p;
    // Sparse sampling: a few monomials of degree <= degree_bound.
    const unsigned monomials = 1 + static_cast<unsigned>(rng.next_below(3));
    for (unsigned m = 0; m < monomials; ++m) {
      long c = rng.next_int(-3, 3);
      if (c == 0) continue;
      Monomial exps(center_vars.size(), 0);
      unsigned remaining = degree_bound;
      for (std::size_t v = 0; v < center_vars.size() && remaining; ++v) {
        const unsigned e =
            static_cast<unsigned>(rng.next_below(remaining + 1));
        exps[v] = e;
        remaining -= e;
      }
      p = p + MultiPoly::term(CycloNum(Rational(c)), center_vars, exps);
    }
    return p;
  };

  unsigned long hits = 0;
  std::optional<std::string> first_witness;
  for (unsigned long trial = 0; trial < trials; ++trial) {
    SplitMix64 rng(derive_seed(seed, trial));
    AlgebraElement elem;
    do {
      elem.coords.clear();
      // Sample a handful of basis monomials with polynomial coordinates.
      const unsigned terms = 1 + static_cast<unsigned>(rng.next_below(3));
      for (unsigned t = 0; t < terms; ++t) {
        std::vector<unsigned> exps;
        for (const auto& factor : model.spec().factors) {
          exps.push_back(static_cast<unsigned>(rng.next_below(factor.r)));
          exps.push_back(static_cast<unsigned>(rng.next_below(factor.r)));
        }
        elem = elem + AlgebraElement::basis_monomial(model.spec(), exps,
                                                     sample_coordinate(rng));
      }
    } while (elem.is_zero());

    const Matrix<MultiPoly> m = element_matrix(model, elem);
    bool hit = false;
    if (predicate.kind == EvidencePredicate::Kind::trace0_norm1) {
      const auto cp = m.char_poly();
      const MultiPoly norm =
          n % 2 == 0 ? cp[n] : -cp[n];  // det = (-1)^n sigma_n
      hit = cp[1].is_zero() && norm == MultiPoly::one();
    } else {
      hit = m.char_poly()[predicate.i].is_zero();
    }
    if (hit) {
      ++hits;
      if (!first_witness) first_witness = elem.to_string(model.spec());
    }
  }

  Step& summary = rep.add_step("sampling summary");
  summary.in("trials", std::to_string(trials));
  summary.in("degree_bound", std::to_string(degree_bound));
  summary.out("hits", std::to_string(hits));
  if (hits > 0) {
    rep.add_step("counterexample found").out("witness", *first_witness);
    rep.status = Status::refuted;
  } else {
    rep.status = Status::evidence;
  }
  rep.require_valid();
  return rep;
}

}  // namespace sigmacheck

#endif  // SIGMACHECK_ALGEBRAS_HPP
