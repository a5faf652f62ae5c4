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

#ifndef SIGMACHECK_TABLES_HPP
#define SIGMACHECK_TABLES_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "sigmacheck/expr.hpp"
#include "sigmacheck/report.hpp"
#include "sigmacheck/symfun.hpp"

namespace sigmacheck {

namespace detail {

// How one (m1, m2) cell of an exclusion table is decided.
struct TableCell {
  enum class Kind { sigma, trace, inverse, norm, out_of_scope } kind;
  unsigned n1 = 0, n2 = 0;          // block split for sigma/trace cells
  std::string form1, form2;         // published forms for sigma cells
  unsigned from_m1 = 0, from_m2 = 0;  // source case for inverse cells
};

inline std::map<std::pair<unsigned, unsigned>, TableCell> table_cells(
    unsigned n) {
  using K = TableCell::Kind;
  std::map<std::pair<unsigned, unsigned>, TableCell> cells;
  if (n == 5) {
    cells[{1, 2}] = {K::trace, 1, 4, "", "", 0, 0};
    cells[{1, 3}] = {K::out_of_scope, 0, 0, "", "", 0, 0};
    cells[{1, 4}] = {K::sigma, 1, 4, "a + 4*b", "b^4 + 4*a*b^3", 0, 0};
    cells[{2, 3}] = {K::sigma, 2, 3, "a^2 + 6*a*b + 3*b^2",
                     "3*a^2*b + 6*a*b^2 + b^3", 0, 0};
    cells[{2, 4}] = {K::out_of_scope, 0, 0, "", "", 0, 0};
    cells[{3, 4}] = {K::inverse, 0, 0, "", "", 1, 2};
  } else if (n == 6) {
    cells[{1, 2}] = {K::trace, 2, 4, "", "", 0, 0};
    cells[{1, 3}] = {K::out_of_scope, 0, 0, "", "", 0, 0};
    cells[{1, 4}] = {K::sigma, 2, 4, "2*a + 4*b",
                     "6*a^2*b^2 + 8*a*b^3 + b^4", 0, 0};
    cells[{1, 5}] = {K::sigma, 1, 5, "a + 5*b", "5*a*b^4 + b^5", 0, 0};
    cells[{2, 3}] = {K::sigma, 2, 4, "a^2 + 8*a*b + 6*b^2",
                     "4*a^2*b + 12*a*b^2 + 4*b^3", 0, 0};
    cells[{2, 4}] = {K::sigma, 2, 4, "a^2 + 8*a*b + 6*b^2",
                     "6*a^2*b^2 + 8*a*b^3 + b^4", 0, 0};
    cells[{2, 5}] = {K::inverse, 0, 0, "", "", 1, 4};
    cells[{3, 4}] = {K::inverse, 0, 0, "", "", 2, 3};
    cells[{3, 5}] = {K::out_of_scope, 0, 0, "", "", 0, 0};
    cells[{4, 5}] = {K::inverse, 0, 0, "", "", 1, 2};
  } else {
    throw std::invalid_argument("table degree must be 5 or 6");
  }
  for (unsigned m = 1; m < n; ++m) cells[{m, n}] = TableCell{K::norm};
  return cells;
}

}  // namespace detail

/// Which pairs 1 <= m1 < m2 <= n admit a nonzero element of the general
/// degree-n extension with sigma_(m1) = sigma_(m2) = 0.  Every nonexistence
/// cell is decided by a two-block system (directly or through the inverse
/// identity) or by the norm; existence cells are out of scope and recorded,
/// never verified.
inline VerificationReport table_deg(unsigned n) {
  if (n != 5 && n != 6)
    throw std::invalid_argument("table degree must be 5 or 6");
  VerificationReport rep;
  rep.claim_id = "degree-" + std::to_string(n) + "-exclusion-table";
  rep.set_param("n", std::to_string(n));

  const auto cells = detail::table_cells(n);
  for (const auto& [key, cell] : cells) {
    const auto [m1, m2] = key;
    Step& step = rep.add_step("case (" + std::to_string(m1) + ", " +
                              std::to_string(m2) + ")");
    switch (cell.kind) {
      case detail::TableCell::Kind::out_of_scope:
        step.out("outcome", "out of scope (cited to Hermite/Joubert)");
        break;
      case detail::TableCell::Kind::norm:
        step.in("reduction", "sigma_" + std::to_string(n) +
                                 " is the norm up to sign");
        step.out("outcome",
                 "only_trivial: the norm never vanishes on nonzero elements");
        break;
      case detail::TableCell::Kind::inverse:
        step.in("reduction",
                "inverse identity sigma_(n-i)(1/x) = sigma_i(x)/sigma_n(x)");
        step.in("source_case", "(" + std::to_string(cell.from_m1) + ", " +
                                   std::to_string(cell.from_m2) + ")");
        step.out("outcome", "only_trivial via the source case");
        break;
      case detail::TableCell::Kind::trace: {
        step.in("reduction",
                "Newton: sigma_1 = sigma_2 = 0 iff tr(x) = tr(x^2) = 0");
        step.in("split", "n1=" + std::to_string(cell.n1) +
                             ", n2=" + std::to_string(cell.n2));
        const TwoBlockDecision decision = decide_two_block(
            {cell.n1, cell.n2, m1, m2, TwoBlockKind::trace});
        if (decision.nontrivial_exists) {
          step.out("outcome", "nontrivial solution exists");
          rep.add_step("unexpected fixed point")
              .out("witness", decision.witness
                                  ? "(a, b) = (" +
                                        decision.witness->first.to_string() +
                                        ", " +
                                        decision.witness->second.to_string() +
                                        ")"
                                  : "see the embedded decision");
          rep.status = Status::refuted;
          rep.require_valid();
          return rep;
        }
        step.out("outcome", "only_trivial");
        break;
      }
      case detail::TableCell::Kind::sigma: {
        step.in("split", "n1=" + std::to_string(cell.n1) +
                             ", n2=" + std::to_string(cell.n2));
        const MultiPoly f1 = specialize_two_block(m1, cell.n1, cell.n2);
        const MultiPoly f2 = specialize_two_block(m2, cell.n1, cell.n2);
        if (!(f1 == parse_poly(cell.form1)) || !(f2 == parse_poly(cell.form2)))
          throw std::logic_error(
              "generated specialization disagrees with the published form");
        step.out("form_" + std::to_string(m1), f1.to_string());
        step.out("form_" + std::to_string(m2), f2.to_string());
        const TwoBlockDecision decision = decide_two_block(
            {cell.n1, cell.n2, m1, m2, TwoBlockKind::sigma});
        if (decision.nontrivial_exists) {
          step.out("outcome", "nontrivial solution exists");
          rep.add_step("unexpected common zero")
              .out("witness", decision.witness
                                  ? "(a, b) = (" +
                                        decision.witness->first.to_string() +
                                        ", " +
                                        decision.witness->second.to_string() +
                                        ")"
                                  : "see the embedded decision");
          rep.status = Status::refuted;
          rep.require_valid();
          return rep;
        }
        step.out("outcome", "only_trivial");
        break;
      }
    }
  }
  rep.status = Status::verified;
  rep.require_valid();
  return rep;
}

}  // namespace sigmacheck

#endif  // SIGMACHECK_TABLES_HPP
