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

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sigmacheck/algebras.hpp"
#include "sigmacheck/expr.hpp"
#include "sigmacheck/groupfix.hpp"
#include "sigmacheck/octonion.hpp"
#include "sigmacheck/report.hpp"
#include "sigmacheck/symfun.hpp"
#include "sigmacheck/tables.hpp"

namespace {

using namespace sigmacheck;

// Group literals look like "2x2x3": cyclic factor orders joined by 'x'.
AbelianGroup parse_group(const std::string& text) {
  std::vector<unsigned> orders;
  std::size_t pos = 0;
  while (true) {
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
      throw ParseError("expected a cyclic order in group literal '" + text +
                           "'",
                       pos);
    unsigned long value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
      if (value > 1000000)
        throw ParseError("cyclic order too large in group literal '" + text +
                             "'",
                         pos);
      ++pos;
    }
    if (value < 2)
      throw ParseError("cyclic orders must be at least 2 in group literal '" +
                           text + "'",
                       pos);
    orders.push_back(static_cast<unsigned>(value));
    if (pos == text.size()) break;
    if (text[pos] != 'x')
      throw ParseError("expected 'x' between factors in group literal '" +
                           text + "'",
                       pos);
    ++pos;
  }
  return AbelianGroup(orders);
}

Octonion generic_octonion_element() {
  Octonion x;
  for (std::size_t k = 0; k < 8; ++k)
    x.coords[k] = MultiPoly::variable("x" + std::to_string(k));
  return x;
}

struct Options {
  std::string group;
  std::string poly;
  std::string algebra;
  std::string predicate;
  unsigned long m = 0, i = 0, j = 0, s = 0, u = 0, d = 0, n = 0;
  unsigned long n1 = 0, n2 = 0, m1 = 0, m2 = 0;
  unsigned long trials = 0, degree_bound = 0;
  std::uint64_t seed = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sigmacheck: exact certificates for conditions on characteristic "
      "polynomial coefficients in algebras"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "write the report to this file");

  Options opt;
  std::function<VerificationReport()> action;

  CLI::App* verify = app.add_subcommand("verify", "run a certificate");
  verify->require_subcommand(1);

  {
    CLI::App* c = verify->add_subcommand(
        "charpoly", "characteristic polynomial of every paired element");
    c->add_option("--group", opt.group, "cyclic factor list, e.g. 2x3")
        ->required();
    c->callback([&] {
      action = [&] { return paired_charpoly_check(parse_group(opt.group)); };
    });
  }
  {
    CLI::App* c = verify->add_subcommand(
        "commutation", "twisted commutation of the paired matrices");
    c->add_option("--group", opt.group, "cyclic factor list, e.g. 2x3")
        ->required();
    c->callback([&] {
      action = [&] { return commutation_check(parse_group(opt.group)); };
    });
  }
  {
    CLI::App* c = verify->add_subcommand(
        "basis", "paired elements span the full matrix algebra");
    c->add_option("--group", opt.group, "cyclic factor list, e.g. 2x3")
        ->required();
    c->callback([&] {
      action = [&] { return basis_check(parse_group(opt.group)); };
    });
  }
  {
    CLI::App* c = verify->add_subcommand(
        "thm3", "fixed-point-free sign action on paired elements");
    c->add_option("--group", opt.group, "cyclic factor list")->required();
    c->add_option("--m", opt.m, "matrix size")->required();
    c->add_option("--i", opt.i, "coefficient index")->required();
    c->add_option("--j", opt.j, "twist exponent")->required();
    c->callback([&] {
      action = [&] {
        return thm3_certificate(parse_group(opt.group), opt.m, opt.i, opt.j);
      };
    });
  }
  {
    CLI::App* c = verify->add_subcommand(
        "thm3a", "nonvanishing of a form at root-of-unity tuples");
    c->add_option("--group", opt.group, "cyclic factor list")->required();
    c->add_option("--poly", opt.poly, "homogeneous form")->required();
    c->add_option("--i", opt.i, "coefficient index")->required();
    c->add_option("--j", opt.j, "twist exponent")->required();
    c->add_option("--u", opt.u, "number of variables in the hypothesis")
        ->required();
    c->add_option("--d", opt.d, "degree of the form")->required();
    c->callback([&] {
      action = [&] {
        return thm3a_root_condition_check(parse_poly(opt.poly), opt.i, opt.j,
                                          opt.u, opt.d,
                                          parse_group(opt.group));
      };
    });
  }
  {
    CLI::App* c = verify->add_subcommand(
        "thm1", "two-block permutation action has only trivial fixed points");
    c->add_option("--n1", opt.n1, "first block size")->required();
    c->add_option("--n2", opt.n2, "second block size")->required();
    c->add_option("--m1", opt.m1, "first coefficient index")->required();
    c->add_option("--m2", opt.m2, "second coefficient index")->required();
    c->callback([&] {
      action = [&] {
        return sn_fixed_point_certificate(
            static_cast<unsigned>(opt.n1), static_cast<unsigned>(opt.n2),
            static_cast<unsigned>(opt.m1), static_cast<unsigned>(opt.m2));
      };
    });
  }
  {
    CLI::App* c = verify->add_subcommand(
        "characters", "decomposition of the two-block permutation character");
    c->add_option("--n1", opt.n1, "first block size")->required();
    c->add_option("--n2", opt.n2, "second block size")->required();
    c->callback([&] {
      action = [&] {
        return character_decomposition_check(static_cast<unsigned>(opt.n1),
                                             static_cast<unsigned>(opt.n2));
      };
    });
  }
  {
    CLI::App* c = verify->add_subcommand(
        "cyclic-remark", "matrix consistency of the twisted cyclic relation");
    c->callback([&] {
      action = [&] { return cyclic_counterexample_check(); };
    });
  }
  {
    CLI::App* c = verify->add_subcommand(
        "high-powers", "trace system of high powers at root-of-unity points");
    c->add_option("--n", opt.n, "odd prime degree")->required();
    c->callback([&] {
      action = [&] {
        return high_powers_check(static_cast<unsigned>(opt.n), true);
      };
    });
  }
  {
    CLI::App* c = verify->add_subcommand(
        "octonion", "fixed-point-free scalar system on octonion eigenlines");
    c->add_option("--m", opt.m, "number of variables")->required();
    c->add_option("--s", opt.s, "half the degree of the form")->required();
    c->add_option("--poly", opt.poly, "fully parenthesized form")->required();
    c->callback([&] {
      action = [&] {
        return thm_oct_certificate(static_cast<unsigned>(opt.m),
                                   static_cast<unsigned>(opt.s), opt.poly);
      };
    });
  }
  {
    CLI::App* c = verify->add_subcommand(
        "quadratic", "rank-two identity for the generic octonion");
    c->callback([&] {
      action = [&] {
        return quadratic_identity_check(OctonionSpec::generic(),
                                        generic_octonion_element());
      };
    });
  }
  {
    CLI::App* c = verify->add_subcommand(
        "composition", "multiplicativity of the octonion norm on samples");
    c->add_option("--trials", opt.trials, "number of sampled pairs")
        ->required();
    c->add_option("--seed", opt.seed, "sampling seed")->required();
    c->callback([&] {
      action = [&] {
        return composition_check(OctonionSpec::generic(), opt.trials,
                                 opt.seed);
      };
    });
  }

  CLI::App* table = app.add_subcommand("table", "degree exclusion tables");
  table->require_subcommand(1);
  table->add_subcommand("deg5", "degree five cases")->callback([&] {
    action = [&] { return table_deg(5); };
  });
  table->add_subcommand("deg6", "degree six cases")->callback([&] {
    action = [&] { return table_deg(6); };
  });

  CLI::App* search = app.add_subcommand("search", "randomized evidence runs");
  search->require_subcommand(1);
  {
    CLI::App* c = search->add_subcommand(
        "counterexample", "sample algebra elements against a predicate");
    c->add_option("--algebra", opt.algebra,
                  "e.g. 'symbol 2 z w' or 'tensor 2 z1 w1 3 z2 w2'")
        ->required();
    c->add_option("--predicate", opt.predicate, "property to look for")
        ->check(CLI::IsMember({"trace0-norm1", "sigma-zero"}))
        ->required();
    c->add_option("--i", opt.i, "coefficient index for sigma-zero");
    c->add_option("--trials", opt.trials, "number of sampled elements")
        ->required();
    c->add_option("--seed", opt.seed, "sampling seed")->required();
    c->add_option("--degree-bound", opt.degree_bound,
                  "degree bound for sampled center coefficients")
        ->required();
    c->callback([&] {
      action = [&] {
        EvidencePredicate predicate{EvidencePredicate::Kind::trace0_norm1, 0};
        if (opt.predicate == "sigma-zero") {
          if (opt.i < 1)
            throw CLI::ValidationError(
                "--predicate sigma-zero requires --i at least 1");
          predicate = EvidencePredicate{EvidencePredicate::Kind::sigma_i_zero,
                                        static_cast<unsigned>(opt.i)};
        }
        const TensorModel model(TensorSpec::parse(opt.algebra));
        return evidence_search(model, predicate, opt.trials, opt.seed,
                               opt.degree_bound);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  VerificationReport rep;
  const auto start = std::chrono::steady_clock::now();
  try {
    rep = action();
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();

  const std::string body = rep.emit(format);
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return 2;
    }
    os << body;
  }
  std::cerr << "duration_ms: " << rep.duration_ms << "\n";
  return rep.exit_code();
}
