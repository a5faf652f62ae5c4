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

#ifndef SIGMACHECK_REPORT_HPP
#define SIGMACHECK_REPORT_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace sigmacheck {

// Outcome of a certificate run.  "evidence" means a randomized search found
// no counterexample (which can support but never prove a universal claim);
// "hypotheses_not_met" means an arithmetic side condition failed before the
// main check could run; "not_checked" means an enumeration cap was hit.
enum class Status {
  verified,
  refuted,
  evidence,
  hypotheses_not_met,
  not_checked,
};

inline const char* to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::refuted: return "refuted";
    case Status::evidence: return "evidence";
    case Status::hypotheses_not_met: return "hypotheses_not_met";
    case Status::not_checked: return "not_checked";
  }
  return "unknown";
}

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// One sub-check record: what was checked, on which inputs, with which exact
// outputs.  Outputs are canonical serializations of exact values.
struct Step {
  std::string description;
  KeyValues inputs;
  KeyValues outputs;

  Step& in(std::string key, std::string value) {
    inputs.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  Step& out(std::string key, std::string value) {
    outputs.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  bool has_output(const std::string& key) const {
    for (const auto& [k, v] : outputs)
      if (k == key) return true;
    return false;
  }
};

// Append-only list of steps plus a final status.  Reports are byte-identical
// across runs given identical inputs and seed; duration_ms is carried for
// display but excluded from the canonical body.
struct VerificationReport {
  std::string claim_id;
  KeyValues params;
  Status status = Status::not_checked;
  std::vector<Step> steps;
  std::optional<std::uint64_t> seed;
  std::int64_t duration_ms = 0;

  Step& add_step(std::string description) {
    steps.emplace_back();
    steps.back().description = std::move(description);
    return steps.back();
  }

  void set_param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
  }

  // Schema rules: a refutation must exhibit a concrete witness, and a
  // verified report must carry exact values in every step.
  void require_valid() const {
    if (status == Status::refuted) {
      bool witnessed = false;
      for (const auto& s : steps)
        if (s.has_output("witness")) witnessed = true;
      if (!witnessed)
        throw std::logic_error("refuted report lacks a witness step");
    }
    if (status == Status::verified) {
      for (const auto& s : steps)
        if (s.outputs.empty())
          throw std::logic_error("verified report has a step without outputs: " +
                                 s.description);
    }
  }

  int exit_code() const {
    switch (status) {
      case Status::verified: return 0;
      case Status::refuted: return 1;
      default: return 3;
    }
  }

  // Canonical JSON: object keys sorted (nlohmann's default map ordering),
  // step order preserved, no timestamps or durations in the body.
  std::string to_json() const {
    nlohmann::json j;
    j["claim_id"] = claim_id;
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    j["status"] = to_string(status);
    if (seed) j["seed"] = *seed;
    nlohmann::json st = nlohmann::json::array();
    for (const auto& s : steps) {
      nlohmann::json e;
      e["description"] = s.description;
      nlohmann::json in = nlohmann::json::object();
      for (const auto& [k, v] : s.inputs) in[k] = v;
      e["inputs"] = in;
      nlohmann::json out = nlohmann::json::object();
      for (const auto& [k, v] : s.outputs) out[k] = v;
      e["outputs"] = out;
      st.push_back(e);
    }
    j["steps"] = st;
    return j.dump(2) + "\n";
  }

  // Text form: header lines, then one aligned line per step.
  std::string to_text() const {
    std::ostringstream os;
    os << "claim:  " << claim_id << "\n";
    os << "status: " << to_string(status) << "\n";
    for (const auto& [k, v] : params) os << "param:  " << k << " = " << v << "\n";
    if (seed) os << "seed:   " << *seed << "\n";
    std::size_t width = 0;
    for (const auto& s : steps) width = std::max(width, s.description.size());
    const std::size_t idx_width = std::to_string(steps.size()).size();
    std::size_t index = 1;
    for (const auto& s : steps) {
      const std::string idx = std::to_string(index++);
      os << "step " << std::string(idx_width - idx.size(), ' ') << idx << ": "
         << s.description << std::string(width - s.description.size(), ' ');
      const char* sep = "  |";
      for (const auto& [k, v] : s.inputs) {
        os << sep << ' ' << k << "=" << v;
        sep = ",";
      }
      sep = "  ->";
      for (const auto& [k, v] : s.outputs) {
        os << sep << ' ' << k << "=" << v;
        sep = ",";
      }
      os << "\n";
    }
    return os.str();
  }

  std::string emit(const std::string& format) const {
    if (format == "json") return to_json();
    if (format == "text") return to_text();
    throw std::invalid_argument("unknown report format: " + format);
  }
};

}  // namespace sigmacheck

#endif  // SIGMACHECK_REPORT_HPP
