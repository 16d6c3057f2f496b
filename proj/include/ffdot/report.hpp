// Copyright 2026 The ffdot Authors.
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

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ffdot/char_sums.hpp"
#include "ffdot/cyclotomic.hpp"
#include "ffdot/interval.hpp"
#include "ffdot/rational.hpp"

namespace ffdot {

using Json = nlohmann::ordered_json;

/// Verdict vocabulary of a check record. PASS/FAIL are exact comparisons;
/// CONFIRMED/VIOLATED/INDETERMINATE come from certified interval
/// comparisons; SKIPPED marks checks whose preconditions did not hold.
enum class CheckStatus { kPass, kFail, kConfirmed, kViolated, kIndeterminate, kSkipped, kInfo };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "PASS";
    case CheckStatus::kFail: return "FAIL";
    case CheckStatus::kConfirmed: return "CONFIRMED";
    case CheckStatus::kViolated: return "VIOLATED";
    case CheckStatus::kIndeterminate: return "INDETERMINATE";
    case CheckStatus::kSkipped: return "SKIPPED";
    case CheckStatus::kInfo: return "INFO";
  }
  return "?";
}

inline CheckStatus check_status_from_string(const std::string& s) {
  if (s == "PASS") return CheckStatus::kPass;
  if (s == "FAIL") return CheckStatus::kFail;
  if (s == "CONFIRMED") return CheckStatus::kConfirmed;
  if (s == "VIOLATED") return CheckStatus::kViolated;
  if (s == "INDETERMINATE") return CheckStatus::kIndeterminate;
  if (s == "SKIPPED") return CheckStatus::kSkipped;
  if (s == "INFO") return CheckStatus::kInfo;
  throw ParseError("unknown check status: " + s);
}

inline CheckStatus to_check_status(Verdict v) {
  switch (v) {
    case Verdict::kConfirmed: return CheckStatus::kConfirmed;
    case Verdict::kViolated: return CheckStatus::kViolated;
    case Verdict::kIndeterminate: return CheckStatus::kIndeterminate;
  }
  return CheckStatus::kIndeterminate;
}

// Tagged JSON encodings; every numeric payload says whether it is exact or
// an interval.
inline Json json_rational(const Rational& r) {
  return Json{{"kind", "rational"}, {"value", rational_to_string(r)}};
}

inline Json json_integer(const BigInt& v) {
  return Json{{"kind", "integer"}, {"value", v.str()}};
}

inline Json json_cyclo(const CycloNum& z) {
  Json coeffs = Json::array();
  for (const auto& c : z.coeffs()) coeffs.push_back(rational_to_string(c));
  return Json{{"kind", "cyclotomic"}, {"order", z.order()}, {"coeffs", coeffs}};
}

inline Json json_interval(const CertifiedInterval& i, unsigned precision_bits) {
  return Json{{"kind", "interval"},
              {"lo", rational_to_string(i.lo)},
              {"hi", rational_to_string(i.hi)},
              {"precision_bits", precision_bits}};
}

inline Json json_bound_check(const BoundCheck& b) {
  return Json{{"kind", "bound_check"},
              {"lhs", json_interval(b.lhs, b.precision_bits)},
              {"rhs", json_rational(b.rhs)},
              {"verdict", to_string(b.verdict)},
              {"precision_bits", b.precision_bits}};
}

struct CheckRecord {
  std::string name;
  std::string kind;  // exact-equality | exact-le | certified-le | coverage | info
  CheckStatus status = CheckStatus::kInfo;
  Json details = Json::object();
};

/// A structured verification outcome: config echo, per-check records, and a
/// summary verdict. Serialization is lossless; the only nondeterministic
/// field is wall_ms, which sits at top level so byte-comparisons can drop it.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  Json& config() { return config_; }
  const Json& config() const { return config_; }

  void add(CheckRecord rec) { checks_.push_back(std::move(rec)); }

  void add_status(const std::string& name, const std::string& kind,
                  CheckStatus status, Json details = Json::object()) {
    add(CheckRecord{name, kind, status, std::move(details)});
  }

  void add_bound(const std::string& name, const BoundCheck& b) {
    add(CheckRecord{name, "certified-le", to_check_status(b.verdict),
                    json_bound_check(b)});
  }

  const std::vector<CheckRecord>& checks() const { return checks_; }
  const std::string& command() const { return command_; }

  void set_wall_ms(double ms) { wall_ms_ = ms; }

  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks_) n += c.status == s ? 1 : 0;
    return n;
  }

  /// A FAILed exact identity counts as a violation: proved statements that
  /// break are the strongest possible alarm.
  bool any_violation() const {
    return count(CheckStatus::kFail) + count(CheckStatus::kViolated) > 0;
  }

  std::string summary_verdict() const {
    if (any_violation()) return "VIOLATED";
    if (count(CheckStatus::kIndeterminate) > 0) return "INDETERMINATE";
    return "OK";
  }

  Json to_json(bool include_timing = true) const {
    Json checks = Json::array();
    for (const auto& c : checks_) {
      checks.push_back(Json{{"name", c.name},
                            {"kind", c.kind},
                            {"status", to_string(c.status)},
                            {"details", c.details}});
    }
    Json summary{{"verdict", summary_verdict()},
                 {"pass", count(CheckStatus::kPass)},
                 {"fail", count(CheckStatus::kFail)},
                 {"confirmed", count(CheckStatus::kConfirmed)},
                 {"violated", count(CheckStatus::kViolated)},
                 {"indeterminate", count(CheckStatus::kIndeterminate)},
                 {"skipped", count(CheckStatus::kSkipped)}};
    Json out{{"schema", "ffdot-report-v1"},
             {"command", command_},
             {"config", config_},
             {"checks", checks},
             {"summary", summary}};
    if (include_timing) out["wall_ms"] = wall_ms_;
    return out;
  }

  static Report from_json(const Json& j) {
    if (j.at("schema").get<std::string>() != "ffdot-report-v1") {
      throw ParseError("unknown report schema");
    }
    Report r(j.at("command").get<std::string>());
    r.config_ = j.at("config");
    for (const auto& c : j.at("checks")) {
      CheckRecord rec;
      rec.name = c.at("name").get<std::string>();
      rec.kind = c.at("kind").get<std::string>();
      rec.status = check_status_from_string(c.at("status").get<std::string>());
      rec.details = c.at("details");
      r.add(std::move(rec));
    }
    if (j.contains("wall_ms")) r.wall_ms_ = j.at("wall_ms").get<double>();
    return r;
  }

 private:
  std::string command_;
  Json config_ = Json::object();
  std::vector<CheckRecord> checks_;
  double wall_ms_ = 0.0;
};

}  // namespace ffdot
