#pragma once

#include <chrono>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "flexionlab/suites.hpp"

namespace flexionlab {

struct SuiteReport {
  std::string suite;
  std::string anchor;
  std::string unit;
  std::vector<CheckResult> checks;
  bool passed = false;
  double seconds = 0;  // text report only; JSON stays a pure function of the config
};

inline SuiteReport run_suite(const Suite& suite, const Canonical& c, const SamplePlan& plan, EvalContext& ctx,
                             unsigned jobs = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport r;
  r.suite = suite.name;
  r.anchor = suite.anchor;
  r.unit = c.unit().name;
  r.checks = run_checks(suite.build(c, plan), plan, ctx, jobs);
  r.passed = !r.checks.empty();
  for (const auto& k : r.checks) r.passed = r.passed && k.passed;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// ---------------------------------------------------------------------------
// JSON.

inline nlohmann::ordered_json word_json(const Word& w) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& l : w) arr.push_back({l.u.str(), l.v.str()});
  return arr;
}

inline nlohmann::ordered_json point_json(const std::string& identity, const Point& p) {
  nlohmann::ordered_json j;
  j["identity"] = identity;
  j["length"] = p.length;
  j["word"] = word_json(p.word);
  if (p.split) j["split"] = *p.split;
  if (!p.at.empty()) j["at"] = p.at;
  j["lhs"] = p.lhs;
  j["rhs"] = p.rhs;
  j["status"] = to_string(p.status);
  if (!p.note.empty()) j["note"] = p.note;
  return j;
}

inline nlohmann::ordered_json plan_json(const SamplePlan& plan, const std::string& unit) {
  return {{"unit", unit},
          {"max_length", plan.max_length},
          {"samples", plan.samples},
          {"seed", plan.seed},
          {"retry_cap", plan.retry_cap},
          {"bounds", {{"P", plan.bounds.P}, {"Q", plan.bounds.Q}}}};
}

inline nlohmann::ordered_json suite_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["anchor"] = r.anchor;
  j["status"] = r.passed ? "pass" : "fail";
  std::size_t points = 0, failed = 0, skipped = 0, checks_failed = 0;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& k : r.checks) {
    nlohmann::ordered_json cj;
    cj["identity"] = k.name;
    cj["negative_control"] = k.negative;
    cj["status"] = k.passed ? "pass" : "fail";
    auto pts = nlohmann::ordered_json::array();
    for (const auto& p : k.points) pts.push_back(point_json(k.name, p));
    cj["points"] = std::move(pts);
    checks.push_back(std::move(cj));
    points += k.points.size();
    failed += k.failed;
    skipped += k.skipped;
    checks_failed += !k.passed;
  }
  j["totals"] = {{"identities", r.checks.size()},
                 {"identities_failed", checks_failed},
                 {"points", points},
                 {"points_failed", failed},
                 {"points_skipped", skipped}};
  j["identities"] = std::move(checks);
  return j;
}

inline nlohmann::ordered_json run_json(const std::vector<SuiteReport>& reports, const SamplePlan& plan,
                                       const std::string& unit) {
  nlohmann::ordered_json j;
  j["config"] = plan_json(plan, unit);
  bool ok = !reports.empty();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed;
    arr.push_back(suite_json(r));
  }
  j["status"] = ok ? "pass" : "fail";
  j["suites"] = std::move(arr);
  return j;
}

// ---------------------------------------------------------------------------
// Text.

inline void print_point(std::ostream& os, const Point& p) {
  os << "      ";
  if (!p.at.empty()) {
    os << p.at;
  } else {
    os << "word " << to_string(p.word);
    if (p.split) os << " split " << *p.split;
  }
  if (!p.lhs.empty() || !p.rhs.empty()) os << "\n        lhs " << p.lhs << "\n        rhs " << p.rhs;
  if (!p.note.empty()) os << "\n        " << p.note;
  os << "\n";
}

inline void print_suite(std::ostream& os, const SuiteReport& r) {
  os << "== " << r.suite << " [" << r.unit << "]\n";
  for (const auto& k : r.checks) {
    os << "  " << (k.passed ? "pass" : "FAIL") << "  " << k.name << "  (" << k.points.size() << " points";
    if (k.negative) os << ", negative control, " << k.failed << " refuting";
    if (k.skipped) os << ", " << k.skipped << " skipped";
    os << ")\n";
    if (k.passed) continue;
    if (k.negative) {
      os << "      no point refuted the identity\n";
      continue;
    }
    for (const auto& p : k.points) {
      if (p.status == Status::pass) continue;
      os << "      " << to_string(p.status) << ":\n";
      print_point(os, p);
      break;
    }
  }
  std::size_t failed = 0;
  for (const auto& k : r.checks) failed += !k.passed;
  os << "  -> " << (r.passed ? "pass" : "FAIL") << ", " << r.checks.size() - failed << "/" << r.checks.size()
     << " identities, " << r.seconds << " s\n";
}

}  // namespace flexionlab
