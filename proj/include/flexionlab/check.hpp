#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "flexionlab/mould.hpp"

namespace flexionlab {

struct SamplePlan {
  std::size_t max_length = 4;
  std::size_t samples = 4;
  std::uint64_t seed = 0;
  int retry_cap = 8;
  Bounds bounds;
};

enum class Status { pass, fail, skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

/// One evaluated sample. Shuffle checks store a ++ b in word with split = len(a);
/// scalar checks leave word empty and describe the point in at.
struct Point {
  std::size_t length = 0;
  Word word;
  std::optional<std::size_t> split;
  std::string at;
  std::string lhs, rhs;
  Status status = Status::pass;
  std::string note;
};

using Values = std::pair<Rat, Rat>;

/// Length bound meaning "whatever the plan says".
inline constexpr std::size_t kPlanLength = std::numeric_limits<std::size_t>::max();

/// A named identity. Exactly one of the three probes is set.
struct Check {
  std::string name;
  bool negative = false;  // passes iff some point fails
  std::size_t min_length = 0;
  std::size_t max_length = kPlanLength;
  std::function<Values(EvalContext&, const Word&)> at_word;
  std::function<Values(EvalContext&, const Word&, const Word&)> at_pair;
  std::function<std::vector<Point>()> scalar;
};

struct CheckResult {
  std::string name;
  bool negative = false;
  bool passed = false;
  std::size_t failed = 0, skipped = 0;
  std::vector<Point> points;
};

// ---------------------------------------------------------------------------
// Check builders.

inline Check equal(std::string name, Mould lhs, Mould rhs, std::size_t max_length = kPlanLength) {
  Check c;
  c.name = std::move(name);
  c.max_length = max_length;
  c.at_word = [lhs = std::move(lhs), rhs = std::move(rhs)](EvalContext& ctx, const Word& w) {
    return Values{ctx.eval(lhs, w), ctx.eval(rhs, w)};
  };
  return c;
}

inline Check vanishes(std::string name, Mould m, std::size_t max_length = kPlanLength) {
  Check c;
  c.name = std::move(name);
  c.max_length = max_length;
  c.at_word = [m = std::move(m)](EvalContext& ctx, const Word& w) { return Values{ctx.eval(m, w), Rat(0)}; };
  return c;
}

inline Check on_pairs(std::string name, std::function<Values(EvalContext&, const Word&, const Word&)> probe,
                      std::size_t max_length = kPlanLength) {
  Check c;
  c.name = std::move(name);
  c.max_length = max_length;
  c.at_pair = std::move(probe);
  return c;
}

inline Check expect_failure(Check c) {
  c.negative = true;
  return c;
}

inline Check lengths(Check c, std::size_t lo, std::size_t hi) {
  c.min_length = lo;
  c.max_length = hi;
  return c;
}

// ---------------------------------------------------------------------------
// Execution.

namespace detail {

struct Task {
  std::size_t check;
  std::size_t length;
  std::size_t split;  // 0 for word checks
  std::size_t sample;
};

inline std::uint64_t point_seed(const SamplePlan& plan, const std::string& name, const Task& t, int attempt) {
  std::uint64_t s = mix64(plan.seed) ^ hash_name(name);
  s = mix64(s + t.length * 0x10001ULL);
  s = mix64(s + t.split * 0x101ULL);
  s = mix64(s + t.sample);
  return mix64(s + static_cast<std::uint64_t>(attempt));
}

inline Point run_task(const Check& c, const Task& t, const SamplePlan& plan, EvalContext& ctx) {
  Point p;
  p.length = t.length;
  if (c.at_pair) p.split = t.split;
  for (int attempt = 0; attempt <= plan.retry_cap; ++attempt) {
    std::mt19937_64 rng(point_seed(plan, c.name, t, attempt));
    try {
      Values v;
      if (c.at_pair) {
        Word a = sample_word(rng, t.split, plan.bounds);
        Word b = sample_word(rng, t.length - t.split, plan.bounds);
        p.word = concat(a, b);
        v = c.at_pair(ctx, a, b);
      } else {
        p.word = sample_word(rng, t.length, plan.bounds);
        v = c.at_word(ctx, p.word);
      }
      p.status = v.first == v.second ? Status::pass : Status::fail;
      p.lhs = v.first.str();
      p.rhs = v.second.str();
      p.note.clear();
      return p;
    } catch (const DivByZero& e) {
      p.status = Status::skipped;
      p.note = "division by zero in " + e.where();
    } catch (const std::exception& e) {
      p.status = Status::fail;
      p.note = e.what();
      return p;
    }
  }
  return p;
}

}  // namespace detail

/// Runs every check at every sample point. Points are independent, so they are
/// spread over `jobs` threads; each point's word depends only on the plan seed,
/// the check name and the point's position, which keeps results identical for
/// any job count.
inline std::vector<CheckResult> run_checks(const std::vector<Check>& checks, const SamplePlan& plan,
                                           EvalContext& ctx, unsigned jobs = 1) {
  std::vector<detail::Task> tasks;
  std::vector<std::size_t> first(checks.size() + 1, 0);
  for (std::size_t i = 0; i < checks.size(); ++i) {
    first[i] = tasks.size();
    const Check& c = checks[i];
    if (c.scalar) {
      tasks.push_back({i, 0, 0, 0});
      continue;
    }
    const std::size_t hi = std::min(c.max_length, plan.max_length);
    if (c.at_pair) {
      for (std::size_t len = std::max<std::size_t>(2, c.min_length); len <= hi; ++len)
        for (std::size_t split = 1; split < len; ++split)
          for (std::size_t s = 0; s < plan.samples; ++s) tasks.push_back({i, len, split, s});
    } else {
      for (std::size_t len = c.min_length; len <= hi; ++len)
        for (std::size_t s = 0; s < (len == 0 ? 1 : plan.samples); ++s) tasks.push_back({i, len, 0, s});
    }
  }
  first[checks.size()] = tasks.size();

  std::vector<std::vector<Point>> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) {
      const Check& c = checks[tasks[k].check];
      if (c.scalar) {
        try {
          out[k] = c.scalar();
        } catch (const std::exception& e) {
          Point p;
          p.status = Status::fail;
          p.note = e.what();
          out[k] = {p};
        }
      } else {
        out[k] = {detail::run_task(c, tasks[k], plan, ctx)};
      }
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  std::vector<CheckResult> results;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    CheckResult r;
    r.name = checks[i].name;
    r.negative = checks[i].negative;
    for (std::size_t k = first[i]; k < first[i + 1]; ++k)
      for (auto& p : out[k]) r.points.push_back(std::move(p));
    for (const auto& p : r.points) {
      r.failed += p.status == Status::fail;
      r.skipped += p.status == Status::skipped;
    }
    // A skipped point is never evidence either way.
    if (r.negative) {
      r.passed = r.failed > 0;
    } else {
      r.passed = !r.points.empty() && r.failed == 0 && r.skipped == 0;
    }
    results.push_back(std::move(r));
  }
  return results;
}

inline CheckResult run_check(const Check& c, const SamplePlan& plan, EvalContext& ctx, unsigned jobs = 1) {
  return run_checks({c}, plan, ctx, jobs).front();
}

}  // namespace flexionlab
