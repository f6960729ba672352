// flexionlab: run the registered identity suites at exact rational sample points.
//
//   flexionlab verify --suite all --unit polar --max-length 4 --samples 4 --seed 0 --report json --out r.json
//   flexionlab list [--report json]

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "flexionlab/report.hpp"

using namespace flexionlab;

namespace {

int do_list(const std::string& format) {
  if (format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : suite_registry())
      arr.push_back({{"name", s.name}, {"anchor", s.anchor}, {"description", s.description}});
    arr.push_back({{"name", "all"}, {"anchor", ""}, {"description", "every suite above"}});
    std::cout << nlohmann::ordered_json{{"suites", arr}, {"units", UnitRegistry::instance().names()}}.dump(2) << "\n";
    return 0;
  }
  for (const auto& s : suite_registry())
    std::cout << std::left << std::setw(16) << s.name << std::setw(16) << s.anchor << s.description << "\n";
  std::cout << std::left << std::setw(16) << "all" << std::setw(16) << "" << "every suite above\n";
  std::cout << "\nunits:";
  for (const auto& u : UnitRegistry::instance().names()) std::cout << " " << u;
  std::cout << "\n";
  return 0;
}

struct VerifyOptions {
  std::vector<std::string> suites{"all"};
  std::string unit = "polar";
  SamplePlan plan;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string format = "text";
  std::string out;
};

int do_verify(const VerifyOptions& o) {
  const auto selected = select_suites(o.suites);
  const Canonical canon(UnitRegistry::instance().get(o.unit));
  EvalContext ctx(o.plan.retry_cap);

  std::vector<SuiteReport> reports;
  for (const Suite* s : selected) {
    reports.push_back(run_suite(*s, canon, o.plan, ctx, o.jobs));
    if (o.format == "text") print_suite(std::cout, reports.back());
  }
  bool ok = !reports.empty();
  for (const auto& r : reports) ok = ok && r.passed;

  if (o.format == "json") {
    const std::string doc = run_json(reports, o.plan, o.unit).dump(2) + "\n";
    if (o.out.empty()) {
      std::cout << doc;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) throw std::runtime_error("cannot write " + o.out);
      f << doc;
    }
  } else {
    double total = 0;
    for (const auto& r : reports) total += r.seconds;
    std::cout << (ok ? "all selected suites pass" : "FAILURES") << " (" << total << " s, " << ctx.memo_size()
              << " memo entries)\n";
    if (!o.out.empty()) {
      std::ofstream f(o.out, std::ios::binary);
      for (const auto& r : reports) print_suite(f, r);
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact identity verifier for flexion and mould calculus"};
  app.require_subcommand(1);

  std::string list_format = "text";
  auto* list = app.add_subcommand("list", "List registered suites and units");
  list->add_option("--report", list_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  VerifyOptions o;
  auto* verify = app.add_subcommand("verify", "Run identity suites");
  verify->add_option("--suite", o.suites, "Suite names or 'all'")->delimiter(',');
  verify->add_option("--unit", o.unit, "Flexion unit");
  verify->add_option("--max-length", o.plan.max_length, "Largest word length")->check(CLI::Range(0, 12));
  verify->add_option("--samples", o.plan.samples, "Sample words per length and split")->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.plan.seed, "Sampling seed");
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--retry-cap", o.plan.retry_cap, "Resamples after a division by zero")->check(CLI::NonNegativeNumber);
  verify->add_option("--report", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", o.out, "Write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) return do_list(list_format);
    return do_verify(o);
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
