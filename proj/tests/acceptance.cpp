// Acceptance run: drives the flexionlab binary end to end and prints one
// PASS/FAIL line per acceptance criterion.
//
//   acceptance --cli build/flexionlab [--known-red N ...]
//
// Criteria listed with --known-red still print FAIL when they fail; they just
// do not change the exit status.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "flexionlab/negelon.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int exit_code = -1;
  double seconds = 0;
  std::string bytes;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Run run_cli(const std::string& cli, const std::string& args, const fs::path& out) {
  const std::string cmd = "\"" + cli + "\" verify " + args + " --report json --out \"" + out.string() + "\"";
  const auto t0 = std::chrono::steady_clock::now();
  const int rc = std::system(cmd.c_str());
  Run r;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.exit_code = rc;
  r.bytes = slurp(out);
  return r;
}

struct Line {
  int id;
  bool pass;
  std::string text;
};

/// identity name -> check object, across all suites
std::map<std::string, json> index_checks(const json& doc) {
  std::map<std::string, json> out;
  for (const auto& s : doc["suites"])
    for (const auto& c : s["identities"]) out[c["identity"].get<std::string>()] = c;
  return out;
}

class Judge {
 public:
  explicit Judge(const json& doc) : checks_(index_checks(doc)), plan_(doc["config"]) {}

  /// Looks up an identity and records why it is missing or red.
  bool passes(const std::string& name, std::string& why) const {
    auto it = checks_.find(name);
    if (it == checks_.end()) {
      why += " missing '" + name + "';";
      return false;
    }
    if (it->second["status"] != "pass") {
      why += " red '" + name + "';";
      return false;
    }
    return true;
  }

  /// Every length up to hi carries at least `samples` points (per split for shuffle checks).
  bool covers(const std::string& name, std::size_t lo, std::size_t hi, std::string& why) const {
    auto it = checks_.find(name);
    if (it == checks_.end()) return false;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    bool pairs = false;
    for (const auto& p : it->second["points"]) {
      const std::size_t split = p.contains("split") ? p["split"].get<std::size_t>() : 0;
      pairs = pairs || p.contains("split");
      ++seen[{p["length"].get<std::size_t>(), split}];
    }
    const std::size_t samples = plan_["samples"];
    for (std::size_t len = lo; len <= hi; ++len) {
      if (pairs && len < 2) continue;
      const std::size_t first = pairs ? 1 : 0, last = pairs ? len - 1 : 0;
      for (std::size_t s = first; s <= last; ++s) {
        const std::size_t want = (!pairs && len == 0) ? 1 : samples;
        if (seen[{len, s}] < want) {
          why += " thin coverage for '" + name + "' at length " + std::to_string(len) + ";";
          return false;
        }
      }
    }
    return true;
  }

  bool all(const std::vector<std::string>& names, std::size_t lo, std::size_t hi, std::string& why) const {
    bool ok = true;
    for (const auto& n : names) ok = passes(n, why) && covers(n, lo, hi, why) && ok;
    return ok;
  }

  const json& get(const std::string& name) const { return checks_.at(name); }

 private:
  std::map<std::string, json> checks_;
  json plan_;
};

std::vector<std::string> numbered(const std::string& stem, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(stem + " #" + std::to_string(i));
  return out;
}

std::string fixed(double x, int digits = 1) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << x;
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance run"};
  std::string cli;
  std::vector<int> known_red;
  app.add_option("--cli", cli, "Path to the flexionlab binary")->required();
  app.add_option("--known-red", known_red, "Criteria allowed to stay red");
  CLI11_PARSE(app, argc, argv);
  const std::set<int> red(known_red.begin(), known_red.end());

  const fs::path dir = fs::temp_directory_path() / ("flexionlab-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);

  const std::string base = "--suite all --seed 0";
  const Run a = run_cli(cli, base + " --jobs 1", dir / "a.json");
  const Run b = run_cli(cli, base + " --jobs 1", dir / "b.json");
  const Run c = run_cli(cli, base + " --jobs 4", dir / "c.json");
  if (a.bytes.empty()) {
    std::cerr << "flexionlab produced no report (exit " << a.exit_code << ")\n";
    return 2;
  }
  const json doc = json::parse(a.bytes);
  const Judge judge(doc);
  std::vector<Line> lines;

  {
    const auto t0 = std::chrono::steady_clock::now();
    const auto tuples = flexionlab::negelon_scan(12);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::size_t nonzero = 0;
    for (const auto& t : tuples) nonzero += !t.value.is_zero();
    std::string why;
    const std::string name = "F(r,k,l,h) = 0 for 2 <= r <= 12, h >= 1, k+l+h <= r-1";
    bool ok = judge.passes(name, why) && nonzero == 0 && secs < 10;
    if (ok && judge.get(name)["points"].size() != tuples.size()) {
      ok = false;
      why += " report and direct scan disagree on the tuple count;";
    }
    lines.push_back({1, ok,
                     "negelon sum vanishes: " + std::to_string(tuples.size()) + " tuples (stated count 650), " +
                         std::to_string(nonzero) + " nonzero, " + fixed(secs, 2) + " s;" + why});
  }
  {
    std::string why;
    const bool ok = judge.all(numbered("(id - E-sena)(B) = swamu(es, (id - E-push)(B))", 10), 0, 4, why);
    lines.push_back({2, ok, "E-sena identity on 10 generic moulds, lengths <= 4;" + why});
  }
  {
    std::string why;
    const bool ok = judge.all(numbered("senary relation on al_ol", 5), 0, 4, why);
    lines.push_back({3, ok, "senary relation on 5 al_ol elements, lengths <= 4;" + why});
  }
  {
    std::string why;
    const bool ok = judge.all({"ess is symmetral", "oess is symmetral", "eess is symmetral", "oss is symmetral"}, 2, 4,
                              why);
    lines.push_back({4, ok, "bisymmetrality of ess/oess and eess/oss, every split up to length 4;" + why});
  }
  {
    std::string why;
    const bool ok = judge.all({"To is O-alternal (ganit route)", "To is O-alternal (gamit route)"}, 2, 4, why);
    lines.push_back({5, ok, "To is O-alternal by both routes, lengths <= 4;" + why});
  }
  {
    std::string why;
    std::vector<std::string> names;
    for (int i = 1; i <= 5; ++i) {
      const std::string k = " #" + std::to_string(i);
      names.push_back("adari(ess) of a push-invariant is E-sena-invariant" + k);
      names.push_back("adari(eess) of a push-invariant is E-sena-invariant" + k);
      names.push_back("adari(ess)^-1 restores push-invariance" + k);
    }
    const bool ok = judge.all(names, 0, 4, why);
    lines.push_back({6, ok, "push to E-sena transfer on 5 pushsym moulds with roundtrip;" + why});
  }
  {
    std::string why;
    auto names = numbered("alternal D gives symmetral S", 3);
    for (auto& n : numbered("symmetral S gives alternal D", 3)) names.push_back(n);
    const bool ok = judge.all(names, 2, 4, why);
    lines.push_back({7, ok, "dilator correspondence both ways on 3 instances each;" + why});
  }
  {
    std::string why;
    std::vector<std::string> names = {
        "ganit(os) o gamit(os)^-1 = garit(invmu(os))",
        "gamit(os)(O) = os - 1",
        "girat(oz) = gaxit(oz,oz)",
        "girat(oz)^-1(oz) = 1+O",
        "invmu(es) = push(es)",
        "adari closed form = nested ari series",
        "E-ter^-1 o E-ter = id",
        "E-ter^-1 answamu form = triple sum",
        "E-push^-1 explicit form",
        "E-push^-1 o E-push = id",
    };
    if (doc["config"]["unit"] == "polar") names.push_back("ganit(os)(O) = os - 1 (displayed product form of os)");
    // the E-swap inverse forms are the expensive ones and stop at length 3
    const std::vector<std::string> short_names = {"E-swap^-1 o E-swap = id", "E-swap^-1 first form = second form",
                                                  "E-swap^-1 first form = third form"};
    const bool long_ok = judge.all(names, 0, 4, why);
    const bool ok = judge.all(short_names, 0, 3, why) && long_ok;
    lines.push_back({8, ok,
                     "definitional cross-checks (" + std::to_string(names.size() + short_names.size()) +
                         " identities);" + why});
  }
  {
    std::string why;
    const bool ok = judge.all({"fragari(neg(ess), ess) = es", "E-neg = adari(ess) o neg o adari(ess)^-1",
                               "E-neg = adari(eess) o neg o adari(eess)^-1"},
                              0, 3, why);
    lines.push_back({9, ok, "ess/eess reconstruction guards, lengths <= 3;" + why});
  }
  {
    std::string why;
    const std::vector<std::string> names = {
        "generic is push-invariant (must fail)",
        "generic (must fail) is O-alternal (ganit route)",
        "generic (must fail) is O-alternal (gamit route)",
        "generic group mould is symmetral (must fail)",
        "generic is alternal (must fail)",
        "F(r,k,l,0) = 0 for 2 <= r <= 12 (must fail)",
    };
    bool ok = true;
    for (const auto& n : names) ok = judge.passes(n, why) && ok;
    lines.push_back({10, ok, "negative controls refuted (" + std::to_string(names.size()) + ");" + why});
  }
  {
    const bool same = !a.bytes.empty() && a.bytes == b.bytes && a.bytes == c.bytes;
    const bool ok = same && a.seconds < 900 && c.seconds < 300;
    lines.push_back({11, ok,
                     std::string("reports ") + (same ? "byte-identical" : "DIFFER") + " across 3 runs; " +
                         fixed(a.seconds) + " s with 1 worker, " + fixed(c.seconds) + " s with 4 workers on " +
                         std::to_string(std::thread::hardware_concurrency()) + " cpu(s);"});
  }

  fs::remove_all(dir);

  bool ok = true;
  for (const auto& l : lines) {
    const bool tolerated = !l.pass && red.count(l.id);
    std::cout << "criterion " << l.id << (l.id < 10 ? "  " : " ") << (l.pass ? "PASS" : "FAIL") << "  " << l.text
              << (tolerated ? " known red" : "") << "\n";
    ok = ok && (l.pass || tolerated);
  }
  std::size_t passed = 0;
  for (const auto& l : lines) passed += l.pass;
  std::cout << passed << "/" << lines.size() << " criteria pass\n";
  return ok ? 0 : 1;
}
