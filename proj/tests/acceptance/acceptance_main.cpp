// Acceptance run: one PASS/FAIL line per criterion. Identities are exact
// (zero tolerance); each criterion also has a wall-clock budget in seconds.

#include "cli.hpp"

#include "jtvo/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using jtvo::SuiteOptions;
using jtvo::SuiteReport;

namespace {

struct Outcome {
  bool ok = true;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string note;

  void add(const SuiteReport& r) {
    cases += r.cases;
    failures += r.failures;
    if (!r.ok()) {
      ok = false;
      if (note.empty()) note = r.suite + "/" + r.family + ": " + r.first_counterexample.value_or("?");
    }
  }
  void fail(std::string why) {
    ok = false;
    ++failures;
    if (note.empty()) note = std::move(why);
  }
};

int failed_criteria = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_budget = elapsed <= budget_seconds;
  const bool pass = o.ok && in_budget;
  if (!pass) ++failed_criteria;
  char timing[96];
  std::snprintf(timing, sizeof timing, "time=%.2fs budget=%.0fs", elapsed, budget_seconds);
  std::cout << "criterion " << id << " [" << title << "]: " << (pass ? "PASS" : "FAIL") << " cases=" << o.cases
            << " failures=" << o.failures << " tolerance=exact " << timing;
  if (!in_budget) std::cout << " (over budget)";
  if (!o.note.empty()) std::cout << " first: " << o.note;
  std::cout << std::endl;
}

const std::vector<std::string> kFamilies{"classical", "lie", "shifted", "linrec"};

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "jtvo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = jtvo::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

}  // namespace

int main() {
  criterion(1, "Clifford relations, |lambda|<=5, |m|<=2, k,l in [-6,6], all families", 120, [] {
    Outcome o;
    for (const auto& f : kFamilies) o.add(jtvo::clifford_suite(jtvo::make_family(f), {.max_weight = 5, .range = 2, .kmax = 6}));
    return o;
  });

  criterion(2, "Newton identity a,b in [-4,4]; H E = Id on (-4,4), (-6,2)", 30, [] {
    Outcome o;
    for (const auto& f : kFamilies) {
      o.add(jtvo::newton_suite(jtvo::make_family(f), {.range = 4}));
      o.add(jtvo::he_suite(jtvo::make_family(f)));
    }
    return o;
  });

  criterion(3, "Giambelli and dual Jacobi-Trudi, weight <=8 classical, <=6 others, n=l and l+2", 120, [] {
    Outcome o;
    o.add(jtvo::giambelli_suite(jtvo::make_family("classical"), {.max_weight = 8}));
    for (const char* f : {"lie", "shifted", "linrec"}) o.add(jtvo::giambelli_suite(jtvo::make_family(f), {.max_weight = 6}));
    return o;
  });

  criterion(4, "hook functions s_(m|n), |m|,|n| <= 4", 10, [] {
    Outcome o;
    for (const auto& f : kFamilies) o.add(jtvo::hook_suite(jtvo::make_family(f), {.range = 4}));
    return o;
  });

  criterion(5, "psi/psi* expansions via D_p and D^(p), |lambda|<=4, k-m-1 in [-4,6], m in {-1,0,1}", 180, [] {
    Outcome o;
    for (const auto& f : kFamilies) o.add(jtvo::prop42_suite(jtvo::make_family(f), {.max_weight = 4, .kmax = 6}));
    return o;
  });

  criterion(6, "Bernstein creation/annihilation words, |lambda|<=5", 30, [] {
    Outcome o;
    for (const auto& f : kFamilies) o.add(jtvo::bernstein_suite(jtvo::make_family(f), {.max_weight = 5}));
    return o;
  });

  criterion(7, "boson-fermion intertwining and wedge Clifford relations, |lambda|<=5, |m|<=2, k in [-6,6]", 60, [] {
    Outcome o;
    o.add(jtvo::correspondence_suite({.max_weight = 5, .range = 2, .kmax = 6}));
    return o;
  });

  criterion(8, "Heisenberg [alpha_j, alpha_k] = j delta_{j,-k}, alpha_0 = m, |lambda|<=4, |m|<=2, |j|,|k|<=3", 120, [] {
    Outcome o;
    o.add(jtvo::heisenberg_suite(jtvo::make_family("classical"), {.max_weight = 4, .range = 2, .kmax = 3}));
    return o;
  });

  criterion(9, "character, linear-recurrence and shifted vertex identities", 120, [] {
    Outcome o;
    o.add(jtvo::char_suite({.max_weight = 3, .kmax = 4}));
    o.add(jtvo::linrec_suite(jtvo::make_family("linrec", {1, 1}), {.max_weight = 3, .kmax = 4}));
    o.add(jtvo::linrec_suite(jtvo::make_family("linrec", {0}), {.max_weight = 3, .kmax = 4}));
    o.add(jtvo::linrec_suite(jtvo::make_family("linrec", {0, 0}), {.max_weight = 3, .kmax = 4}));
    o.add(jtvo::shifted_suite({.range = 4, .kmax = 5}));
    return o;
  });

  criterion(10, "CLI determinism with --seed and exit codes", 120, [] {
    Outcome o;
    std::vector<std::vector<std::string>> runs;
    for (const auto& suite : jtvo::suite_names()) {
      runs.push_back({"verify", suite, "--seed", "7"});
      runs.push_back({"verify", suite, "--seed", "7", "--json"});
    }
    runs.push_back({"verify", "word", "--word", "psi:3,psistar:0", "--state", "2,1@0", "--seed", "7"});
    for (const auto& args : runs) {
      const CliRun a = cli(args), b = cli(args);
      ++o.cases;
      if (a.out != b.out || a.code != b.code || a.out.empty()) o.fail("non-deterministic output for verify " + args[1]);
      else if (a.code != 0) o.fail("verify " + args[1] + " exited " + std::to_string(a.code));
    }
    const std::vector<std::pair<std::vector<std::string>, int>> codes{
        {{"verify", "newton", "--family", "lie", "--range", "4"}, 0},
        {{"verify", "word", "--word", "psi:3", "--state", "@0", "--expect", "[2]@1"}, 0},
        {{"verify", "word", "--word", "psi:3", "--state", "@0", "--expect", "[1,1]@1"}, 1},
        {{"schur", "--shape", "1,x"}, 2},
        {{"apply", "--word", "psi:1", "--state", "1,2@0"}, 2},
        {{"verify", "nonexistent"}, 2},
    };
    for (const auto& [args, expected] : codes) {
      ++o.cases;
      const int got = cli(args).code;
      if (got != expected) o.fail(args[0] + " " + args[1] + ": exit " + std::to_string(got) + ", expected " + std::to_string(expected));
    }
    const CliRun newton = cli({"verify", "newton", "--family", "lie", "--range", "4"});
    ++o.cases;
    if (newton.out.find("cases: 81\n") == std::string::npos) o.fail("newton --range 4 did not report 81 cases");
    return o;
  });

  std::cout << (failed_criteria == 0 ? "all acceptance criteria passed" : std::to_string(failed_criteria) + " criteria failed")
            << std::endl;
  return failed_criteria == 0 ? 0 : 1;
}
