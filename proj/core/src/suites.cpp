#include "jtvo/suites.hpp"

#include "jtvo/boson.hpp"
#include "jtvo/errors.hpp"
#include "jtvo/fermion.hpp"
#include "jtvo/schur.hpp"
#include "jtvo/vertex.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <exception>
#include <sstream>

namespace jtvo {

// ---------------------------------------------------------------- families

std::vector<Coefficient> parse_coefficients(std::string_view text) {
  std::vector<Coefficient> out;
  std::string item;
  auto flush = [&] {
    if (item.empty()) throw ParseError("empty entry in coefficient list '" + std::string(text) + "'");
    out.push_back(Coefficient::parse(item));
    item.clear();
  };
  bool any = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    any = true;
    if (c == ',')
      flush();
    else
      item.push_back(c);
  }
  if (any) flush();
  return out;
}

FamilyPtr make_family(std::string_view name, const std::vector<Coefficient>& coeffs) {
  if (name == "classical") return GeneratorFamily::classical();
  if (name == "lie") return GeneratorFamily::lie_character();
  if (name == "shifted") return GeneratorFamily::shifted();
  if (name == "linrec") return GeneratorFamily::linear_recurrence(coeffs.empty() ? std::vector<Coefficient>{1, 1} : coeffs);
  throw ParseError("unknown family '" + std::string(name) + "' (expected classical, lie, shifted or linrec)");
}

// ---------------------------------------------------------------- reports

void SuiteReport::record(bool ok, const std::function<std::string()>& describe) {
  ++cases;
  if (ok) return;
  ++failures;
  if (!first_counterexample) first_counterexample = describe();
}

void SuiteReport::absorb(const SuiteReport& other) {
  cases += other.cases;
  failures += other.failures;
  if (!first_counterexample && other.first_counterexample) first_counterexample = other.first_counterexample;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "suite: " << suite << '\n' << "family: " << family << '\n';
  for (const auto& [k, v] : parameters) os << "param " << k << ": " << v << '\n';
  os << "cases: " << cases << '\n' << "failures: " << failures << '\n';
  if (first_counterexample) os << "first counterexample: " << *first_counterexample << '\n';
  os << "status: " << (ok() ? "ok" : "VIOLATION") << '\n';
  return os.str();
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["suite"] = suite;
  j["family"] = family;
  j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : parameters) j["parameters"][k] = v;
  j["cases"] = cases;
  j["failures"] = failures;
  j["ok"] = ok();
  j["first_counterexample"] = first_counterexample ? nlohmann::ordered_json(*first_counterexample) : nlohmann::ordered_json(nullptr);
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------- RNG

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int SplitMix64::uniform(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return lo + static_cast<int>(x % span);
}

// ---------------------------------------------------------------- helpers

namespace {

SuiteReport start(std::string suite, const GeneratorFamily& family) {
  SuiteReport r;
  r.suite = std::move(suite);
  r.family = family.name();
  return r;
}

// Records one case; library errors raised while evaluating count as
// failures and are quoted in the counterexample.
void check(SuiteReport& report, const std::function<std::string()>& describe, const std::function<bool()>& body) {
  std::string error;
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  report.record(ok, [&] { return error.empty() ? describe() : describe() + " (" + error + ")"; });
}

std::string state_label(const Partition& lambda, int m) { return "[" + lambda.to_string() + "]@" + std::to_string(m); }


}  // namespace

// ---------------------------------------------------------------- suites

SuiteReport clifford_suite(const FamilyPtr& family, const SuiteOptions& opt) {
  const int max_weight = opt.max_weight.value_or(5);
  const int kmax = opt.kmax.value_or(6);
  const int max_charge = opt.range.value_or(2);
  SuiteReport report = start("clifford", *family);
  report.parameters = {{"maxweight", std::to_string(max_weight)},
                       {"kmax", std::to_string(kmax)},
                       {"maxcharge", std::to_string(max_charge)}};
  const SchurEngine engine(family);
  const BosonFock fock(engine);
  for (const Partition& lambda : partitions_up_to(max_weight)) {
    for (int m = -max_charge; m <= max_charge; ++m) {
      const BosonState v = BosonState::basis(lambda, m);
      for (int k = -kmax; k <= kmax; ++k) {
        for (int l = -kmax; l <= kmax; ++l) {
          auto where = [&](const char* rel) {
            return std::string(rel) + " k=" + std::to_string(k) + " l=" + std::to_string(l) + " on " + state_label(lambda, m);
          };
          check(report, [&] { return where("psi_k psi_l + psi_l psi_k"); },
                [&] { return (fock.psi(k, fock.psi(l, v)) + fock.psi(l, fock.psi(k, v))).is_zero(); });
          check(report, [&] { return where("psi*_k psi*_l + psi*_l psi*_k"); },
                [&] { return (fock.psi_star(k, fock.psi_star(l, v)) + fock.psi_star(l, fock.psi_star(k, v))).is_zero(); });
          check(report, [&] { return where("psi_k psi*_l + psi*_l psi_k"); }, [&] {
            const BosonState anti = fock.psi(k, fock.psi_star(l, v)) + fock.psi_star(l, fock.psi(k, v));
            return k == l ? anti == v : anti.is_zero();
          });
        }
        // The straightened action must match the raw determinant with row
        // data (k-m-1, lambda).
        check(report, [&] { return "psi_" + std::to_string(k) + " value vs raw determinant on " + state_label(lambda, m); },
              [&] {
                std::vector<int> row{k - m - 1};
                row.insert(row.end(), lambda.parts().begin(), lambda.parts().end());
                const IntegerVector data(std::move(row));
                return fock.expand_at(fock.psi(k, v), m + 1) == engine.jacobi_trudi_determinant(data, data.length());
              });
      }
    }
  }
  return report;
}

SuiteReport newton_suite(const FamilyPtr& family, const SuiteOptions& opt) {
  const int range = opt.range.value_or(4);
  SuiteReport report = start("newton", *family);
  report.parameters = {{"range", std::to_string(range)}};
  const SchurEngine engine(family);
  for (int a = -range; a <= range; ++a)
    for (int b = -range; b <= range; ++b)
      check(report, [&] { return "newton_sum(" + std::to_string(a) + "," + std::to_string(b) + ")"; },
            [&] { return engine.newton_sum(a, b) == Coefficient(a == b ? 1 : 0); });
  return report;
}

SuiteReport he_suite(const FamilyPtr& family, const SuiteOptions& opt) {
  std::vector<std::pair<int, int>> windows{{-4, 4}, {-6, 2}};
  if (opt.range) windows = {{-*opt.range, *opt.range}};
  SuiteReport report = start("he", *family);
  std::string label;
  for (const auto& [lo, hi] : windows) label += (label.empty() ? "" : " ") + std::to_string(lo) + ".." + std::to_string(hi);
  report.parameters = {{"windows", label}};
  const SchurEngine engine(family);
  for (const auto& [lo, hi] : windows) {
    const HEMatrices m = engine.he_matrices(lo, hi);
    const PolyMatrix product = m.h * m.e;
    for (std::size_t i = 0; i < product.rows(); ++i)
      for (std::size_t j = 0; j < product.cols(); ++j)
        check(report,
              [&] {
                return "(H E) entry (" + std::to_string(lo + static_cast<int>(i)) + "," + std::to_string(lo + static_cast<int>(j)) +
                       ") on window " + std::to_string(lo) + ".." + std::to_string(hi) + " is " + product(i, j).to_string();
              },
              [&] { return product(i, j) == Poly(i == j ? 1 : 0); });
  }
  return report;
}

SuiteReport giambelli_suite(const FamilyPtr& family, const SuiteOptions& opt) {
  const int max_weight = opt.max_weight.value_or(family->kind() == FamilyKind::Classical ? 8 : 6);
  SuiteReport report = start("giambelli", *family);
  report.parameters = {{"maxweight", std::to_string(max_weight)}, {"extra", "0,2"}};
  const SchurEngine engine(family);
  for (const Partition& lambda : partitions_up_to(max_weight)) {
    const Poly s = engine.schur(lambda);
    for (int extra : {0, 2}) {
      const int n = lambda.length() + extra;
      check(report, [&] { return "extended Giambelli n=" + std::to_string(n) + " for (" + lambda.to_string() + ")"; },
            [&] { return engine.giambelli_extended(lambda, n) == s; });
    }
    check(report, [&] { return "Frobenius Giambelli for (" + lambda.to_string() + ")"; },
          [&] { return engine.giambelli_frobenius(lambda) == s; });
    check(report, [&] { return "dual Jacobi-Trudi for (" + lambda.to_string() + ")"; },
          [&] { return engine.dual_jacobi_trudi(lambda) == s; });
  }
  return report;
}

SuiteReport hook_suite(const FamilyPtr& family, const SuiteOptions& opt) {
  const int range = opt.range.value_or(4);
  SuiteReport report = start("hook", *family);
  report.parameters = {{"range", std::to_string(range)}};
  const SchurEngine engine(family);
  for (int m = -range - 1; m <= range; ++m) {
    for (int n = -range - 1; n <= range; ++n) {
      Poly expected;
      if (m >= 0 && n >= 0) {
        std::vector<int> parts{m + 1};
        parts.insert(parts.end(), static_cast<std::size_t>(n), 1);
        expected = engine.schur(Partition(std::move(parts)));
      } else if (n >= 0 && m + n == -1) {
        expected = Poly(sign_power(n));
      }
      check(report, [&] { return "s_(" + std::to_string(m) + "|" + std::to_string(n) + ")"; },
            [&] { return engine.hook(m, n) == expected; });
    }
  }
  return report;
}

SuiteReport prop42_suite(const FamilyPtr& family, const SuiteOptions& opt) {
  const int max_weight = opt.max_weight.value_or(4);
  const int smax = opt.kmax.value_or(6);
  const int smin = -4;
  SuiteReport report = start("prop42", *family);
  report.parameters = {{"maxweight", std::to_string(max_weight)},
                       {"s", std::to_string(smin) + ".." + std::to_string(smax)},
                       {"charges", "-1,0,1"}};
  const SchurEngine engine(family);
  const BosonFock fock(engine);
  for (const Partition& lambda : partitions_up_to(max_weight))
    for (int m = -1; m <= 1; ++m)
      for (int s = smin; s <= smax; ++s) {
        const int k = s + m + 1;
        FlagPair flags;
        std::string error;
        try {
          flags = verify_prop42(fock, k, m, lambda);
        } catch (const std::exception& e) {
          error = std::string(" (") + e.what() + ")";
        }
        auto where = [&](const char* op) { return std::string(op) + std::to_string(k) + " on " + state_label(lambda, m) + error; };
        report.record(flags.psi, [&] { return where("psi_"); });
        report.record(flags.psi_star, [&] { return where("psi*_"); });
      }
  return report;
}

SuiteReport bernstein_suite(const FamilyPtr& family, const SuiteOptions& opt) {
  const int max_weight = opt.max_weight.value_or(5);
  SuiteReport report = start("bernstein", *family);
  report.parameters = {{"maxweight", std::to_string(max_weight)}};
  const SchurEngine engine(family);
  const BosonFock fock(engine);
  const BosonState vacuum = BosonState::basis(Partition{}, 0);
  for (const Partition& lambda : partitions_up_to(max_weight)) {
    const int l = lambda.length();
    check(report, [&] { return "creation word " + bernstein_creation_word(lambda).to_string(); },
          [&] { return fock.apply(bernstein_creation_word(lambda), vacuum) == BosonState::basis(lambda, l); });
    check(report, [&] { return "annihilation word " + bernstein_annihilation_word(lambda).to_string(); }, [&] {
      return fock.apply(bernstein_annihilation_word(lambda), vacuum) ==
             BosonState::basis(conjugate(lambda), -l, sign_power(lambda.weight()));
    });
  }
  return report;
}

SuiteReport correspondence_suite(const SuiteOptions& opt) {
  const int max_weight = opt.max_weight.value_or(5);
  const int kmax = opt.kmax.value_or(6);
  const int max_charge = opt.range.value_or(2);
  const SchurEngine engine(GeneratorFamily::classical());
  const BosonFock fock(engine);
  SuiteReport report = start("correspondence", engine.family());
  report.parameters = {{"maxweight", std::to_string(max_weight)},
                       {"kmax", std::to_string(kmax)},
                       {"maxcharge", std::to_string(max_charge)}};
  for (const Partition& lambda : partitions_up_to(max_weight)) {
    for (int m = -max_charge; m <= max_charge; ++m) {
      const BosonState b = BosonState::basis(lambda, m);
      const FermionState f = FermionState::basis(m, lambda);
      for (int k = -kmax; k <= kmax; ++k) {
        auto where = [&](const std::string& what) { return what + " on " + state_label(lambda, m); };
        check(report, [&] { return where("psi_" + std::to_string(k) + " intertwining"); },
              [&] { return correspond(f_psi(k, f)) == fock.psi(k, b); });
        check(report, [&] { return where("psi*_" + std::to_string(k) + " intertwining"); },
              [&] { return correspond(f_psi_star(k, f)) == fock.psi_star(k, b); });
        for (int l = -kmax; l <= kmax; ++l) {
          const std::string pair = " k=" + std::to_string(k) + " l=" + std::to_string(l);
          check(report, [&] { return where("wedge psi psi" + pair); },
                [&] { return (f_psi(k, f_psi(l, f)) + f_psi(l, f_psi(k, f))).is_zero(); });
          check(report, [&] { return where("wedge psi* psi*" + pair); },
                [&] { return (f_psi_star(k, f_psi_star(l, f)) + f_psi_star(l, f_psi_star(k, f))).is_zero(); });
          check(report, [&] { return where("wedge psi psi*" + pair); }, [&] {
            const FermionState anti = f_psi(k, f_psi_star(l, f)) + f_psi_star(l, f_psi(k, f));
            return k == l ? anti == f : anti.is_zero();
          });
        }
      }
    }
  }
  return report;
}

SuiteReport heisenberg_suite(const FamilyPtr& family, const SuiteOptions& opt) {
  const int max_weight = opt.max_weight.value_or(4);
  const int jmax = opt.kmax.value_or(3);
  const int max_charge = opt.range.value_or(2);
  SuiteReport report = start("heisenberg", *family);
  report.parameters = {{"maxweight", std::to_string(max_weight)},
                       {"kmax", std::to_string(jmax)},
                       {"maxcharge", std::to_string(max_charge)}};
  const SchurEngine engine(family);
  const BosonFock fock(engine);
  for (const Partition& lambda : partitions_up_to(max_weight)) {
    for (int m = -max_charge; m <= max_charge; ++m) {
      const BosonState v = BosonState::basis(lambda, m);
      check(report, [&] { return "alpha_0 on " + state_label(lambda, m); },
            [&] { return fock.alpha(0, v) == Coefficient(m) * v; });
      for (int j = -jmax; j <= jmax; ++j)
        for (int k = -jmax; k <= jmax; ++k)
          check(report,
                [&] { return "[alpha_" + std::to_string(j) + ", alpha_" + std::to_string(k) + "] on " + state_label(lambda, m); },
                [&] {
                  const BosonState comm = fock.alpha(j, fock.alpha(k, v)) - fock.alpha(k, fock.alpha(j, v));
                  return comm == Coefficient(j + k == 0 ? j : 0) * v;
                });
    }
  }
  return report;
}

SuiteReport char_suite(const SuiteOptions& opt) {
  const int max_weight = opt.max_weight.value_or(3);
  const int smax = opt.kmax.value_or(4);
  const int smin = -3;
  const SchurEngine engine(GeneratorFamily::lie_character());
  const BosonFock fock(engine);
  SuiteReport report = start("char", engine.family());
  report.parameters = {{"maxweight", std::to_string(max_weight)},
                       {"s", std::to_string(smin) + ".." + std::to_string(smax)},
                       {"charges", "-1,0,1"}};
  for (const Partition& lambda : partitions_up_to(max_weight))
    for (int m = -1; m <= 1; ++m)
      for (int s = smin; s <= smax; ++s) {
        const int k = s + m + 1;
        FlagPair flags;
        std::string error;
        try {
          flags = verify_char_vertex(fock, k, m, lambda);
        } catch (const std::exception& e) {
          error = std::string(" (") + e.what() + ")";
        }
        auto where = [&](const char* op) { return std::string(op) + std::to_string(k) + " on " + state_label(lambda, m) + error; };
        report.record(flags.psi, [&] { return where("Psi(u) coefficient u^"); });
        report.record(flags.psi_star, [&] { return where("Psi*(u) coefficient u^-"); });
      }
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j)
      check(report, [&] { return "e^(" + std::to_string(i) + ")_" + std::to_string(j) + " via K"; },
            [&] { return engine.elementary(i, j) == lie_elementary_via_k(i, j); });
  for (int p = 0; p <= 4; ++p)
    check(report, [&] { return "schur(1^" + std::to_string(p) + ") = K_p - K_{p-2}"; }, [&] {
      return engine.schur(Partition(std::vector<int>(static_cast<std::size_t>(p), 1))) ==
             lie_k_coefficient(p) - lie_k_coefficient(p - 2);
    });
  for (int n = 0; n <= 8; ++n)
    check(report, [&] { return "J(u) K(-u) = 1 at u^" + std::to_string(n); }, [&] {
      Poly acc;
      for (int t = 0; t <= n; ++t) acc += Coefficient(sign_power(n - t)) * (lie_j(t) * lie_k_coefficient(n - t));
      return acc == Poly(n == 0 ? 1 : 0);
    });
  return report;
}

SuiteReport linrec_suite(const FamilyPtr& family, const SuiteOptions& opt) {
  const FamilyPtr& fam = family;
  const int max_weight = opt.max_weight.value_or(3);
  const int smax = opt.kmax.value_or(4);
  const int smin = -3;
  // Throws UnsupportedFamily up front for other families.
  (void)recurrence_symbol(*fam);
  const SchurEngine engine(fam);
  const BosonFock fock(engine);
  SuiteReport report = start("linrec", *fam);
  report.parameters = {{"maxweight", std::to_string(max_weight)},
                       {"s", std::to_string(smin) + ".." + std::to_string(smax)},
                       {"charges", "-1,0,1"}};
  for (const Partition& lambda : partitions_up_to(max_weight))
    for (int m = -1; m <= 1; ++m)
      for (int s = smin; s <= smax; ++s) {
        const int k = s + m + 1;
        FlagPair flags;
        std::string error;
        try {
          flags = verify_linrec_vertex(fock, k, m, lambda);
        } catch (const std::exception& e) {
          error = std::string(" (") + e.what() + ")";
        }
        auto where = [&](const char* op) { return std::string(op) + std::to_string(k) + " on " + state_label(lambda, m) + error; };
        report.record(flags.psi, [&] { return where("Psi(u) coefficient u^"); });
        report.record(flags.psi_star, [&] { return where("Psi*(u) coefficient u^-"); });
      }
  for (int p = 0; p <= 4; ++p)
    for (int a = -4; a <= 4; ++a)
      check(report, [&] { return "e^(" + std::to_string(p) + ")_" + std::to_string(a) + " by recursion"; },
            [&] { return elementary_by_recursion(fock, p, a) == engine.elementary(p, a); });
  const auto& coeffs = fam->recurrence_coefficients();
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const Coefficient& c) { return c.is_zero(); })) {
    // With f(u) = 1/u the family is the classical one.
    const SchurEngine classical(GeneratorFamily::classical());
    for (int r = -4; r <= 4; ++r)
      for (int k = -4; k <= 4; ++k)
        check(report, [&] { return "degenerate h^(" + std::to_string(r) + ")_" + std::to_string(k) + " vs classical"; },
              [&] { return engine.h(r, k) == classical.h(r, k); });
    for (const Partition& lambda : partitions_up_to(max_weight + 1))
      check(report, [&] { return "degenerate schur(" + lambda.to_string() + ") vs classical"; },
            [&] { return engine.schur(lambda) == classical.schur(lambda); });
  }
  return report;
}

SuiteReport shifted_suite(const SuiteOptions& opt) {
  const int kmax = opt.kmax.value_or(5);
  const int pmax = opt.range.value_or(4);
  const SchurEngine engine(GeneratorFamily::shifted());
  SuiteReport report = start("shifted", engine.family());
  report.parameters = {{"kmax", std::to_string(kmax)}, {"p", "-2.." + std::to_string(pmax)}};
  for (int k = 0; k <= kmax; ++k) {
    const Poly e_star = engine.schur(Partition(std::vector<int>(static_cast<std::size_t>(k), 1)));
    check(report, [&] { return "e*_" + std::to_string(k) + " = e^(1)_{1-k}"; },
          [&] { return e_star == engine.elementary(1, 1 - k); });
    for (int p = -2; p <= pmax; ++p)
      check(report, [&] { return "phi^{1-p} e*_" + std::to_string(k) + " = e^(p)_{p-k}, p=" + std::to_string(p); },
            [&] { return shifted_phi_power(e_star, 1 - p) == engine.elementary(p, p - k); });
  }
  return report;
}

SuiteReport straighten_suite(const FamilyPtr& family, const SuiteOptions& opt) {
  const int count = opt.count.value_or(200);
  SuiteReport report = start("straighten", *family);
  report.parameters = {{"seed", std::to_string(opt.seed)}, {"count", std::to_string(count)}, {"entries", "-3..6"}, {"maxlength", "4"}};
  const SchurEngine engine(family);
  SplitMix64 rng(opt.seed);
  for (int n = 0; n < count; ++n) {
    std::vector<int> entries(static_cast<std::size_t>(rng.uniform(1, 4)));
    for (int& x : entries) x = rng.uniform(-3, 6);
    const IntegerVector v(std::move(entries));
    check(report, [&] { return "straightened vs raw determinant for (" + v.to_string() + ")"; }, [&] {
      const Poly raw = engine.jacobi_trudi_determinant(v, v.length());
      return engine.schur(v) == raw && engine.jacobi_trudi_determinant(v, v.length() + 1) == raw;
    });
  }
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"clifford", "newton",     "he",   "giambelli", "hook",
                                              "prop42",   "bernstein",  "correspondence", "heisenberg",
                                              "char",     "linrec",     "shifted", "straighten"};
  return names;
}

SuiteReport run_suite(std::string_view name, const FamilyPtr& family, const SuiteOptions& opt) {
  if (name == "clifford") return clifford_suite(family, opt);
  if (name == "newton") return newton_suite(family, opt);
  if (name == "he") return he_suite(family, opt);
  if (name == "giambelli") return giambelli_suite(family, opt);
  if (name == "hook") return hook_suite(family, opt);
  if (name == "prop42") return prop42_suite(family, opt);
  if (name == "bernstein") return bernstein_suite(family, opt);
  if (name == "correspondence") return correspondence_suite(opt);
  if (name == "heisenberg") return heisenberg_suite(family, opt);
  if (name == "char") return char_suite(opt);
  if (name == "linrec") return linrec_suite(family, opt);
  if (name == "shifted") return shifted_suite(opt);
  if (name == "straighten") return straighten_suite(family, opt);
  throw ParseError("unknown suite '" + std::string(name) + "'");
}

}  // namespace jtvo
