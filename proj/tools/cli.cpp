#include "cli.hpp"

#include "jtvo/boson.hpp"
#include "jtvo/errors.hpp"
#include "jtvo/schur.hpp"
#include "jtvo/suites.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace jtvo::cli {

namespace {

using Json = nlohmann::ordered_json;

Json poly_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [mono, coeff] : p.display_terms()) {
    Json factors = Json::array();
    for (const Factor& f : mono.factors()) factors.push_back(Json::array({f.gen.tag.name(), f.gen.index, f.mult}));
    terms.push_back(Json{{"monomial", factors}, {"coefficient", coeff.fraction()}});
  }
  return terms;
}

Json state_json(const BosonState& s) {
  Json terms = Json::array();
  for (const auto& [v, c] : s.terms()) {
    Json shape = Json::array();
    for (int part : v.shape.parts()) shape.push_back(part);
    terms.push_back(Json{{"shape", shape}, {"charge", v.charge}, {"coefficient", c.fraction()}});
  }
  return terms;
}

Json matrix_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

Json header(const std::string& command, const GeneratorFamily& family) {
  return Json{{"schema", 1}, {"command", command}, {"family", family.name()}};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct Settings {
  std::string family = "classical";
  std::string coeffs;
  bool json = false;
  bool no_self_check = false;

  std::string shape;
  int p = 0;
  int a = 0;
  int hook_m = 0;
  int hook_n = 0;
  std::string word;
  std::string state;
  int lo = -4;
  int hi = 4;

  std::string suite;
  std::optional<int> max_weight;
  std::optional<int> range;
  std::optional<int> kmax;
  std::optional<int> count;
  std::uint64_t seed = 1;
  std::optional<std::string> expect;
};

int run_verify_word(const Settings& s, const BosonFock& fock, std::ostream& out) {
  SuiteReport report;
  report.suite = "word";
  report.family = fock.family().name();
  report.parameters = {{"word", s.word}, {"state", s.state}};
  const BosonState result = fock.apply(OperatorWord::parse(s.word), parse_state(s.state));
  if (s.expect) {
    report.parameters["expect"] = *s.expect;
    const BosonState expected = parse_state_expression(*s.expect);
    report.record(result == expected, [&] { return "got " + result.to_string(); });
  } else {
    report.parameters["result"] = result.to_string();
    report.record(true, {});
  }
  out << (s.json ? report.to_json() : report.to_text());
  return report.ok() ? kOk : kViolation;
}

int dispatch(const CLI::App& app, const Settings& s, std::ostream& out) {
  // The linrec suite defaults to its own family.
  const bool linrec_default = s.suite == "linrec" && app.count("--family") == 0;
  const FamilyPtr family = make_family(linrec_default ? "linrec" : s.family, parse_coefficients(s.coeffs));
  const SchurEngine engine(family, EngineOptions{!s.no_self_check});
  const BosonFock fock(engine);

  if (app.got_subcommand("schur")) {
    const IntegerVector v = parse_integer_vector(s.shape);
    const Poly value = engine.schur(v);
    if (s.json) {
      Json j = header("schur", *family);
      j["shape"] = v.to_string();
      j["value"] = poly_json(value);
      j["text"] = value.to_string();
      emit(out, j);
    } else {
      out << value << '\n';
    }
    return kOk;
  }
  if (app.got_subcommand("elementary") || app.got_subcommand("hook")) {
    const bool elementary = app.got_subcommand("elementary");
    const Poly value = elementary ? engine.elementary(s.p, s.a) : engine.hook(s.hook_m, s.hook_n);
    if (s.json) {
      Json j = header(elementary ? "elementary" : "hook", *family);
      if (elementary) {
        j["p"] = s.p;
        j["a"] = s.a;
      } else {
        j["m"] = s.hook_m;
        j["n"] = s.hook_n;
      }
      j["value"] = poly_json(value);
      j["text"] = value.to_string();
      emit(out, j);
    } else {
      out << value << '\n';
    }
    return kOk;
  }
  if (app.got_subcommand("apply")) {
    const OperatorWord word = OperatorWord::parse(s.word);
    const BosonState state = parse_state(s.state);
    const BosonState result = fock.apply(word, state);
    if (s.json) {
      Json j = header("apply", *family);
      j["word"] = word.to_string();
      j["state"] = state.to_string();
      j["result"] = state_json(result);
      j["text"] = result.to_string();
      emit(out, j);
    } else {
      out << result.to_string() << '\n';
    }
    return kOk;
  }
  if (app.got_subcommand("matrices")) {
    const HEMatrices m = engine.he_matrices(s.lo, s.hi);
    const PolyMatrix product = m.h * m.e;
    const bool identity = product == PolyMatrix::identity(product.rows());
    if (s.json) {
      Json j = header("matrices", *family);
      j["lo"] = s.lo;
      j["hi"] = s.hi;
      j["h"] = matrix_json(m.h);
      j["e"] = matrix_json(m.e);
      j["product_is_identity"] = identity;
      emit(out, j);
    } else {
      out << "H:\n" << m.h.to_string() << "E:\n" << m.e.to_string() << "H*E = identity: " << (identity ? "yes" : "no") << '\n';
    }
    return identity ? kOk : kViolation;
  }
  // verify
  if (s.suite == "word") return run_verify_word(s, fock, out);
  SuiteOptions opt;
  opt.max_weight = s.max_weight;
  opt.range = s.range;
  opt.kmax = s.kmax;
  opt.count = s.count;
  opt.seed = s.seed;
  const SuiteReport report = run_suite(s.suite, family, opt);
  out << (s.json ? report.to_json() : report.to_text());
  return report.ok() ? kOk : kViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Generalized Jacobi-Trudi determinants, Clifford actions and vertex operator identities", "jtvo"};
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--family", s.family, "Generator family")
      ->check(CLI::IsMember({"classical", "lie", "shifted", "linrec"}))
      ->capture_default_str();
  app.add_option("--coeffs", s.coeffs, "Recurrence coefficients a0,a1,... for --family linrec (default 1,1)");
  app.add_flag("--json", s.json, "Machine-readable output");
  app.add_flag("--no-self-check", s.no_self_check, "Skip determinant stabilization checks");

  auto* schur = app.add_subcommand("schur", "Expand s_v for an integer vector v");
  schur->add_option("--shape", s.shape, "Comma-separated row data, e.g. 2,1")->required();

  auto* elementary = app.add_subcommand("elementary", "Expand e^(p)_a");
  elementary->add_option("--p", s.p)->required();
  elementary->add_option("--a", s.a)->required();

  auto* hook = app.add_subcommand("hook", "Expand the hook function s_(m|n)");
  hook->add_option("--m", s.hook_m)->required();
  hook->add_option("--n", s.hook_n)->required();

  auto* apply = app.add_subcommand("apply", "Apply a psi/psi* word to a basis state");
  apply->add_option("--word", s.word, "e.g. psi:3,psistar:0 (applied right to left)")->required();
  apply->add_option("--state", s.state, "lambda@m, e.g. 2,1@0")->required();

  auto* matrices = app.add_subcommand("matrices", "Truncated H and E matrices and their product");
  matrices->add_option("--lo", s.lo)->capture_default_str();
  matrices->add_option("--hi", s.hi)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("word");
  verify->add_option("suite", s.suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--maxweight", s.max_weight, "Largest partition weight in the sweep");
  verify->add_option("--range", s.range, "Index range (newton, hook, he) or charge bound (clifford, heisenberg)");
  verify->add_option("--kmax", s.kmax, "Largest operator index or shift in the sweep");
  verify->add_option("--count", s.count, "Number of random cases (straighten)");
  verify->add_option("--seed", s.seed, "Seed for randomized sweeps")->capture_default_str();
  verify->add_option("--word", s.word, "Word for the word suite");
  verify->add_option("--state", s.state, "State for the word suite");
  verify->add_option("--expect", s.expect, "Expected result for the word suite, e.g. \"-[1]@1\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "jtvo: " << e.what() << '\n' << "Run with --help for usage.\n";
    return kUsage;
  }
  if (verify->parsed() && s.suite == "word" && s.state.empty()) {
    err << "jtvo: verify word needs --state (and usually --word)\n";
    return kUsage;
  }

  try {
    return dispatch(app, s, out);
  } catch (const IdentityViolation& e) {
    err << "jtvo: identity violation: " << e.what() << '\n';
    return kViolation;
  } catch (const std::invalid_argument& e) {  // ParseError, ShapeError, UnsupportedFamily
    err << "jtvo: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "jtvo: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "jtvo: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace jtvo::cli
