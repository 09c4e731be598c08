#pragma once

#include "jtvo/coefficient.hpp"
#include "jtvo/family.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jtvo {

// "classical", "lie", "shifted" or "linrec" (with coefficients a_0..a_l,
// default 1,1). Throws ParseError on unknown names.
FamilyPtr make_family(std::string_view name, const std::vector<Coefficient>& coeffs = {});
std::vector<Coefficient> parse_coefficients(std::string_view text);

// Result of one verification sweep. Rendering is deterministic: no
// timings, parameters in key order.
struct SuiteReport {
  std::string suite;
  std::string family;
  std::map<std::string, std::string> parameters;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::optional<std::string> first_counterexample;

  // Counts one case; `describe` is only called for the first failure.
  void record(bool ok, const std::function<std::string()>& describe);
  // Folds another report's counts into this one.
  void absorb(const SuiteReport& other);
  bool ok() const { return failures == 0; }

  std::string to_text() const;
  std::string to_json() const;
};

// Knobs shared by all suites; unset values take the suite default.
struct SuiteOptions {
  std::optional<int> max_weight{};
  std::optional<int> range{};
  std::optional<int> kmax{};
  std::uint64_t seed = 1;
  std::optional<int> count{};
};

SuiteReport clifford_suite(const FamilyPtr& family, const SuiteOptions& opt = {});
SuiteReport newton_suite(const FamilyPtr& family, const SuiteOptions& opt = {});
SuiteReport he_suite(const FamilyPtr& family, const SuiteOptions& opt = {});
SuiteReport giambelli_suite(const FamilyPtr& family, const SuiteOptions& opt = {});
SuiteReport hook_suite(const FamilyPtr& family, const SuiteOptions& opt = {});
SuiteReport prop42_suite(const FamilyPtr& family, const SuiteOptions& opt = {});
SuiteReport bernstein_suite(const FamilyPtr& family, const SuiteOptions& opt = {});
SuiteReport correspondence_suite(const SuiteOptions& opt = {});
SuiteReport heisenberg_suite(const FamilyPtr& family, const SuiteOptions& opt = {});
SuiteReport char_suite(const SuiteOptions& opt = {});
SuiteReport linrec_suite(const FamilyPtr& family, const SuiteOptions& opt = {});
SuiteReport shifted_suite(const SuiteOptions& opt = {});
SuiteReport straighten_suite(const FamilyPtr& family, const SuiteOptions& opt = {});

// Names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();
// Dispatches by name; families are ignored by suites bound to one family.
SuiteReport run_suite(std::string_view name, const FamilyPtr& family, const SuiteOptions& opt = {});

// Small portable generator (splitmix64) so seeded sweeps reproduce on
// every platform and standard library.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [lo, hi] by rejection sampling.
  int uniform(int lo, int hi);

private:
  std::uint64_t state_;
};

}  // namespace jtvo
