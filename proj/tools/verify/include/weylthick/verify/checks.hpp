#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "weylthick/enumeration.hpp"
#include "weylthick/order.hpp"
#include "weylthick/weylgroup.hpp"

namespace weylthick::verify {

struct CheckFailure {
  std::string module;
  std::string invariant;
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  std::size_t checks = 0;
  std::vector<std::string> passed;  // "module: invariant"
  std::optional<CheckFailure> failure;
  bool pass() const { return !failure.has_value(); }
};

/// Runs named checks in order and stops at the first failure. A check body
/// returns nullopt on success or a witness string; exceptions count as
/// failures with the exception text as witness.
class Runner {
 public:
  explicit Runner(std::string suite, std::ostream* log = nullptr) : log_(log) { report_.suite = std::move(suite); }

  void check(const std::string& module, const std::string& invariant,
             const std::function<std::optional<std::string>()>& body);
  bool stopped() const { return report_.failure.has_value(); }
  SuiteReport take() { return std::move(report_); }

  /// Groups and ordered orbits are shared across checks.
  std::shared_ptr<const WeylGroup> group(const std::string& name);
  std::shared_ptr<const OrderedOrbit> regular_orbit(const std::string& name);
  std::shared_ptr<const OrderedOrbit> vertex_orbit(const std::string& name, std::size_t vertex);

 private:
  std::ostream* log_;
  SuiteReport report_;
  std::map<std::string, std::shared_ptr<const WeylGroup>> groups_;
  std::map<std::pair<std::string, std::size_t>, std::shared_ptr<const OrderedOrbit>> orbits_;
};

/// Small invariants of every module on types of rank <= 3.
void add_fast_checks(Runner& runner, const EnumerationOptions& options);
/// The assertions anchored in published statements: the w0 = -id table, the
/// packing table, existence of balanced thickenings, metric balancedness,
/// root-thickening independence, the nonempty-domain witness.
void add_paper_checks(Runner& runner, const EnumerationOptions& options);
/// Brute-force oracles up to their size caps.
void add_oracle_checks(Runner& runner, const EnumerationOptions& options);

/// "fast", "paper" or "full" (all three groups). Throws ParseError otherwise.
SuiteReport run_suite(std::string_view name, const EnumerationOptions& options = {}, std::ostream* log = nullptr);

}  // namespace weylthick::verify
