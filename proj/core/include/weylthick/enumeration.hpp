#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weylthick/bitset.hpp"
#include "weylthick/order.hpp"

namespace weylthick {

enum class EnumerationMode { list, count, stream };

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000ULL;

struct EnumerationOptions {
  /// Worker threads for the top-level branches; 1 runs inline.
  std::size_t jobs = 1;
  /// Search nodes before aborting with a partial result.
  std::uint64_t budget = kDefaultNodeBudget;
  /// COUNT mode caches residual subproblems with at most this many
  /// undecided points.
  std::size_t memo_threshold = 4096;
  /// Upper bound on cached subproblems.
  std::size_t memo_capacity = 1u << 22;
};

/// Reads WEYLTHICK_BUDGET if set, else kDefaultNodeBudget.
std::uint64_t default_budget_from_env();

struct EnumerationResult {
  /// Number of balanced thickenings; a lower bound when !complete.
  mpz_class count = 0;
  /// LIST mode only: member sets sorted lexicographically by member indices.
  std::vector<Bitset> thickenings;
  /// False when the budget ran out or a STREAM sink stopped the search.
  bool complete = true;
  std::uint64_t nodes = 0;
  /// Set when the antipode pairing fixes a point; count is then 0.
  std::optional<std::size_t> fixed_point;
};

/// STREAM sink; return false to stop the search.
using BalancedSink = std::function<bool(const Bitset&)>;

/// All thickenings Th with Th and w0 Th partitioning the orbit.
///
/// Branches on one antipode pair at a time, the pair of the smallest
/// undecided point first; including q forces its down-set in and the
/// antipodal up-set out. Pairs that are comparable are forced before the
/// search starts, after which no branch can fail, so every leaf is a
/// solution. COUNT additionally splits the undecided points into independent
/// components and caches their counts.
///
/// STREAM runs single-threaded and emits in lexicographic order; LIST and
/// COUNT results do not depend on `jobs`.
EnumerationResult enumerate_balanced(const std::shared_ptr<const OrderedOrbit>& orbit, EnumerationMode mode,
                                     const EnumerationOptions& options = {}, const BalancedSink& sink = {});

struct OrbitExistence {
  std::string label;  // "regular" or "vertex:i"
  std::size_t orbit_size = 0;
  std::optional<std::size_t> fixed_point;
  mpz_class count = 0;
  bool count_complete = true;
  bool exists = false;
};

struct ExistenceReport {
  std::string system;
  bool w0_is_minus_identity = false;
  std::vector<OrbitExistence> orbits;
  /// Violated assertions; empty means PASS.
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

/// Counts balanced thickenings on the regular orbit and every vertex orbit,
/// asserting existence on the regular orbit, and on all of them when
/// w0 = -id. Existence is decided by a first-solution search even when the
/// count exhausts the budget.
ExistenceReport existence_report(const std::shared_ptr<const WeylGroup>& group, const EnumerationOptions& options = {});

}  // namespace weylthick
