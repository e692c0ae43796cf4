#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "weylthick/bitset.hpp"
#include "weylthick/weylgroup.hpp"

namespace weylthick {

/// Finite partial order stored as a dense reflexive, transitive bit matrix.
class Poset {
 public:
  Poset() = default;
  /// `below[q]` is the set {p : p <= q}. Must already be reflexive and
  /// transitive; throws VerificationError if not, or if antisymmetry fails.
  explicit Poset(std::vector<Bitset> below);

  std::size_t size() const { return below_.size(); }
  bool leq(std::size_t p, std::size_t q) const { return below_[q].test(p); }
  bool comparable(std::size_t p, std::size_t q) const { return leq(p, q) || leq(q, p); }
  const Bitset& down_set(std::size_t q) const { return below_[q]; }
  const Bitset& up_set(std::size_t p) const { return above_[p]; }

  /// Covering pairs (p, q) with p < q and nothing strictly between,
  /// sorted by (q, p).
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

  std::optional<std::size_t> minimum() const;
  std::optional<std::size_t> maximum() const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.below_ == b.below_; }

 private:
  std::vector<Bitset> below_;
  std::vector<Bitset> above_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

/// Folding order by reachability under special foldings: from a point q,
/// every positive root alpha with <q, alpha> < 0 yields the folded point
/// r_alpha q below it. This is the authoritative definition.
Poset folding_leq_geometric(const Orbit& orbit);

/// Bruhat order on W via the subword property of the stored reduced word of v.
bool bruhat_leq(const WeylGroup& g, std::size_t u, std::size_t v);

/// {u : u <= v}: products of all subwords of the stored reduced word of v.
Bitset bruhat_lower_interval(const WeylGroup& g, std::size_t v);

/// Bruhat order on minimal coset representatives, indexed like the orbit.
Poset quotient_poset(const Orbit& orbit);

struct CrossValidation {
  std::size_t pairs_checked = 0;
  /// (p, q) where the two orders disagree on p <= q
  std::vector<std::pair<std::size_t, std::size_t>> disagreements;
  bool agree() const { return disagreements.empty(); }
};

/// Compares the geometric and subword orders pair by pair.
CrossValidation cross_validate(const Orbit& orbit);
CrossValidation cross_validate(const Poset& geometric, const Poset& subword);

/// p -> index of w0 * point(p).
std::vector<std::size_t> antipode_pairing(const Orbit& orbit);

/// An orbit together with its folding order and antipode pairing; the
/// shared context of thickenings.
///
/// Construction runs cross_validate and throws VerificationError on the
/// first disagreement.
class OrderedOrbit {
 public:
  static std::shared_ptr<const OrderedOrbit> build(std::shared_ptr<const Orbit> orbit);
  static std::shared_ptr<const OrderedOrbit> build(std::shared_ptr<const WeylGroup> group, TypePoint base);

  const Orbit& orbit() const { return *orbit_; }
  const std::shared_ptr<const Orbit>& orbit_ptr() const { return orbit_; }
  const WeylGroup& group() const { return orbit_->group(); }
  const Poset& poset() const { return poset_; }
  std::size_t size() const { return orbit_->size(); }
  std::size_t antipode(std::size_t p) const { return antipode_[p]; }
  const std::vector<std::size_t>& antipodes() const { return antipode_; }
  /// A point fixed by w0, if any; balanced thickenings exist only without one.
  std::optional<std::size_t> antipode_fixed_point() const;

  std::size_t minimum() const { return 0; }
  std::size_t maximum() const { return antipode_[0]; }

 private:
  OrderedOrbit() = default;
  std::shared_ptr<const Orbit> orbit_;
  Poset poset_;
  std::vector<std::size_t> antipode_;
};

}  // namespace weylthick
