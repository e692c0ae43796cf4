#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "weylthick/bitset.hpp"
#include "weylthick/order.hpp"
#include "weylthick/rootdata.hpp"

namespace weylthick {

/// A downward-closed subset of a Weyl orbit in the folding order.
///
/// Every constructor closes its input, so a Thickening is always a
/// thickening; the predicates below rely on that.
class Thickening {
 public:
  /// Smallest thickening containing `seed`.
  Thickening(std::shared_ptr<const OrderedOrbit> orbit, const Bitset& seed);

  static Thickening empty(std::shared_ptr<const OrderedOrbit> orbit);
  static Thickening full(std::shared_ptr<const OrderedOrbit> orbit);

  const OrderedOrbit& orbit() const { return *orbit_; }
  const std::shared_ptr<const OrderedOrbit>& orbit_ptr() const { return orbit_; }
  const Bitset& members() const { return members_; }
  bool contains(std::size_t p) const { return members_.test(p); }
  std::size_t size() const { return members_.count(); }

  friend bool operator==(const Thickening& a, const Thickening& b) { return a.members_ == b.members_; }

 private:
  std::shared_ptr<const OrderedOrbit> orbit_;
  Bitset members_;
};

/// True iff `set` is closed downward in the folding order.
bool is_downward_closed(const OrderedOrbit& orbit, const Bitset& set);

Thickening downward_closure(std::shared_ptr<const OrderedOrbit> orbit, std::span<const std::size_t> seed);
Thickening downward_closure(std::shared_ptr<const OrderedOrbit> orbit, const Bitset& seed);

/// {q : q <= p}, the Schubert cycle of p.
Thickening sublevel(std::shared_ptr<const OrderedOrbit> orbit, std::size_t p);

/// w0 (orbit - th).
Thickening complement(const Thickening& th);

Thickening unite(const Thickening& a, const Thickening& b);
Thickening intersect(const Thickening& a, const Thickening& b);

/// Each predicate is evaluated both on antipode pairs and by containment
/// against the complementary thickening; a mismatch throws VerificationError.
bool is_fat(const Thickening& th);
bool is_slim(const Thickening& th);
bool is_balanced(const Thickening& th);

/// Why no balanced thickening can exist in an orbit: the antipode pairing
/// fixes this point.
std::optional<std::size_t> balanced_impossible_witness(const OrderedOrbit& orbit);

struct MetricThickening {
  Thickening thickening;
  /// Members at angle exactly r (closed-ball boundary contact). Nonempty at
  /// r = pi/2 means the result cannot be slim.
  std::vector<std::size_t> boundary_contacts;
  bool approximate = false;
};

/// Closed ball {p : angle(point(p), theta) <= r} intersected with the orbit.
/// Ambiguous comparisons in approximate mode throw PreconditionError.
MetricThickening metric_thickening(std::shared_ptr<const OrderedOrbit> orbit, const TypePoint& theta, const Radius& r,
                                   double tolerance = kDefaultTolerance);

/// Points q of `target` whose closed chambers meet `source` (a subset of
/// `source_orbit`): some w with w * base_target = q has w * base_source in source.
Bitset star_members(const Orbit& source_orbit, const Bitset& source, const Orbit& target);

/// Star of (th intersected with its orbit) in `target`. Asserts that the
/// result is downward closed, and fat whenever th is fat.
Thickening transfer_thickening(const Thickening& th, std::shared_ptr<const OrderedOrbit> target);

/// Star of the pi/2-ball around a regular type intersected with the root
/// orbit W eta, computed for every type in `regular_types` and asserted
/// identical. Throws PreconditionError if eta is not of root type or a
/// supplied type is singular.
Thickening root_thickening(std::shared_ptr<const OrderedOrbit> root_orbit,
                           std::shared_ptr<const OrderedOrbit> target,
                           std::span<const TypePoint> regular_types);

/// Convenience: `samples` random regular types drawn from `seed`.
Thickening root_thickening(std::shared_ptr<const OrderedOrbit> root_orbit,
                           std::shared_ptr<const OrderedOrbit> target, std::size_t samples = 4,
                           std::uint64_t seed = 1);

/// {p : p <= w0 p}. Requires each antipode pair to be comparable; otherwise
/// throws PreconditionError naming the pair.
Thickening minimal_fat(std::shared_ptr<const OrderedOrbit> orbit);

/// Visits every thickening of the orbit (all order ideals), in no particular
/// order. The callback returns false to stop early.
void for_each_thickening(const std::shared_ptr<const OrderedOrbit>& orbit,
                         const std::function<bool(const Thickening&)>& visit);

}  // namespace weylthick
