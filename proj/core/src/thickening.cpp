#include "weylthick/thickening.hpp"

#include <random>
#include <string>

#include "weylthick/error.hpp"

namespace weylthick {

namespace {

Bitset close_down(const OrderedOrbit& orbit, const Bitset& seed) {
  if (seed.size() != orbit.size()) throw PreconditionError("member set has wrong size for the orbit");
  Bitset out(orbit.size());
  seed.for_each([&](std::size_t q) { out |= orbit.poset().down_set(q); });
  return out;
}

Bitset antipodal_image(const OrderedOrbit& orbit, const Bitset& set) {
  Bitset out(orbit.size());
  set.for_each([&](std::size_t p) { out.set(orbit.antipode(p)); });
  return out;
}

std::string word_of(const OrderedOrbit& orbit, std::size_t p) {
  const auto& g = orbit.group();
  return format_word(g.element(orbit.orbit().rep(p)).word(), g.rank());
}

void require_same_orbit(const Thickening& a, const Thickening& b) {
  if (a.orbit_ptr() != b.orbit_ptr()) throw PreconditionError("thickenings live on different orbits");
}

}  // namespace

Thickening::Thickening(std::shared_ptr<const OrderedOrbit> orbit, const Bitset& seed)
    : orbit_(std::move(orbit)), members_(close_down(*orbit_, seed)) {}

Thickening Thickening::empty(std::shared_ptr<const OrderedOrbit> orbit) {
  const std::size_t n = orbit->size();
  return Thickening(std::move(orbit), Bitset(n));
}

Thickening Thickening::full(std::shared_ptr<const OrderedOrbit> orbit) {
  const std::size_t n = orbit->size();
  return Thickening(std::move(orbit), Bitset(n, true));
}

bool is_downward_closed(const OrderedOrbit& orbit, const Bitset& set) {
  bool closed = true;
  set.for_each([&](std::size_t q) {
    if (closed && !orbit.poset().down_set(q).is_subset_of(set)) closed = false;
  });
  return closed;
}

Thickening downward_closure(std::shared_ptr<const OrderedOrbit> orbit, std::span<const std::size_t> seed) {
  Bitset b(orbit->size());
  for (auto p : seed) {
    if (p >= orbit->size()) throw PreconditionError("seed index " + std::to_string(p) + " outside the orbit");
    b.set(p);
  }
  return Thickening(std::move(orbit), b);
}

Thickening downward_closure(std::shared_ptr<const OrderedOrbit> orbit, const Bitset& seed) {
  return Thickening(std::move(orbit), seed);
}

Thickening sublevel(std::shared_ptr<const OrderedOrbit> orbit, std::size_t p) {
  if (p >= orbit->size()) throw PreconditionError("point index " + std::to_string(p) + " outside the orbit");
  const Bitset seed = orbit->poset().down_set(p);
  return Thickening(std::move(orbit), seed);
}

Thickening complement(const Thickening& th) {
  const auto& o = th.orbit();
  const Bitset image = antipodal_image(o, ~th.members());
  if (!is_downward_closed(o, image)) throw VerificationError("complementary set is not a thickening");
  return Thickening(th.orbit_ptr(), image);
}

Thickening unite(const Thickening& a, const Thickening& b) {
  require_same_orbit(a, b);
  const Bitset u = a.members() | b.members();
  if (!is_downward_closed(a.orbit(), u)) throw VerificationError("union of thickenings is not a thickening");
  return Thickening(a.orbit_ptr(), u);
}

Thickening intersect(const Thickening& a, const Thickening& b) {
  require_same_orbit(a, b);
  const Bitset i = a.members() & b.members();
  if (!is_downward_closed(a.orbit(), i)) throw VerificationError("intersection of thickenings is not a thickening");
  return Thickening(a.orbit_ptr(), i);
}

bool is_fat(const Thickening& th) {
  const auto& o = th.orbit();
  bool by_pairs = true;
  for (std::size_t p = 0; p < o.size() && by_pairs; ++p) by_pairs = th.contains(p) || th.contains(o.antipode(p));
  const bool by_complement = complement(th).members().is_subset_of(th.members());
  if (by_pairs != by_complement) throw VerificationError("fatness: pair test and complement test disagree");
  return by_pairs;
}

bool is_slim(const Thickening& th) {
  const auto& o = th.orbit();
  bool by_pairs = true;
  for (std::size_t p = 0; p < o.size() && by_pairs; ++p) by_pairs = !(th.contains(p) && th.contains(o.antipode(p)));
  const bool by_complement = th.members().is_subset_of(complement(th).members());
  if (by_pairs != by_complement) throw VerificationError("slimness: pair test and complement test disagree");
  return by_pairs;
}

bool is_balanced(const Thickening& th) {
  const bool by_pairs = is_fat(th) && is_slim(th);
  const bool by_equality = complement(th) == th;
  if (by_pairs != by_equality) throw VerificationError("balancedness: pair test and self-complement test disagree");
  return by_pairs;
}

std::optional<std::size_t> balanced_impossible_witness(const OrderedOrbit& orbit) {
  return orbit.antipode_fixed_point();
}

MetricThickening metric_thickening(std::shared_ptr<const OrderedOrbit> orbit, const TypePoint& theta, const Radius& r,
                                   double tolerance) {
  const auto& o = orbit->orbit();
  const auto& rs = o.root_system();
  Bitset ball(o.size());
  std::vector<std::size_t> contacts;
  for (std::size_t p = 0; p < o.size(); ++p) {
    const auto c = compare_angle_to(rs, o.point(p), theta.vector(), r, tolerance);
    if (c.ambiguous) {
      throw PreconditionError("angle between orbit point " + word_of(*orbit, p) + " and the center is within " +
                              std::to_string(tolerance) + " of the radius; comparison is ambiguous");
    }
    if (c.result != Comparison::greater) ball.set(p);
    if (c.result == Comparison::equal) contacts.push_back(p);
  }
  if (!is_downward_closed(*orbit, ball)) throw VerificationError("metric ball is not downward closed");
  return MetricThickening{Thickening(std::move(orbit), ball), std::move(contacts), !r.is_exact()};
}

Bitset star_members(const Orbit& source_orbit, const Bitset& source, const Orbit& target) {
  if (&source_orbit.group() != &target.group()) throw PreconditionError("star: orbits over different groups");
  if (source.size() != source_orbit.size()) throw PreconditionError("star: source set has wrong size");
  Bitset out(target.size());
  const std::size_t order = target.group().order();
  for (std::size_t w = 0; w < order; ++w) {
    if (source.test(source_orbit.point_of(w))) out.set(target.point_of(w));
  }
  return out;
}

Thickening transfer_thickening(const Thickening& th, std::shared_ptr<const OrderedOrbit> target) {
  const Bitset star = star_members(th.orbit().orbit(), th.members(), target->orbit());
  if (!is_downward_closed(*target, star)) throw VerificationError("transfer thickening is not downward closed");
  Thickening out(std::move(target), star);
  if (is_fat(th) && !is_fat(out)) throw VerificationError("transfer of a fat thickening is not fat");
  return out;
}

Thickening root_thickening(std::shared_ptr<const OrderedOrbit> root_orbit, std::shared_ptr<const OrderedOrbit> target,
                           std::span<const TypePoint> regular_types) {
  const auto& rs = root_orbit->orbit().root_system();
  if (!is_root_type(rs, root_orbit->orbit().base())) throw PreconditionError("root thickening needs a root type");
  if (regular_types.empty()) throw PreconditionError("root thickening needs at least one regular type");
  const Radius right_angle = Radius::exact(1, 2);
  std::optional<Thickening> result;
  for (const auto& theta : regular_types) {
    if (!theta.regular()) throw PreconditionError("root thickening: type " + theta.vector().to_string() + " is singular");
    const auto met = metric_thickening(root_orbit, theta, right_angle);
    if (!met.boundary_contacts.empty()) throw VerificationError("root orbit meets the equator of a regular type");
    Thickening th = transfer_thickening(met.thickening, target);
    if (!result) {
      result = std::move(th);
    } else if (!(th == *result)) {
      throw VerificationError("root thickening depends on the regular type " + theta.vector().to_string());
    }
  }
  return *result;
}

Thickening root_thickening(std::shared_ptr<const OrderedOrbit> root_orbit, std::shared_ptr<const OrderedOrbit> target,
                           std::size_t samples, std::uint64_t seed) {
  const auto& rs = root_orbit->orbit().root_system();
  std::mt19937_64 rng(seed);
  std::vector<TypePoint> types;
  for (std::size_t i = 0; i < std::max<std::size_t>(samples, 1); ++i) types.push_back(random_regular_type(rs, rng));
  return root_thickening(std::move(root_orbit), std::move(target), types);
}

Thickening minimal_fat(std::shared_ptr<const OrderedOrbit> orbit) {
  const auto& poset = orbit->poset();
  Bitset members(orbit->size());
  for (std::size_t p = 0; p < orbit->size(); ++p) {
    const std::size_t q = orbit->antipode(p);
    if (!poset.comparable(p, q)) {
      throw PreconditionError("antipode pair (" + word_of(*orbit, p) + ", " + word_of(*orbit, q) +
                              ") is not comparable; no unique minimal fat thickening");
    }
    if (poset.leq(p, q)) members.set(p);
  }
  if (!is_downward_closed(*orbit, members)) throw VerificationError("minimal fat set is not downward closed");
  Thickening th(orbit, members);
  if (!is_fat(th)) throw VerificationError("minimal fat thickening is not fat");
  members.for_each([&](std::size_t p) {
    Bitset above = poset.up_set(p) & members;
    if (above.count() != 1) return;  // not maximal
    Bitset smaller = members;
    smaller.reset(p);
    if (is_fat(Thickening(orbit, smaller)))
      throw VerificationError("minimal fat thickening is not minimal at " + word_of(*orbit, p));
  });
  return th;
}

void for_each_thickening(const std::shared_ptr<const OrderedOrbit>& orbit,
                         const std::function<bool(const Thickening&)>& visit) {
  const std::size_t n = orbit->size();
  std::vector<std::vector<std::size_t>> lower_covers(n);
  for (auto [p, q] : orbit->poset().covers()) lower_covers[q].push_back(p);
  // Orbit indices are a linear extension, so deciding points in index order
  // and admitting a point only when all its lower covers are in never fails.
  Bitset cur(n);
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (stop) return;
    if (i == n) {
      if (!visit(Thickening(orbit, cur))) stop = true;
      return;
    }
    self(self, i + 1);
    bool allowed = true;
    for (auto p : lower_covers[i]) allowed = allowed && cur.test(p);
    if (allowed) {
      cur.set(i);
      self(self, i + 1);
      cur.reset(i);
    }
  };
  rec(rec, 0);
}

}  // namespace weylthick
