#include "weylthick/modelcheck.hpp"

#include "weylthick/error.hpp"

namespace weylthick {

bool dyn_related(const OrderedOrbit& orbit, std::size_t p_prime, std::size_t p) {
  if (p_prime >= orbit.size() || p >= orbit.size()) throw PreconditionError("dyn_related: index outside the orbit");
  return orbit.poset().leq(p_prime, orbit.antipode(p));
}

DiscontinuityReport verify_discontinuity(const Thickening& th, bool require_fat) {
  if (require_fat && !is_fat(th)) throw PreconditionError("verify_discontinuity needs a fat thickening");
  const auto& o = th.orbit();
  const Bitset outside = ~th.members();
  DiscontinuityReport report;
  outside.for_each([&](std::size_t p) {
    if (report.violation) return;
    // points p_prime with p_prime <= w0 p that are also outside
    const Bitset related = o.poset().down_set(o.antipode(p)) & outside;
    report.pairs_checked += outside.count();
    if (related.any()) {
      report.pass = false;
      report.violation = std::make_pair(p, related.find_first());
    }
  });
  return report;
}

bool packing_reducible(const DynkinDiagram& diagram) {
  if (diagram.node_count() < 2) throw PreconditionError("packing reduction needs rank >= 2");
  if (!diagram.irreducible()) throw PreconditionError("packing reduction needs an irreducible diagram");
  return diagram.has_simple_edge();
}

std::string to_string(WitnessStatus status) {
  switch (status) {
    case WitnessStatus::pass:
      return "PASS";
    case WitnessStatus::fail:
      return "FAIL";
    case WitnessStatus::theorem_silent:
      return "THEOREM_SILENT";
    case WitnessStatus::out_of_hypotheses:
      return "OUT_OF_HYPOTHESES";
  }
  return "?";
}

NonemptyDomainWitness nonempty_domain_witness(const std::shared_ptr<const WeylGroup>& group,
                                              const EnumerationOptions& options) {
  const auto& rs = group->root_system();
  NonemptyDomainWitness w;
  w.system = rs.name();
  if (rs.rank() < 2) {
    w.message = "rank one: outside the hypotheses (irreducible, higher rank)";
    return w;
  }
  if (!rs.diagram().irreducible()) {
    w.message = "reducible diagram: outside the hypotheses (irreducible, higher rank)";
    return w;
  }
  w.packing_obstruction = packing_reducible(rs.diagram());
  if (!*w.packing_obstruction) {
    w.status = WitnessStatus::theorem_silent;
    w.message = "no simple edge (B2 or G2): packing obstruction does not apply, theorem silent";
    return w;
  }
  auto regular = OrderedOrbit::build(group, iota_invariant_center(rs));
  EnumerationOptions first = options;
  first.budget = std::max<std::uint64_t>(options.budget, 4 * regular->size());
  const auto found = enumerate_balanced(regular, EnumerationMode::stream, first, [](const Bitset&) { return false; });
  w.regular_balanced_exists = found.count > 0;
  if (*w.regular_balanced_exists) {
    w.status = WitnessStatus::pass;
    w.message = "diagram reduces to A2 and the regular orbit carries a balanced thickening";
  } else {
    w.status = WitnessStatus::fail;
    w.message = "diagram reduces to A2 but no balanced thickening of the regular orbit was found";
  }
  return w;
}

}  // namespace weylthick
