#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "weylthick/enumeration.hpp"
#include "weylthick/order.hpp"
#include "weylthick/rootdata.hpp"
#include "weylthick/thickening.hpp"

namespace weylthick {

/// Combinatorial dynamical-relation condition on one orbit poset:
/// p_prime <= w0 p in the folding order.
bool dyn_related(const OrderedOrbit& orbit, std::size_t p_prime, std::size_t p);

struct DiscontinuityReport {
  bool pass = true;
  std::size_t pairs_checked = 0;
  /// (p, p_prime), both outside the thickening, with dyn_related(p_prime, p)
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

/// Checks that no two points outside `th` are dynamically related. Rejects
/// non-fat input with PreconditionError unless `require_fat` is false.
DiscontinuityReport verify_discontinuity(const Thickening& th, bool require_fat = true);

/// True iff the diagram has a simple (label 3) edge, so that node removals
/// reduce it to A2 and no packing by pi/2-balls of root type exists.
/// Throws PreconditionError for rank one or reducible diagrams.
bool packing_reducible(const DynkinDiagram& diagram);

enum class WitnessStatus { pass, fail, theorem_silent, out_of_hypotheses };

std::string to_string(WitnessStatus status);

struct NonemptyDomainWitness {
  std::string system;
  WitnessStatus status = WitnessStatus::out_of_hypotheses;
  std::optional<bool> packing_obstruction;
  std::optional<bool> regular_balanced_exists;
  std::string message;
};

/// Model-level nonemptiness: for irreducible rank >= 2 diagrams with a simple
/// edge, both the packing obstruction and a balanced thickening of the
/// regular orbit must be present.
NonemptyDomainWitness nonempty_domain_witness(const std::shared_ptr<const WeylGroup>& group,
                                              const EnumerationOptions& options = {});

}  // namespace weylthick
