#pragma once

#include "json.hpp"
#include "weylthick/enumeration.hpp"
#include "weylthick/modelcheck.hpp"
#include "weylthick/order.hpp"
#include "weylthick/thickening.hpp"
#include "weylthick/weylgroup.hpp"

// JSON documents for the command-line tool. Rationals are "p/q" strings and
// elements are reduced-word strings, so no output contains a float.

namespace weylthick {

using json = nlohmann::json;

json vector_json(const RationalVector& v);

/// Reduced words of the orbit representatives, in orbit order.
json orbit_words_json(const Orbit& orbit);

/// { "size", "stabilizer_order", "base", "points": [{ "index", "word", "coords" }] }
json orbit_json(const Orbit& orbit);

/// { "elements": words, "covers": [[p, q], ...], "antipode": [...] }
json poset_json(const OrderedOrbit& orbit);

/// { "orbit": words, "members": indices, "fat", "slim", "balanced" }
json thickening_json(const Thickening& th);
json thickening_json(const std::shared_ptr<const OrderedOrbit>& orbit, const Bitset& members);

json group_info_json(const WeylGroup& group);
json discontinuity_json(const OrderedOrbit& orbit, const DiscontinuityReport& report);
json existence_json(const ExistenceReport& report);
json witness_json(const NonemptyDomainWitness& witness);

}  // namespace weylthick
