#include "weylthick/serialize.hpp"

namespace weylthick {

namespace {

std::string word_of(const Orbit& orbit, std::size_t p) {
  const auto& g = orbit.group();
  return format_word(g.element(orbit.rep(p)).word(), g.rank());
}

}  // namespace

json vector_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& c : v.coords()) out.push_back(to_string(c));
  return out;
}

json orbit_words_json(const Orbit& orbit) {
  json out = json::array();
  for (std::size_t p = 0; p < orbit.size(); ++p) out.push_back(word_of(orbit, p));
  return out;
}

json orbit_json(const Orbit& orbit) {
  json points = json::array();
  for (std::size_t p = 0; p < orbit.size(); ++p) {
    points.push_back({{"index", p}, {"word", word_of(orbit, p)}, {"coords", vector_json(orbit.point(p))}});
  }
  json stab = json::array();
  for (auto s : orbit.base().stabilizer_gens()) stab.push_back(s + 1);
  return {{"size", orbit.size()},
          {"stabilizer_order", orbit.stabilizer_order()},
          {"stabilizer_generators", stab},
          {"base", vector_json(orbit.base().vector())},
          {"regular", orbit.base().regular()},
          {"points", points}};
}

json poset_json(const OrderedOrbit& orbit) {
  json covers = json::array();
  for (auto [p, q] : orbit.poset().covers()) covers.push_back({p, q});
  return {{"elements", orbit_words_json(orbit.orbit())},
          {"covers", covers},
          {"antipode", orbit.antipodes()},
          {"minimum", orbit.minimum()},
          {"maximum", orbit.maximum()}};
}

json thickening_json(const Thickening& th) {
  const bool fat = is_fat(th);
  const bool slim = is_slim(th);
  return {{"orbit", orbit_words_json(th.orbit().orbit())},
          {"members", th.members().indices()},
          {"fat", fat},
          {"slim", slim},
          {"balanced", fat && slim}};
}

json thickening_json(const std::shared_ptr<const OrderedOrbit>& orbit, const Bitset& members) {
  return thickening_json(Thickening(orbit, members));
}

json group_info_json(const WeylGroup& group) {
  const auto& rs = group.root_system();
  const auto& w0 = longest_element(group);
  json cartan = rs.cartan();
  json components = json::array();
  for (const auto& c : rs.components()) {
    json idx = json::array();
    for (auto i : c.simple_indices) idx.push_back(i + 1);
    components.push_back({{"name", c.name}, {"simple_roots", idx}});
  }
  json iota = json::array();
  for (auto i : iota_permutation(group)) iota.push_back(i + 1);
  return {{"system", rs.name()},
          {"rank", rs.rank()},
          {"roots", rs.roots().size()},
          {"positive_roots", rs.positive_count()},
          {"order", group.order()},
          {"w0_length", w0.length()},
          {"w0_word", format_word(w0.word(), rs.rank())},
          {"w0_minus_identity", is_minus_identity(rs, w0)},
          {"iota", iota},
          {"cartan", cartan},
          {"components", components}};
}

json discontinuity_json(const OrderedOrbit& orbit, const DiscontinuityReport& report) {
  json out = {{"result", report.pass ? "PASS" : "FAIL"}, {"pairs_checked", report.pairs_checked}};
  if (report.violation) {
    const auto [p, pp] = *report.violation;
    out["violation"] = {{"p", p},
                        {"p_prime", pp},
                        {"p_word", word_of(orbit.orbit(), p)},
                        {"p_prime_word", word_of(orbit.orbit(), pp)}};
  }
  return out;
}

json existence_json(const ExistenceReport& report) {
  json orbits = json::array();
  for (const auto& o : report.orbits) {
    json row = {{"orbit", o.label},
                {"size", o.orbit_size},
                {"count", o.count.get_str()},
                {"count_complete", o.count_complete},
                {"exists", o.exists}};
    if (o.fixed_point) row["fixed_point"] = *o.fixed_point;
    orbits.push_back(row);
  }
  json failures = report.failures;
  return {{"system", report.system},
          {"w0_minus_identity", report.w0_is_minus_identity},
          {"result", report.pass() ? "PASS" : "FAIL"},
          {"orbits", orbits},
          {"failures", failures}};
}

json witness_json(const NonemptyDomainWitness& w) {
  json out = {{"system", w.system}, {"result", to_string(w.status)}, {"message", w.message}};
  if (w.packing_obstruction) out["packing_obstruction"] = *w.packing_obstruction;
  if (w.regular_balanced_exists) out["regular_balanced_exists"] = *w.regular_balanced_exists;
  return out;
}

}  // namespace weylthick
