#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "weylthick/order.hpp"
#include "weylthick/rootdata.hpp"
#include "weylthick/verify/oracle.hpp"
#include "weylthick/weylgroup.hpp"

namespace weylthick::test {

/// Groups are cached by name so that orbits of one type share their group.
inline std::shared_ptr<const WeylGroup> group(const std::string& name) {
  static std::map<std::string, std::shared_ptr<const WeylGroup>> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto g = WeylGroup::generate(std::make_shared<const RootSystem>(parse_system(name)));
  cache.emplace(name, g);
  return g;
}

inline std::shared_ptr<const OrderedOrbit> regular(const std::string& name) {
  const auto g = group(name);
  return OrderedOrbit::build(g, iota_invariant_center(g->root_system()));
}

/// 0-based vertex index
inline std::shared_ptr<const OrderedOrbit> vertex(const std::string& name, std::size_t i) {
  const auto g = group(name);
  return OrderedOrbit::build(g, fundamental_vertex(g->root_system(), i));
}

inline std::vector<std::shared_ptr<const OrderedOrbit>> all_orbits(const std::string& name) {
  const auto g = group(name);
  std::vector<std::shared_ptr<const OrderedOrbit>> out{OrderedOrbit::build(g, iota_invariant_center(g->root_system()))};
  for (std::size_t i = 0; i < g->rank(); ++i) out.push_back(OrderedOrbit::build(g, fundamental_vertex(g->root_system(), i)));
  return out;
}

inline std::size_t point(const OrderedOrbit& o, const std::string& word) {
  return o.orbit().point_of(o.group().from_word(parse_word(word, o.group().rank())));
}

inline Bitset set_of(const OrderedOrbit& o, const std::vector<std::string>& words) {
  Bitset b(o.size());
  for (const auto& w : words) b.set(point(o, w));
  return b;
}

inline std::vector<std::string> words_of(const OrderedOrbit& o, const Bitset& b) {
  std::vector<std::string> out;
  b.for_each([&](std::size_t p) { out.push_back(format_word(o.group().element(o.orbit().rep(p)).word(), o.group().rank())); });
  return out;
}

inline std::vector<RationalVector> points(const OrderedOrbit& o) {
  std::vector<RationalVector> out;
  for (std::size_t p = 0; p < o.size(); ++p) out.push_back(o.orbit().point(p));
  return out;
}

inline oracle::Relation relation(const OrderedOrbit& o) {
  return oracle::unfolding_relation(o.orbit().root_system(), points(o));
}

inline oracle::Members members(const Bitset& b) {
  oracle::Members m(b.size(), 0);
  b.for_each([&](std::size_t i) { m[i] = 1; });
  return m;
}

inline Bitset bitset(const oracle::Members& m) {
  Bitset b(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) b.set(i);
  return b;
}

}  // namespace weylthick::test
