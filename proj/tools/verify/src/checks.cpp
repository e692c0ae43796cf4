#include "weylthick/verify/checks.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "weylthick/error.hpp"
#include "weylthick/modelcheck.hpp"
#include "weylthick/thickening.hpp"
#include "weylthick/verify/oracle.hpp"

namespace weylthick::verify {

namespace {

using Witness = std::optional<std::string>;

const std::vector<std::string> kSmallTypes = {"A1", "A2", "B2", "G2", "A1xA1", "A3", "B3", "C3"};

oracle::Members members_of(const Bitset& b) {
  oracle::Members m(b.size(), 0);
  b.for_each([&](std::size_t i) { m[i] = 1; });
  return m;
}

std::string word_at(const OrderedOrbit& o, std::size_t p) {
  return format_word(o.group().element(o.orbit().rep(p)).word(), o.group().rank());
}

std::string set_words(const OrderedOrbit& o, const Bitset& b) {
  std::string out = "{";
  b.for_each([&](std::size_t p) {
    if (out.size() > 1) out += ",";
    out += word_at(o, p);
  });
  return out + "}";
}

Bitset set_of_words(const OrderedOrbit& o, const std::vector<std::string>& words) {
  Bitset b(o.size());
  const auto& g = o.group();
  for (const auto& w : words) b.set(o.orbit().point_of(g.from_word(parse_word(w, g.rank()))));
  return b;
}

std::vector<std::shared_ptr<const OrderedOrbit>> all_vertex_and_regular(Runner& r, const std::string& name) {
  std::vector<std::shared_ptr<const OrderedOrbit>> out{r.regular_orbit(name)};
  for (std::size_t i = 0; i < r.group(name)->rank(); ++i) out.push_back(r.vertex_orbit(name, i));
  return out;
}

std::vector<Thickening> all_thickenings(const std::shared_ptr<const OrderedOrbit>& o) {
  std::vector<Thickening> out;
  for_each_thickening(o, [&](const Thickening& th) {
    out.push_back(th);
    return true;
  });
  return out;
}

Witness relation_matches(const OrderedOrbit& o) {
  std::vector<RationalVector> points;
  for (std::size_t p = 0; p < o.size(); ++p) points.push_back(o.orbit().point(p));
  const auto leq = oracle::unfolding_relation(o.orbit().root_system(), points);
  for (std::size_t p = 0; p < o.size(); ++p)
    for (std::size_t q = 0; q < o.size(); ++q)
      if (static_cast<bool>(leq[p][q]) != o.poset().leq(p, q))
        return word_at(o, p) + " <= " + word_at(o, q) + " differs from the unfolding oracle";
  return std::nullopt;
}

Witness check_fat_discontinuity(const std::shared_ptr<const OrderedOrbit>& o) {
  Witness bad;
  bool saw_non_fat_failure = false;
  bool saw_non_fat = false;
  for_each_thickening(o, [&](const Thickening& th) {
    if (is_fat(th)) {
      const auto rep = verify_discontinuity(th);
      if (!rep.pass) {
        bad = "fat " + set_words(*o, th.members()) + " has related outside pair";
        return false;
      }
    } else {
      saw_non_fat = true;
      if (!verify_discontinuity(th, false).pass) saw_non_fat_failure = true;
    }
    return true;
  });
  if (bad) return bad;
  if (saw_non_fat && !saw_non_fat_failure) return std::string("no non-fat thickening fails the check");
  return std::nullopt;
}

}  // namespace

void Runner::check(const std::string& module, const std::string& invariant,
                   const std::function<std::optional<std::string>()>& body) {
  if (stopped()) return;
  ++report_.checks;
  Witness witness;
  try {
    witness = body();
  } catch (const std::exception& e) {
    witness = std::string("exception: ") + e.what();
  }
  if (witness) {
    report_.failure = CheckFailure{module, invariant, *witness};
    if (log_) *log_ << "FAIL " << module << ": " << invariant << " -- " << *witness << "\n";
    return;
  }
  report_.passed.push_back(module + ": " + invariant);
  if (log_) *log_ << "ok   " << module << ": " << invariant << "\n";
}

std::shared_ptr<const WeylGroup> Runner::group(const std::string& name) {
  auto it = groups_.find(name);
  if (it != groups_.end()) return it->second;
  auto rs = std::make_shared<const RootSystem>(parse_system(name));
  auto g = WeylGroup::generate(rs);
  groups_.emplace(name, g);
  return g;
}

std::shared_ptr<const OrderedOrbit> Runner::regular_orbit(const std::string& name) {
  const auto key = std::make_pair(name, std::size_t{0});
  auto it = orbits_.find(key);
  if (it != orbits_.end()) return it->second;
  auto g = group(name);
  auto o = OrderedOrbit::build(g, iota_invariant_center(g->root_system()));
  orbits_.emplace(key, o);
  return o;
}

std::shared_ptr<const OrderedOrbit> Runner::vertex_orbit(const std::string& name, std::size_t vertex) {
  const auto key = std::make_pair(name, vertex + 1);
  auto it = orbits_.find(key);
  if (it != orbits_.end()) return it->second;
  auto g = group(name);
  auto o = OrderedOrbit::build(g, fundamental_vertex(g->root_system(), vertex));
  orbits_.emplace(key, o);
  return o;
}

void add_fast_checks(Runner& r, const EnumerationOptions& options) {
  r.check("rootdata", "roots are closed under simple reflections", [&]() -> Witness {
    for (const auto& name : kSmallTypes) {
      const auto& rs = r.group(name)->root_system();
      for (const auto& root : rs.roots())
        for (std::size_t i = 0; i < rs.rank(); ++i)
          if (!rs.find_root(rs.reflect_simple(root, i))) return name + ": s" + std::to_string(i + 1) + root.to_string();
    }
    return std::nullopt;
  });
  r.check("rootdata", "root counts match the classification", [&]() -> Witness {
    const std::map<std::string, std::size_t> expected = {{"A1", 2}, {"A2", 6},  {"B2", 8},     {"G2", 12},
                                                         {"A3", 12}, {"B3", 18}, {"C3", 18}, {"A1xA1", 4}};
    for (const auto& [name, count] : expected) {
      const auto n = r.group(name)->root_system().roots().size();
      if (n != count) return name + " has " + std::to_string(n) + " roots";
    }
    return std::nullopt;
  });
  r.check("rootdata", "every root is plus or minus a positive root", [&]() -> Witness {
    for (const auto& name : kSmallTypes) {
      const auto& rs = r.group(name)->root_system();
      const std::size_t n = rs.positive_count();
      if (rs.roots().size() != 2 * n) return name + ": odd root count";
      for (std::size_t i = 0; i < n; ++i) {
        if (!(rs.root(i + n) == -rs.root(i))) return name + ": root " + std::to_string(i) + " has no negative partner";
        for (const auto& c : rs.root_coefficients(i))
          if (c < 0) return name + ": positive root with a negative coefficient";
      }
    }
    return std::nullopt;
  });
  r.check("rootdata", "Cartan entries are normalized", [&]() -> Witness {
    for (const auto& name : kSmallTypes) {
      const auto& a = r.group(name)->root_system().cartan();
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
          const int v = a[i][j];
          if (i == j ? v != 2 : (v > 0 || v < -3)) return name + ": entry " + std::to_string(v);
        }
    }
    return std::nullopt;
  });
  r.check("rootdata", "angle class is symmetric and scale invariant", [&]() -> Witness {
    for (const auto& name : kSmallTypes) {
      const auto& rs = r.group(name)->root_system();
      for (const auto& u : rs.roots())
        for (const auto& v : rs.roots()) {
          const auto c = angle_class(rs, u, v);
          if (c != angle_class(rs, v, u)) return name + ": asymmetric at " + u.to_string() + v.to_string();
          if (c != angle_class(rs, Rational(3) * u, Rational(1, 2) * v))
            return name + ": not scale invariant at " + u.to_string() + v.to_string();
        }
    }
    return std::nullopt;
  });
  r.check("rootdata", "comparison with pi/2 agrees with the angle class", [&]() -> Witness {
    const Radius right = Radius::exact(1, 2);
    for (const auto& name : kSmallTypes) {
      const auto& rs = r.group(name)->root_system();
      for (const auto& u : rs.roots())
        for (const auto& v : rs.roots()) {
          const auto a = angle_class(rs, u, v);
          const auto c = compare_angle_to(rs, u, v, right).result;
          const auto expect = a == AngleClass::acute   ? Comparison::less
                              : a == AngleClass::right ? Comparison::equal
                                                       : Comparison::greater;
          if (c != expect) return name + ": " + u.to_string() + v.to_string();
        }
    }
    return std::nullopt;
  });
  r.check("rootdata", "the iota-invariant center is fixed by -w0", [&]() -> Witness {
    for (const auto& name : kSmallTypes) {
      auto g = r.group(name);
      const auto t = iota_invariant_center(g->root_system());
      if (!t.regular()) return name + ": center is singular";
      if (!(-g->act(g->w0_index(), t.vector()) == t.vector())) return name + ": -w0 moves the center";
    }
    return std::nullopt;
  });

  r.check("weylgroup", "order matches the matrix closure oracle", [&]() -> Witness {
    for (const auto& name : kSmallTypes) {
      auto g = r.group(name);
      const auto naive = oracle::naive_group(g->root_system());
      if (naive.elements.size() != g->order())
        return name + ": " + std::to_string(g->order()) + " vs " + std::to_string(naive.elements.size());
      if (naive.lengths[naive.longest] != g->root_system().positive_count()) return name + ": oracle w0 length";
    }
    return std::nullopt;
  });
  r.check("weylgroup", "l(w0 w) = l(w0) - l(w)", [&]() -> Witness {
    for (const auto& name : kSmallTypes) {
      auto g = r.group(name);
      const std::size_t top = longest_element(*g).length();
      for (std::size_t w = 0; w < g->order(); ++w)
        if (g->element(g->multiply(g->w0_index(), w)).length() != top - g->element(w).length())
          return name + ": at " + format_word(g->element(w).word(), g->rank());
    }
    return std::nullopt;
  });
  r.check("weylgroup", "w0 and iota are involutions", [&]() -> Witness {
    for (const auto& name : kSmallTypes) {
      auto g = r.group(name);
      if (g->multiply(g->w0_index(), g->w0_index()) != g->identity()) return name + ": w0^2 != e";
      const auto iota = iota_permutation(*g);
      for (std::size_t i = 0; i < iota.size(); ++i)
        if (iota[iota[i]] != i) return name + ": iota^2 != id";
    }
    return std::nullopt;
  });
  r.check("weylgroup", "stored words evaluate to the matrices and lengths count inversions", [&]() -> Witness {
    for (const auto& name : kSmallTypes) {
      auto g = r.group(name);
      const auto& rs = g->root_system();
      for (std::size_t w = 0; w < g->order(); ++w) {
        RationalMatrix m = RationalMatrix::identity(rs.ambient_dim());
        for (auto s : g->element(w).word()) m = m * rs.reflection_matrix(rs.simple_root(s));
        if (!(m == g->element(w).matrix())) return name + ": word of element " + std::to_string(w);
        if (oracle::inversion_count(rs, m) != g->element(w).length()) return name + ": inversions of " + std::to_string(w);
      }
    }
    return std::nullopt;
  });
  r.check("weylgroup", "orbit size times stabilizer order is |W|", [&]() -> Witness {
    for (const auto& name : kSmallTypes) {
      for (const auto& o : all_vertex_and_regular(r, name)) {
        const auto& orb = o->orbit();
        if (orb.size() * orb.stabilizer_order() != o->group().order()) return name + ": orbit of size " + std::to_string(orb.size());
        if (orb.stabilizer_elements().size() != orb.stabilizer_order()) return name + ": stabilizer listing";
      }
    }
    return std::nullopt;
  });

  r.check("order", "geometric and subword orders coincide", [&]() -> Witness {
    for (const auto& name : kSmallTypes)
      for (const auto& o : all_vertex_and_regular(r, name)) {
        const auto cv = cross_validate(o->orbit());
        if (!cv.agree()) {
          const auto [p, q] = cv.disagreements.front();
          return name + ": " + word_at(*o, p) + " vs " + word_at(*o, q);
        }
      }
    return std::nullopt;
  });
  r.check("order", "w0 reverses the order", [&]() -> Witness {
    for (const auto& name : kSmallTypes)
      for (const auto& o : all_vertex_and_regular(r, name))
        for (std::size_t p = 0; p < o->size(); ++p)
          for (std::size_t q = 0; q < o->size(); ++q)
            if (o->poset().leq(p, q) != o->poset().leq(o->antipode(q), o->antipode(p)))
              return name + ": " + word_at(*o, p) + ", " + word_at(*o, q);
    return std::nullopt;
  });
  r.check("order", "unique minimum and maximum, swapped by the pairing", [&]() -> Witness {
    for (const auto& name : kSmallTypes)
      for (const auto& o : all_vertex_and_regular(r, name)) {
        if (o->poset().minimum() != o->minimum() || o->poset().maximum() != o->maximum()) return name + ": extremes";
        if (o->antipode(o->minimum()) != o->maximum()) return name + ": pairing does not swap the extremes";
      }
    return std::nullopt;
  });
  r.check("order", "folding does not increase the angle to any type", [&]() -> Witness {
    for (const auto& name : kSmallTypes) {
      const auto& rs = r.group(name)->root_system();
      std::vector<RationalVector> grid;
      std::vector<Rational> c(rs.rank(), 0);
      std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (i == rs.rank()) {
          if (std::any_of(c.begin(), c.end(), [](const Rational& x) { return x != 0; }))
            grid.push_back(rs.weight_combination(c));
          return;
        }
        for (int v = 0; v <= 2; ++v) {
          c[i] = v;
          fill(i + 1);
        }
      };
      fill(0);
      for (const auto& o : all_vertex_and_regular(r, name))
        for (const auto& theta : grid)
          for (std::size_t p = 0; p < o->size(); ++p)
            for (std::size_t q = 0; q < o->size(); ++q)
              if (o->poset().leq(p, q) && rs.inner(o->orbit().point(p), theta) < rs.inner(o->orbit().point(q), theta))
                return name + ": " + word_at(*o, p) + " <= " + word_at(*o, q) + " at " + theta.to_string();
    }
    return std::nullopt;
  });

  r.check("thickening", "complementation is an involution", [&]() -> Witness {
    for (const auto& name : kSmallTypes)
      for (const auto& o : all_vertex_and_regular(r, name)) {
        if (o->size() > 12) continue;
        for (const auto& th : all_thickenings(o))
          if (!(complement(complement(th)) == th)) return name + ": " + set_words(*o, th.members());
      }
    return std::nullopt;
  });
  r.check("thickening", "fat and slim agree with the pair definitions", [&]() -> Witness {
    for (const auto& name : kSmallTypes)
      for (const auto& o : all_vertex_and_regular(r, name)) {
        if (o->size() > 12) continue;
        for (const auto& th : all_thickenings(o)) {
          const auto m = members_of(th.members());
          if (is_fat(th) != oracle::fat(o->antipodes(), m) || is_slim(th) != oracle::slim(o->antipodes(), m))
            return name + ": " + set_words(*o, th.members());
          const Bitset c = complement(th).members();
          if (is_fat(th) != c.is_subset_of(th.members()) || is_slim(th) != th.members().is_subset_of(c))
            return name + ": containment form at " + set_words(*o, th.members());
        }
      }
    return std::nullopt;
  });
  r.check("thickening", "unions and intersections are thickenings", [&]() -> Witness {
    for (const std::string name : {"A2", "B2", "A1xA1"}) {
      const auto o = r.regular_orbit(name);
      const auto all = all_thickenings(o);
      for (const auto& a : all)
        for (const auto& b : all) {
          if (!is_downward_closed(*o, unite(a, b).members()) || !is_downward_closed(*o, intersect(a, b).members()))
            return name + ": " + set_words(*o, a.members()) + " and " + set_words(*o, b.members());
        }
    }
    return std::nullopt;
  });
  r.check("thickening", "fat iff every related pair meets the thickening", [&]() -> Witness {
    for (const auto& name : kSmallTypes)
      for (const auto& o : all_vertex_and_regular(r, name)) {
        if (o->size() > 12) continue;
        for (const auto& th : all_thickenings(o)) {
          bool pairwise = true;
          for (std::size_t p = 0; p < o->size() && pairwise; ++p)
            for (std::size_t pp = 0; pp < o->size() && pairwise; ++pp)
              if (o->poset().leq(pp, o->antipode(p)) && !th.contains(p) && !th.contains(pp)) pairwise = false;
          if (pairwise != is_fat(th)) return name + ": " + set_words(*o, th.members());
        }
      }
    return std::nullopt;
  });
  r.check("thickening", "metric thickenings at pi/2 about the center are fat", [&]() -> Witness {
    for (const auto& name : kSmallTypes)
      for (const auto& o : all_vertex_and_regular(r, name)) {
        const auto met = metric_thickening(o, iota_invariant_center(o->orbit().root_system()), Radius::exact(1, 2));
        if (!is_fat(met.thickening)) return name + ": orbit of size " + std::to_string(o->size());
      }
    return std::nullopt;
  });
  r.check("thickening", "closure, complement and minimal fat examples in A2", [&]() -> Witness {
    const auto o = r.regular_orbit("A2");
    const auto lower = set_of_words(*o, {"e", "1", "2"});
    if (!(downward_closure(o, set_of_words(*o, {"12"})).members() == set_of_words(*o, {"e", "1", "2", "12"})))
      return std::string("closure of {12}");
    if (!(complement(Thickening(o, lower)).members() == lower)) return std::string("complement of {e,1,2}");
    if (!(minimal_fat(o).members() == lower)) return std::string("minimal fat of the regular orbit");
    const auto v = r.vertex_orbit("A2", 0);
    Bitset bottom(3);
    bottom.set(0);
    bottom.set(1);
    if (!(minimal_fat(v).members() == bottom)) return std::string("minimal fat of the 3-chain");
    return std::nullopt;
  });

  r.check("enumeration", "counts on rank-two regular orbits", [&]() -> Witness {
    const std::map<std::string, long> expected = {{"A2", 1}, {"B2", 2}, {"G2", 2}};
    for (const auto& [name, count] : expected) {
      const auto res = enumerate_balanced(r.regular_orbit(name), EnumerationMode::count, options);
      if (res.count != count || !res.complete) return name + ": count " + res.count.get_str();
    }
    const auto a2 = enumerate_balanced(r.regular_orbit("A2"), EnumerationMode::list, options);
    if (a2.thickenings.size() != 1 || !(a2.thickenings[0] == set_of_words(*r.regular_orbit("A2"), {"e", "1", "2"})))
      return std::string("A2 balanced thickening is not {e,1,2}");
    for (std::size_t i = 0; i < 2; ++i) {
      const auto res = enumerate_balanced(r.vertex_orbit("A2", i), EnumerationMode::count, options);
      if (res.count != 0 || !res.fixed_point) return "A2 vertex:" + std::to_string(i + 1) + " has no fixed-point witness";
    }
    return std::nullopt;
  });
  r.check("enumeration", "listed sets are balanced and deterministic across jobs", [&]() -> Witness {
    for (const auto& name : kSmallTypes)
      for (const auto& o : all_vertex_and_regular(r, name)) {
        auto one = options;
        one.jobs = 1;
        auto four = options;
        four.jobs = 4;
        const auto a = enumerate_balanced(o, EnumerationMode::list, one);
        const auto b = enumerate_balanced(o, EnumerationMode::list, four);
        const auto c = enumerate_balanced(o, EnumerationMode::count, four);
        if (a.thickenings != b.thickenings) return name + ": list depends on jobs";
        if (c.count != static_cast<unsigned long>(a.thickenings.size())) return name + ": count disagrees with list";
        for (const auto& m : a.thickenings)
          if (!is_balanced(Thickening(o, m)) || !is_downward_closed(*o, m)) return name + ": " + set_words(*o, m);
      }
    return std::nullopt;
  });

  r.check("modelcheck", "a point is related to its antipode, the minimum to everything", [&]() -> Witness {
    for (const auto& name : kSmallTypes)
      for (const auto& o : all_vertex_and_regular(r, name))
        for (std::size_t p = 0; p < o->size(); ++p) {
          if (!dyn_related(*o, o->antipode(p), p)) return name + ": antipode of " + word_at(*o, p);
          if (!dyn_related(*o, p, o->minimum())) return name + ": minimum and " + word_at(*o, p);
          if (dyn_related(*o, p, o->maximum()) != (p == o->minimum())) return name + ": maximum and " + word_at(*o, p);
        }
    const auto a2 = r.regular_orbit("A2");
    const auto& g = a2->group();
    const auto at = [&](const char* w) { return a2->orbit().point_of(g.from_word(parse_word(w, 2))); };
    if (dyn_related(*a2, at("21"), at("1"))) return std::string("A2: 21 related to 1");
    return std::nullopt;
  });
  r.check("modelcheck", "discontinuity holds for fat thickenings of A2 and B2", [&]() -> Witness {
    for (const std::string name : {"A2", "B2"})
      if (auto w = check_fat_discontinuity(r.regular_orbit(name))) return name + ": " + *w;
    return std::nullopt;
  });
  r.check("modelcheck", "packing check rejects rank one and reducible diagrams", [&]() -> Witness {
    for (const std::string name : {"A1", "A1xA1"}) {
      try {
        packing_reducible(r.group(name)->root_system().diagram());
        return name + " accepted";
      } catch (const PreconditionError&) {
      }
    }
    return std::nullopt;
  });
}

void add_paper_checks(Runner& r, const EnumerationOptions& options) {
  r.check("weylgroup", "w0 = -id exactly for A1, B_n, D_even, G2, F4", [&]() -> Witness {
    const std::vector<std::pair<std::string, bool>> table = {
        {"A1", true},  {"A2", false}, {"A3", false}, {"A4", false}, {"B2", true}, {"B3", true},
        {"B4", true},  {"C3", true},  {"D4", true},  {"D5", false}, {"G2", true}, {"F4", true}};
    for (const auto& [name, expect] : table) {
      auto g = r.group(name);
      if (is_minus_identity(g->root_system(), longest_element(*g)) != expect) return name;
      const auto iota = iota_permutation(*g);
      bool trivial = true;
      for (std::size_t i = 0; i < iota.size(); ++i) trivial = trivial && iota[i] == i;
      if (trivial != expect) return name + ": iota and w0 = -id disagree";
    }
    return std::nullopt;
  });
  r.check("modelcheck", "packing reduction applies except for B2 and G2", [&]() -> Witness {
    const std::vector<std::pair<std::string, bool>> table = {{"A2", true}, {"A3", true}, {"B3", true}, {"C3", true},
                                                             {"D4", true}, {"F4", true}, {"E6", true}, {"E7", true},
                                                             {"E8", true}, {"B2", false}, {"G2", false}};
    for (const auto& [name, expect] : table) {
      if (packing_reducible(parse_system(name).diagram()) != expect) return name;
    }
    return std::nullopt;
  });
  r.check("enumeration", "balanced thickenings exist where the lemmas say", [&]() -> Witness {
    for (const std::string name : {"A1", "A2", "B2", "G2", "A1xA1", "A3", "B3", "C3", "A4", "D4", "F4"}) {
      auto opts = options;
      if (name == "F4") opts.budget = std::min<std::uint64_t>(opts.budget, 200000);
      const auto rep = existence_report(r.group(name), opts);
      if (!rep.pass()) return name + ": " + rep.failures.front();
    }
    return std::nullopt;
  });
  r.check("thickening", "metric thickenings of iota-invariant types at pi/2 are balanced", [&]() -> Witness {
    std::mt19937_64 rng(20240601);
    for (const std::string name : {"A2", "B2", "G2", "A3"}) {
      const auto o = r.regular_orbit(name);
      const auto& rs = o->orbit().root_system();
      const auto iota = iota_permutation(o->group());
      int accepted = 0;
      for (int attempt = 0; accepted < 100; ++attempt) {
        if (attempt > 10000) return name + ": too many equator contacts";
        const auto theta = random_iota_invariant_type(rs, iota, rng);
        bool on_equator = false;
        for (std::size_t p = 0; p < o->size(); ++p) on_equator = on_equator || rs.inner(o->orbit().point(p), theta.vector()) == 0;
        if (on_equator) continue;
        ++accepted;
        const auto met = metric_thickening(o, theta, Radius::exact(1, 2));
        if (!is_balanced(met.thickening)) return name + ": type " + theta.vector().to_string();
      }
    }
    return std::nullopt;
  });
  r.check("thickening", "root thickenings do not depend on the regular type", [&]() -> Witness {
    std::mt19937_64 rng(7);
    for (const std::string name : {"A2", "B2", "G2", "A3"}) {
      auto g = r.group(name);
      const auto& rs = g->root_system();
      const auto eta = TypePoint::make(rs, rs.root(rs.positive_count() - 1));
      const auto root_orbit = OrderedOrbit::build(g, eta);
      const auto target = r.regular_orbit(name);
      std::vector<TypePoint> types;
      for (int i = 0; i < 10; ++i) types.push_back(random_regular_type(rs, rng));
      const auto th = root_thickening(root_orbit, target, types);
      for (const auto& t : types) {
        const auto one = root_thickening(root_orbit, target, std::span<const TypePoint>(&t, 1));
        if (!(one == th)) return name + ": type " + t.vector().to_string();
      }
      if (!is_fat(th)) return name + ": root thickening is not fat";
      if (name == "A2" && !(th.members() == set_of_words(*target, {"e", "1", "2"})))
        return std::string("A2 root thickening is not {e,1,2}");
    }
    return std::nullopt;
  });
  r.check("thickening", "transfer of fat thickenings is fat", [&]() -> Witness {
    for (const std::string name : {"A2", "B2", "G2", "A3"}) {
      auto target = r.regular_orbit(name);
      for (std::size_t i = 0; i < r.group(name)->rank(); ++i) {
        const auto src = r.vertex_orbit(name, i);
        for (const auto& th : all_thickenings(src)) {
          const auto out = transfer_thickening(th, target);
          if (is_fat(th) && !is_fat(out)) return name + ": " + set_words(*src, th.members());
        }
      }
    }
    return std::nullopt;
  });
  r.check("modelcheck", "nonempty-domain witness statuses", [&]() -> Witness {
    const std::vector<std::pair<std::string, WitnessStatus>> table = {{"A1", WitnessStatus::out_of_hypotheses},
                                                                      {"A1xA1", WitnessStatus::out_of_hypotheses},
                                                                      {"A2", WitnessStatus::pass},
                                                                      {"A3", WitnessStatus::pass},
                                                                      {"B2", WitnessStatus::theorem_silent},
                                                                      {"G2", WitnessStatus::theorem_silent},
                                                                      {"B3", WitnessStatus::pass},
                                                                      {"D4", WitnessStatus::pass},
                                                                      {"F4", WitnessStatus::pass}};
    for (const auto& [name, expect] : table) {
      const auto w = nonempty_domain_witness(r.group(name), options);
      if (w.status != expect) return name + ": " + to_string(w.status);
    }
    return std::nullopt;
  });
}

void add_oracle_checks(Runner& r, const EnumerationOptions& options) {
  const std::vector<std::string> types = {"A1", "A2", "B2", "G2", "A1xA1", "A1xA2", "A1xB2", "A1xA1xA1",
                                          "A3", "B3", "C3", "A4", "B4", "C4", "D4"};
  r.check("weylgroup", "group facts match the closure oracle through rank four and F4", [&]() -> Witness {
    std::vector<std::string> all = types;
    all.push_back("F4");
    for (const auto& name : all) {
      auto g = r.group(name);
      const auto& rs = g->root_system();
      const auto naive = oracle::naive_group(rs);
      if (naive.elements.size() != g->order()) return name + ": order";
      if (naive.lengths[naive.longest] != longest_element(*g).length()) return name + ": l(w0)";
      if (oracle::negates_simple_roots(rs, naive.elements[naive.longest]) != is_minus_identity(rs, longest_element(*g)))
        return name + ": w0 = -id";
      if (oracle::minus_longest_permutation(rs, naive) != iota_permutation(*g)) return name + ": iota";
    }
    return std::nullopt;
  });
  r.check("weylgroup", "l(w0 w) = l(w0) - l(w) on G2 and F4", [&]() -> Witness {
    for (const std::string name : {"G2", "F4"}) {
      auto g = r.group(name);
      const std::size_t top = longest_element(*g).length();
      for (std::size_t w = 0; w < g->order(); ++w)
        if (g->element(g->multiply(g->w0_index(), w)).length() != top - g->element(w).length()) return name;
    }
    return std::nullopt;
  });
  r.check("weylgroup", "orbits match the reflection closure oracle", [&]() -> Witness {
    for (const auto& name : types)
      for (const auto& o : all_vertex_and_regular(r, name)) {
        const auto naive = oracle::naive_orbit(o->orbit().root_system(), o->orbit().base().vector());
        if (naive.size() != o->size()) return name + ": orbit size";
        for (const auto& v : naive)
          if (!o->orbit().index_of(v)) return name + ": missing point " + v.to_string();
      }
    return std::nullopt;
  });
  r.check("order", "posets match the unfolding oracle", [&]() -> Witness {
    for (const auto& name : types)
      for (const auto& o : all_vertex_and_regular(r, name))
        if (auto w = relation_matches(*o)) return name + ": " + *w;
    for (std::size_t i = 0; i < 4; ++i)
      if (auto w = relation_matches(*r.vertex_orbit("F4", i))) return "F4: " + *w;
    return std::nullopt;
  });
  r.check("order", "antipodes match the oracle longest element", [&]() -> Witness {
    for (const auto& name : types) {
      const auto naive = oracle::naive_group(r.group(name)->root_system());
      for (const auto& o : all_vertex_and_regular(r, name)) {
        std::vector<RationalVector> points;
        for (std::size_t p = 0; p < o->size(); ++p) points.push_back(o->orbit().point(p));
        if (oracle::naive_antipodes(naive, points) != o->antipodes()) return name;
      }
    }
    return std::nullopt;
  });
  r.check("order", "geometric and subword orders coincide on F4 orbits", [&]() -> Witness {
    for (std::size_t i = 0; i < 4; ++i)
      if (!cross_validate(r.vertex_orbit("F4", i)->orbit()).agree()) return "F4 vertex:" + std::to_string(i + 1);
    if (!cross_validate(r.regular_orbit("F4")->orbit()).agree()) return std::string("F4 regular");
    return std::nullopt;
  });
  r.check("thickening", "thickenings match the ideal scan on orbits up to 16 points", [&]() -> Witness {
    for (const auto& name : types)
      for (const auto& o : all_vertex_and_regular(r, name)) {
        if (o->size() > 16) continue;
        std::vector<RationalVector> points;
        for (std::size_t p = 0; p < o->size(); ++p) points.push_back(o->orbit().point(p));
        const auto ideals = oracle::all_ideals(oracle::unfolding_relation(o->orbit().root_system(), points));
        std::set<oracle::Members> expect(ideals.begin(), ideals.end());
        std::set<oracle::Members> got;
        for (const auto& th : all_thickenings(o)) got.insert(members_of(th.members()));
        if (got != expect) return name + ": orbit of size " + std::to_string(o->size());
      }
    return std::nullopt;
  });
  r.check("enumeration", "balanced sets match the subset scan on orbits up to 16 points", [&]() -> Witness {
    for (const auto& name : types)
      for (const auto& o : all_vertex_and_regular(r, name)) {
        if (o->size() > 16) continue;
        std::vector<RationalVector> points;
        for (std::size_t p = 0; p < o->size(); ++p) points.push_back(o->orbit().point(p));
        const auto leq = oracle::unfolding_relation(o->orbit().root_system(), points);
        const auto expect = oracle::balanced_by_scan(leq, o->antipodes());
        const auto got = enumerate_balanced(o, EnumerationMode::list, options);
        std::vector<std::vector<std::size_t>> lists;
        for (const auto& b : got.thickenings) lists.push_back(b.indices());
        if (lists != expect)
          return name + ": orbit of size " + std::to_string(o->size()) + " lists " + std::to_string(lists.size()) +
                 ", scan finds " + std::to_string(expect.size());
      }
    return std::nullopt;
  });
  r.check("enumeration", "balanced sets are stable under diagram automorphisms", [&]() -> Witness {
    for (const std::string name : {"A2", "A3", "A4", "D4", "A1xA1", "A1xA1xA1"}) {
      const auto o = r.regular_orbit(name);
      const auto& rs = o->orbit().root_system();
      const auto res = enumerate_balanced(o, EnumerationMode::list, options);
      std::set<std::vector<std::size_t>> all;
      for (const auto& b : res.thickenings) all.insert(b.indices());
      for (const auto& perm : rs.diagram_automorphisms()) {
        std::vector<std::size_t> image(o->size());
        for (std::size_t p = 0; p < o->size(); ++p) {
          const auto q = o->orbit().index_of(oracle::permute_simple(rs, perm, o->orbit().point(p)));
          if (!q) return name + ": automorphism leaves the orbit";
          image[p] = *q;
        }
        for (const auto& m : all) {
          std::vector<std::size_t> mapped;
          for (auto p : m) mapped.push_back(image[p]);
          std::sort(mapped.begin(), mapped.end());
          if (!all.count(mapped)) return name + ": image of a balanced thickening is missing";
        }
      }
    }
    return std::nullopt;
  });
  r.check("modelcheck", "discontinuity holds for every fat thickening of orbits up to 48 points", [&]() -> Witness {
    for (const std::string name : {"A1", "A2", "B2", "G2", "A1xA1", "A1xA2", "A3", "B3", "C3"})
      for (const auto& o : all_vertex_and_regular(r, name)) {
        if (o->size() > 48) continue;
        if (auto w = check_fat_discontinuity(o)) return name + ": " + *w;
      }
    return std::nullopt;
  });
  r.check("thickening", "metric balls match a floating-point oracle", [&]() -> Witness {
    std::mt19937_64 rng(99);
    const std::vector<std::pair<int, int>> radii = {{1, 6}, {1, 4}, {1, 3}, {1, 2}, {2, 3}, {3, 4}, {5, 6}};
    for (const std::string name : {"A2", "B2", "G2", "A3", "B3"}) {
      for (const auto& o : all_vertex_and_regular(r, name)) {
        const auto& rs = o->orbit().root_system();
        for (int trial = 0; trial < 5; ++trial) {
          const auto theta = random_regular_type(rs, rng, 20);
          for (auto [k, d] : radii) {
            const auto radius = Radius::exact(k, d);
            const auto met = metric_thickening(o, theta, radius);
            for (std::size_t p = 0; p < o->size(); ++p) {
              const auto in = oracle::ball_member_float(rs, o->orbit().point(p), theta.vector(), radius.radians());
              if (in && *in != met.thickening.contains(p))
                return name + ": point " + word_at(*o, p) + " radius " + radius.to_string();
            }
          }
        }
      }
    }
    return std::nullopt;
  });
  r.check("thickening", "stars match the element scan", [&]() -> Witness {
    for (const std::string name : {"A2", "B2", "G2"}) {
      const auto naive = oracle::naive_group(r.group(name)->root_system());
      const auto target = r.regular_orbit(name);
      std::vector<RationalVector> tpoints;
      for (std::size_t p = 0; p < target->size(); ++p) tpoints.push_back(target->orbit().point(p));
      for (std::size_t i = 0; i < r.group(name)->rank(); ++i) {
        const auto src = r.vertex_orbit(name, i);
        std::vector<RationalVector> spoints;
        for (std::size_t p = 0; p < src->size(); ++p) spoints.push_back(src->orbit().point(p));
        for (const auto& th : all_thickenings(src)) {
          const auto expect = oracle::star_by_elements(naive, src->orbit().base().vector(), spoints,
                                                       members_of(th.members()), target->orbit().base().vector(), tpoints);
          if (members_of(star_members(src->orbit(), th.members(), target->orbit())) != expect)
            return name + ": star of " + set_words(*src, th.members());
        }
      }
    }
    return std::nullopt;
  });
  r.check("rootdata", "root types match the proportionality oracle", [&]() -> Witness {
    std::mt19937_64 rng(3);
    for (const auto& name : types) {
      const auto& rs = r.group(name)->root_system();
      std::vector<TypePoint> points;
      for (std::size_t i = 0; i < rs.rank(); ++i) points.push_back(fundamental_vertex(rs, i));
      points.push_back(iota_invariant_center(rs));
      for (int i = 0; i < 5; ++i) points.push_back(random_regular_type(rs, rng, 3));
      for (const auto& t : points) {
        bool expect = false;
        for (const auto& a : rs.roots()) expect = expect || oracle::proportional_positive(t.vector(), a);
        if (is_root_type(rs, t) != expect) return name + ": " + t.vector().to_string();
      }
    }
    return std::nullopt;
  });
  r.check("modelcheck", "packing reduction matches the induced-subdiagram oracle", [&]() -> Witness {
    for (const std::string name : {"A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "G2", "F4", "E6",
                                   "E7", "E8"}) {
      const auto d = parse_system(name).diagram();
      if (packing_reducible(d) != oracle::has_induced_a2(d)) return name;
    }
    return std::nullopt;
  });
}

SuiteReport run_suite(std::string_view name, const EnumerationOptions& options, std::ostream* log) {
  if (name != "fast" && name != "paper" && name != "full")
    throw ParseError("unknown suite '" + std::string(name) + "' (expected fast, paper or full)");
  Runner runner{std::string(name), log};
  if (name == "fast" || name == "full") add_fast_checks(runner, options);
  if (name == "paper" || name == "full") add_paper_checks(runner, options);
  if (name == "full") add_oracle_checks(runner, options);
  return runner.take();
}

}  // namespace weylthick::verify
