#include <cstdlib>

#include "doctest.h"
#include "helpers.hpp"
#include "weylthick/enumeration.hpp"
#include "weylthick/error.hpp"
#include "weylthick/thickening.hpp"

using namespace weylthick;

namespace {

std::vector<std::vector<std::size_t>> lists(const EnumerationResult& r) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& b : r.thickenings) out.push_back(b.indices());
  return out;
}

}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("A2 regular has exactly the balanced thickening {e,1,2}") {
    const auto o = test::regular("A2");
    const auto r = enumerate_balanced(o, EnumerationMode::list);
    REQUIRE(r.thickenings.size() == 1);
    CHECK(r.thickenings[0] == test::set_of(*o, {"e", "1", "2"}));
    CHECK(r.count == 1);
    CHECK(r.complete);
  }

  TEST_CASE("B2 and G2 regular orbits") {
    const auto b2 = test::regular("B2");
    const auto rb = enumerate_balanced(b2, EnumerationMode::list);
    REQUIRE(rb.thickenings.size() == 2);
    CHECK(rb.thickenings[0] == test::set_of(*b2, {"e", "1", "2", "12"}));
    CHECK(rb.thickenings[1] == test::set_of(*b2, {"e", "1", "2", "21"}));
    const auto g2 = test::regular("G2");
    const auto rg = enumerate_balanced(g2, EnumerationMode::list);
    REQUIRE(rg.thickenings.size() == 2);
    CHECK(rg.thickenings[0] == test::set_of(*g2, {"e", "1", "2", "12", "21", "121"}));
    CHECK(rg.thickenings[1] == test::set_of(*g2, {"e", "1", "2", "12", "21", "212"}));
  }

  TEST_CASE("odd chains have a fixed point and no balanced thickening") {
    for (std::size_t i = 0; i < 2; ++i) {
      const auto o = test::vertex("A2", i);
      const auto r = enumerate_balanced(o, EnumerationMode::count);
      CHECK(r.count == 0);
      REQUIRE(r.fixed_point.has_value());
      CHECK(o->antipode(*r.fixed_point) == *r.fixed_point);
      CHECK(balanced_impossible_witness(*o) == r.fixed_point);
    }
  }

  TEST_CASE("LIST agrees with the subset scan on orbits of at most 16 points") {
    for (const char* name : {"A1", "A2", "B2", "G2", "A1xA1", "A1xA1xA1", "A3", "B3", "C3", "A1xA2", "A1xB2", "A4", "D4"}) {
      for (const auto& o : test::all_orbits(name)) {
        if (o->size() > 16) continue;
        CAPTURE(name);
        CAPTURE(o->size());
        const auto expect = oracle::balanced_by_scan(test::relation(*o), o->antipodes());
        const auto r = enumerate_balanced(o, EnumerationMode::list);
        CHECK(lists(r) == expect);
        CHECK(enumerate_balanced(o, EnumerationMode::count).count == static_cast<unsigned long>(expect.size()));
      }
    }
  }

  TEST_CASE("COUNT agrees with plain backtracking on larger orbits") {
    const std::vector<std::pair<const char*, unsigned long>> table = {
        {"A3", 10}, {"B3", 29}, {"C3", 29}, {"G2xA1", 10}, {"A4", 4608}, {"D4", 114864}};
    for (const auto& [name, expected] : table) {
      CAPTURE(name);
      const auto o = test::regular(name);
      const auto oracle_count = oracle::count_balanced_backtracking(test::relation(*o), o->antipodes());
      CHECK(oracle_count == expected);
      const auto r = enumerate_balanced(o, EnumerationMode::count);
      CHECK(r.complete);
      CHECK(r.count == static_cast<unsigned long>(oracle_count));
    }
  }

  TEST_CASE("every vertex orbit through rank four agrees with backtracking") {
    for (const char* name : {"A3", "B3", "C3", "A4", "B4", "C4", "D4"}) {
      for (std::size_t i = 0; i < test::group(name)->rank(); ++i) {
        const auto o = test::vertex(name, i);
        CAPTURE(name);
        CAPTURE(i);
        const auto r = enumerate_balanced(o, EnumerationMode::count);
        CHECK(r.count == static_cast<unsigned long>(oracle::count_balanced_backtracking(test::relation(*o), o->antipodes())));
      }
    }
  }

  TEST_CASE("listed sets are balanced thickenings") {
    for (const char* name : {"A3", "B3", "G2xA1"}) {
      const auto o = test::regular(name);
      for (const auto& m : enumerate_balanced(o, EnumerationMode::list).thickenings) {
        CHECK(is_downward_closed(*o, m));
        CHECK(is_balanced(Thickening(o, m)));
      }
    }
  }

  TEST_CASE("results do not depend on jobs") {
    for (const char* name : {"A3", "B3", "A4", "D4"}) {
      const auto o = test::regular(name);
      EnumerationOptions one;
      const auto base_count = enumerate_balanced(o, EnumerationMode::count, one).count;
      const auto base_list = name[0] == 'D' ? std::vector<Bitset>{} : enumerate_balanced(o, EnumerationMode::list, one).thickenings;
      for (std::size_t jobs : {2, 4, 8}) {
        EnumerationOptions opts;
        opts.jobs = jobs;
        CHECK(enumerate_balanced(o, EnumerationMode::count, opts).count == base_count);
        if (!base_list.empty()) CHECK(enumerate_balanced(o, EnumerationMode::list, opts).thickenings == base_list);
      }
    }
  }

  TEST_CASE("the cache does not change counts") {
    const auto o = test::regular("A4");
    EnumerationOptions none;
    none.memo_capacity = 0;
    EnumerationOptions tiny;
    tiny.memo_threshold = 8;
    const auto base = enumerate_balanced(o, EnumerationMode::count).count;
    CHECK(enumerate_balanced(o, EnumerationMode::count, none).count == base);
    CHECK(enumerate_balanced(o, EnumerationMode::count, tiny).count == base);
  }

  TEST_CASE("STREAM emits LIST order and can stop early") {
    const auto o = test::regular("B3");
    const auto all = enumerate_balanced(o, EnumerationMode::list).thickenings;
    std::vector<Bitset> streamed;
    const auto r = enumerate_balanced(o, EnumerationMode::stream, {}, [&](const Bitset& b) {
      streamed.push_back(b);
      return true;
    });
    CHECK(streamed == all);
    CHECK(r.count == static_cast<unsigned long>(all.size()));
    std::size_t seen = 0;
    const auto stopped = enumerate_balanced(o, EnumerationMode::stream, {}, [&](const Bitset&) { return ++seen < 3; });
    CHECK(seen == 3);
    CHECK_FALSE(stopped.complete);
  }

  TEST_CASE("budget exhaustion yields a partial count") {
    const auto o = test::regular("B4");
    EnumerationOptions small;
    small.budget = 50;
    const auto r = enumerate_balanced(o, EnumerationMode::count, small);
    CHECK_FALSE(r.complete);
    CHECK(r.count < 49404510);
    const auto full = enumerate_balanced(o, EnumerationMode::count);
    CHECK(full.complete);
    CHECK(full.count == 49404510);
  }

  TEST_CASE("the environment sets the default budget") {
    ::setenv("WEYLTHICK_BUDGET", "1234", 1);
    CHECK(default_budget_from_env() == 1234);
    ::setenv("WEYLTHICK_BUDGET", "12x", 1);
    CHECK_THROWS_AS(default_budget_from_env(), ParseError);
    ::unsetenv("WEYLTHICK_BUDGET");
    CHECK(default_budget_from_env() == kDefaultNodeBudget);
  }

  TEST_CASE("existence report examples") {
    const auto a2 = existence_report(test::group("A2"));
    CHECK(a2.pass());
    CHECK_FALSE(a2.w0_is_minus_identity);
    REQUIRE(a2.orbits.size() == 3);
    CHECK(a2.orbits[0].label == "regular");
    CHECK(a2.orbits[0].count == 1);
    for (std::size_t i = 1; i < 3; ++i) {
      CHECK(a2.orbits[i].count == 0);
      CHECK(a2.orbits[i].fixed_point.has_value());
    }
    const auto b2 = existence_report(test::group("B2"));
    CHECK(b2.pass());
    CHECK(b2.w0_is_minus_identity);
    CHECK(b2.orbits[0].count == 2);
    CHECK(b2.orbits[1].count == 1);
    CHECK(b2.orbits[2].count == 1);
  }

  TEST_CASE("F4 regular orbit admits a balanced thickening") {
    EnumerationOptions opts;
    opts.budget = 20000;
    const auto rep = existence_report(test::group("F4"), opts);
    CHECK(rep.pass());
    REQUIRE_FALSE(rep.orbits.empty());
    CHECK(rep.orbits[0].exists);
    CHECK(rep.orbits[0].count >= 1);
    Bitset first;
    enumerate_balanced(test::regular("F4"), EnumerationMode::stream, {}, [&](const Bitset& b) {
      first = b;
      return false;
    });
    const auto o = test::regular("F4");
    CHECK(is_balanced(Thickening(o, first)));
    CHECK(is_downward_closed(*o, first));
  }
}
