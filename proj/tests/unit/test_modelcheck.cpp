#include "doctest.h"
#include "helpers.hpp"
#include "weylthick/error.hpp"
#include "weylthick/modelcheck.hpp"

using namespace weylthick;

TEST_SUITE("modelcheck") {
  TEST_CASE("dyn_related examples") {
    const auto o = test::regular("A2");
    for (std::size_t p = 0; p < o->size(); ++p) {
      CHECK(dyn_related(*o, p, o->minimum()));
      CHECK(dyn_related(*o, p, o->maximum()) == (p == o->minimum()));
      CHECK(dyn_related(*o, o->antipode(p), p));
    }
    CHECK_FALSE(dyn_related(*o, test::point(*o, "21"), test::point(*o, "1")));
  }

  TEST_CASE("dyn_related is the order against the antipode") {
    for (const char* name : {"B3", "G2xA1"}) {
      const auto o = test::regular(name);
      const auto leq = test::relation(*o);
      for (std::size_t pp = 0; pp < o->size(); ++pp)
        for (std::size_t p = 0; p < o->size(); ++p) CHECK(dyn_related(*o, pp, p) == static_cast<bool>(leq[pp][o->antipode(p)]));
    }
  }

  TEST_CASE("verify_discontinuity examples") {
    const auto a2 = test::regular("A2");
    const auto full = verify_discontinuity(Thickening::full(a2));
    CHECK(full.pass);
    CHECK(full.pairs_checked == 0);
    const auto lower = verify_discontinuity(Thickening(a2, test::set_of(*a2, {"e", "1", "2"})));
    CHECK(lower.pass);
    CHECK(lower.pairs_checked == 9);
    const auto b2 = test::regular("B2");
    for (const auto& m : enumerate_balanced(b2, EnumerationMode::list).thickenings) {
      const auto rep = verify_discontinuity(Thickening(b2, m));
      CHECK(rep.pass);
      CHECK(rep.pairs_checked == 16);
    }
  }

  TEST_CASE("non-fat thickenings are rejected or fail") {
    const auto o = test::regular("A2");
    const Thickening bottom(o, test::set_of(*o, {"e"}));
    CHECK_THROWS_AS(verify_discontinuity(bottom), PreconditionError);
    const auto rep = verify_discontinuity(bottom, false);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.violation.has_value());
    const auto [p, pp] = *rep.violation;
    CHECK_FALSE(bottom.contains(p));
    CHECK_FALSE(bottom.contains(pp));
    CHECK(dyn_related(*o, pp, p));
  }

  TEST_CASE("discontinuity on every fat thickening of orbits up to 48 points") {
    for (const char* name : {"A1", "A2", "B2", "G2", "A1xA1", "A3", "B3", "C3", "A1xA2", "G2xA1"}) {
      for (const auto& o : test::all_orbits(name)) {
        if (o->size() > 48) continue;
        bool non_fat_failed = false;
        bool any_non_fat = false;
        std::size_t fat_seen = 0;
        for_each_thickening(o, [&](const Thickening& th) {
          if (is_fat(th)) {
            ++fat_seen;
            CHECK(verify_discontinuity(th).pass);
          } else {
            any_non_fat = true;
            non_fat_failed = non_fat_failed || !verify_discontinuity(th, false).pass;
          }
          return true;
        });
        CHECK(fat_seen > 0);
        CHECK(non_fat_failed == any_non_fat);
      }
    }
  }

  TEST_CASE("packing_reducible examples and oracle") {
    CHECK(packing_reducible(parse_system("A2").diagram()));
    CHECK_FALSE(packing_reducible(parse_system("B2").diagram()));
    CHECK_FALSE(packing_reducible(parse_system("G2").diagram()));
    CHECK(packing_reducible(parse_system("F4").diagram()));
    for (const char* name : {"A3", "A4", "B3", "B4", "C3", "C4", "D4", "E6", "E7", "E8", "F4", "G2", "B2"}) {
      const auto d = parse_system(name).diagram();
      CHECK(packing_reducible(d) == oracle::has_induced_a2(d));
    }
    CHECK_THROWS_AS(packing_reducible(parse_system("A1").diagram()), PreconditionError);
    CHECK_THROWS_AS(packing_reducible(parse_system("A2xA1").diagram()), PreconditionError);
  }

  TEST_CASE("nodes removals reduce diagrams with a simple edge to A2") {
    auto d = parse_system("F4").diagram();
    d = d.remove_node(3);
    CHECK(d.node_count() == 3);
    d = d.remove_node(2);
    CHECK(d.node_count() == 2);
    CHECK(d.label(0, 1) == 3);
  }

  TEST_CASE("nonempty-domain witness examples") {
    const auto a3 = nonempty_domain_witness(test::group("A3"));
    CHECK(a3.status == WitnessStatus::pass);
    CHECK(a3.packing_obstruction == true);
    CHECK(a3.regular_balanced_exists == true);
    const auto b2 = nonempty_domain_witness(test::group("B2"));
    CHECK(b2.status == WitnessStatus::theorem_silent);
    CHECK(b2.message.find("theorem silent") != std::string::npos);
    const auto a1 = nonempty_domain_witness(test::group("A1"));
    CHECK(a1.status == WitnessStatus::out_of_hypotheses);
    CHECK(to_string(WitnessStatus::pass) == "PASS");
    CHECK(to_string(WitnessStatus::theorem_silent) == "THEOREM_SILENT");
  }
}
