#include "doctest.h"
#include "helpers.hpp"
#include "weylthick/error.hpp"

using namespace weylthick;

TEST_SUITE("weylgroup") {
  TEST_CASE("group orders match the matrix closure oracle") {
    const std::vector<std::pair<const char*, std::size_t>> table = {
        {"A1", 2}, {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A1xA1", 4}, {"A3", 24}, {"B3", 48}, {"C3", 48}, {"G2xA1", 24}};
    for (const auto& [name, order] : table) {
      CAPTURE(name);
      const auto g = test::group(name);
      CHECK(g->order() == order);
      const auto naive = oracle::naive_group(g->root_system());
      CHECK(naive.elements.size() == order);
      CHECK(naive.lengths[naive.longest] == longest_element(*g).length());
      for (std::size_t w = 0; w < g->order(); ++w)
        CHECK(oracle::inversion_count(g->root_system(), g->element(w).matrix()) == g->element(w).length());
    }
  }

  TEST_CASE("A1xA1 is generated by two commuting reflections") {
    const auto g = test::group("A1xA1");
    REQUIRE(g->order() == 4);
    CHECK(g->multiply(g->from_word({0}), g->from_word({1})) == g->multiply(g->from_word({1}), g->from_word({0})));
  }

  TEST_CASE("longest element examples") {
    const auto a1 = test::group("A1");
    CHECK(format_word(longest_element(*a1).word(), 1) == "1");
    CHECK(longest_element(*a1).length() == 1);
    const auto a2 = test::group("A2");
    CHECK(format_word(longest_element(*a2).word(), 2) == "121");
    CHECK(a2->from_word(parse_word("212", 2)) == a2->w0_index());
    const auto b2 = test::group("B2");
    CHECK(longest_element(*b2).length() == 4);
    CHECK(longest_element(*b2).matrix() == [] {
      RationalMatrix m(2, 2);
      m(0, 0) = -1;
      m(1, 1) = -1;
      return m;
    }());
    CHECK(b2->w0_index() == b2->order() - 1);
  }

  TEST_CASE("w0 = -id examples") {
    CHECK(is_minus_identity(test::group("B2")->root_system(), longest_element(*test::group("B2"))));
    CHECK_FALSE(is_minus_identity(test::group("A2")->root_system(), longest_element(*test::group("A2"))));
    CHECK(is_minus_identity(test::group("D4")->root_system(), longest_element(*test::group("D4"))));
    CHECK_FALSE(is_minus_identity(test::group("A3")->root_system(), longest_element(*test::group("A3"))));
    const auto a1 = test::group("A1");
    CHECK(is_minus_identity(a1->root_system(), longest_element(*a1)));
  }

  TEST_CASE("iota examples agree with the oracle") {
    CHECK(iota_permutation(*test::group("B2")) == std::vector<std::size_t>{0, 1});
    CHECK(iota_permutation(*test::group("A2")) == std::vector<std::size_t>{1, 0});
    CHECK(iota_permutation(*test::group("A3")) == std::vector<std::size_t>{2, 1, 0});
    for (const char* name : {"A4", "D4", "G2", "A1xA2"}) {
      const auto g = test::group(name);
      CHECK(iota_permutation(*g) == oracle::minus_longest_permutation(g->root_system(), oracle::naive_group(g->root_system())));
    }
  }

  TEST_CASE("lengths are additive against w0") {
    for (const char* name : {"A3", "B3", "G2"}) {
      const auto g = test::group(name);
      const std::size_t top = longest_element(*g).length();
      CHECK(top == g->root_system().positive_count());
      for (std::size_t w = 0; w < g->order(); ++w) {
        CHECK(g->element(g->multiply(g->w0_index(), w)).length() == top - g->element(w).length());
        CHECK(g->multiply(w, g->inverse(w)) == g->identity());
      }
      CHECK(g->multiply(g->w0_index(), g->w0_index()) == g->identity());
    }
  }

  TEST_CASE("elements are ordered by length then reduced word") {
    const auto g = test::group("B3");
    for (std::size_t w = 1; w < g->order(); ++w) {
      const auto& a = g->element(w - 1);
      const auto& b = g->element(w);
      CHECK((a.length() < b.length() || (a.length() == b.length() && a.word() < b.word())));
    }
  }

  TEST_CASE("stored words are lexicographically least reduced words") {
    const auto g = test::group("A3");
    for (std::size_t w = 0; w < g->order(); ++w) {
      const auto& word = g->element(w).word();
      CHECK(g->from_word(word) == w);
      // every reduced word of w is at least as large
      for (std::size_t s = 0; s < g->rank(); ++s) {
        const std::size_t ws = g->right(w, s);
        if (g->element(ws).length() < g->element(w).length()) {
          Word alt = g->element(ws).word();
          alt.push_back(static_cast<std::uint8_t>(s));
          CHECK_FALSE(alt < word);
        }
      }
    }
  }

  TEST_CASE("word formatting") {
    CHECK(format_word({}, 3) == "e");
    CHECK(format_word({0, 1, 0}, 2) == "121");
    CHECK(format_word({0, 9, 1}, 10) == "1.10.2");
    CHECK(parse_word("e", 2).empty());
    CHECK(parse_word("1.10.2", 10) == Word{0, 9, 1});
    CHECK(parse_word("212", 2) == Word{1, 0, 1});
    CHECK_THROWS_AS(parse_word("13", 2), ParseError);
    CHECK_THROWS_AS(parse_word("1a", 2), ParseError);
  }

  TEST_CASE("the group bound is enforced") {
    CHECK_THROWS_AS(WeylGroup::generate(std::make_shared<const RootSystem>(parse_system("E8")), 1000), PreconditionError);
  }

  TEST_CASE("orbit examples") {
    const auto a2 = test::group("A2");
    const auto reg = Orbit::build(a2, iota_invariant_center(a2->root_system()));
    CHECK(reg->size() == 6);
    const auto v = Orbit::build(a2, fundamental_vertex(a2->root_system(), 0));
    CHECK(v->size() == 3);
    CHECK(v->stabilizer_order() == 2);
    const auto b2 = test::group("B2");
    const auto e1 = Orbit::build(b2, TypePoint::make(b2->root_system(), RationalVector{1, 0}));
    CHECK(e1->size() == 4);
    CHECK(e1->stabilizer_elements().size() == 2);
  }

  TEST_CASE("orbits match the reflection closure oracle and use minimal representatives") {
    for (const char* name : {"A3", "B3", "G2", "A1xA2"}) {
      for (const auto& o : test::all_orbits(name)) {
        const auto& orb = o->orbit();
        const auto naive = oracle::naive_orbit(orb.root_system(), orb.base().vector());
        CHECK(naive.size() == orb.size());
        CHECK(orb.size() * orb.stabilizer_order() == orb.group().order());
        CHECK(orb.rep(0) == orb.group().identity());
        for (std::size_t p = 0; p < orb.size(); ++p) {
          CHECK(orb.group().act(orb.rep(p), orb.base().vector()) == orb.point(p));
          for (auto w : orb.stabilizer_elements())
            CHECK(orb.group().element(orb.group().multiply(orb.rep(p), w)).length() >= orb.level(p));
          if (p > 0) CHECK(orb.level(p - 1) <= orb.level(p));
        }
      }
    }
  }

  TEST_CASE("orbit specs") {
    const auto rs = parse_system("A2");
    CHECK(parse_orbit_spec(rs, "regular").regular());
    CHECK(parse_orbit_spec(rs, "vertex:2").stabilizer_gens() == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(parse_orbit_spec(rs, "vertex:0"), ParseError);
    CHECK_THROWS_AS(parse_orbit_spec(rs, "vertex:3"), ParseError);
    CHECK_THROWS_AS(parse_orbit_spec(rs, "vertex:x"), ParseError);
    CHECK_THROWS_AS(parse_orbit_spec(rs, "(-1,1,0)"), ParseError);
    CHECK(parse_orbit_spec(rs, "(2,1,0)").regular());
  }
}
