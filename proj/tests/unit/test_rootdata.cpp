#include <cstdio>
#include <fstream>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "weylthick/error.hpp"

using namespace weylthick;

namespace {

/// Roots as the closure of the simple roots under simple reflections.
std::set<RationalVector> closure_roots(const RootSystem& rs) {
  std::set<RationalVector> out;
  for (const auto& a : rs.simple_roots())
    for (const auto& v : oracle::naive_orbit(rs, a)) out.insert(v);
  return out;
}

}  // namespace

TEST_SUITE("rootdata") {
  TEST_CASE("parse_system builds the classified root sets") {
    const auto a2 = parse_system("A2");
    CHECK(a2.rank() == 2);
    CHECK(a2.roots().size() == 6);
    const auto a1 = parse_system("A1");
    CHECK(a1.rank() == 1);
    REQUIRE(a1.roots().size() == 2);
    CHECK(a1.root(1) == -a1.root(0));
    CHECK(parse_system("B2").roots().size() == 8);
    CHECK(parse_system("G2").roots().size() == 12);
  }

  TEST_CASE("root sets equal the reflection closure of the simple roots") {
    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "A1xA1", "G2xA1", "E6"}) {
      CAPTURE(name);
      const auto rs = parse_system(name);
      const auto expect = closure_roots(rs);
      const std::set<RationalVector> got(rs.roots().begin(), rs.roots().end());
      CHECK(got == expect);
      for (std::size_t i = 0; i < rs.positive_count(); ++i) CHECK(rs.root(rs.negative_of(i)) == -rs.root(i));
    }
  }

  TEST_CASE("positive roots are ordered by height") {
    const auto rs = parse_system("B3");
    Rational last = 0;
    for (std::size_t i = 0; i < rs.positive_count(); ++i) {
      Rational h = 0;
      for (const auto& c : rs.root_coefficients(i)) {
        CHECK(c >= 0);
        h += c;
      }
      CHECK(h >= last);
      last = h;
    }
    CHECK(last == 5);
  }

  TEST_CASE("unknown and malformed type specs are parse errors") {
    CHECK_THROWS_AS(parse_system("Z3"), ParseError);
    CHECK_THROWS_AS(parse_system("A0"), ParseError);
    CHECK_THROWS_AS(parse_system("D3"), ParseError);
    CHECK_THROWS_AS(parse_system("E5"), ParseError);
    CHECK_THROWS_AS(parse_system("A2x"), ParseError);
    CHECK_THROWS_AS(parse_system(""), ParseError);
  }

  TEST_CASE("direct sums concatenate factors") {
    const auto rs = parse_system("A1xA1");
    CHECK(rs.rank() == 2);
    CHECK(rs.roots().size() == 4);
    CHECK(rs.components().size() == 2);
    CHECK_FALSE(rs.diagram().irreducible());
    CHECK(parse_system("G2xA1").roots().size() == 14);
  }

  TEST_CASE("Cartan matrices are realized with the same combinatorics") {
    const auto g2 = from_cartan_matrix({{2, -1}, {-3, 2}});
    CHECK(g2.roots().size() == 12);
    CHECK(g2.diagram().label(0, 1) == 6);
    const auto b3 = from_cartan_matrix({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
    CHECK(b3.roots().size() == 18);
    CHECK(test::group("B3")->order() == WeylGroup::generate(std::make_shared<const RootSystem>(b3))->order());
    CHECK(from_cartan_matrix({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}).roots().size() == 48);
  }

  TEST_CASE("invalid Cartan matrices are rejected") {
    CHECK_THROWS_AS(from_cartan_matrix({{2, -1}, {0, 2}}), PreconditionError);
    CHECK_THROWS_AS(from_cartan_matrix({{2, 1}, {1, 2}}), PreconditionError);
    CHECK_THROWS_AS(from_cartan_matrix({{3, -1}, {-1, 2}}), PreconditionError);
    CHECK_THROWS_AS(from_cartan_matrix({{2, -2}, {-2, 2}}), PreconditionError);
    CHECK_THROWS_AS(from_cartan_matrix({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}), PreconditionError);
    CHECK_THROWS_AS(from_cartan_matrix({{2, -1}}), PreconditionError);
  }

  TEST_CASE("Cartan matrix documents are read from JSON files") {
    const std::string path = "weylthick_test_c3.json";
    {
      std::ofstream f(path);
      f << "[[2,-1,0],[-1,2,-1],[0,-2,2]]";
    }
    const auto rs = parse_system(path);
    CHECK(rs.roots().size() == 18);
    {
      std::ofstream f(path);
      f << "[[2,-1],[x]]";
    }
    CHECK_THROWS_AS(parse_system(path), ParseError);
    std::remove(path.c_str());
  }

  TEST_CASE("Dynkin labels follow the bond multiplicity") {
    CHECK(parse_system("A2").diagram().label(0, 1) == 3);
    CHECK(parse_system("B2").diagram().label(0, 1) == 4);
    CHECK(parse_system("G2").diagram().label(0, 1) == 6);
    CHECK_FALSE(parse_system("A1xA1").diagram().label(0, 1).has_value());
    const auto f4 = parse_system("F4").diagram();
    CHECK(f4.label(0, 1) == 3);
    CHECK(f4.label(1, 2) == 4);
    CHECK(f4.label(2, 3) == 3);
  }

  TEST_CASE("angle_class examples") {
    const auto a2 = parse_system("A2");
    CHECK(angle_class(a2, a2.simple_root(0), a2.simple_root(0)) == AngleClass::acute);
    CHECK(angle_class(a2, a2.simple_root(0), a2.simple_root(1)) == AngleClass::obtuse);
    const auto b2 = parse_system("B2");
    CHECK(angle_class(b2, RationalVector{1, 0}, RationalVector{0, 1}) == AngleClass::right);
    CHECK_THROWS_AS(angle_class(b2, RationalVector{0, 0}, RationalVector{0, 1}), PreconditionError);
  }

  TEST_CASE("angle_class is symmetric and scale invariant") {
    const auto rs = parse_system("G2");
    for (const auto& u : rs.roots())
      for (const auto& v : rs.roots()) {
        CHECK(angle_class(rs, u, v) == angle_class(rs, v, u));
        CHECK(angle_class(rs, u, v) == angle_class(rs, Rational(7, 3) * u, Rational(5) * v));
      }
  }

  TEST_CASE("compare_angle_to examples") {
    const auto a2 = parse_system("A2");
    const auto half = Radius::exact(1, 2);
    CHECK(compare_angle_to(a2, a2.simple_root(0), a2.simple_root(0), half).result == Comparison::less);
    CHECK(compare_angle_to(a2, a2.simple_root(0), a2.simple_root(1), half).result == Comparison::greater);
    CHECK(compare_angle_to(a2, a2.simple_root(0), a2.simple_root(1), Radius::exact(2, 3)).result == Comparison::equal);
    const auto b2 = parse_system("B2");
    CHECK(compare_angle_to(b2, RationalVector{1, 0}, RationalVector{0, 1}, half).result == Comparison::equal);
    CHECK(compare_angle_to(b2, RationalVector{1, 0}, RationalVector{1, 1}, Radius::exact(1, 4)).result ==
          Comparison::equal);
    CHECK(compare_angle_to(b2, RationalVector{1, 0}, RationalVector{1, 1}, Radius::exact(1, 6)).result ==
          Comparison::greater);
    CHECK(compare_angle_to(b2, RationalVector{1, 0}, RationalVector{1, 1}, Radius::exact(1, 3)).result ==
          Comparison::less);
  }

  TEST_CASE("approximate radii compare cosines and flag ties") {
    const auto b2 = parse_system("B2");
    const auto r = Radius::parse("1.0");
    CHECK_FALSE(r.is_exact());
    const auto c = compare_angle_to(b2, RationalVector{1, 0}, RationalVector{1, 1}, r);
    CHECK(c.approximate);
    CHECK_FALSE(c.ambiguous);
    CHECK(c.result == Comparison::less);
    const auto tie = compare_angle_to(b2, RationalVector{1, 0}, RationalVector{1, 1}, Radius::approximate(0.25 * 3.14159265358979323846));
    CHECK(tie.ambiguous);
  }

  TEST_CASE("radius parsing") {
    CHECK(Radius::parse("pi/2").is_exact());
    CHECK(Radius::parse("2pi/3").to_string() == "2pi/3");
    CHECK(Radius::parse("5*pi/6").to_string() == "5pi/6");
    CHECK(Radius::parse("2pi/4").to_string() == "pi/2");
    CHECK_FALSE(Radius::parse("pi/5").is_exact());
    CHECK_THROWS_AS(Radius::parse("half"), ParseError);
    CHECK_THROWS_AS(Radius::parse("4.0"), PreconditionError);
    CHECK_THROWS_AS(Radius::exact(1, 5), PreconditionError);
  }

  TEST_CASE("iota-invariant centers") {
    const auto a1 = parse_system("A1");
    const auto c1 = iota_invariant_center(a1);
    CHECK(a1.inner(c1.vector(), a1.simple_root(0)) > 0);
    const auto a2 = parse_system("A2");
    const auto c2 = iota_invariant_center(a2);
    CHECK(c2.regular());
    CHECK(a2.inner(c2.vector(), a2.simple_root(0)) == a2.inner(c2.vector(), a2.simple_root(1)));
    const auto b2 = parse_system("B2");
    const auto c = iota_invariant_center(b2);
    for (const auto& a : b2.simple_roots()) CHECK(b2.inner(c.vector(), a) > 0);
  }

  TEST_CASE("fundamental weights are dual to the coroots") {
    for (const char* name : {"A3", "B3", "C3", "G2", "F4"}) {
      const auto rs = parse_system(name);
      for (std::size_t i = 0; i < rs.rank(); ++i)
        for (std::size_t j = 0; j < rs.rank(); ++j) {
          const auto& a = rs.simple_root(j);
          CHECK(2 * rs.inner(rs.fundamental_weight(i), a) / rs.inner(a, a) == (i == j ? 1 : 0));
        }
    }
  }

  TEST_CASE("type points lie in the closed chamber") {
    const auto a2 = parse_system("A2");
    const auto v = fundamental_vertex(a2, 0);
    CHECK(v.stabilizer_gens() == std::vector<std::size_t>{1});
    CHECK_FALSE(v.regular());
    CHECK_THROWS_AS(TypePoint::make(a2, -a2.simple_root(0)), PreconditionError);
    CHECK_THROWS_AS(TypePoint::make(a2, RationalVector{1, 1, 1}), PreconditionError);
    // the diagonal is projected away
    const auto t = TypePoint::make(a2, RationalVector{3, 1, 1});
    CHECK(t.vector() == TypePoint::make(a2, RationalVector{2, 0, 0}).vector());
  }

  TEST_CASE("is_root_type examples and proportionality oracle") {
    const auto a2 = parse_system("A2");
    const auto highest = TypePoint::make(a2, a2.simple_root(0) + a2.simple_root(1));
    CHECK(is_root_type(a2, highest));
    CHECK(highest.regular());
    CHECK_FALSE(is_root_type(a2, fundamental_vertex(a2, 0)));
    const auto b2 = parse_system("B2");
    CHECK(is_root_type(b2, TypePoint::make(b2, RationalVector{1, 0})));
    std::mt19937_64 rng(11);
    for (const char* name : {"A2", "B2", "G2", "A3", "B3"}) {
      const auto rs = parse_system(name);
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        const auto t = fundamental_vertex(rs, i);
        bool expect = false;
        for (const auto& a : rs.roots()) expect = expect || oracle::proportional_positive(t.vector(), a);
        CHECK(is_root_type(rs, t) == expect);
      }
      const auto t = random_regular_type(rs, rng);
      CHECK(t.regular());
    }
  }

  TEST_CASE("random iota-invariant types are fixed by iota") {
    const auto g = test::group("A3");
    const auto iota = iota_permutation(*g);
    std::mt19937_64 rng(5);
    const auto& rs = g->root_system();
    for (int k = 0; k < 20; ++k) {
      const auto t = random_iota_invariant_type(rs, iota, rng);
      const auto p = rs.simple_pairings(t.vector());
      for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i] / rs.norm2(rs.simple_root(i)) == p[iota[i]] / rs.norm2(rs.simple_root(iota[i])));
    }
  }

  TEST_CASE("diagram automorphisms") {
    CHECK(parse_system("A2").diagram_automorphisms().size() == 2);
    CHECK(parse_system("A3").diagram_automorphisms().size() == 2);
    CHECK(parse_system("D4").diagram_automorphisms().size() == 6);
    CHECK(parse_system("B3").diagram_automorphisms().size() == 1);
    CHECK(parse_system("E6").diagram_automorphisms().size() == 2);
  }
}
