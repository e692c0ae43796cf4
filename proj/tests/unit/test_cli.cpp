#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "weylthick/cli/cli.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = weylthick::cli::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool has_float(const json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j)
      if (has_float(v)) return true;
  return false;
}

void require_keys(const json& doc, std::initializer_list<const char*> keys) {
  for (const char* k : keys) {
    CAPTURE(k);
    CHECK(doc.contains(k));
  }
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("info examples") {
    const auto a2 = run({"info", "A2"});
    REQUIRE(a2.code == 0);
    CHECK(a2.doc()["order"] == 6);
    CHECK(a2.doc()["w0_minus_identity"] == false);
    CHECK(a2.doc()["iota"] == json::array({2, 1}));
    const auto b2 = run({"info", "B2"});
    CHECK(b2.doc()["order"] == 8);
    CHECK(b2.doc()["w0_minus_identity"] == true);
    const auto a1 = run({"info", "A1"});
    CHECK(a1.doc()["order"] == 2);
    CHECK(a1.doc()["w0_minus_identity"] == true);
    require_keys(a2.doc(), {"system", "rank", "roots", "positive_roots", "order", "w0_length", "w0_word", "iota", "cartan"});
  }

  TEST_CASE("balanced examples") {
    const auto c = run({"balanced", "A2", "regular", "--count-only"});
    REQUIRE(c.code == 0);
    CHECK(c.doc()["count"] == "1");
    CHECK(c.doc()["complete"] == true);
    const auto b2 = run({"balanced", "B2", "regular"});
    REQUIRE(b2.code == 0);
    CHECK(b2.doc()["thickenings"].size() == 2);
    CHECK(b2.doc()["thickenings"][0]["member_words"] == json::array({"e", "1", "2", "12"}));
    const auto v = run({"balanced", "A2", "vertex:1", "--count-only"});
    REQUIRE(v.code == 0);
    CHECK(v.doc()["count"] == "0");
    CHECK(v.doc()["fixed_point"]["word"] == "1");
  }

  TEST_CASE("balanced output does not depend on jobs") {
    const auto base = run({"balanced", "B3", "regular"}).out;
    const auto base_count = run({"balanced", "A4", "regular", "--count-only"}).out;
    for (const char* jobs : {"1", "4", "8"}) {
      CHECK(run({"balanced", "B3", "regular", "--jobs", jobs}).out == base);
      CHECK(run({"--jobs", jobs, "balanced", "A4", "regular", "--count-only"}).out == base_count);
    }
  }

  TEST_CASE("balanced stream is newline-delimited JSON") {
    const auto r = run({"balanced", "A3", "regular", "--stream"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<json> docs;
    while (std::getline(lines, line)) docs.push_back(json::parse(line));
    REQUIRE(docs.size() == 11);
    for (std::size_t i = 0; i < 10; ++i) {
      CHECK(docs[i]["index"] == i);
      CHECK(docs[i].contains("members"));
    }
    CHECK(docs.back()["count"] == "10");
    CHECK(run({"balanced", "A3", "--stream", "--count-only"}).code == 2);
  }

  TEST_CASE("budget flag and environment override") {
    const auto r = run({"balanced", "B4", "regular", "--count-only", "--budget", "10"});
    REQUIRE(r.code == 0);
    CHECK(r.doc()["complete"] == false);
    CHECK(r.doc()["budget"] == 10);
    ::setenv("WEYLTHICK_BUDGET", "20", 1);
    const auto e = run({"balanced", "B4", "regular", "--count-only"});
    CHECK(e.doc()["complete"] == false);
    CHECK(e.doc()["budget"] == 20);
    CHECK(run({"balanced", "B4", "regular", "--count-only", "--budget", "1000000"}).doc()["complete"] == true);
    ::setenv("WEYLTHICK_BUDGET", "lots", 1);
    CHECK(run({"balanced", "A2", "--count-only"}).code == 2);
    ::unsetenv("WEYLTHICK_BUDGET");
  }

  TEST_CASE("orbit and poset documents") {
    const auto o = run({"orbit", "B2", "vertex:1"});
    REQUIRE(o.code == 0);
    require_keys(o.doc(), {"size", "stabilizer_order", "base", "points"});
    CHECK(o.doc()["size"] == 4);
    CHECK(o.doc()["points"][0]["coords"] == json::array({"1", "0"}));
    const auto p = run({"poset", "A2"});
    REQUIRE(p.code == 0);
    require_keys(p.doc(), {"elements", "covers", "antipode", "minimum", "maximum"});
    CHECK(p.doc()["covers"].size() == 8);
  }

  TEST_CASE("metric, transfer and root thickening documents") {
    const auto m = run({"metric", "A2", "regular", "--theta", "regular", "--radius", "pi/2"});
    REQUIRE(m.code == 0);
    CHECK(m.doc()["member_words"] == json::array({"e", "1", "2"}));
    CHECK(m.doc()["balanced"] == true);
    CHECK_FALSE(m.doc().contains("approx"));
    const auto a = run({"metric", "A2", "--radius", "1.2"});
    REQUIRE(a.code == 0);
    CHECK(a.doc()["approx"] == true);
    const auto t = run({"transfer", "A2", "vertex:1", "regular", "--members", "1"});
    REQUIRE(t.code == 0);
    require_keys(t.doc(), {"source", "target"});
    CHECK(t.doc()["target"]["fat"].is_boolean());
    const auto r = run({"root-thickening", "A2", "--samples", "10"});
    REQUIRE(r.code == 0);
    CHECK(r.doc()["member_words"] == json::array({"e", "1", "2"}));
    CHECK(run({"root-thickening", "A2", "--eta", "vertex:1"}).code == 2);
  }

  TEST_CASE("dyn-related and verify-discontinuity") {
    const auto d = run({"dyn-related", "A2", "regular", "21", "1"});
    REQUIRE(d.code == 0);
    CHECK(d.doc()["related"] == false);
    CHECK(d.doc()["w0_p"] == "12");
    const auto v = run({"verify-discontinuity", "B2", "regular", "--all-fat"});
    REQUIRE(v.code == 0);
    CHECK(v.doc()["result"] == "PASS");
    const auto m = run({"verify-discontinuity", "A2", "regular", "--members", "1,2"});
    CHECK(m.code == 0);
    CHECK(m.doc()["pairs_checked"] == 9);
    CHECK(run({"verify-discontinuity", "A2", "regular", "--members", "1"}).code == 2);
    const auto f = run({"verify-discontinuity", "A2", "regular", "--members", "1", "--allow-non-fat"});
    CHECK(f.code == 1);
    CHECK(f.doc()["result"] == "FAIL");
    CHECK(f.doc().contains("violation"));
  }

  TEST_CASE("packing and existence") {
    const auto b2 = run({"packing", "B2"});
    REQUIRE(b2.code == 0);
    CHECK(b2.doc()["reducible_to_a2"] == false);
    CHECK(b2.doc()["witness"]["result"] == "THEOREM_SILENT");
    CHECK(run({"packing", "A3"}).doc()["witness"]["result"] == "PASS");
    const auto a1 = run({"packing", "A1"});
    CHECK(a1.doc()["reducible_to_a2"].is_null());
    CHECK(a1.doc()["witness"]["result"] == "OUT_OF_HYPOTHESES");
    const auto e = run({"existence", "B3"});
    REQUIRE(e.code == 0);
    CHECK(e.doc()["result"] == "PASS");
  }

  TEST_CASE("check suites") {
    const auto fast = run({"check", "fast"});
    CHECK(fast.code == 0);
    CHECK(fast.doc()["result"] == "PASS");
    CHECK(run({"check", "nonsense"}).code == 2);
  }

  TEST_CASE("machine output is exact") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"info", "G2"},
                                                                  {"orbit", "G2", "regular"},
                                                                  {"poset", "B2", "vertex:2"},
                                                                  {"metric", "B3", "regular", "--radius", "2pi/3"},
                                                                  {"root-thickening", "B2"},
                                                                  {"balanced", "G2"},
                                                                  {"existence", "A3"}}) {
      const auto r = run(args);
      REQUIRE(r.code == 0);
      CHECK_FALSE(has_float(r.doc()));
    }
  }

  TEST_CASE("csv and table formats") {
    const auto csv = run({"--format", "csv", "balanced", "B2"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out == "index,members\n0,e;1;2;12\n1,e;1;2;21\n");
    const auto table = run({"info", "A2", "--format", "table"});
    CHECK(table.code == 0);
    CHECK(table.out.find("w0_minus_identity  false") != std::string::npos);
    const auto kv = run({"dyn-related", "A2", "regular", "e", "e", "--format", "csv"});
    CHECK(kv.out.find("related,true") != std::string::npos);
    CHECK(run({"info", "A2", "--format", "xml"}).code == 2);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"info"}).code == 2);
    CHECK(run({"info", "Q7"}).code == 2);
    CHECK(run({"orbit", "A2", "vertex:9"}).code == 2);
    CHECK(run({"dyn-related", "A2", "regular", "13", "1"}).code == 2);
    CHECK(run({"balanced", "A2", "--jobs", "0"}).code == 2);
    CHECK(run({"metric", "A2", "--radius", "abc"}).code == 2);
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("balanced") != std::string::npos);
  }
}
