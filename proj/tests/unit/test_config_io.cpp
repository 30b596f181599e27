#include <doctest.h>

#include "toggledyn/config.hpp"
#include "toggledyn/error.hpp"
#include "toggledyn/io.hpp"
#include "toggledyn/operators.hpp"
#include "toggledyn/render.hpp"

using namespace toggledyn;
using nlohmann::json;

TEST_SUITE("config-io") {

TEST_CASE("run config round trip") {
  RunConfig c;
  CHECK(c.to_text().empty());
  CHECK(RunConfig::parse("") == c);
  c.command = "census";
  c.graph = "5; 1-2,2-3,3-4,4-5,2-4";
  c.op = "cyc-bro";
  c.b = "1,3,4";
  c.n = 5;
  c.d = 2;
  c.threads = 3;
  c.force = true;
  c.order_only = true;
  c.format = "table";
  auto text = c.to_text();
  CHECK(RunConfig::parse(text) == c);
  CHECK(RunConfig::parse(text).to_text() == text);

  RunConfig t;
  t.command = "timeline";
  t.seed_labeling = "5,2,6,4,1,3";
  t.d = 3;
  t.until_period = true;
  t.render = "ascii";
  t.fence = true;
  t.steps = 12;
  t.sample = 40;
  CHECK(RunConfig::parse(t.to_text()) == t);
}

TEST_CASE("config parse errors") {
  CHECK_THROWS_AS(RunConfig::parse("colour=blue"), InvalidArgument);
  CHECK_THROWS_AS(RunConfig::parse("n=abc"), InvalidArgument);
  CHECK_THROWS_AS(RunConfig::parse("no equals sign"), InvalidArgument);
}

TEST_CASE("named operators") {
  RunConfig c;
  CHECK_THROWS_AS(config_word(c, 5), InvalidArgument);
  c.op = "pro";
  CHECK(config_word(c, 5) == promotion_word(5));
  c.op = "tpro";
  CHECK(config_word(c, 5) == toric_word(5));
  c.op = "tpro-pi";
  c.pi = "3,1,2,5,4";
  CHECK(config_word(c, 5) == permutoric_word(std::vector<int>{3, 1, 2, 5, 4}));
  c.pi = "1,2";
  CHECK_THROWS_AS(config_word(c, 5), InvalidArgument);
  c.op = "phi";
  CHECK_THROWS_AS(config_word(c, 5), InvalidArgument);
  c.d = 2;
  CHECK(config_word(c, 5) == phi_word(5, 2));
  c.op = "cyc-bro";
  CHECK(config_word(c, 5) == cyc_broken_word(5, {1, 2}));
  c.b = "1,3,4";
  CHECK(config_word(c, 5) == cyc_broken_word(5, {1, 3, 4}));
  c.op = "bro";
  c.b = "R";
  CHECK(config_word(c, 5) == broken_word(5, canonical_S(5, 2).complement_of_minus_one()));
  c.d = 3;
  CHECK_THROWS_AS(config_word(c, 5), InvalidArgument);
  c.op = "tpro-beta";
  CHECK(config_word(c, 5) == permutoric_word(AcyclicOrientation::source_d_sink_n(5, 3)));
  c.op = "nope";
  CHECK_THROWS_AS(config_word(c, 5), InvalidArgument);
  c.op.clear();
  c.word = "t1 cyc t3";
  CHECK(config_word(c, 5) == OperatorWord::parse(5, "t1 cyc t3"));
}

TEST_CASE("config graph") {
  RunConfig c;
  c.n = 4;
  CHECK(config_graph(c) == Graph::path(4));
  c.graph = "cycle:4";
  CHECK(config_graph(c) == Graph::cycle(4));
  CHECK(parse_int_list("3, 1,2") == std::vector<int>{3, 1, 2});
  CHECK_THROWS_AS(parse_int_list("1,x"), InvalidArgument);
}

TEST_CASE("census json") {
  Graph g = Graph::path(4);
  auto w = toric_word(4);
  auto c = full_census(g, w);
  json j = census_json(c, g, w, false);
  CHECK(j["n"] == 4);
  CHECK(j["order"] == "3");
  CHECK(j["sizes"] == json{{"3", 8}});
  CHECK(j["orbit_count"] == 8);
  CHECK(j["total"] == 24);
  CHECK(j["reps"].size() == 8);
  CHECK(j["reps"][0]["labeling"] == "1,2,3,4");
  json o = census_json(c, g, w, true);
  CHECK(!o.contains("sizes"));
}

TEST_CASE("polynomials and CSP reports") {
  CHECK(json(q_binomial(4, 2)) == json{1, 1, 2, 1, 1});
  json r = csp_verify(rot_census(4, 2), q_binomial(3, 1));
  CHECK(r["omega"] == 2);
  CHECK(r["mismatches"] == 0);
  CHECK(r["rows"][1]["fixed_from_census"] == 1);
  CHECK(r["rows"][1]["poly_value"] == 1);
}

TEST_CASE("trace json is 1-based") {
  Timeline tl(Labeling::parse("1,4,6,2,3,5"), 3);
  auto steps = tl.small_steps(5);
  json j = small_step_json(steps[0]);
  CHECK(j["t"] == 5);
  CHECK(j["i"] == 1);
  CHECK(j["stone"] == 1);
  CHECK(j["carried"] == true);
  CHECK(j["replica_carried"] == 6);
  CHECK(j["replica_passed"] == 4);
  CHECK(j["coin_moved"].is_null());
  CHECK(j["coins"].size() == 3);
  bool right_wall = false;
  for (const auto& c : j["collisions"]) right_wall = right_wall || (c["kind"] == "right-wall" && c["flicker"] == true);
  CHECK(right_wall);
}

TEST_CASE("fence json") {
  Timeline tl(Labeling::parse("5,2,6,4,1,3"), 3);
  auto f = build_fence(tl, 2);
  json j = fence_json(f, first_transversal(f));
  CHECK(j["period"] == 18);
  CHECK(j["transversal"]["energies"] == json{2, 1, 3});
  CHECK(j["transversal"]["canonical"] == json{1, 3, 2});
  CHECK(j["transversal"]["rot_orbit_size"] == 3);
  CHECK(j["nodes"].size() == f.nodes().size());
  CHECK(fence_json(f, std::nullopt)["transversal"].is_null());
}

TEST_CASE("renderers") {
  Timeline tl(Labeling::parse("5,2,6,4,1,3"), 3);
  auto a = render_ascii(tl, 0);
  CHECK(a.find("t=0") != std::string::npos);
  CHECK(a.find("labels") != std::string::npos);
  auto s = render_svg(tl, 0, 6);
  CHECK(s.rfind("<svg", 0) == 0);
  CHECK(s.find("</svg>") != std::string::npos);
}

}
