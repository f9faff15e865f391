#include "lexnet/analysis.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "lexnet/build.hpp"
#include "lexnet/chat.hpp"
#include "support/fixtures.hpp"

using namespace lexnet;
using namespace lexnet::testing;

namespace {

LexicalNetwork mother_network() {
  LexicalNetwork g = network_from_arcs(mother_arcs(), {"joel"});
  g.meta().label = "mother";
  return g;
}

}  // namespace

TEST_CASE("egonet keeps the center, its neighbors, and induced arcs") {
  LexicalNetwork g = mother_network();

  EgonetView both = egonet(g, "like");
  CHECK(both.center == "like");
  CHECK(both.network.nodes() == std::set<std::string>{"a", "for", "like", "you"});
  CHECK(both.network.arc_count() == 3);
  CHECK(both.network.has_arc("you", "like"));
  CHECK(both.network.has_arc("like", "for"));
  CHECK(both.network.has_arc("like", "a"));
  CHECK(both.network.meta().label == "egonet:like");

  EgonetView out = egonet(g, "like", EgonetDirection::Out);
  CHECK(out.network.nodes() == std::set<std::string>{"a", "for", "like"});
  CHECK(out.network.arc_count() == 2);
  CHECK_FALSE(out.network.has_node("you"));

  EgonetView in = egonet(g, "like", EgonetDirection::In);
  CHECK(in.network.nodes() == std::set<std::string>{"like", "you"});
  CHECK(in.network.arc_count() == 1);
}

TEST_CASE("egonet corner cases") {
  LexicalNetwork g;
  g.add_node("yes");
  g.add_arc("no", "no");
  g.add_arc("no", "more");

  EgonetView isolated = egonet(g, "yes");
  CHECK(isolated.network.node_count() == 1);
  CHECK(isolated.network.arc_count() == 0);

  // a self-loop makes the center its own neighbor in either direction
  EgonetView looped = egonet(g, "no", EgonetDirection::In);
  CHECK(looped.network.nodes() == std::set<std::string>{"no"});
  CHECK(looped.network.has_arc("no", "no"));

  CHECK_THROWS_AS(egonet(g, "absent"), std::invalid_argument);
}

TEST_CASE("egonet arcs between neighbors are included") {
  // b and c are both neighbors of a; the arc b->c must survive even though it
  // does not touch the center
  LexicalNetwork g;
  g.add_arc("a", "b");
  g.add_arc("a", "c");
  g.add_arc("b", "c");
  g.add_arc("b", "d");  // d is not a's neighbor, so this arc must vanish

  EgonetView view = egonet(g, "a");
  CHECK(view.network.nodes() == std::set<std::string>{"a", "b", "c"});
  CHECK(view.network.has_arc("b", "c"));
  CHECK_FALSE(view.network.has_node("d"));
}

TEST_CASE("growth trajectory reduces networks to labeled measures") {
  LexicalNetwork mother = mother_network();
  LexicalNetwork child = network_from_arcs(child_arcs(), {"yes", "oh", "no"});
  child.meta().label = "child";
  LexicalNetwork silent;
  silent.meta().label = "silent";

  std::vector<LexicalNetwork> series = {silent, child, mother};
  auto points = growth_trajectory(series);
  REQUIRE(points.size() == 3);
  CHECK(points[0] == GrowthPoint{"silent", 0, 0, 0.0});
  CHECK(points[1].label == "child");
  CHECK(points[1].size == 9);
  CHECK(points[1].arcs == 4);
  CHECK(points[1].average_degree == doctest::Approx(4.0 / 9.0));
  CHECK(points[2] == GrowthPoint{"mother", 10, 8, 0.8});
}

TEST_CASE("dyad comparison pairs stages and takes mother-minus-child deltas") {
  StageWindow window{"S2", MluInterval::parse("(1.5,2]"), {1}, std::nullopt};
  LexicalNetwork child = network_from_arcs(child_arcs(), {"yes", "oh", "no"});
  LexicalNetwork mother = mother_network();

  std::vector<std::pair<StageWindow, LexicalNetwork>> child_stages = {{window, child}};
  std::vector<std::pair<StageWindow, LexicalNetwork>> mother_stages = {{window, mother}};

  DyadReport report = dyad_compare(child_stages, mother_stages);
  REQUIRE(report.rows.size() == 1);
  const DyadRow& row = report.rows[0];
  CHECK(row.stage_label == "S2");
  CHECK(row.child.size == 9);
  CHECK(row.mother.size == 10);
  CHECK(row.delta_size == 1);
  CHECK(row.delta_degree == doctest::Approx(0.8 - 4.0 / 9.0));

  // a shrinking mother network must produce a negative delta, not wrap around
  DyadReport flipped = dyad_compare(mother_stages, child_stages);
  CHECK(flipped.rows[0].delta_size == -1);

  std::vector<std::pair<StageWindow, LexicalNetwork>> misnamed = {
      {{"S3", MluInterval::parse("(2,2.5]"), {1}, std::nullopt}, mother}};
  CHECK_THROWS_AS(dyad_compare(child_stages, misnamed), std::invalid_argument);
  CHECK_THROWS_AS(dyad_compare(child_stages, {}), std::invalid_argument);
}

TEST_CASE("degree report ranks in- and out-degree independently") {
  LexicalNetwork g = mother_network();
  DegreeReport report = top_degree_report(g, 3);
  CHECK(report.top_out == std::vector<std::string>{"like", "a", "for"});
  CHECK(report.top_in == std::vector<std::string>{"a", "birthday", "for"});

  DegreeReport full = top_degree_report(g, 100);
  CHECK(full.top_in.size() == 10);  // zero-degree nodes still listed for degree ranks
  CHECK(full.top_out.size() == 10);
}
