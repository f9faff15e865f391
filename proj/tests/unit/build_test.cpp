#include "lexnet/build.hpp"

#include "doctest.h"
#include "support/fixtures.hpp"

using namespace lexnet;
using namespace lexnet::testing;

namespace {

Corpus conversation_corpus() {
  IngestConfig config;
  Corpus corpus;
  corpus.child_id = "joel";
  corpus.sessions.push_back(parse_session(kConversationChat, config, "joel", 1, "joel01.cha"));
  return corpus;
}

std::vector<Utterance> spontaneous_of(const Corpus& corpus, std::string_view speaker,
                                      int max_visit = 1 << 30) {
  std::vector<Utterance> utterances;
  for (const auto& session : corpus.sessions) {
    if (session.visit_index > max_visit) continue;
    for (const auto& u : session.utterances)
      if (u.speaker == speaker && u.spontaneous) utterances.push_back(u);
  }
  return utterances;
}

}  // namespace

TEST_CASE("build_network reproduces the conversation fixture") {
  Corpus corpus = conversation_corpus();

  auto mother = build_network(spontaneous_of(corpus, "MOT"));
  CHECK(mother.same_structure(network_from_arcs(mother_arcs(), {"joel"})));
  CHECK(mother.node_count() == 10);
  CHECK(mother.arc_count() == 8);

  auto child = build_network(spontaneous_of(corpus, "CHI"));
  CHECK(child.same_structure(network_from_arcs(child_arcs(), {"yes", "oh", "no"})));
  CHECK(child.node_count() == 9);
  CHECK(child.arc_count() == 4);
  // one-word utterances leave isolated nodes
  CHECK(degree(child, "yes", Direction::In) + degree(child, "yes", Direction::Out) == 0);
}

TEST_CASE("arcs never cross utterance boundaries") {
  std::vector<Utterance> utterances = {make_utterance({"want", "juice"}),
                                       make_utterance({"more", "juice"})};
  auto g = build_network(utterances);
  CHECK(g.has_arc("want", "juice"));
  CHECK(g.has_arc("more", "juice"));
  CHECK_FALSE(g.has_arc("juice", "more"));
  CHECK(g.arc_count() == 2);
}

TEST_CASE("repeated collocations stay single arcs; loops obey the toggle") {
  std::vector<Utterance> utterances = {make_utterance({"no", "no", "no"}),
                                       make_utterance({"no", "more"}),
                                       make_utterance({"no", "more"})};
  auto with_loops = build_network(utterances);
  CHECK(with_loops.arc_count() == 2);  // no->no once, no->more once
  CHECK(with_loops.has_arc("no", "no"));

  auto without = build_network(utterances, {}, {.self_loops = false});
  CHECK(without.arc_count() == 1);
  CHECK_FALSE(without.has_arc("no", "no"));
  CHECK(without.has_node("no"));
}

TEST_CASE("accumulative series grows monotonically and matches one-shot builds") {
  std::mt19937 rng(11);
  Corpus corpus = random_corpus(rng, 6, 20);
  auto series = accumulative_series(corpus, "CHI");
  REQUIRE(series.size() == corpus.sessions.size());

  for (std::size_t t = 0; t < series.size(); ++t) {
    // element t equals a one-shot build over visits 1..t+1
    auto flat = spontaneous_of(corpus, "CHI", static_cast<int>(t) + 1);
    CHECK(series[t].same_structure(build_network(flat)));
    CHECK(series[t].meta().label == std::to_string(t + 1));
    CHECK(series[t].meta().mode == NetworkMode::Accumulative);
    if (t > 0) {
      // monotone growth: earlier nodes and arcs never disappear
      for (const auto& node : series[t - 1].nodes()) CHECK(series[t].has_node(node));
      for (const auto& [src, dst] : series[t - 1].arcs()) CHECK(series[t].has_arc(src, dst));
    }
  }
}

TEST_CASE("non-spontaneous and other-speaker utterances never reach the network") {
  IngestConfig config;
  Session session = parse_session(
      "*CHI:\ta dog .\n"
      "*CHI:\ta dog . [+ imit]\n"
      "*CHI:\txxx cat .\n"
      "*MOT:\ta cow .\n",
      config, "kid", 1);
  Corpus corpus{"kid", {session}};
  auto series = accumulative_series(corpus, "CHI");
  REQUIRE(series.size() == 1);
  CHECK(series[0].node_count() == 2);  // just "a" and "dog"
  CHECK_FALSE(series[0].has_node("cat"));
  CHECK_FALSE(series[0].has_node("cow"));
}

TEST_CASE("stage networks cover exactly their windows") {
  std::mt19937 rng(13);
  Corpus corpus = random_corpus(rng, 6, 25);
  StagePlan plan;
  plan.child_id = corpus.child_id;
  StageWindow w1{"S1", MluInterval::parse("[1,1.5]"), {1, 2}, std::nullopt};
  StageWindow w2{"S2", MluInterval::parse("(1.5,2]"), {4, 5, 6}, std::nullopt};
  plan.windows = {w1, w2};

  auto stages = build_stage_networks(corpus, plan, "CHI");
  REQUIRE(stages.size() == 2);
  CHECK(stages[0].first == w1);
  CHECK(stages[1].first == w2);

  std::vector<Utterance> first_files;
  for (const auto& session : corpus.sessions)
    if (session.visit_index <= 2)
      for (const auto& u : session.utterances)
        if (u.speaker == "CHI" && u.spontaneous) first_files.push_back(u);
  CHECK(stages[0].second.same_structure(build_network(first_files)));
  CHECK(stages[0].second.meta().label == "S1");
  CHECK(stages[0].second.meta().visit_first == 1);
  CHECK(stages[0].second.meta().visit_last == 2);
  CHECK(stages[1].second.meta().visit_first == 4);

  // a window pointing at a missing visit is an input error naming the window
  plan.windows[1].file_indices = {4, 5, 6, 7};
  try {
    build_stage_networks(corpus, plan, "CHI");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("S2") != std::string::npos);
    CHECK(std::string(e.what()).find("7") != std::string::npos);
  }
}

TEST_CASE("mother networks reuse the child's windows") {
  Corpus corpus = conversation_corpus();
  StagePlan plan;
  plan.child_id = "joel";
  plan.windows = {{"S2", MluInterval::parse("(1.5,2]"), {1}, std::nullopt}};

  auto child_stages = build_stage_networks(corpus, plan, "CHI");
  auto mother_stages = build_stage_networks(corpus, plan, "MOT");
  CHECK(child_stages[0].second.same_structure(
      network_from_arcs(child_arcs(), {"yes", "oh", "no"})));
  CHECK(mother_stages[0].second.same_structure(network_from_arcs(mother_arcs(), {"joel"})));
  CHECK(mother_stages[0].first == child_stages[0].first);
  CHECK(mother_stages[0].second.meta().speaker == "MOT");
}

TEST_CASE("an empty window yields an empty network, not an error") {
  Corpus corpus = conversation_corpus();
  StagePlan plan;
  plan.child_id = "joel";
  StageWindow empty{"S9", MluInterval::parse("[1,1.5]"), {}, std::nullopt};
  plan.windows = {empty};
  auto stages = build_stage_networks(corpus, plan, "CHI");
  REQUIRE(stages.size() == 1);
  CHECK(stages[0].second.node_count() == 0);
  CHECK(stages[0].second.arc_count() == 0);
}

TEST_CASE("stage summary pairs corpus counts with network measures") {
  Corpus corpus = conversation_corpus();
  StagePlan plan;
  plan.child_id = "joel";
  plan.windows = {{"S2", MluInterval::parse("(1.5,2]"), {1}, std::nullopt}};

  auto child_rows = stage_summary(corpus, plan, "CHI");
  REQUIRE(child_rows.size() == 1);
  const auto& row = child_rows[0];
  CHECK(row.stage_label == "S2");
  CHECK(row.files == 1);
  CHECK(row.utterances == 5);
  CHECK(row.morphemes == 9);
  CHECK(row.mlu == doctest::Approx(1.8));
  CHECK(row.size == 9);
  CHECK(row.average_degree == doctest::Approx(4.0 / 9.0));
  CHECK(row.word_based);  // the fixture has no %mor tiers

  auto mother_rows = stage_summary(corpus, plan, "MOT");
  CHECK(mother_rows[0].utterances == 3);
  CHECK(mother_rows[0].morphemes == 13);
  CHECK(mother_rows[0].mlu == doctest::Approx(13.0 / 3.0));
  CHECK(mother_rows[0].size == 10);
  CHECK(mother_rows[0].average_degree == doctest::Approx(0.8));
}
