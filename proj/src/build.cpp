#include "lexnet/build.hpp"

#include <map>

namespace lexnet {
namespace {

void add_utterance_arcs(LexicalNetwork& network, const Utterance& utterance,
                        const BuildOptions& options) {
  const auto& tokens = utterance.tokens;
  for (const auto& token : tokens) network.add_node(token);
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (!options.self_loops && tokens[i] == tokens[i + 1]) continue;
    network.add_arc(tokens[i], tokens[i + 1]);
  }
}

const Session& session_for_visit(const Corpus& corpus, int visit,
                                 const std::string& window_label) {
  for (const auto& session : corpus.sessions)
    if (session.visit_index == visit) return session;
  throw InputError("stage window \"" + window_label + "\": no session with visit index " +
                   std::to_string(visit));
}

}  // namespace

LexicalNetwork build_network(std::span<const Utterance> utterances, Provenance meta,
                             const BuildOptions& options) {
  LexicalNetwork network(std::move(meta));
  for (const auto& utterance : utterances) add_utterance_arcs(network, utterance, options);
  return network;
}

std::vector<LexicalNetwork> accumulative_series(const Corpus& corpus, std::string_view speaker,
                                                const BuildOptions& options) {
  Provenance meta;
  meta.child_id = corpus.child_id;
  meta.speaker = std::string(speaker);
  meta.mode = NetworkMode::Accumulative;

  std::vector<LexicalNetwork> series;
  series.reserve(corpus.sessions.size());
  LexicalNetwork accumulated(meta);
  for (const auto& session : corpus.sessions) {
    for (const auto& utterance : session.utterances)
      if (utterance.speaker == speaker && utterance.spontaneous)
        add_utterance_arcs(accumulated, utterance, options);
    LexicalNetwork snapshot = accumulated;
    snapshot.meta().label = std::to_string(session.visit_index);
    snapshot.meta().visit_first = corpus.sessions.front().visit_index;
    snapshot.meta().visit_last = session.visit_index;
    series.push_back(std::move(snapshot));
  }
  return series;
}

std::vector<std::pair<StageWindow, LexicalNetwork>> build_stage_networks(
    const Corpus& corpus, const StagePlan& plan, std::string_view speaker,
    const BuildOptions& options) {
  std::vector<std::pair<StageWindow, LexicalNetwork>> result;
  result.reserve(plan.windows.size());
  for (const auto& window : plan.windows) {
    Provenance meta;
    meta.child_id = corpus.child_id;
    meta.speaker = std::string(speaker);
    meta.label = window.stage_label;
    meta.mode = NetworkMode::Stage;
    if (!window.file_indices.empty()) {
      meta.visit_first = window.file_indices.front();
      meta.visit_last = window.file_indices.back();
    }
    LexicalNetwork network(std::move(meta));
    for (int visit : window.file_indices) {
      const Session& session = session_for_visit(corpus, visit, window.stage_label);
      for (const auto& utterance : session.utterances)
        if (utterance.speaker == speaker && utterance.spontaneous)
          add_utterance_arcs(network, utterance, options);
    }
    result.emplace_back(window, std::move(network));
  }
  return result;
}

std::vector<StageSummaryRow> stage_summary(const Corpus& corpus, const StagePlan& plan,
                                           std::string_view speaker,
                                           const BuildOptions& options) {
  auto networks = build_stage_networks(corpus, plan, speaker, options);
  std::vector<StageSummaryRow> rows;
  rows.reserve(networks.size());
  for (const auto& [window, network] : networks) {
    StageSummaryRow row;
    row.stage_label = window.stage_label;
    row.files = static_cast<int>(window.file_indices.size());
    for (int visit : window.file_indices) {
      const Session& session = session_for_visit(corpus, visit, window.stage_label);
      for (const auto& utterance : session.utterances)
        if (utterance.speaker == speaker && utterance.spontaneous) {
          ++row.utterances;
          row.morphemes += utterance.morphemes;
          if (used_token_fallback(utterance)) row.word_based = true;
        }
    }
    row.mlu = row.utterances > 0
                  ? static_cast<double>(row.morphemes) / static_cast<double>(row.utterances)
                  : 0.0;
    row.size = network.node_count();
    row.average_degree = network.node_count() > 0 ? average_degree(network) : 0.0;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lexnet
