#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "lexnet/chat.hpp"
#include "lexnet/graph.hpp"
#include "lexnet/stages.hpp"

namespace lexnet {

struct BuildOptions {
  bool self_loops = true;  // keep immediate repetitions ("no no") as loops
};

/// Collocation network over the given utterances: every token becomes a node,
/// every ordered pair of adjacent tokens within one utterance becomes an arc.
/// Arcs never cross utterance boundaries. Callers filter for spontaneity.
LexicalNetwork build_network(std::span<const Utterance> utterances, Provenance meta = {},
                             const BuildOptions& options = {});

/// One network per visit, where element t is the union of everything the
/// speaker said spontaneously in visits 1..t. Labels are the visit indices.
std::vector<LexicalNetwork> accumulative_series(const Corpus& corpus, std::string_view speaker,
                                                const BuildOptions& options = {});

/// One network per stage window, each built from the speaker's spontaneous
/// utterances in that window's files. Mother networks are built by passing the
/// mother's speaker code with the child-derived plan. A window whose file
/// index has no session in the corpus raises InputError.
std::vector<std::pair<StageWindow, LexicalNetwork>> build_stage_networks(
    const Corpus& corpus, const StagePlan& plan, std::string_view speaker,
    const BuildOptions& options = {});

/// One row per stage window: corpus measures next to network measures.
struct StageSummaryRow {
  std::string stage_label;
  int files = 0;
  long utterances = 0;
  long morphemes = 0;
  double mlu = 0.0;          // 0 when the speaker has no speech in the window
  std::size_t size = 0;
  double average_degree = 0.0;
  bool word_based = false;   // any counted utterance used token-count fallback

  friend bool operator==(const StageSummaryRow&, const StageSummaryRow&) = default;
};

std::vector<StageSummaryRow> stage_summary(const Corpus& corpus, const StagePlan& plan,
                                           std::string_view speaker,
                                           const BuildOptions& options = {});

}  // namespace lexnet
