#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexnet/graph.hpp"
#include "lexnet/stages.hpp"

namespace lexnet {

struct HitsOptions {
  double tolerance = 1e-10;
  int max_iterations = 1000;
};

struct HitsResult {
  std::map<std::string, double> hub;
  std::map<std::string, double> authority;
  int iterations = 0;
  bool converged = false;
  double tolerance = 0.0;
  std::optional<std::string> warning;  // set when the iteration did not settle
};

/// Hub/authority weights by mutual reinforcement: each round recomputes every
/// authority weight from the current hub weights of its in-neighbors and every
/// hub weight from the current authority weights of its out-neighbors, then
/// normalizes both vectors to unit Euclidean length. Both updates read the
/// previous round's vectors, which makes the computation on reverse(g) land on
/// exactly the same floating-point values with hub and authority swapped.
///
/// Convergence: the largest per-node change of either vector drops below
/// tolerance. A tie for the dominant eigenvalue (zero spectral gap) oscillates
/// instead of settling; that surfaces as converged=false plus a warning.
///
/// An arcless network yields all-zero weights and converged=true. An empty
/// network (no nodes) throws std::invalid_argument.
HitsResult hits(const LexicalNetwork& network, const HitsOptions& options = {});

/// The k highest-weighted words, ties broken lexicographically. Words whose
/// weight is zero never appear, even when fewer than k have positive weight.
/// k must be at least 1.
std::vector<std::string> top_hubs(const HitsResult& result, std::size_t k = 10);
std::vector<std::string> top_authorities(const HitsResult& result, std::size_t k = 10);

enum class WordStatus { Hub, Authority, HubAndAuthority, Neither };

std::string_view to_string(WordStatus status);  // "Hub" / "Authority" / "H&A" / "--"

/// Status of one word given the two top-k lists of its network.
WordStatus classify_word(std::string_view word, std::span<const std::string> top_hub_words,
                         std::span<const std::string> top_authority_words);

/// One tracked word's status at every stage, in stage order.
struct ShiftRecord {
  std::string word;
  std::vector<std::pair<std::string, WordStatus>> statuses;  // (stage label, status)
};

/// Classifies each word against the top-k lists of every stage network.
/// A word absent from a stage network (or a stage network with no nodes)
/// yields Neither for that stage. Requires at least one stage.
std::vector<ShiftRecord> shift_table(
    std::span<const std::pair<StageWindow, LexicalNetwork>> stage_networks,
    std::span<const std::string> words, std::size_t k = 10, const HitsOptions& options = {});

}  // namespace lexnet
