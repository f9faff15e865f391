#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexnet/graph.hpp"
#include "lexnet/stages.hpp"

namespace lexnet {

enum class EgonetDirection { Both, In, Out };

struct EgonetView {
  std::string center;
  LexicalNetwork network;
};

/// Subgraph induced on a word and its neighbors: the center, every selected
/// neighbor (in-, out-, or both per direction), and all arcs of the parent
/// network between kept nodes. Throws std::invalid_argument for a word not in
/// the network.
EgonetView egonet(const LexicalNetwork& network, std::string_view word,
                  EgonetDirection direction = EgonetDirection::Both);

/// One growth sample per network, labeled from provenance. An empty network
/// contributes size 0 with average degree 0 rather than failing, so a
/// trajectory can include silent visits.
std::vector<GrowthPoint> growth_trajectory(std::span<const LexicalNetwork> networks);

/// Child and mother measures side by side for one stage.
struct DyadRow {
  std::string stage_label;
  GrowthPoint child;
  GrowthPoint mother;
  long long delta_size = 0;      // mother minus child
  double delta_degree = 0.0;

  friend bool operator==(const DyadRow&, const DyadRow&) = default;
};

struct DyadReport {
  std::vector<DyadRow> rows;
};

/// Pairs up stage networks built from the same plan for two speakers. The two
/// sequences must have identical stage labels in identical order; a mismatch
/// throws std::invalid_argument.
DyadReport dyad_compare(std::span<const std::pair<StageWindow, LexicalNetwork>> child_stages,
                        std::span<const std::pair<StageWindow, LexicalNetwork>> mother_stages);

/// Top-k in-degree and out-degree word lists of one network, side by side.
struct DegreeReport {
  std::vector<std::string> top_in;
  std::vector<std::string> top_out;
};

DegreeReport top_degree_report(const LexicalNetwork& network, std::size_t k = 10);

}  // namespace lexnet
