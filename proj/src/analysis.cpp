#include "lexnet/analysis.hpp"

#include <stdexcept>

namespace lexnet {

EgonetView egonet(const LexicalNetwork& network, std::string_view word,
                  EgonetDirection direction) {
  if (!network.has_node(word))
    throw std::invalid_argument("egonet: unknown word: " + std::string(word));

  std::set<std::string> kept{std::string(word)};
  for (const auto& [src, dst] : network.arcs()) {
    if (direction != EgonetDirection::In && src == word) kept.insert(dst);
    if (direction != EgonetDirection::Out && dst == word) kept.insert(src);
  }

  Provenance meta = network.meta();
  meta.label = "egonet:" + std::string(word);
  LexicalNetwork sub(std::move(meta));
  for (const auto& node : kept) sub.add_node(node);
  for (const auto& [src, dst] : network.arcs())
    if (kept.count(src) && kept.count(dst)) sub.add_arc(src, dst);

  return {std::string(word), std::move(sub)};
}

std::vector<GrowthPoint> growth_trajectory(std::span<const LexicalNetwork> networks) {
  std::vector<GrowthPoint> points;
  points.reserve(networks.size());
  for (const auto& network : networks) {
    GrowthPoint point;
    point.label = network.meta().label;
    point.size = network.node_count();
    point.arcs = network.arc_count();
    point.average_degree = point.size > 0 ? average_degree(network) : 0.0;
    points.push_back(std::move(point));
  }
  return points;
}

DyadReport dyad_compare(std::span<const std::pair<StageWindow, LexicalNetwork>> child_stages,
                        std::span<const std::pair<StageWindow, LexicalNetwork>> mother_stages) {
  if (child_stages.size() != mother_stages.size())
    throw std::invalid_argument("dyad_compare: stage counts differ");

  DyadReport report;
  report.rows.reserve(child_stages.size());
  for (std::size_t i = 0; i < child_stages.size(); ++i) {
    const auto& [child_window, child_net] = child_stages[i];
    const auto& [mother_window, mother_net] = mother_stages[i];
    if (child_window.stage_label != mother_window.stage_label)
      throw std::invalid_argument("dyad_compare: stage labels misaligned: " +
                                  child_window.stage_label + " vs " +
                                  mother_window.stage_label);

    auto measure = [](const std::string& label, const LexicalNetwork& net) {
      GrowthPoint point;
      point.label = label;
      point.size = net.node_count();
      point.arcs = net.arc_count();
      point.average_degree = point.size > 0 ? average_degree(net) : 0.0;
      return point;
    };

    DyadRow row;
    row.stage_label = child_window.stage_label;
    row.child = measure(child_window.stage_label, child_net);
    row.mother = measure(mother_window.stage_label, mother_net);
    row.delta_size = static_cast<long long>(row.mother.size) -
                     static_cast<long long>(row.child.size);
    row.delta_degree = row.mother.average_degree - row.child.average_degree;
    report.rows.push_back(std::move(row));
  }
  return report;
}

DegreeReport top_degree_report(const LexicalNetwork& network, std::size_t k) {
  return {top_k_by_degree(network, k, Direction::In),
          top_k_by_degree(network, k, Direction::Out)};
}

}  // namespace lexnet
