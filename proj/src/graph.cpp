#include "lexnet/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lexnet {

double average_degree(const LexicalNetwork& network) {
  if (network.node_count() == 0)
    throw std::invalid_argument("average_degree: empty network");
  return static_cast<double>(network.arc_count()) / static_cast<double>(network.node_count());
}

std::size_t degree(const LexicalNetwork& network, std::string_view node, Direction direction) {
  if (!network.has_node(node))
    throw std::invalid_argument("degree: unknown node: " + std::string(node));
  std::size_t count = 0;
  for (const auto& [src, dst] : network.arcs()) {
    const std::string& end = direction == Direction::Out ? src : dst;
    if (end == node) ++count;
  }
  return count;
}

std::vector<std::string> top_k_by_degree(const LexicalNetwork& network, std::size_t k,
                                         Direction direction) {
  if (k < 1) throw std::invalid_argument("top_k_by_degree: k must be at least 1");
  std::map<std::string, std::size_t> degrees;
  for (const auto& node : network.nodes()) degrees[node] = 0;
  for (const auto& [src, dst] : network.arcs())
    ++degrees[direction == Direction::Out ? src : dst];

  std::vector<std::pair<std::string, std::size_t>> ranked(degrees.begin(), degrees.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  std::vector<std::string> result;
  result.reserve(std::min(k, ranked.size()));
  for (const auto& [node, deg] : ranked) {
    if (result.size() == k) break;
    result.push_back(node);
  }
  return result;
}

LexicalNetwork reverse(const LexicalNetwork& network) {
  Provenance meta = network.meta();
  meta.reversed = !meta.reversed;
  LexicalNetwork flipped(std::move(meta));
  for (const auto& node : network.nodes()) flipped.add_node(node);
  for (const auto& [src, dst] : network.arcs()) flipped.add_arc(dst, src);
  return flipped;
}

LexicalNetwork union_of(const LexicalNetwork& a, const LexicalNetwork& b, bool allow_mismatch) {
  const Provenance& ma = a.meta();
  const Provenance& mb = b.meta();
  if (!allow_mismatch && (ma.child_id != mb.child_id || ma.speaker != mb.speaker))
    throw std::invalid_argument("union_of: networks describe different corpora (" +
                                ma.child_id + "/" + ma.speaker + " vs " + mb.child_id + "/" +
                                mb.speaker + ")");

  Provenance meta = ma;
  meta.mode = ma.mode == mb.mode ? ma.mode : NetworkMode::Other;
  if (mb.visit_first != 0 && (meta.visit_first == 0 || mb.visit_first < meta.visit_first))
    meta.visit_first = mb.visit_first;
  meta.visit_last = std::max(meta.visit_last, mb.visit_last);

  LexicalNetwork merged(std::move(meta));
  for (const auto& node : a.nodes()) merged.add_node(node);
  for (const auto& node : b.nodes()) merged.add_node(node);
  for (const auto& [src, dst] : a.arcs()) merged.add_arc(src, dst);
  for (const auto& [src, dst] : b.arcs()) merged.add_arc(src, dst);
  return merged;
}

}  // namespace lexnet
