#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lexnet {

enum class NetworkMode { Accumulative, Stage, Other };

/// Where a network came from: which child, which speaker's utterances, which
/// visits it covers, and whether it has been arc-reversed since it was built.
struct Provenance {
  std::string child_id;
  std::string speaker;
  std::string label;
  NetworkMode mode = NetworkMode::Other;
  int visit_first = 0;  // 0 = unset
  int visit_last = 0;
  bool reversed = false;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

enum class Direction { In, Out };

/// Directed, unweighted word-collocation graph with set semantics: node and
/// arc insertion is idempotent, so repeated collocations leave one arc.
/// Self-loops are representable. Iteration order is lexicographic, which keeps
/// every downstream computation and export deterministic.
class LexicalNetwork {
 public:
  using Arc = std::pair<std::string, std::string>;

  LexicalNetwork() = default;
  explicit LexicalNetwork(Provenance meta) : meta_(std::move(meta)) {}

  void add_node(std::string node) { nodes_.insert(std::move(node)); }
  void add_arc(std::string src, std::string dst) {
    nodes_.insert(src);
    nodes_.insert(dst);
    arcs_.emplace(std::move(src), std::move(dst));
  }

  bool has_node(std::string_view node) const {
    return nodes_.find(std::string(node)) != nodes_.end();
  }
  bool has_arc(std::string_view src, std::string_view dst) const {
    return arcs_.find(Arc(std::string(src), std::string(dst))) != arcs_.end();
  }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::set<std::string>& nodes() const { return nodes_; }
  const std::set<Arc>& arcs() const { return arcs_; }

  const Provenance& meta() const { return meta_; }
  Provenance& meta() { return meta_; }

  /// Same node and arc sets; provenance is ignored.
  bool same_structure(const LexicalNetwork& other) const {
    return nodes_ == other.nodes_ && arcs_ == other.arcs_;
  }

 private:
  std::set<std::string> nodes_;
  std::set<Arc> arcs_;
  Provenance meta_;
};

/// One growth-curve sample: a labeled network reduced to its size measures.
struct GrowthPoint {
  std::string label;
  std::size_t size = 0;   // node count
  std::size_t arcs = 0;
  double average_degree = 0.0;

  friend bool operator==(const GrowthPoint&, const GrowthPoint&) = default;
};

/// Arcs per node. A self-loop adds one to both the in- and out-degree of its
/// node, and one arc to the count, so the identity arcs == sum(out) == sum(in)
/// always holds. Throws std::invalid_argument on an empty network.
double average_degree(const LexicalNetwork& network);

/// In- or out-degree of one node. Throws std::invalid_argument when the node
/// is not in the network.
std::size_t degree(const LexicalNetwork& network, std::string_view node, Direction direction);

/// The k nodes with the highest degree in the given direction, ties broken
/// lexicographically. k must be at least 1; k beyond the node count returns
/// all nodes in sorted order.
std::vector<std::string> top_k_by_degree(const LexicalNetwork& network, std::size_t k,
                                         Direction direction);

/// The same graph with every arc flipped. Provenance is preserved except that
/// the reversed flag is toggled.
LexicalNetwork reverse(const LexicalNetwork& network);

/// Set union of nodes and arcs. The two networks must describe the same child
/// and speaker unless allow_mismatch is set; violations throw
/// std::invalid_argument. Visit ranges merge; the left label is kept.
LexicalNetwork union_of(const LexicalNetwork& a, const LexicalNetwork& b,
                        bool allow_mismatch = false);

}  // namespace lexnet
