#include "lexnet/hits.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lexnet {
namespace {

std::vector<std::string> top_weighted(const std::map<std::string, double>& weights,
                                      std::size_t k) {
  if (k < 1) throw std::invalid_argument("top-k selection requires k >= 1");
  std::vector<std::pair<std::string, double>> ranked(weights.begin(), weights.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<std::string> result;
  for (const auto& [word, weight] : ranked) {
    if (result.size() == k) break;
    if (weight <= 0.0) break;  // ranked is sorted, the rest are zero too
    result.push_back(word);
  }
  return result;
}

}  // namespace

HitsResult hits(const LexicalNetwork& network, const HitsOptions& options) {
  if (network.node_count() == 0) throw std::invalid_argument("hits: empty network");
  if (options.tolerance <= 0.0) throw std::invalid_argument("hits: tolerance must be positive");
  if (options.max_iterations < 1)
    throw std::invalid_argument("hits: max_iterations must be at least 1");

  const auto n = static_cast<Eigen::Index>(network.node_count());
  std::vector<std::string> names(network.nodes().begin(), network.nodes().end());
  auto index_of = [&names](const std::string& name) {
    return static_cast<Eigen::Index>(
        std::lower_bound(names.begin(), names.end(), name) - names.begin());
  };

  // Arc set iteration is (src, dst)-lexicographic, so the index pairs come out
  // sorted as well; the accumulation order below is therefore identical for a
  // graph and its reversal, which keeps the hub/authority duality exact.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> arcs;
  arcs.reserve(network.arc_count());
  for (const auto& [src, dst] : network.arcs()) arcs.emplace_back(index_of(src), index_of(dst));

  HitsResult result;
  result.tolerance = options.tolerance;

  if (arcs.empty()) {
    for (const auto& name : names) {
      result.hub[name] = 0.0;
      result.authority[name] = 0.0;
    }
    result.converged = true;
    return result;
  }

  Eigen::VectorXd hub = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  Eigen::VectorXd authority = hub;
  Eigen::VectorXd next_hub(n);
  Eigen::VectorXd next_authority(n);

  for (int iteration = 1; iteration <= options.max_iterations; ++iteration) {
    next_hub.setZero();
    next_authority.setZero();
    for (const auto& [src, dst] : arcs) {
      next_authority[dst] += hub[src];
      next_hub[src] += authority[dst];
    }
    next_authority /= next_authority.norm();
    next_hub /= next_hub.norm();

    double delta = std::max((next_authority - authority).cwiseAbs().maxCoeff(),
                            (next_hub - hub).cwiseAbs().maxCoeff());
    authority.swap(next_authority);
    hub.swap(next_hub);
    result.iterations = iteration;
    if (delta < options.tolerance) {
      result.converged = true;
      break;
    }
  }
  if (!result.converged)
    result.warning = "no convergence after " + std::to_string(result.iterations) +
                     " iterations; the dominant eigenvalue may be tied (zero spectral gap)";

  for (Eigen::Index i = 0; i < n; ++i) {
    result.hub[names[static_cast<std::size_t>(i)]] = hub[i];
    result.authority[names[static_cast<std::size_t>(i)]] = authority[i];
  }
  return result;
}

std::vector<std::string> top_hubs(const HitsResult& result, std::size_t k) {
  return top_weighted(result.hub, k);
}

std::vector<std::string> top_authorities(const HitsResult& result, std::size_t k) {
  return top_weighted(result.authority, k);
}

std::string_view to_string(WordStatus status) {
  switch (status) {
    case WordStatus::Hub: return "Hub";
    case WordStatus::Authority: return "Authority";
    case WordStatus::HubAndAuthority: return "H&A";
    case WordStatus::Neither: return "--";
  }
  return "--";
}

WordStatus classify_word(std::string_view word, std::span<const std::string> top_hub_words,
                         std::span<const std::string> top_authority_words) {
  bool hub = std::find(top_hub_words.begin(), top_hub_words.end(), word) != top_hub_words.end();
  bool authority = std::find(top_authority_words.begin(), top_authority_words.end(), word) !=
                   top_authority_words.end();
  if (hub && authority) return WordStatus::HubAndAuthority;
  if (hub) return WordStatus::Hub;
  if (authority) return WordStatus::Authority;
  return WordStatus::Neither;
}

std::vector<ShiftRecord> shift_table(
    std::span<const std::pair<StageWindow, LexicalNetwork>> stage_networks,
    std::span<const std::string> words, std::size_t k, const HitsOptions& options) {
  if (stage_networks.empty())
    throw std::invalid_argument("shift_table: need at least one stage network");

  std::vector<std::pair<std::string, std::pair<std::vector<std::string>,
                                               std::vector<std::string>>>> stage_lists;
  stage_lists.reserve(stage_networks.size());
  for (const auto& [window, network] : stage_networks) {
    std::vector<std::string> hubs, authorities;
    if (network.node_count() > 0) {
      HitsResult result = hits(network, options);
      hubs = top_hubs(result, k);
      authorities = top_authorities(result, k);
    }
    stage_lists.emplace_back(window.stage_label,
                             std::make_pair(std::move(hubs), std::move(authorities)));
  }

  std::vector<ShiftRecord> records;
  records.reserve(words.size());
  for (const auto& word : words) {
    ShiftRecord record;
    record.word = word;
    for (const auto& [label, lists] : stage_lists)
      record.statuses.emplace_back(label, classify_word(word, lists.first, lists.second));
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace lexnet
