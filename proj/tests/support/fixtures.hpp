#pragma once

// Shared fixtures: a small mother/child conversation with hand-checked
// expected values, deterministic random generators, and filesystem helpers.

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lexnet/build.hpp"
#include "lexnet/chat.hpp"
#include "lexnet/graph.hpp"

namespace lexnet::testing {

// One short recorded exchange. Hand-derived expectations:
//   mother: 3 utterances, 13 morphemes (token fallback: 7+5+1), MLU 13/3
//           network: 10 nodes, 8 arcs -> average degree 0.8
//   child:  5 utterances, 9 morphemes (1+1+4+1+2), MLU 1.8
//           network: 9 nodes, 4 arcs, isolated {no, oh, yes}
inline constexpr std::string_view kConversationChat =
    "@Begin\n"
    "*MOT:\twhat would you like for your birthday ?\n"
    "*MOT:\twould you like a train ?\n"
    "*MOT:\tJoel ?\n"
    "*CHI:\tyes .\n"
    "*CHI:\toh .\n"
    "*CHI:\tI'd like a elephant .\n"
    "*CHI:\tno .\n"
    "*CHI:\tand lion .\n"
    "@End\n";

inline const std::vector<std::pair<std::string, std::string>>& mother_arcs() {
  static const std::vector<std::pair<std::string, std::string>> arcs = {
      {"what", "would"}, {"would", "you"},    {"you", "like"}, {"like", "for"},
      {"for", "your"},   {"your", "birthday"}, {"like", "a"},   {"a", "train"}};
  return arcs;
}

inline const std::vector<std::pair<std::string, std::string>>& child_arcs() {
  static const std::vector<std::pair<std::string, std::string>> arcs = {
      {"i'd", "like"}, {"like", "a"}, {"a", "elephant"}, {"and", "lion"}};
  return arcs;
}

inline constexpr std::string_view kMotherPajek =
    "*Vertices 10\n"
    "1 \"a\"\n"
    "2 \"birthday\"\n"
    "3 \"for\"\n"
    "4 \"joel\"\n"
    "5 \"like\"\n"
    "6 \"train\"\n"
    "7 \"what\"\n"
    "8 \"would\"\n"
    "9 \"you\"\n"
    "10 \"your\"\n"
    "*Arcs\n"
    "1 6\n"
    "3 10\n"
    "5 1\n"
    "5 3\n"
    "7 8\n"
    "8 9\n"
    "9 5\n"
    "10 2\n";

inline constexpr std::string_view kChildPajek =
    "*Vertices 9\n"
    "1 \"a\"\n"
    "2 \"and\"\n"
    "3 \"elephant\"\n"
    "4 \"i'd\"\n"
    "5 \"like\"\n"
    "6 \"lion\"\n"
    "7 \"no\"\n"
    "8 \"oh\"\n"
    "9 \"yes\"\n"
    "*Arcs\n"
    "1 3\n"
    "2 6\n"
    "4 5\n"
    "5 1\n";

inline LexicalNetwork network_from_arcs(
    const std::vector<std::pair<std::string, std::string>>& arcs,
    const std::vector<std::string>& isolated = {}) {
  LexicalNetwork network;
  for (const auto& [src, dst] : arcs) network.add_arc(src, dst);
  for (const auto& node : isolated) network.add_node(node);
  return network;
}

/// Random directed graph over single-digit node labels "n0".."n8".
inline LexicalNetwork random_network(std::mt19937& rng, int min_nodes = 2, int max_nodes = 8,
                                     double arc_probability = 0.3, bool self_loops = true) {
  std::uniform_int_distribution<int> size_dist(min_nodes, max_nodes);
  int n = size_dist(rng);
  std::bernoulli_distribution arc(arc_probability);
  LexicalNetwork network;
  for (int i = 0; i < n; ++i) network.add_node("n" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && !self_loops) continue;
      if (arc(rng)) network.add_arc("n" + std::to_string(i), "n" + std::to_string(j));
    }
  return network;
}

/// Synthetic utterance with every field a collocation builder cares about.
inline Utterance make_utterance(std::vector<std::string> tokens, std::string speaker = "CHI",
                                bool spontaneous = true) {
  Utterance u;
  u.speaker = std::move(speaker);
  u.tokens = std::move(tokens);
  u.morphemes = static_cast<int>(u.tokens.size());
  u.spontaneous = spontaneous && !u.tokens.empty();
  std::string raw;
  for (const auto& t : u.tokens) {
    if (!raw.empty()) raw += ' ';
    raw += t;
  }
  u.raw = raw;
  return u;
}

/// Random multi-visit corpus over a small shared vocabulary.
inline Corpus random_corpus(std::mt19937& rng, int session_count = 5,
                            int utterances_per_session = 30, int vocabulary = 12,
                            int max_tokens = 6, const std::string& speaker = "CHI") {
  std::uniform_int_distribution<int> word(0, vocabulary - 1);
  std::uniform_int_distribution<int> length(1, max_tokens);
  Corpus corpus;
  corpus.child_id = "random";
  for (int s = 1; s <= session_count; ++s) {
    Session session;
    session.child_id = corpus.child_id;
    session.visit_index = s;
    for (int u = 0; u < utterances_per_session; ++u) {
      std::vector<std::string> tokens;
      int len = length(rng);
      for (int t = 0; t < len; ++t) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "w%02d", word(rng));
        tokens.emplace_back(buf);
      }
      session.utterances.push_back(make_utterance(std::move(tokens), speaker));
    }
    corpus.sessions.push_back(std::move(session));
  }
  return corpus;
}

struct TempDir {
  std::filesystem::path path;

  TempDir() {
    static std::atomic<int> counter{0};
    path = std::filesystem::temp_directory_path() /
           ("lexnet_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
};

inline void write_text(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace lexnet::testing
