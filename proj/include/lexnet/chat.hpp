#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexnet/errors.hpp"

namespace lexnet {

/// Tokenization and exclusion rules for CHAT-lite transcripts.
///
/// Marker strings are matched verbatim against the raw main-tier line;
/// unintelligible entries are matched against lowercased tokens. Punctuation
/// entries are dropped as standalone tokens, and the single-character ones are
/// also trimmed from token edges.
struct IngestConfig {
  std::vector<std::string> speakers{"MOT", "CHI"};
  std::vector<std::string> exclusion_markers{"[+ imit]", "[+ sr]", "[+ rou]", "[+ pi]"};
  std::vector<std::string> unintelligible{"xxx", "yyy", "www"};
  std::vector<std::string> punctuation{".", "?", "!", ","};
};

struct CivilDate {
  int year = 0;
  int month = 0;  // 1..12
  int day = 0;    // 1..31
  long day_number() const;  // days since 1970-01-01, proleptic Gregorian
  auto operator<=>(const CivilDate&) const = default;
};

/// One main-tier line plus any dependent tiers that were attached to it.
/// `raw` keeps the main-line body exactly as written and is deliberately not
/// part of equality, so a parse -> serialize -> parse round trip compares equal
/// even though serialization normalizes spelling of the line.
struct Utterance {
  std::string speaker;
  std::vector<std::string> tokens;
  int morphemes = 0;
  bool from_mor = false;  // morphemes counted from a %mor tier, not from tokens
  bool spontaneous = false;
  std::string raw;
  std::optional<std::string> mor_tier;
  std::vector<std::string> postcodes;  // exclusion markers found on the line

  friend bool operator==(const Utterance& a, const Utterance& b) {
    return a.speaker == b.speaker && a.tokens == b.tokens && a.morphemes == b.morphemes &&
           a.from_mor == b.from_mor && a.spontaneous == b.spontaneous &&
           a.mor_tier == b.mor_tier && a.postcodes == b.postcodes;
  }
};

/// One transcript file: a recording visit. Warnings collect skipped speakers
/// and similar non-fatal notes; they are not part of equality.
struct Session {
  std::string child_id;
  int visit_index = 1;
  std::vector<Utterance> utterances;
  std::string source_name;
  std::optional<CivilDate> date;
  std::vector<std::string> warnings;

  friend bool operator==(const Session& a, const Session& b) {
    return a.child_id == b.child_id && a.visit_index == b.visit_index &&
           a.utterances == b.utterances && a.source_name == b.source_name && a.date == b.date;
  }
};

/// All sessions for one child, ordered by strictly increasing visit index.
struct Corpus {
  std::string child_id;
  std::vector<Session> sessions;
};

/// Splits a main-tier body into cleaned, lowercased word tokens.
///
/// Bracketed annotation groups `[...]` are removed before splitting, so
/// postcodes and other codes never leak into the word stream; retracing angle
/// marks `<` `>` are dropped so the retraced words themselves stay visible.
std::vector<std::string> tokenize(std::string_view main_line, const IngestConfig& config);

/// True when the utterance counts as spontaneous speech: it has at least one
/// token, carries no exclusion postcode, and contains no unintelligible token.
bool is_spontaneous(const Utterance& utterance, const IngestConfig& config);

/// Morphemes for one utterance: the stored count (from %mor when present,
/// token count otherwise). Throws std::invalid_argument for an utterance with
/// no tokens, whose count is undefined.
int morpheme_count(const Utterance& utterance);

/// True when the utterance's morpheme count came from token-count fallback
/// rather than a %mor tier ("word-based" counting).
inline bool used_token_fallback(const Utterance& utterance) { return !utterance.from_mor; }

/// Parses one CHAT-lite transcript.
///
/// Recognizes `@` headers (only @Date is interpreted), `*XXX:` main tiers,
/// `%yyy:` dependent tiers (only %mor is interpreted; it attaches to the
/// preceding utterance), and continuation lines starting with whitespace.
/// Unknown speaker codes are skipped and recorded in Session::warnings;
/// malformed tier prefixes raise ParseError with the line number.
Session parse_session(std::string_view text, const IngestConfig& config,
                      std::string child_id = {}, int visit_index = 1,
                      std::string source_name = {});

/// Mean length of utterance for one speaker over the given sessions:
/// total morphemes of that speaker's spontaneous utterances divided by their
/// count. Throws InputError when no qualifying utterance exists.
double session_mlu(std::span<const Session> sessions, std::string_view speaker);

/// Serializes a session back to normalized CHAT-lite text. Parsing the result
/// with the same config yields a Session that compares equal to the input.
std::string to_chat(const Session& session);

/// Tab-separated audit dump, one utterance per line:
/// visit, speaker, spontaneous (1/0), morphemes, then one field per token.
std::string session_dump(const Session& session);

/// Reads transcript files into a corpus; visit indices follow list order.
/// A directory entry expands to its regular files sorted by name.
Corpus load_corpus(const std::vector<std::string>& paths, const IngestConfig& config,
                   std::string child_id);

}  // namespace lexnet
