#include "lexnet/chat.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace lexnet {
namespace {

bool contains(const std::vector<std::string>& haystack, std::string_view needle) {
  return std::find(haystack.begin(), haystack.end(), needle) != haystack.end();
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

void lowercase_ascii(std::string& s) {
  for (char& c : s)
    if (static_cast<unsigned char>(c) < 0x80)
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

bool is_edge_punct(char c, const IngestConfig& config) {
  for (const auto& p : config.punctuation)
    if (p.size() == 1 && p[0] == c) return true;
  return false;
}

// Whitespace-separated items of a %mor tier that are not bare punctuation.
int mor_item_count(std::string_view tier, const IngestConfig& config) {
  std::istringstream in{std::string(tier)};
  std::string item;
  int count = 0;
  while (in >> item)
    if (!contains(config.punctuation, item)) ++count;
  return count;
}

std::optional<CivilDate> parse_chat_date(std::string_view body) {
  // Expected shape: DD-MMM-YYYY, e.g. 01-FEB-1995.
  static constexpr std::array<std::string_view, 12> kMonths = {
      "JAN", "FEB", "MAR", "APR", "MAY", "JUN", "JUL", "AUG", "SEP", "OCT", "NOV", "DEC"};
  std::string text = trim(body);
  auto d1 = text.find('-');
  auto d2 = text.rfind('-');
  if (d1 == std::string::npos || d2 == d1) return std::nullopt;
  std::string day = text.substr(0, d1);
  std::string mon = text.substr(d1 + 1, d2 - d1 - 1);
  std::string year = text.substr(d2 + 1);
  for (char& c : mon) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  auto it = std::find(kMonths.begin(), kMonths.end(), mon);
  if (it == kMonths.end()) return std::nullopt;
  try {
    CivilDate date{std::stoi(year), static_cast<int>(it - kMonths.begin()) + 1, std::stoi(day)};
    if (date.day < 1 || date.day > 31) return std::nullopt;
    return date;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::vector<std::string> find_postcodes(std::string_view raw, const IngestConfig& config) {
  std::vector<std::string> found;
  for (const auto& marker : config.exclusion_markers)
    if (raw.find(marker) != std::string_view::npos) found.push_back(marker);
  return found;
}

Utterance make_utterance(std::string speaker, std::string body,
                         std::optional<std::string> mor_tier, const IngestConfig& config) {
  Utterance u;
  u.speaker = std::move(speaker);
  u.raw = std::move(body);
  u.tokens = tokenize(u.raw, config);
  u.postcodes = find_postcodes(u.raw, config);
  u.mor_tier = std::move(mor_tier);
  int mor_count = u.mor_tier ? mor_item_count(*u.mor_tier, config) : 0;
  u.from_mor = mor_count > 0;
  u.morphemes = u.from_mor ? mor_count : static_cast<int>(u.tokens.size());
  u.spontaneous = is_spontaneous(u, config);
  return u;
}

}  // namespace

long CivilDate::day_number() const {
  // Days-from-civil, proleptic Gregorian calendar.
  int y = year - (month <= 2);
  const int era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy =
      (153u * static_cast<unsigned>(month + (month > 2 ? -3 : 9)) + 2u) / 5u +
      static_cast<unsigned>(day) - 1u;
  const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
  return era * 146097L + static_cast<long>(doe) - 719468L;
}

std::vector<std::string> tokenize(std::string_view main_line, const IngestConfig& config) {
  std::string cleaned;
  cleaned.reserve(main_line.size());
  bool in_group = false;
  for (char c : main_line) {
    if (in_group) {
      if (c == ']') in_group = false;
      continue;
    }
    if (c == '[') {
      in_group = true;
      continue;
    }
    if (c == '<' || c == '>') continue;
    cleaned.push_back(c);
  }

  std::vector<std::string> tokens;
  std::istringstream in{cleaned};
  std::string piece;
  while (in >> piece) {
    std::size_t b = 0, e = piece.size();
    while (b < e && is_edge_punct(piece[b], config)) ++b;
    while (e > b && is_edge_punct(piece[e - 1], config)) --e;
    std::string word = piece.substr(b, e - b);
    if (word.empty() || contains(config.punctuation, word)) continue;
    lowercase_ascii(word);
    tokens.push_back(std::move(word));
  }
  return tokens;
}

bool is_spontaneous(const Utterance& utterance, const IngestConfig& config) {
  if (utterance.tokens.empty()) return false;
  for (const auto& marker : config.exclusion_markers)
    if (utterance.raw.find(marker) != std::string::npos) return false;
  for (const auto& token : utterance.tokens)
    if (contains(config.unintelligible, token)) return false;
  return true;
}

int morpheme_count(const Utterance& utterance) {
  if (utterance.tokens.empty())
    throw std::invalid_argument("morpheme_count: utterance has no tokens");
  return utterance.morphemes;
}

Session parse_session(std::string_view text, const IngestConfig& config, std::string child_id,
                      int visit_index, std::string source_name) {
  Session session;
  session.child_id = std::move(child_id);
  session.visit_index = visit_index;
  session.source_name = std::move(source_name);

  enum class TierKind { None, Header, Main, Dependent };
  TierKind pending = TierKind::None;
  std::string pending_name;  // speaker code or dependent-tier name
  std::string pending_body;
  bool last_main_skipped = false;
  std::optional<std::string> pending_mor;  // %mor waiting to attach
  std::string pending_main_speaker;
  std::optional<std::string> pending_main_body;

  auto flush_main = [&] {
    if (!pending_main_body) return;
    session.utterances.push_back(make_utterance(std::move(pending_main_speaker),
                                                std::move(*pending_main_body),
                                                std::move(pending_mor), config));
    pending_main_body.reset();
    pending_mor.reset();
  };

  auto flush = [&](int line_no) {
    switch (pending) {
      case TierKind::None:
        break;
      case TierKind::Header:
        if (pending_name == "Date") {
          if (auto date = parse_chat_date(pending_body))
            session.date = session.date ? session.date : date;
          else
            session.warnings.push_back("line " + std::to_string(line_no) +
                                       ": unparsable @Date header");
        }
        break;
      case TierKind::Main:
        flush_main();  // emit any previous utterance before starting the next
        if (contains(config.speakers, pending_name)) {
          pending_main_speaker = pending_name;
          pending_main_body = pending_body;
          last_main_skipped = false;
        } else {
          session.warnings.push_back("line " + std::to_string(line_no) + ": skipped speaker " +
                                     pending_name);
          last_main_skipped = true;
        }
        break;
      case TierKind::Dependent:
        if (pending_name == "mor") {
          if (pending_main_body)
            pending_mor = pending_body;
          else if (!last_main_skipped)
            session.warnings.push_back("line " + std::to_string(line_no) +
                                       ": %mor tier with no preceding utterance");
        }
        break;
    }
    pending = TierKind::None;
  };

  int line_no = 0;
  int tier_start_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    if (pos == text.size() && line.empty()) break;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.empty() || line.find_first_not_of(" \t") == std::string_view::npos) {
      // blank line: nothing to do
    } else if (line[0] == ' ' || line[0] == '\t') {
      if (pending == TierKind::None)
        session.warnings.push_back("line " + std::to_string(line_no) +
                                   ": continuation with no open tier");
      else
        pending_body += " " + trim(line);
    } else if (line[0] == '@') {
      flush(tier_start_line);
      auto colon = line.find(':');
      pending = TierKind::Header;
      pending_name = std::string(line.substr(1, colon == std::string_view::npos
                                                    ? line.size() - 1
                                                    : colon - 1));
      pending_body = colon == std::string_view::npos ? "" : trim(line.substr(colon + 1));
      tier_start_line = line_no;
    } else if (line[0] == '*' || line[0] == '%') {
      flush(tier_start_line);
      auto colon = line.find(':');
      if (colon == std::string_view::npos || colon == 1)
        throw ParseError("malformed tier prefix: " + std::string(line.substr(0, 16)), line_no);
      std::string name(line.substr(1, colon - 1));
      for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)))
          throw ParseError("malformed tier code: " + name, line_no);
      pending = line[0] == '*' ? TierKind::Main : TierKind::Dependent;
      pending_name = std::move(name);
      pending_body = trim(line.substr(colon + 1));
      tier_start_line = line_no;
    } else {
      throw ParseError("malformed tier prefix: " + std::string(line.substr(0, 16)), line_no);
    }

    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  flush(tier_start_line);
  flush_main();
  return session;
}

double session_mlu(std::span<const Session> sessions, std::string_view speaker) {
  long morphemes = 0;
  long utterances = 0;
  for (const auto& session : sessions)
    for (const auto& u : session.utterances)
      if (u.speaker == speaker && u.spontaneous) {
        morphemes += u.morphemes;
        ++utterances;
      }
  if (utterances == 0)
    throw InputError("session_mlu: no spontaneous utterances for speaker " +
                     std::string(speaker));
  return static_cast<double>(morphemes) / static_cast<double>(utterances);
}

std::string to_chat(const Session& session) {
  static constexpr std::array<std::string_view, 12> kMonths = {
      "JAN", "FEB", "MAR", "APR", "MAY", "JUN", "JUL", "AUG", "SEP", "OCT", "NOV", "DEC"};
  std::string out = "@Begin\n";
  if (session.date) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "@Date:\t%02d-%s-%04d\n", session.date->day,
                  std::string(kMonths[static_cast<std::size_t>(session.date->month - 1)]).c_str(),
                  session.date->year);
    out += buf;
  }
  for (const auto& u : session.utterances) {
    out += "*" + u.speaker + ":\t";
    for (std::size_t i = 0; i < u.tokens.size(); ++i) {
      out += u.tokens[i];
      out += ' ';
    }
    out += '.';
    for (const auto& p : u.postcodes) {
      out += ' ';
      out += p;
    }
    out += '\n';
    if (u.mor_tier) out += "%mor:\t" + *u.mor_tier + "\n";
  }
  out += "@End\n";
  return out;
}

std::string session_dump(const Session& session) {
  std::string out;
  for (const auto& u : session.utterances) {
    out += std::to_string(session.visit_index);
    out += '\t';
    out += u.speaker;
    out += '\t';
    out += u.spontaneous ? '1' : '0';
    out += '\t';
    out += std::to_string(u.morphemes);
    for (const auto& token : u.tokens) {
      out += '\t';
      out += token;
    }
    out += '\n';
  }
  return out;
}

Corpus load_corpus(const std::vector<std::string>& paths, const IngestConfig& config,
                   std::string child_id) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : paths) {
    fs::path p(entry);
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<fs::path> dir_files;
      for (const auto& item : fs::directory_iterator(p, ec))
        if (item.is_regular_file()) dir_files.push_back(item.path());
      std::sort(dir_files.begin(), dir_files.end());
      files.insert(files.end(), dir_files.begin(), dir_files.end());
    } else {
      files.push_back(std::move(p));
    }
  }

  Corpus corpus;
  corpus.child_id = child_id;
  int visit = 0;
  for (const auto& file : files) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw InputError("cannot open transcript: " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
      corpus.sessions.push_back(parse_session(buffer.str(), config, child_id, ++visit,
                                              file.filename().string()));
    } catch (const ParseError& e) {
      std::string message = e.what();
      std::string prefix = "line " + std::to_string(e.line()) + ": ";
      if (message.rfind(prefix, 0) == 0) message = message.substr(prefix.size());
      throw ParseError(file.filename().string() + ": " + message, e.line());
    }
  }
  return corpus;
}

}  // namespace lexnet
