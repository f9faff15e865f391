#include "lexnet/pajek.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace lexnet {
namespace {

std::string quoted(const std::string& label) {
  std::string out = "\"";
  for (char c : label) {
    out += c;
    if (c == '"') out += c;  // Pajek escapes quotes by doubling them
  }
  out += '"';
  return out;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  return true;
}

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  int line_no = 0;

  // Next non-blank line, stripped of trailing \r. Returns false at the end.
  bool next(std::string_view& line) {
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      std::string_view candidate =
          text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
      pos = eol == std::string_view::npos ? text.size() : eol + 1;
      ++line_no;
      if (!candidate.empty() && candidate.back() == '\r') candidate.remove_suffix(1);
      if (candidate.find_first_not_of(" \t") != std::string_view::npos) {
        line = candidate;
        return true;
      }
    }
    return false;
  }
};

int parse_int(std::string_view text, int line_no, const char* what) {
  int value = 0;
  std::size_t i = 0;
  if (i == text.size()) throw ParseError(std::string("missing ") + what, line_no);
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError(std::string("bad ") + what + ": " + std::string(text), line_no);
    value = value * 10 + (text[i] - '0');
  }
  return value;
}

}  // namespace

std::string write_pajek(const LexicalNetwork& network) {
  std::string out = "*Vertices " + std::to_string(network.node_count()) + "\n";

  std::map<std::string, int> index;
  int next = 1;
  for (const auto& node : network.nodes()) {
    index[node] = next++;
    out += std::to_string(index[node]) + " " + quoted(node) + "\n";
  }

  out += "*Arcs\n";
  // Node indices are lexicographic ranks, so the (src, dst)-ordered arc set
  // maps to index pairs that are already sorted ascending.
  for (const auto& [src, dst] : network.arcs())
    out += std::to_string(index[src]) + " " + std::to_string(index[dst]) + "\n";
  return out;
}

PajekData read_pajek(std::string_view text) {
  LineReader reader{text};
  std::string_view line;
  if (!reader.next(line)) throw ParseError("empty file, expected *Vertices", 1);

  std::istringstream header{std::string(line)};
  std::string keyword;
  long declared = -1;
  header >> keyword >> declared;
  if (!iequals(keyword, "*Vertices") || declared < 0)
    throw ParseError("expected \"*Vertices N\", got: " + std::string(line), reader.line_no);

  PajekData data;
  data.labels.reserve(static_cast<std::size_t>(declared));
  for (long i = 0; i < declared; ++i) {
    if (!reader.next(line))
      throw ParseError("expected " + std::to_string(declared) + " vertex lines, got " +
                           std::to_string(i),
                       reader.line_no);
    std::size_t p = line.find_first_not_of(" \t");
    std::size_t q = line.find_first_of(" \t", p);
    int vertex = parse_int(line.substr(p, q == std::string_view::npos ? line.size() - p : q - p),
                           reader.line_no, "vertex number");
    if (vertex != static_cast<int>(i) + 1)
      throw ParseError("vertex numbers must be 1..N in order, got " + std::to_string(vertex),
                       reader.line_no);

    std::string label = std::to_string(vertex);  // Pajek default when no label is given
    if (q != std::string_view::npos) {
      p = line.find_first_not_of(" \t", q);
      if (p != std::string_view::npos) {
        if (line[p] == '"') {
          label.clear();
          std::size_t j = p + 1;
          bool closed = false;
          while (j < line.size()) {
            if (line[j] == '"') {
              if (j + 1 < line.size() && line[j + 1] == '"') {
                label += '"';
                j += 2;
                continue;
              }
              closed = true;
              break;
            }
            label += line[j++];
          }
          if (!closed) throw ParseError("unterminated label quote", reader.line_no);
        } else {
          std::size_t end = line.find_first_of(" \t", p);
          label = std::string(
              line.substr(p, end == std::string_view::npos ? line.size() - p : end - p));
        }
        // anything after the label (coordinates, shapes) is ignored
      }
    }
    data.labels.push_back(std::move(label));
  }

  if (!reader.next(line)) throw ParseError("expected *Arcs section", reader.line_no + 1);
  std::istringstream arcs_header{std::string(line)};
  arcs_header >> keyword;
  if (!iequals(keyword, "*Arcs"))
    throw ParseError("expected \"*Arcs\", got: " + std::string(line), reader.line_no);

  while (reader.next(line)) {
    if (line[line.find_first_not_of(" \t")] == '*')
      throw ParseError("unsupported section: " + std::string(line), reader.line_no);
    std::istringstream pair{std::string(line)};
    long s = 0, t = 0;
    if (!(pair >> s >> t))
      throw ParseError("bad arc line: " + std::string(line), reader.line_no);
    std::string rest;
    if (pair >> rest && !rest.empty() && rest[0] != '%')  // Pajek comments start with %
      throw ParseError("trailing content on arc line: " + std::string(line), reader.line_no);
    if (s < 1 || s > declared || t < 1 || t > declared)
      throw ParseError("arc endpoint out of range: " + std::string(line), reader.line_no);
    data.arcs.emplace_back(static_cast<int>(s), static_cast<int>(t));
  }
  return data;
}

LexicalNetwork network_from_pajek(const PajekData& data, Provenance meta) {
  LexicalNetwork network(std::move(meta));
  for (const auto& label : data.labels) {
    if (network.has_node(label)) throw ParseError("duplicate vertex label: " + label, 0);
    network.add_node(label);
  }
  for (const auto& [s, t] : data.arcs) {
    if (s < 1 || static_cast<std::size_t>(s) > data.labels.size() || t < 1 ||
        static_cast<std::size_t>(t) > data.labels.size())
      throw ParseError("arc endpoint out of range", 0);
    network.add_arc(data.labels[static_cast<std::size_t>(s - 1)],
                    data.labels[static_cast<std::size_t>(t - 1)]);
  }
  return network;
}

}  // namespace lexnet
