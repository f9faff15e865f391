#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexnet/errors.hpp"
#include "lexnet/graph.hpp"

namespace lexnet {

/// Renders a network in Pajek .net format, byte-deterministically:
///   *Vertices N
///   i "label"        (1-based, labels in lexicographic order, '"' doubled)
///   *Arcs
///   s t              (index pairs sorted ascending)
/// Every line ends with \n, including the last.
std::string write_pajek(const LexicalNetwork& network);

/// Vertex labels (position 0 holds vertex 1) and 1-based arc index pairs.
struct PajekData {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> arcs;
};

/// Minimal .net reader for the dialect write_pajek emits: a *Vertices section
/// with quoted labels (trailing fields ignored), then a *Arcs section of index
/// pairs. Throws ParseError on anything else.
PajekData read_pajek(std::string_view text);

/// Rebuilds a network from parsed Pajek data. Duplicate labels and
/// out-of-range indices throw ParseError (reported as line 0).
LexicalNetwork network_from_pajek(const PajekData& data, Provenance meta = {});

}  // namespace lexnet
