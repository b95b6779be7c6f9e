#pragma once

#include "gtop/complex.hpp"
#include "gtop/graph.hpp"
#include "gtop/group.hpp"
#include "gtop/hom_complex.hpp"
#include "gtop/poset.hpp"

#include <string>
#include <vector>

namespace gtop::io {

// All parsers throw ParseError with a line number. Blank lines and lines
// starting with '#' are ignored by the text formats. Element order is the
// order of first appearance.

/// `v <label>` and `e <label> <label>`; `e x x` is a loop. Endpoints that
/// were not declared are added on first use.
Graph parse_graph_text(const std::string& text);
/// {"vertices": [...], "edges": [[a, b], ...]}
Graph parse_graph_json(const std::string& text);
/// `p edge n m` and `e u v` with 1-based vertices; loops are rejected.
Graph parse_dimacs(const std::string& text);
/// Picks JSON, DIMACS or the text format from the content.
Graph parse_graph(const std::string& text);

std::string graph_to_text(const Graph& g);
std::string graph_to_json(const Graph& g);

/// `el <label>` and `le <label> <label>` (covers; closed transitively).
Poset parse_poset(const std::string& text);
/// Cover pairs only.
std::string poset_to_text(const Poset& p);

/// `s <label> ...`, one simplex per line, or {"simplices": [[...], ...]}.
SimplicialComplex parse_complex(const std::string& text);
std::string complex_to_text(const SimplicialComplex& k);
std::string complex_to_json(const SimplicialComplex& k);

/// One generator per line: the images of the carrier labels, in carrier
/// order. JSON: {"generators": [[...], ...]}. The generators are closed to
/// a group acting on the left. No generators give the trivial group.
GroupAction parse_group(const std::string& text, const std::vector<std::string>& carrier);

/// Hom(G,H) in the poset text format.
std::string hom_poset_to_text(const HomPoset& hom);

std::string read_file(const std::string& path); // throws ParseError when unreadable

} // namespace gtop::io
