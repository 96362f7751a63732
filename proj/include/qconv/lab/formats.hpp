#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "qconv/graph.hpp"
#include "qconv/graphlim.hpp"
#include "qconv/matroid.hpp"

namespace qconv::lab {

// Text inputs. Blank lines and lines starting with '#' are ignored; every
// error is a ParseError carrying the 1-based line number.

/// "n m", then m lines "u v" with 0-based nodes.
SimpleGraph parse_edge_list(std::string_view text, const std::string& source);
std::string format_edge_list(const SimpleGraph& g);

/// r, then r breakpoints b_1 < ... < b_r = 1 (one line or one per line),
/// then r lines of r rationals.
StepGraphon parse_step_graphon(std::string_view text, const std::string& source);

/// "q n c", then n lines of c field elements; column j is the vector of ground element j.
std::shared_ptr<LinearMatroid> parse_gf_matrix(std::string_view text, const std::string& source);

std::string read_file(const std::string& path);
SimpleGraph read_edge_list(const std::string& path);
StepGraphon read_step_graphon(const std::string& path);
std::shared_ptr<LinearMatroid> read_gf_matrix(const std::string& path);

/// Kn, Cn, Pn, En (edgeless), Ka,b (complete bipartite).
SimpleGraph named_graph(std::string_view name);
/// A named graph, or an edge-list file when the text is not a name.
SimpleGraph graph_argument(const std::string& text);

}  // namespace qconv::lab
