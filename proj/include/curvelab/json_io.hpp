#pragma once

#include <string>

#include "curvelab/graph.hpp"
#include "curvelab/rooted.hpp"

namespace curvelab {

/// Parses a linear graph spec:
/// {"support": {"kind": "half_line"|"line"|"interval", "lo": .., "hi": ..},
///  "measure": "physical" | "normalized"
///           | {"explicit": {"prefix": [..], "tail": {..}}},
///  "weights": {"prefix": [..], "tail": {"kind": ..., ...}}}
LinearGraph parse_graph(const std::string& text);
std::string graph_to_json(const LinearGraph& g);

/// Parses a rooted graph spec:
/// {"root": id, "edges": [[u, v, w], ...], "measure": {"id": m, ...}}
RootedGraph parse_rooted(const std::string& text);
std::string rooted_to_json(const RootedGraph& rg);

}  // namespace curvelab
