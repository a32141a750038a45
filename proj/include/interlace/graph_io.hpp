#pragma once

#include "interlace/graph.hpp"

#include <string>
#include <string_view>

namespace interlace {

/// Plain edge list: one "u v" per line, "loop u" marks a loop, a lone "u"
/// declares an isolated vertex, '#' starts a comment. Vertices appear in
/// first-mention order with natural symbolic labels. Throws ParseError.
LabeledGraph parse_edgelist(std::string_view text);

/// {"vertices":[{"id":"a","loop":false,"labels":{"phi":"phi_a",...}}],
///  "edges":[["a","b"]]}. "loop" and "labels" are optional (natural labels
/// by default); label values are polynomial strings or integers.
LabeledGraph parse_graph_json(std::string_view text);

std::string to_graph_json(const LabeledGraph& g);
std::string to_edgelist(const LabeledGraph& g);

}  // namespace interlace
