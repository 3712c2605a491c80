#pragma once

#include <string>
#include <string_view>

#include "kbest/domains/explicit_graph.hpp"

namespace kbest::domains {

/// DIMACS shortest-path `.gr` text: `c` comments, one `p sp n m` header and
/// `a u v w` arcs with 1-based vertices. Repeated arcs become parallel edges.
/// Throws ParseError carrying the offending line number.
ExplicitGraph parse_dimacs_gr(std::string_view text);

/// Adds `v id lon lat` coordinates from `.co` text. Empty text leaves the
/// graph without coordinates; otherwise every vertex must be covered.
void parse_dimacs_co(std::string_view text, ExplicitGraph& graph);

std::string emit_dimacs_gr(const ExplicitGraph& graph);
std::string emit_dimacs_co(const ExplicitGraph& graph);

std::string read_text_file(const std::string& path);

}  // namespace kbest::domains
