#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "abstree/tree.hpp"

namespace abstree {

// Edge-list text format:
//
//   n m
//   u v        (m lines, 0-based labels)
//
// Anything from '#' to the end of a line is ignored. A file may hold several
// blocks back to back; writers separate them with a blank line.

// Exactly one block; trailing data is a ParseError.
Tree parse_edge_list(std::string_view text);

// One or more blocks.
std::vector<Tree> parse_edge_lists(std::string_view text);

std::string format_edge_list(const Tree& tree);
std::string format_edge_lists(std::span<const Tree> trees);

}  // namespace abstree
