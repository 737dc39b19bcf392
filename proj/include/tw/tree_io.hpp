#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "tw/tree.hpp"

namespace tw {

// Plain-text tree format:
//   line 1: n
//   next n-1 lines: "u v" (0-based ids)
// Blank lines are ignored and a line whose first non-blank character is '#'
// is a comment.

Tree parse_tree(std::string_view text);
Tree read_tree(std::istream& in);
Tree read_tree_file(const std::filesystem::path& path);

std::string format_tree(const Tree& t);
void write_tree_file(const Tree& t, const std::filesystem::path& path);

}  // namespace tw
