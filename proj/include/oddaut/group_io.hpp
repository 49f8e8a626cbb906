#pragma once

// Line-oriented group files:
//
//   cay 1
//   name <text>
//   order <n>
//   [spec <construction>]
//   n lines of n space-separated element indices (row g, column h = g*h)
//
// Element 0 must be the identity. Writing a parsed file reproduces it byte
// for byte when it was written by write_group_text.

#include <string>

#include "oddaut/group.hpp"

namespace oddaut {

inline constexpr int kGroupFileVersion = 1;

struct GroupFile {
  Group group;
  std::string spec;  // empty when the file has no spec line
};

/// Throws ParseError with line and column, NotAGroup for invalid tables.
GroupFile parse_group_text(const std::string& text, const std::string& origin = "<text>");
GroupFile parse_group_file(const std::string& path);

std::string write_group_text(const Group& g, const std::string& spec = {});
void write_group_file(const std::string& path, const Group& g, const std::string& spec = {});

std::string read_file(const std::string& path);

}  // namespace oddaut
