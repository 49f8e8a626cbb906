#include "oddaut/group_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace oddaut {
namespace {

[[noreturn]] void parse_fail(const std::string& origin, std::size_t line, std::size_t column, const std::string& what) {
  fail(ErrorKind::ParseError, origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
}

/// "key value" header line; returns the value.
std::string header_value(const std::string& line, const std::string& key, const std::string& origin,
                         std::size_t lineno) {
  if (line.rfind(key + " ", 0) != 0 || line.size() == key.size() + 1) {
    parse_fail(origin, lineno, 1, "expected '" + key + " <value>'");
  }
  return line.substr(key.size() + 1);
}

std::size_t parse_count(const std::string& s, const std::string& origin, std::size_t lineno, std::size_t column) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) parse_fail(origin, lineno, column, "bad integer '" + s + "'");
  return v;
}

}  // namespace

GroupFile parse_group_text(const std::string& text, const std::string& origin) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
  }
  if (lines.size() < 3) parse_fail(origin, lines.size() + 1, 1, "truncated header");
  const std::string version = header_value(lines[0], "cay", origin, 1);
  if (parse_count(version, origin, 1, 5) != static_cast<std::size_t>(kGroupFileVersion)) {
    parse_fail(origin, 1, 5, "unsupported format version " + version);
  }
  const std::string name = header_value(lines[1], "name", origin, 2);
  const std::size_t n = parse_count(header_value(lines[2], "order", origin, 3), origin, 3, 7);
  if (n == 0) parse_fail(origin, 3, 7, "order must be positive");
  if (n > order_cap()) {
    fail(ErrorKind::OrderCapExceeded, origin + ": order " + std::to_string(n) + " exceeds the cap " +
                                          std::to_string(order_cap()));
  }
  std::size_t first_row = 3;
  std::string spec;
  if (lines.size() > 3 && lines[3].rfind("spec ", 0) == 0) {
    spec = lines[3].substr(5);
    first_row = 4;
  }
  if (lines.size() < first_row + n) parse_fail(origin, lines.size() + 1, 1, "expected " + std::to_string(n) + " rows");
  for (std::size_t i = first_row + n; i < lines.size(); ++i) {
    if (!lines[i].empty()) parse_fail(origin, i + 1, 1, "trailing content after the table");
  }
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string& line = lines[first_row + r];
    const std::size_t lineno = first_row + r + 1;
    std::size_t pos = 0, count = 0;
    while (pos < line.size()) {
      while (pos < line.size() && line[pos] == ' ') ++pos;
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ') ++end;
      const std::size_t v = parse_count(line.substr(pos, end - pos), origin, lineno, pos + 1);
      if (v >= n) parse_fail(origin, lineno, pos + 1, "entry " + std::to_string(v) + " out of range");
      if (count == n) parse_fail(origin, lineno, pos + 1, "row has more than " + std::to_string(n) + " entries");
      flat.push_back(static_cast<Elem>(v));
      ++count;
      pos = end;
    }
    if (count != n) parse_fail(origin, lineno, line.size() + 1, "row has " + std::to_string(count) + " entries");
  }
  for (std::size_t c = 0; c < n; ++c) {
    require(flat[c] == c && flat[c * n] == c, ErrorKind::NotAGroup, origin + ": element 0 is not the identity");
  }
  return {Group::from_flat(n, std::move(flat), name), spec};
}

GroupFile parse_group_file(const std::string& path) { return parse_group_text(read_file(path), path); }

std::string write_group_text(const Group& g, const std::string& spec) {
  std::string out = "cay " + std::to_string(kGroupFileVersion) + "\nname " + g.name() + "\norder " +
                    std::to_string(g.order()) + "\n";
  if (!spec.empty()) out += "spec " + spec + "\n";
  for (Elem a = 0; a < g.order(); ++a) {
    const auto row = g.row(a);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(row[i]);
    }
    out += '\n';
  }
  return out;
}

void write_group_file(const std::string& path, const Group& g, const std::string& spec) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorKind::InvalidParameter, "cannot write " + path);
  out << write_group_text(g, spec);
  require(out.good(), ErrorKind::InvalidParameter, "write failed for " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace oddaut
