#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msd/digraph.hpp"

namespace msd {

// Digraph text format:
//
//   # comment lines and blank lines are ignored
//   n 5
//   0 1
//   1 2
//
// The header must precede every arc line. A comment of the form
// "# cycle: 0,1,2,3" designates a cycle of the digraph.
struct DigraphFile {
  Digraph digraph;
  std::vector<std::string> comments;  // without the leading '#'
  std::optional<std::vector<Vertex>> designated_cycle;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

DigraphFile parse_digraph(std::istream& in);
DigraphFile parse_digraph(std::string_view text);
DigraphFile read_digraph_file(const std::filesystem::path& path);

// Header, then arcs in lexicographic order. A non-empty `cycle` is recorded
// as a "# cycle:" comment.
std::string format_digraph(const Digraph& d, std::span<const Vertex> cycle = {},
                           std::span<const std::string> comments = {});

// Comma-separated non-negative integers, e.g. "0,1,0,2". Throws ParseError
// (line 0) on malformed input.
std::vector<std::size_t> parse_index_list(std::string_view text);
std::vector<int> parse_config_text(std::string_view text);

std::string format_index_list(std::span<const std::size_t> values);
std::string format_config(std::span<const int> values);

}  // namespace msd
