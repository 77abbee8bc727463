#include "msd/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace msd {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) tokens.push_back(s.substr(start, i - start));
  }
  return tokens;
}

std::optional<std::size_t> to_index(std::string_view token) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

}  // namespace

std::vector<std::size_t> parse_index_list(std::string_view text) {
  std::vector<std::size_t> values;
  text = trim(text);
  if (text.empty()) throw ParseError(0, "empty list");
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const auto token = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    const auto value = to_index(token);
    if (!value) throw ParseError(0, "'" + std::string(token) + "' is not a non-negative integer");
    values.push_back(*value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

std::vector<int> parse_config_text(std::string_view text) {
  std::vector<int> values;
  for (std::size_t v : parse_index_list(text)) {
    if (v > 1'000'000) throw ParseError(0, "configuration entry too large");
    values.push_back(static_cast<int>(v));
  }
  return values;
}

std::string format_index_list(std::span<const std::size_t> values) {
  std::string out;
  for (std::size_t v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string format_config(std::span<const int> values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

DigraphFile parse_digraph(std::istream& in) {
  DigraphFile file;
  std::optional<std::size_t> n;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string_view body = trim(line.substr(1));
      file.comments.emplace_back(body);
      if (body.starts_with("cycle:")) {
        try {
          file.designated_cycle = parse_index_list(body.substr(6));
        } catch (const ParseError& e) {
          throw ParseError(line_no, std::string("bad cycle comment: ") + e.what());
        }
      }
      continue;
    }
    const auto tokens = split_ws(line);
    if (!n) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw ParseError(line_no, "expected header 'n <count>'");
      }
      n = to_index(tokens[1]);
      if (!n) throw ParseError(line_no, "vertex count is not a non-negative integer");
      file.digraph = Digraph(*n);
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected an arc 'u v'");
    const auto u = to_index(tokens[0]);
    const auto v = to_index(tokens[1]);
    if (!u || !v) throw ParseError(line_no, "arc endpoints must be non-negative integers");
    if (*u >= *n || *v >= *n) throw ParseError(line_no, "arc endpoint out of range");
    if (*u == *v) throw ParseError(line_no, "self-loop");
    if (file.digraph.has_arc(*u, *v)) throw ParseError(line_no, "duplicate arc");
    file.digraph.add_arc(*u, *v);
  }
  if (!n) throw ParseError(line_no, "missing header 'n <count>'");
  return file;
}

DigraphFile parse_digraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_digraph(in);
}

DigraphFile read_digraph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_digraph(in);
}

std::string format_digraph(const Digraph& d, std::span<const Vertex> cycle,
                           std::span<const std::string> comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  if (!cycle.empty()) out << "# cycle: " << format_index_list(cycle) << '\n';
  out << "n " << d.vertex_count() << '\n';
  for (const Arc& a : d.arcs()) out << a.from << ' ' << a.to << '\n';
  return out.str();
}

}  // namespace msd
