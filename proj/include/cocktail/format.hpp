#ifndef COCKTAIL_FORMAT_HPP
#define COCKTAIL_FORMAT_HPP

// Text encodings of a coloring.
//
// Edge-list form:
//
//   # comment lines start with '#'
//   n
//   u v c        one line per non-partner pair, 0 <= u < v < n, c in {1,2}
//
// Every non-partner pair must appear exactly once and partner pairs never.
// serialize() writes the pairs in EdgeOrder.
//
// Compact form `n:HEX`: the red-edge bit string b_0 .. b_{E-1} over EdgeOrder
// (E = n(n-2)/2, b_k = 1 iff edge k is red) packed little-endian into
// max(1, ceil(E/8)) bytes: byte j holds b_{8j} .. b_{8j+7}, with b_{8j} in its
// least significant bit. Bytes are written in increasing j, each as two
// lowercase hex digits (high nibble first). Padding bits must be zero. For
// n <= 8 the hex string is the edge code as an integer, byte-reversed.

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cocktail/graph.hpp"

namespace cocktail {

/// Parse failure with a 1-based position.
class ParseError : public InputError {
 public:
  ParseError(int line, int column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

inline std::string serialize(const ColoredCocktail& g) {
  std::string out = std::to_string(g.n()) + "\n";
  for (const auto& [u, v] : edge_order(g.n()).edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += g.neighbors(Color::red, u).contains(v) ? " 1\n" : " 2\n";
  }
  return out;
}

inline std::string to_compact(const ColoredCocktail& g) {
  const std::vector<bool> bits = g.edge_bits();
  const std::size_t bytes = bits.empty() ? 1 : (bits.size() + 7) / 8;
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = std::to_string(g.n()) + ":";
  for (std::size_t j = 0; j < bytes; ++j) {
    unsigned byte = 0;
    for (std::size_t b = 0; b < 8 && 8 * j + b < bits.size(); ++b)
      if (bits[8 * j + b]) byte |= 1U << b;
    out += kHex[byte >> 4];
    out += kHex[byte & 0xF];
  }
  return out;
}

namespace detail {

inline int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  const char l = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (l >= 'a' && l <= 'f') return l - 'a' + 10;
  return -1;
}

struct Token {
  std::string_view text;
  int column;
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

inline bool parse_int(std::string_view s, long long& value) {
  if (s.empty() || s.size() > 18) return false;
  value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  return true;
}

inline std::string pair_name(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

inline ColoredCocktail parse_compact(std::string_view body, int line_no, int column) {
  const std::size_t colon = body.find(':');
  long long n = 0;
  if (!parse_int(body.substr(0, colon), n)) throw ParseError(line_no, column, "malformed vertex count in compact form");
  if (n < 2 || n % 2 != 0 || n > kMaxVertices)
    throw ParseError(line_no, column, "vertex count must be even, >= 2 and <= 64, got " + std::to_string(n));
  const std::string_view hex = body.substr(colon + 1);
  const std::size_t edges = edge_count(static_cast<int>(n));
  const std::size_t bytes = edges == 0 ? 1 : (edges + 7) / 8;
  if (hex.size() != 2 * bytes)
    throw ParseError(line_no, column + static_cast<int>(colon) + 1,
                     "compact form for n=" + std::to_string(n) + " needs " + std::to_string(2 * bytes) +
                         " hex digits, got " + std::to_string(hex.size()));
  std::vector<bool> bits(edges);
  for (std::size_t j = 0; j < bytes; ++j) {
    const int hi = hex_value(hex[2 * j]);
    const int lo = hex_value(hex[2 * j + 1]);
    if (hi < 0 || lo < 0)
      throw ParseError(line_no, column + static_cast<int>(colon + 1 + 2 * j) + (hi < 0 ? 0 : 1), "invalid hex digit");
    const unsigned byte = static_cast<unsigned>(hi * 16 + lo);
    for (std::size_t b = 0; b < 8; ++b) {
      if (!((byte >> b) & 1U)) continue;
      if (8 * j + b >= edges)
        throw ParseError(line_no, column + static_cast<int>(colon + 1 + 2 * j), "padding bits must be zero");
      bits[8 * j + b] = true;
    }
  }
  return ColoredCocktail::from_edge_bits(static_cast<int>(n), bits);
}

}  // namespace detail

/// Parses either the edge-list form or the compact form. Every invariant is
/// checked; each violation has its own diagnostic naming the pair.
inline ColoredCocktail parse(std::string_view text) {
  int n = -1;
  int header_line = 0;
  int line_no = 0;
  Adjacency red{};
  Adjacency seen{};
  std::optional<ColoredCocktail> compact;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const std::vector<detail::Token> tokens = detail::tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (compact) throw ParseError(line_no, tokens.front().column, "unexpected content after compact form");

    if (n < 0) {
      if (tokens.size() != 1) throw ParseError(line_no, tokens[1].column, "first line must hold only the vertex count");
      if (tokens.front().text.find(':') != std::string_view::npos) {
        compact = detail::parse_compact(tokens.front().text, line_no, tokens.front().column);
        n = compact->n();
      } else {
        long long value = 0;
        if (!detail::parse_int(tokens.front().text, value))
          throw ParseError(line_no, tokens.front().column, "malformed vertex count");
        if (value < 2 || value % 2 != 0 || value > kMaxVertices)
          throw ParseError(line_no, tokens.front().column,
                           "vertex count must be even, >= 2 and <= 64, got " + std::to_string(value));
        n = static_cast<int>(value);
        header_line = line_no;
      }
      if (end == text.size()) break;
      continue;
    }

    if (tokens.size() != 3)
      throw ParseError(line_no, tokens.size() > 3 ? tokens[3].column : tokens.back().column,
                       "malformed line: expected 'u v c'");
    long long vals[3];
    for (int i = 0; i < 3; ++i)
      if (!detail::parse_int(tokens[static_cast<std::size_t>(i)].text, vals[i]))
        throw ParseError(line_no, tokens[static_cast<std::size_t>(i)].column, "malformed line: expected an integer");
    for (int i = 0; i < 2; ++i)
      if (vals[i] >= n)
        throw ParseError(line_no, tokens[static_cast<std::size_t>(i)].column,
                         "vertex " + std::to_string(vals[i]) + " out of range for n=" + std::to_string(n));
    const int u = static_cast<int>(vals[0]);
    const int v = static_cast<int>(vals[1]);
    if (u >= v) throw ParseError(line_no, tokens[1].column, "pair " + detail::pair_name(u, v) + " must have u < v");
    if (vals[2] != 1 && vals[2] != 2)
      throw ParseError(line_no, tokens[2].column, "color must be 1 or 2 for pair " + detail::pair_name(u, v));
    if (v == partner_of(u))
      throw ParseError(line_no, tokens[0].column, "partner pair " + detail::pair_name(u, v) + " must not be listed");
    const auto ui = static_cast<std::size_t>(u);
    const auto vi = static_cast<std::size_t>(v);
    const bool is_red = vals[2] == 1;
    if ((seen[ui] >> v) & 1U) {
      const bool was_red = (red[ui] >> v) & 1U;
      if (was_red != is_red)
        throw ParseError(line_no, tokens[2].column, "pair " + detail::pair_name(u, v) + " assigned both colors");
      throw ParseError(line_no, tokens[0].column, "pair " + detail::pair_name(u, v) + " listed twice");
    }
    seen[ui] |= std::uint64_t{1} << v;
    seen[vi] |= std::uint64_t{1} << u;
    if (is_red) {
      red[ui] |= std::uint64_t{1} << v;
      red[vi] |= std::uint64_t{1} << u;
    }
    if (end == text.size()) break;
  }

  if (compact) return *compact;
  if (n < 0) throw ParseError(line_no, 1, "missing vertex count");
  for (const auto& [u, v] : edge_order(n).edges())
    if (!((seen[static_cast<std::size_t>(u)] >> v) & 1U))
      throw ParseError(header_line, 1, "missing edge " + detail::pair_name(u, v));
  return ColoredCocktail(n, red);
}

}  // namespace cocktail

#endif  // COCKTAIL_FORMAT_HPP
