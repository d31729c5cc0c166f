#ifndef COCKTAIL_COVER_IO_HPP
#define COCKTAIL_COVER_IO_HPP

// Cover files: two lines, vertices sorted ascending, '#' lines ignored.
//
//   A c: v v v ...
//   B c: v v v ...

#include <string>
#include <string_view>
#include <vector>

#include "cocktail/cover.hpp"
#include "cocktail/format.hpp"

namespace cocktail {

struct CoverSets {
  VertexSet a;
  Color color_a = Color::red;
  VertexSet b;
  Color color_b = Color::red;
};

inline std::string format_set_line(char label, Color c, VertexSet s) {
  std::string out(1, label);
  out += ' ';
  out += std::to_string(to_int(c));
  out += ':';
  for (int v : s) out += " " + std::to_string(v);
  return out + "\n";
}

inline std::string format_cover(const Cover& cover) {
  return format_set_line('A', cover.color_a, cover.a) + format_set_line('B', cover.color_b, cover.b);
}

/// Parses a cover file for a graph on n vertices.
inline CoverSets parse_cover(std::string_view text, int n) {
  CoverSets out;
  bool have[2] = {false, false};
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::vector<detail::Token> tokens = detail::tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;
    if (tokens.size() < 2 || tokens[0].text.size() != 1 || (tokens[0].text[0] != 'A' && tokens[0].text[0] != 'B'))
      throw ParseError(line_no, tokens[0].column, "expected 'A c:' or 'B c:'");
    const int slot = tokens[0].text[0] == 'A' ? 0 : 1;
    if (have[slot]) throw ParseError(line_no, tokens[0].column, std::string("set ") + tokens[0].text[0] + " given twice");
    const std::string_view head = tokens[1].text;
    if (head.size() != 2 || head[1] != ':' || (head[0] != '1' && head[0] != '2'))
      throw ParseError(line_no, tokens[1].column, "expected color '1:' or '2:'");
    const Color c = head[0] == '1' ? Color::red : Color::blue;
    VertexSet s;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      long long v = 0;
      if (!detail::parse_int(tokens[i].text, v)) throw ParseError(line_no, tokens[i].column, "expected a vertex");
      if (v >= n)
        throw ParseError(line_no, tokens[i].column, "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
      if (s.contains(static_cast<int>(v)))
        throw ParseError(line_no, tokens[i].column, "vertex " + std::to_string(v) + " listed twice");
      s.insert(static_cast<int>(v));
    }
    have[slot] = true;
    if (slot == 0) {
      out.a = s;
      out.color_a = c;
    } else {
      out.b = s;
      out.color_b = c;
    }
  }
  if (!have[0] || !have[1]) throw ParseError(line_no, 1, "cover file needs both an A line and a B line");
  return out;
}

}  // namespace cocktail

#endif  // COCKTAIL_COVER_IO_HPP
