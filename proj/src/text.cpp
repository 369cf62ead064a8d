#include "glab/text.hpp"

#include <charconv>

#include "glab/error.hpp"

namespace glab::text {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '<') ++depth;
    else if (c == ')' || c == ']' || c == '>') --depth;
    else if (c == sep && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(s.substr(start)));
  return parts;
}

std::string_view strip_enclosing(std::string_view s, char open, char close) {
  s = trim(s);
  if (s.size() < 2 || s.front() != open || s.back() != close) return s;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == open) ++depth;
    else if (s[i] == close && --depth == 0 && i + 1 != s.size()) return s;
  }
  return trim(s.substr(1, s.size() - 2));
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorCode::syntax_error, "expected integer, got '" + std::string(s) + "'");
  return v;
}

std::vector<std::int64_t> parse_int_list(std::string_view s) {
  s = trim(s);
  std::vector<std::int64_t> out;
  if (s.empty()) return out;
  for (auto part : split_top_level(s, ',')) out.push_back(parse_int(part));
  return out;
}

std::string join_ints(const std::vector<std::int64_t>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace glab::text
