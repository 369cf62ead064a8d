#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace glab::text {

std::string_view trim(std::string_view s);

// Splits on `sep` at bracket depth zero; (), [] and <> all nest.
std::vector<std::string_view> split_top_level(std::string_view s, char sep);

// Removes one enclosing pair of `open`/`close` if it wraps the whole string.
std::string_view strip_enclosing(std::string_view s, char open, char close);

std::int64_t parse_int(std::string_view s);
std::vector<std::int64_t> parse_int_list(std::string_view s);

std::string join_ints(const std::vector<std::int64_t>& values, std::string_view sep = ",");

}  // namespace glab::text
