#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "glab/error.hpp"
#include "glab/extensions.hpp"
#include "glab/group.hpp"
#include "glab/mask.hpp"

namespace glab {

// syntax_error carrying the 0-based offset into the parsed text (or the
// 1-based line of a file) and what the parser wanted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected, const std::string& context);
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

// Group grammar:
//   Cyc(k) | Ab(d1,...) | Sym(n) | Alt(n) | SL(n,p) | Semidirect(n,p)
//   | CocycleExt(p,<spec>,<cocycle-file>) | Quotient(<spec>,<subset-file>|center|derived)
//   | Product(<spec>,<spec>)
// Files are resolved against `dir`. Building a referenced base group may
// throw order_cap_exceeded.
SpecPtr parse_group_spec(std::string_view text, const std::filesystem::path& dir = {},
                         std::size_t cap = kDefaultOrderCap);

// Subset grammar inside a group:
//   class(g) | ball(g1,...,gk,r) | arc(k) | file(path) | sym(S) | union(S,...)
//   | elems(g1,...) | normal(S) | complement(S) | gn(N) | borel() | all | e
// Elements containing commas are written with brackets, e.g. [0,1,4,0].
SubsetMask parse_subset(const GroupPtr& group, std::string_view text, const std::filesystem::path& dir = {});

// One element per line; blank lines and lines starting with '#' are skipped.
SubsetMask read_subset_file(const GroupPtr& group, const std::filesystem::path& path);

// Header `p <p>`, then `x y value` lines over canonical forms of `base`.
// Throws io_error, syntax_error (with line number) and table_incomplete.
Cocycle read_cocycle_file(const GroupPtr& base, const std::filesystem::path& path);
void write_cocycle_file(const Cocycle& h, const std::filesystem::path& path);

}  // namespace glab
