#include "glab/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "glab/chevalley.hpp"
#include "glab/groupcore.hpp"
#include "glab/modular.hpp"
#include "glab/text.hpp"
#include "glab/thickset.hpp"

namespace glab {

SyntaxError::SyntaxError(std::size_t position, std::string expected, const std::string& context)
    : Error(ErrorCode::syntax_error, "at position " + std::to_string(position) + ": expected " + expected +
                                         (context.empty() ? std::string() : " (" + context + ")")),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path resolve(const std::filesystem::path& dir, std::string_view name) {
  std::filesystem::path p{std::string(name)};
  if (p.is_absolute() || dir.empty()) return p;
  return dir / p;
}

class Cursor {
 public:
  Cursor(std::string_view s, std::size_t offset) : s_(s), offset_(offset) {}

  std::size_t pos() const { return offset_ + i_; }
  bool done() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  [[noreturn]] void fail(const std::string& expected) {
    skip();
    std::string found = i_ < s_.size() ? "found '" + std::string(1, s_[i_]) + "'" : "found end of input";
    throw SyntaxError(pos(), expected, found);
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("'") + c + "'");
    ++i_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  std::string ident() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    if (start == i_) fail("a name");
    return std::string(s_.substr(start, i_ - start));
  }
  std::int64_t integer() {
    skip();
    std::size_t start = i_;
    if (i_ < s_.size() && s_[i_] == '-') ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_ || (i_ == start + 1 && s_[start] == '-')) {
      i_ = start;
      fail("an integer");
    }
    auto v = std::string(s_.substr(start, i_ - start));
    if (v.size() > 12) throw SyntaxError(offset_ + start, "an integer of at most 12 digits", v);
    return std::stoll(v);
  }
  // Text up to the next ',' or ')' at bracket depth zero.
  std::pair<std::string_view, std::size_t> raw() {
    skip();
    std::size_t start = i_;
    int depth = 0;
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == '(' || c == '[' || c == '<') ++depth;
      if (c == ')' || c == ']' || c == '>') {
        if (depth == 0) break;
        --depth;
      }
      if (c == ',' && depth == 0) break;
      ++i_;
    }
    auto t = text::trim(s_.substr(start, i_ - start));
    if (t.empty()) {
      i_ = start;
      fail("an argument");
    }
    return {t, offset_ + start};
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  std::string_view s_;
  std::size_t offset_;
  std::size_t i_ = 0;
};

void need(bool ok, std::size_t pos, const std::string& what) {
  if (!ok) throw Error(ErrorCode::invalid_parameters, "at position " + std::to_string(pos) + ": " + what);
}

int small_int(Cursor& c, const std::string& what, std::int64_t lo, std::int64_t hi) {
  std::size_t at = c.pos();
  auto v = c.integer();
  need(v >= lo && v <= hi, at, what + " must lie in [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

std::int64_t prime(Cursor& c) {
  std::size_t at = c.pos();
  auto v = c.integer();
  need(v < (std::int64_t{1} << 31) && is_prime(v), at, std::to_string(v) + " is not prime");
  return v;
}

Index element_at(const GroupPtr& g, std::string_view t, std::size_t pos) {
  try {
    return g->parse(t);
  } catch (const SyntaxError&) {
    throw;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::syntax_error) throw SyntaxError(pos, "an element of " + format_spec(g->spec()), e.what());
    throw Error(e.code(), "at position " + std::to_string(pos) + ": " + e.what());
  }
}

SpecPtr group_spec(Cursor& c, const std::filesystem::path& dir, std::size_t cap) {
  std::size_t at = c.pos();
  std::string name = c.ident();
  c.expect('(');
  SpecPtr out;
  if (name == "Cyc") {
    out = make_spec(CyclicSpec{small_int(c, "k", 1, 1 << 24)});
  } else if (name == "Ab") {
    AbelianSpec a;
    do a.factors.push_back(small_int(c, "factor", 1, 1 << 24));
    while (c.accept(','));
    out = make_spec(a);
  } else if (name == "Sym" || name == "Alt") {
    int n = small_int(c, "n", 1, 12);
    out = name == "Sym" ? make_spec(SymmetricSpec{n}) : make_spec(AlternatingSpec{n});
  } else if (name == "SL" || name == "Semidirect") {
    int n = small_int(c, "n", 1, 8);
    c.expect(',');
    auto p = prime(c);
    out = name == "SL" ? make_spec(SpecialLinearSpec{n, p}) : make_spec(SemidirectSpec{n, p});
  } else if (name == "CocycleExt") {
    auto p = prime(c);
    c.expect(',');
    auto base = group_spec(c, dir, cap);
    c.expect(',');
    auto [file, fpos] = c.raw();
    auto h = read_cocycle_file(build_group(base, cap), resolve(dir, file));
    need(h.p == p, fpos, "cocycle file is over Z/" + std::to_string(h.p) + ", not Z/" + std::to_string(p));
    out = make_spec(CocycleExtSpec{p, base, h.table, std::string(file)});
  } else if (name == "Quotient") {
    QuotientSpec q;
    q.base = group_spec(c, dir, cap);
    c.expect(',');
    auto [ref, rpos] = c.raw();
    (void)rpos;
    if (ref == "center") {
      q.kind = NormalRef::center;
    } else if (ref == "derived") {
      q.kind = NormalRef::derived;
    } else {
      q.kind = NormalRef::explicit_set;
      auto base = build_group(q.base, cap);
      auto mask = read_subset_file(base, resolve(dir, ref));
      if (!is_normal_subgroup(mask)) throw Error(ErrorCode::not_normal, std::string(ref) + " is not a normal subgroup");
      q.normal = mask.indices();
      q.source = std::string(ref);
    }
    out = make_spec(q);
  } else if (name == "Product" || name == "DirectProduct") {
    auto l = group_spec(c, dir, cap);
    c.expect(',');
    auto r = group_spec(c, dir, cap);
    out = make_spec(ProductSpec{l, r});
  } else {
    throw SyntaxError(at, "a group name (Cyc, Ab, Sym, Alt, SL, Semidirect, CocycleExt, Quotient, Product)",
                      "found '" + name + "'");
  }
  c.expect(')');
  return out;
}

SubsetMask subset(Cursor& c, const GroupPtr& g, const std::filesystem::path& dir) {
  std::size_t at = c.pos();
  std::string name = c.ident();
  if (name == "all") return SubsetMask::full(g);
  if (name == "e") return SubsetMask::of(g, {g->identity()});
  c.expect('(');
  SubsetMask out(g);
  if (name == "class") {
    auto [t, pos] = c.raw();
    Index x = element_at(g, t, pos);
    out = normal_closure_set(g, SubsetMask::of(g, {x}));
  } else if (name == "ball") {
    std::vector<std::pair<std::string_view, std::size_t>> args;
    do args.push_back(c.raw());
    while (c.accept(','));
    if (args.size() < 2) throw SyntaxError(c.pos(), "generators followed by a radius", "ball");
    auto [rt, rpos] = args.back();
    std::int64_t r;
    try {
      r = text::parse_int(rt);
    } catch (const Error&) {
      throw SyntaxError(rpos, "an integer radius", std::string(rt));
    }
    need(r >= 0, rpos, "radius must be nonnegative");
    std::vector<Index> step;
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
      Index x = element_at(g, args[i].first, args[i].second);
      step.push_back(x);
      step.push_back(g->inv(x));
    }
    out.set(g->identity());
    SubsetMask frontier = out;
    for (std::int64_t k = 0; k < r; ++k) {
      SubsetMask next(g);
      frontier.for_each([&](Index y) {
        for (Index s : step) {
          Index z = g->mul(y, s);
          if (!out.test(z)) next.set(z);
        }
      });
      if (next.empty()) break;
      out |= next;
      frontier = next;
    }
  } else if (name == "arc") {
    const auto* cyc = std::get_if<CyclicSpec>(&g->spec().value);
    if (!cyc) throw Error(ErrorCode::invalid_parameters, "at position " + std::to_string(at) + ": arc(k) needs Cyc(n)");
    std::size_t kp = c.pos();
    auto k = c.integer();
    need(k >= 0, kp, "arc radius must be nonnegative");
    for (std::int64_t i = -k; i <= k; ++i) out.set(g->index_of(Form{static_cast<std::int32_t>(mod(i, cyc->k))}));
  } else if (name == "file") {
    auto [t, pos] = c.raw();
    (void)pos;
    out = read_subset_file(g, resolve(dir, t));
  } else if (name == "sym") {
    out = subset(c, g, dir);
    out |= out.inverse();
  } else if (name == "union") {
    do out |= subset(c, g, dir);
    while (c.accept(','));
  } else if (name == "elems") {
    do {
      auto [t, pos] = c.raw();
      out.set(element_at(g, t, pos));
    } while (c.accept(','));
  } else if (name == "normal") {
    out = normal_closure_set(g, subset(c, g, dir));
  } else if (name == "complement") {
    out = subset(c, g, dir).complement();
  } else if (name == "gn") {
    std::size_t np = c.pos();
    auto n = c.integer();
    need(n >= 0, np, "N must be nonnegative");
    out = gn_set(g, static_cast<std::size_t>(n));
  } else if (name == "borel") {
    out = borel_subgroup(g);
  } else {
    throw SyntaxError(at, "a subset form (class, ball, arc, file, sym, union, elems, normal, complement, gn, borel, all, e)",
                      "found '" + name + "'");
  }
  c.expect(')');
  return out;
}

}  // namespace

SpecPtr parse_group_spec(std::string_view text, const std::filesystem::path& dir, std::size_t cap) {
  Cursor c(text, 0);
  auto spec = group_spec(c, dir, cap);
  if (!c.done()) c.fail("end of input");
  return spec;
}

SubsetMask parse_subset(const GroupPtr& group, std::string_view text, const std::filesystem::path& dir) {
  Cursor c(text, 0);
  auto out = subset(c, group, dir);
  if (!c.done()) c.fail("end of input");
  return out;
}

SubsetMask read_subset_file(const GroupPtr& group, const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  SubsetMask out(group);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    try {
      out.set(group->parse(t));
    } catch (const Error& e) {
      throw Error(e.code(), path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

Cocycle read_cocycle_file(const GroupPtr& base, const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::int64_t> p;
  Cocycle h;
  std::vector<char> seen;
  auto where = [&] { return path.string() + ":" + std::to_string(lineno); };
  while (std::getline(in, line)) {
    ++lineno;
    auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::istringstream fields{std::string(t)};
    std::vector<std::string> w;
    for (std::string s; fields >> s;) w.push_back(s);
    if (!p) {
      if (w.size() != 2 || w[0] != "p") throw SyntaxError(lineno, "header 'p <prime>'", where());
      std::int64_t v;
      try {
        v = text::parse_int(w[1]);
      } catch (const Error&) {
        throw SyntaxError(lineno, "an integer after 'p'", where());
      }
      if (!is_prime(v) || v >= (std::int64_t{1} << 31))
        throw Error(ErrorCode::invalid_parameters, where() + ": " + w[1] + " is not prime");
      p = v;
      h = zero_cocycle(v, base);
      seen.assign(h.table.size(), 0);
      continue;
    }
    if (w.size() != 3) throw SyntaxError(lineno, "'x y value'", where());
    Index x, y;
    std::int64_t v;
    try {
      x = base->parse(w[0]);
      y = base->parse(w[1]);
      v = text::parse_int(w[2]);
    } catch (const Error& e) {
      throw SyntaxError(lineno, "'x y value' with elements of " + format_spec(base->spec()), where() + ": " + e.what());
    }
    auto slot = static_cast<std::size_t>(x) * base->order() + static_cast<std::size_t>(y);
    auto value = static_cast<std::int32_t>(mod(v, *p));
    if (seen[slot] && h.table[slot] != value)
      throw Error(ErrorCode::invalid_parameters, where() + ": conflicting value for (" + w[0] + "," + w[1] + ")");
    seen[slot] = 1;
    h.table[slot] = value;
  }
  if (!p) throw SyntaxError(lineno + 1, "header 'p <prime>'", path.string() + ": empty file");
  std::size_t missing = 0;
  for (char s : seen) missing += s ? 0 : 1;
  if (missing)
    throw Error(ErrorCode::table_incomplete, path.string() + ": " + std::to_string(missing) + " of " +
                                                 std::to_string(seen.size()) + " entries missing");
  return h;
}

void write_cocycle_file(const Cocycle& h, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + path.string());
  out << "p " << h.p << "\n";
  const auto n = h.base->order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      out << h.base->format(static_cast<Index>(x)) << " " << h.base->format(static_cast<Index>(y)) << " "
          << h.table[x * n + y] << "\n";
}

}  // namespace glab
