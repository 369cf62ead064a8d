#include "glab/thickset.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "glab/error.hpp"

namespace glab {

namespace {

using Bits = std::vector<std::uint64_t>;

void bit_set(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
void bit_reset(Bits& b, std::size_t i) { b[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
std::size_t bit_count(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}
bool bit_any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}
std::size_t bit_first(const Bits& b) {
  for (std::size_t w = 0; w < b.size(); ++w)
    if (b[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(b[w]));
  return b.size() * 64;
}
Bits bit_and(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

// Maximum clique by branch and bound with a greedy coloring bound, followed
// by a search for the lexicographically least clique of that size.
class CliqueSearch {
 public:
  CliqueSearch(std::vector<Bits> adj, std::size_t budget) : adj_(std::move(adj)), n_(adj_.size()), budget_(budget) {}

  // Returns the lexicographically least maximum clique, or the best clique
  // seen when the node budget runs out (complete() is then false).
  std::vector<std::size_t> lex_least_maximum() {
    Bits all((n_ + 63) / 64, 0);
    for (std::size_t i = 0; i < n_; ++i) bit_set(all, i);
    best_ = 0;
    if (n_ > 0) expand(all, 0);
    if (!complete_) return best_clique_;
    std::vector<std::size_t> cur;
    // the lex pass shares the budget; when it runs out the maximum found by
    // expand() is still exact, only not lexicographically least
    if (best_ > 0 && !lex(all, cur, best_)) return best_clique_;
    return cur;
  }
  bool complete() const { return complete_; }

 private:
  // Color classes in greedy order; returns vertices with their color number.
  void color_sort(const Bits& cand, std::vector<std::size_t>& order, std::vector<std::size_t>& colors) const {
    Bits uncolored = cand;
    std::size_t k = 0;
    while (bit_any(uncolored)) {
      ++k;
      Bits q = uncolored;
      while (bit_any(q)) {
        std::size_t v = bit_first(q);
        bit_reset(q, v);
        bit_reset(uncolored, v);
        for (std::size_t w = 0; w < q.size(); ++w) q[w] &= ~adj_[v][w];
        order.push_back(v);
        colors.push_back(k);
      }
    }
  }

  std::size_t color_bound(const Bits& cand) const {
    std::vector<std::size_t> order, colors;
    color_sort(cand, order, colors);
    return colors.empty() ? 0 : colors.back();
  }

  void expand(Bits cand, std::size_t size) {
    if (budget_ == 0) {
      complete_ = false;
      return;
    }
    --budget_;
    std::vector<std::size_t> order, colors;
    color_sort(cand, order, colors);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + colors[i] <= best_ || !complete_) return;
      std::size_t v = order[i];
      stack_.push_back(v);
      Bits next = bit_and(cand, adj_[v]);
      if (!bit_any(next)) {
        if (size + 1 > best_) {
          best_ = size + 1;
          best_clique_ = stack_;
        }
      } else {
        expand(next, size + 1);
      }
      stack_.pop_back();
      bit_reset(cand, v);
    }
  }

  bool lex(Bits cand, std::vector<std::size_t>& cur, std::size_t need) {
    if (need == 0) return true;
    while (bit_any(cand)) {
      if (budget_ == 0) return false;
      --budget_;
      if (bit_count(cand) < need) return false;
      std::size_t v = bit_first(cand);
      bit_reset(cand, v);
      Bits next = bit_and(cand, adj_[v]);  // only vertices after v remain
      if (bit_count(next) + 1 >= need && color_bound(next) + 1 >= need) {
        cur.push_back(v);
        if (lex(next, cur, need - 1)) return true;
        cur.pop_back();
      }
    }
    return false;
  }

  std::vector<Bits> adj_;
  std::size_t n_;
  std::size_t budget_;
  bool complete_ = true;
  std::size_t best_ = 0;
  std::vector<std::size_t> stack_, best_clique_;
};

// Largest sequence through e with every quotient inside `allowed`, which must
// not contain e. Left translation preserves quotients, so e can be fixed.
std::vector<Index> rooted_clique(const SubsetMask& allowed, bool& exact, std::size_t budget) {
  const GroupPtr& g = allowed.group();
  std::vector<Index> verts;
  allowed.for_each([&](Index x) {
    if (x != g->identity()) verts.push_back(x);
  });
  std::vector<Index> greedy{g->identity()};
  for (Index v : verts) {
    bool ok = true;
    for (Index w : greedy)
      if (!allowed.test(g->mul(g->inv(w), v))) {
        ok = false;
        break;
      }
    if (ok) greedy.push_back(v);
  }
  if (!exact) return greedy;

  const std::size_t n = verts.size();
  std::vector<Bits> adj(n, Bits((n + 63) / 64, 0));
  for (std::size_t i = 0; i < n; ++i) {
    Index inv = g->inv(verts[i]);
    for (std::size_t j = i + 1; j < n; ++j)
      if (allowed.test(g->mul(inv, verts[j]))) {
        bit_set(adj[i], j);
        bit_set(adj[j], i);
      }
  }
  CliqueSearch search(std::move(adj), budget);
  auto clique = search.lex_least_maximum();
  exact = search.complete();
  if (!exact && clique.size() + 1 <= greedy.size()) return greedy;
  std::sort(clique.begin(), clique.end());
  std::vector<Index> out{g->identity()};
  for (std::size_t v : clique) out.push_back(verts[v]);
  return out;
}

void require_symmetric(const SubsetMask& s) {
  if (!s.is_symmetric()) throw Error(ErrorCode::not_symmetric, "set is not closed under inverses");
}

SubsetMask power_of(const SubsetMask& p, std::size_t k) {
  SubsetMask acc = p;
  for (std::size_t i = 1; i < k; ++i) {
    SubsetMask next = product_sets(acc, p);
    if (next == acc) break;  // e in P makes the powers increase, so equality is final
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

bool is_p_free(const SubsetMask& p, const std::vector<Index>& seq) {
  const GroupPtr& g = p.group();
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (p.test(g->mul(g->inv(seq[i]), seq[j]))) return false;
  return true;
}

ThicknessResult thickness(const SubsetMask& p, std::size_t exact_limit, std::size_t node_budget) {
  require_symmetric(p);
  const GroupPtr& g = p.group();
  ThicknessResult r;
  if (!p.test(g->identity())) {
    r.witness = {g->identity(), g->identity()};
    return r;
  }
  bool exact = g->order() <= exact_limit;
  r.witness = rooted_clique(p.complement(), exact, node_budget);
  r.status = exact ? ThicknessStatus::exact : ThicknessStatus::lower_bound_only;
  r.value = r.witness.size() + 1;
  return r;
}

PowerCover power_cover(const SubsetMask& p, std::size_t cap) {
  PowerCover out;
  const GroupPtr& g = p.group();
  if (p.empty()) throw Error(ErrorCode::invalid_parameters, "power cover needs a nonempty set");
  SubsetMask acc = p;
  std::vector<SubsetMask> seen;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (k > 1) acc = product_sets(acc, p);
    if (acc.full()) {
      out.power = k;
      break;
    }
    if (std::find(seen.begin(), seen.end(), acc) != seen.end()) break;  // the powers cycle below G
    seen.push_back(acc);
  }
  out.generated = subgroup_generated(g, p.indices());
  return out;
}

std::optional<Genericity> genericity(const SubsetMask& p, std::size_t cap) {
  const GroupPtr& g = p.group();
  if (p.empty()) throw Error(ErrorCode::invalid_parameters, "genericity needs a nonempty set");
  const std::size_t n = g->order();
  auto pidx = p.indices();
  auto translate = [&](Index t) {
    SubsetMask m(g);
    for (Index x : pidx) m.set(g->mul(x, t));
    return m;
  };

  // greedy upper bound
  std::vector<Index> greedy;
  SubsetMask covered(g);
  while (!covered.full()) {
    Index best = 0;
    std::size_t gain = 0;
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t c = (translate(static_cast<Index>(t)) - covered).count();
      if (c > gain) gain = c, best = static_cast<Index>(t);
    }
    greedy.push_back(best);
    covered |= translate(best);
  }

  std::size_t lower = (n + pidx.size() - 1) / pidx.size();
  Genericity out;
  out.m = greedy.size();
  out.translators = greedy;
  std::size_t budget = 2'000'000;
  for (std::size_t m = lower; m < greedy.size(); ++m) {
    std::vector<Index> chosen;
    // x is covered by P t iff t lies in P^-1 x
    auto dfs = [&](auto&& self, const SubsetMask& cov) -> bool {
      if (cov.full()) return true;
      if (chosen.size() == m || budget == 0) return false;
      --budget;
      std::size_t missing = n - cov.count();
      if (missing > (m - chosen.size()) * pidx.size()) return false;
      Index x = 0;
      while (cov.test(x)) ++x;
      std::vector<Index> options;
      for (Index q : pidx) options.push_back(g->mul(g->inv(q), x));
      std::sort(options.begin(), options.end());
      options.erase(std::unique(options.begin(), options.end()), options.end());
      for (Index t : options) {
        chosen.push_back(t);
        if (self(self, cov | translate(t))) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (dfs(dfs, SubsetMask(g))) {
      out.m = m;
      out.translators = chosen;
      break;
    }
    if (budget == 0) {
      out.exact = false;
      break;
    }
  }
  std::sort(out.translators.begin(), out.translators.end());
  if (out.m > cap) return std::nullopt;
  return out;
}

GenericCertificate generic_subgroup_certificate(const SubsetMask& p, std::size_t cap) {
  const GroupPtr& g = p.group();
  if (!p.test(g->identity()) || !p.is_symmetric())
    throw Error(ErrorCode::precondition_violation, "generic subgroup certificate needs e in P and P = P^-1");
  auto gen = genericity(p, cap);
  if (!gen) throw Error(ErrorCode::precondition_violation, "P is not m-generic for m <= " + std::to_string(cap));
  GenericCertificate c;
  c.m = gen->m;
  c.exponent = 3 * c.m - 2;
  c.subgroup = power_of(p, c.exponent);
  c.closed_under_inverse = c.subgroup.is_symmetric();
  c.closed_under_product = product_sets(c.subgroup, c.subgroup).is_subset_of(c.subgroup);
  c.index = g->order() / c.subgroup.count();
  return c;
}

std::size_t ramsey_bound(std::size_t n, std::size_t m) {
  if (n > m) std::swap(n, m);
  if (n == 2 && m >= 2) return m;
  static const std::map<std::pair<std::size_t, std::size_t>, std::size_t> table{
      {{3, 3}, 6}, {{3, 4}, 9}, {{3, 5}, 14}, {{4, 4}, 18}};
  auto it = table.find({n, m});
  if (it == table.end())
    throw Error(ErrorCode::out_of_table, "R(" + std::to_string(n) + "," + std::to_string(m) + ") is not tabulated");
  return it->second;
}

bool ramsey_coloring_exists(std::size_t k, std::size_t n, std::size_t m) {
  if (k > 20) throw Error(ErrorCode::invalid_parameters, "coloring search limited to 20 vertices");
  // Vertex by vertex: choose the red neighbourhood of each new vertex among
  // the earlier ones, rejecting a red K_n or a blue K_m through it.
  std::vector<std::uint32_t> red(k, 0);
  auto has_clique = [&](auto&& self, std::uint32_t cand, std::size_t need, bool colour_red) -> bool {
    if (need == 0) return true;
    while (cand) {
      if (static_cast<std::size_t>(std::popcount(cand)) < need) return false;
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      std::uint32_t nb = colour_red ? red[static_cast<std::size_t>(v)] : ~red[static_cast<std::size_t>(v)];
      if (self(self, cand & nb, need - 1, colour_red)) return true;
    }
    return false;
  };
  auto place = [&](auto&& self, std::size_t v) -> bool {
    if (v == k) return true;
    std::uint32_t earlier = (std::uint32_t{1} << v) - 1;
    for (std::uint32_t s = 0; s <= earlier; ++s) {
      if (has_clique(has_clique, s, n - 1, true)) continue;
      if (has_clique(has_clique, earlier & ~s, m - 1, false)) continue;
      red[v] = s;
      for (std::size_t u = 0; u < v; ++u) {
        if (s >> u & 1) red[u] |= std::uint32_t{1} << v;
        else red[u] &= ~(std::uint32_t{1} << v);
      }
      if (self(self, v + 1)) return true;
    }
    for (std::size_t u = 0; u < v; ++u) red[u] &= ~(std::uint32_t{1} << v);
    return false;
  };
  if (n < 2 || m < 2) return false;
  return place(place, 0);
}

std::vector<std::optional<std::size_t>> class_cover_depths(const ClassPartition& classes, std::size_t cap) {
  const GroupPtr& g = classes.group;
  std::vector<std::optional<std::size_t>> out(classes.count());
  std::vector<char> done(classes.count(), 0);
  SubsetMask unit = SubsetMask::of(g, {g->identity()});
  for (std::size_t c = 0; c < classes.count(); ++c) {
    if (done[c]) continue;
    auto ic = static_cast<std::size_t>(classes.class_of[static_cast<std::size_t>(g->inv(classes.representatives[c]))]);
    SubsetMask s = classes.members(c) | classes.members(ic);
    SubsetMask ball = unit;
    std::optional<std::size_t> depth;
    if (ball.full()) depth = 0;
    for (std::size_t k = 1; k <= cap && !depth; ++k) {
      SubsetMask next = ball | normal_product(classes, ball, s);
      if (next == ball) break;
      ball = std::move(next);
      if (ball.full()) depth = k;
    }
    out[c] = out[ic] = depth;
    done[c] = done[ic] = 1;
  }
  return out;
}

SubsetMask gn_set(const ClassPartition& classes, std::size_t n) {
  auto depths = class_cover_depths(classes, n);
  SubsetMask out(classes.group);
  for (std::size_t c = 0; c < classes.count(); ++c)
    if (depths[c] && *depths[c] <= n)
      for (Index x : classes.elements_of(c)) out.set(x);
  return out;
}

SubsetMask gn_set(const GroupPtr& group, std::size_t n) { return gn_set(conjugacy_classes(group), n); }

SimplicityDegree bounded_simplicity_degree(const GroupPtr& group, std::size_t cap) {
  if (is_abelian(group)) throw Error(ErrorCode::degenerate_abelian, "every element of an abelian group is central");
  auto classes = conjugacy_classes(group);
  auto depths = class_cover_depths(classes, cap);
  SimplicityDegree out;
  std::size_t worst = 0;
  for (std::size_t c = 0; c < classes.count(); ++c) {
    if (classes.sizes[c] == 1) continue;  // central
    if (!depths[c]) {
      Index w = classes.representatives[c];
      out.witness = w;
      out.witness_closure = normal_subgroup_generated(group, std::vector<Index>{w});
      return out;
    }
    worst = std::max(worst, *depths[c]);
  }
  out.degree = worst;
  return out;
}

bool is_simple_nonabelian(const GroupPtr& group) {
  if (group->order() <= 1 || is_abelian(group)) return false;
  auto classes = conjugacy_classes(group);
  for (std::size_t c = 1; c < classes.count(); ++c)
    if (!normal_subgroup_generated(group, std::vector<Index>{classes.representatives[c]}).full()) return false;
  return true;
}

CoveringNumber covering_number(const GroupPtr& group, std::size_t cap) {
  if (!is_simple_nonabelian(group)) throw Error(ErrorCode::not_simple_nonabelian, "covering number needs a simple nonabelian group");
  auto classes = conjugacy_classes(group);
  CoveringNumber out;
  out.per_class.resize(classes.count());
  std::size_t worst = 0;
  bool all = true;
  for (std::size_t c = 0; c < classes.count(); ++c) {
    if (classes.sizes[c] == 1) continue;
    SubsetMask cm = classes.members(c), acc = cm;
    for (std::size_t k = 1; k <= cap; ++k) {
      if (k > 1) acc = normal_product(classes, acc, cm);
      if (acc.full()) {
        out.per_class[c] = k;
        break;
      }
    }
    if (!out.per_class[c]) all = false;
    else worst = std::max(worst, *out.per_class[c]);
  }
  if (all) out.value = worst;
  return out;
}

SpreadResult spread_length(const SubsetMask& s, std::size_t cap, std::size_t node_budget) {
  require_symmetric(s);
  const GroupPtr& g = s.group();
  SpreadResult r;
  if (s.test(g->identity())) {
    // repeats are allowed, so the constant sequence has any length
    r.value = cap;
    r.witness.assign(std::min<std::size_t>(cap, 2), g->identity());
    return r;
  }
  r.exact = g->order() <= kExactCliqueLimit;
  r.witness = rooted_clique(s, r.exact, node_budget);
  if (r.witness.size() > cap) {
    r.witness.resize(cap);
    r.exact = true;
  }
  r.value = r.witness.size();
  return r;
}

NormalCoreProbe normal_core_probe(const SubsetMask& p) {
  require_symmetric(p);
  auto classes = conjugacy_classes(p.group());
  SubsetMask p4 = power_of(p, 4);
  NormalCoreProbe out;
  out.core = SubsetMask(p.group());
  for (std::size_t c = 0; c < classes.count(); ++c) {
    bool inside = true;
    for (Index x : classes.elements_of(c)) inside = inside && p4.test(x);
    if (inside)
      for (Index x : classes.elements_of(c)) out.core.set(x);
  }
  out.core_thickness = thickness(out.core);
  return out;
}

SubsetMask image_mask(const std::vector<Index>& map, const SubsetMask& z, const GroupPtr& target) {
  SubsetMask out(target);
  z.for_each([&](Index x) { out.set(map[static_cast<std::size_t>(x)]); });
  return out;
}

SubsetMask preimage_mask(const std::vector<Index>& map, const SubsetMask& x, const GroupPtr& base) {
  SubsetMask out(base);
  for (std::size_t i = 0; i < map.size(); ++i)
    if (x.test(map[i])) out.set(static_cast<Index>(i));
  return out;
}

SubsetMask product_mask(const ProductGroup& prod, const SubsetMask& a, const SubsetMask& b) {
  SubsetMask out(prod.group);
  auto bi = b.indices();
  a.for_each([&](Index x) {
    for (Index y : bi) out.set(prod.pair(x, y));
  });
  return out;
}

}  // namespace glab
