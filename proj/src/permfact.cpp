#include "glab/permfact.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "glab/error.hpp"
#include "glab/text.hpp"
#include "glab/thickset.hpp"

namespace glab {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::invalid_parameters, "image array is not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

Permutation Permutation::cycle(int n, const std::vector<int>& points) {
  Permutation p = identity(n);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int x : points) {
    if (x < 1 || x > n) throw Error(ErrorCode::invalid_parameters, "point " + std::to_string(x) + " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(x - 1)]) throw Error(ErrorCode::overlap_violation, "point " + std::to_string(x) + " repeated in a cycle");
    seen[static_cast<std::size_t>(x - 1)] = 1;
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    p.img_[static_cast<std::size_t>(points[i] - 1)] = points[(i + 1) % points.size()] - 1;
  return p;
}

Permutation Permutation::parse(std::string_view t, int n) {
  t = text::trim(t);
  Permutation acc = identity(n);
  if (t == "e" || t == "id" || t == "()" || t.empty()) return acc;
  std::size_t pos = 0;
  std::vector<Permutation> cycles;
  while (pos < t.size()) {
    if (t[pos] == ' ') {
      ++pos;
      continue;
    }
    if (t[pos] != '(')
      throw Error(ErrorCode::syntax_error, "at position " + std::to_string(pos) + ": expected '(' in '" + std::string(t) + "'");
    auto close = t.find(')', pos);
    if (close == std::string_view::npos)
      throw Error(ErrorCode::syntax_error, "at position " + std::to_string(pos) + ": unclosed cycle in '" + std::string(t) + "'");
    std::vector<int> pts;
    for (auto v : text::parse_int_list(t.substr(pos + 1, close - pos - 1))) pts.push_back(static_cast<int>(v));
    cycles.push_back(cycle(n, pts));
    pos = close + 1;
  }
  for (const auto& c : cycles) acc = acc * c;
  return acc;
}

Permutation Permutation::from_form(std::span<const std::int32_t> form) {
  return Permutation(std::vector<int>(form.begin(), form.end()));
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (o.degree() != degree()) throw Error(ErrorCode::invalid_parameters, "degree mismatch in composition");
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = img_[static_cast<std::size_t>(o.img_[i])];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  return r;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == static_cast<int>(i)) continue;
    std::vector<int> c;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
      seen[j] = 1;
      c.push_back(static_cast<int>(j) + 1);
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (const auto& c : cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

std::vector<int> Permutation::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) s.push_back(static_cast<int>(i) + 1);
  return s;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "e";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    s += ')';
  }
  return s;
}

namespace {

void require_distinct(int n, const std::vector<int>& pts) {
  std::vector<char> seen(static_cast<std::size_t>(n + 1), 0);
  for (int x : pts) {
    if (x < 1 || x > n) throw Error(ErrorCode::invalid_parameters, "point " + std::to_string(x) + " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(x)]) throw Error(ErrorCode::overlap_violation, "point " + std::to_string(x) + " used twice");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

std::vector<int> join(std::initializer_list<const std::vector<int>*> parts) {
  std::vector<int> out;
  for (auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

}  // namespace

IdentityCheck cycle_quotient(int n, int x, const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::length_mismatch, "cycle quotient needs |a| = |b|");
  std::vector<int> xs{x};
  require_distinct(n, join({&xs, &a, &b}));
  std::vector<int> rev(a.rbegin(), a.rend());
  IdentityCheck c;
  c.lhs = Permutation::cycle(n, join({&xs, &a})).inverse() * Permutation::cycle(n, join({&xs, &b}));
  c.rhs = Permutation::cycle(n, join({&xs, &b, &rev}));
  return c;
}

IdentityCheck odd_cycle_merge(int n, int x, int y, const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() % 2 == 0 || b.size() % 2 == 0) throw Error(ErrorCode::even_length, "odd cycle merge needs odd |a| and |b|");
  std::vector<int> xs{x}, ys{y}, xy{x, y};
  require_distinct(n, join({&xy, &a, &b}));
  IdentityCheck c;
  c.lhs = Permutation::cycle(n, join({&xy, &a})) * Permutation::cycle(n, join({&xy, &b}));
  c.rhs = Permutation::cycle(n, join({&xs, &a})) * Permutation::cycle(n, join({&ys, &b}));
  return c;
}

namespace {

// Point-level image tables for the sweep. A shape fixes four cycle layouts
// over tuple positions; a labelling writes them into point tables and compares
// left(right(z)) on its support. Reads never leave the support, so stale
// entries from earlier labellings are harmless.
class SweepKernel {
 public:
  explicit SweepKernel(int n) {
    for (auto& t : tab_) {
      t.resize(static_cast<std::size_t>(n + 1));
      std::iota(t.begin(), t.end(), 0);
    }
  }

  // (x,a)^-1 (x,b) against (x,b,rev a); t = [x, a_1..a_m, b_1..b_m]
  void quotient_shape(int m) {
    auto k = static_cast<std::size_t>(1 + 2 * m);
    layouts(k);
    std::vector<std::size_t> a{0}, b{0}, r{0};
    for (int i = 1; i <= m; ++i) {
      a.push_back(static_cast<std::size_t>(i));
      b.push_back(static_cast<std::size_t>(m + i));
      r.push_back(static_cast<std::size_t>(m + i));
    }
    for (int i = m; i >= 1; --i) r.push_back(static_cast<std::size_t>(i));
    std::reverse(a.begin(), a.end());  // the inverse cycle
    cycle(0, a);
    cycle(1, b);
    cycle(3, r);
  }

  // (x,y,a)(x,y,b) against (x,a)(y,b); t = [x, y, a_1..a_la, b_1..b_lb]
  void merge_shape(std::size_t la, std::size_t lb) {
    std::size_t k = 2 + la + lb;
    layouts(k);
    std::vector<std::size_t> c1{0, 1}, c2{0, 1}, d1{0}, d2{1};
    for (std::size_t i = 2; i < 2 + la; ++i) {
      c1.push_back(i);
      d1.push_back(i);
    }
    for (std::size_t i = 2 + la; i < k; ++i) {
      c2.push_back(i);
      d2.push_back(i);
    }
    cycle(0, c1);
    cycle(1, c2);
    cycle(2, d1);
    cycle(3, d2);
  }

  // tab0(tab1(z)) == tab2(tab3(z)) on the support of t
  bool check(const std::vector<int>& t) {
    const std::size_t k = t.size();
    for (std::size_t j = 0; j < 4; ++j) {
      int* tab = tab_[j].data();
      const std::size_t* nx = next_[j].data();
      for (std::size_t i = 0; i < k; ++i) tab[t[i]] = t[nx[i]];
    }
    const int* l1 = tab_[0].data();
    const int* l2 = tab_[1].data();
    const int* r1 = tab_[2].data();
    const int* r2 = tab_[3].data();
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i) ok &= l1[l2[t[i]]] == r1[r2[t[i]]];
    return ok;
  }

  // Parity of tab0 tab1 read from its cycles on the support; call right
  // after check().
  bool left_even(const std::vector<int>& t) {
    const std::size_t k = t.size();
    const int* l1 = tab_[0].data();
    const int* l2 = tab_[1].data();
    std::size_t cycles = 0;
    std::uint64_t seen = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (seen >> i & 1u) continue;
      ++cycles;
      int z = t[i];
      do {
        auto pos = static_cast<std::size_t>(std::find(t.begin(), t.end(), z) - t.begin());
        seen |= std::uint64_t{1} << pos;
        z = l1[l2[z]];
      } while (z != t[i]);
    }
    return (k - cycles) % 2 == 0;
  }

 private:
  void layouts(std::size_t k) {
    for (auto& nx : next_) {
      nx.resize(k);
      std::iota(nx.begin(), nx.end(), std::size_t{0});
    }
  }
  void cycle(std::size_t j, const std::vector<std::size_t>& pos) {
    for (std::size_t i = 0; i < pos.size(); ++i) next_[j][pos[i]] = pos[(i + 1) % pos.size()];
  }
  std::array<std::vector<int>, 4> tab_;
  std::array<std::vector<std::size_t>, 4> next_;
};

// labellings per shape that are also run through the Permutation code
constexpr std::size_t kCrossChecks = 256;

}  // namespace

IdentitySweep sweep_identities(int n, int max_param, std::size_t exhaustive_limit, std::size_t sample,
                               std::uint64_t seed) {
  IdentitySweep sw;
  std::mt19937_64 rng(seed);
  SweepKernel kernel(n);
  // Calls f on labellings (injective k-tuples of points of 1..n) and on the
  // running count within the shape.
  auto for_labellings = [&](std::size_t k, auto&& f) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= static_cast<std::size_t>(n) - i;
    std::size_t seen = 0;
    if (count <= exhaustive_limit) {
      // k-prefixes of the permutations of 1..n in lex order: reversing the
      // tail before next_permutation skips the orderings of unused points
      std::vector<int> pts(static_cast<std::size_t>(n));
      std::iota(pts.begin(), pts.end(), 1);
      std::vector<int> tuple(k);
      const auto tail = pts.begin() + static_cast<std::ptrdiff_t>(k);
      do {
        std::copy(pts.begin(), tail, tuple.begin());
        f(tuple, seen++);
        std::reverse(tail, pts.end());
      } while (std::next_permutation(pts.begin(), pts.end()));
    } else {
      ++sw.shapes_sampled;
      std::vector<int> pts(static_cast<std::size_t>(n));
      std::iota(pts.begin(), pts.end(), 1);
      std::vector<int> tuple(k);
      for (std::size_t s = 0; s < sample; ++s) {
        std::shuffle(pts.begin(), pts.end(), rng);
        std::copy(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(k), tuple.begin());
        f(tuple, seen++);
      }
    }
  };

  for (int m = 0; m <= max_param; ++m) {
    auto k = static_cast<std::size_t>(1 + 2 * m);
    if (k > static_cast<std::size_t>(n)) break;
    kernel.quotient_shape(m);
    for_labellings(k, [&](const std::vector<int>& t, std::size_t idx) {
      bool ok = kernel.check(t);
      bool even = kernel.left_even(t);
      if (idx < kCrossChecks) {
        std::vector<int> a(t.begin() + 1, t.begin() + 1 + m), b(t.begin() + 1 + m, t.end());
        auto c = cycle_quotient(n, t[0], a, b);
        if (c.holds() != ok || c.lhs.is_even() != even) ok = false;
      }
      ++sw.cycle_quotient_checks;
      if (!ok) ++sw.cycle_quotient_failures;
      ++sw.odd_results_checked;
      if (even) ++sw.odd_results_even;
    });
  }
  for (int p = 0; p <= max_param; ++p)
    for (int q = 0; q <= max_param; ++q) {
      auto la = static_cast<std::size_t>(2 * p + 1), lb = static_cast<std::size_t>(2 * q + 1);
      std::size_t k = 2 + la + lb;
      if (k > static_cast<std::size_t>(n)) continue;
      kernel.merge_shape(la, lb);
      for_labellings(k, [&](const std::vector<int>& t, std::size_t idx) {
        bool ok = kernel.check(t);
        if (idx < kCrossChecks) {
          std::vector<int> a(t.begin() + 2, t.begin() + 2 + static_cast<std::ptrdiff_t>(la));
          std::vector<int> b(t.begin() + 2 + static_cast<std::ptrdiff_t>(la), t.end());
          if (odd_cycle_merge(n, t[0], t[1], a, b).holds() != ok) ok = false;
        }
        ++sw.odd_merge_checks;
        if (!ok) ++sw.odd_merge_failures;
      });
    }
  return sw;
}

std::string_view to_string(ExpressPath p) {
  switch (p) {
    case ExpressPath::trivial: return "trivial";
    case ExpressPath::constructive: return "constructive";
    case ExpressPath::fallback: return "fallback";
  }
  return "?";
}

namespace {

// Blocks of disjoint cycles sharing one anchor point per cycle; with N-thick P
// two of them have quotient in P, and that quotient has the cycle type of
// `target`.
std::optional<CollisionWitness> find_collision(const GroupPtr& g, const SubsetMask& p, std::size_t n_thick,
                                               const Permutation& target) {
  const int n = target.degree();
  CollisionWitness w;
  w.thickness = n_thick;
  std::size_t needed = 0, parity = 0;
  for (const auto& c : target.cycles()) {
    if (c.size() % 2 == 0) return std::nullopt;
    w.cycle_lengths.push_back(static_cast<int>(c.size()));
    needed += 1 + n_thick * (c.size() - 1) / 2;
    parity += (c.size() - 1) / 2;
  }
  // An (m+1)-cycle is odd for odd m. Odd blocks get the same transposition
  // on two spare points, which cancels in every quotient.
  bool pad = parity % 2 == 1;
  if (pad) needed += 2;
  if (needed > static_cast<std::size_t>(n)) return std::nullopt;
  const std::size_t k = w.cycle_lengths.size();
  int next = static_cast<int>(k) + 1;  // points 1..k are the anchors
  Permutation spare = pad ? Permutation::cycle(n, {n - 1, n}) : Permutation::identity(n);
  std::vector<Index> blocks;
  std::vector<Permutation> perms;
  for (std::size_t j = 0; j < n_thick; ++j) {
    Permutation b = spare;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<int> pts{static_cast<int>(i) + 1};
      for (int t = 0; t < (w.cycle_lengths[i] - 1) / 2; ++t) pts.push_back(next++);
      b = b * Permutation::cycle(n, pts);
    }
    perms.push_back(b);
    blocks.push_back(g->index_of(b.form()));
  }
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (p.test(g->mul(g->inv(blocks[i]), blocks[j]))) {
        w.first = i;
        w.second = j;
        w.quotient = perms[i].inverse() * perms[j];
        return w;
      }
  throw std::logic_error("thickness promised a collision among the blocks");
}

}  // namespace

Expression express_even(const ClassPartition& classes, const SubsetMask& p, Index sigma) {
  const GroupPtr& g = classes.group;
  const auto* alt = std::get_if<AlternatingSpec>(&g->spec().value);
  if (!alt) throw Error(ErrorCode::invalid_parameters, "express_even works in Alt(n)");
  if (!classes.is_normal(p)) throw Error(ErrorCode::not_normal, "P is not a union of conjugacy classes");
  if (!p.is_symmetric()) throw Error(ErrorCode::not_symmetric, "P is not closed under inverses");
  auto th = thickness(p);
  if (!th.value) throw Error(ErrorCode::not_thick, "P is not thick (it misses the identity)");

  const int n = alt->n;
  Permutation s = Permutation::from_form(g->form(sigma));
  Expression out;
  if (sigma == g->identity()) {
    out.q1 = out.q2 = g->identity();
    out.path = ExpressPath::trivial;
    return out;
  }

  // sigma = (odd cycles)(paired even cycles); each pair (x,a..)(y,b..) is
  // (x,y,a..)(x,y,b..), and distinct pairs are disjoint.
  Permutation q1 = Permutation::identity(n), q2 = Permutation::identity(n);
  std::vector<std::vector<int>> even;
  for (const auto& c : s.cycles()) {
    if (c.size() % 2) q1 = q1 * Permutation::cycle(n, c);
    else even.push_back(c);
  }
  for (std::size_t k = 0; k + 1 < even.size(); k += 2) {
    const auto& c1 = even[k];
    const auto& c2 = even[k + 1];
    std::vector<int> a(c1.begin() + 1, c1.end()), b(c2.begin() + 1, c2.end());
    std::vector<int> la{c1[0], c2[0]}, lb{c1[0], c2[0]};
    la.insert(la.end(), a.begin(), a.end());
    lb.insert(lb.end(), b.begin(), b.end());
    q1 = q1 * Permutation::cycle(n, la);
    q2 = q2 * Permutation::cycle(n, lb);
  }
  if (q1 * q2 != s) throw std::logic_error("cycle split does not recompose sigma");

  Index i1 = g->index_of(q1.form()), i2 = g->index_of(q2.form());
  // the collision argument needs the exact thickness
  bool constructive = th.status == ThicknessStatus::exact;
  for (const auto& q : {q1, q2}) {
    if (!constructive) break;
    if (q == Permutation::identity(n)) continue;
    auto w = find_collision(g, p, *th.value, q);
    if (!w) {
      constructive = false;
      break;
    }
    out.collisions.push_back(*w);
  }
  if (constructive && p.test(i1) && p.test(i2)) {
    out.q1 = i1;
    out.q2 = i2;
    out.path = ExpressPath::constructive;
    return out;
  }
  out.collisions.clear();
  for (Index a : p.indices())
    if (p.test(g->mul(g->inv(a), sigma))) {
      out.q1 = a;
      out.q2 = g->mul(g->inv(a), sigma);
      out.path = ExpressPath::fallback;
      return out;
    }
  throw Error(ErrorCode::omega_too_small_and_no_fallback, Permutation::from_form(g->form(sigma)).to_string() + " is not in P^2");
}

std::optional<std::size_t> class_word_distance(int n, const Permutation& sigma, const Permutation& tau, std::size_t cap) {
  if (sigma.degree() != n || tau.degree() != n) throw Error(ErrorCode::invalid_parameters, "degree mismatch");
  if (sigma == Permutation::identity(n)) throw Error(ErrorCode::identity_sigma, "sigma must not be the identity");
  if (tau == Permutation::identity(n)) return 0;
  auto g = build_group(*make_spec(SymmetricSpec{n}));
  auto classes = conjugacy_classes(g);
  Index si = g->index_of(sigma.form()), ti = g->index_of(tau.form());
  SubsetMask c = classes.members(static_cast<std::size_t>(classes.class_of[static_cast<std::size_t>(si)]));
  SubsetMask power = c;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (k > 1) power = normal_product(classes, power, c);
    if (power.test(ti)) return k;
  }
  return std::nullopt;
}

}  // namespace glab
