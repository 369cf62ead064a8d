#include "glab/extensions.hpp"

#include <algorithm>
#include <set>

#include "glab/error.hpp"
#include "glab/groupcore.hpp"
#include "glab/matrix.hpp"
#include "glab/modular.hpp"

namespace glab {

std::vector<std::int32_t> Cocycle::image() const {
  std::vector<std::int32_t> out(table);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Cocycle zero_cocycle(std::int64_t p, const GroupPtr& base) {
  return Cocycle{p, base, std::vector<std::int32_t>(base->order() * base->order(), 0)};
}

Cocycle random_cocycle(std::int64_t p, const GroupPtr& base, std::mt19937_64& rng) {
  const std::size_t n = base->order();
  std::uniform_int_distribution<std::int64_t> digit(0, p - 1);
  std::vector<std::int64_t> f(n);
  for (auto& v : f) v = digit(rng);
  std::int64_t c = digit(rng);
  std::int64_t carry = 0;
  const auto* cyc = std::get_if<CyclicSpec>(&base->spec().value);
  if (cyc && cyc->k % p == 0) carry = digit(rng);
  Cocycle h = zero_cocycle(p, base);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto xi = static_cast<Index>(x), yi = static_cast<Index>(y);
      std::int64_t v = f[x] + f[y] - f[static_cast<std::size_t>(base->mul(xi, yi))] + c;
      if (carry && base->form(xi)[0] + base->form(yi)[0] >= cyc->k) v += carry;
      h.table[x * n + y] = static_cast<std::int32_t>(mod(v, p));
    }
  return h;
}

bool validate_cocycle(const Cocycle& h) {
  const std::size_t n = h.base->order();
  if (h.table.size() != n * n)
    throw Error(ErrorCode::table_incomplete,
                "expected " + std::to_string(n * n) + " entries, got " + std::to_string(h.table.size()));
  for (auto v : h.table)
    if (v < 0 || v >= h.p) throw Error(ErrorCode::invalid_parameters, "cocycle value out of range: " + std::to_string(v));
  return satisfies_cocycle_identity(*h.base, h.p, h.table);
}

Index Extension::lift(std::int64_t a, Index x) const {
  Form f{static_cast<std::int32_t>(mod(a, cocycle.p)), x};
  return group->index_of(f);
}

Extension build_extension(const Cocycle& h) {
  if (!validate_cocycle(h)) throw Error(ErrorCode::invalid_cocycle, "h(x,y) + h(xy,z) != h(y,z) + h(x,yz) for some triple");
  Extension e;
  e.group = build_cocycle_extension(h.p, h.base, h.table);
  e.cocycle = h;
  e.projection.resize(e.group->order());
  for (std::size_t i = 0; i < e.group->order(); ++i) e.projection[i] = e.base_of(static_cast<Index>(i));
  return e;
}

FormulaCheck check_formulas(const Extension& e) {
  FormulaCheck out;
  const auto& g = *e.group;
  const auto& h = e.cocycle;
  const Index one = h.base->identity();
  const std::int64_t h11 = h(one, one);
  Index id = e.lift(-h11, one);
  // the identity is the unique idempotent
  out.identity_ok = g.mul(id, id) == id && id == g.identity();
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto gi = static_cast<Index>(i);
    std::int64_t a = e.coordinate(gi);
    Index x = e.base_of(gi);
    Index xi = h.base->inv(x);
    Index claimed = e.lift(-a - h(x, xi) - h11, xi);
    ++out.elements;
    if (g.mul(gi, claimed) != id || g.mul(claimed, gi) != id) ++out.inverse_failures;
  }
  return out;
}

ProjectionCheck check_projection(const Extension& e) {
  ProjectionCheck out;
  const auto& g = *e.group;
  const auto& base = *e.cocycle.base;
  const std::size_t n = g.order();
  out.homomorphism = true;
  for (std::size_t i = 0; i < n && out.homomorphism; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto a = static_cast<Index>(i), b = static_cast<Index>(j);
      if (e.projection[static_cast<std::size_t>(g.mul(a, b))] != base.mul(e.projection[i], e.projection[j])) {
        out.homomorphism = false;
        break;
      }
    }
  std::vector<char> hit(base.order(), 0);
  std::vector<Index> kernel;
  for (std::size_t i = 0; i < n; ++i) {
    hit[static_cast<std::size_t>(e.projection[i])] = 1;
    if (e.projection[i] == base.identity()) kernel.push_back(static_cast<Index>(i));
  }
  out.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  out.kernel_order = kernel.size();
  out.kernel_central = true;
  for (Index k : kernel)
    for (Index s : g.generators())
      if (g.mul(k, s) != g.mul(s, k)) out.kernel_central = false;
  return out;
}

SplitResult split_check(const Extension& e) {
  SplitResult out;
  const auto& base = e.cocycle.base;
  const std::int64_t p = e.cocycle.p;
  std::vector<Index> gens(base->generators().begin(), base->generators().end());
  if (gens.empty()) {
    // trivial H: {e} is a complement
    out.splits = true;
    out.complement = SubsetMask::of(e.group, {e.group->identity()});
    out.tuples_tried = 1;
    return out;
  }
  std::vector<std::int64_t> digits(gens.size(), 0);
  while (true) {
    ++out.tuples_tried;
    std::vector<Index> lifts;
    for (std::size_t i = 0; i < gens.size(); ++i) lifts.push_back(e.lift(digits[i], gens[i]));
    SubsetMask sub = subgroup_generated(e.group, lifts);
    // it maps onto H, so order |H| means f is injective on it
    if (sub.count() == base->order()) {
      out.splits = true;
      out.generator_lifts = lifts;
      out.complement = sub;
      return out;
    }
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

namespace {

// k-fold sumset of `s` in Z/p; k = 0 gives {0}.
std::set<std::int64_t> sumset(const std::vector<std::int32_t>& s, std::size_t k, std::int64_t p) {
  std::set<std::int64_t> acc{0};
  for (std::size_t i = 0; i < k; ++i) {
    std::set<std::int64_t> next;
    for (auto a : acc)
      for (auto b : s) next.insert(mod(a + b, p));
    acc = std::move(next);
  }
  return acc;
}

std::set<std::int64_t> minus(const std::set<std::int64_t>& a, const std::set<std::int64_t>& b, std::int64_t p) {
  std::set<std::int64_t> out;
  for (auto x : a)
    for (auto y : b) out.insert(mod(x - y, p));
  return out;
}

std::vector<std::int32_t> to_vec(const std::set<std::int64_t>& s) {
  std::vector<std::int32_t> out;
  for (auto v : s) out.push_back(static_cast<std::int32_t>(v));
  return out;
}

}  // namespace

ImageBound image_bound_check(const Extension& e, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_parameters, "image bound needs n >= 1");
  ImageBound out;
  out.n = n;
  const auto& h = e.cocycle;
  const std::int64_t p = h.p;
  const Index one = h.base->identity();

  SubsetMask pp(e.group);
  for (std::size_t x = 0; x < h.base->order(); ++x) pp.set(e.lift(0, static_cast<Index>(x)));
  SubsetMask pset = product_sets(pp, pp.inverse());
  SubsetMask power = pset;
  for (std::size_t i = 1; i < n; ++i) power = product_sets(power, pset);
  out.power_is_group = power.full();

  std::set<std::int64_t> seen;
  power.for_each([&](Index g) { seen.insert(e.coordinate(g)); });
  out.observed = to_vec(seen);

  auto im = h.image();
  const std::int64_t shift = -static_cast<std::int64_t>(n) * h(one, one);
  std::set<std::int64_t> bound;
  for (auto v : minus(sumset(im, 2 * n - 1, p), sumset(im, n, p), p)) bound.insert(mod(v + shift, p));
  out.bound = to_vec(bound);
  std::set<std::int64_t> diff;
  for (auto x : im)
    for (auto y : im) diff.insert(mod(x - y, p));
  out.outer_bound = to_vec(sumset(to_vec(diff), 2 * n, p));
  out.contained = std::includes(bound.begin(), bound.end(), seen.begin(), seen.end());
  std::set<std::int64_t> outer(out.outer_bound.begin(), out.outer_bound.end());
  out.contained_outer = std::includes(outer.begin(), outer.end(), seen.begin(), seen.end());
  return out;
}

CommutatorIdentityCheck check_commutator_identity(const GroupPtr& g, std::size_t samples, std::uint64_t seed) {
  CommutatorIdentityCheck out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, g->order() - 1);
  const auto& G = *g;
  for (std::size_t s = 0; s < samples; ++s) {
    auto a1 = static_cast<Index>(pick(rng)), b1 = static_cast<Index>(pick(rng));
    auto a2 = static_cast<Index>(pick(rng)), b2 = static_cast<Index>(pick(rng));
    Index lhs = G.commutator(G.mul(a1, b1), G.mul(a2, b2));
    Index head = G.conj(G.inv(a1), b1);
    Index mid = G.mul(G.inv(a2), a1);
    Index tail = G.mul(G.conj(a2, G.conj(b2, b1)), G.commutator(b1, b2));
    Index rhs = G.mul(G.mul(head, G.conj(mid, G.mul(b2, b1))), tail);
    Index literal = G.mul(G.mul(head, G.conj(mid, G.mul(b1, b2))), tail);
    ++out.checked;
    if (lhs != rhs) ++out.failures;
    if (lhs != literal) ++out.literal_failures;
  }
  return out;
}

SemidirectFormulaCheck check_semidirect_commutator(const GroupPtr& g, std::size_t samples, std::uint64_t seed) {
  const auto* sd = std::get_if<SemidirectSpec>(&g->spec().value);
  if (!sd) throw Error(ErrorCode::invalid_parameters, "semidirect commutator check needs Semidirect(n,p)");
  const int n = sd->n;
  const std::int64_t p = sd->p;
  auto split = [&](Index x) {
    auto f = g->form(x);
    std::vector<std::int64_t> v(f.begin(), f.begin() + n);
    Matrix m(n, p, std::vector<std::int32_t>(f.begin() + n, f.end()));
    return std::pair{v, m};
  };
  auto apply = [&](const Matrix& m, const std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i)] += m(i, j) * v[static_cast<std::size_t>(j)];
    for (auto& x : out) x = mod(x, p);
    return out;
  };
  SemidirectFormulaCheck out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, g->order() - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    auto x = static_cast<Index>(pick(rng)), y = static_cast<Index>(pick(rng));
    auto [v, f] = split(x);
    auto [u, gm] = split(y);
    Matrix fi = f.inverse(), gi = gm.inverse();
    auto fu = apply(f, u);
    std::vector<std::int64_t> inner(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < inner.size(); ++i) inner[i] = v[i] + fu[i] - u[i];
    auto w = apply(gi, inner);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= v[i];
    auto vec = apply(fi, w);
    Matrix mat = fi * gi * f * gm;
    Form form;
    for (auto c : vec) form.push_back(static_cast<std::int32_t>(c));
    for (auto c : mat.entries()) form.push_back(c);
    ++out.checked;
    if (g->find(form) != std::optional<Index>(g->commutator(x, y))) ++out.failures;
  }
  return out;
}

IwasawaCertificate iwasawa_certificate(const SubsetMask& a, const SubsetMask& b, std::size_t samples,
                                       std::uint64_t seed) {
  const GroupPtr& g = a.group();
  if (b.group() != g) throw Error(ErrorCode::group_mismatch, "A and B live in different groups");
  IwasawaCertificate out;
  auto premise = [&](std::string name, bool ok, std::string detail) {
    out.premises.push_back({name, ok, detail});
    if (!ok) throw Error(ErrorCode::premise_violation, name + ": " + detail);
  };

  auto classes = conjugacy_classes(g);
  premise("A normal", classes.is_normal(a), "A is a union of conjugacy classes");
  premise("A symmetric", a.is_symmetric(), "A = A^-1");
  auto report = structure_report(g);
  premise("G perfect", report.is_perfect, "[G,G] has order " + std::to_string(report.derived.count()));
  out.n = commutator_width(g);
  premise("commutator width", out.n > 0 || g->order() == 1, "cw(G) = " + std::to_string(out.n));
  premise("B subgroup", is_subgroup(b), "B is closed under products");
  auto m = derived_length(b);
  premise("B solvable", m.has_value(), m ? "derived length " + std::to_string(*m) : "derived series stalls");
  out.m = *m;
  premise("G = A B", product_sets(a, b).full(), "|AB| = " + std::to_string(product_sets(a, b).count()));

  out.bound = 1;
  for (int i = 0; i < out.m; ++i) out.bound *= 4 * out.n;
  out.identity = check_commutator_identity(g, samples, seed);

  // A^k can only stall or cycle once it repeats
  out.search_cap = std::max<std::size_t>(static_cast<std::size_t>(out.bound), 64);
  SubsetMask power = a;
  std::vector<SubsetMask> seen;
  for (std::size_t k = 1; k <= out.search_cap; ++k) {
    if (k > 1) power = product_sets(power, a);
    if (power.full()) {
      out.k_min = k;
      break;
    }
    if (std::find(seen.begin(), seen.end(), power) != seen.end()) break;
    seen.push_back(power);
  }
  return out;
}

}  // namespace glab
