#include "glab/groupcore.hpp"

#include <algorithm>
#include <map>

#include "glab/error.hpp"

namespace glab {

namespace {

// Smallest subgroup containing `gens` and closed under conjugation by
// `conjugators`. Conjugation is an automorphism, so it is enough to check the
// images of the generators.
SubsetMask close_subgroup(const GroupPtr& g, std::vector<Index> gens, std::span<const Index> conjugators) {
  SubsetMask h = subgroup_generated(g, gens);
  for (bool grown = true; grown;) {
    grown = false;
    for (std::size_t i = 0; i < gens.size() && !grown; ++i)
      for (Index c : conjugators) {
        Index x = g->conj(gens[i], c);
        if (!h.test(x)) {
          gens.push_back(x);
          h = subgroup_generated(g, gens);
          grown = true;
          break;
        }
      }
  }
  return h;
}

// A short generating set of a subgroup, picked greedily in index order.
std::vector<Index> generators_of(const SubsetMask& sub) {
  const GroupPtr& g = sub.group();
  if (sub.full()) return {g->generators().begin(), g->generators().end()};
  std::vector<Index> gens;
  SubsetMask span = SubsetMask::of(g, {g->identity()});
  sub.for_each([&](Index x) {
    if (span.test(x)) return;
    gens.push_back(x);
    span = subgroup_generated(g, gens);
  });
  return gens;
}

}  // namespace

SubsetMask ClassPartition::members(std::size_t cls) const {
  SubsetMask m(group);
  for (Index x : elements_of(cls)) m.set(x);
  return m;
}

SubsetMask ClassPartition::closure(const SubsetMask& set) const {
  if (set.group() != group) throw Error(ErrorCode::group_mismatch, "mask and classes use different groups");
  std::vector<char> hit(count(), 0);
  set.for_each([&](Index x) { hit[static_cast<std::size_t>(class_of[static_cast<std::size_t>(x)])] = 1; });
  SubsetMask out(group);
  for (std::size_t c = 0; c < count(); ++c)
    if (hit[c])
      for (Index x : elements_of(c)) out.set(x);
  return out;
}

bool ClassPartition::is_normal(const SubsetMask& set) const { return closure(set) == set; }

ClassPartition conjugacy_classes(const GroupPtr& group) {
  ClassPartition cp;
  cp.group = group;
  const std::size_t n = group->order();
  cp.class_of.assign(n, -1);
  std::vector<std::vector<Index>> lists;
  auto gens = group->generators();
  for (std::size_t start = 0; start < n; ++start) {
    if (cp.class_of[start] >= 0) continue;
    auto id = static_cast<std::int32_t>(lists.size());
    std::vector<Index> orbit{static_cast<Index>(start)};
    cp.class_of[start] = id;
    for (std::size_t q = 0; q < orbit.size(); ++q)
      for (Index s : gens) {
        Index y = group->conj(orbit[q], s);
        if (cp.class_of[static_cast<std::size_t>(y)] < 0) {
          cp.class_of[static_cast<std::size_t>(y)] = id;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    cp.representatives.push_back(static_cast<Index>(start));
    cp.sizes.push_back(orbit.size());
    lists.push_back(std::move(orbit));
  }
  cp.offsets.push_back(0);
  cp.by_class.reserve(n);
  for (auto& l : lists) {
    cp.by_class.insert(cp.by_class.end(), l.begin(), l.end());
    cp.offsets.push_back(cp.by_class.size());
  }
  return cp;
}

SubsetMask product_sets(const SubsetMask& a, const SubsetMask& b) {
  if (a.group() != b.group()) throw Error(ErrorCode::group_mismatch, "product of masks over different groups");
  const GroupPtr& g = a.group();
  SubsetMask out(g);
  auto bi = b.indices();
  a.for_each([&](Index x) {
    for (Index y : bi) out.set(g->mul(x, y));
  });
  return out;
}

SubsetMask normal_product(const ClassPartition& classes, const SubsetMask& a, const SubsetMask& b) {
  if (a.group() != classes.group || b.group() != classes.group)
    throw Error(ErrorCode::group_mismatch, "normal product over different groups");
  if (!classes.is_normal(a) || !classes.is_normal(b)) throw Error(ErrorCode::not_normal, "normal_product needs normal sets");
  const GroupPtr& g = classes.group;
  SubsetMask out(g);
  if (a.empty() || b.empty()) return out;
  bool iterate_a = a.count() <= b.count();
  auto small = iterate_a ? a.indices() : b.indices();
  for (std::size_t c = 0; c < classes.count(); ++c) {
    Index r = classes.representatives[c];
    bool hit = false;
    for (Index s : small) {
      // r = s*y with y in b, or r = y*s with y in a
      Index y = iterate_a ? g->mul(g->inv(s), r) : g->mul(r, g->inv(s));
      if ((iterate_a ? b : a).test(y)) {
        hit = true;
        break;
      }
    }
    if (hit)
      for (Index x : classes.elements_of(c)) out.set(x);
  }
  return out;
}

SubsetMask normal_closure_set(const ClassPartition& classes, const SubsetMask& s) { return classes.closure(s); }

SubsetMask normal_closure_set(const GroupPtr& group, const SubsetMask& s) {
  if (s.group() != group) throw Error(ErrorCode::group_mismatch, "mask belongs to a different group");
  SubsetMask out = s;
  std::vector<Index> queue = s.indices();
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (Index g : group->generators()) {
      Index y = group->conj(queue[q], g);
      if (!out.test(y)) {
        out.set(y);
        queue.push_back(y);
      }
    }
  return out;
}

SubsetMask subgroup_generated(const GroupPtr& group, std::span<const Index> generators) {
  SubsetMask out(group);
  out.set(group->identity());
  std::vector<Index> queue{group->identity()};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (Index s : generators) {
      Index y = group->mul(queue[q], s);
      if (!out.test(y)) {
        out.set(y);
        queue.push_back(y);
      }
    }
  return out;
}

SubsetMask normal_subgroup_generated(const GroupPtr& group, std::span<const Index> generators) {
  return close_subgroup(group, std::vector<Index>(generators.begin(), generators.end()), group->generators());
}

bool is_subgroup(const SubsetMask& set) {
  const GroupPtr& g = set.group();
  if (!g || !set.test(g->identity())) return false;
  std::vector<Index> gens;
  SubsetMask span = SubsetMask::of(g, {g->identity()});
  bool ok = true;
  set.for_each([&](Index x) {
    if (!ok || span.test(x)) return;
    gens.push_back(x);
    span = subgroup_generated(g, gens);
    if (!span.is_subset_of(set)) ok = false;
  });
  return ok && span == set;
}

bool is_normal_subgroup(const SubsetMask& set) {
  if (!is_subgroup(set)) return false;
  const GroupPtr& g = set.group();
  auto gens = generators_of(set);
  for (Index x : gens)
    for (Index s : g->generators())
      if (!set.test(g->conj(x, s))) return false;
  return true;
}

SubsetMask center(const GroupPtr& group) {
  SubsetMask out(group);
  for (std::size_t i = 0; i < group->order(); ++i) {
    auto x = static_cast<Index>(i);
    bool central = true;
    for (Index s : group->generators())
      if (group->mul(x, s) != group->mul(s, x)) {
        central = false;
        break;
      }
    if (central) out.set(x);
  }
  return out;
}

SubsetMask commutator_subgroup(const SubsetMask& subgroup) {
  const GroupPtr& g = subgroup.group();
  auto gens = generators_of(subgroup);
  std::vector<Index> comms;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Index c = g->commutator(gens[i], gens[j]);
      if (c != g->identity()) comms.push_back(c);
    }
  return close_subgroup(g, std::move(comms), gens);
}

SubsetMask derived_subgroup(const GroupPtr& group) {
  return commutator_subgroup(SubsetMask::full(group));
}

std::optional<int> derived_length(const SubsetMask& subgroup) {
  SubsetMask h = subgroup;
  int len = 0;
  while (h.count() > 1) {
    SubsetMask next = commutator_subgroup(h);
    if (next == h) return std::nullopt;
    h = std::move(next);
    ++len;
  }
  return len;
}

bool is_abelian(const GroupPtr& group) {
  auto gens = group->generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (group->mul(gens[i], gens[j]) != group->mul(gens[j], gens[i])) return false;
  return true;
}

std::vector<std::int64_t> abelian_invariants(const GroupPtr& group) {
  if (!is_abelian(group)) throw Error(ErrorCode::not_abelian, "abelian invariants need an abelian group");
  const std::size_t n = group->order();
  std::vector<std::size_t> orders(n);
  for (std::size_t i = 0; i < n; ++i) orders[i] = group->element_order(static_cast<Index>(i));

  // For each prime p, |{x : x^(p^k) = e}| = p^(sum_i min(k, e_i)); the
  // increments count how many cyclic p-factors have exponent >= k.
  std::map<std::int64_t, std::vector<int>> exps;  // prime -> exponents, descending
  std::size_t m = n;
  for (std::int64_t p = 2; static_cast<std::size_t>(p) <= m; ++p) {
    if (m % static_cast<std::size_t>(p)) continue;
    while (m % static_cast<std::size_t>(p) == 0) m /= static_cast<std::size_t>(p);
    std::vector<int> logs{0};
    std::size_t pk = 1;
    for (;;) {
      pk *= static_cast<std::size_t>(p);
      std::size_t c = 0;
      for (auto o : orders)
        if (pk % o == 0) ++c;
      int l = 0;
      for (std::size_t t = c; t > 1; t /= static_cast<std::size_t>(p)) ++l;
      if (l == logs.back()) break;
      logs.push_back(l);
    }
    std::vector<int> at_least;  // at_least[k-1] = #factors with exponent >= k
    for (std::size_t k = 1; k < logs.size(); ++k) at_least.push_back(logs[k] - logs[k - 1]);
    std::vector<int> e;
    for (int r = at_least.empty() ? 0 : at_least[0]; r > 0; --r) {
      int exp = 0;
      for (int v : at_least)
        if (v >= r) ++exp;
      e.push_back(exp);  // ascending as r decreases
    }
    std::sort(e.rbegin(), e.rend());
    exps[p] = e;
  }
  std::size_t count = 0;
  for (auto& [p, e] : exps) count = std::max(count, e.size());
  std::vector<std::int64_t> out(count, 1);
  for (auto& [p, e] : exps)
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) out[count - 1 - i] *= p;
  return out;
}

StructureReport structure_report(const GroupPtr& group) {
  StructureReport r;
  r.center = center(group);
  r.derived = derived_subgroup(group);
  r.is_perfect = r.derived.full();
  if (!r.is_perfect) {
    auto q = build_quotient(group, r.derived, NormalRef::derived);
    r.abelianization = abelian_invariants(q.quotient);
  }
  return r;
}

SubsetMask commutator_set(const ClassPartition& classes) {
  // g = [a,b] iff a*g = a^b for some a, b, i.e. a*g is conjugate to a.
  const GroupPtr& g = classes.group;
  SubsetMask out(g);
  const auto n = static_cast<Index>(g->order());
  for (std::size_t c = 0; c < classes.count(); ++c) {
    Index r = classes.representatives[c];
    bool hit = false;
    for (Index a = 0; a < n && !hit; ++a)
      hit = classes.class_of[static_cast<std::size_t>(g->mul(a, r))] == classes.class_of[static_cast<std::size_t>(a)];
    if (hit)
      for (Index x : classes.elements_of(c)) out.set(x);
  }
  return out;
}

std::size_t commutator_width(const GroupPtr& group) {
  SubsetMask d = derived_subgroup(group);
  if (d.count() <= 1) return 0;
  auto classes = conjugacy_classes(group);
  SubsetMask c = commutator_set(classes);
  SubsetMask power = c;
  std::size_t n = 1;
  while (!d.is_subset_of(power)) {
    power = normal_product(classes, power, c);
    ++n;
  }
  return n;
}

PrimeCyclicQuotient surject_onto_prime_cyclic(const GroupPtr& group) {
  if (!is_abelian(group)) throw Error(ErrorCode::not_abelian, "surjection onto Z/p needs an abelian group");
  const std::size_t n = group->order();
  if (n <= 1) throw Error(ErrorCode::trivial_group, "trivial group has no cyclic quotient of prime order");
  std::int64_t p = 2;
  while (n % static_cast<std::size_t>(p)) ++p;

  SubsetMask pa(group);
  for (std::size_t i = 0; i < n; ++i) pa.set(group->power(static_cast<Index>(i), p));
  auto qm = build_quotient(group, pa);
  const GroupPtr& q = qm.quotient;

  // A/pA is elementary abelian; take the first basis coordinate.
  std::vector<std::int32_t> coef(q->order(), -1);
  std::vector<Index> span{q->identity()};
  coef[static_cast<std::size_t>(q->identity())] = 0;
  bool first = true;
  for (std::size_t i = 0; i < q->order(); ++i) {
    auto b = static_cast<Index>(i);
    if (coef[i] >= 0) continue;
    std::vector<Index> grown;
    for (Index s : span) {
      Index y = s;
      for (std::int64_t c = 0; c < p; ++c, y = q->mul(y, b)) {
        if (c > 0) coef[static_cast<std::size_t>(y)] = first ? static_cast<std::int32_t>(c) : coef[static_cast<std::size_t>(s)];
        grown.push_back(y);
      }
    }
    span = std::move(grown);
    first = false;
  }

  PrimeCyclicQuotient out;
  out.p = p;
  out.map.resize(n);
  out.kernel = SubsetMask(group);
  for (std::size_t i = 0; i < n; ++i) {
    out.map[i] = coef[static_cast<std::size_t>(qm.projection[i])];
    if (out.map[i] == 0) out.kernel.set(static_cast<Index>(i));
  }
  return out;
}

}  // namespace glab
