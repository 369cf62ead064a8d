#include "glab/chevalley.hpp"

#include <set>

#include "glab/error.hpp"
#include "glab/modular.hpp"

namespace glab {

namespace {

void require_field(std::int64_t p) {
  if (!is_prime(p) || p >= (std::int64_t{1} << 31))
    throw Error(ErrorCode::invalid_parameters, std::to_string(p) + " is not a supported prime");
}

Matrix require_diagonal(const Matrix& t) {
  if (!t.is_diagonal()) throw Error(ErrorCode::not_diagonal, "expected a diagonal matrix, got " + t.to_string());
  return t;
}

void require_upper(const Matrix& u) {
  if (!u.is_upper_unitriangular())
    throw Error(ErrorCode::not_unitriangular, "expected an upper unitriangular matrix, got " + u.to_string());
}

void require_regular(const Matrix& t) {
  if (!is_regular(t)) throw Error(ErrorCode::not_regular, "diagonal element " + t.to_string() + " is not regular");
}

std::vector<TypeARoot> all_roots(int n) {
  std::vector<TypeARoot> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out.push_back({i, j});
  return out;
}

}  // namespace

std::string to_string(const TypeARoot& r) { return "(" + std::to_string(r.i + 1) + "," + std::to_string(r.j + 1) + ")"; }

void require_root(int n, const TypeARoot& r) {
  if (r.i < 0 || r.j < 0 || r.i >= n || r.j >= n || r.i == r.j)
    throw Error(ErrorCode::invalid_root, to_string(r) + " is not a root of SL" + std::to_string(n));
}

RootVec root_coordinates(int n, const TypeARoot& r) {
  require_root(n, r);
  RootVec v(static_cast<std::size_t>(n - 1), 0);
  int lo = std::min(r.i, r.j), hi = std::max(r.i, r.j);
  for (int k = lo; k < hi; ++k) v[static_cast<std::size_t>(k)] = r.positive() ? 1 : -1;
  return v;
}

TypeARoot root_from_coordinates(int n, const RootVec& v) {
  for (const auto& r : all_roots(n))
    if (root_coordinates(n, r) == v) return r;
  throw Error(ErrorCode::not_a_root, "coordinates do not describe a root of A" + std::to_string(n - 1));
}

Matrix x_root(int n, std::int64_t p, const TypeARoot& r, std::int64_t s) {
  require_field(p);
  require_root(n, r);
  Matrix m = Matrix::identity(n, p);
  m.set(r.i, r.j, s);
  return m;
}

Matrix w_root(int n, std::int64_t p, const TypeARoot& r, std::int64_t u) {
  if (mod(u, p) == 0) throw Error(ErrorCode::zero_parameter, "w_a(u) needs u != 0");
  return x_root(n, p, r, u) * x_root(n, p, r.negative(), -inv_mod(mod(u, p), p)) * x_root(n, p, r, u);
}

Matrix t_root(int n, std::int64_t p, const TypeARoot& r, std::int64_t u) {
  if (mod(u, p) == 0) throw Error(ErrorCode::zero_parameter, "t_a(u) needs u != 0");
  return w_root(n, p, r, u) * w_root(n, p, r, 1).inverse();
}

Matrix root_generator(int n, std::int64_t p, GeneratorKind kind, const TypeARoot& r, std::int64_t s) {
  switch (kind) {
    case GeneratorKind::x: return x_root(n, p, r, s);
    case GeneratorKind::w: return w_root(n, p, r, s);
    case GeneratorKind::t: return t_root(n, p, r, s);
  }
  throw Error(ErrorCode::invalid_parameters, "unknown generator kind");
}

std::int64_t root_value(const Matrix& t, const TypeARoot& r) {
  require_diagonal(t);
  require_root(t.n(), r);
  return t(r.i, r.i) * inv_mod(t(r.j, r.j), t.p()) % t.p();
}

std::vector<TypeARoot> positive_root_order(int n) {
  std::vector<TypeARoot> out;
  for (int h = 1; h < n; ++h)
    for (int i = 0; i + h < n; ++i) out.push_back({i, i + h});
  return out;
}

UnipotentFactors unipotent_factor(const Matrix& u) {
  require_upper(u);
  const int n = u.n();
  const std::int64_t p = u.p();
  // Multiplying on the right by x_a(s), a = (i,j), adds s to entry (i,j) and
  // touches only entries of larger height in column j, so one pass in
  // height order fixes each coefficient.
  UnipotentFactors out;
  Matrix acc = Matrix::identity(n, p);
  for (const auto& r : positive_root_order(n)) {
    std::int64_t s = mod(static_cast<std::int64_t>(u(r.i, r.j)) - acc(r.i, r.j), p);
    out.emplace_back(r, s);
    acc = acc * x_root(n, p, r, s);
  }
  if (unipotent_product(n, p, out) != u) throw std::logic_error("unipotent factorization failed to recompose");
  return out;
}

Matrix unipotent_product(int n, std::int64_t p, const UnipotentFactors& factors) {
  Matrix m = Matrix::identity(n, p);
  for (const auto& [r, s] : factors) m = m * x_root(n, p, r, s);
  return m;
}

bool is_regular(const Matrix& t) {
  require_diagonal(t);
  for (const auto& r : positive_root_order(t.n()))
    if (root_value(t, r) == 1) return false;
  return true;
}

bool is_regular_by_centralizer(const Matrix& t) {
  require_diagonal(t);
  for (const auto& u : unitriangular_elements(t.n(), t.p()))
    if (u != Matrix::identity(t.n(), t.p()) && t * u == u * t) return false;
  return true;
}

Matrix lambda_torus_element(int n, std::int64_t p, const std::vector<std::int64_t>& lambda, std::int64_t s) {
  Matrix a = Matrix::identity(n, p);
  for (int k = 0; k + 1 < n; ++k) a = a * t_root(n, p, {k, k + 1}, pow_mod(s, lambda[static_cast<std::size_t>(k)], p));
  return a;
}

RegularSequence regular_sequence(const RootSystem& r, std::int64_t p, int m) {
  if (r.family() != 'A') throw Error(ErrorCode::unsupported_family_rank, "matrix model covers type A only");
  require_field(p);
  if (m < 1) throw Error(ErrorCode::invalid_parameters, "sequence length must be positive");
  const int n = r.rank() + 1;
  RegularSequence out;
  out.lambda = lambda_weights(r);
  for (std::int64_t s = 2; s < p; ++s) {
    std::vector<Matrix> seq;
    for (int i = 0; i < m; ++i) seq.push_back(lambda_torus_element(n, p, out.lambda, pow_mod(s, i, p)));
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = i + 1; j < m && ok; ++j)
        ok = is_regular(seq[static_cast<std::size_t>(i)].inverse() * seq[static_cast<std::size_t>(j)]);
    if (ok) {
      out.s = s;
      out.elements = std::move(seq);
      return out;
    }
  }
  throw Error(ErrorCode::field_too_small,
              "no s in F_" + std::to_string(p) + " gives " + std::to_string(m) + " pairwise regular quotients");
}

Matrix commutator_transport_solve(const Matrix& t, const Matrix& target) {
  require_regular(t);
  require_upper(target);
  const int n = t.n();
  const std::int64_t p = t.p();
  Matrix sol = Matrix::identity(n, p);
  // Invariant: [t, sol] agrees with target modulo U_h. On U_h / U_{h+1}
  // the map u -> [t,u] scales the (i,j) entry by 1 - a(t)^-1.
  for (int h = 1; h < n; ++h) {
    Matrix resid = commutator(t, sol).inverse() * target;
    Matrix step = Matrix::identity(n, p);
    for (int i = 0; i + h < n; ++i) {
      TypeARoot r{i, i + h};
      std::int64_t factor = mod(1 - inv_mod(root_value(t, r), p), p);
      step = step * x_root(n, p, r, resid(i, i + h) * inv_mod(factor, p));
    }
    sol = sol * step;
  }
  if (commutator(t, sol) != target) throw std::logic_error("commutator transport did not recompose");
  return sol;
}

Matrix commutator_transport_solve_lower(const Matrix& t, const Matrix& target) {
  require_regular(t);
  if (!target.is_lower_unitriangular())
    throw Error(ErrorCode::not_unitriangular, "expected a lower unitriangular matrix, got " + target.to_string());
  // For w upper and v = (w^T)^-1: [t,v]^T = t [t,w] t^-1.
  Matrix w = commutator_transport_solve(t, t.inverse() * target.transpose() * t);
  Matrix v = w.transpose().inverse();
  if (commutator(t, v) != target) throw std::logic_error("lower commutator transport did not recompose");
  return v;
}

std::optional<LDU> ldu_decompose(const Matrix& m) {
  const int n = m.n();
  const std::int64_t p = m.p();
  Matrix l = Matrix::identity(n, p), a = m;
  for (int c = 0; c < n; ++c) {
    std::int64_t piv = a(c, c);
    if (piv == 0) return std::nullopt;
    std::int64_t inv = inv_mod(piv, p);
    for (int r = c + 1; r < n; ++r) {
      std::int64_t f = a(r, c) * inv % p;
      if (f == 0) continue;
      l.set(r, c, f);
      for (int k = c; k < n; ++k) a.set(r, k, a(r, k) - f * a(c, k));
    }
  }
  Matrix d(n, p), u = Matrix::identity(n, p);
  for (int i = 0; i < n; ++i) {
    d.set(i, i, a(i, i));
    std::int64_t inv = inv_mod(a(i, i), p);
    for (int j = i + 1; j < n; ++j) u.set(i, j, a(i, j) * inv);
  }
  return LDU{l, d, u};
}

GaussTriple gauss_prescribed(const GroupPtr& group, const Matrix& g, const Matrix& t) {
  const auto* sl = std::get_if<SpecialLinearSpec>(&group->spec().value);
  if (!sl) throw Error(ErrorCode::invalid_parameters, "Gauss search needs an SL(n,p) group");
  if (g.n() != sl->n || g.p() != sl->p || t.n() != sl->n || t.p() != sl->p)
    throw Error(ErrorCode::invalid_parameters, "matrix size or field does not match the group");
  require_diagonal(t);
  if (!t.is_special() || !g.is_special()) throw Error(ErrorCode::invalid_parameters, "matrices must have determinant 1");
  Index gi = group->index_of(g.entries());
  bool central = true;
  for (Index s : group->generators())
    if (group->mul(gi, s) != group->mul(s, gi)) central = false;
  if (central) throw Error(ErrorCode::noncentral_required, "g = " + g.to_string() + " is central");

  GaussTriple out;
  for (std::size_t i = 0; i < group->order(); ++i) {
    auto x = static_cast<Index>(i);
    ++out.tried;
    Index c = group->conj(gi, x);
    Matrix gx(sl->n, sl->p, Form(group->form(c).begin(), group->form(c).end()));
    auto f = ldu_decompose(gx);
    if (!f || f->diagonal != t) continue;
    out.x = Matrix(sl->n, sl->p, Form(group->form(x).begin(), group->form(x).end()));
    out.v = f->lower;
    out.u = f->upper;
    out.x_index = x;
    if (out.x.inverse() * g * out.x != out.v * t * out.u) throw std::logic_error("Gauss triple failed to verify");
    return out;
  }
  throw Error(ErrorCode::search_exhausted,
              "no conjugate of " + g.to_string() + " has torus part " + t.to_string() + " (all conjugators tried)");
}

ClassCubeResult class_cube(const ClassPartition& classes, const Matrix& t, int cap) {
  require_diagonal(t);
  require_regular(t);
  const GroupPtr& g = classes.group;
  Index ti = g->index_of(t.entries());
  SubsetMask c = classes.members(static_cast<std::size_t>(classes.class_of[static_cast<std::size_t>(ti)]));
  SubsetMask z = center(g);
  ClassCubeResult out;
  out.class_size = c.count();
  SubsetMask power = c;
  for (int k = 1; k <= std::max(cap, 3); ++k) {
    if (k > 1) power = normal_product(classes, power, c);
    if (k == 2) out.square_covers_noncentral = SubsetMask::full(g).is_subset_of(power | z);
    if (k == 3) out.cube_is_group = power.full();
    if (power.full() && !out.min_power) out.min_power = k;
    if (k >= 3 && out.min_power) break;
  }
  return out;
}

std::vector<Matrix> diagonal_elements(int n, std::int64_t p) {
  require_field(p);
  std::vector<Matrix> out;
  std::vector<std::int64_t> d(static_cast<std::size_t>(n), 1);
  // First n-1 entries range over F_p^x; the last one fixes the determinant.
  for (;;) {
    std::int64_t prod = 1;
    for (int i = 0; i + 1 < n; ++i) prod = prod * d[static_cast<std::size_t>(i)] % p;
    d[static_cast<std::size_t>(n - 1)] = inv_mod(prod, p);
    out.push_back(Matrix::diagonal(p, d));
    int k = 0;
    while (k + 1 < n && d[static_cast<std::size_t>(k)] == p - 1) d[static_cast<std::size_t>(k++)] = 1;
    if (k + 1 >= n) break;
    ++d[static_cast<std::size_t>(k)];
  }
  return out;
}

std::vector<Matrix> unitriangular_elements(int n, std::int64_t p) {
  auto roots = positive_root_order(n);
  std::vector<Matrix> out;
  std::vector<std::int64_t> s(roots.size(), 0);
  for (;;) {
    Matrix m = Matrix::identity(n, p);
    for (std::size_t k = 0; k < roots.size(); ++k) m.set(roots[k].i, roots[k].j, s[k]);
    out.push_back(m);
    std::size_t k = 0;
    while (k < s.size() && s[k] == p - 1) s[k++] = 0;
    if (k == s.size()) break;
    ++s[k];
  }
  return out;
}

SubsetMask borel_subgroup(const GroupPtr& group) {
  const auto* sl = std::get_if<SpecialLinearSpec>(&group->spec().value);
  if (!sl) throw Error(ErrorCode::invalid_parameters, "Borel subgroup needs an SL(n,p) group");
  const int n = sl->n;
  SubsetMask out(group);
  for (std::size_t x = 0; x < group->order(); ++x) {
    auto f = group->form(static_cast<Index>(x));
    bool upper = true;
    for (int i = 1; i < n && upper; ++i)
      for (int j = 0; j < i; ++j)
        if (f[static_cast<std::size_t>(i * n + j)] != 0) upper = false;
    if (upper) out.set(static_cast<Index>(x));
  }
  return out;
}

RelationReport verify_relations(int n, std::int64_t p, bool with_factorization) {
  require_field(p);
  if (n < 2) throw Error(ErrorCode::invalid_parameters, "relations need n >= 2");
  RelationReport rep;
  RootSystem rs('A', n - 1);
  auto roots = all_roots(n);

  for (const auto& t : diagonal_elements(n, p)) {
    Matrix ti = t.inverse();
    for (const auto& r : roots)
      for (std::int64_t s = 0; s < p; ++s) {
        ++rep.torus_checks;
        if (t * x_root(n, p, r, s) * ti != x_root(n, p, r, root_value(t, r) * s)) ++rep.torus_failures;
      }
  }

  for (const auto& a : roots)
    for (std::int64_t u = 1; u < p; ++u) {
      Matrix ta = t_root(n, p, a, u), tai = ta.inverse();
      for (const auto& b : roots) {
        std::int64_t k = rs.pairing(root_coordinates(n, b), root_coordinates(n, a));
        std::int64_t factor = pow_mod(u, k, p);
        for (std::int64_t s = 0; s < p; ++s) {
          ++rep.pairing_checks;
          if (ta * x_root(n, p, b, s) * tai != x_root(n, p, b, factor * s)) ++rep.pairing_failures;
        }
      }
    }

  for (const auto& a : roots)
    for (const auto& b : roots) {
      if (a == b.negative() || a == b) continue;
      RootVec sum = root_coordinates(n, a);
      RootVec cb = root_coordinates(n, b);
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += cb[k];
      bool is_sum_root = rs.is_root(sum);
      std::optional<TypeARoot> ab;
      if (is_sum_root) ab = root_from_coordinates(n, sum);
      // sign from s = u = 1, then checked for every s, u
      if (ab) {
        Matrix c = commutator(x_root(n, p, a, 1), x_root(n, p, b, 1));
        std::int64_t v = c(ab->i, ab->j);
        rep.signs[{a, b}] = v == 1 ? 1 : (v == p - 1 ? -1 : 0);
      }
      for (std::int64_t s = 1; s < p; ++s)
        for (std::int64_t u = 1; u < p; ++u) {
          ++rep.commutator_checks;
          Matrix c = commutator(x_root(n, p, a, s), x_root(n, p, b, u));
          Matrix expect = ab ? x_root(n, p, *ab, rep.signs[{a, b}] * s * u) : Matrix::identity(n, p);
          if (c != expect || (ab && rep.signs[{a, b}] == 0)) ++rep.commutator_failures;
        }
    }

  if (with_factorization) {
    auto order = positive_root_order(n);
    std::set<std::vector<std::int32_t>> seen;
    std::vector<std::int64_t> s(order.size(), 0);
    bool roundtrip = true, all_unitri = true;
    for (;;) {
      UnipotentFactors f;
      for (std::size_t k = 0; k < order.size(); ++k) f.emplace_back(order[k], s[k]);
      Matrix m = unipotent_product(n, p, f);
      all_unitri = all_unitri && m.is_upper_unitriangular();
      seen.insert(std::vector<std::int32_t>(m.entries().begin(), m.entries().end()));
      if (unipotent_factor(m) != f) roundtrip = false;
      ++rep.factorization_count;
      std::size_t k = 0;
      while (k < s.size() && s[k] == p - 1) s[k++] = 0;
      if (k == s.size()) break;
      ++s[k];
    }
    rep.factorization_bijective = all_unitri && seen.size() == rep.factorization_count;
    rep.factorization_roundtrip = roundtrip;
  }
  return rep;
}

}  // namespace glab
