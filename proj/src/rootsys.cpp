#include "glab/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "glab/error.hpp"
#include "glab/text.hpp"

namespace glab {

namespace {

// Euclidean realizations. Vectors live in Z^(n+1) for A_n and Z^n otherwise.
std::vector<RootVec> euclidean_roots(char family, int n, int dim) {
  std::vector<RootVec> out;
  auto unit = [&](int i, std::int64_t c) {
    RootVec v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] = c;
    return v;
  };
  auto plus = [](RootVec a, const RootVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (i == j) continue;
      out.push_back(plus(unit(i, 1), unit(j, -1)));  // e_i - e_j
      if (family != 'A' && i < j) {
        out.push_back(plus(unit(i, 1), unit(j, 1)));
        out.push_back(plus(unit(i, -1), unit(j, -1)));
      }
    }
  if (family == 'B' || family == 'C') {
    std::int64_t c = family == 'B' ? 1 : 2;
    for (int i = 0; i < dim; ++i) {
      out.push_back(unit(i, c));
      out.push_back(unit(i, -c));
    }
  }
  (void)n;
  return out;
}

std::vector<RootVec> euclidean_simple(char family, int n, int dim) {
  std::vector<RootVec> s;
  for (int i = 0; i + 1 < dim && static_cast<int>(s.size()) < n; ++i) {
    RootVec v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] = 1;
    v[static_cast<std::size_t>(i + 1)] = -1;
    s.push_back(v);
  }
  if (family == 'A') return s;
  s.resize(static_cast<std::size_t>(n - 1));
  RootVec last(static_cast<std::size_t>(dim), 0);
  if (family == 'B') last[static_cast<std::size_t>(n - 1)] = 1;
  if (family == 'C') last[static_cast<std::size_t>(n - 1)] = 2;
  if (family == 'D') last[static_cast<std::size_t>(n - 2)] = last[static_cast<std::size_t>(n - 1)] = 1;
  s.push_back(last);
  return s;
}

std::int64_t plain_dot(const RootVec& x, const RootVec& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace

std::int64_t integer_determinant(std::vector<std::vector<std::int64_t>> m) {
  // Bareiss fraction-free elimination
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<std::vector<std::int64_t>> integer_adjugate(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<std::int64_t>> adj(n, std::vector<std::int64_t>(n, 0));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<std::int64_t>> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<std::int64_t> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      std::int64_t cof = integer_determinant(std::move(minor));
      adj[j][i] = ((i + j) % 2 ? -cof : cof);
    }
  return adj;
}

RootSystem::RootSystem(char family, int rank) : family_(family), rank_(rank) {
  bool ok = (family == 'A' && rank >= 1) || ((family == 'B' || family == 'C') && rank >= 2) ||
            (family == 'D' && rank >= 3);
  if (!ok || rank > 8)
    throw Error(ErrorCode::unsupported_family_rank,
                std::string(1, family) + std::to_string(rank) + " is not a supported root system");
  int dim = family == 'A' ? rank + 1 : rank;
  simple_euclid_ = euclidean_simple(family, rank, dim);

  // Pi-coordinates from the Gram system G c = ((r, alpha_k))_k via Cramer's rule.
  const auto n = static_cast<std::size_t>(rank);
  std::vector<std::vector<std::int64_t>> gram(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = plain_dot(simple_euclid_[i], simple_euclid_[j]);
  std::int64_t det = integer_determinant(gram);
  auto adj = integer_adjugate(gram);

  std::set<RootVec> unique;
  for (const auto& r : euclidean_roots(family, rank, dim)) {
    RootVec c(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s += adj[i][k] * plain_dot(r, simple_euclid_[k]);
      if (s % det) throw std::logic_error("root outside the simple-root lattice");
      c[i] = s / det;
    }
    unique.insert(c);
  }
  std::vector<RootVec> pos;
  for (const auto& c : unique)
    if (std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x >= 0; })) pos.push_back(c);
  std::sort(pos.begin(), pos.end(), [](const RootVec& a, const RootVec& b) {
    auto ha = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    auto hb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  });
  roots_ = pos;
  for (auto c : pos) {
    for (auto& x : c) x = -x;
    roots_.push_back(c);
  }
  if (roots_.size() != unique.size()) throw std::logic_error("roots are not sign-uniform");

  cartan_.assign(n, std::vector<std::int64_t>(n));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) cartan_[b][a] = pairing(simple(static_cast<int>(b)), simple(static_cast<int>(a)));
}

std::vector<RootVec> RootSystem::positive_roots() const {
  return {roots_.begin(), roots_.begin() + static_cast<std::ptrdiff_t>(positive_count())};
}

RootVec RootSystem::simple(int i) const {
  RootVec v(static_cast<std::size_t>(rank_), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

bool RootSystem::is_root(const RootVec& v) const { return std::find(roots_.begin(), roots_.end(), v) != roots_.end(); }

void RootSystem::require_root(const RootVec& v) const {
  if (!is_root(v)) throw Error(ErrorCode::not_a_root, "(" + text::join_ints(v) + ") is not a root of " + name());
}

RootVec RootSystem::euclidean(const RootVec& coords) const {
  RootVec out(simple_euclid_[0].size(), 0);
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += coords[i] * simple_euclid_[i][k];
  return out;
}

std::int64_t RootSystem::dot(const RootVec& x, const RootVec& y) const { return plain_dot(euclidean(x), euclidean(y)); }

std::int64_t RootSystem::pairing(const RootVec& beta, const RootVec& alpha) const {
  require_root(beta);
  require_root(alpha);
  std::int64_t num = 2 * dot(beta, alpha), den = dot(alpha, alpha);
  if (num % den) throw std::logic_error("non-integral pairing");
  return num / den;
}

std::int64_t RootSystem::height(const RootVec& alpha) const {
  require_root(alpha);
  return std::accumulate(alpha.begin(), alpha.end(), std::int64_t{0});
}

RootSystem parse_root_system(std::string_view s) {
  s = text::trim(s);
  if (s.size() < 2 || std::string_view("ABCD").find(s[0]) == std::string_view::npos)
    throw Error(ErrorCode::syntax_error, "expected a root system name such as A2, got '" + std::string(s) + "'");
  return RootSystem(s[0], static_cast<int>(text::parse_int(s.substr(1))));
}

std::vector<std::int64_t> lambda_weights(const RootSystem& r) {
  const auto& c = r.cartan();
  const std::size_t n = c.size();
  // The Cartan matrix has nonpositive off-diagonal entries, so raising one
  // weight never helps another row; iterating the row minimum from below
  // reaches the least solution. The adjugate solution bounds the search.
  std::vector<std::int64_t> lambda(n, 1);
  auto bound = adjugate_weights(r);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t b = 0; b < n; ++b) {
      std::int64_t rest = 0;
      for (std::size_t a = 0; a < n; ++a)
        if (a != b) rest += lambda[a] * c[b][a];
      std::int64_t need = (1 - rest + c[b][b] - 1) / c[b][b];
      if (need > lambda[b]) {
        lambda[b] = need;
        changed = true;
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (lambda[i] > bound[i]) throw std::logic_error("lambda iteration exceeded the adjugate bound");
  }
  return lambda;
}

std::vector<std::int64_t> adjugate_weights(const RootSystem& r) {
  const auto& c = r.cartan();
  std::int64_t det = integer_determinant(c);
  auto adj = integer_adjugate(c);
  std::vector<std::int64_t> out(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) out[i] += adj[i][j];
  if (det < 0)
    for (auto& x : out) x = -x;
  std::int64_t g = 0;
  for (auto x : out) g = std::gcd(g, x);
  for (auto& x : out) x /= g;
  return out;
}

std::int64_t weighted_pairing(const RootSystem& r, const std::vector<std::int64_t>& lambda, const RootVec& beta) {
  std::int64_t s = 0;
  for (int a = 0; a < r.rank(); ++a) s += lambda[static_cast<std::size_t>(a)] * r.pairing(beta, r.simple(a));
  return s;
}

}  // namespace glab
