#include <algorithm>
#include <numeric>
#include <sstream>

#include "glab/error.hpp"
#include "glab/group.hpp"
#include "glab/groupcore.hpp"
#include "glab/mask.hpp"
#include "glab/matrix.hpp"
#include "glab/modular.hpp"
#include "glab/text.hpp"

namespace glab {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t sl_order(int n, std::int64_t p) {
  std::uint64_t order = 1;
  auto pp = static_cast<std::uint64_t>(p);
  for (int i = 0; i < n * (n - 1) / 2; ++i) order = sat_mul(order, pp);
  for (int i = 2; i <= n; ++i) {
    std::uint64_t pi = 1;
    for (int k = 0; k < i; ++k) pi = sat_mul(pi, pp);
    order = sat_mul(order, pi - 1);
  }
  return order;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::invalid_parameters, what);
}

std::string bad_element(std::string_view text, std::string_view what) {
  return "cannot read element '" + std::string(text) + "': " + std::string(what);
}

class CyclicModel final : public ElementModel {
 public:
  explicit CyclicModel(int k) : k_(k) {}
  std::size_t width() const override { return 1; }
  Form identity() const override { return {0}; }
  void multiply(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const override {
    out[0] = (a[0] + b[0]) % k_;
  }
  void invert(const std::int32_t* a, std::int32_t* out) const override { out[0] = (k_ - a[0]) % k_; }
  std::vector<Form> generators() const override { return {{1 % k_}}; }
  std::string format(std::span<const std::int32_t> f) const override { return std::to_string(f[0]); }
  Form parse(std::string_view t) const override {
    auto v = text::parse_int(t);
    if (v < 0 || v >= k_) throw Error(ErrorCode::invalid_parameters, bad_element(t, "residue out of range"));
    return {static_cast<std::int32_t>(v)};
  }
  std::optional<std::uint64_t> expected_order() const override { return static_cast<std::uint64_t>(k_); }

 private:
  int k_;
};

class AbelianModel final : public ElementModel {
 public:
  explicit AbelianModel(std::vector<int> d) : d_(std::move(d)) {}
  std::size_t width() const override { return d_.size(); }
  Form identity() const override { return Form(d_.size(), 0); }
  void multiply(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const override {
    for (std::size_t i = 0; i < d_.size(); ++i) out[i] = (a[i] + b[i]) % d_[i];
  }
  void invert(const std::int32_t* a, std::int32_t* out) const override {
    for (std::size_t i = 0; i < d_.size(); ++i) out[i] = (d_[i] - a[i]) % d_[i];
  }
  std::vector<Form> generators() const override {
    std::vector<Form> g;
    for (std::size_t i = 0; i < d_.size(); ++i) {
      Form f(d_.size(), 0);
      f[i] = 1 % d_[i];
      g.push_back(f);
    }
    return g;
  }
  std::string format(std::span<const std::int32_t> f) const override {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    return s + ")";
  }
  Form parse(std::string_view t) const override {
    auto v = text::parse_int_list(text::strip_enclosing(t, '(', ')'));
    if (v.size() != d_.size()) throw Error(ErrorCode::invalid_parameters, bad_element(t, "wrong arity"));
    Form f;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0 || v[i] >= d_[i]) throw Error(ErrorCode::invalid_parameters, bad_element(t, "residue out of range"));
      f.push_back(static_cast<std::int32_t>(v[i]));
    }
    return f;
  }
  std::optional<std::uint64_t> expected_order() const override {
    std::uint64_t o = 1;
    for (int d : d_) o = sat_mul(o, static_cast<std::uint64_t>(d));
    return o;
  }

 private:
  std::vector<int> d_;
};

// Image arrays on {0..n-1}; (a*b)(x) = a(b(x)), so the right factor acts first.
class PermutationModel final : public ElementModel {
 public:
  PermutationModel(int n, bool alternating) : n_(n), alternating_(alternating) {}
  std::size_t width() const override { return static_cast<std::size_t>(n_); }
  Form identity() const override {
    Form f(static_cast<std::size_t>(n_));
    std::iota(f.begin(), f.end(), 0);
    return f;
  }
  void multiply(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const override {
    for (int i = 0; i < n_; ++i) out[i] = a[b[i]];
  }
  void invert(const std::int32_t* a, std::int32_t* out) const override {
    for (int i = 0; i < n_; ++i) out[a[i]] = i;
  }
  std::vector<Form> generators() const override {
    std::vector<Form> g;
    if (alternating_) {
      for (int i = 2; i < n_; ++i) {  // 3-cycles (1,2,i+1)
        Form f = identity();
        f[0] = 1;
        f[1] = i;
        f[static_cast<std::size_t>(i)] = 0;
        g.push_back(f);
      }
    } else if (n_ >= 2) {
      Form t = identity();
      std::swap(t[0], t[1]);
      g.push_back(t);
      Form c(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % n_;
      g.push_back(c);
    }
    return g;
  }
  std::string format(std::span<const std::int32_t> f) const override {
    std::string s = "[";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i] + 1);
    return s + "]";
  }
  Form parse(std::string_view t) const override {
    t = text::trim(t);
    Form f = identity();
    if (!t.empty() && t.front() == '[') {
      auto v = text::parse_int_list(text::strip_enclosing(t, '[', ']'));
      if (v.size() != static_cast<std::size_t>(n_)) throw Error(ErrorCode::invalid_parameters, bad_element(t, "wrong degree"));
      for (std::size_t i = 0; i < v.size(); ++i) f[i] = static_cast<std::int32_t>(v[i] - 1);
    } else if (t != "e" && t != "id" && t != "()") {
      // product of cycles, rightmost acts first
      std::size_t pos = 0;
      std::vector<Form> cycles;
      while (pos < t.size()) {
        if (t[pos] != '(') throw Error(ErrorCode::syntax_error, bad_element(t, "expected '('"));
        auto close = t.find(')', pos);
        if (close == std::string_view::npos) throw Error(ErrorCode::syntax_error, bad_element(t, "unclosed cycle"));
        auto pts = text::parse_int_list(t.substr(pos + 1, close - pos - 1));
        Form c = identity();
        for (std::size_t i = 0; i < pts.size(); ++i) {
          auto from = pts[i], to = pts[(i + 1) % pts.size()];
          if (from < 1 || from > n_ || to < 1 || to > n_)
            throw Error(ErrorCode::invalid_parameters, bad_element(t, "point out of range"));
          c[static_cast<std::size_t>(from - 1)] = static_cast<std::int32_t>(to - 1);
        }
        cycles.push_back(c);
        pos = close + 1;
      }
      Form tmp(f.size());
      for (const auto& c : cycles) {
        multiply(f.data(), c.data(), tmp.data());
        f = tmp;
      }
    }
    Form seen(f.size(), 0);
    for (auto x : f) {
      if (x < 0 || x >= n_ || seen[static_cast<std::size_t>(x)]++)
        throw Error(ErrorCode::invalid_parameters, bad_element(t, "not a permutation"));
    }
    return f;
  }
  std::optional<std::uint64_t> expected_order() const override {
    std::uint64_t o = 1;
    for (int i = 2; i <= n_; ++i) o = sat_mul(o, static_cast<std::uint64_t>(i));
    return alternating_ && n_ >= 2 ? o / 2 : o;
  }

 private:
  int n_;
  bool alternating_;
};

class SpecialLinearModel final : public ElementModel {
 public:
  SpecialLinearModel(int n, std::int64_t p) : n_(n), p_(p) {}
  std::size_t width() const override { return static_cast<std::size_t>(n_ * n_); }
  Form identity() const override {
    Form f(width(), 0);
    for (int i = 0; i < n_; ++i) f[static_cast<std::size_t>(i * n_ + i)] = 1 % static_cast<std::int32_t>(p_);
    return f;
  }
  void multiply(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const override {
    matops::multiply(n_, p_, a, b, out);
  }
  void invert(const std::int32_t* a, std::int32_t* out) const override { matops::invert(n_, p_, a, out); }
  std::vector<Form> generators() const override {
    std::vector<Form> g;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (i == j) continue;
        Form f = identity();
        f[static_cast<std::size_t>(i * n_ + j)] = 1;
        g.push_back(f);
      }
    return g;
  }
  std::string format(std::span<const std::int32_t> f) const override {
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    return s;
  }
  Form parse(std::string_view t) const override {
    auto v = text::parse_int_list(text::strip_enclosing(t, '[', ']'));
    if (v.size() != width()) throw Error(ErrorCode::invalid_parameters, bad_element(t, "wrong number of entries"));
    Form f;
    for (auto x : v) f.push_back(static_cast<std::int32_t>(mod(x, p_)));
    if (matops::determinant(n_, p_, f.data()) != 1)
      throw Error(ErrorCode::invalid_parameters, bad_element(t, "determinant is not 1"));
    return f;
  }
  std::optional<std::uint64_t> expected_order() const override { return sl_order(n_, p_); }

 private:
  int n_;
  std::int64_t p_;
};

// Form layout: v (n residues) followed by f (n*n, row-major).
class SemidirectModel final : public ElementModel {
 public:
  SemidirectModel(int n, std::int64_t p) : n_(n), p_(p), sl_(n, p) {}
  std::size_t width() const override { return static_cast<std::size_t>(n_ + n_ * n_); }
  Form identity() const override {
    Form f(static_cast<std::size_t>(n_), 0);
    auto id = sl_.identity();
    f.insert(f.end(), id.begin(), id.end());
    return f;
  }
  void multiply(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const override {
    std::int32_t fu[16];
    std::vector<std::int32_t> big;
    std::int32_t* tmp = fu;
    if (n_ > 16) {
      big.resize(static_cast<std::size_t>(n_));
      tmp = big.data();
    }
    matops::apply(n_, p_, a + n_, b, tmp);
    for (int i = 0; i < n_; ++i) out[i] = static_cast<std::int32_t>((a[i] + tmp[i]) % p_);
    matops::multiply(n_, p_, a + n_, b + n_, out + n_);
  }
  void invert(const std::int32_t* a, std::int32_t* out) const override {
    // (v,f)^-1 = (-f^-1 v, f^-1)
    matops::invert(n_, p_, a + n_, out + n_);
    std::vector<std::int32_t> w(static_cast<std::size_t>(n_));
    matops::apply(n_, p_, out + n_, a, w.data());
    for (int i = 0; i < n_; ++i) out[i] = static_cast<std::int32_t>(mod(-w[static_cast<std::size_t>(i)], p_));
  }
  std::vector<Form> generators() const override {
    std::vector<Form> g;
    for (int i = 0; i < n_; ++i) {
      Form f = identity();
      f[static_cast<std::size_t>(i)] = 1;
      g.push_back(f);
    }
    for (const auto& m : sl_.generators()) {
      Form f(static_cast<std::size_t>(n_), 0);
      f.insert(f.end(), m.begin(), m.end());
      g.push_back(f);
    }
    return g;
  }
  std::string format(std::span<const std::int32_t> f) const override {
    std::string s = "(";
    for (int i = 0; i < n_; ++i) s += (i ? "," : "") + std::to_string(f[static_cast<std::size_t>(i)]);
    return s + ";" + sl_.format(f.subspan(static_cast<std::size_t>(n_))) + ")";
  }
  Form parse(std::string_view t) const override {
    auto parts = text::split_top_level(text::strip_enclosing(t, '(', ')'), ';');
    if (parts.size() != 2) throw Error(ErrorCode::syntax_error, bad_element(t, "expected (v;f)"));
    auto v = text::parse_int_list(parts[0]);
    if (v.size() != static_cast<std::size_t>(n_)) throw Error(ErrorCode::invalid_parameters, bad_element(t, "wrong vector length"));
    Form f;
    for (auto x : v) f.push_back(static_cast<std::int32_t>(mod(x, p_)));
    auto m = sl_.parse(parts[1]);
    f.insert(f.end(), m.begin(), m.end());
    return f;
  }
  std::optional<std::uint64_t> expected_order() const override {
    std::uint64_t o = sl_order(n_, p_);
    for (int i = 0; i < n_; ++i) o = sat_mul(o, static_cast<std::uint64_t>(p_));
    return o;
  }

 private:
  int n_;
  std::int64_t p_;
  SpecialLinearModel sl_;
};

// Pairs (a, x) with (a1,x1)(a2,x2) = (a1 + a2 + h(x1,x2), x1 x2).
class CocycleExtModel final : public ElementModel {
 public:
  CocycleExtModel(std::int64_t p, GroupPtr base, std::vector<std::int32_t> table)
      : p_(p), base_(std::move(base)), table_(std::move(table)), order_(base_->order()) {}
  std::size_t width() const override { return 2; }
  std::int32_t h(Index x, Index y) const { return table_[static_cast<std::size_t>(x) * order_ + static_cast<std::size_t>(y)]; }
  Form identity() const override {
    Index e = base_->identity();
    return {static_cast<std::int32_t>(mod(-h(e, e), p_)), e};
  }
  void multiply(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const override {
    out[0] = static_cast<std::int32_t>((a[0] + b[0] + h(a[1], b[1])) % p_);
    out[1] = base_->mul(a[1], b[1]);
  }
  void invert(const std::int32_t* a, std::int32_t* out) const override {
    Index e = base_->identity();
    Index xi = base_->inv(a[1]);
    out[0] = static_cast<std::int32_t>(mod(-static_cast<std::int64_t>(a[0]) - h(a[1], xi) - h(e, e), p_));
    out[1] = xi;
  }
  std::vector<Form> generators() const override {
    std::vector<Form> g;
    for (Index x : base_->generators()) g.push_back({0, x});
    Form id = identity();
    g.push_back({static_cast<std::int32_t>((id[0] + 1) % p_), base_->identity()});
    return g;
  }
  std::string format(std::span<const std::int32_t> f) const override {
    return "(" + std::to_string(f[0]) + ";" + base_->format(f[1]) + ")";
  }
  Form parse(std::string_view t) const override {
    auto parts = text::split_top_level(text::strip_enclosing(t, '(', ')'), ';');
    if (parts.size() != 2) throw Error(ErrorCode::syntax_error, bad_element(t, "expected (a;x)"));
    return {static_cast<std::int32_t>(mod(text::parse_int(parts[0]), p_)), base_->parse(parts[1])};
  }
  std::optional<std::uint64_t> expected_order() const override {
    return sat_mul(static_cast<std::uint64_t>(p_), order_);
  }

 private:
  std::int64_t p_;
  GroupPtr base_;
  std::vector<std::int32_t> table_;
  std::size_t order_;
};

class ProductModel final : public ElementModel {
 public:
  ProductModel(GroupPtr l, GroupPtr r) : l_(std::move(l)), r_(std::move(r)) {}
  std::size_t width() const override { return 2; }
  Form identity() const override { return {l_->identity(), r_->identity()}; }
  void multiply(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const override {
    out[0] = l_->mul(a[0], b[0]);
    out[1] = r_->mul(a[1], b[1]);
  }
  void invert(const std::int32_t* a, std::int32_t* out) const override {
    out[0] = l_->inv(a[0]);
    out[1] = r_->inv(a[1]);
  }
  std::vector<Form> generators() const override {
    std::vector<Form> g;
    for (Index x : l_->generators()) g.push_back({x, r_->identity()});
    for (Index y : r_->generators()) g.push_back({l_->identity(), y});
    return g;
  }
  std::string format(std::span<const std::int32_t> f) const override {
    return "(" + l_->format(f[0]) + ";" + r_->format(f[1]) + ")";
  }
  Form parse(std::string_view t) const override {
    auto parts = text::split_top_level(text::strip_enclosing(t, '(', ')'), ';');
    if (parts.size() != 2) throw Error(ErrorCode::syntax_error, bad_element(t, "expected (g;h)"));
    return {l_->parse(parts[0]), r_->parse(parts[1])};
  }
  std::optional<std::uint64_t> expected_order() const override { return sat_mul(l_->order(), r_->order()); }

 private:
  GroupPtr l_, r_;
};

// Cosets of a normal subgroup, each named by its least base index.
class QuotientModel final : public ElementModel {
 public:
  QuotientModel(GroupPtr base, std::vector<Index> rep, std::size_t order)
      : base_(std::move(base)), rep_(std::move(rep)), order_(order) {}
  std::size_t width() const override { return 1; }
  Form identity() const override { return {rep_[static_cast<std::size_t>(base_->identity())]}; }
  void multiply(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const override {
    out[0] = rep_[static_cast<std::size_t>(base_->mul(a[0], b[0]))];
  }
  void invert(const std::int32_t* a, std::int32_t* out) const override {
    out[0] = rep_[static_cast<std::size_t>(base_->inv(a[0]))];
  }
  std::vector<Form> generators() const override {
    std::vector<Form> g;
    for (Index x : base_->generators()) g.push_back({rep_[static_cast<std::size_t>(x)]});
    return g;
  }
  std::string format(std::span<const std::int32_t> f) const override { return base_->format(f[0]); }
  Form parse(std::string_view t) const override { return {rep_[static_cast<std::size_t>(base_->parse(t))]}; }
  std::optional<std::uint64_t> expected_order() const override { return order_; }

 private:
  GroupPtr base_;
  std::vector<Index> rep_;
  std::size_t order_;
};

GroupPtr build_quotient_group(const GroupPtr& base, const SubsetMask& normal, QuotientSpec spec,
                              std::vector<Index>& rep_out, std::size_t cap) {
  if (normal.group() != base) throw Error(ErrorCode::group_mismatch, "normal subgroup mask is over another group");
  if (!is_subgroup(normal))
    throw Error(ErrorCode::not_a_subgroup, "quotient requires a subgroup of " + format_spec(base->spec()));
  if (!is_normal_subgroup(normal))
    throw Error(ErrorCode::not_normal, "quotient requires a normal subgroup of " + format_spec(base->spec()));
  std::vector<Index> rep(base->order(), -1);
  auto members = normal.indices();
  std::size_t cosets = 0;
  for (std::size_t g = 0; g < base->order(); ++g) {
    if (rep[g] >= 0) continue;
    ++cosets;
    for (Index n : members) rep[static_cast<std::size_t>(base->mul(static_cast<Index>(g), n))] = static_cast<Index>(g);
  }
  rep_out = rep;
  auto model = std::make_shared<QuotientModel>(base, std::move(rep), cosets);
  return std::make_shared<const FiniteGroup>(GroupSpec{std::move(spec)}, std::move(model), cap);
}

}  // namespace

GroupPtr build_group(const SpecPtr& spec, std::size_t cap) {
  if (!spec) throw Error(ErrorCode::invalid_parameters, "null group spec");
  return build_group(*spec, cap);
}

GroupPtr build_group(const GroupSpec& spec, std::size_t cap) {
  return std::visit(
      [&](const auto& s) -> GroupPtr {
        using T = std::decay_t<decltype(s)>;
        std::shared_ptr<const ElementModel> model;
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          require(s.k >= 1, "Cyc(k) needs k >= 1");
          model = std::make_shared<CyclicModel>(s.k);
        } else if constexpr (std::is_same_v<T, AbelianSpec>) {
          require(!s.factors.empty(), "Ab needs at least one factor");
          for (int d : s.factors) require(d >= 1, "Ab factors must be positive");
          model = std::make_shared<AbelianModel>(s.factors);
        } else if constexpr (std::is_same_v<T, SymmetricSpec>) {
          require(s.n >= 1 && s.n <= 12, "Sym(n) needs 1 <= n <= 12");
          model = std::make_shared<PermutationModel>(s.n, false);
        } else if constexpr (std::is_same_v<T, AlternatingSpec>) {
          require(s.n >= 1 && s.n <= 12, "Alt(n) needs 1 <= n <= 12");
          model = std::make_shared<PermutationModel>(s.n, true);
        } else if constexpr (std::is_same_v<T, SpecialLinearSpec>) {
          require(s.n >= 1, "SL(n,p) needs n >= 1");
          require(is_prime(s.p) && s.p < (std::int64_t{1} << 31), "SL(n,p) needs p prime: " + std::to_string(s.p));
          model = std::make_shared<SpecialLinearModel>(s.n, s.p);
        } else if constexpr (std::is_same_v<T, SemidirectSpec>) {
          require(s.n >= 1, "Semidirect(n,p) needs n >= 1");
          require(is_prime(s.p) && s.p < (std::int64_t{1} << 31), "Semidirect(n,p) needs p prime: " + std::to_string(s.p));
          model = std::make_shared<SemidirectModel>(s.n, s.p);
        } else if constexpr (std::is_same_v<T, CocycleExtSpec>) {
          require(is_prime(s.p), "CocycleExt needs p prime: " + std::to_string(s.p));
          auto base = build_group(s.base, cap);
          return build_cocycle_extension(s.p, base, s.table, s.source);
        } else if constexpr (std::is_same_v<T, QuotientSpec>) {
          auto base = build_group(s.base, cap);
          SubsetMask normal(base);
          switch (s.kind) {
            case NormalRef::center: normal = center(base); break;
            case NormalRef::derived: normal = derived_subgroup(base); break;
            case NormalRef::explicit_set: normal = SubsetMask::of(base, s.normal); break;
          }
          return build_quotient(base, normal, s.kind, s.source).quotient;
        } else {
          auto l = build_group(s.left, cap);
          auto r = build_group(s.right, cap);
          model = std::make_shared<ProductModel>(l, r);
        }
        return std::make_shared<const FiniteGroup>(spec, std::move(model), cap);
      },
      spec.value);
}

QuotientMap build_quotient(const GroupPtr& base, const SubsetMask& normal, NormalRef kind, std::string source) {
  QuotientSpec spec;
  spec.base = std::make_shared<const GroupSpec>(base->spec());
  spec.kind = kind;
  if (kind == NormalRef::explicit_set) spec.normal = normal.indices();
  spec.source = std::move(source);
  std::vector<Index> rep;
  auto q = build_quotient_group(base, normal, std::move(spec), rep, kDefaultOrderCap);
  QuotientMap out{q, std::vector<Index>(base->order())};
  for (std::size_t g = 0; g < base->order(); ++g) out.projection[g] = q->index_of(std::vector<std::int32_t>{rep[g]});
  return out;
}

Index ProductGroup::pair(Index a, Index b) const { return group->index_of(std::vector<std::int32_t>{a, b}); }

ProductGroup build_product(const GroupPtr& left, const GroupPtr& right) {
  ProductSpec spec{std::make_shared<const GroupSpec>(left->spec()), std::make_shared<const GroupSpec>(right->spec())};
  auto g = std::make_shared<const FiniteGroup>(GroupSpec{spec}, std::make_shared<ProductModel>(left, right),
                                               kDefaultOrderCap);
  return {g, left, right};
}

bool satisfies_cocycle_identity(const FiniteGroup& base, std::int64_t p, std::span<const std::int32_t> table) {
  std::size_t n = base.order();
  if (table.size() != n * n) return false;
  auto h = [&](Index x, Index y) -> std::int64_t { return table[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)]; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Index xy = base.mul(static_cast<Index>(x), static_cast<Index>(y));
      for (std::size_t z = 0; z < n; ++z) {
        Index yz = base.mul(static_cast<Index>(y), static_cast<Index>(z));
        auto lhs = h(static_cast<Index>(x), static_cast<Index>(y)) + h(xy, static_cast<Index>(z));
        auto rhs = h(static_cast<Index>(y), static_cast<Index>(z)) + h(static_cast<Index>(x), yz);
        if (mod(lhs - rhs, p) != 0) return false;
      }
    }
  return true;
}

GroupPtr build_cocycle_extension(std::int64_t p, const GroupPtr& base, std::vector<std::int32_t> table,
                                 std::string source) {
  require(is_prime(p), "cocycle modulus must be prime: " + std::to_string(p));
  if (table.size() != base->order() * base->order())
    throw Error(ErrorCode::table_incomplete, "cocycle table needs |H|^2 = " +
                                                 std::to_string(base->order() * base->order()) + " entries");
  for (auto& v : table) v = static_cast<std::int32_t>(mod(v, p));
  if (!satisfies_cocycle_identity(*base, p, table))
    throw Error(ErrorCode::invalid_cocycle, "h(x,y) + h(xy,z) != h(y,z) + h(x,yz) for some triple");
  CocycleExtSpec spec{p, std::make_shared<const GroupSpec>(base->spec()), table, std::move(source)};
  auto model = std::make_shared<CocycleExtModel>(p, base, std::move(table));
  return std::make_shared<const FiniteGroup>(GroupSpec{std::move(spec)}, std::move(model), kDefaultOrderCap);
}

}  // namespace glab
