#include "glab/group.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "glab/error.hpp"

namespace glab {

namespace {

// Cayley tables are kept for groups up to this order (16 MiB of indices).
constexpr std::size_t kTableLimit = 2048;

thread_local std::vector<std::int32_t> tl_scratch;

std::int32_t* scratch(std::size_t width) {
  if (tl_scratch.size() < width) tl_scratch.resize(width);
  return tl_scratch.data();
}

bool same_spec_ptr(const SpecPtr& a, const SpecPtr& b) {
  if (!a || !b) return a == b;
  return *a == *b;
}

}  // namespace

bool operator==(const GroupSpec& a, const GroupSpec& b) {
  if (a.value.index() != b.value.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.value);
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          return lhs.k == rhs.k;
        } else if constexpr (std::is_same_v<T, AbelianSpec>) {
          return lhs.factors == rhs.factors;
        } else if constexpr (std::is_same_v<T, SymmetricSpec> || std::is_same_v<T, AlternatingSpec>) {
          return lhs.n == rhs.n;
        } else if constexpr (std::is_same_v<T, SpecialLinearSpec> || std::is_same_v<T, SemidirectSpec>) {
          return lhs.n == rhs.n && lhs.p == rhs.p;
        } else if constexpr (std::is_same_v<T, CocycleExtSpec>) {
          return lhs.p == rhs.p && same_spec_ptr(lhs.base, rhs.base) && lhs.table == rhs.table;
        } else if constexpr (std::is_same_v<T, QuotientSpec>) {
          return same_spec_ptr(lhs.base, rhs.base) && lhs.kind == rhs.kind && lhs.normal == rhs.normal;
        } else {
          return same_spec_ptr(lhs.left, rhs.left) && same_spec_ptr(lhs.right, rhs.right);
        }
      },
      a.value);
}

std::string format_spec(const GroupSpec& spec) {
  std::ostringstream os;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          os << "Cyc(" << s.k << ")";
        } else if constexpr (std::is_same_v<T, AbelianSpec>) {
          os << "Ab(";
          for (std::size_t i = 0; i < s.factors.size(); ++i) os << (i ? "," : "") << s.factors[i];
          os << ")";
        } else if constexpr (std::is_same_v<T, SymmetricSpec>) {
          os << "Sym(" << s.n << ")";
        } else if constexpr (std::is_same_v<T, AlternatingSpec>) {
          os << "Alt(" << s.n << ")";
        } else if constexpr (std::is_same_v<T, SpecialLinearSpec>) {
          os << "SL(" << s.n << "," << s.p << ")";
        } else if constexpr (std::is_same_v<T, SemidirectSpec>) {
          os << "Semidirect(" << s.n << "," << s.p << ")";
        } else if constexpr (std::is_same_v<T, CocycleExtSpec>) {
          os << "CocycleExt(" << s.p << "," << format_spec(*s.base) << ","
             << (s.source.empty() ? std::string("<table>") : s.source) << ")";
        } else if constexpr (std::is_same_v<T, QuotientSpec>) {
          os << "Quotient(" << format_spec(*s.base) << ",";
          switch (s.kind) {
            case NormalRef::center: os << "center"; break;
            case NormalRef::derived: os << "derived"; break;
            case NormalRef::explicit_set: os << (s.source.empty() ? std::string("<subset>") : s.source); break;
          }
          os << ")";
        } else {
          os << "Product(" << format_spec(*s.left) << "," << format_spec(*s.right) << ")";
        }
      },
      spec.value);
  return os.str();
}

FiniteGroup::FiniteGroup(GroupSpec spec, std::shared_ptr<const ElementModel> model, std::size_t cap)
    : spec_(std::move(spec)), model_(std::move(model)), width_(model_->width()) {
  if (auto expected = model_->expected_order(); expected && *expected > cap)
    throw Error(ErrorCode::order_cap_exceeded,
                format_spec(spec_) + " has order " + std::to_string(*expected) + " > cap " +
                    std::to_string(cap));

  rehash(64);
  Form id = model_->identity();
  elements_.insert(elements_.end(), id.begin(), id.end());
  count_ = 1;
  insert(0);

  std::vector<Form> gens;
  for (auto& g : model_->generators())
    if (g != id) gens.push_back(std::move(g));

  // breadth-first closure; generators are tried in their listed order
  Form buf(width_);
  for (std::size_t i = 0; i < count_; ++i) {
    for (const auto& g : gens) {
      model_->multiply(elements_.data() + i * width_, g.data(), buf.data());
      if (lookup(buf.data())) continue;
      if (count_ + 1 > cap)
        throw Error(ErrorCode::order_cap_exceeded, format_spec(spec_) + " exceeds order cap " + std::to_string(cap));
      elements_.insert(elements_.end(), buf.begin(), buf.end());
      ++count_;
      insert(static_cast<Index>(count_ - 1));
    }
  }
  if (auto expected = model_->expected_order(); expected && *expected != count_)
    throw std::logic_error("enumeration of " + format_spec(spec_) + " produced " + std::to_string(count_) +
                           " elements, expected " + std::to_string(*expected));

  for (const auto& g : gens) {
    Index gi = *lookup(g.data());
    if (std::find(generators_.begin(), generators_.end(), gi) == generators_.end()) generators_.push_back(gi);
  }

  inverse_.resize(count_);
  for (std::size_t i = 0; i < count_; ++i) {
    model_->invert(elements_.data() + i * width_, buf.data());
    inverse_[i] = *lookup(buf.data());
  }

  if (count_ <= kTableLimit) {
    std::vector<Index> table(count_ * count_);
    for (std::size_t a = 0; a < count_; ++a)
      for (std::size_t b = 0; b < count_; ++b) {
        model_->multiply(elements_.data() + a * width_, elements_.data() + b * width_, buf.data());
        table[a * count_ + b] = *lookup(buf.data());
      }
    table_ = std::move(table);
  }
}

Index FiniteGroup::mul(Index a, Index b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * count_ + static_cast<std::size_t>(b)];
  std::int32_t* out = scratch(width_);
  model_->multiply(elements_.data() + static_cast<std::size_t>(a) * width_,
                   elements_.data() + static_cast<std::size_t>(b) * width_, out);
  return *lookup(out);
}

Index FiniteGroup::power(Index a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Index r = identity();
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::size_t FiniteGroup::element_order(Index a) const {
  std::size_t k = 1;
  for (Index x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

std::optional<Index> FiniteGroup::find(std::span<const std::int32_t> form) const {
  if (form.size() != width_) return std::nullopt;
  return lookup(form.data());
}

Index FiniteGroup::index_of(std::span<const std::int32_t> form) const {
  auto i = find(form);
  if (!i) throw Error(ErrorCode::invalid_parameters, "not an element of " + format_spec(spec_));
  return *i;
}

std::uint64_t FiniteGroup::hash(const std::int32_t* f) const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < width_; ++i) {
    h ^= static_cast<std::uint32_t>(f[i]);
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return h;
}

std::optional<Index> FiniteGroup::lookup(const std::int32_t* f) const {
  std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash(f) & mask;; s = (s + 1) & mask) {
    Index i = slots_[s];
    if (i < 0) return std::nullopt;
    if (std::equal(f, f + width_, elements_.data() + static_cast<std::size_t>(i) * width_)) return i;
  }
}

void FiniteGroup::insert(Index i) {
  if (2 * count_ > slots_.size()) {
    rehash(slots_.size() * 2);
    return;  // rehash reinserts every element, including i
  }
  std::size_t mask = slots_.size() - 1;
  std::size_t s = hash(elements_.data() + static_cast<std::size_t>(i) * width_) & mask;
  while (slots_[s] >= 0) s = (s + 1) & mask;
  slots_[s] = i;
}

void FiniteGroup::rehash(std::size_t slots) {
  slots_.assign(std::bit_ceil(slots), -1);
  std::size_t mask = slots_.size() - 1;
  for (std::size_t i = 0; i < count_; ++i) {
    std::size_t s = hash(elements_.data() + i * width_) & mask;
    while (slots_[s] >= 0) s = (s + 1) & mask;
    slots_[s] = static_cast<Index>(i);
  }
}

}  // namespace glab
