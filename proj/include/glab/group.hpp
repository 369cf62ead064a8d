#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace glab {

using Index = std::int32_t;
using Form = std::vector<std::int32_t>;

inline constexpr std::size_t kDefaultOrderCap = 2'000'000;

struct GroupSpec;
using SpecPtr = std::shared_ptr<const GroupSpec>;

struct CyclicSpec {
  int k = 1;
};
struct AbelianSpec {
  std::vector<int> factors;
};
struct SymmetricSpec {
  int n = 1;
};
struct AlternatingSpec {
  int n = 1;
};
struct SpecialLinearSpec {
  int n = 2;
  std::int64_t p = 2;
};
// F_p^n x| SL_n(F_p) with (v,f)*(u,g) = (v + f(u), fg).
struct SemidirectSpec {
  int n = 2;
  std::int64_t p = 2;
};
// Z/pZ x_h H; `table` is indexed by base element indices, row-major x*|H|+y.
struct CocycleExtSpec {
  std::int64_t p = 2;
  SpecPtr base;
  std::vector<std::int32_t> table;
  std::string source;  // file the table was read from, echoed by format_spec
};
enum class NormalRef { center, derived, explicit_set };
struct QuotientSpec {
  SpecPtr base;
  NormalRef kind = NormalRef::center;
  std::vector<Index> normal;  // base indices, only for explicit_set
  std::string source;
};
struct ProductSpec {
  SpecPtr left;
  SpecPtr right;
};

struct GroupSpec {
  std::variant<CyclicSpec, AbelianSpec, SymmetricSpec, AlternatingSpec, SpecialLinearSpec,
               SemidirectSpec, CocycleExtSpec, QuotientSpec, ProductSpec>
      value;
};

bool operator==(const GroupSpec& a, const GroupSpec& b);
std::string format_spec(const GroupSpec& spec);

template <class T>
SpecPtr make_spec(T value) {
  return std::make_shared<const GroupSpec>(GroupSpec{std::move(value)});
}

// Element arithmetic on canonical forms (fixed-width int32 vectors).
class ElementModel {
 public:
  virtual ~ElementModel() = default;
  virtual std::size_t width() const = 0;
  virtual Form identity() const = 0;
  virtual void multiply(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const = 0;
  virtual void invert(const std::int32_t* a, std::int32_t* out) const = 0;
  virtual std::vector<Form> generators() const = 0;
  virtual std::string format(std::span<const std::int32_t> form) const = 0;
  virtual Form parse(std::string_view text) const = 0;
  virtual std::optional<std::uint64_t> expected_order() const { return std::nullopt; }
};

class FiniteGroup {
 public:
  FiniteGroup(GroupSpec spec, std::shared_ptr<const ElementModel> model, std::size_t cap);

  const GroupSpec& spec() const { return spec_; }
  const ElementModel& model() const { return *model_; }
  std::size_t order() const { return count_; }
  Index identity() const { return 0; }

  Index mul(Index a, Index b) const;
  Index inv(Index a) const { return inverse_[static_cast<std::size_t>(a)]; }
  // a^b = b^-1 a b
  Index conj(Index a, Index b) const { return mul(mul(inv(b), a), b); }
  // [a,b] = a^-1 b^-1 a b
  Index commutator(Index a, Index b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Index power(Index a, std::int64_t k) const;
  std::size_t element_order(Index a) const;

  std::span<const Index> generators() const { return generators_; }
  std::span<const std::int32_t> form(Index i) const {
    return {elements_.data() + static_cast<std::size_t>(i) * width_, width_};
  }
  std::optional<Index> find(std::span<const std::int32_t> form) const;
  Index index_of(std::span<const std::int32_t> form) const;  // throws invalid_parameters

  std::string format(Index i) const { return model_->format(form(i)); }
  Index parse(std::string_view text) const { return index_of(model_->parse(text)); }

 private:
  std::uint64_t hash(const std::int32_t* f) const;
  std::optional<Index> lookup(const std::int32_t* f) const;
  void insert(Index i);
  void rehash(std::size_t slots);

  GroupSpec spec_;
  std::shared_ptr<const ElementModel> model_;
  std::size_t width_ = 0;
  std::size_t count_ = 0;
  std::vector<std::int32_t> elements_;
  std::vector<Index> slots_;
  std::vector<Index> inverse_;
  std::vector<Index> table_;  // full Cayley table for small groups
  std::vector<Index> generators_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr build_group(const GroupSpec& spec, std::size_t cap = kDefaultOrderCap);
GroupPtr build_group(const SpecPtr& spec, std::size_t cap = kDefaultOrderCap);

// Builders that reuse already-enumerated groups.
struct QuotientMap {
  GroupPtr quotient;
  std::vector<Index> projection;  // base index -> quotient index
};
class SubsetMask;
QuotientMap build_quotient(const GroupPtr& base, const SubsetMask& normal,
                           NormalRef kind = NormalRef::explicit_set, std::string source = {});

struct ProductGroup {
  GroupPtr group;
  GroupPtr left;
  GroupPtr right;
  Index pair(Index a, Index b) const;
  Index left_of(Index g) const { return group->form(g)[0]; }
  Index right_of(Index g) const { return group->form(g)[1]; }
};
ProductGroup build_product(const GroupPtr& left, const GroupPtr& right);

// h(x,y) + h(xy,z) = h(y,z) + h(x,yz) mod p on every triple.
bool satisfies_cocycle_identity(const FiniteGroup& base, std::int64_t p, std::span<const std::int32_t> table);

// Throws invalid_cocycle when the table violates the cocycle identity.
GroupPtr build_cocycle_extension(std::int64_t p, const GroupPtr& base,
                                 std::vector<std::int32_t> table, std::string source = {});

}  // namespace glab
