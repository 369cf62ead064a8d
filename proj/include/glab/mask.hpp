#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "glab/group.hpp"

namespace glab {

// Bit vector over a group's element indices.
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(GroupPtr group);

  static SubsetMask full(const GroupPtr& group);
  static SubsetMask of(const GroupPtr& group, std::span<const Index> elements);
  static SubsetMask of(const GroupPtr& group, std::initializer_list<Index> elements) {
    return of(group, std::span<const Index>(elements.begin(), elements.size()));
  }

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return bits_; }
  std::size_t count() const;
  bool empty() const;
  bool full() const { return count() == bits_; }

  bool test(Index i) const {
    auto u = static_cast<std::size_t>(i);
    return (words_[u >> 6] >> (u & 63)) & 1u;
  }
  void set(Index i) {
    auto u = static_cast<std::size_t>(i);
    words_[u >> 6] |= std::uint64_t{1} << (u & 63);
  }
  void reset(Index i) {
    auto u = static_cast<std::size_t>(i);
    words_[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        auto b = static_cast<std::size_t>(std::countr_zero(bits));
        f(static_cast<Index>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }
  std::vector<Index> indices() const;

  SubsetMask inverse() const;
  bool is_symmetric() const { return inverse() == *this; }
  bool is_subset_of(const SubsetMask& other) const;
  SubsetMask complement() const;

  SubsetMask& operator|=(const SubsetMask& other);
  SubsetMask& operator&=(const SubsetMask& other);
  SubsetMask& operator-=(const SubsetMask& other);
  friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) { return a |= b; }
  friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) { return a &= b; }
  friend SubsetMask operator-(SubsetMask a, const SubsetMask& b) { return a -= b; }
  bool operator==(const SubsetMask& other) const;

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  void require_same(const SubsetMask& other) const;
  void trim();

  GroupPtr group_;
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace glab
