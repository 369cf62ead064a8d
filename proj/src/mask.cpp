#include "glab/mask.hpp"

#include "glab/error.hpp"

namespace glab {

SubsetMask::SubsetMask(GroupPtr group)
    : group_(std::move(group)), bits_(group_ ? group_->order() : 0), words_((bits_ + 63) / 64, 0) {}

SubsetMask SubsetMask::full(const GroupPtr& group) {
  SubsetMask m(group);
  for (auto& w : m.words_) w = ~std::uint64_t{0};
  m.trim();
  return m;
}

SubsetMask SubsetMask::of(const GroupPtr& group, std::span<const Index> elements) {
  SubsetMask m(group);
  for (Index i : elements) {
    if (i < 0 || static_cast<std::size_t>(i) >= m.bits_)
      throw Error(ErrorCode::invalid_parameters, "element index out of range");
    m.set(i);
  }
  return m;
}

std::size_t SubsetMask::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool SubsetMask::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::vector<Index> SubsetMask::indices() const {
  std::vector<Index> out;
  out.reserve(count());
  for_each([&](Index i) { out.push_back(i); });
  return out;
}

SubsetMask SubsetMask::inverse() const {
  SubsetMask m(group_);
  for_each([&](Index i) { m.set(group_->inv(i)); });
  return m;
}

bool SubsetMask::is_subset_of(const SubsetMask& other) const {
  require_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

SubsetMask SubsetMask::complement() const {
  SubsetMask m = *this;
  for (auto& w : m.words_) w = ~w;
  m.trim();
  return m;
}

SubsetMask& SubsetMask::operator|=(const SubsetMask& other) {
  require_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

SubsetMask& SubsetMask::operator&=(const SubsetMask& other) {
  require_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

SubsetMask& SubsetMask::operator-=(const SubsetMask& other) {
  require_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

bool SubsetMask::operator==(const SubsetMask& other) const {
  return group_ == other.group_ && words_ == other.words_;
}

void SubsetMask::require_same(const SubsetMask& other) const {
  if (group_ != other.group_)
    throw Error(ErrorCode::group_mismatch, "subset masks belong to different groups");
}

void SubsetMask::trim() {
  if (bits_ % 64 != 0 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
}

}  // namespace glab
