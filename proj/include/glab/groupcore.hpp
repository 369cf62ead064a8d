#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "glab/group.hpp"
#include "glab/mask.hpp"

namespace glab {

// Conjugacy classes; class ids follow the order of their least element, which
// is also the representative.
struct ClassPartition {
  GroupPtr group;
  std::vector<std::int32_t> class_of;
  std::vector<Index> representatives;
  std::vector<std::size_t> sizes;
  std::vector<Index> by_class;        // elements grouped by class id
  std::vector<std::size_t> offsets;   // class c occupies [offsets[c], offsets[c+1])

  std::size_t count() const { return representatives.size(); }
  std::span<const Index> elements_of(std::size_t cls) const {
    return std::span<const Index>(by_class).subspan(offsets[cls], offsets[cls + 1] - offsets[cls]);
  }
  SubsetMask members(std::size_t cls) const;
  // Union of the classes meeting `set`.
  SubsetMask closure(const SubsetMask& set) const;
  bool is_normal(const SubsetMask& set) const;
};

ClassPartition conjugacy_classes(const GroupPtr& group);

// Exact product set {ab : a in A, b in B}.
SubsetMask product_sets(const SubsetMask& a, const SubsetMask& b);

// Product of two normal subsets; the result is normal, so it is decided one
// class representative at a time. Throws not_normal if either input is not.
SubsetMask normal_product(const ClassPartition& classes, const SubsetMask& a, const SubsetMask& b);

// S^G, the smallest normal subset containing S.
SubsetMask normal_closure_set(const GroupPtr& group, const SubsetMask& s);
SubsetMask normal_closure_set(const ClassPartition& classes, const SubsetMask& s);

bool is_subgroup(const SubsetMask& set);
bool is_normal_subgroup(const SubsetMask& set);

// <S> and the normal closure <S^G>.
SubsetMask subgroup_generated(const GroupPtr& group, std::span<const Index> generators);
SubsetMask normal_subgroup_generated(const GroupPtr& group, std::span<const Index> generators);

SubsetMask center(const GroupPtr& group);
SubsetMask derived_subgroup(const GroupPtr& group);
// [H,H] for a subgroup H given as a mask.
SubsetMask commutator_subgroup(const SubsetMask& subgroup);
// Length of the derived series of H, or nullopt if it stalls above {e}.
std::optional<int> derived_length(const SubsetMask& subgroup);

// Invariant factors d1 | d2 | ... of a finite abelian group; empty for the
// trivial group. Throws not_abelian.
std::vector<std::int64_t> abelian_invariants(const GroupPtr& group);

struct StructureReport {
  SubsetMask center;
  SubsetMask derived;
  bool is_perfect = false;
  std::vector<std::int64_t> abelianization;
};
StructureReport structure_report(const GroupPtr& group);

// The set of all commutators [a,b].
SubsetMask commutator_set(const ClassPartition& classes);

// min n with C^n covering [G,G] (C = commutators); 0 when [G,G] is trivial.
std::size_t commutator_width(const GroupPtr& group);

struct PrimeCyclicQuotient {
  std::int64_t p = 0;
  std::vector<std::int32_t> map;  // element index -> residue mod p
  SubsetMask kernel;
};
PrimeCyclicQuotient surject_onto_prime_cyclic(const GroupPtr& group);

bool is_abelian(const GroupPtr& group);

}  // namespace glab
