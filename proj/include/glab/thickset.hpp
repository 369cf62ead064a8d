#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "glab/group.hpp"
#include "glab/groupcore.hpp"
#include "glab/mask.hpp"

namespace glab {

inline constexpr std::size_t kExactCliqueLimit = 5000;
// Branch-and-bound nodes before an exact clique search gives up and reports
// the best clique found as a lower bound.
inline constexpr std::size_t kCliqueNodeBudget = 2'000'000;

enum class ThicknessStatus { exact, lower_bound_only };

struct ThicknessResult {
  ThicknessStatus status = ThicknessStatus::exact;
  std::optional<std::size_t> value;  // empty means infinite (e not in P)
  std::vector<Index> witness;        // sequence with all quotients outside P
};

// Least N such that P is N-thick. Throws not_symmetric.
ThicknessResult thickness(const SubsetMask& p, std::size_t exact_limit = kExactCliqueLimit,
                          std::size_t node_budget = kCliqueNodeBudget);

// True if every pair i < j of `seq` has seq[i]^-1 seq[j] outside P.
bool is_p_free(const SubsetMask& p, const std::vector<Index>& seq);

struct PowerCover {
  std::optional<std::size_t> power;  // least n with P^n = G
  SubsetMask generated;              // <P>, reported when no power covers
};
PowerCover power_cover(const SubsetMask& p, std::size_t cap = 64);

struct Genericity {
  std::size_t m = 0;
  std::vector<Index> translators;  // P g_1 u ... u P g_m = G
  bool exact = true;               // false if the search budget ran out
};
std::optional<Genericity> genericity(const SubsetMask& p, std::size_t cap = 64);

struct GenericCertificate {
  std::size_t m = 0;
  std::size_t exponent = 0;  // 3m - 2
  SubsetMask subgroup;
  bool closed_under_product = false;
  bool closed_under_inverse = false;
  std::size_t index = 0;
  bool holds() const { return closed_under_product && closed_under_inverse && index <= m; }
};
// Throws precondition_violation unless e in P and P = P^-1.
GenericCertificate generic_subgroup_certificate(const SubsetMask& p, std::size_t cap = 64);

// Classical Ramsey numbers; throws out_of_table.
std::size_t ramsey_bound(std::size_t n, std::size_t m);
// Is there a 2-coloring of K_k without a red K_n and without a blue K_m?
bool ramsey_coloring_exists(std::size_t k, std::size_t n, std::size_t m);

// For each conjugacy class C, least N with (C u C^-1)^{<=N} = G, or empty.
std::vector<std::optional<std::size_t>> class_cover_depths(const ClassPartition& classes, std::size_t cap = 64);
SubsetMask gn_set(const ClassPartition& classes, std::size_t n);
SubsetMask gn_set(const GroupPtr& group, std::size_t n);

struct SimplicityDegree {
  std::optional<std::size_t> degree;
  std::optional<Index> witness;  // noncentral element whose closure stays proper
  SubsetMask witness_closure;
};
// Throws degenerate_abelian.
SimplicityDegree bounded_simplicity_degree(const GroupPtr& group, std::size_t cap = 64);

struct CoveringNumber {
  std::optional<std::size_t> value;
  std::vector<std::optional<std::size_t>> per_class;  // indexed by class id; empty for central classes
};
// Throws not_simple_nonabelian.
CoveringNumber covering_number(const GroupPtr& group, std::size_t cap = 64);
bool is_simple_nonabelian(const GroupPtr& group);

struct SpreadResult {
  std::size_t value = 0;
  bool exact = true;      // false when the cap or the exact-search limit cut the search
  std::vector<Index> witness;
};
// Longest sequence with every quotient g_i^-1 g_j in S. Throws not_symmetric.
SpreadResult spread_length(const SubsetMask& s, std::size_t cap = 1u << 20,
                           std::size_t node_budget = kCliqueNodeBudget);

// Experimental: the largest normal subset of P^4 and its thickness.
struct NormalCoreProbe {
  SubsetMask core;
  ThicknessResult core_thickness;
};
NormalCoreProbe normal_core_probe(const SubsetMask& p);

// Set maps along a homomorphism given as an index table base -> target.
SubsetMask image_mask(const std::vector<Index>& map, const SubsetMask& z, const GroupPtr& target);
SubsetMask preimage_mask(const std::vector<Index>& map, const SubsetMask& x, const GroupPtr& base);
SubsetMask product_mask(const ProductGroup& prod, const SubsetMask& a, const SubsetMask& b);

}  // namespace glab
