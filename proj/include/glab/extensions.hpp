#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "glab/group.hpp"
#include "glab/mask.hpp"

namespace glab {

// h: H x H -> Z/p, stored row-major over base indices.
struct Cocycle {
  std::int64_t p = 2;
  GroupPtr base;
  std::vector<std::int32_t> table;

  std::int32_t operator()(Index x, Index y) const {
    return table[static_cast<std::size_t>(x) * base->order() + static_cast<std::size_t>(y)];
  }
  // Sorted distinct values of h.
  std::vector<std::int32_t> image() const;
};

// Zero table of the right size.
Cocycle zero_cocycle(std::int64_t p, const GroupPtr& base);
// h(x,y) = f(x) + f(y) - f(xy) + c, a random cohomologically trivial cocycle
// (not normalized), plus a multiple of the carry cocycle when H is cyclic of
// order divisible by p, which is the non-split part.
Cocycle random_cocycle(std::int64_t p, const GroupPtr& base, std::mt19937_64& rng);

// Associativity of the pair multiplication on every triple. Throws
// table_incomplete when the table has the wrong size, invalid_parameters when
// an entry is outside [0,p).
bool validate_cocycle(const Cocycle& h);

struct Extension {
  GroupPtr group;
  Cocycle cocycle;
  std::vector<Index> projection;  // element index -> base index

  Index lift(std::int64_t a, Index x) const;
  std::int32_t coordinate(Index g) const { return group->form(g)[0]; }
  Index base_of(Index g) const { return group->form(g)[1]; }
};

// Throws invalid_cocycle.
Extension build_extension(const Cocycle& h);

// The identity is (-h(1,1),1) and (a,x)^-1 = (-a-h(x,x^-1)-h(1,1), x^-1).
// Both are compared against the group's own arithmetic (products, not the
// model's inverse routine).
struct FormulaCheck {
  bool identity_ok = false;
  std::size_t elements = 0;
  std::size_t inverse_failures = 0;
  bool holds() const { return identity_ok && inverse_failures == 0; }
};
FormulaCheck check_formulas(const Extension& e);

struct ProjectionCheck {
  bool homomorphism = false;
  bool surjective = false;
  std::size_t kernel_order = 0;
  bool kernel_central = false;
  bool holds(std::int64_t p) const {
    return homomorphism && surjective && kernel_central && kernel_order == static_cast<std::size_t>(p);
  }
};
ProjectionCheck check_projection(const Extension& e);

struct SplitResult {
  bool splits = false;
  std::vector<Index> generator_lifts;  // lifts of the base generators spanning the complement
  std::optional<SubsetMask> complement;
  std::size_t tuples_tried = 0;
};
// Any complement is generated by lifts of H's generators, so trying every
// tuple of lifts is exhaustive.
SplitResult split_check(const Extension& e);

// P' = {0} x H, P = P' P'^-1. Compares the first coordinates of P^n with
// (2n-1)im(h) - n im(h) - n h(1,1) and with the coarser 2n(im(h) - im(h)).
struct ImageBound {
  std::size_t n = 0;
  std::vector<std::int32_t> observed;  // first coordinates met by P^n
  std::vector<std::int32_t> bound;
  std::vector<std::int32_t> outer_bound;
  bool contained = false;
  bool contained_outer = false;
  bool power_is_group = false;
};
ImageBound image_bound_check(const Extension& e, std::size_t n);

// [a1b1,a2b2] = (a1^-1)^{b1} (a2^-1 a1)^{b2 b1} a2^{b2^{b1}} [b1,b2]. The
// literal variant with exponent b1 b2 on the middle factor is counted too.
struct CommutatorIdentityCheck {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::size_t literal_failures = 0;
  bool holds() const { return checked > 0 && failures == 0; }
};
CommutatorIdentityCheck check_commutator_identity(const GroupPtr& g, std::size_t samples, std::uint64_t seed);

// In Semidirect(n,p): [(v,f),(u,g)] = (f^-1(g^-1(v + f(u) - u) - v), f^-1 g^-1 f g),
// evaluated with matrices and compared with the group commutator.
struct SemidirectFormulaCheck {
  std::size_t checked = 0;
  std::size_t failures = 0;
  bool holds() const { return checked > 0 && failures == 0; }
};
SemidirectFormulaCheck check_semidirect_commutator(const GroupPtr& g, std::size_t samples, std::uint64_t seed);

struct Premise {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct IwasawaCertificate {
  std::vector<Premise> premises;
  std::size_t n = 0;  // commutator width
  int m = 0;          // derived length of B
  std::uint64_t bound = 0;
  std::optional<std::size_t> k_min;
  std::size_t search_cap = 0;
  CommutatorIdentityCheck identity;
  bool holds() const { return k_min && *k_min <= bound && identity.holds(); }
};
// Throws premise_violation naming the first premise that fails.
IwasawaCertificate iwasawa_certificate(const SubsetMask& a, const SubsetMask& b, std::size_t samples = 10000,
                                       std::uint64_t seed = 1);

}  // namespace glab
