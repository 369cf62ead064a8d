#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glab/group.hpp"
#include "glab/groupcore.hpp"
#include "glab/mask.hpp"

namespace glab {

// Permutation of {1..n}, stored 0-based. Composition (s * t)(x) = s(t(x)):
// the right factor acts first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // 0-based images; throws invalid_parameters

  static Permutation identity(int n);
  // Cycle on 1-based points; throws overlap_violation on repeated points.
  static Permutation cycle(int n, const std::vector<int>& points);
  // Cycle notation such as "(1,2,3)(4,5)", rightmost cycle first, or "e".
  static Permutation parse(std::string_view text, int n);
  static Permutation from_form(std::span<const std::int32_t> form);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int point) const { return img_[static_cast<std::size_t>(point - 1)] + 1; }  // 1-based
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  bool operator==(const Permutation& other) const = default;

  bool is_even() const;
  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, 1-based, each starting at its least point
  std::vector<int> support() const;
  std::string to_string() const;                 // cycle notation, "e" for the identity
  Form form() const { return Form(img_.begin(), img_.end()); }

 private:
  std::vector<int> img_;
};

struct IdentityCheck {
  Permutation lhs;
  Permutation rhs;
  bool holds() const { return lhs == rhs; }
};

// (x,a_1..a_m)^-1 * (x,b_1..b_m) against (x,b_1..b_m,a_m..a_1).
// Throws overlap_violation, length_mismatch.
IdentityCheck cycle_quotient(int n, int x, const std::vector<int>& a, const std::vector<int>& b);
// (x,y,a..) * (x,y,b..) against (x,a..) * (y,b..). Throws overlap_violation, even_length.
IdentityCheck odd_cycle_merge(int n, int x, int y, const std::vector<int>& a, const std::vector<int>& b);

struct IdentitySweep {
  std::size_t cycle_quotient_checks = 0, cycle_quotient_failures = 0;
  std::size_t odd_merge_checks = 0, odd_merge_failures = 0;
  std::size_t odd_results_checked = 0, odd_results_even = 0;  // cycle quotients that are even permutations
  std::size_t shapes_sampled = 0;  // shapes checked on a sample instead of every labelling
};
// Runs both identities in Sym(n) for m, p, q <= max_param over every
// labelling of the points, or over `sample` random labellings when a shape
// has more than `exhaustive_limit` labellings.
IdentitySweep sweep_identities(int n, int max_param, std::size_t exhaustive_limit = 4'000'000,
                               std::size_t sample = 100'000, std::uint64_t seed = 1);

enum class ExpressPath { trivial, constructive, fallback };
std::string_view to_string(ExpressPath p);

struct CollisionWitness {
  std::vector<int> cycle_lengths;   // odd cycle lengths of the target factor
  std::size_t thickness = 0;
  std::size_t first = 0, second = 0;  // colliding block indices, first < second
  Permutation quotient;               // block_first^-1 * block_second, lies in P
};

struct Expression {
  Index q1 = 0;
  Index q2 = 0;
  ExpressPath path = ExpressPath::fallback;
  std::vector<CollisionWitness> collisions;  // recorded for the constructive path
};

// sigma = q1 * q2 with q1, q2 in P, for P normal, symmetric and thick in
// Alt(n). Throws not_normal, not_thick, not_symmetric and
// omega_too_small_and_no_fallback.
Expression express_even(const ClassPartition& classes, const SubsetMask& p, Index sigma);

// Least k <= cap with tau in (sigma^Sym(n))^k; empty if not reached.
// Throws identity_sigma.
std::optional<std::size_t> class_word_distance(int n, const Permutation& sigma, const Permutation& tau,
                                               std::size_t cap = 8);

}  // namespace glab
