#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace glab {

using RootVec = std::vector<std::int64_t>;

// Classical root system of type A, B, C or D. Roots are stored in simple-root
// coordinates; the Euclidean realization is kept for pairings.
class RootSystem {
 public:
  RootSystem(char family, int rank);  // throws unsupported_family_rank

  char family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, family_) + std::to_string(rank_); }

  // Positive roots sorted by height then coordinates, followed by their
  // negatives in the same order.
  const std::vector<RootVec>& roots() const { return roots_; }
  std::size_t positive_count() const { return roots_.size() / 2; }
  std::vector<RootVec> positive_roots() const;
  RootVec simple(int i) const;
  bool is_root(const RootVec& v) const;

  // C[b][a] = <alpha_b, alpha_a>
  const std::vector<std::vector<std::int64_t>>& cartan() const { return cartan_; }

  // <beta, alpha> = 2 (beta, alpha) / (alpha, alpha); throws not_a_root.
  std::int64_t pairing(const RootVec& beta, const RootVec& alpha) const;
  std::int64_t height(const RootVec& alpha) const;  // throws not_a_root

  // Euclidean coordinates of a root, scaled to integers.
  RootVec euclidean(const RootVec& coords) const;

 private:
  void require_root(const RootVec& v) const;
  std::int64_t dot(const RootVec& x, const RootVec& y) const;

  char family_;
  int rank_;
  std::vector<RootVec> simple_euclid_;
  std::vector<RootVec> roots_;
  std::vector<std::vector<std::int64_t>> cartan_;
};

// Parses names such as "A2" or "B3".
RootSystem parse_root_system(std::string_view text);

std::int64_t integer_determinant(std::vector<std::vector<std::int64_t>> m);
// Adjugate (classical adjoint) of an integer matrix.
std::vector<std::vector<std::int64_t>> integer_adjugate(const std::vector<std::vector<std::int64_t>>& m);

// Least positive integer weights with sum_a lambda_a <beta, a> >= 1 for every
// simple beta.
std::vector<std::int64_t> lambda_weights(const RootSystem& r);
// The weights adj(C) * 1 / gcd, which solve C lambda = d * 1 with d = |det C|
// up to the gcd.
std::vector<std::int64_t> adjugate_weights(const RootSystem& r);
// sum_a lambda_a <beta, a> for an arbitrary root beta.
std::int64_t weighted_pairing(const RootSystem& r, const std::vector<std::int64_t>& lambda, const RootVec& beta);

}  // namespace glab
