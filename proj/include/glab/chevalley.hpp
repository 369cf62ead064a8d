#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glab/group.hpp"
#include "glab/groupcore.hpp"
#include "glab/matrix.hpp"
#include "glab/rootsys.hpp"

namespace glab {

// Root of A_{n-1} written as an ordered pair (i,j), i != j, 0-based; it
// corresponds to the matrix unit E_ij and is positive iff i < j.
struct TypeARoot {
  int i = 0;
  int j = 1;
  bool positive() const { return i < j; }
  int height() const { return j - i; }
  TypeARoot negative() const { return {j, i}; }
  bool operator==(const TypeARoot&) const = default;
  auto operator<=>(const TypeARoot&) const = default;
};
std::string to_string(const TypeARoot& r);  // 1-based, e.g. "(1,2)"

// Coordinates in the simple-root basis of A_{n-1}, and back.
RootVec root_coordinates(int n, const TypeARoot& r);
TypeARoot root_from_coordinates(int n, const RootVec& v);  // throws not_a_root
void require_root(int n, const TypeARoot& r);              // throws invalid_root

enum class GeneratorKind { x, w, t };

// x_a(s) = I + s E_ij, w_a(u) = x_a(u) x_-a(-1/u) x_a(u), t_a(u) = w_a(u) w_a(1)^-1.
Matrix root_generator(int n, std::int64_t p, GeneratorKind kind, const TypeARoot& r, std::int64_t s);
Matrix x_root(int n, std::int64_t p, const TypeARoot& r, std::int64_t s);
Matrix w_root(int n, std::int64_t p, const TypeARoot& r, std::int64_t u);
Matrix t_root(int n, std::int64_t p, const TypeARoot& r, std::int64_t u);

// a(t) = t_i / t_j for diagonal t.
std::int64_t root_value(const Matrix& t, const TypeARoot& r);

// Positive roots by height, then by first index.
std::vector<TypeARoot> positive_root_order(int n);

using UnipotentFactors = std::vector<std::pair<TypeARoot, std::int64_t>>;
// Coefficients s_a with u = prod x_a(s_a) in positive_root_order; throws not_unitriangular.
UnipotentFactors unipotent_factor(const Matrix& u);
Matrix unipotent_product(int n, std::int64_t p, const UnipotentFactors& factors);

bool is_regular(const Matrix& t);  // throws not_diagonal
// Regularity read off the centralizer: no nontrivial upper unitriangular
// matrix commutes with t. Enumerates U, so only for small n and p.
bool is_regular_by_centralizer(const Matrix& t);

struct RegularSequence {
  std::int64_t s = 0;
  std::vector<std::int64_t> lambda;
  std::vector<Matrix> elements;  // a(s^i), i < m
};
// a(s) = prod over simple roots of t_a(s^lambda_a); throws field_too_small.
Matrix lambda_torus_element(int n, std::int64_t p, const std::vector<std::int64_t>& lambda, std::int64_t s);
RegularSequence regular_sequence(const RootSystem& r, std::int64_t p, int m);

// Solves [t, u'] = target for u' in U (phi) and for v in U^- (psi).
// Throws not_regular and not_unitriangular.
Matrix commutator_transport_solve(const Matrix& t, const Matrix& target);
Matrix commutator_transport_solve_lower(const Matrix& t, const Matrix& target);

struct LDU {
  Matrix lower;  // unitriangular
  Matrix diagonal;
  Matrix upper;  // unitriangular
};
// Factorization without pivoting; empty when a leading principal minor vanishes.
std::optional<LDU> ldu_decompose(const Matrix& m);

struct GaussTriple {
  Matrix x;
  Matrix v;  // lower unitriangular
  Matrix u;  // upper unitriangular
  Index x_index = 0;
  std::size_t tried = 0;
};
// Search x in element-index order of `group` (an SL(n,p)) with g^x = v t u.
// Throws noncentral_required and search_exhausted.
GaussTriple gauss_prescribed(const GroupPtr& group, const Matrix& g, const Matrix& t);

struct ClassCubeResult {
  std::size_t class_size = 0;
  bool square_covers_noncentral = false;  // C^2 contains G \ Z
  bool cube_is_group = false;             // C^3 = G
  std::optional<int> min_power;
  bool covers() const { return square_covers_noncentral && cube_is_group; }
};
ClassCubeResult class_cube(const ClassPartition& classes, const Matrix& t, int cap = 8);

// All diagonal matrices of determinant 1.
std::vector<Matrix> diagonal_elements(int n, std::int64_t p);
// All upper unitriangular matrices.
std::vector<Matrix> unitriangular_elements(int n, std::int64_t p);
// Upper triangular elements of an SL(n,p) group.
SubsetMask borel_subgroup(const GroupPtr& group);

struct RelationReport {
  std::size_t torus_checks = 0, torus_failures = 0;        // t x_a(s) t^-1 = x_a(a(t) s)
  std::size_t pairing_checks = 0, pairing_failures = 0;    // t_a(u) x_b(s) t_a(u)^-1 = x_b(u^<b,a> s)
  std::size_t commutator_checks = 0, commutator_failures = 0;
  // Realized structure constant N with [x_a(s), x_b(u)] = x_{a+b}(N s u).
  std::map<std::pair<TypeARoot, TypeARoot>, int> signs;
  std::size_t factorization_count = 0;
  bool factorization_bijective = false;
  bool factorization_roundtrip = false;
  bool all_pass() const {
    return torus_failures == 0 && pairing_failures == 0 && commutator_failures == 0 && factorization_bijective &&
           factorization_roundtrip;
  }
};
RelationReport verify_relations(int n, std::int64_t p, bool with_factorization = true);

}  // namespace glab
