#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace glab {

// Row-major n x n arithmetic over F_p on raw residue buffers.
namespace matops {
void multiply(int n, std::int64_t p, const std::int32_t* a, const std::int32_t* b, std::int32_t* out);
// Gauss-Jordan inverse; returns false if singular.
bool invert(int n, std::int64_t p, const std::int32_t* a, std::int32_t* out);
std::int64_t determinant(int n, std::int64_t p, const std::int32_t* a);
void apply(int n, std::int64_t p, const std::int32_t* m, const std::int32_t* v, std::int32_t* out);
}  // namespace matops

// Square matrix over a prime field. Not every instance has determinant 1;
// `is_special()` checks membership in SL_n.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int n, std::int64_t p);  // zero matrix
  Matrix(int n, std::int64_t p, std::vector<std::int32_t> entries);

  static Matrix identity(int n, std::int64_t p);
  static Matrix diagonal(std::int64_t p, const std::vector<std::int64_t>& entries);

  int n() const { return n_; }
  std::int64_t p() const { return p_; }
  std::int32_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  void set(int i, int j, std::int64_t v);
  std::span<const std::int32_t> entries() const { return a_; }

  Matrix operator*(const Matrix& other) const;
  Matrix inverse() const;  // throws invalid_parameters if singular
  Matrix transpose() const;
  std::int64_t det() const;
  bool is_special() const { return det() == 1 % p_; }
  bool is_diagonal() const;
  bool is_upper_unitriangular() const;
  bool is_lower_unitriangular() const;
  bool operator==(const Matrix& other) const = default;

  std::string to_string() const;  // comma-separated row-major residues

 private:
  int n_ = 0;
  std::int64_t p_ = 2;
  std::vector<std::int32_t> a_;
};

// [a,b] = a^-1 b^-1 a b
Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace glab
