#include "glab/matrix.hpp"

#include "glab/error.hpp"
#include "glab/modular.hpp"

namespace glab {

namespace matops {

void multiply(int n, std::int64_t p, const std::int32_t* a, const std::int32_t* b, std::int32_t* out) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < n; ++k) s += static_cast<std::int64_t>(a[i * n + k]) * b[k * n + j] % p;
      out[i * n + j] = static_cast<std::int32_t>(s % p);
    }
}

bool invert(int n, std::int64_t p, const std::int32_t* a, std::int32_t* out) {
  std::vector<std::int64_t> m(static_cast<std::size_t>(n * 2 * n), 0);
  auto at = [&](int i, int j) -> std::int64_t& { return m[static_cast<std::size_t>(i * 2 * n + j)]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = a[i * n + j];
    at(i, n + i) = 1;
  }
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    if (pivot != c)
      for (int j = 0; j < 2 * n; ++j) std::swap(at(c, j), at(pivot, j));
    std::int64_t f = inv_mod(at(c, c), p);
    for (int j = 0; j < 2 * n; ++j) at(c, j) = at(c, j) * f % p;
    for (int r = 0; r < n; ++r) {
      if (r == c || at(r, c) == 0) continue;
      std::int64_t g = at(r, c);
      for (int j = 0; j < 2 * n; ++j) at(r, j) = mod(at(r, j) - g * at(c, j), p);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i * n + j] = static_cast<std::int32_t>(at(i, n + j));
  return true;
}

std::int64_t determinant(int n, std::int64_t p, const std::int32_t* a) {
  std::vector<std::int64_t> m(a, a + n * n);
  std::int64_t det = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (m[static_cast<std::size_t>(r * n + c)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(m[static_cast<std::size_t>(c * n + j)], m[static_cast<std::size_t>(pivot * n + j)]);
      det = mod(-det, p);
    }
    std::int64_t d = m[static_cast<std::size_t>(c * n + c)];
    det = det * d % p;
    std::int64_t f = inv_mod(d, p);
    for (int r = c + 1; r < n; ++r) {
      std::int64_t g = m[static_cast<std::size_t>(r * n + c)] * f % p;
      if (g == 0) continue;
      for (int j = c; j < n; ++j)
        m[static_cast<std::size_t>(r * n + j)] = mod(m[static_cast<std::size_t>(r * n + j)] - g * m[static_cast<std::size_t>(c * n + j)], p);
    }
  }
  return det;
}

void apply(int n, std::int64_t p, const std::int32_t* m, const std::int32_t* v, std::int32_t* out) {
  for (int i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (int k = 0; k < n; ++k) s += static_cast<std::int64_t>(m[i * n + k]) * v[k] % p;
    out[i] = static_cast<std::int32_t>(s % p);
  }
}

}  // namespace matops

Matrix::Matrix(int n, std::int64_t p) : n_(n), p_(p), a_(static_cast<std::size_t>(n * n), 0) {}

Matrix::Matrix(int n, std::int64_t p, std::vector<std::int32_t> entries) : n_(n), p_(p), a_(std::move(entries)) {
  if (a_.size() != static_cast<std::size_t>(n * n))
    throw Error(ErrorCode::invalid_parameters, "matrix needs " + std::to_string(n * n) + " entries");
  for (auto& x : a_) x = static_cast<std::int32_t>(mod(x, p));
}

Matrix Matrix::identity(int n, std::int64_t p) {
  Matrix m(n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::diagonal(std::int64_t p, const std::vector<std::int64_t>& entries) {
  int n = static_cast<int>(entries.size());
  Matrix m(n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, entries[static_cast<std::size_t>(i)]);
  return m;
}

void Matrix::set(int i, int j, std::int64_t v) { a_[static_cast<std::size_t>(i * n_ + j)] = static_cast<std::int32_t>(mod(v, p_)); }

Matrix Matrix::operator*(const Matrix& other) const {
  Matrix out(n_, p_);
  matops::multiply(n_, p_, a_.data(), other.a_.data(), out.a_.data());
  return out;
}

Matrix Matrix::inverse() const {
  Matrix out(n_, p_);
  if (!matops::invert(n_, p_, a_.data(), out.a_.data()))
    throw Error(ErrorCode::invalid_parameters, "singular matrix " + to_string());
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(n_, p_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.a_[static_cast<std::size_t>(j * n_ + i)] = (*this)(i, j);
  return out;
}

std::int64_t Matrix::det() const { return matops::determinant(n_, p_, a_.data()); }

bool Matrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

bool Matrix::is_upper_unitriangular() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j <= i; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool Matrix::is_lower_unitriangular() const { return transpose().is_upper_unitriangular(); }

std::string Matrix::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a_[i]);
  }
  return s;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a.inverse() * b.inverse() * a * b; }

}  // namespace glab
