#include <set>

#include "doctest.h"
#include "glab/chevalley.hpp"
#include "glab/error.hpp"
#include "glab/modular.hpp"

using namespace glab;

namespace {

Matrix mat(int n, std::int64_t p, std::vector<std::int32_t> e) { return Matrix(n, p, std::move(e)); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::io_error;
}

GroupPtr sl(int n, int p) { return build_group(*make_spec(SpecialLinearSpec{n, p})); }

}  // namespace

TEST_CASE("root generators in SL2(F5)") {
  TypeARoot a{0, 1};
  CHECK(x_root(2, 5, a, 3) == mat(2, 5, {1, 3, 0, 1}));
  CHECK(w_root(2, 5, a, 1) == mat(2, 5, {0, 1, -1, 0}));
  CHECK(t_root(2, 5, a, 2) == Matrix::diagonal(5, {2, 3}));
  CHECK(root_generator(2, 5, GeneratorKind::t, a, 2) == Matrix::diagonal(5, {2, 3}));
  CHECK(code_of([] { w_root(2, 5, {0, 1}, 0); }) == ErrorCode::zero_parameter);
  CHECK(code_of([] { t_root(2, 5, {0, 1}, 5); }) == ErrorCode::zero_parameter);
  CHECK(code_of([] { x_root(2, 5, {0, 2}, 1); }) == ErrorCode::invalid_root);
  CHECK(code_of([] { x_root(2, 5, {1, 1}, 1); }) == ErrorCode::invalid_root);
}

TEST_CASE("t_a(u) is diag with u at i and u^-1 at j") {
  const std::int64_t p = 7;
  for (int n = 2; n <= 4; ++n)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        for (std::int64_t u = 1; u < p; ++u) {
          std::vector<std::int64_t> d(static_cast<std::size_t>(n), 1);
          d[static_cast<std::size_t>(i)] = u;
          d[static_cast<std::size_t>(j)] = inv_mod(u, p);
          CHECK(t_root(n, p, {i, j}, u) == Matrix::diagonal(p, d));
        }
      }
}

TEST_CASE("unipotent factorization") {
  CHECK(unipotent_factor(Matrix::identity(3, 5)) ==
        UnipotentFactors{{{0, 1}, 0}, {{1, 2}, 0}, {{0, 2}, 0}});
  CHECK(unipotent_factor(mat(2, 5, {1, 3, 0, 1})) == UnipotentFactors{{{0, 1}, 3}});
  // a = 1, b = 0, c = 1
  auto f = unipotent_factor(mat(3, 5, {1, 1, 0, 0, 1, 1, 0, 0, 1}));
  CHECK(f == UnipotentFactors{{{0, 1}, 1}, {{1, 2}, 1}, {{0, 2}, 4}});
  CHECK(code_of([] { unipotent_factor(Matrix::diagonal(5, {2, 3})); }) == ErrorCode::not_unitriangular);
}

TEST_CASE("regularity") {
  CHECK(is_regular(Matrix::diagonal(5, {2, 3})));
  CHECK_FALSE(is_regular(Matrix::identity(2, 5)));
  CHECK_FALSE(is_regular(Matrix::diagonal(5, {2, 2, 4})));
  CHECK(code_of([] { is_regular(mat(2, 5, {1, 1, 0, 1})); }) == ErrorCode::not_diagonal);
  for (int n = 2; n <= 3; ++n)
    for (std::int64_t p : {3, 5, 7})
      for (const auto& t : diagonal_elements(n, p)) CHECK(is_regular(t) == is_regular_by_centralizer(t));
  // SL3(F3) has no regular diagonal element: F3^x has only two values
  for (const auto& t : diagonal_elements(3, 3)) CHECK_FALSE(is_regular(t));
}

TEST_CASE("regular sequences") {
  auto seq = regular_sequence(RootSystem('A', 2), 11, 4);
  CHECK(seq.s == 2);
  CHECK(seq.lambda == std::vector<std::int64_t>{1, 1});
  REQUIRE(seq.elements.size() == 4);
  for (int i = 0; i < 4; ++i)
    CHECK(seq.elements[static_cast<std::size_t>(i)] ==
          Matrix::diagonal(11, {pow_mod(2, i, 11), 1, pow_mod(2, -i, 11)}));
  auto a1 = regular_sequence(RootSystem('A', 1), 5, 2);
  CHECK(a1.s == 2);
  Matrix q = a1.elements[0].inverse() * a1.elements[1];
  CHECK(is_regular(q));
  CHECK(root_value(q, {0, 1}) == 4);
  CHECK(code_of([] { regular_sequence(RootSystem('A', 2), 3, 4); }) == ErrorCode::field_too_small);
}

TEST_CASE("commutator transport") {
  Matrix t = Matrix::diagonal(5, {2, 3});
  CHECK(commutator_transport_solve(t, x_root(2, 5, {0, 1}, 1)) == x_root(2, 5, {0, 1}, 3));
  CHECK(commutator_transport_solve(t, Matrix::identity(2, 5)) == Matrix::identity(2, 5));
  CHECK(code_of([] { commutator_transport_solve(Matrix::identity(2, 5), Matrix::identity(2, 5)); }) ==
        ErrorCode::not_regular);
  for (auto [n, p] : std::vector<std::pair<int, std::int64_t>>{{2, 5}, {2, 7}, {3, 5}, {3, 7}})
    for (const auto& tt : diagonal_elements(n, p)) {
      if (!is_regular(tt)) continue;
      std::set<std::vector<std::int32_t>> image;
      auto us = unitriangular_elements(n, p);
      for (const auto& u : us) {
        Matrix c = commutator(tt, u);
        REQUIRE(c.is_upper_unitriangular());
        image.insert({c.entries().begin(), c.entries().end()});
        CHECK(commutator(tt, commutator_transport_solve(tt, u)) == u);
        Matrix lower = u.transpose();
        CHECK(commutator(tt, commutator_transport_solve_lower(tt, lower)) == lower);
      }
      CHECK(image.size() == us.size());
    }
}

TEST_CASE("LDU factorization") {
  auto f = ldu_decompose(mat(2, 5, {2, 1, 1, 4}));
  REQUIRE(f);
  CHECK(f->lower * f->diagonal * f->upper == mat(2, 5, {2, 1, 1, 4}));
  CHECK_FALSE(ldu_decompose(mat(2, 5, {0, 1, -1, 0})));
}

TEST_CASE("Gauss decomposition with prescribed torus part") {
  auto g = sl(2, 5);
  Matrix t = Matrix::diagonal(5, {2, 3});
  auto tr = gauss_prescribed(g, mat(2, 5, {1, 1, 0, 1}), t);
  CHECK(tr.x.inverse() * mat(2, 5, {1, 1, 0, 1}) * tr.x == tr.v * t * tr.u);
  CHECK(tr.v.is_lower_unitriangular());
  CHECK(tr.u.is_upper_unitriangular());
  auto same = gauss_prescribed(g, t, t);
  CHECK(same.x == Matrix::identity(2, 5));
  CHECK(same.v == Matrix::identity(2, 5));
  CHECK(same.u == Matrix::identity(2, 5));
  CHECK(code_of([&] { gauss_prescribed(g, Matrix::diagonal(5, {4, 4}), t); }) == ErrorCode::noncentral_required);
}

TEST_CASE("class cube") {
  auto g = sl(2, 5);
  auto classes = conjugacy_classes(g);
  auto r = class_cube(classes, Matrix::diagonal(5, {2, 3}));
  CHECK(r.covers());
  REQUIRE(r.min_power);
  CHECK(*r.min_power <= 3);
  auto g7 = sl(2, 7);
  auto r7 = class_cube(conjugacy_classes(g7), Matrix::diagonal(7, {3, 5}));
  CHECK(r7.covers());
  CHECK(*r7.min_power <= 3);
  CHECK(code_of([&] { class_cube(classes, Matrix::identity(2, 5)); }) == ErrorCode::not_regular);
}

TEST_CASE("relation suite") {
  for (auto [n, p] : std::vector<std::pair<int, std::int64_t>>{{2, 5}, {3, 3}, {3, 5}, {3, 7}}) {
    auto rep = verify_relations(n, p);
    CAPTURE(n);
    CAPTURE(p);
    CHECK(rep.all_pass());
    std::size_t expected = 1;
    for (int k = 0; k < n * (n - 1) / 2; ++k) expected *= static_cast<std::size_t>(p);
    CHECK(rep.factorization_count == expected);
  }
  // pinned structure constants in SL3: [x_12(s), x_23(u)] = x_13(su)
  auto rep = verify_relations(3, 5, false);
  CHECK(rep.signs.at({TypeARoot{0, 1}, TypeARoot{1, 2}}) == 1);
  CHECK(rep.signs.at({TypeARoot{1, 2}, TypeARoot{0, 1}}) == -1);
  CHECK(rep.signs.at({TypeARoot{1, 0}, TypeARoot{0, 2}}) == 1);
}
