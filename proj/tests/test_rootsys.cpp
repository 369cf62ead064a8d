#include "doctest.h"
#include "glab/error.hpp"
#include "glab/rootsys.hpp"

using namespace glab;

TEST_CASE("root counts") {
  CHECK(RootSystem('A', 1).roots().size() == 2);
  CHECK(RootSystem('A', 2).roots().size() == 6);
  CHECK(RootSystem('A', 2).positive_count() == 3);
  CHECK(RootSystem('B', 2).roots().size() == 8);
  CHECK(RootSystem('B', 2).positive_count() == 4);
  for (int n = 1; n <= 8; ++n) CHECK(RootSystem('A', n).positive_count() == static_cast<std::size_t>(n * (n + 1) / 2));
  for (int n = 2; n <= 8; ++n) {
    CHECK(RootSystem('B', n).positive_count() == static_cast<std::size_t>(n * n));
    CHECK(RootSystem('C', n).positive_count() == static_cast<std::size_t>(n * n));
  }
  for (int n = 3; n <= 8; ++n) CHECK(RootSystem('D', n).positive_count() == static_cast<std::size_t>(n * (n - 1)));
}

TEST_CASE("unsupported ranks") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 0}, {'B', 1}, {'C', 1}, {'D', 2}, {'E', 6}}) {
    try {
      RootSystem r(f, n);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::unsupported_family_rank);
    }
  }
}

TEST_CASE("pairings and heights") {
  RootSystem a2('A', 2), b2('B', 2);
  CHECK(a2.pairing(a2.simple(0), a2.simple(0)) == 2);
  CHECK(a2.pairing(a2.simple(0), a2.simple(1)) == -1);
  CHECK(b2.pairing(b2.simple(0), b2.simple(1)) == -2);
  CHECK(b2.pairing(b2.simple(1), b2.simple(0)) == -1);
  CHECK(a2.height(a2.simple(1)) == 1);
  CHECK(a2.height({1, 1}) == 2);
  CHECK(b2.height({1, 2}) == 3);
  CHECK(b2.positive_roots().back() == RootVec{1, 2});
  CHECK_THROWS_AS(a2.height({2, 1}), Error);
  CHECK_THROWS_AS(a2.pairing({1, 0}, {3, 0}), Error);
}

TEST_CASE("structural invariants for every supported system") {
  std::vector<RootSystem> all;
  for (int n = 1; n <= 8; ++n) all.emplace_back('A', n);
  for (int n = 2; n <= 8; ++n) all.emplace_back('B', n), all.emplace_back('C', n);
  for (int n = 3; n <= 8; ++n) all.emplace_back('D', n);
  for (const auto& r : all) {
    CAPTURE(r.name());
    const auto& c = r.cartan();
    for (int i = 0; i < r.rank(); ++i)
      for (int j = 0; j < r.rank(); ++j) {
        if (i == j) CHECK(c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 2);
        else CHECK((c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] <= 0 &&
                    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] >= -3));
      }
    CHECK(integer_determinant(c) != 0);
    for (const auto& b : r.roots()) {
      RootVec neg = b;
      for (auto& x : neg) x = -x;
      CHECK(r.is_root(neg));
      CHECK(r.height(neg) == -r.height(b));
      bool nonneg = true, nonpos = true;
      for (auto x : b) nonneg = nonneg && x >= 0, nonpos = nonpos && x <= 0;
      CHECK((nonneg || nonpos));
      for (const auto& g : r.roots()) {
        std::int64_t lin = 0;
        for (int k = 0; k < r.rank(); ++k) lin += b[static_cast<std::size_t>(k)] * r.pairing(r.simple(k), g);
        CHECK(r.pairing(b, g) == lin);
        CHECK(r.pairing(neg, g) == -r.pairing(b, g));
      }
    }
    auto lambda = lambda_weights(r);
    for (const auto& b : r.roots()) CHECK(weighted_pairing(r, lambda, b) != 0);
    for (int k = 0; k < r.rank(); ++k) CHECK(weighted_pairing(r, lambda, r.simple(k)) > 0);
    auto adj = adjugate_weights(r);
    for (int k = 0; k < r.rank(); ++k) CHECK(weighted_pairing(r, adj, r.simple(k)) > 0);
    for (std::size_t k = 0; k < lambda.size(); ++k) CHECK(lambda[k] <= adj[k]);
  }
}

TEST_CASE("lambda weights") {
  CHECK(lambda_weights(RootSystem('A', 1)) == std::vector<std::int64_t>{1});
  RootSystem a2('A', 2);
  CHECK(lambda_weights(a2) == std::vector<std::int64_t>{1, 1});
  CHECK(weighted_pairing(a2, {1, 1}, a2.simple(0)) == 1);
  RootSystem b2('B', 2);
  CHECK(lambda_weights(b2) == std::vector<std::int64_t>{3, 2});
  CHECK(weighted_pairing(b2, {3, 2}, b2.simple(0)) == 2);
  CHECK(weighted_pairing(b2, {3, 2}, b2.simple(1)) == 1);
  CHECK(weighted_pairing(RootSystem('A', 1), {1}, {1}) == 2);
}

TEST_CASE("parsing names") {
  CHECK(parse_root_system("B3").name() == "B3");
  CHECK_THROWS_AS(parse_root_system("X3"), Error);
}
