#include <random>

#include "doctest.h"
#include "glab/error.hpp"
#include "glab/groupcore.hpp"

using namespace glab;

namespace {

GroupPtr cyc(int k) { return build_group(*make_spec(CyclicSpec{k})); }
GroupPtr sym(int n) { return build_group(*make_spec(SymmetricSpec{n})); }
GroupPtr alt(int n) { return build_group(*make_spec(AlternatingSpec{n})); }
GroupPtr sl(int n, int p) { return build_group(*make_spec(SpecialLinearSpec{n, p})); }

void check_axioms(const GroupPtr& g, int samples = 10000) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Index> d(0, static_cast<Index>(g->order() - 1));
  for (int i = 0; i < samples; ++i) {
    Index a = d(rng), b = d(rng), c = d(rng);
    REQUIRE(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
  }
  for (std::size_t i = 0; i < g->order(); ++i) {
    auto a = static_cast<Index>(i);
    REQUIRE(g->mul(a, g->identity()) == a);
    REQUIRE(g->mul(g->identity(), a) == a);
    REQUIRE(g->mul(a, g->inv(a)) == g->identity());
  }
}

}  // namespace

TEST_CASE("orders of standard groups") {
  CHECK(cyc(6)->order() == 6);
  CHECK(sym(4)->order() == 24);
  CHECK(alt(5)->order() == 60);
  CHECK(sl(2, 5)->order() == 120);
  CHECK(sl(3, 3)->order() == 5616);
  CHECK(build_group(*make_spec(SemidirectSpec{2, 5}))->order() == 3000);
  CHECK(build_group(*make_spec(AbelianSpec{{4, 2}}))->order() == 8);
}

TEST_CASE("group axioms on sampled triples") {
  for (auto g : {cyc(12), sym(4), alt(5), sl(2, 5), build_group(*make_spec(SemidirectSpec{2, 3}))}) check_axioms(g);
}

TEST_CASE("canonical forms round-trip and rebuilds are identical") {
  auto a = sl(2, 5), b = sl(2, 5);
  for (std::size_t i = 0; i < a->order(); ++i) {
    auto x = static_cast<Index>(i);
    CHECK(a->parse(a->format(x)) == x);
    CHECK(b->format(x) == a->format(x));
  }
}

TEST_CASE("invalid parameters and cap") {
  CHECK_THROWS_AS(build_group(*make_spec(SpecialLinearSpec{2, 4})), Error);
  try {
    build_group(*make_spec(SymmetricSpec{9}), 1000);
    FAIL("expected cap error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::order_cap_exceeded);
  }
}

TEST_CASE("conjugacy classes") {
  auto c6 = conjugacy_classes(cyc(6));
  CHECK(c6.count() == 6);
  auto s3 = conjugacy_classes(sym(3));
  REQUIRE(s3.count() == 3);
  std::vector<std::size_t> sizes = s3.sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
  CHECK(s3.sizes[0] == 1);
  auto g = sl(2, 5);
  auto cl = conjugacy_classes(g);
  CHECK(cl.count() == 9);
  std::size_t total = 0;
  for (auto s : cl.sizes) {
    total += s;
    CHECK(g->order() % s == 0);
  }
  CHECK(total == 120);
  CHECK(conjugacy_classes(alt(5)).count() == 5);
}

TEST_CASE("product sets") {
  auto c5 = cyc(5);
  CHECK(product_sets(SubsetMask::of(c5, {0, 1, 4}), SubsetMask::of(c5, {0, 1, 4})).full());
  auto c12 = cyc(12);
  auto arc = SubsetMask::of(c12, {c12->parse("11"), c12->parse("0"), c12->parse("1")});
  auto sq = product_sets(arc, arc);
  std::vector<Index> expect;
  for (auto t : {"10", "11", "0", "1", "2"}) expect.push_back(c12->parse(t));
  CHECK(sq == SubsetMask::of(c12, expect));
  auto id = SubsetMask::of(c12, {0});
  CHECK(product_sets(id, arc) == arc);
  CHECK_THROWS_AS(product_sets(arc, SubsetMask::of(c5, {0})), Error);
}

TEST_CASE("product sets are associative on random masks") {
  auto g = sym(4);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    SubsetMask m[3] = {SubsetMask(g), SubsetMask(g), SubsetMask(g)};
    for (auto& x : m)
      for (Index i = 0; i < 24; ++i)
        if (rng() % 4 == 0) x.set(i);
    CHECK(product_sets(product_sets(m[0], m[1]), m[2]) == product_sets(m[0], product_sets(m[1], m[2])));
  }
}

TEST_CASE("normal closure") {
  auto g = sym(3);
  auto t = SubsetMask::of(g, {g->parse("[2,1,3]")});
  auto cl = normal_closure_set(g, t);
  CHECK(cl.count() == 3);
  cl.for_each([&](Index x) { CHECK(g->element_order(x) == 2); });
  CHECK(normal_closure_set(g, SubsetMask::of(g, {0})).count() == 1);
  auto c = cyc(7);
  auto s = SubsetMask::of(c, {2, 3});
  CHECK(normal_closure_set(c, s) == s);
  auto classes = conjugacy_classes(g);
  CHECK(normal_closure_set(classes, t) == cl);
  // minimality: dropping any added element breaks closure
  (cl - t).for_each([&](Index x) {
    auto smaller = cl;
    smaller.reset(x);
    CHECK_FALSE(classes.is_normal(smaller));
  });
}

TEST_CASE("normal product agrees with the plain product") {
  auto g = sym(4);
  auto classes = conjugacy_classes(g);
  for (std::size_t i = 0; i < classes.count(); ++i)
    for (std::size_t j = 0; j < classes.count(); ++j) {
      auto a = classes.members(i), b = classes.members(j);
      CHECK(normal_product(classes, a, b) == product_sets(a, b));
    }
  CHECK_THROWS_AS(normal_product(classes, SubsetMask::of(g, {1}), classes.members(0)), Error);
}

TEST_CASE("structure reports") {
  auto r = structure_report(sl(2, 5));
  CHECK(r.center.count() == 2);
  CHECK(r.is_perfect);
  CHECK(r.abelianization.empty());

  auto c6 = cyc(6);
  auto rc = structure_report(c6);
  CHECK(rc.center.full());
  CHECK(rc.derived.count() == 1);
  CHECK(rc.abelianization == std::vector<std::int64_t>{6});

  auto s3 = sym(3);
  auto rs = structure_report(s3);
  CHECK(rs.derived.count() == 3);
  CHECK(rs.abelianization == std::vector<std::int64_t>{2});
  CHECK(is_normal_subgroup(rs.derived));

  CHECK(structure_report(sym(4)).abelianization == std::vector<std::int64_t>{2});
  CHECK(abelian_invariants(build_group(*make_spec(AbelianSpec{{4, 2}}))) == std::vector<std::int64_t>{2, 4});
  CHECK(abelian_invariants(build_group(*make_spec(AbelianSpec{{6, 4}}))) == std::vector<std::int64_t>{2, 12});
  CHECK(abelian_invariants(build_group(*make_spec(AbelianSpec{{3, 5}}))) == std::vector<std::int64_t>{15});
}

TEST_CASE("quotient by the derived subgroup is abelian") {
  for (auto g : {sym(4), build_group(*make_spec(SemidirectSpec{2, 3}))}) {
    auto d = derived_subgroup(g);
    auto q = build_quotient(g, d);
    CHECK(is_abelian(q.quotient));
    CHECK(q.quotient->order() * d.count() == g->order());
  }
  auto g = sym(4);
  CHECK(derived_length(SubsetMask::full(g)) == 3);
  CHECK_FALSE(derived_length(SubsetMask::full(alt(5))).has_value());
  CHECK_THROWS_AS(build_quotient(g, SubsetMask::of(g, {0, 1})), Error);
}

TEST_CASE("commutator width") {
  CHECK(commutator_width(cyc(6)) == 0);
  CHECK(commutator_width(alt(5)) == 1);
  CHECK(commutator_width(sl(2, 5)) == 1);
  auto s4 = sym(4);
  CHECK(commutator_set(conjugacy_classes(s4)) == derived_subgroup(s4));
}

TEST_CASE("surjection onto a prime cyclic group") {
  auto check_hom = [](const GroupPtr& g, const PrimeCyclicQuotient& q) {
    std::vector<char> seen(static_cast<std::size_t>(q.p), 0);
    for (std::size_t a = 0; a < g->order(); ++a) {
      seen[static_cast<std::size_t>(q.map[a])] = 1;
      for (std::size_t b = 0; b < g->order(); ++b)
        REQUIRE(q.map[static_cast<std::size_t>(g->mul(static_cast<Index>(a), static_cast<Index>(b)))] ==
                (q.map[a] + q.map[b]) % q.p);
    }
    for (char s : seen) CHECK(s);
  };
  auto c5 = cyc(5);
  auto q5 = surject_onto_prime_cyclic(c5);
  CHECK(q5.p == 5);
  check_hom(c5, q5);

  auto c6 = cyc(6);
  auto q6 = surject_onto_prime_cyclic(c6);
  CHECK(q6.p == 2);
  for (int x = 0; x < 6; ++x) CHECK(q6.map[static_cast<std::size_t>(c6->parse(std::to_string(x)))] == x % 2);
  check_hom(c6, q6);

  auto ab = build_group(*make_spec(AbelianSpec{{4, 2}}));
  auto qa = surject_onto_prime_cyclic(ab);
  CHECK(qa.p == 2);
  CHECK(qa.kernel.count() == 4);
  SubsetMask twice(ab);
  for (Index i = 0; i < 8; ++i) twice.set(ab->power(i, 2));
  CHECK(twice.is_subset_of(qa.kernel));
  check_hom(ab, qa);

  CHECK_THROWS_AS(surject_onto_prime_cyclic(sym(3)), Error);
  CHECK_THROWS_AS(surject_onto_prime_cyclic(cyc(1)), Error);
}
