#include <chrono>
#include <random>

#include "doctest.h"
#include "glab/error.hpp"
#include "glab/thickset.hpp"

using namespace glab;

namespace {

GroupPtr cyc(int k) { return build_group(*make_spec(CyclicSpec{k})); }
GroupPtr sym(int n) { return build_group(*make_spec(SymmetricSpec{n})); }
GroupPtr alt(int n) { return build_group(*make_spec(AlternatingSpec{n})); }

SubsetMask ints(const GroupPtr& g, std::initializer_list<int> xs) {
  SubsetMask m(g);
  for (int x : xs) m.set(g->parse(std::to_string(x)));
  return m;
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::io_error;
}

SubsetMask random_symmetric(const GroupPtr& g, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution coin(density);
  SubsetMask m = SubsetMask::of(g, {g->identity()});
  for (std::size_t i = 1; i < g->order(); ++i)
    if (coin(rng)) {
      m.set(static_cast<Index>(i));
      m.set(g->inv(static_cast<Index>(i)));
    }
  return m;
}

// Brute force over all sequences of distinct elements, for tiny groups.
std::size_t brute_thickness(const SubsetMask& p) {
  const GroupPtr& g = p.group();
  std::size_t best = 0;
  std::vector<Index> seq;
  auto rec = [&](auto&& self, Index from) -> void {
    best = std::max(best, seq.size());
    for (Index x = from; x < static_cast<Index>(g->order()); ++x) {
      seq.push_back(x);
      if (is_p_free(p, seq)) self(self, x + 1);
      seq.pop_back();
    }
  };
  rec(rec, 0);
  return best + 1;
}

}  // namespace

TEST_CASE("thickness examples") {
  auto c5 = cyc(5);
  auto r = thickness(ints(c5, {0, 1, 4}));
  CHECK(r.status == ThicknessStatus::exact);
  CHECK(r.value == 3u);
  CHECK(r.witness == std::vector<Index>{c5->parse("0"), c5->parse("2")});

  auto c12 = cyc(12);
  auto r12 = thickness(ints(c12, {11, 0, 1}));
  CHECK(r12.value == 7u);
  std::vector<Index> w;
  for (int x : {0, 2, 4, 6, 8, 10}) w.push_back(c12->parse(std::to_string(x)));
  CHECK(r12.witness == w);

  for (auto g : {cyc(7), sym(4), alt(5)}) CHECK(thickness(SubsetMask::of(g, {g->identity()})).value == g->order() + 1);
  CHECK(thickness(SubsetMask::full(sym(3))).value == 2u);
  CHECK_FALSE(thickness(ints(c5, {1, 4})).value.has_value());
  CHECK(code_of([&] { thickness(ints(c5, {0, 1})); }) == ErrorCode::not_symmetric);
}

TEST_CASE("thickness agrees with brute force and is monotone") {
  std::mt19937_64 rng(11);
  for (auto g : {cyc(8), sym(3), build_group(*make_spec(AbelianSpec{{2, 4}}))}) {
    for (int t = 0; t < 30; ++t) {
      auto p = random_symmetric(g, rng, 0.3);
      auto r = thickness(p);
      CHECK(r.value == brute_thickness(p));
      CHECK(is_p_free(p, r.witness));
      CHECK(r.witness.size() + 1 == *r.value);
      auto q = p | random_symmetric(g, rng, 0.2);
      CHECK(*thickness(q).value <= *r.value);
    }
  }
}

TEST_CASE("thickness lower bound above the exact limit") {
  auto g = sym(4);
  auto r = thickness(SubsetMask::of(g, {0}), 10);
  CHECK(r.status == ThicknessStatus::lower_bound_only);
  CHECK(is_p_free(SubsetMask::of(g, {0}), r.witness));
}

TEST_CASE("power covers") {
  auto c5 = cyc(5);
  CHECK(power_cover(SubsetMask::full(c5)).power == 1u);
  CHECK(power_cover(ints(c5, {0, 1, 4})).power == 2u);
  auto c12 = cyc(12);
  CHECK(power_cover(ints(c12, {11, 0, 1})).power == 6u);
  auto c4 = cyc(4);
  auto pc = power_cover(ints(c4, {0, 2}));
  CHECK_FALSE(pc.power);
  CHECK(pc.generated == ints(c4, {0, 2}));
  CHECK_FALSE(power_cover(ints(c12, {11, 0, 1}), 5).power);
}

TEST_CASE("genericity") {
  auto c6 = cyc(6);
  CHECK(genericity(SubsetMask::full(c6))->m == 1u);
  auto gen = genericity(ints(c6, {0, 1, 5}));
  REQUIRE(gen);
  CHECK(gen->m == 2u);
  CHECK(gen->translators == std::vector<Index>{c6->parse("0"), c6->parse("3")});
  CHECK(genericity(ints(c6, {0}))->m == 6u);
  auto g = sym(4);
  auto p = SubsetMask::of(g, {0, 1, 2});
  auto gg = genericity(p);
  REQUIRE(gg);
  SubsetMask cov(g);
  for (Index t : gg->translators)
    p.for_each([&](Index x) { cov.set(g->mul(x, t)); });
  CHECK(cov.full());
  CHECK_FALSE(genericity(ints(c6, {0}), 3));
}

TEST_CASE("generic subgroup certificate") {
  auto c6 = cyc(6);
  auto c = generic_subgroup_certificate(ints(c6, {0, 1, 5}));
  CHECK(c.m == 2u);
  CHECK(c.exponent == 4u);
  CHECK(c.subgroup.full());
  CHECK(c.index == 1u);
  CHECK(c.holds());
  auto c4 = cyc(4);
  auto d = generic_subgroup_certificate(ints(c4, {0, 2}));
  CHECK(d.m == 2u);
  CHECK(d.subgroup == ints(c4, {0, 2}));
  CHECK(d.index == 2u);
  CHECK(d.holds());
  CHECK(code_of([&] { generic_subgroup_certificate(ints(c6, {1, 5})); }) == ErrorCode::precondition_violation);
  CHECK(code_of([&] { generic_subgroup_certificate(ints(c6, {0, 1})); }) == ErrorCode::precondition_violation);
}

TEST_CASE("Ramsey table and searches") {
  CHECK(ramsey_bound(2, 7) == 7u);
  CHECK(ramsey_bound(3, 3) == 6u);
  CHECK(ramsey_bound(4, 3) == 9u);
  CHECK(ramsey_bound(3, 5) == 14u);
  CHECK(ramsey_bound(4, 4) == 18u);
  CHECK(code_of([] { ramsey_bound(4, 5); }) == ErrorCode::out_of_table);
  CHECK(ramsey_coloring_exists(5, 3, 3));
  CHECK_FALSE(ramsey_coloring_exists(6, 3, 3));
  CHECK(ramsey_coloring_exists(6, 2, 7));
  CHECK_FALSE(ramsey_coloring_exists(7, 2, 7));
}

TEST_CASE("Ramsey R(3,4) by coloring search") {
  auto t0 = std::chrono::steady_clock::now();
  CHECK(ramsey_coloring_exists(8, 3, 4));
  CHECK_FALSE(ramsey_coloring_exists(9, 3, 4));
  MESSAGE("R(3,4) search took " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s");
}

TEST_CASE("G_N sets") {
  auto c6 = cyc(6);
  CHECK(gn_set(c6, 0).empty());
  CHECK(gn_set(c6, 1).empty());
  CHECK(gn_set(c6, 3) == ints(c6, {1, 5}));
  auto a5 = alt(5);
  auto classes = conjugacy_classes(a5);
  SubsetMask prev(a5);
  for (std::size_t n = 0; n <= 6; ++n) {
    auto s = gn_set(classes, n);
    CHECK(classes.is_normal(s));
    CHECK(s.is_symmetric());
    CHECK(prev.is_subset_of(s));
    CHECK_FALSE(s.test(a5->identity()));
    prev = s;
  }
}

TEST_CASE("G_N image law under a quotient") {
  auto s4 = sym(4);
  auto q = build_quotient(s4, derived_subgroup(s4));
  for (std::size_t n = 0; n <= 4; ++n)
    CHECK(image_mask(q.projection, gn_set(s4, n), q.quotient).is_subset_of(gn_set(q.quotient, n)));
}

TEST_CASE("bounded simplicity degree") {
  auto s3 = sym(3);
  auto d = bounded_simplicity_degree(s3);
  CHECK_FALSE(d.degree);
  REQUIRE(d.witness);
  CHECK(s3->element_order(*d.witness) == 3u);
  CHECK(d.witness_closure.count() == 3u);
  auto a = bounded_simplicity_degree(alt(5));
  REQUIRE(a.degree);
  CHECK(*a.degree <= 6u);
  CHECK(code_of([] { bounded_simplicity_degree(cyc(6)); }) == ErrorCode::degenerate_abelian);
}

TEST_CASE("covering numbers") {
  auto a5 = alt(5);
  CHECK(covering_number(a5).value == 3u);
  CHECK(code_of([] { covering_number(cyc(5)); }) == ErrorCode::not_simple_nonabelian);
  CHECK(code_of([] { covering_number(sym(5)); }) == ErrorCode::not_simple_nonabelian);
  auto sl27 = build_group(*make_spec(SpecialLinearSpec{2, 7}));
  auto psl = build_quotient(sl27, center(sl27)).quotient;
  CHECK(psl->order() == 168u);
  CHECK(is_simple_nonabelian(psl));
  auto cn = covering_number(psl);
  REQUIRE(cn.value);
  CHECK(*cn.value == 3u);
}

TEST_CASE("spread length") {
  auto c5 = cyc(5);
  CHECK(spread_length(SubsetMask::full(c5) - ints(c5, {0})).value == 5u);
  CHECK(spread_length(SubsetMask(c5)).value == 1u);
  CHECK(spread_length(ints(c5, {2, 3})).value == 2u);
  CHECK(code_of([&] { spread_length(ints(c5, {2})); }) == ErrorCode::not_symmetric);
}

TEST_CASE("spread of G_N at the simplicity degree is the index of the centre") {
  for (auto g : {alt(5), build_group(*make_spec(SpecialLinearSpec{2, 5}))}) {
    auto d = bounded_simplicity_degree(g);
    REQUIRE(d.degree);
    auto s = spread_length(gn_set(g, *d.degree));
    CHECK(s.value == g->order() / center(g).count());
  }
}

TEST_CASE("normal core probe") {
  auto a5 = alt(5);
  auto classes = conjugacy_classes(a5);
  auto p = classes.members(0) | classes.members(1);
  auto probe = normal_core_probe(p);
  CHECK(classes.is_normal(probe.core));
  CHECK(probe.core_thickness.value.has_value());
}

TEST_CASE("clique budget degrades to a lower bound") {
  auto g = alt(5);
  auto classes = conjugacy_classes(g);
  auto p = classes.members(0) | classes.members(1);
  auto full = thickness(p);
  auto cut = thickness(p, kExactCliqueLimit, 1);
  CHECK(full.status == ThicknessStatus::exact);
  CHECK(cut.status == ThicknessStatus::lower_bound_only);
  CHECK(*cut.value <= *full.value);
  CHECK(is_p_free(p, cut.witness));
}
