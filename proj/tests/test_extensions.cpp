#include <random>

#include "doctest.h"
#include "glab/chevalley.hpp"
#include "glab/error.hpp"
#include "glab/extensions.hpp"
#include "glab/groupcore.hpp"

using namespace glab;

namespace {

GroupPtr cyc(int k) { return build_group(*make_spec(CyclicSpec{k})); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::io_error;
}

// p = 2, H = Z/2, h(x,y) = 1 iff x = y = 1
Cocycle z4_cocycle() {
  auto h = zero_cocycle(2, cyc(2));
  Index one = h.base->parse("1");
  h.table[static_cast<std::size_t>(one) * 2 + static_cast<std::size_t>(one)] = 1;
  return h;
}

}  // namespace

TEST_CASE("cocycle validation") {
  CHECK(validate_cocycle(zero_cocycle(3, cyc(4))));
  CHECK(validate_cocycle(z4_cocycle()));

  // a single nonzero entry at (1,1) on Z/3: (x,y,z) = (1,1,2) gives 1 + 0 != 0 + 0
  auto bad = zero_cocycle(3, cyc(3));
  Index one = bad.base->parse("1");
  bad.table[static_cast<std::size_t>(one) * 3 + static_cast<std::size_t>(one)] = 1;
  CHECK_FALSE(validate_cocycle(bad));
  CHECK(code_of([&] { build_extension(bad); }) == ErrorCode::invalid_cocycle);

  auto shortt = zero_cocycle(2, cyc(2));
  shortt.table.pop_back();
  CHECK(code_of([&] { validate_cocycle(shortt); }) == ErrorCode::table_incomplete);
}

TEST_CASE("Z/2 by Z/2 with the nonzero cocycle is Z/4") {
  auto e = build_extension(z4_cocycle());
  CHECK(e.group->order() == 4);
  bool order4 = false;
  for (std::size_t i = 0; i < 4; ++i) order4 |= e.group->element_order(static_cast<Index>(i)) == 4;
  CHECK(order4);
  auto s = split_check(e);
  CHECK_FALSE(s.splits);
  CHECK(s.tuples_tried == 2);
  CHECK(check_formulas(e).holds());
  CHECK(check_projection(e).holds(2));

  auto b1 = image_bound_check(e, 1);
  CHECK(b1.contained);
  CHECK(b1.observed == std::vector<std::int32_t>{0, 1});
  auto b2 = image_bound_check(e, 2);
  CHECK(b2.contained);
  CHECK(b2.power_is_group);
}

TEST_CASE("zero cocycles split") {
  auto e = build_extension(zero_cocycle(3, cyc(3)));
  CHECK(e.group->order() == 9);
  CHECK(is_abelian(e.group));
  auto s = split_check(e);
  REQUIRE(s.splits);
  REQUIRE(s.complement);
  // first coordinate 0 on the whole complement
  s.complement->for_each([&](Index g) { CHECK(e.coordinate(g) == 0); });
  CHECK(s.complement->count() == 3);

  auto sym3 = build_group(*make_spec(SymmetricSpec{3}));
  auto e2 = build_extension(zero_cocycle(5, sym3));
  CHECK(e2.group->order() == 30);
  CHECK(split_check(e2).splits);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto b = image_bound_check(e2, n);
    CHECK(b.contained);
    CHECK(b.observed == std::vector<std::int32_t>{0});
  }
}

TEST_CASE("carry cocycle on Z/6 mod 3 does not split") {
  auto base = cyc(6);
  auto h = zero_cocycle(3, base);
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y)
      h.table[x * 6 + y] = base->form(static_cast<Index>(x))[0] + base->form(static_cast<Index>(y))[0] >= 6 ? 1 : 0;
  auto e = build_extension(h);
  CHECK(abelian_invariants(e.group) == std::vector<std::int64_t>{18});
  CHECK_FALSE(split_check(e).splits);
  CHECK(check_formulas(e).holds());
}

TEST_CASE("random cocycles keep the identity, inverse and image laws") {
  std::mt19937_64 rng(11);
  std::vector<GroupPtr> bases{cyc(4), cyc(6), cyc(10), build_group(*make_spec(SymmetricSpec{3})),
                              build_group(*make_spec(AbelianSpec{{2, 2}})),
                              build_group(*make_spec(SpecialLinearSpec{2, 3}))};
  std::size_t nonsplit = 0;
  for (int rep = 0; rep < 3; ++rep)
    for (std::int64_t p : {2, 3, 5})
      for (const auto& base : bases) {
        auto h = random_cocycle(p, base, rng);
        REQUIRE(validate_cocycle(h));
        auto e = build_extension(h);
        CHECK(e.group->order() == static_cast<std::size_t>(p) * base->order());
        CHECK(check_formulas(e).holds());
        CHECK(check_projection(e).holds(p));
        for (std::size_t n = 1; n <= 3; ++n) CHECK(image_bound_check(e, n).contained);
        if (!split_check(e).splits) ++nonsplit;
      }
  CHECK(nonsplit > 0);
}

TEST_CASE("coarse bound fails for a constant cocycle") {
  // h = 1 everywhere: the identity is (2,0) in Z/3 x_h Z/2, and P sits in {2} x H
  auto h = zero_cocycle(3, cyc(2));
  for (auto& v : h.table) v = 1;
  auto e = build_extension(h);
  auto b = image_bound_check(e, 1);
  CHECK(b.contained);
  CHECK(b.observed == std::vector<std::int32_t>{2});
  CHECK(b.outer_bound == std::vector<std::int32_t>{0});
  CHECK_FALSE(b.contained_outer);
}

TEST_CASE("commutator identity") {
  auto s6 = build_group(*make_spec(SymmetricSpec{6}));
  auto c = check_commutator_identity(s6, 10000, 3);
  CHECK(c.holds());
  CHECK(c.literal_failures > 0);
  auto sl27 = build_group(*make_spec(SpecialLinearSpec{2, 7}));
  CHECK(check_commutator_identity(sl27, 10000, 4).holds());
}

TEST_CASE("semidirect commutator formula") {
  auto g = build_group(*make_spec(SemidirectSpec{2, 5}));
  CHECK(g->order() == 3000);
  auto c = check_semidirect_commutator(g, 10000, 5);
  CHECK(c.checked == 10000);
  CHECK(c.failures == 0);
  CHECK(code_of([&] { check_semidirect_commutator(cyc(3), 1, 1); }) == ErrorCode::invalid_parameters);
}

TEST_CASE("Iwasawa certificate on SL(2,5)") {
  auto g = build_group(*make_spec(SpecialLinearSpec{2, 5}));
  auto classes = conjugacy_classes(g);
  Index w = g->parse("0,1,4,0");
  auto a = normal_closure_set(classes, SubsetMask::of(g, {w, g->inv(w), g->identity()}));
  auto b = borel_subgroup(g);
  CHECK(b.count() == 20);
  auto cert = iwasawa_certificate(a, b, 10000, 7);
  CHECK(cert.n == 1);
  CHECK(cert.m == 2);
  CHECK(cert.bound == 16);
  REQUIRE(cert.k_min);
  CHECK(*cert.k_min <= 16);
  CHECK(cert.holds());
  for (const auto& p : cert.premises) CHECK(p.holds);
  MESSAGE("k_min = " << *cert.k_min);

  auto trivial = iwasawa_certificate(SubsetMask::full(g), SubsetMask::of(g, {g->identity()}), 100, 1);
  CHECK(trivial.k_min == std::optional<std::size_t>(1));
  CHECK(trivial.m == 0);

  CHECK(code_of([&] { iwasawa_certificate(a, SubsetMask::full(g)); }) == ErrorCode::premise_violation);
  auto s4 = build_group(*make_spec(SymmetricSpec{4}));
  CHECK(code_of([&] { iwasawa_certificate(SubsetMask::full(s4), SubsetMask::of(s4, {0})); }) ==
        ErrorCode::premise_violation);
}
