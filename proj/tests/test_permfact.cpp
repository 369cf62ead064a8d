#include "doctest.h"
#include "glab/error.hpp"
#include "glab/permfact.hpp"
#include "glab/thickset.hpp"

using namespace glab;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::io_error;
}

// e, the double transpositions and the 3-cycles of Alt(5)
SubsetMask alt5_set(const GroupPtr& g, const ClassPartition& classes) {
  SubsetMask p(g);
  for (std::size_t c = 0; c < classes.count(); ++c) {
    Index r = classes.representatives[c];
    auto cyc = Permutation::from_form(g->form(r)).cycles();
    bool pick = cyc.empty() || (cyc.size() == 2 && cyc[0].size() == 2) || (cyc.size() == 1 && cyc[0].size() == 3);
    if (pick)
      for (Index x : classes.elements_of(c)) p.set(x);
  }
  return p;
}

}  // namespace

TEST_CASE("composition convention and parsing") {
  auto a = Permutation::parse("(1,2)", 3), b = Permutation::parse("(1,3)", 3);
  // right factor first: (1,2)(1,3) sends 1 -> 3 -> 3
  CHECK((a * b)(1) == 3);
  CHECK((a * b) == Permutation::parse("(1,3,2)", 3));
  CHECK(Permutation::parse("(1,2)(2,3)", 3) == a * Permutation::parse("(2,3)", 3));
  CHECK(Permutation::parse("e", 4) == Permutation::identity(4));
  CHECK(Permutation::parse("(1,2,3,4,5)", 5).to_string() == "(1,2,3,4,5)");
  CHECK(code_of([] { Permutation::parse("1,2", 3); }) == ErrorCode::syntax_error);
  CHECK(code_of([] { Permutation::parse("(1,2", 3); }) == ErrorCode::syntax_error);
  CHECK(code_of([] { Permutation::parse("(1,1)", 3); }) == ErrorCode::overlap_violation);
}

TEST_CASE("cycle quotient") {
  auto c = cycle_quotient(5, 1, {2, 3}, {4, 5});
  CHECK(c.holds());
  CHECK(c.lhs == Permutation::parse("(1,4,5,3,2)", 5));
  auto d = cycle_quotient(3, 1, {2}, {3});
  CHECK(d.lhs == Permutation::parse("(1,3,2)", 3));
  CHECK(d.holds());
  CHECK(cycle_quotient(3, 1, {}, {}).lhs == Permutation::identity(3));
  CHECK(code_of([] { cycle_quotient(5, 1, {2}, {3, 4}); }) == ErrorCode::length_mismatch);
  CHECK(code_of([] { cycle_quotient(5, 1, {2}, {2}); }) == ErrorCode::overlap_violation);
}

TEST_CASE("odd cycle merge") {
  auto c = odd_cycle_merge(4, 1, 2, {3}, {4});
  CHECK(c.holds());
  CHECK(c.lhs == Permutation::parse("(1,3)(2,4)", 4));
  auto d = odd_cycle_merge(8, 1, 2, {3, 4, 5}, {6, 7, 8});
  CHECK(d.holds());
  CHECK(d.lhs == Permutation::parse("(1,3,4,5)(2,6,7,8)", 8));
  CHECK(code_of([] { odd_cycle_merge(8, 1, 2, {3, 4}, {5}); }) == ErrorCode::even_length);
  CHECK(code_of([] { odd_cycle_merge(8, 1, 2, {3}, {3}); }) == ErrorCode::overlap_violation);
}

TEST_CASE("identity sweep in small degree") {
  auto sw = sweep_identities(8, 2);
  CHECK(sw.cycle_quotient_failures == 0);
  CHECK(sw.odd_merge_failures == 0);
  CHECK(sw.odd_results_even == sw.odd_results_checked);
  CHECK(sw.cycle_quotient_checks > 0);
  CHECK(sw.odd_merge_checks > 0);
}

TEST_CASE("express even permutations in Alt(5)") {
  auto g = build_group(*make_spec(AlternatingSpec{5}));
  auto classes = conjugacy_classes(g);
  auto p = alt5_set(g, classes);
  CHECK(p.count() == 1 + 15 + 20);
  CHECK(classes.is_normal(p));
  CHECK(p.is_symmetric());
  CHECK(thickness(p).value.has_value());
  CHECK(product_sets(p, p).full());
  for (std::size_t i = 0; i < g->order(); ++i) {
    auto s = static_cast<Index>(i);
    auto e = express_even(classes, p, s);
    CHECK(p.test(e.q1));
    CHECK(p.test(e.q2));
    CHECK(g->mul(e.q1, e.q2) == s);
    if (s == g->identity()) CHECK(e.path == ExpressPath::trivial);
  }
  auto five = g->index_of(Permutation::parse("(1,2,3,4,5)", 5).form());
  CHECK(express_even(classes, p, five).path == ExpressPath::fallback);
  CHECK(code_of([&] { express_even(classes, p - SubsetMask::of(g, {0}), five); }) == ErrorCode::not_thick);
  CHECK(code_of([&] { express_even(classes, SubsetMask::of(g, {0, 1}), five); }) == ErrorCode::not_normal);
  CHECK(code_of([&] { express_even(classes, classes.members(0), five); }) ==
        ErrorCode::omega_too_small_and_no_fallback);
}

TEST_CASE("point budget decides the path in Alt(7)") {
  auto g = build_group(*make_spec(AlternatingSpec{7}));
  auto classes = conjugacy_classes(g);
  auto s = g->index_of(Permutation::parse("(1,2,3)", 7).form());

  // everything except the 7-cycles: thickness 8 is far beyond 7 points
  SubsetMask p(g);
  for (std::size_t c = 0; c < classes.count(); ++c) {
    auto cyc = Permutation::from_form(g->form(classes.representatives[c])).cycles();
    if (!(cyc.size() == 1 && cyc[0].size() == 7))
      for (Index x : classes.elements_of(c)) p.set(x);
  }
  auto th = thickness(p);
  REQUIRE(th.value);
  CHECK(th.status == ThicknessStatus::exact);
  CHECK(*th.value == 8);
  auto e = express_even(classes, p, s);
  CHECK(g->mul(e.q1, e.q2) == s);
  CHECK(e.path == ExpressPath::fallback);

  // P = Alt(7) has thickness 2; a 3-cycle needs 1 + 2 points plus 2 for parity
  SubsetMask all = SubsetMask::full(g);
  CHECK(*thickness(all).value == 2);
  auto f = express_even(classes, all, s);
  CHECK(g->mul(f.q1, f.q2) == s);
  CHECK(f.path == ExpressPath::constructive);
  REQUIRE(f.collisions.size() == 1);
  const auto& w = f.collisions[0];
  CHECK(w.first < w.second);
  CHECK(w.quotient.cycles().size() == 1);
  CHECK(w.quotient.cycles()[0].size() == 3);
}

TEST_CASE("class word distance") {
  auto s = Permutation::parse("(1,2,3,4,5)", 5);
  CHECK(class_word_distance(5, s, Permutation::identity(5)) == 0u);
  CHECK(class_word_distance(5, s, s) == 1u);
  auto d = class_word_distance(5, s, Permutation::parse("(1,2,3)", 5));
  REQUIRE(d);
  CHECK(*d <= 2u);
  CHECK_FALSE(class_word_distance(5, s, Permutation::parse("(1,2)", 5), 6));
  CHECK(code_of([] { class_word_distance(5, Permutation::identity(5), Permutation::identity(5)); }) ==
        ErrorCode::identity_sigma);
}
