#include <doctest.h>

#include "ordkit/generators.hpp"
#include "ordkit/umodule.hpp"

using namespace ordkit;

namespace {
const IntervalModule kInterval;

FunctionModule c2_module() {
  return FunctionModule(FinPoset::chain(2), doctrine_pair_by_name("directed"));
}

// A valid U-poset whose action forgets the map entirely; its inherited
// closed-form rho is inconsistent with the graded order it induces.
struct TrivialActionModule {
  using Element = Rat;
  bool is_element(const Rat& a) const { return in_unit(a); }
  bool leq(const Rat& a, const Rat& b) const { return a <= b; }
  Rat act(const PLMap&, const Rat& a) const { return a; }
  bool has_binary_meets() const { return true; }
  bool has_top() const { return true; }
  Rat meet(const Rat& a, const Rat& b) const { return rat_min(a, b); }
  Rat top() const { return Rat(1); }
  Rat rho(const Rat& a, const Rat& b) const { return dot_minus(a, b); }
  bool compatible(const Rat&, const Rat&) const { return true; }
  std::string describe(const Rat& a) const { return a.str(); }
};

}  // namespace

TEST_CASE("graded order on the interval") {
  CHECK(le_r(kInterval, Rat(7, 10), Rat(5, 10), Rat(2, 10)));
  CHECK_FALSE(le_r(kInterval, Rat(7, 10), Rat(5, 10), Rat(1, 10)));
  CHECK(le_r(kInterval, Rat(1), Rat(0), Rat(1)));
  // grade 0 is the order, grade agrees with truncated shifts on a grid
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b) {
      CHECK(le_r(kInterval, Rat(a, 8), Rat(b, 8), Rat(0)) == (a <= b));
      for (int r = 0; r <= 8; ++r)
        CHECK(le_r(kInterval, Rat(a, 8), Rat(b, 8), Rat(r, 8)) ==
              (Rat(a, 8) <= dot_plus(Rat(b, 8), Rat(r, 8))));
    }
}

TEST_CASE("graded order on function tables reduces pointwise") {
  const auto m = c2_module();
  const FunctionModule::Element a{Rat(1), Rat(1)}, b{Rat(0), Rat(1)};
  CHECK_FALSE(le_r(m, a, b, Rat(1, 2)));
  CHECK_FALSE(le_r(m, a, b, Rat(99, 100)));
  CHECK(le_r(m, a, b, Rat(1)));

  // per-coordinate interval grading is the whole story
  Gen gen(19);
  const FunctionModule dia(FinPoset::diamond(), doctrine_pair_by_name("directed"));
  for (int it = 0; it < 100; ++it) {
    const auto ea = gen.function_elem(dia), eb = gen.function_elem(dia);
    const Rat r = gen.rat01();
    bool pointwise = true;
    for (std::size_t i = 0; i < ea.size(); ++i)
      pointwise = pointwise && le_r(kInterval, ea[i], eb[i], r);
    CHECK(le_r(dia, ea, eb, r) == pointwise);
  }
}

TEST_CASE("rho and dist closed forms") {
  CHECK(kInterval.rho(Rat(7, 10), Rat(5, 10)) == Rat(1, 5));
  CHECK(dist(kInterval, Rat(1, 4), Rat(3, 4)) == Rat(1, 2));

  const PLModule pm;
  CHECK(pm.rho(PLMap::identity(), PLMap::trunc_sub(Rat(1, 4))) == Rat(1, 4));

  const auto m = c2_module();
  CHECK(m.rho({Rat(3, 4), Rat(1)}, {Rat(1, 4), Rat(1)}) == Rat(1, 2));
}

TEST_CASE("archimedean property and closed-form consistency") {
  Gen gen(13);
  std::vector<Rat> pts;
  for (int k = 0; k < 8; ++k) pts.push_back(gen.rat01());
  CHECK(check_archimedean(kInterval, pts).ok());

  const auto m = c2_module();
  std::vector<FunctionModule::Element> elems;
  for (int k = 0; k < 6; ++k) elems.push_back(gen.function_elem(m));
  CHECK(check_archimedean(m, elems).ok());

  // the degenerate action is caught through the closed-form cross-check
  const TrivialActionModule degenerate;
  const auto rep = check_archimedean(degenerate, {Rat(1, 4), Rat(3, 4)});
  CHECK_FALSE(rep.ok());
}

TEST_CASE("unstacking over a partition") {
  const std::vector<Rat> halves{Rat(0), Rat(1, 2), Rat(1)};
  CHECK(unstack_verify(kInterval, Rat(1, 2), Rat(1, 2), halves));
  // hypothesis false, vacuous pass
  CHECK(unstack_verify(kInterval, Rat(3, 4), Rat(1, 4), halves));
  CHECK_THROWS_AS(unstack_verify(kInterval, Rat(0), Rat(0), {Rat(1, 2), Rat(1, 4), Rat(1)}),
                  ModuleError);

  // hypothesis forces the conclusion across a grid, for both instances
  const auto m = c2_module();
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b) {
      CHECK(unstack_verify(kInterval, Rat(a, 8), Rat(b, 8), halves));
      CHECK(unstack_verify(kInterval, Rat(a, 8), Rat(b, 8),
                           {Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)}));
      const FunctionModule::Element ea{Rat(a, 8), Rat(1)}, eb{Rat(b, 8), Rat(1)};
      CHECK(unstack_verify(m, ea, eb, halves));
    }
}

TEST_CASE("stack gluing") {
  CHECK(stack_glue(kInterval, Rat(1, 2), Rat(1), Rat(1, 2)) == Rat(3, 4));
  CHECK(stack_glue(kInterval, Rat(1, 2), Rat(1, 2), Rat(0)) == Rat(1, 4));
  CHECK_THROWS_AS(stack_glue(kInterval, Rat(1, 2), Rat(1, 2), Rat(1, 2)), ModuleError);

  // incompatibility: any nonzero upper part forces the lower part to 1
  CHECK_FALSE(kInterval.compatible(Rat(1, 2), Rat(1, 2)));
  CHECK(kInterval.compatible(Rat(1), Rat(1, 2)));
  CHECK(kInterval.compatible(Rat(1, 2), Rat(0)));

  // round trip: project a point, glue it back
  for (int r = 1; r < 8; ++r)
    for (int k = 0; k <= 8; ++k) {
      const Rat c(k, 8), rr(r, 8);
      const PLMap u = canonical_r_iso(rr, IsoSide::lower);
      const PLMap v = canonical_r_iso(rr, IsoSide::upper);
      CHECK(stack_glue(kInterval, rr, u.eval(c), v.eval(c)) == c);
    }

  // gluing in the PL module: constant-one upper part against the identity
  const PLModule pm;
  const auto glued = stack_glue(pm, Rat(1, 2), PLMap::constant(Rat(1)), PLMap::identity());
  CHECK(glued == PLMap::from_points({{Rat(0), Rat(1, 2)}, {Rat(1), Rat(1)}}));
}

TEST_CASE("extending the action to U-hat") {
  CHECK(extend_to_uhat(kInterval, PLMap::trunc_add(Rat(1, 4)), Rat(1, 2)) == Rat(3, 4));
  CHECK(extend_to_uhat(kInterval, PLMap::constant(Rat(1)), Rat(1, 3)) == Rat(1));

  const auto m = c2_module();
  const auto got = extend_to_uhat(m, PLMap::trunc_add(Rat(1, 2)), {Rat(0), Rat(1)});
  CHECK(got == FunctionModule::Element{Rat(1, 2), Rat(1)});

  // agreement with the direct action on the whole grid, and meet preservation
  Gen gen(17);
  for (int k = 0; k <= 16; ++k)
    for (int r = 0; r <= 16; ++r)
      CHECK(extend_to_uhat(kInterval, PLMap::trunc_add(Rat(r, 16)), Rat(k, 16)) ==
            dot_plus(Rat(k, 16), Rat(r, 16)));
  for (int it = 0; it < 30; ++it) {
    const PLMap w1 = gen.uhat(), w2 = gen.uhat();
    const Rat a = gen.rat01();
    CHECK(extend_to_uhat(kInterval, pointwise_min(w1, w2), a) ==
          rat_min(extend_to_uhat(kInterval, w1, a), extend_to_uhat(kInterval, w2, a)));
  }
}

TEST_CASE("closed invariant filters") {
  const auto dir = doctrine_pair_by_name("directed");
  const auto all = doctrine_pair_by_name("all");
  CHECK(closed_invariant_filter(kInterval, dir, {Rat(1)}).kind == IntervalFilterKind::one);
  CHECK(closed_invariant_filter(kInterval, dir, {Rat(1, 2)}).kind ==
        IntervalFilterKind::everything);
  CHECK(closed_invariant_filter(kInterval, all, {}).kind == IntervalFilterKind::empty);
  CHECK(closed_invariant_filter(kInterval, dir, {}).kind == IntervalFilterKind::one);

  const auto m = c2_module();
  const auto filt = closed_invariant_filter(m, {FunctionModule::Element{Rat(0), Rat(1)}});
  CHECK(filt.member(m, {Rat(1, 2), Rat(1)}));  // everything with value 1 at the top
}

TEST_CASE("module morphisms into the interval") {
  const auto dir = doctrine_pair_by_name("directed");
  const auto all = doctrine_pair_by_name("all");

  const auto two = morphisms_to_I(kInterval, dir);
  REQUIRE(two.size() == 2);
  // identity with kernel {1}, constant one with kernel everything
  CHECK(two[0].filter.kind == IntervalFilterKind::one);
  CHECK(two[0](Rat(1, 3)) == Rat(1, 3));
  CHECK(two[1](Rat(1, 3)) == Rat(1));

  const auto three = morphisms_to_I(kInterval, all);
  REQUIRE(three.size() == 3);
  CHECK(three[0](Rat(1, 3)) == Rat(0));  // the empty filter's bottom morphism

  const auto m = c2_module();
  const auto mor = morphisms_to_I(m);
  REQUIRE(mor.size() == 2);  // evaluation at bottom and at top
  const FunctionModule::Element a{Rat(1, 3), Rat(1)};
  std::vector<Rat> values{mor[0](a), mor[1](a)};
  std::sort(values.begin(), values.end());
  CHECK(values == std::vector<Rat>{Rat(1, 3), Rat(1)});
}

TEST_CASE("module action laws hold on the instances") {
  Gen gen(37);
  const auto m = c2_module();
  const PLModule pm;
  for (int it = 0; it < 80; ++it) {
    const PLMap u = gen.u(), v = gen.u();
    const Rat a = gen.rat01();
    CHECK(kInterval.act(PLMap::identity(), a) == a);
    CHECK(kInterval.act(compose(u, v), a) == kInterval.act(u, kInterval.act(v, a)));
    // monotone in both arguments
    const Rat b = gen.rat01();
    if (a <= b) CHECK(kInterval.leq(kInterval.act(u, a), kInterval.act(u, b)));
    if (pl_leq(u, v)) CHECK(kInterval.leq(kInterval.act(u, a), kInterval.act(v, a)));
    // meets preserved by each action map
    CHECK(kInterval.act(u, kInterval.meet(a, b)) ==
          kInterval.meet(kInterval.act(u, a), kInterval.act(u, b)));

    const auto ta = gen.function_elem(m);
    CHECK(m.act(PLMap::identity(), ta) == ta);
    CHECK(m.act(compose(u, v), ta) == m.act(u, m.act(v, ta)));
    CHECK(m.is_element(m.act(u, ta)));

    const PLMap f = gen.uhat();
    CHECK(pm.act(compose(u, v), f) == pm.act(u, pm.act(v, f)));
    CHECK(pm.is_element(pm.act(u, f)));
  }
}

TEST_CASE("graded-order laws on sampled inputs") {
  Gen gen(23);
  const auto m = c2_module();
  const PLModule pm;
  for (int it = 0; it < 150; ++it) {
    // (c) graded transitivity on the interval
    const Rat a = gen.rat01(), b = gen.rat01(), c = gen.rat01();
    Rat r = gen.rat01(), s = gen.rat01();
    if (le_r(kInterval, a, b, r) && le_r(kInterval, b, c, s))
      CHECK(le_r(kInterval, a, c, dot_plus(r, s)));
    // (d) triangle with plain addition
    CHECK(kInterval.rho(a, b) + kInterval.rho(b, c) >= kInterval.rho(a, c));
    // (e) Lipschitz action on the PL module
    const PLMap u = gen.u(), v = gen.u();
    const PLMap f = gen.uhat();
    CHECK(pm.rho(pm.act(u, f), pm.act(v, f)) <= linf_rho(u, v));
    // (g) meets law on tables
    const auto ta = gen.function_elem(m), tb = gen.function_elem(m), tc = gen.function_elem(m);
    CHECK(le_r(m, ta, m.meet(tb, tc), r) == (le_r(m, ta, tb, r) && le_r(m, ta, tc, r)));
  }
}
