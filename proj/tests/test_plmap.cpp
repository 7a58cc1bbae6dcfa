#include <doctest.h>

#include "ordkit/generators.hpp"
#include "ordkit/plmap.hpp"

using namespace ordkit;

TEST_CASE("rational arithmetic basics") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-1, -2) == Rat(1, 2));
  CHECK(Rat::parse("3/9") == Rat(1, 3));
  CHECK(Rat::parse("7") == Rat(7));
  CHECK(Rat(1, 2).str() == "1/2");
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("x/2"), std::invalid_argument);
  CHECK(dot_plus(Rat(3, 4), Rat(1, 2)) == Rat(1));
  CHECK(dot_minus(Rat(1, 4), Rat(1, 2)) == Rat(0));
  // truncated adjunction: r - s <= t iff r <= s + t
  for (int r = 0; r <= 4; ++r)
    for (int s = 0; s <= 4; ++s)
      for (int t = 0; t <= 4; ++t)
        CHECK((dot_minus(Rat(r, 4), Rat(s, 4)) <= Rat(t, 4)) ==
              (Rat(r, 4) <= dot_plus(Rat(s, 4), Rat(t, 4))));
}

TEST_CASE("evaluation of the standard maps") {
  CHECK(PLMap::identity().eval(Rat(1, 3)) == Rat(1, 3));
  CHECK(PLMap::piece_iso(Rat(0), Rat(1, 2)).eval(Rat(3, 4)) == Rat(1));
  CHECK(PLMap::trunc_sub(Rat(1, 4)).eval(Rat(1, 8)) == Rat(0));
  CHECK(PLMap::trunc_add(Rat(1, 4)).eval(Rat(7, 8)) == Rat(1));
  CHECK(PLMap::trunc_add(Rat(0)) == PLMap::identity());
}

TEST_CASE("composition is exact on the worked example") {
  const PLMap u = PLMap::piece_iso(Rat(0), Rat(1, 2));  // min(2x, 1)
  const PLMap v = PLMap::piece_iso(Rat(1, 2), Rat(1));  // max(2x-1, 0)
  const PLMap vu = compose(v, u);
  CHECK(vu.breakpoints() == std::vector<Rat>{Rat(0), Rat(1, 4), Rat(1, 2), Rat(1)});
  CHECK(vu.eval(Rat(1, 4)) == Rat(0));
  CHECK(vu.eval(Rat(1, 2)) == Rat(1));
  CHECK(vu.eval(Rat(3, 8)) == Rat(1, 2));
  CHECK(compose(u, PLMap::identity()) == u);
  CHECK(compose(PLMap::identity(), u) == u);
}

TEST_CASE("classification") {
  CHECK(classify(PLMap::piece_iso(Rat(0), Rat(1, 2))).in_U);
  const auto ta = classify(PLMap::trunc_add(Rat(1, 4)));
  CHECK_FALSE(ta.in_U);
  CHECK(ta.in_Uhat);
  const auto st = classify(PLMap::step(Rat(1, 2), Rat(0), Rat(1), Rat(1)));
  CHECK_FALSE(st.in_U);
  CHECK_FALSE(st.in_Uhat);
  CHECK_FALSE(st.continuous);

  // maps classified surjective hit every grid value: the counit is equality
  Gen gen(61);
  for (int it = 0; it < 40; ++it) {
    const PLMap u = gen.u();
    REQUIRE(classify(u).surjective);
    const PLMap ux = right_adjoint_pl(u);
    for (int k = 0; k <= 12; ++k) CHECK(u.eval(ux.eval(Rat(k, 12))) == Rat(k, 12));
  }
}

TEST_CASE("right adjoints of surjections") {
  CHECK(right_adjoint_pl(PLMap::identity()) == PLMap::identity());

  const PLMap u = PLMap::piece_iso(Rat(0), Rat(1, 2));
  const PLMap ux = right_adjoint_pl(u);
  CHECK(ux.eval(Rat(1, 2)) == Rat(1, 4));
  CHECK(ux.eval(Rat(1)) == Rat(1));
  CHECK(ux.limit_from_left(Rat(1)) == Rat(1, 2));  // jump at the top

  const PLMap v = PLMap::piece_iso(Rat(1, 2), Rat(1));
  const PLMap vx = right_adjoint_pl(v);
  CHECK(vx.eval(Rat(0)) == Rat(1, 2));
  CHECK(vx.eval(Rat(1, 2)) == Rat(3, 4));

  CHECK_THROWS_AS(right_adjoint_pl(PLMap::trunc_add(Rat(1, 4))), PLError);

  // adjunction and the unit/counit inequalities on random surjections
  Gen gen(7);
  for (int it = 0; it < 50; ++it) {
    const PLMap w = gen.u();
    const PLMap wx = right_adjoint_pl(w);
    CHECK(pl_leq(compose(w, wx), PLMap::identity()));
    CHECK(pl_leq(PLMap::identity(), compose(wx, w)));
    for (int k = 0; k <= 8; ++k)
      for (int j = 0; j <= 8; ++j)
        CHECK((w.eval(Rat(k, 8)) <= Rat(j, 8)) == (Rat(k, 8) <= wx.eval(Rat(j, 8))));
  }
}

TEST_CASE("sup quasimetric on maps") {
  const PLMap ts = PLMap::trunc_sub(Rat(1, 4));
  CHECK(linf_rho(ts, ts) == Rat(0));
  CHECK(linf_rho(PLMap::identity(), ts) == Rat(1, 4));
  CHECK(linf_rho(ts, PLMap::identity()) == Rat(0));

  Gen gen(11);
  for (int it = 0; it < 100; ++it) {
    const PLMap a = gen.uhat(), b = gen.uhat(), c = gen.uhat();
    CHECK(linf_rho(a, c) <= linf_rho(a, b) + linf_rho(b, c));
  }
}

TEST_CASE("canonical rescaling isomorphisms") {
  CHECK(canonical_r_iso(Rat(1, 2), IsoSide::lower) == PLMap::piece_iso(Rat(0), Rat(1, 2)));
  CHECK(canonical_r_iso(Rat(1, 2), IsoSide::upper) == PLMap::piece_iso(Rat(1, 2), Rat(1)));
  CHECK_THROWS_AS(canonical_r_iso(Rat(0), IsoSide::lower), PLError);

  // the partner map u((-) + r) is the lower rescaling and lands in U
  const Rat r(1, 3);
  const PLMap u = canonical_r_iso(r, IsoSide::upper);
  const PLMap v = compose(u, PLMap::trunc_add(r));
  CHECK(classify(v).in_U);
  CHECK(v == PLMap::piece_iso(Rat(0), Rat(1) - r));
}

TEST_CASE("monoid laws under composition") {
  Gen gen(3);
  for (int it = 0; it < 100; ++it) {
    const PLMap a = gen.uhat(), b = gen.uhat(), c = gen.uhat();
    CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
    CHECK(compose(a, PLMap::identity()) == a);
    CHECK(compose(PLMap::identity(), a) == a);
  }
}

TEST_CASE("U and U-hat are closed under the expected operations") {
  Gen gen(5);
  for (int it = 0; it < 50; ++it) {
    const PLMap a = gen.u(), b = gen.u();
    CHECK(classify(compose(a, b)).in_U);
    CHECK(classify(pointwise_min(a, b)).in_U);
    CHECK(classify(pointwise_max(a, b)).in_U);
    const PLMap c = gen.uhat(), d = gen.uhat();
    CHECK(classify(compose(c, d)).in_Uhat);
    CHECK(classify(PLMap::trunc_add(gen.rat01())).in_Uhat);
  }
}

TEST_CASE("truncated addition factors through a right adjoint") {
  // (-) + r equals u^x o v for v the lower rescaling at 1 - r and u = v((-) - r)
  for (int k = 1; k < 8; ++k) {
    const Rat r(k, 8);
    const PLMap v = PLMap::piece_iso(Rat(0), Rat(1) - r);
    const PLMap u = compose(v, PLMap::trunc_sub(r));
    CHECK(u == PLMap::piece_iso(r, Rat(1)));
    CHECK(compose(right_adjoint_pl(u), v) == PLMap::trunc_add(r));
  }
}

TEST_CASE("normal forms make equality structural") {
  // two routes to min(2x, 1)
  const PLMap direct = PLMap::piece_iso(Rat(0), Rat(1, 2));
  const PLMap split = PLMap::from_points(
      {{Rat(0), Rat(0)}, {Rat(1, 4), Rat(1, 2)}, {Rat(1, 2), Rat(1)}, {Rat(1), Rat(1)}});
  CHECK(direct == split);
  CHECK(direct.segments() == 2);
  // jump data must stay monotone
  CHECK_THROWS_AS(PLMap::from_data({Rat(0), Rat(1)}, {Rat(1), Rat(0)}, {Rat(1)}, {Rat(0)}),
                  PLError);
}
