#include "ordkit/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "ordkit/continuity.hpp"
#include "ordkit/doctrine.hpp"
#include "ordkit/enumerate.hpp"
#include "ordkit/gelfand.hpp"
#include "ordkit/generators.hpp"
#include "ordkit/io.hpp"
#include "ordkit/two_duality.hpp"
#include "ordkit/umodule.hpp"

namespace ordkit {

namespace {

using Json = nlohmann::json;

Json params_json(const SuiteParams& p) {
  return Json{{"max_size", p.max_size},
              {"samples", p.samples},
              {"grid", p.grid},
              {"depth", p.depth},
              {"seed", p.seed}};
}

struct Collector {
  std::string suite;
  SuiteParams params;
  std::vector<CheckResult> checks;

  void pass(const std::string& name, const std::string& detail) {
    checks.push_back({name, true, detail, Json()});
  }
  void fail(const std::string& name, const std::string& detail, Json payload = Json::object()) {
    payload["suite"] = suite;
    payload["check"] = name;
    payload["params"] = params_json(params);
    checks.push_back({name, false, detail, std::move(payload)});
  }
  void result(const std::string& name, bool ok, const std::string& detail,
              Json payload = Json::object()) {
    if (ok)
      pass(name, detail);
    else
      fail(name, detail, std::move(payload));
  }
};

int defaulted(int value, int fallback) { return value < 0 ? fallback : value; }

// ---------------------------------------------------------------------------
// saturation

void run_saturation(Collector& c) {
  const int bound = defaulted(c.params.max_size, 4);
  std::vector<Doctrine> ds;
  for (const auto& pr : builtin_doctrines()) {
    ds.push_back(pr.phi);
    ds.push_back(pr.psi);
  }
  for (const auto& d : ds) {
    const auto rep = check_saturation(d, bound);
    std::string detail = d.name;
    if (!rep.ok()) detail += ": " + rep.failures.front().condition + " " + rep.failures.front().witness;
    c.result("saturation-" + d.name, rep.ok(), detail);
  }
  // An ad-hoc class that is not saturated: posets with at most two elements.
  Doctrine small{"size-at-most-2", "", true, false,
                 [](const FinPoset&, Mask m) { return popcount(m) <= 2; }};
  const auto rep = check_saturation(small, bound);
  bool multiplication_caught = false;
  for (const auto& f : rep.failures)
    if (f.condition == "multiplication") multiplication_caught = true;
  c.result("saturation-rejects-size-at-most-2", multiplication_caught,
           "violations found: " + std::to_string(rep.failures.size()));
}

// ---------------------------------------------------------------------------
// sound4 (acceptance 2)

void run_sound4(Collector& c) {
  const int bound = defaulted(c.params.max_size, 5);
  const auto corpus = posets_up_to(bound);
  for (const auto& pair : builtin_doctrines()) {
    bool ok = true;
    Json payload;
    std::string detail;
    for (const auto& p : corpus) {
      const auto rep = check_soundness_finite(pair, p);
      if (!rep.ok()) {
        ok = false;
        detail = rep.failures.front().condition + " on " + p.encode() + ": " +
                 rep.failures.front().witness;
        payload["poset"] = poset_to_json(p);
        payload["pair"] = pair.phi.name;
        break;
      }
    }
    if (ok) detail = std::to_string(corpus.size()) + " posets exhaustively checked";
    c.result("sound4-" + pair.phi.name, ok, detail, payload);
  }
  // Flag consistency: omega lies on exactly one side of each pair.
  bool flags = true;
  for (const auto& pair : builtin_doctrines())
    if (pair.phi.contains_omega == pair.psi.contains_omega) flags = false;
  c.result("sound4-omega-flags", flags, "omega membership alternates across each pair");
  // An intentionally mismatched pair fails.
  {
    const auto& directed = doctrine_pair_by_name("directed").phi;
    const auto& greatest = doctrine_pair_by_name("all").psi;
    const auto rep = check_soundness_finite({directed, greatest}, FinPoset::antichain(2));
    c.result("sound4-rejects-mismatched-pair", !rep.ok(),
             "(directed, has-greatest) on the 2-antichain");
  }
}

// ---------------------------------------------------------------------------
// cts-equiv (acceptance 1)

void run_cts_equiv(Collector& c) {
  const int bound = defaulted(c.params.max_size, 5);
  const auto lattices = lattices_up_to(bound);
  for (const auto& pair : builtin_doctrines()) {
    bool ok = true;
    int continuous = 0;
    Json payload;
    std::string detail;
    for (const auto& x : lattices) {
      const auto crit = continuity_criteria(x, pair.phi);
      if (!crit.agree()) {
        ok = false;
        detail = "criteria disagree on " + x.encode();
        payload["poset"] = poset_to_json(x);
        payload["doctrine"] = pair.phi.name;
        break;
      }
      if (crit.basis) ++continuous;
    }
    if (ok)
      detail = std::to_string(continuous) + "/" + std::to_string(lattices.size()) +
               " lattices continuous, criteria agree on all";
    c.result("cts-equiv-" + pair.phi.name, ok, detail, payload);
  }
  // way-below basics on every computed relation
  {
    bool ok = true;
    std::string detail = "waydown subsets of down-sets and transport hold";
    for (const auto& x : lattices)
      for (const auto& pair : builtin_doctrines()) {
        const auto rel = waydown(x, pair.phi);
        for (int e = 0; e < x.size() && ok; ++e)
          if ((rel.waydown[e] & ~x.down_mask(e)) != 0) ok = false;
        for (int a = 0; a < x.size() && ok; ++a)
          for (int b = 0; b < x.size() && ok; ++b)
            for (int a2 = 0; a2 < x.size() && ok; ++a2)
              for (int b2 = 0; b2 < x.size() && ok; ++b2)
                if (x.leq(a2, a) && rel.way(a, b) && x.leq(b, b2) && !rel.way(a2, b2)) ok = false;
      }
    c.result("cts-equiv-way-props", ok, detail);
  }
  // continuity coincides with distributivity for the class of all joins
  {
    bool ok = true;
    for (const auto& x : lattices) {
      const auto& all = doctrine_pair_by_name("all").phi;
      if (is_continuous(x, all) != x.is_distributive_lattice()) ok = false;
      if (check_meet_distributivity(x, all) != x.is_distributive_lattice()) ok = false;
    }
    c.result("cts-equiv-all-is-distributive", ok,
             "all-joins continuity = complete distributivity on the corpus");
  }
  // algebraic iff continuous at finite scale; algebraic implies continuous
  {
    bool ok = true;
    for (const auto& x : lattices)
      for (const auto& pair : builtin_doctrines()) {
        const bool cont = is_continuous(x, pair.phi);
        const bool alg = is_algebraic(x, pair.phi);
        if (alg && !cont) ok = false;
        if ((pair.phi.name == "directed" || pair.phi.name == "empty-or-directed") && cont != alg)
          ok = false;
      }
    c.result("cts-equiv-algebraic", ok, "algebraicity/continuity relations hold on the corpus");
  }
}

// ---------------------------------------------------------------------------
// interpolation

void run_interpolation(Collector& c) {
  const int bound = defaulted(c.params.max_size, 6);
  for (const auto& pair : builtin_doctrines()) {
    bool ok = true;
    int tested = 0;
    Json payload;
    for (const auto& x : lattices_up_to(bound)) {
      if (!is_continuous(x, pair.phi)) continue;
      ++tested;
      if (!check_interpolation(x, pair.phi)) {
        ok = false;
        payload["poset"] = poset_to_json(x);
        payload["doctrine"] = pair.phi.name;
        break;
      }
    }
    c.result("interpolation-" + pair.phi.name, ok,
             std::to_string(tested) + " continuous lattices interpolate");
  }
}

// ---------------------------------------------------------------------------
// birkhoff (acceptance 3)

void run_birkhoff(Collector& c) {
  const int bound = defaulted(c.params.max_size, 8);
  const auto& pair = doctrine_pair_by_name("all");
  {
    bool ok = true;
    int count = 0;
    Json payload;
    std::string detail;
    for (int n = 1; n <= bound && ok; ++n)
      for (const auto& x : enumerate_distributive_lattices(n, bound)) {
        ++count;
        try {
          roundtrip(x, pair);
        } catch (const std::exception& e) {
          ok = false;
          detail = std::string(e.what()) + " on " + x.encode();
          payload["poset"] = poset_to_json(x);
          break;
        }
      }
    if (ok) detail = std::to_string(count) + " distributive lattices round-trip";
    c.result("birkhoff-roundtrip", ok, detail, payload);
  }
  {
    // M3 and N5 rejected: not continuous, distributivity fails with witness.
    bool ok = true;
    std::string detail;
    for (const FinPoset& x : {FinPoset::m3(), FinPoset::n5()}) {
      if (is_continuous(x, pair.phi) || is_algebraic(x, pair.phi)) ok = false;
      DistributivityWitness w;
      if (check_meet_distributivity(x, pair.phi, &w) || w.family.empty()) ok = false;
      bool thrown = false;
      try {
        dual_of_lattice(x, pair);
      } catch (const PosetError&) {
        thrown = true;
      }
      if (!thrown) ok = false;
    }
    // a violating family on m3 one can check by hand: {bot,a,b} and {bot,a,c}
    const FinPoset m3 = FinPoset::m3();
    const Mask f1 = 0b00111, f2 = 0b01011;  // elements 0=bot, atoms 1,2,3
    const int lhs = *m3.meet(*m3.join_all(f1), *m3.join_all(f2));
    const int rhs = *m3.join_all(f1 & f2);
    if (lhs == rhs) ok = false;
    detail = "m3/n5 rejected; witness meets " + std::to_string(lhs) + " != joins " +
             std::to_string(rhs);
    c.result("birkhoff-rejects-m3-n5", ok, detail);
  }
  {
    bool ok = true;
    int rejected = 0;
    for (const auto& x : lattices_up_to(std::min(bound, 6))) {
      if (x.is_distributive_lattice()) continue;
      ++rejected;
      bool thrown = false;
      try {
        dual_of_lattice(x, pair);
      } catch (const PosetError&) {
        thrown = true;
      }
      if (!thrown) ok = false;
    }
    c.result("birkhoff-rejects-nondistributive", ok,
             std::to_string(rejected) + " non-distributive lattices rejected");
  }
}

// ---------------------------------------------------------------------------
// hms (acceptance 4)

void run_hms(Collector& c) {
  const int bound = defaulted(c.params.max_size, 7);
  const int samples = defaulted(c.params.samples, 100);
  const auto& pair = doctrine_pair_by_name("directed");
  {
    bool ok = true;
    int count = 0;
    Json payload;
    std::string detail;
    for (const auto& x : lattices_up_to(bound)) {
      ++count;
      try {
        roundtrip(x, pair);
      } catch (const std::exception& e) {
        ok = false;
        detail = std::string(e.what()) + " on " + x.encode();
        payload["poset"] = poset_to_json(x);
        break;
      }
    }
    if (ok) detail = std::to_string(count) + " lattices round-trip";
    c.result("hms-roundtrip", ok, detail, payload);
  }
  {
    // dual_morphism is contravariantly functorial on seeded composable pairs.
    Gen gen(c.params.seed);
    const auto lattices = lattices_up_to(std::min(bound, 5));
    bool ok = true;
    int done = 0;
    int guard = 0;
    while (done < samples && guard < samples * 50) {
      ++guard;
      const auto& x = lattices[gen.uniform(0, (int)lattices.size() - 1)];
      const auto& y = lattices[gen.uniform(0, (int)lattices.size() - 1)];
      const auto& z = lattices[gen.uniform(0, (int)lattices.size() - 1)];
      const auto fs = enumerate_monotone_maps(x, y);
      const auto gs = enumerate_monotone_maps(y, z);
      std::vector<MonotoneMap> fm, gm;
      for (const auto& f : fs)
        if (preserves_all_meets(f)) fm.push_back(f);
      for (const auto& g : gs)
        if (preserves_all_meets(g)) gm.push_back(g);
      if (fm.empty() || gm.empty()) continue;
      const auto& f = fm[gen.uniform(0, (int)fm.size() - 1)];
      const auto& g = gm[gen.uniform(0, (int)gm.size() - 1)];
      const auto lhs = dual_morphism(compose(g, f), pair);
      const auto rhs = compose(dual_morphism(f, pair), dual_morphism(g, pair));
      if (lhs.values != rhs.values) {
        ok = false;
        break;
      }
      ++done;
    }
    c.result("hms-dual-functoriality", ok && done == samples,
             std::to_string(done) + " composable pairs verified");
  }
  {
    // double dual of the inflattice side: A recovered inside Phi(A^op).
    bool ok = true;
    int count = 0;
    for (const auto& pr : builtin_doctrines())
      for (const auto& a : posets_up_to(std::min(bound, 5))) {
        if (!has_required_meets(a, pr)) continue;
        ++count;
        try {
          dual_of_inflattice(a, pr);
        } catch (const std::exception&) {
          ok = false;
        }
      }
    c.result("hms-double-dual", ok, std::to_string(count) + " inflattices recovered");
  }
}

// ---------------------------------------------------------------------------
// umod-metric (acceptance 5 and 6)

void run_interval_grid(Collector& c) {
  const int grid = defaulted(c.params.grid, 64);
  const IntervalModule m;
  bool ok = true;
  std::string detail = "grid 1/" + std::to_string(grid) + " exact";
  Json payload;
  for (int kr = 0; kr <= grid && ok; ++kr) {
    const Rat r(kr, grid);
    const PLMap u = r == Rat(1)   ? PLMap::identity()
                    : r == Rat(0) ? PLMap::identity()
                                  : canonical_r_iso(r, IsoSide::upper);
    const PLMap v = compose(u, PLMap::trunc_add(r));
    for (int ka = 0; ka <= grid && ok; ++ka)
      for (int kb = 0; kb <= grid; ++kb) {
        const Rat a(ka, grid), b(kb, grid);
        const bool lhs = r == Rat(1) ? true : u.eval(a) <= v.eval(b);
        const bool rhs = a <= dot_plus(b, r);
        if (lhs != rhs || lhs != le_r(m, a, b, r)) {
          ok = false;
          detail = "graded order mismatch at a=" + a.str() + " b=" + b.str() + " r=" + r.str();
          payload["a"] = a.str();
          payload["b"] = b.str();
          payload["r"] = r.str();
          break;
        }
        if (kr == 0) {
          if (m.rho(a, b) != dot_minus(a, b) || dist(m, a, b) != rat_abs(a - b)) {
            ok = false;
            detail = "rho/dist closed form mismatch at a=" + a.str() + " b=" + b.str();
            break;
          }
        }
      }
  }
  c.result("umod-interval-grid", ok, detail, payload);
}

Rat max_slope(const PLMap& u) {
  Rat best(0);
  const auto& xs = u.breakpoints();
  for (int i = 0; i < u.segments(); ++i)
    best = rat_max(best, (u.left_limit(i) - u.right_limit(i)) / (xs[i + 1] - xs[i]));
  return best;
}

// least continuous U-majorant of a monotone PL map g with g(0) = 0
PLMap u_majorant(const PLMap& g) {
  std::vector<std::pair<Rat, Rat>> pts;
  Rat running(0);
  const auto& xs = g.breakpoints();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rat peak = g.value_at((int)i);
    if ((int)i < g.segments()) peak = rat_max(peak, g.right_limit((int)i));
    running = rat_max(running, peak);
    pts.push_back({xs[i], running});
  }
  PLMap h = PLMap::from_points(pts);
  return pointwise_max(h, PLMap::identity());
}

template <class M, class SampleFn>
void metric_laws(Collector& c, const std::string& tag, const M& m, SampleFn next, int samples,
                 std::uint64_t seed) {
  Gen gen(seed);
  bool ok = true;
  std::string detail;
  const auto fail = [&](const std::string& what) {
    if (ok) detail = what;
    ok = false;
  };

  for (int it = 0; it < samples && ok; ++it) {
    const auto a = next(gen);
    const auto b = next(gen);
    const auto e = next(gen);
    Rat r = gen.rat01(), s = gen.rat01();
    if (s < r) std::swap(r, s);

    // (a) monotone in r
    if (le_r(m, a, b, r) && !le_r(m, a, b, s)) fail("(a) monotonicity in r");
    // (b) grade zero is the order
    if (le_r(m, a, b, Rat(0)) != m.leq(a, b)) fail("(b) grade-0 equals the order");
    // (c) transitivity with truncated addition
    if (le_r(m, a, b, r) && le_r(m, b, e, s) && !le_r(m, a, e, dot_plus(r, s)))
      fail("(c) graded transitivity");
    // (d) pseudoquasimetric
    if (m.rho(a, a) != Rat(0)) fail("(d) rho(a,a) = 0");
    if (m.rho(a, b) + m.rho(b, e) < m.rho(a, e)) fail("(d) triangle inequality");
    // (e) the action is 1-Lipschitz against the sup quasimetric, and
    // uniformly continuous with a slope modulus
    {
      const PLMap u = gen.u(), v = gen.u();
      if (!(m.rho(m.act(u, a), m.act(v, a)) <= linf_rho(u, v))) fail("(e) Lipschitz action");
      const Rat k = rat_max(max_slope(u), Rat(1));
      const PLMap mu = PLMap::piece_iso(Rat(0), Rat(1) / k);  // min(kx, 1)
      const Rat rr = gen.rat01();
      if (!pl_leq(compose(u, PLMap::trunc_add(rr)),
                  compose(PLMap::trunc_add(mu.eval(rr)), u)))
        fail("(e) modulus premise");
      if (!(m.rho(m.act(u, a), m.act(u, b)) <= mu.eval(m.rho(a, b)))) fail("(e) modulus transport");
    }
    // (f) transport along the right adjoint
    {
      const PLMap u = gen.u();
      const PLMap ux = right_adjoint_pl(u);
      const Rat rr = gen.rat01(8);
      const Rat ss = ux.eval(rr);
      const PLMap g = compose(PLMap::trunc_sub(ss), compose(ux, PLMap::trunc_add(rr)));
      const PLMap v = u_majorant(g);
      if (!pl_leq(compose(ux, PLMap::trunc_add(rr)), compose(PLMap::trunc_add(ss), v)))
        fail("(f) premise construction");
      const auto b2 = it % 2 ? m.act(u, a) : b;
      if (le_r(m, m.act(u, a), b2, rr) && !le_r(m, a, m.act(v, b2), ss))
        fail("(f) adjoint transport");
    }
    // (g) graded order against finite meets
    if (m.has_binary_meets()) {
      const auto mt = m.meet(b, e);
      const bool lhs = le_r(m, a, mt, r);
      const bool rhs = le_r(m, a, b, r) && le_r(m, a, e, r);
      if (lhs != rhs) fail("(g) meets law");
    }
    // The universally quantified definition of the graded order: any pair
    // u, v in U with u((-) + r) <= v must transport a <=_r b.  The canonical
    // single test is an implementation choice; this guards it.
    {
      const Rat rr = gen.rat01(8);
      if (rr < Rat(1)) {
        const PLMap base = rr == Rat(0) ? PLMap::identity() : canonical_r_iso(rr, IsoSide::upper);
        const PLMap uu = compose(gen.u(), base);  // any U-map vanishing at rr
        const PLMap vv = pointwise_max(compose(uu, PLMap::trunc_add(rr)), gen.u());
        if (!pl_leq(compose(uu, PLMap::trunc_add(rr)), vv)) fail("(def) premise construction");
        if (le_r(m, a, b, rr) && !m.leq(m.act(uu, a), m.act(vv, b)))
          fail("(def) universal quantification");
      }
    }
  }
  c.result("umod-laws-" + tag, ok, ok ? std::to_string(samples) + " samples exact" : detail);
}

void run_umod_metric(Collector& c) {
  run_interval_grid(c);
  const int samples = defaulted(c.params.samples, 1000);
  const IntervalModule im;
  metric_laws(c, "interval", im, [](Gen& g) { return g.rat01(32); }, samples, c.params.seed);

  const auto& directed = doctrine_pair_by_name("directed");
  std::vector<FunctionModule> mods;
  for (const auto& x : lattices_up_to(4)) mods.emplace_back(x, directed);
  for (std::size_t k = 0; k < mods.size(); ++k) {
    const auto& fm = mods[k];
    if (fm.lattice().size() < 2) continue;
    metric_laws(
        c, "function-" + std::to_string(fm.lattice().size()) + "-" + std::to_string(k), fm,
        [&fm](Gen& g) { return g.function_elem(fm); }, samples / (int)mods.size() + 1,
        c.params.seed + k);
  }

  const PLModule pm;
  metric_laws(c, "pl", pm, [](Gen& g) { return g.uhat(); }, samples, c.params.seed + 99);
}

// ---------------------------------------------------------------------------
// stack (acceptance 7)

template <class M>
bool glue_grid_case(const M& m, const Rat& r, const typename M::Element& a,
                    const typename M::Element& b, std::string& why) {
  if (m.compatible(a, b)) {
    try {
      const auto cell = stack_glue(m, r, a, b);
      (void)cell;
    } catch (const std::exception& e) {
      why = e.what();
      return false;
    }
  } else {
    try {
      stack_glue(m, r, a, b);
      why = "incompatible pair accepted: a=" + m.describe(a) + " b=" + m.describe(b);
      return false;
    } catch (const ModuleError&) {
      // rejection with witness text is the contract
    }
  }
  return true;
}

void run_stack(Collector& c) {
  const int grid = defaulted(c.params.grid, 16);
  const IntervalModule im;
  {
    bool ok = true;
    std::string why = "all compatible pairs glue and project back";
    for (int kr = 1; kr < grid && ok; ++kr) {
      const Rat r(kr, grid);
      const PLMap u = canonical_r_iso(r, IsoSide::lower);
      const PLMap v = canonical_r_iso(r, IsoSide::upper);
      for (int ka = 0; ka <= grid && ok; ++ka)
        for (int kb = 0; kb <= grid && ok; ++kb) {
          const Rat a(ka, grid), b(kb, grid);
          if (!glue_grid_case(im, r, a, b, why)) ok = false;
          // project then glue returns the point
          const Rat cpoint(ka, grid);
          const Rat pa = u.eval(cpoint), pb = v.eval(cpoint);
          if (ok && stack_glue(im, r, pa, pb) != cpoint) {
            ok = false;
            why = "project/glue mismatch at c=" + cpoint.str() + " r=" + r.str();
          }
        }
    }
    c.result("stack-interval-grid", ok, why);
  }
  {
    const FunctionModule fm(FinPoset::chain(2), doctrine_pair_by_name("directed"));
    bool ok = true;
    std::string why = "all compatible pairs glue and project back";
    for (int kr = 1; kr < grid && ok; ++kr) {
      const Rat r(kr, grid);
      const PLMap u = canonical_r_iso(r, IsoSide::lower);
      const PLMap v = canonical_r_iso(r, IsoSide::upper);
      for (int ka = 0; ka <= grid && ok; ++ka)
        for (int kb = 0; kb <= grid && ok; ++kb) {
          const FunctionModule::Element a{Rat(ka, grid), Rat(1)};
          const FunctionModule::Element b{Rat(kb, grid), Rat(1)};
          if (!glue_grid_case(fm, r, a, b, why)) ok = false;
          const FunctionModule::Element cell{Rat(ka, grid), Rat(1)};
          if (ok && !(stack_glue(fm, r, fm.act(u, cell), fm.act(v, cell)) == cell)) {
            ok = false;
            why = "project/glue mismatch at c=" + fm.describe(cell) + " r=" + r.str();
          }
        }
    }
    c.result("stack-function-grid", ok, why);
  }
  {
    bool ok = true;
    std::string why = "agrees with truncated addition on the grid";
    for (int kr = 0; kr <= grid && ok; ++kr)
      for (int ka = 0; ka <= grid; ++ka) {
        const Rat r(kr, grid), a(ka, grid);
        if (extend_to_uhat(im, PLMap::trunc_add(r), a) != dot_plus(a, r)) {
          ok = false;
          why = "mismatch at r=" + r.str() + " a=" + a.str();
          break;
        }
      }
    const FunctionModule fm(FinPoset::chain(2), doctrine_pair_by_name("directed"));
    for (int kr = 0; kr <= grid && ok; ++kr)
      for (int ka = 0; ka <= grid; ++ka) {
        const Rat r(kr, grid), a(ka, grid);
        const FunctionModule::Element e{a, Rat(1)};
        const auto got = extend_to_uhat(fm, PLMap::trunc_add(r), e);
        if (got[0] != dot_plus(a, r) || got[1] != Rat(1)) {
          ok = false;
          why = "function-module mismatch at r=" + r.str() + " a=" + a.str();
          break;
        }
      }
    c.result("stack-extend-uhat", ok, why);
  }
  {
    // unstackability as uniqueness: distinct elements never share both
    // rescaled projections, exhaustively on grids
    bool ok = true;
    std::string why = "projections are jointly injective";
    const FunctionModule fm(FinPoset::chain(2), doctrine_pair_by_name("directed"));
    const int g = std::min(grid, 8);
    for (int kr = 1; kr < g && ok; ++kr) {
      const Rat r(kr, g);
      const PLMap u = canonical_r_iso(r, IsoSide::lower);
      const PLMap v = canonical_r_iso(r, IsoSide::upper);
      for (int k1 = 0; k1 <= g && ok; ++k1)
        for (int k2 = 0; k2 <= g; ++k2) {
          if (k1 == k2) continue;
          const Rat c1(k1, g), c2(k2, g);
          if (u.eval(c1) == u.eval(c2) && v.eval(c1) == v.eval(c2)) {
            ok = false;
            why = "interval elements " + c1.str() + ", " + c2.str() +
                  " share projections at r=" + r.str();
            break;
          }
          const FunctionModule::Element e1{c1, Rat(1)}, e2{c2, Rat(1)};
          if (fm.act(u, e1) == fm.act(u, e2) && fm.act(v, e1) == fm.act(v, e2)) {
            ok = false;
            why = "function elements share projections at r=" + r.str();
            break;
          }
        }
    }
    c.result("stack-unstackable-unique", ok, why);
  }
  {
    // three-piece gluing: success and monotonicity on a coarse grid
    bool ok = true;
    std::string why = "3-piece gluing monotone";
    const std::vector<Rat> partition{Rat(0), Rat(1, 3), Rat(2, 3), Rat(1)};
    const int g = std::min(grid, 4);
    std::vector<std::vector<Rat>> triples;
    for (int k1 = 0; k1 <= g; ++k1)
      for (int k2 = 0; k2 <= g; ++k2)
        for (int k3 = 0; k3 <= g; ++k3) {
          const Rat b1(k1, g), b2(k2, g), b3(k3, g);
          if ((b2 != Rat(0) && b1 != Rat(1)) || (b3 != Rat(0) && b2 != Rat(1))) continue;
          triples.push_back({b1, b2, b3});
        }
    std::vector<Rat> glued;
    for (const auto& t : triples) {
      try {
        glued.push_back(stack_glue_n(im, partition, t));
      } catch (const std::exception& e) {
        ok = false;
        why = e.what();
        break;
      }
    }
    for (std::size_t i = 0; i < triples.size() && ok; ++i)
      for (std::size_t j = 0; j < triples.size() && ok; ++j) {
        bool le = true;
        for (int k = 0; k < 3; ++k) le = le && triples[i][k] <= triples[j][k];
        if (le && !(glued[i] <= glued[j])) {
          ok = false;
          why = "monotonicity fails";
        }
      }
    c.result("stack-three-pieces", ok, why);
  }
}

// ---------------------------------------------------------------------------
// urysohn (acceptance 8)

void run_urysohn(Collector& c) {
  const int samples = defaulted(c.params.samples, 50);
  const int depth = defaulted(c.params.depth, 6);
  const int bound = defaulted(c.params.max_size, 6);
  {
    Gen gen(c.params.seed);
    bool ok = true;
    std::string why;
    for (int it = 0; it < samples && ok; ++it) {
      const int den = 1 << depth;
      int ky = gen.uniform(0, den - 1);
      int kx = gen.uniform(ky + 1, den);
      const Rat y(ky, den), x(kx, den);
      const auto u = urysohn_separate_interval(y, x, depth);
      if (!u.postcondition_ok || !u.inf_ok) {
        ok = false;
        why = "failed at y=" + y.str() + " x=" + x.str();
      }
      if (ok && (u.f.eval(x) != Rat(1) || u.f.eval(y) != Rat(0))) {
        ok = false;
        why = "clamp endpoints wrong at y=" + y.str() + " x=" + x.str();
      }
    }
    c.result("urysohn-interval", ok,
             ok ? std::to_string(samples) + " dyadic pairs at depth " + std::to_string(depth)
                : why);
  }
  {
    bool ok = true;
    int count = 0;
    std::string why;
    Json payload;
    for (const auto& x : lattices_up_to(bound))
      for (const auto& pair : builtin_doctrines()) {
        if (!is_continuous(x, pair.phi)) continue;
        const auto rel = waydown(x, pair.phi);
        for (int xe = 0; xe < x.size() && ok; ++xe)
          for (int ye : mask_elements(rel.waydown[xe])) {
            ++count;
            const auto u = urysohn_separate(x, pair.phi, ye, xe, 3);
            if (!u.postcondition_ok || !u.meets_ok) {
              ok = false;
              why = "failed on " + x.encode() + " pair (" + std::to_string(ye) + "," +
                    std::to_string(xe) + ") doctrine " + pair.phi.name;
              payload["poset"] = poset_to_json(x);
              payload["doctrine"] = pair.phi.name;
              break;
            }
          }
      }
    c.result("urysohn-finite", ok,
             ok ? std::to_string(count) + " way-below pairs separated exactly" : why, payload);
  }
  {
    // eta separation: every strict non-order pair is separated
    bool ok = true;
    int count = 0;
    for (const auto& x : lattices_up_to(std::min(bound, 5)))
      for (const auto& pair : builtin_doctrines()) {
        if (!is_continuous(x, pair.phi)) continue;
        for (int a = 0; a < x.size(); ++a)
          for (int b = 0; b < x.size(); ++b) {
            if (x.leq(a, b)) continue;
            ++count;
            try {
              eta_separation(x, pair.phi, a, b, 3);
            } catch (const std::exception&) {
              ok = false;
            }
          }
      }
    c.result("urysohn-eta-separation", ok, std::to_string(count) + " non-order pairs separated");
  }
}

// ---------------------------------------------------------------------------
// gelfand-roundtrip (acceptance 9 and 10)

void run_gelfand(Collector& c) {
  const int bound = defaulted(c.params.max_size, 5);
  const int samples = defaulted(c.params.samples, 20);
  const IntervalModule im;

  {
    // kernel correspondence on the interval: 2 morphisms under directed,
    // 3 under all
    const auto two = morphisms_to_I(im, doctrine_pair_by_name("directed"));
    const auto three = morphisms_to_I(im, doctrine_pair_by_name("all"));
    bool ok = two.size() == 2 && three.size() == 3;
    for (const auto& mor : three)
      for (int k = 0; k <= 8; ++k) {
        const Rat a(k, 8);
        if ((mor(a) == Rat(1)) != mor.filter.member(a)) ok = false;
      }
    c.result("gelfand-interval-kernels", ok,
             "directed: " + std::to_string(two.size()) + ", all: " + std::to_string(three.size()));
  }

  {
    // finite-scale eta isomorphism: morphisms of the dual function module
    // biject with the lattice, as evaluations
    bool ok = true;
    int tested = 0;
    std::string why;
    Json payload;
    for (const auto& pair : builtin_doctrines()) {
      for (const auto& x : lattices_up_to(bound)) {
        if (!is_continuous(x, pair.phi)) continue;
        ++tested;
        const FunctionModule fm(x, pair);
        auto morphisms = morphisms_to_I(fm);
        if ((int)morphisms.size() != x.size()) {
          ok = false;
          why = "expected " + std::to_string(x.size()) + " morphisms, got " +
                std::to_string(morphisms.size()) + " on " + x.encode() + " (" + pair.phi.name + ")";
          payload["poset"] = poset_to_json(x);
          payload["pair"] = pair.phi.name;
          break;
        }
        // each morphism is an evaluation at a unique element, in order
        const auto supports = fm.indicator_supports();
        std::vector<int> assigned;
        for (const auto& mor : morphisms) {
          int which = -1;
          for (int e = 0; e < x.size() && which < 0; ++e) {
            bool matches = true;
            for (Mask s : supports) {
              const auto chi = fm.indicator(s);
              if ((mor(chi) == Rat(1)) != (chi[e] == Rat(1))) {
                matches = false;
                break;
              }
            }
            if (matches) which = e;
          }
          if (which < 0) {
            ok = false;
            why = "morphism is not an evaluation on " + x.encode();
            break;
          }
          assigned.push_back(which);
        }
        std::vector<int> sorted = assigned;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        if (ok && (int)sorted.size() != x.size()) {
          ok = false;
          why = "evaluations repeat on " + x.encode();
        }
        // order-isomorphism: filter inclusion mirrors the lattice order
        for (std::size_t k = 0; k < morphisms.size() && ok; ++k)
          for (std::size_t l = 0; l < morphisms.size() && ok; ++l) {
            bool included = true;
            for (Mask s : supports) {
              const auto chi = fm.indicator(s);
              if (morphisms[k].filter.member(fm, chi) && !morphisms[l].filter.member(fm, chi))
                included = false;
            }
            if (included != x.leq(assigned[k], assigned[l])) {
              ok = false;
              why = "filter inclusion disagrees with the order on " + x.encode();
            }
          }
        // functional agreement on sampled carrier elements
        if (x.size() >= 2) {
          Gen gen(c.params.seed + tested);
          for (int it = 0; it < 10 && ok; ++it) {
            const auto a = gen.function_elem(fm);
            for (std::size_t k = 0; k < morphisms.size(); ++k)
              if (morphisms[k](a) != a[assigned[k]]) {
                ok = false;
                why = "morphism value differs from evaluation on " + x.encode();
                break;
              }
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    c.result("gelfand-function-kernels", ok,
             ok ? std::to_string(tested) + " duals in order-bijection with their lattices" : why,
             payload);
  }

  {
    // closed filter generation matches the closed forms
    bool ok = true;
    ok = ok && closed_invariant_filter(im, doctrine_pair_by_name("directed"), {Rat(1)}).kind ==
                   IntervalFilterKind::one;
    ok = ok && closed_invariant_filter(im, doctrine_pair_by_name("directed"), {Rat(1, 2)}).kind ==
                   IntervalFilterKind::everything;
    ok = ok && closed_invariant_filter(im, doctrine_pair_by_name("all"), {}).kind ==
                   IntervalFilterKind::empty;
    const FunctionModule fm(FinPoset::chain(2), doctrine_pair_by_name("directed"));
    // generator (0,1): everything with value 1 at the top, i.e. the carrier
    const auto filt = closed_invariant_filter(fm, {FunctionModule::Element{Rat(0), Rat(1)}});
    ok = ok && filt.member(fm, FunctionModule::Element{Rat(1, 2), Rat(1)});
    ok = ok && filt.member(fm, FunctionModule::Element{Rat(0), Rat(1)});
    // generator (1,1): only the top itself
    const auto top_only = closed_invariant_filter(fm, {FunctionModule::Element{Rat(1), Rat(1)}});
    ok = ok && top_only.member(fm, FunctionModule::Element{Rat(1), Rat(1)});
    ok = ok && !top_only.member(fm, FunctionModule::Element{Rat(1, 2), Rat(1)});
    c.result("gelfand-closed-filters", ok, "generated filters match their closed forms");
  }

  {
    // iota is an order embedding on samples
    Gen gen(c.params.seed);
    std::vector<Rat> pts;
    for (int k = 0; k < 8; ++k) pts.push_back(gen.rat01(16));
    const auto rep = iota_embedding_check(im, pts, 8, 4);
    bool ok = rep.ok();
    const FunctionModule fm(FinPoset::diamond(), doctrine_pair_by_name("directed"));
    std::vector<FunctionModule::Element> elems;
    for (int k = 0; k < 6; ++k) elems.push_back(gen.function_elem(fm));
    const auto rep2 = iota_embedding_check(fm, elems, 8, 4);
    ok = ok && rep2.ok();
    c.result("gelfand-iota-embedding", ok,
             std::to_string(rep.pairs_checked + rep2.pairs_checked) + " pairs, " +
                 std::to_string(rep.witnesses.size() + rep2.witnesses.size()) + " witnesses");
  }

  {
    // approximate inverse within 2/n, exactly (acceptance 10)
    Gen gen(c.params.seed + 7);
    bool ok = true;
    std::string why;
    int runs = 0;
    const auto& directed = doctrine_pair_by_name("directed");
    std::vector<FunctionModule> fmods;
    fmods.emplace_back(FinPoset::chain(2), directed);
    fmods.emplace_back(FinPoset::chain(3), directed);
    fmods.emplace_back(FinPoset::diamond(), directed);
    for (int it = 0; it < samples && ok; ++it) {
      for (const int n : {2, 4, 8, 16}) {
        // interval instance
        {
          const Rat a0 = gen.rat01(32);
          std::vector<Rat> grid_least{im.top()};
          for (int i = 1; i <= n; ++i) grid_least.push_back(im.orbit_closure_least(a0, Rat(i, n)));
          const auto res = approximate_inverse(im, grid_least, n);
          ++runs;
          if (!res.containments_ok || !(dist(im, res.element, a0) <= Rat(2, n))) {
            ok = false;
            why = "interval a0=" + a0.str() + " n=" + std::to_string(n);
            break;
          }
        }
        // function instances
        const auto& fm = fmods[it % fmods.size()];
        const auto a0 = gen.function_elem(fm);
        std::vector<FunctionModule::Element> grid_least{fm.top()};
        for (int i = 1; i <= n; ++i) grid_least.push_back(fm.orbit_closure_least(a0, Rat(i, n)));
        const auto res = approximate_inverse(fm, grid_least, n);
        ++runs;
        if (!res.containments_ok || !(dist(fm, res.element, a0) <= Rat(2, n))) {
          ok = false;
          why = "function module " + fm.describe(a0) + " n=" + std::to_string(n);
          break;
        }
      }
    }
    c.result("gelfand-approx-inverse", ok,
             ok ? std::to_string(runs) + " reconstructions within 2/n" : why);
  }
}

}  // namespace

bool SuiteReport::all_pass() const {
  for (const auto& ch : checks)
    if (!ch.pass) return false;
  return true;
}

const CheckResult* SuiteReport::find(const std::string& name) const {
  for (const auto& ch : checks)
    if (ch.name == name) return &ch;
  return nullptr;
}

nlohmann::json SuiteReport::to_json() const {
  Json checks_json = Json::array();
  for (const auto& ch : checks) {
    Json entry{{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}};
    if (!ch.pass) entry["counterexample"] = ch.counterexample;
    checks_json.push_back(std::move(entry));
  }
  return Json{{"suite", suite},
              {"params", params_json(params)},
              {"checks", std::move(checks_json)},
              {"pass", all_pass()},
              {"wall_seconds", wall_seconds}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "saturation", "sound4",      "cts-equiv", "interpolation",  "hms",
      "birkhoff",   "umod-metric", "stack",     "urysohn",        "gelfand-roundtrip"};
  return names;
}

SuiteReport run_suite(const std::string& name, SuiteParams params) {
  Collector c{name, params, {}};
  const auto start = std::chrono::steady_clock::now();
  if (name == "saturation")
    run_saturation(c);
  else if (name == "sound4")
    run_sound4(c);
  else if (name == "cts-equiv")
    run_cts_equiv(c);
  else if (name == "interpolation")
    run_interpolation(c);
  else if (name == "hms")
    run_hms(c);
  else if (name == "birkhoff")
    run_birkhoff(c);
  else if (name == "umod-metric")
    run_umod_metric(c);
  else if (name == "stack")
    run_stack(c);
  else if (name == "urysohn")
    run_urysohn(c);
  else if (name == "gelfand-roundtrip")
    run_gelfand(c);
  else
    throw std::invalid_argument("unknown suite '" + name + "'");
  SuiteReport rep;
  rep.suite = name;
  rep.params = params;
  rep.checks = std::move(c.checks);
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

CheckResult replay(const nlohmann::json& counterexample) {
  if (!counterexample.contains("suite") || !counterexample.contains("check"))
    throw std::invalid_argument("replay: payload must carry suite and check fields");
  SuiteParams params;
  if (counterexample.contains("params")) {
    const auto& p = counterexample["params"];
    params.max_size = p.value("max_size", -1);
    params.samples = p.value("samples", -1);
    params.grid = p.value("grid", -1);
    params.depth = p.value("depth", -1);
    params.seed = p.value("seed", (std::uint64_t)424242);
  }
  const auto report = run_suite(counterexample["suite"].get<std::string>(), params);
  const auto* check = report.find(counterexample["check"].get<std::string>());
  if (!check) throw std::invalid_argument("replay: no such check in suite");
  return *check;
}

}  // namespace ordkit
