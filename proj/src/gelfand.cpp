#include "ordkit/gelfand.hpp"

#include <algorithm>

namespace ordkit {

namespace {

int grid_size(int depth) {
  if (depth < 0 || depth > 10) throw GelfandError("depth out of range");
  return 1 << depth;
}

}  // namespace

std::vector<int> interpolate_chain(const FinPoset& x, const Doctrine& d, int y_elem, int x_elem,
                                   int depth) {
  const auto rel = waydown(x, d);
  if (!rel.way(y_elem, x_elem))
    throw GelfandError("interpolate_chain: y is not way below x");
  const int n = grid_size(depth);
  std::vector<int> g(n + 1, -1);
  g[0] = y_elem;
  g[n] = x_elem;

  // Least interpolant, ties broken by index.
  const auto interpolant = [&](int lo, int hi) {
    int best = -1;
    for (int w = 0; w < x.size(); ++w) {
      if (!rel.way(lo, w) || !rel.way(w, hi)) continue;
      if (best < 0 || x.lt(w, best)) best = w;
    }
    if (best < 0) throw GelfandError("interpolate_chain: interpolation failed");
    return best;
  };
  // Fill midpoints level by level.
  for (int span = n; span > 1; span /= 2)
    for (int lo = 0; lo + span <= n; lo += span) {
      const int mid = lo + span / 2;
      if (g[mid] < 0) g[mid] = interpolant(g[lo], g[lo + span]);
    }
  for (int k = 0; k < n; ++k)
    if (!rel.way(g[k], g[k + 1])) throw GelfandError("interpolate_chain: chain not way-increasing");
  return g;
}

std::vector<Rat> interpolate_chain_interval(const Rat& y, const Rat& x, int depth) {
  if (!in_unit(y) || !in_unit(x) || !(y <= x))
    throw GelfandError("interpolate_chain_interval: need 0 <= y <= x <= 1");
  const int n = grid_size(depth);
  std::vector<Rat> g(n + 1);
  for (int k = 0; k <= n; ++k) g[k] = y + Rat(k, n) * (x - y);
  return g;
}

UrysohnFinite urysohn_separate(const FinPoset& x, const Doctrine& d, int y_elem, int x_elem,
                               int depth) {
  const auto g = interpolate_chain(x, d, y_elem, x_elem, depth);
  const int n = grid_size(depth);
  const auto rel = waydown(x, d);

  // f+ at a grid point is the join of the full dyadic chain strictly below
  // it.  Deeper refinements between two grid values stabilize at the fixpoint
  // of the least-interpolant step, so the limit is computable exactly.
  const auto tail_sup = [&](int lo, int hi) {
    int v = lo;
    for (;;) {
      int best = -1;
      for (int w = 0; w < x.size(); ++w)
        if (rel.way(v, w) && rel.way(w, hi) && (best < 0 || x.lt(w, best))) best = w;
      if (best < 0) throw GelfandError("urysohn_separate: interpolation failed");
      if (best == v) return v;
      v = best;
    }
  };

  UrysohnFinite out;
  out.depth = depth;
  out.adjoint.resize(n + 1);
  out.adjoint[0] = *x.bottom();
  for (int k = 1; k <= n; ++k)
    out.adjoint[k] = *x.join(out.adjoint[k - 1], tail_sup(g[k - 1], g[k]));

  // f(z) = largest grid value whose adjoint image sits below z.
  out.table.resize(x.size());
  for (int z = 0; z < x.size(); ++z) {
    int best = 0;
    for (int k = 0; k <= n; ++k)
      if (x.leq(out.adjoint[k], z)) best = k;
    out.table[z] = Rat(best, n);
  }

  // Meet preservation, exact and exhaustive.
  out.meets_ok = true;
  const Mask full = x.full_mask();
  for (Mask s = 0; out.meets_ok; ++s) {
    Rat img(1);
    for (int i : mask_elements(s)) img = rat_min(img, out.table[i]);
    if (!(out.table[*x.meet_all(s)] == img)) out.meets_ok = false;
    if (s == full) break;
  }
  // Phi-join preservation.
  out.phi_joins_ok = true;
  for (Mask s = 0; out.phi_joins_ok; ++s) {
    if (d.member(x, s)) {
      Rat img(0);
      for (int i : mask_elements(s)) img = rat_max(img, out.table[i]);
      if (!(out.table[*x.join_all(s)] == img)) out.phi_joins_ok = false;
    }
    if (s == full) break;
  }
  out.postcondition_ok = x.leq(y_elem, out.adjoint[n]) && x.leq(out.adjoint[n], x_elem);
  return out;
}

UrysohnInterval urysohn_separate_interval(const Rat& y, const Rat& x, int depth) {
  if (!in_unit(y) || !in_unit(x) || !(y <= x))
    throw GelfandError("urysohn_separate_interval: need 0 <= y <= x <= 1");
  const int n = grid_size(depth);
  UrysohnInterval out;
  out.depth = depth;
  out.adjoint.resize(n + 1);
  // The midpoint chain is dense and linear, so the limit left adjoint is
  // f+(r) = y + r(x - y) for r > 0; f+(0) is the empty join, the bottom.
  out.adjoint[0] = Rat(0);
  for (int k = 1; k <= n; ++k) out.adjoint[k] = y + Rat(k, n) * (x - y);

  if (y == x) {
    // degenerate chain: f is the indicator of [y, 1]
    if (y == Rat(0))
      out.f = PLMap::constant(Rat(1));
    else if (y == Rat(1))
      out.f = PLMap::from_data({Rat(0), Rat(1)}, {Rat(0), Rat(1)}, {Rat(0)}, {Rat(0)});
    else
      out.f = PLMap::step(y, Rat(0), Rat(1), Rat(1));
  } else {
    // exact right adjoint: clamp((z - y)/(x - y))
    std::vector<std::pair<Rat, Rat>> pts;
    pts.push_back({Rat(0), Rat(0)});
    if (y != Rat(0)) pts.push_back({y, Rat(0)});
    if (x != Rat(1)) pts.push_back({x, Rat(1)});
    pts.push_back({Rat(1), Rat(1)});
    out.f = PLMap::from_points(pts);
  }
  out.inf_ok = out.f.is_inf_preserving();
  out.postcondition_ok = y <= out.adjoint[n] && out.adjoint[n] <= x;
  // transpose adjunction on the grid: f+(k/n) <= z iff k/n <= f(z)
  for (int k = 0; k <= n && out.postcondition_ok; ++k)
    for (int j = 0; j <= n; ++j) {
      const Rat z(j, n);
      if ((out.adjoint[k] <= z) != (Rat(k, n) <= out.f.eval(z))) out.postcondition_ok = false;
    }
  return out;
}

UrysohnFinite eta_separation(const FinPoset& lat, const Doctrine& d, int x_elem, int y_elem,
                             int depth) {
  if (lat.leq(x_elem, y_elem)) throw GelfandError("eta_separation: x is below y");
  const auto rel = waydown(lat, d);
  int z = -1;
  for (int w : mask_elements(rel.waydown[x_elem]))
    if (!lat.leq(w, y_elem)) {
      z = w;
      break;
    }
  if (z < 0) throw GelfandError("eta_separation: no way-below witness (lattice not continuous?)");
  UrysohnFinite f = urysohn_separate(lat, d, z, x_elem, depth);
  if (!(f.table[x_elem] == Rat(1)) || !(f.table[y_elem] < Rat(1)))
    throw GelfandError("eta_separation: morphism fails to separate");
  return f;
}

UrysohnInterval eta_separation_interval(const Rat& x, const Rat& y, int depth) {
  if (x <= y) throw GelfandError("eta_separation_interval: x is below y");
  const Rat z = (x + y) / Rat(2);
  UrysohnInterval f = urysohn_separate_interval(z, x, depth);
  if (!(f.f.eval(x) == Rat(1)) || !(f.f.eval(y) < Rat(1)))
    throw GelfandError("eta_separation_interval: morphism fails to separate");
  return f;
}

}  // namespace ordkit
