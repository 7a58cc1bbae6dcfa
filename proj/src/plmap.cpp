#include "ordkit/plmap.hpp"

#include <algorithm>
#include <sstream>

namespace ordkit {

namespace {
const Rat kZero(0), kOne(1);
}

PLMap::PLMap() : xs_{kZero, kOne}, at_{kZero, kOne}, y0_{kZero}, y1_{kOne} {}

void PLMap::validate() const {
  const int k = (int)xs_.size() - 1;
  if (k < 1 || xs_.front() != kZero || xs_.back() != kOne)
    throw PLError("PLMap: breakpoints must run from 0 to 1");
  if ((int)at_.size() != k + 1 || (int)y0_.size() != k || (int)y1_.size() != k)
    throw PLError("PLMap: inconsistent piece data");
  for (int i = 0; i < k; ++i)
    if (!(xs_[i] < xs_[i + 1])) throw PLError("PLMap: breakpoints not increasing");
  for (const Rat& v : at_)
    if (!in_unit(v)) throw PLError("PLMap: value outside [0,1]");
  for (int i = 0; i < k; ++i)
    if (!in_unit(y0_[i]) || !in_unit(y1_[i])) throw PLError("PLMap: limit outside [0,1]");
  for (int i = 0; i < k; ++i) {
    if (!(at_[i] <= y0_[i]) || !(y0_[i] <= y1_[i]) || !(y1_[i] <= at_[i + 1]))
      throw PLError("PLMap: not monotone near breakpoint " + xs_[i].str());
  }
}

void PLMap::normalize() {
  validate();
  std::vector<Rat> xs{xs_.front()}, at{at_.front()}, y0, y1;
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
    // Drop breakpoint xs_[i] when the map is continuous there and the two
    // open segments lie on one line.
    if (!y0.empty() && y1.back() == at.back() && at.back() == y0_[i]) {
      const Rat& seg_start = xs[xs.size() - 2];
      const Rat& seg_end = xs.back();  // == xs_[i]
      const Rat lhs = (y1.back() - y0.back()) * (xs_[i + 1] - seg_end);
      const Rat rhs = (y1_[i] - y0_[i]) * (seg_end - seg_start);
      if (lhs == rhs) {
        y1.back() = y1_[i];
        xs.back() = xs_[i + 1];
        at.back() = at_[i + 1];
        continue;
      }
    }
    y0.push_back(y0_[i]);
    y1.push_back(y1_[i]);
    xs.push_back(xs_[i + 1]);
    at.push_back(at_[i + 1]);
  }
  xs_ = std::move(xs);
  at_ = std::move(at);
  y0_ = std::move(y0);
  y1_ = std::move(y1);
  validate();
}

Rat PLMap::eval(const Rat& x) const {
  if (!in_unit(x)) throw PLError("PLMap::eval: argument outside [0,1]");
  for (std::size_t i = 0; i < xs_.size(); ++i)
    if (x == xs_[i]) return at_[i];
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
    if (xs_[i] < x && x < xs_[i + 1])
      return y0_[i] + (y1_[i] - y0_[i]) * (x - xs_[i]) / (xs_[i + 1] - xs_[i]);
  throw PLError("PLMap::eval: unreachable");
}

Rat PLMap::limit_from_right(const Rat& x) const {
  if (!(x < kOne)) throw PLError("limit_from_right: needs x < 1");
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
    if (x == xs_[i]) return y0_[i];
    if (xs_[i] < x && x < xs_[i + 1])
      return y0_[i] + (y1_[i] - y0_[i]) * (x - xs_[i]) / (xs_[i + 1] - xs_[i]);
  }
  throw PLError("limit_from_right: unreachable");
}

Rat PLMap::limit_from_left(const Rat& x) const {
  if (!(kZero < x)) throw PLError("limit_from_left: needs x > 0");
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
    if (x == xs_[i + 1]) return y1_[i];
    if (xs_[i] < x && x < xs_[i + 1])
      return y0_[i] + (y1_[i] - y0_[i]) * (x - xs_[i]) / (xs_[i + 1] - xs_[i]);
  }
  throw PLError("limit_from_left: unreachable");
}

bool PLMap::is_continuous() const {
  const int k = segments();
  for (int i = 0; i < k; ++i) {
    if (at_[i] != y0_[i]) return false;
    if (y1_[i] != at_[i + 1]) return false;
  }
  return true;
}

bool PLMap::is_inf_preserving() const {
  for (int i = 0; i < segments(); ++i)
    if (at_[i] != y0_[i]) return false;
  return true;
}

std::string PLMap::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    os << "(" << xs_[i].str() << "|" << at_[i].str() << ")";
    if (i + 1 < xs_.size()) os << " [" << y0_[i].str() << ".." << y1_[i].str() << "] ";
  }
  return os.str();
}

PLMap PLMap::identity() { return PLMap(); }

PLMap PLMap::constant(const Rat& c) {
  if (!in_unit(c)) throw PLError("PLMap::constant: outside [0,1]");
  return from_data({kZero, kOne}, {c, c}, {c}, {c});
}

PLMap PLMap::trunc_add(const Rat& r) {
  if (!in_unit(r)) throw PLError("trunc_add: outside [0,1]");
  if (r == kZero) return identity();
  if (r == kOne) return constant(kOne);
  return from_points({{kZero, r}, {kOne - r, kOne}, {kOne, kOne}});
}

PLMap PLMap::trunc_sub(const Rat& r) {
  if (!in_unit(r)) throw PLError("trunc_sub: outside [0,1]");
  if (r == kZero) return identity();
  if (r == kOne) return constant(kZero);
  return from_points({{kZero, kZero}, {r, kZero}, {kOne, kOne - r}});
}

PLMap PLMap::piece_iso(const Rat& lo, const Rat& hi) {
  if (!(kZero <= lo && lo < hi && hi <= kOne)) throw PLError("piece_iso: need 0 <= lo < hi <= 1");
  std::vector<std::pair<Rat, Rat>> pts;
  pts.push_back({kZero, kZero});
  if (lo != kZero) pts.push_back({lo, kZero});
  if (hi != kOne) pts.push_back({hi, kOne});
  pts.push_back({kOne, kOne});
  return from_points(pts);
}

PLMap PLMap::from_points(const std::vector<std::pair<Rat, Rat>>& pts) {
  if (pts.size() < 2) throw PLError("from_points: need at least 2 points");
  std::vector<Rat> xs, at, y0, y1;
  for (const auto& [x, y] : pts) {
    xs.push_back(x);
    at.push_back(y);
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    y0.push_back(pts[i].second);
    y1.push_back(pts[i + 1].second);
  }
  return from_data(std::move(xs), std::move(at), std::move(y0), std::move(y1));
}

PLMap PLMap::from_data(std::vector<Rat> xs, std::vector<Rat> at, std::vector<Rat> y0,
                       std::vector<Rat> y1) {
  PLMap m;
  m.xs_ = std::move(xs);
  m.at_ = std::move(at);
  m.y0_ = std::move(y0);
  m.y1_ = std::move(y1);
  m.normalize();
  return m;
}

PLMap PLMap::step(const Rat& jump, const Rat& low, const Rat& value_at_jump, const Rat& high) {
  if (!(kZero < jump && jump < kOne)) throw PLError("step: jump must be interior");
  return from_data({kZero, jump, kOne}, {low, value_at_jump, high}, {low, high}, {low, high});
}

PLMap PLMap::from_function(std::vector<Rat> candidates,
                           const std::function<Rat(const Rat&)>& f) {
  candidates.push_back(kZero);
  candidates.push_back(kOne);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  if (!(candidates.front() == kZero) || !(candidates.back() == kOne))
    throw PLError("from_function: candidates outside [0,1]");

  const int k = (int)candidates.size() - 1;
  std::vector<Rat> at(k + 1), y0(k), y1(k);
  for (int i = 0; i <= k; ++i) at[i] = f(candidates[i]);
  for (int i = 0; i < k; ++i) {
    const Rat &p = candidates[i], &q = candidates[i + 1];
    const Rat sixth = (q - p) / Rat(6);
    const Rat m1 = p + sixth + sixth, m2 = q - sixth - sixth;
    const Rat v1 = f(m1), v2 = f(m2);
    const Rat slope = (v2 - v1) / (m2 - m1);
    y0[i] = v1 - slope * (m1 - p);
    y1[i] = v1 + slope * (q - m1);
    // The candidate list must contain every kink and jump; two off-center
    // probes catch a cell that is not actually affine.
    for (const Rat& probe : {p + sixth, q - sixth})
      if (f(probe) != y0[i] + slope * (probe - p))
        throw PLError("from_function: cell (" + p.str() + "," + q.str() + ") is not affine");
  }
  return from_data(std::move(candidates), std::move(at), std::move(y0), std::move(y1));
}

PLClass classify(const PLMap& u) {
  PLClass c;
  c.continuous = u.is_continuous();
  const Rat a0 = u.eval(kZero), a1 = u.eval(kOne);
  c.surjective = c.continuous && a0 == kZero && a1 == kOne;
  c.in_U = c.surjective;
  c.in_Uhat = c.continuous && a1 == kOne;
  return c;
}

namespace {

// Candidate x where the open segments of u and v can stop being jointly
// affine: all breakpoints of both, plus v-preimages of u's breakpoints.
std::vector<Rat> compose_candidates(const PLMap& u, const PLMap& v) {
  std::vector<Rat> cand = v.breakpoints();
  for (int i = 0; i < v.segments(); ++i) {
    const Rat &p = v.breakpoints()[i], &q = v.breakpoints()[i + 1];
    const Rat &a = v.right_limit(i), &b = v.left_limit(i);
    if (a == b) continue;
    for (const Rat& c : u.breakpoints())
      if (a < c && c < b) cand.push_back(p + (c - a) * (q - p) / (b - a));
  }
  return cand;
}

}  // namespace

PLMap compose(const PLMap& u, const PLMap& v) {
  return PLMap::from_function(compose_candidates(u, v),
                              [&](const Rat& x) { return u.eval(v.eval(x)); });
}

namespace {

Rat max_preimage(const PLMap& u, const Rat& y) {
  const auto& xs = u.breakpoints();
  const int k = u.segments();
  for (int i = k; i >= 0; --i) {
    if (u.value_at(i) <= y) return xs[i];
    if (i == 0) break;
    const Rat &a = u.right_limit(i - 1), &b = u.left_limit(i - 1);
    if (a <= y && y < b)
      return xs[i - 1] + (y - a) * (xs[i] - xs[i - 1]) / (b - a);
  }
  throw PLError("max_preimage: no point below " + y.str());
}

}  // namespace

PLMap right_adjoint_pl(const PLMap& u) {
  if (!classify(u).in_U) throw PLError("right_adjoint_pl: map is not in U");
  std::vector<Rat> cand;
  for (const Rat& x : u.breakpoints()) cand.push_back(u.eval(x));
  PLMap adj = PLMap::from_function(std::move(cand), [&](const Rat& y) { return max_preimage(u, y); });
  // Adjunction check on the joint breakpoint grid.
  for (const Rat& x : u.breakpoints())
    for (const Rat& y : adj.breakpoints())
      if ((u.eval(x) <= y) != (x <= adj.eval(y)))
        throw PLError("right_adjoint_pl: adjunction failed at (" + x.str() + "," + y.str() + ")");
  return adj;
}

namespace {

std::vector<Rat> joint_candidates(const PLMap& u, const PLMap& v, bool with_crossings) {
  std::vector<Rat> cand = u.breakpoints();
  for (const Rat& x : v.breakpoints()) cand.push_back(x);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  if (!with_crossings) return cand;
  std::vector<Rat> out = cand;
  for (std::size_t i = 0; i + 1 < cand.size(); ++i) {
    const Rat &p = cand[i], &q = cand[i + 1];
    const Rat third = (q - p) / Rat(3);
    const Rat m1 = p + third, m2 = p + third + third;
    const Rat u1 = u.eval(m1), u2 = u.eval(m2);
    const Rat v1 = v.eval(m1), v2 = v.eval(m2);
    const Rat su = (u2 - u1) / (m2 - m1), sv = (v2 - v1) / (m2 - m1);
    if (su == sv) continue;
    const Rat x = m1 + (v1 - u1) / (su - sv);
    if (p < x && x < q) out.push_back(x);
  }
  return out;
}

}  // namespace

PLMap pointwise_min(const PLMap& u, const PLMap& v) {
  return PLMap::from_function(joint_candidates(u, v, true),
                              [&](const Rat& x) { return rat_min(u.eval(x), v.eval(x)); });
}

PLMap pointwise_max(const PLMap& u, const PLMap& v) {
  return PLMap::from_function(joint_candidates(u, v, true),
                              [&](const Rat& x) { return rat_max(u.eval(x), v.eval(x)); });
}

bool pl_leq(const PLMap& u, const PLMap& v) {
  const auto cand = joint_candidates(u, v, false);
  for (const Rat& x : cand)
    if (!(u.eval(x) <= v.eval(x))) return false;
  for (std::size_t i = 0; i + 1 < cand.size(); ++i) {
    if (!(u.limit_from_right(cand[i]) <= v.limit_from_right(cand[i]))) return false;
    if (!(u.limit_from_left(cand[i + 1]) <= v.limit_from_left(cand[i + 1]))) return false;
  }
  return true;
}

Rat linf_rho(const PLMap& u, const PLMap& v) {
  const auto cand = joint_candidates(u, v, false);
  Rat best(0);
  for (const Rat& x : cand) best = rat_max(best, dot_minus(u.eval(x), v.eval(x)));
  for (std::size_t i = 0; i + 1 < cand.size(); ++i) {
    best = rat_max(best, dot_minus(u.limit_from_right(cand[i]), v.limit_from_right(cand[i])));
    best = rat_max(best, dot_minus(u.limit_from_left(cand[i + 1]), v.limit_from_left(cand[i + 1])));
  }
  return best;
}

PLMap canonical_r_iso(const Rat& r, IsoSide side) {
  if (!(Rat(0) < r && r < Rat(1)))
    throw PLError("canonical_r_iso: r must be strictly between 0 and 1");
  return side == IsoSide::lower ? PLMap::piece_iso(Rat(0), r) : PLMap::piece_iso(r, Rat(1));
}

}  // namespace ordkit
