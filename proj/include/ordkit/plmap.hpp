#ifndef ORDKIT_PLMAP_HPP
#define ORDKIT_PLMAP_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ordkit/rational.hpp"

namespace ordkit {

struct PLError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Monotone piecewise-linear self-map of [0,1] with exact rational
    breakpoints.  Jump discontinuities are allowed: the value at a breakpoint
    is stored separately from the one-sided limits, so right adjoints of
    surjections are first-class values.

    Data layout: breakpoints xs[0]=0 < ... < xs[k]=1; at[i] is the value AT
    xs[i]; the open segment (xs[i], xs[i+1]) is affine from right limit y0[i]
    to left limit y1[i].  Monotonicity: at[i] <= y0[i] <= y1[i] <= at[i+1].
    Normal form merges collinear continuous segments; equality is structural
    equality of the normal form. */
class PLMap {
 public:
  PLMap();  // identity

  const std::vector<Rat>& breakpoints() const { return xs_; }
  const Rat& value_at(int i) const { return at_[i]; }
  const Rat& right_limit(int i) const { return y0_[i]; }  // at xs[i], i < segments
  const Rat& left_limit(int i) const { return y1_[i]; }   // at xs[i+1]
  int segments() const { return (int)y0_.size(); }

  Rat eval(const Rat& x) const;
  /// One-sided limits; x must be away from the corresponding endpoint.
  Rat limit_from_right(const Rat& x) const;
  Rat limit_from_left(const Rat& x) const;

  bool is_continuous() const;
  /// Value equals the right limit at every point below 1 (preserves infima).
  bool is_inf_preserving() const;

  friend bool operator==(const PLMap& a, const PLMap& b) {
    return a.xs_ == b.xs_ && a.at_ == b.at_ && a.y0_ == b.y0_ && a.y1_ == b.y1_;
  }
  friend bool operator!=(const PLMap& a, const PLMap& b) { return !(a == b); }

  std::string str() const;

  // Constructors.
  static PLMap identity();
  static PLMap constant(const Rat& c);
  /// x -> min(x + r, 1)
  static PLMap trunc_add(const Rat& r);
  /// x -> max(x - r, 0)
  static PLMap trunc_sub(const Rat& r);
  /// Linear iso of [lo,hi] onto [0,1], 0 below lo and 1 above hi.
  static PLMap piece_iso(const Rat& lo, const Rat& hi);
  /// Continuous map through the given (x, y) points; first x=0, last x=1.
  static PLMap from_points(const std::vector<std::pair<Rat, Rat>>& pts);
  /// Raw data, validated and normalized.
  static PLMap from_data(std::vector<Rat> xs, std::vector<Rat> at, std::vector<Rat> y0,
                         std::vector<Rat> y1);
  /// Step map: low on [0, jump), value_at_jump at jump, high on (jump, 1].
  static PLMap step(const Rat& jump, const Rat& low, const Rat& value_at_jump, const Rat& high);

  /** Rebuilds a PL map from an exact evaluator.  candidates must contain 0, 1
      and every kink or jump point of f; f is sampled exactly at points and at
      two interior rationals per cell to recover each affine piece. */
  static PLMap from_function(std::vector<Rat> candidates, const std::function<Rat(const Rat&)>& f);

 private:
  std::vector<Rat> xs_, at_, y0_, y1_;
  void validate() const;
  void normalize();
};

struct PLClass {
  bool in_U = false;      // surjective complete-lattice homomorphism
  bool in_Uhat = false;   // continuous, fixes 1
  bool continuous = false;
  bool surjective = false;
};

/// For monotone self-maps of [0,1]: surjective iff continuous with both
/// endpoints fixed.
PLClass classify(const PLMap& u);

/// u after v (u ∘ v).
PLMap compose(const PLMap& u, const PLMap& v);

/// u^x(y) = max{x | u(x) <= y}; requires u in U.  The adjunction
/// u(x) <= y iff x <= u^x(y) is checked on the breakpoint grid.
PLMap right_adjoint_pl(const PLMap& u);

PLMap pointwise_min(const PLMap& u, const PLMap& v);
PLMap pointwise_max(const PLMap& u, const PLMap& v);

/// u <= v everywhere on [0,1] (exact).
bool pl_leq(const PLMap& u, const PLMap& v);

/// sup over x of u(x) ∸ v(x); the l-infinity quasimetric on maps.
Rat linf_rho(const PLMap& u, const PLMap& v);

/// canonical_r_iso(r, lower) = piece_iso(0, r); upper = piece_iso(r, 1).
enum class IsoSide { lower, upper };
PLMap canonical_r_iso(const Rat& r, IsoSide side);

}  // namespace ordkit

#endif
