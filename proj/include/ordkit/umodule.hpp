#ifndef ORDKIT_UMODULE_HPP
#define ORDKIT_UMODULE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ordkit/doctrine.hpp"
#include "ordkit/plmap.hpp"
#include "ordkit/poset.hpp"
#include "ordkit/rational.hpp"

namespace ordkit {

struct ModuleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** The unit interval as a U-module: carrier is rational [0,1], the action is
    evaluation.  rho has the closed form a ∸ b. */
struct IntervalModule {
  using Element = Rat;

  bool is_element(const Element& a) const { return in_unit(a); }
  bool leq(const Element& a, const Element& b) const { return a <= b; }
  Element act(const PLMap& u, const Element& a) const { return u.eval(a); }
  bool has_binary_meets() const { return true; }
  bool has_top() const { return true; }
  Element meet(const Element& a, const Element& b) const { return rat_min(a, b); }
  Element top() const { return Rat(1); }
  Rat rho(const Element& a, const Element& b) const { return dot_minus(a, b); }
  // v'(b) <= u'(a) for all u', v' in U reduces to: b = 0 or a = 1.
  bool compatible(const Element& a, const Element& b) const {
    return b == Rat(0) || a == Rat(1);
  }
  std::string incompatibility_witness(const Element& a, const Element& b) const {
    return "v' = piece_iso(0," + b.str() + ") sends b to 1 while u' = piece_iso(" + a.str() +
           ",1) sends a to 0";
  }
  /// Least element of the closure of U_r(a) = {u(a) | u(r) = 1}; r > 0.
  Element orbit_closure_least(const Element& a, const Rat& r) const {
    if (!(Rat(0) < r && r <= Rat(1))) throw std::invalid_argument("orbit closure needs r in (0,1]");
    return a >= r ? Rat(1) : Rat(0);
  }
  /// Some r with act witnesses separating a from b when a is not below b.
  std::optional<Rat> separation_threshold(const Element& a, const Element& b) const {
    if (a <= b) return std::nullopt;
    return a;
  }
  std::string describe(const Element& a) const { return a.str(); }
};

/** Module of scale-valued morphisms on a finite complete lattice: value
    tables X -> [0,1] preserving all meets, plus whatever joins the doctrine
    pair forces (empty join when the empty poset indexes a join, binary joins
    when all nonempty posets do).  The action is postcomposition. */
class FunctionModule {
 public:
  using Element = std::vector<Rat>;

  FunctionModule(FinPoset lattice, DoctrinePair pair);

  const FinPoset& lattice() const { return x_; }
  const DoctrinePair& pair() const { return pair_; }
  bool requires_bottom_zero() const { return bottom_zero_; }
  bool requires_binary_joins() const { return binary_joins_; }

  bool is_element(const Element& a) const;
  void require_element(const Element& a) const;
  bool leq(const Element& a, const Element& b) const;
  Element act(const PLMap& u, const Element& a) const;
  bool has_binary_meets() const { return binary_meets_; }
  bool has_top() const { return top_; }
  Element meet(const Element& a, const Element& b) const;
  Element top() const;
  Rat rho(const Element& a, const Element& b) const;
  bool compatible(const Element& a, const Element& b) const;
  std::string incompatibility_witness(const Element& a, const Element& b) const;
  Element orbit_closure_least(const Element& a, const Rat& r) const;
  std::optional<Rat> separation_threshold(const Element& a, const Element& b) const;
  std::string describe(const Element& a) const;

  /// Characteristic map of an upper set, when it is a carrier element.
  Element indicator(Mask upper) const;
  /// All {0,1}-valued carrier elements, as their 1-level masks.
  std::vector<Mask> indicator_supports() const;

 private:
  FinPoset x_;
  DoctrinePair pair_;
  bool bottom_zero_ = false;
  bool binary_joins_ = false;
  bool binary_meets_ = false;
  bool top_ = false;
};

/** Dense piecewise-linear model of the self-module of the interval: elements
    of U-hat with the pointwise order, acting by postcomposition. */
struct PLModule {
  using Element = PLMap;

  bool is_element(const Element& a) const { return classify(a).in_Uhat; }
  bool leq(const Element& a, const Element& b) const { return pl_leq(a, b); }
  Element act(const PLMap& u, const Element& a) const { return compose(u, a); }
  bool has_binary_meets() const { return true; }
  bool has_top() const { return true; }
  Element meet(const Element& a, const Element& b) const { return pointwise_min(a, b); }
  Element top() const { return PLMap::constant(Rat(1)); }
  Rat rho(const Element& a, const Element& b) const { return linf_rho(a, b); }
  bool compatible(const Element& a, const Element& b) const;
  std::string incompatibility_witness(const Element& a, const Element& b) const;
  std::string describe(const Element& a) const { return a.str(); }
};

// ---------------------------------------------------------------------------
// Generic operations over any module instance M.

/// a <=_r b, decided by the single canonical test: u the upper iso at r,
/// v = u((-) ∔ r).
template <class M>
bool le_r(const M& m, const typename M::Element& a, const typename M::Element& b, const Rat& r) {
  if (!in_unit(r)) throw ModuleError("le_r: r outside [0,1]");
  if (r == Rat(1)) return true;  // no pair in U satisfies the premise
  const PLMap u = r == Rat(0) ? PLMap::identity() : canonical_r_iso(r, IsoSide::upper);
  const PLMap v = compose(u, PLMap::trunc_add(r));
  return m.leq(m.act(u, a), m.act(v, b));
}

template <class M>
Rat dist(const M& m, const typename M::Element& a, const typename M::Element& b) {
  return rat_max(m.rho(a, b), m.rho(b, a));
}

/// Least r on the grid {k/denom} with a <=_r b; cross-validates instance
/// closed forms for rho.
template <class M>
Rat rho_on_grid(const M& m, const typename M::Element& a, const typename M::Element& b,
                int denom) {
  for (int k = 0; k <= denom; ++k)
    if (le_r(m, a, b, Rat(k, denom))) return Rat(k, denom);
  return Rat(1);
}

struct ArchimedeanReport {
  int pairs_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// rho(a,b) = 0 must force a <= b; also checks the closed form against the
/// graded order on a grid.
template <class M>
ArchimedeanReport check_archimedean(const M& m,
                                    const std::vector<typename M::Element>& samples,
                                    int grid = 16) {
  ArchimedeanReport rep;
  for (const auto& a : samples)
    for (const auto& b : samples) {
      ++rep.pairs_checked;
      const Rat r = m.rho(a, b);
      if (r == Rat(0) && !m.leq(a, b))
        rep.failures.push_back("rho = 0 but not below: a=" + m.describe(a) +
                               " b=" + m.describe(b));
      // Consistency of the closed form with le_r at grid resolution.
      const Rat g = rho_on_grid(m, a, b, grid);
      if (g < r || r + Rat(1, grid) < g)
        rep.failures.push_back("closed-form rho " + r.str() + " inconsistent with graded order (" +
                               g.str() + "): a=" + m.describe(a) + " b=" + m.describe(b));
    }
  return rep;
}

/// Piecewise unstacking: when all piece isos
/// satisfy u_i(a) <= u_i(b ∔ r0), then a <=_{r0} b.  Returns whether
/// the implication held (vacuously when the hypothesis fails).
template <class M>
bool unstack_verify(const M& m, const typename M::Element& a, const typename M::Element& b,
                    const std::vector<Rat>& partition) {
  if (partition.size() < 2 || !(partition.back() == Rat(1)))
    throw ModuleError("unstack_verify: bad partition");
  for (std::size_t i = 0; i + 1 < partition.size(); ++i)
    if (!(partition[i] < partition[i + 1])) throw ModuleError("unstack_verify: bad partition");
  const Rat r0 = partition.front();
  if (!in_unit(r0)) throw ModuleError("unstack_verify: bad partition");

  bool hypothesis = true;
  const PLMap shift = PLMap::trunc_add(r0);
  for (std::size_t i = 0; i + 1 < partition.size() && hypothesis; ++i) {
    const PLMap ui = PLMap::piece_iso(partition[i], partition[i + 1]);
    hypothesis = m.leq(m.act(ui, a), m.act(compose(ui, shift), b));
  }
  if (!hypothesis) return true;
  return le_r(m, a, b, r0);
}

/// Unique c with u(c) = a and v(c) = b across the threshold r, where u, v are
/// the canonical piece isos.  Computed as u^x(a) ∧ v^x(b) and verified.
template <class M>
typename M::Element stack_glue(const M& m, const Rat& r, const typename M::Element& a,
                               const typename M::Element& b) {
  if (!(Rat(0) < r && r < Rat(1))) throw ModuleError("stack_glue: r must be interior");
  if (!m.has_binary_meets()) throw ModuleError("stack_glue: module lacks binary meets");
  if (!m.compatible(a, b))
    throw ModuleError("stack_glue: incompatible pieces a=" + m.describe(a) +
                      " b=" + m.describe(b) + "; witness: " + m.incompatibility_witness(a, b));
  const PLMap u = canonical_r_iso(r, IsoSide::lower);
  const PLMap v = canonical_r_iso(r, IsoSide::upper);
  const auto c = m.meet(m.act(right_adjoint_pl(u), a), m.act(right_adjoint_pl(v), b));
  if (!(m.act(u, c) == a) || !(m.act(v, c) == b))
    throw ModuleError("stack_glue: verification failed for a=" + m.describe(a) +
                      " b=" + m.describe(b));
  return c;
}

/// n-ary gluing along a partition: the unique c with u_i(c) = pieces[i].
template <class M>
typename M::Element stack_glue_n(const M& m, const std::vector<Rat>& partition,
                                 const std::vector<typename M::Element>& pieces) {
  if (partition.size() < 2 || pieces.size() + 1 != partition.size() ||
      !(partition.front() == Rat(0)) || !(partition.back() == Rat(1)))
    throw ModuleError("stack_glue_n: bad partition");
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
    if (!m.compatible(pieces[i], pieces[i + 1]))
      throw ModuleError("stack_glue_n: incompatible adjacent pieces at " + std::to_string(i));
  std::vector<PLMap> isos;
  for (std::size_t i = 0; i + 1 < partition.size(); ++i)
    isos.push_back(PLMap::piece_iso(partition[i], partition[i + 1]));
  auto c = m.act(right_adjoint_pl(isos[0]), pieces[0]);
  for (std::size_t i = 1; i < isos.size(); ++i)
    c = m.meet(c, m.act(right_adjoint_pl(isos[i]), pieces[i]));
  for (std::size_t i = 0; i < isos.size(); ++i)
    if (!(m.act(isos[i], c) == pieces[i]))
      throw ModuleError("stack_glue_n: verification failed at piece " + std::to_string(i));
  return c;
}

/// Extends the U-action to U-hat on a stackable module with meets and top:
/// w(0) = 1 forces the top, w in U delegates, otherwise glue at r = w(0).
template <class M>
typename M::Element extend_to_uhat(const M& m, const PLMap& w, const typename M::Element& a) {
  if (!classify(w).in_Uhat) throw ModuleError("extend_to_uhat: map is not in U-hat");
  if (!m.has_top() || !m.has_binary_meets())
    throw ModuleError("extend_to_uhat: module lacks meets with top");
  const Rat w0 = w.eval(Rat(0));
  if (w0 == Rat(1)) return m.top();
  if (w0 == Rat(0)) return m.act(w, a);
  const PLMap v = canonical_r_iso(w0, IsoSide::upper);
  return stack_glue(m, w0, m.top(), m.act(compose(v, w), a));
}

// ---------------------------------------------------------------------------
// Invariant closed filters and module morphisms into the interval.

/// Filter description for the interval: one of nothing, {1}, or all of [0,1].
enum class IntervalFilterKind { empty, one, everything };

struct IntervalFilter {
  IntervalFilterKind kind;
  bool member(const Rat& a) const {
    switch (kind) {
      case IntervalFilterKind::empty: return false;
      case IntervalFilterKind::one: return a == Rat(1);
      default: return true;
    }
  }
  std::string name() const {
    switch (kind) {
      case IntervalFilterKind::empty: return "empty";
      case IntervalFilterKind::one: return "{1}";
      default: return "[0,1]";
    }
  }
};

/// Smallest U-invariant rho-op-closed Psi-op-filter of the interval
/// containing the generators.
IntervalFilter closed_invariant_filter(const IntervalModule& m, const DoctrinePair& pair,
                                       const std::vector<Rat>& generators);

struct IntervalMorphism {
  IntervalFilter filter;
  Rat operator()(const Rat& a) const {
    switch (filter.kind) {
      case IntervalFilterKind::empty: return Rat(0);
      case IntervalFilterKind::one: return a;
      default: return Rat(1);
    }
  }
};

/// All module morphisms interval -> interval for the pair, each with its
/// kernel filter; 2 for meet-carrying pairs, 3 otherwise.
std::vector<IntervalMorphism> morphisms_to_I(const IntervalModule& m, const DoctrinePair& pair);

/** Invariant closed filter of a FunctionModule: membership is "identically 1
    on some support"; supports form an upward-closed collection of 1-level
    sets of indicator elements. */
struct FunctionFilter {
  std::vector<Mask> supports;  // minimal antichain
  bool member(const FunctionModule& m, const FunctionModule::Element& a) const;
};

/// Smallest invariant closed filter containing the generators.
FunctionFilter closed_invariant_filter(const FunctionModule& m,
                                       const std::vector<FunctionModule::Element>& generators);

struct FunctionMorphism {
  FunctionFilter filter;
  Rat operator()(const FunctionModule::Element& a) const;
};

/// All module morphisms FunctionModule -> interval, enumerated through the
/// indicator-support classification of invariant closed filters.
std::vector<FunctionMorphism> morphisms_to_I(const FunctionModule& m);

}  // namespace ordkit

#endif
