#ifndef ORDKIT_CONTINUITY_HPP
#define ORDKIT_CONTINUITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "ordkit/doctrine.hpp"
#include "ordkit/monotone_map.hpp"
#include "ordkit/poset.hpp"
#include "ordkit/rational.hpp"

namespace ordkit {

/** Way-below relation of a doctrine on a finite complete lattice.
    waydown[x] is the mask of {y | y << x}, computed as the literal
    intersection of all Phi-lower-sets whose join dominates x. */
struct WayBelowRelation {
  FinPoset base;
  std::string doctrine;
  std::vector<Mask> waydown;

  bool way(int y, int x) const { return (waydown[x] >> y) & 1u; }
  Mask compacts() const;
};

WayBelowRelation waydown(const FinPoset& x, const Doctrine& d);

/// X_Phi = {x | x << x}.
std::vector<int> compact_elements(const FinPoset& x, const Doctrine& d);

/** The four continuity criteria, computed independently:
    basis:        every x has a Phi-lower-set contained in its waydown set
                  with join x;
    adjoint:      join : Phi(X) -> X has a least preimage above every x;
    meet_pres:    join : Phi(X) -> X preserves meets;
    distributive: meets distribute over Phi-joins (union form). */
struct ContinuityCriteria {
  bool basis = false;
  bool adjoint = false;
  bool meet_pres = false;
  bool distributive = false;
  bool agree() const {
    return basis == adjoint && adjoint == meet_pres && meet_pres == distributive;
  }
};

ContinuityCriteria continuity_criteria(const FinPoset& x, const Doctrine& d);

bool is_continuous(const FinPoset& x, const Doctrine& d);
bool is_algebraic(const FinPoset& x, const Doctrine& d);

struct DistributivityWitness {
  std::vector<Mask> family;  // Phi-lower-sets violating the identity
};

/// True iff arbitrary meets distribute over Phi-joins; on failure the witness
/// family is reported.
bool check_meet_distributivity(const FinPoset& x, const Doctrine& d,
                               DistributivityWitness* witness = nullptr);

/// Interpolation: z << x implies z << y << x for some y.  Precondition:
/// is_continuous(x, d).
bool check_interpolation(const FinPoset& x, const Doctrine& d);

struct TransposeResult {
  MonotoneMap left_adjoint;           // f^+
  bool f_preserves_phi_joins = false;
  bool adjoint_preserves_way = false;  // f^+ preserves << and joins
};

/// For meet-preserving f between Phi-continuous lattices, computes f^+ and
/// checks both sides of the transpose equivalence.
TransposeResult transpose_morphism(const MonotoneMap& f, const Doctrine& d);

/// Closed form of << on the unit interval: r << s iff r < s, or r = s = 0 and
/// the doctrine lacks the empty poset.
bool interval_way_below(const Rat& r, const Rat& s, const Doctrine& d);

}  // namespace ordkit

#endif
