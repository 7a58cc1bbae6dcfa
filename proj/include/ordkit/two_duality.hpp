#ifndef ORDKIT_TWO_DUALITY_HPP
#define ORDKIT_TWO_DUALITY_HPP

#include <string>
#include <vector>

#include "ordkit/continuity.hpp"
#include "ordkit/doctrine.hpp"
#include "ordkit/monotone_map.hpp"
#include "ordkit/poset.hpp"

namespace ordkit {

/** Mutually inverse maps realizing X ≅ Phi(X_Phi).
    forward sends x to the index of the lower set X_Phi ∩ ↓x inside the dual
    lattice; backward sends a lower set of compacts to its join in X. */
struct DualityWitness {
  MonotoneMap forward;
  MonotoneMap backward;
  std::string pair_name;
};

/// Dual of a Phi-algebraic lattice: compacts with the order reversed.
/// Verifies the result carries the Psi-joins the inflattice side needs.
FinPoset dual_of_lattice(const FinPoset& x, const DoctrinePair& pair);

/// Dual of a Psi^op-inflattice A: the lattice Phi(A^op) ordered by inclusion.
/// Throws with a witness subset when A lacks a required meet.
struct InflatticeDual {
  FinPoset lattice;          // Phi(A^op), ordered by inclusion
  std::vector<Mask> elements;  // member masks over A
};
InflatticeDual dual_of_inflattice(const FinPoset& a, const DoctrinePair& pair);

/// Round-trip isomorphism for algebraic X; verifies both composites are
/// identities and both maps preserve the finite structure.
DualityWitness roundtrip(const FinPoset& x, const DoctrinePair& pair);

/// Contravariant dual of a morphism of Phi-algebraic lattices: the left
/// adjoint restricted to compacts, with orders reversed.
MonotoneMap dual_morphism(const MonotoneMap& f, const DoctrinePair& pair);

/// A is a Psi^op-inflattice: A^op has all Psi-joins.  Witness on failure.
bool has_required_meets(const FinPoset& a, const DoctrinePair& pair, Mask* witness = nullptr);

}  // namespace ordkit

#endif
