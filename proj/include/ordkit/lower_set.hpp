#ifndef ORDKIT_LOWER_SET_HPP
#define ORDKIT_LOWER_SET_HPP

#include <vector>

#include "ordkit/poset.hpp"

namespace ordkit {

/** Downward-closed subset of a finite poset, as a bit vector. */
struct LowerSet {
  FinPoset base;
  Mask bits = 0;

  LowerSet() = default;
  LowerSet(FinPoset p, Mask m);

  bool contains(int i) const { return (bits >> i) & 1u; }
  int count() const { return popcount(bits); }
};

/// All lower sets of X, as masks, enumerated via a linear-extension DFS
/// (cost proportional to the output, not to 2^n).
std::vector<Mask> all_lower_set_masks(const FinPoset& x);

/// ↓x = {y | y <= x}; the unit of the free suplattice monad.
LowerSet principal_ideal(const FinPoset& x, int elem);

/** L(X): every lower set of X, ordered by inclusion, as a complete lattice.
    elements[k] is the member mask of lattice element k; unit[i] is the index
    of the principal ideal of i. */
struct LowerSetLattice {
  FinPoset base;
  std::vector<Mask> elements;
  FinPoset order;
  std::vector<int> unit;

  int index_of(Mask m) const;
};

/// Size guard: throws PosetError when X has more lower sets than max_elements.
LowerSetLattice lower_set_lattice(const FinPoset& x, std::size_t max_elements = 4096);

}  // namespace ordkit

#endif
