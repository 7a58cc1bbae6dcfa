#ifndef ORDKIT_DOCTRINE_HPP
#define ORDKIT_DOCTRINE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordkit/lower_set.hpp"
#include "ordkit/poset.hpp"

namespace ordkit {

/** A class of posets closed under the join-doctrine saturation conditions,
    given by a finite membership predicate on induced subposets plus declared
    infinite-scale flags.  No finite oracle decides membership of the infinite
    chain omega, so contains_omega is an attribute, not a computation. */
struct Doctrine {
  std::string name;
  std::string dual_name;
  bool contains_empty = false;
  bool contains_omega = false;
  // member(x, m): does the subposet of x induced by mask m belong to the class?
  std::function<bool(const FinPoset&, Mask)> member;

  bool member_of(const FinPoset& x) const { return member(x, x.full_mask()); }
};

/// One of the four sound rows: psi is the meet-doctrine partner of phi.
struct DoctrinePair {
  Doctrine phi;
  Doctrine psi;
};

/// The four sound join doctrines containing omega, with their partners:
/// (directed, finite cofinality), (empty-or-directed, nonempty finite
/// cofinality), (nonempty, empty-or-greatest), (all, has-greatest).
const std::vector<DoctrinePair>& builtin_doctrines();

/// Lookup by CLI name: directed | empty-or-directed | nonempty | all.
const DoctrinePair& doctrine_pair_by_name(const std::string& name);

/// Phi(X): the lower sets of X whose induced subposet lies in the doctrine.
std::vector<LowerSet> phi_of(const Doctrine& d, const FinPoset& x);
std::vector<Mask> phi_of_masks(const Doctrine& d, const FinPoset& x);

/// Phi*(X): the Phi-compact elements of L(X).
std::vector<LowerSet> phi_star(const Doctrine& d, const FinPoset& x,
                               std::size_t max_lattice = 4096);

struct CheckFailure {
  std::string condition;
  std::string witness;
};

struct SaturationReport {
  std::string doctrine;
  int corpus_max_size = 0;
  std::vector<CheckFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Exhaustively verifies the four saturation conditions (unit, union
/// multiplication, cofinal image, cofinal subposet) over all posets with at
/// most corpus_max_size elements.
SaturationReport check_saturation(const Doctrine& d, int corpus_max_size = 4);

struct SoundnessReport {
  std::string pair_name;
  std::string poset;
  std::vector<CheckFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Finite-scale soundness of a pair on X: (a) L(X) is generated under
/// Phi-joins by Psi(X), (b) when X is a Psi-suplattice, Phi(X) is exactly the
/// Psi-ideals of X, (c) Phi*(X) = Psi-membership lower sets of X.
SoundnessReport check_soundness_finite(const DoctrinePair& pair, const FinPoset& x);

/// True iff L(X) is Phi-continuous.
bool check_doctrine_continuity(const Doctrine& d, const FinPoset& x,
                               std::size_t max_lattice = 4096);

}  // namespace ordkit

#endif
