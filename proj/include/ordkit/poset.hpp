#ifndef ORDKIT_POSET_HPP
#define ORDKIT_POSET_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordkit {

struct PosetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Mask = std::uint64_t;

/** Finite poset on elements 0..n-1, order stored as bit rows.
    up[i] is the mask of {j | i <= j}, down[i] the mask of {j | j <= i}.
    Reflexivity, antisymmetry and transitivity are established at
    construction (validate_poset) and preserved by every operation. */
class FinPoset {
 public:
  static constexpr int kMaxElements = 62;

  FinPoset() = default;

  int size() const { return n_; }
  bool leq(int i, int j) const { return (up_[i] >> j) & 1u; }
  bool lt(int i, int j) const { return i != j && leq(i, j); }
  Mask up_mask(int i) const { return up_[i]; }
  Mask down_mask(int i) const { return down_[i]; }
  Mask strict_down_mask(int i) const { return down_[i] & ~(Mask(1) << i); }
  Mask full_mask() const { return n_ == 0 ? 0 : ((Mask(1) << n_) - 1); }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> ls);

  bool is_lower(Mask m) const;
  bool is_upper(Mask m) const;

  /// Greatest element of the subset m, if any.
  std::optional<int> greatest_in(Mask m) const;
  std::optional<int> least_in(Mask m) const;
  Mask maximal_in(Mask m) const;
  Mask minimal_in(Mask m) const;

  /// Greatest lower bound of subset m in the whole poset (empty meet = top).
  std::optional<int> meet_all(Mask m) const;
  std::optional<int> join_all(Mask m) const;
  std::optional<int> meet(int i, int j) const { return meet_all((Mask(1) << i) | (Mask(1) << j)); }
  std::optional<int> join(int i, int j) const { return join_all((Mask(1) << i) | (Mask(1) << j)); }
  std::optional<int> top() const { return greatest_in(full_mask()); }
  std::optional<int> bottom() const { return least_in(full_mask()); }

  bool is_lattice() const;
  /// Finite scale: nonempty, bounded, and closed under binary meet/join.
  bool is_complete_lattice() const;
  bool is_distributive_lattice() const;

  /// Subposet induced by m; element k of the result is the k-th set bit of m.
  FinPoset induced(Mask m) const;
  FinPoset opposite() const;
  /// Relabel: element i becomes perm[i].
  FinPoset relabel(const std::vector<int>& perm) const;

  /// Indices in a linear extension (j <= i implies j precedes i).
  std::vector<int> topo_order() const;
  /// Transitive reduction as cover pairs (i, j) with i covered by j.
  std::vector<std::pair<int, int>> cover_pairs() const;

  /// Canonical relabeling: equal for isomorphic posets.
  FinPoset canonical() const;
  std::string encode() const;
  bool isomorphic_to(const FinPoset& other) const;

  friend bool operator==(const FinPoset& a, const FinPoset& b) {
    return a.n_ == b.n_ && a.up_ == b.up_;
  }

  // Builders.  All raise PosetError if the data is not a valid order.
  static FinPoset from_matrix(const std::vector<std::vector<bool>>& leq);
  static FinPoset from_up_masks(int n, std::vector<Mask> up);
  static FinPoset from_covers(int n, const std::vector<std::pair<int, int>>& covers);
  static FinPoset chain(int n);
  static FinPoset antichain(int n);
  static FinPoset diamond();  // C2 x C2
  static FinPoset m3();       // bottom, three atoms, top
  static FinPoset n5();       // pentagon
  static FinPoset boolean(int k);

 private:
  int n_ = 0;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
  std::vector<std::string> labels_;
};

/// Validates reflexivity, antisymmetry, transitivity; reports the first
/// violated axiom with witness indices.
FinPoset validate_poset(const std::vector<std::vector<bool>>& leq);

int popcount(Mask m);
int lowest_bit(Mask m);
std::vector<int> mask_elements(Mask m);

}  // namespace ordkit

#endif
