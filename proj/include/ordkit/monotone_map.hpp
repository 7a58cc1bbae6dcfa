#ifndef ORDKIT_MONOTONE_MAP_HPP
#define ORDKIT_MONOTONE_MAP_HPP

#include <optional>
#include <vector>

#include "ordkit/lower_set.hpp"
#include "ordkit/poset.hpp"

namespace ordkit {

/** Monotone map between finite posets; values[i] is the image of i. */
struct MonotoneMap {
  FinPoset dom;
  FinPoset cod;
  std::vector<int> values;

  MonotoneMap() = default;
  MonotoneMap(FinPoset d, FinPoset c, std::vector<int> v);

  int operator()(int i) const { return values[i]; }
  Mask image_mask() const;

  static MonotoneMap identity(const FinPoset& x);
};

/// g after f.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

/// f_*(phi) = union of ↓f(x) over x in phi.
LowerSet pushforward(const MonotoneMap& f, const LowerSet& phi);
Mask pushforward_mask(const MonotoneMap& f, Mask phi);

/// Right adjoint f^x with f(x) <= y iff x <= f^x(y), when it exists.
std::optional<MonotoneMap> right_adjoint(const MonotoneMap& f);
/// Left adjoint f^+ with f^+(y) <= x iff y <= f(x), when it exists.
std::optional<MonotoneMap> left_adjoint(const MonotoneMap& f);

bool preserves_all_meets(const MonotoneMap& f);
bool preserves_all_joins(const MonotoneMap& f);

/// All monotone maps dom -> cod (DFS over value assignments).
std::vector<MonotoneMap> enumerate_monotone_maps(const FinPoset& dom, const FinPoset& cod);

}  // namespace ordkit

#endif
