#include "ordkit/lower_set.hpp"

#include <algorithm>

namespace ordkit {

LowerSet::LowerSet(FinPoset p, Mask m) : base(std::move(p)), bits(m) {
  if (!base.is_lower(bits)) throw PosetError("LowerSet: set is not downward closed");
}

std::vector<Mask> all_lower_set_masks(const FinPoset& x) {
  const auto order = x.topo_order();
  std::vector<Mask> out;
  // Iterative DFS over include/exclude decisions in linear-extension order.
  struct Frame {
    std::size_t pos;
    Mask acc;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    auto [pos, acc] = stack.back();
    stack.pop_back();
    if (pos == order.size()) {
      out.push_back(acc);
      continue;
    }
    const int e = order[pos];
    stack.push_back({pos + 1, acc});
    if ((x.strict_down_mask(e) & ~acc) == 0) stack.push_back({pos + 1, acc | (Mask(1) << e)});
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    const int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

LowerSet principal_ideal(const FinPoset& x, int elem) {
  if (elem < 0 || elem >= x.size()) throw PosetError("principal_ideal: index out of range");
  return LowerSet(x, x.down_mask(elem));
}

int LowerSetLattice::index_of(Mask m) const {
  const auto it = std::find(elements.begin(), elements.end(), m);
  if (it == elements.end()) throw PosetError("LowerSetLattice: not an element");
  return (int)(it - elements.begin());
}

LowerSetLattice lower_set_lattice(const FinPoset& x, std::size_t max_elements) {
  LowerSetLattice ll;
  ll.base = x;
  ll.elements = all_lower_set_masks(x);
  if (ll.elements.size() > max_elements)
    throw PosetError("lower_set_lattice: " + std::to_string(ll.elements.size()) +
                     " lower sets exceed the bound " + std::to_string(max_elements));
  const int m = (int)ll.elements.size();
  if (m > FinPoset::kMaxElements)
    throw PosetError("lower_set_lattice: lattice larger than 62 elements");
  std::vector<Mask> up(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if ((ll.elements[a] & ~ll.elements[b]) == 0) up[a] |= Mask(1) << b;
  ll.order = FinPoset::from_up_masks(m, std::move(up));
  ll.unit.resize(x.size());
  for (int i = 0; i < x.size(); ++i) ll.unit[i] = ll.index_of(x.down_mask(i));
  return ll;
}

}  // namespace ordkit
