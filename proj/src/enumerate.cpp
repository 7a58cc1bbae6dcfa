#include "ordkit/enumerate.hpp"

#include <unordered_set>

#include "ordkit/lower_set.hpp"

namespace ordkit {

namespace {

// Natural-labeled generation: element k is added on top with an arbitrary
// lower set of the current poset as its strict down-set, so indices form a
// linear extension.  Results are deduplicated by canonical form.
struct Generator {
  int n;
  bool lattices_only;
  std::vector<Mask> down;  // strict down-set masks
  std::unordered_set<std::string> seen;
  std::vector<FinPoset> out;

  FinPoset current(int k) const {
    std::vector<Mask> up(k, 0);
    for (int i = 0; i < k; ++i) {
      up[i] |= Mask(1) << i;
      for (int j = 0; j < k; ++j)
        if ((down[j] >> i) & 1u) up[i] |= Mask(1) << j;
    }
    return FinPoset::from_up_masks(k, std::move(up));
  }

  bool lattice_ok(const FinPoset& p, int k, Mask d) const {
    if (k > 0 && d == 0) return false;  // unique bottom is element 0
    // Every new pair (k, j) needs a meet; common lower bounds are final.
    for (int j = 0; j < k; ++j) {
      if ((d >> j) & 1u) continue;  // comparable, meet = j
      const Mask common = d & p.down_mask(j);
      if (!common) return false;
      if (!p.greatest_in(common)) return false;
    }
    return true;
  }

  void emit(int k) {
    FinPoset p = current(k);
    if (lattices_only) {
      if (!p.top().has_value()) return;
      if (!p.is_complete_lattice()) return;
    }
    FinPoset canon = p.canonical();
    if (seen.insert(canon.encode()).second) out.push_back(std::move(canon));
  }

  void step(int k) {
    if (k == n) {
      emit(k);
      return;
    }
    const FinPoset p = current(k);
    for (const Mask d : all_lower_set_masks(p)) {
      if (lattices_only && !lattice_ok(p, k, d)) continue;
      down.push_back(d);
      step(k + 1);
      down.pop_back();
    }
  }
};

std::vector<FinPoset> generate(int n, bool lattices_only) {
  if (n == 0) {
    if (lattices_only) return {};
    return {FinPoset()};
  }
  Generator g{n, lattices_only, {}, {}, {}};
  g.step(0);
  return g.out;
}

}  // namespace

std::vector<FinPoset> enumerate_posets(int n, int max_n) {
  if (n < 0 || n > max_n)
    throw PosetError("enumerate_posets: size " + std::to_string(n) + " exceeds bound " +
                     std::to_string(max_n));
  return generate(n, false);
}

std::vector<FinPoset> enumerate_lattices(int n, int max_n) {
  if (n < 0 || n > max_n)
    throw PosetError("enumerate_lattices: size " + std::to_string(n) + " exceeds bound " +
                     std::to_string(max_n));
  return generate(n, true);
}

std::vector<FinPoset> enumerate_distributive_lattices(int n, int max_n) {
  std::vector<FinPoset> out;
  for (auto& p : enumerate_lattices(n, max_n))
    if (p.is_distributive_lattice()) out.push_back(std::move(p));
  return out;
}

std::vector<FinPoset> posets_up_to(int n, int max_n) {
  std::vector<FinPoset> out;
  for (int k = 0; k <= n; ++k)
    for (auto& p : enumerate_posets(k, max_n)) out.push_back(std::move(p));
  return out;
}

std::vector<FinPoset> lattices_up_to(int n, int max_n) {
  std::vector<FinPoset> out;
  for (int k = 1; k <= n; ++k)
    for (auto& p : enumerate_lattices(k, max_n)) out.push_back(std::move(p));
  return out;
}

}  // namespace ordkit
