#include "ordkit/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace ordkit {

int popcount(Mask m) { return std::popcount(m); }
int lowest_bit(Mask m) { return std::countr_zero(m); }

std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

void FinPoset::set_labels(std::vector<std::string> ls) {
  if ((int)ls.size() != n_) throw PosetError("labels: size mismatch");
  labels_ = std::move(ls);
}

bool FinPoset::is_lower(Mask m) const {
  for (int i = 0; i < n_; ++i)
    if ((m >> i) & 1u)
      if ((down_[i] & ~m) != 0) return false;
  return true;
}

bool FinPoset::is_upper(Mask m) const {
  for (int i = 0; i < n_; ++i)
    if ((m >> i) & 1u)
      if ((up_[i] & ~m) != 0) return false;
  return true;
}

std::optional<int> FinPoset::greatest_in(Mask m) const {
  for (int i = 0; i < n_; ++i)
    if ((m >> i) & 1u)
      if ((m & ~down_[i]) == 0) return i;
  return std::nullopt;
}

std::optional<int> FinPoset::least_in(Mask m) const {
  for (int i = 0; i < n_; ++i)
    if ((m >> i) & 1u)
      if ((m & ~up_[i]) == 0) return i;
  return std::nullopt;
}

Mask FinPoset::maximal_in(Mask m) const {
  Mask out = 0;
  for (int i = 0; i < n_; ++i)
    if ((m >> i) & 1u)
      if ((m & up_[i] & ~(Mask(1) << i)) == 0) out |= Mask(1) << i;
  return out;
}

Mask FinPoset::minimal_in(Mask m) const {
  Mask out = 0;
  for (int i = 0; i < n_; ++i)
    if ((m >> i) & 1u)
      if ((m & down_[i] & ~(Mask(1) << i)) == 0) out |= Mask(1) << i;
  return out;
}

std::optional<int> FinPoset::meet_all(Mask m) const {
  Mask common = full_mask();
  for (int i = 0; i < n_; ++i)
    if ((m >> i) & 1u) common &= down_[i];
  if (common == 0) return std::nullopt;
  return greatest_in(common);
}

std::optional<int> FinPoset::join_all(Mask m) const {
  Mask common = full_mask();
  for (int i = 0; i < n_; ++i)
    if ((m >> i) & 1u) common &= up_[i];
  if (common == 0) return std::nullopt;
  return least_in(common);
}

bool FinPoset::is_lattice() const {
  if (n_ == 0) return false;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!meet(i, j) || !join(i, j)) return false;
  return true;
}

bool FinPoset::is_complete_lattice() const {
  return is_lattice() && top().has_value() && bottom().has_value();
}

bool FinPoset::is_distributive_lattice() const {
  if (!is_complete_lattice()) return false;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c) {
        const int bc = *join(b, c);
        const int lhs = *meet(a, bc);
        const int rhs = *join(*meet(a, b), *meet(a, c));
        if (lhs != rhs) return false;
      }
  return true;
}

FinPoset FinPoset::induced(Mask m) const {
  const auto elems = mask_elements(m);
  const int k = (int)elems.size();
  std::vector<Mask> up(k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (leq(elems[a], elems[b])) up[a] |= Mask(1) << b;
  return from_up_masks(k, std::move(up));
}

FinPoset FinPoset::opposite() const {
  std::vector<Mask> up(n_);
  for (int i = 0; i < n_; ++i) up[i] = down_[i];
  FinPoset p = from_up_masks(n_, std::move(up));
  p.labels_ = labels_;
  return p;
}

FinPoset FinPoset::relabel(const std::vector<int>& perm) const {
  std::vector<Mask> up(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (leq(i, j)) up[perm[i]] |= Mask(1) << perm[j];
  return from_up_masks(n_, std::move(up));
}

std::vector<int> FinPoset::topo_order() const {
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return popcount(down_[a]) < popcount(down_[b]); });
  return order;
}

std::vector<std::pair<int, int>> FinPoset::cover_pairs() const {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i == j || !leq(i, j)) continue;
      const Mask between = up_[i] & down_[j] & ~(Mask(1) << i) & ~(Mask(1) << j);
      if (between == 0) covers.emplace_back(i, j);
    }
  return covers;
}

namespace {

// Iterated neighborhood refinement; iso-invariant color per element.
std::vector<std::uint64_t> refine_colors(const FinPoset& p) {
  const int n = p.size();
  std::vector<std::uint64_t> color(n);
  for (int i = 0; i < n; ++i)
    color[i] = (std::uint64_t)popcount(p.down_mask(i)) << 32 | (unsigned)popcount(p.up_mask(i));
  for (int round = 0; round < 3; ++round) {
    std::vector<std::uint64_t> next(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint64_t> dn, un;
      for (int j = 0; j < n; ++j) {
        if (p.leq(j, i)) dn.push_back(color[j]);
        if (p.leq(i, j)) un.push_back(color[j]);
      }
      std::sort(dn.begin(), dn.end());
      std::sort(un.begin(), un.end());
      std::uint64_t h = color[i] * 1099511628211ull + 14695981039346656037ull;
      for (auto v : dn) h = (h ^ v) * 1099511628211ull;
      h = (h ^ 0x9e3779b97f4a7c15ull) * 1099511628211ull;
      for (auto v : un) h = (h ^ v) * 1099511628211ull;
      next[i] = h;
    }
    color = std::move(next);
  }
  return color;
}

void search_min(const FinPoset& p, const std::vector<std::vector<int>>& classes, std::size_t ci,
                std::vector<int>& pos_of, int assigned, std::vector<Mask>& best, bool& have_best) {
  const int n = p.size();
  if (ci == classes.size()) {
    std::vector<Mask> enc(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (p.leq(i, j)) enc[pos_of[i]] |= Mask(1) << pos_of[j];
    if (!have_best || enc < best) {
      best = std::move(enc);
      have_best = true;
    }
    return;
  }
  // Positions assigned..assigned+|cls|-1 go to the elements of cls in every order.
  const auto& cls = classes[ci];
  std::vector<int> idx(cls.size());
  std::iota(idx.begin(), idx.end(), 0);
  do {
    for (std::size_t k = 0; k < cls.size(); ++k) pos_of[cls[idx[k]]] = assigned + (int)k;
    search_min(p, classes, ci + 1, pos_of, assigned + (int)cls.size(), best, have_best);
  } while (std::next_permutation(idx.begin(), idx.end()));
}

}  // namespace

FinPoset FinPoset::canonical() const {
  if (n_ == 0) return *this;
  const auto color = refine_colors(*this);
  std::map<std::uint64_t, std::vector<int>> by_color;
  for (int i = 0; i < n_; ++i) by_color[color[i]].push_back(i);
  std::vector<std::vector<int>> classes;
  for (auto& [key, members] : by_color) classes.push_back(members);

  std::vector<int> pos_of(n_, -1);
  std::vector<Mask> best;
  bool have_best = false;
  search_min(*this, classes, 0, pos_of, 0, best, have_best);
  return from_up_masks(n_, std::move(best));
}

std::string FinPoset::encode() const {
  std::string s;
  s.reserve(n_ * (std::size_t)n_ + 4);
  s += std::to_string(n_);
  s += ':';
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s += leq(i, j) ? '1' : '0';
  return s;
}

bool FinPoset::isomorphic_to(const FinPoset& other) const {
  if (n_ != other.n_) return false;
  return canonical() == other.canonical();
}

FinPoset FinPoset::from_matrix(const std::vector<std::vector<bool>>& leq) {
  return validate_poset(leq);
}

FinPoset FinPoset::from_up_masks(int n, std::vector<Mask> up) {
  if (n > kMaxElements) throw PosetError("poset too large (max 62 elements)");
  FinPoset p;
  p.n_ = n;
  p.up_ = std::move(up);
  p.down_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((p.up_[i] >> j) & 1u) p.down_[j] |= Mask(1) << i;
  return p;
}

FinPoset FinPoset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  std::vector<Mask> up(n);
  for (int i = 0; i < n; ++i) up[i] = Mask(1) << i;
  for (auto [a, b] : covers) up[a] |= Mask(1) << b;
  // Transitive closure.
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      Mask m = up[i];
      Mask acc = m;
      while (m) {
        acc |= up[std::countr_zero(m)];
        m &= m - 1;
      }
      if (acc != up[i]) {
        up[i] = acc;
        changed = true;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && ((up[i] >> j) & 1u) && ((up[j] >> i) & 1u))
        throw PosetError("from_covers: cycle through " + std::to_string(i));
  return from_up_masks(n, std::move(up));
}

FinPoset FinPoset::chain(int n) {
  std::vector<Mask> up(n);
  const Mask full = n == 0 ? 0 : (Mask(1) << n) - 1;
  for (int i = 0; i < n; ++i) up[i] = full & ~((Mask(1) << i) - 1);
  return from_up_masks(n, std::move(up));
}

FinPoset FinPoset::antichain(int n) {
  std::vector<Mask> up(n);
  for (int i = 0; i < n; ++i) up[i] = Mask(1) << i;
  return from_up_masks(n, std::move(up));
}

FinPoset FinPoset::diamond() {
  // 0 = bottom, 1, 2 = atoms, 3 = top
  return from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

FinPoset FinPoset::m3() {
  // 0 = bottom, 1,2,3 = atoms, 4 = top
  return from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

FinPoset FinPoset::n5() {
  // 0 = bottom, chain 0 < 1 < 2 < 4, incomparable 3 with 0 < 3 < 4
  return from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

FinPoset FinPoset::boolean(int k) {
  const int n = 1 << k;
  std::vector<Mask> up(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((a & b) == a) up[a] |= Mask(1) << b;
  return from_up_masks(n, std::move(up));
}

FinPoset validate_poset(const std::vector<std::vector<bool>>& leq) {
  const int n = (int)leq.size();
  if (n > FinPoset::kMaxElements) throw PosetError("poset too large (max 62 elements)");
  for (int i = 0; i < n; ++i)
    if ((int)leq[i].size() != n) throw PosetError("leq matrix is not square at row " + std::to_string(i));
  for (int i = 0; i < n; ++i)
    if (!leq[i][i])
      throw PosetError("reflexivity violated: (" + std::to_string(i) + "," + std::to_string(i) + ")");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i][j] && leq[j][i])
        throw PosetError("antisymmetry violated: (" + std::to_string(i) + "," + std::to_string(j) + ")");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq[i][j])
        for (int k = 0; k < n; ++k)
          if (leq[j][k] && !leq[i][k])
            throw PosetError("transitivity violated: (" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) + ")");
  std::vector<Mask> up(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq[i][j]) up[i] |= Mask(1) << j;
  return FinPoset::from_up_masks(n, std::move(up));
}

}  // namespace ordkit
