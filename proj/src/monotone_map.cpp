#include "ordkit/monotone_map.hpp"

namespace ordkit {

MonotoneMap::MonotoneMap(FinPoset d, FinPoset c, std::vector<int> v)
    : dom(std::move(d)), cod(std::move(c)), values(std::move(v)) {
  if ((int)values.size() != dom.size()) throw PosetError("MonotoneMap: value count mismatch");
  for (int i = 0; i < dom.size(); ++i)
    if (values[i] < 0 || values[i] >= cod.size())
      throw PosetError("MonotoneMap: value out of range at " + std::to_string(i));
  for (int i = 0; i < dom.size(); ++i)
    for (int j = 0; j < dom.size(); ++j)
      if (dom.leq(i, j) && !cod.leq(values[i], values[j]))
        throw PosetError("MonotoneMap: not monotone at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
}

Mask MonotoneMap::image_mask() const {
  Mask m = 0;
  for (int v : values) m |= Mask(1) << v;
  return m;
}

MonotoneMap MonotoneMap::identity(const FinPoset& x) {
  std::vector<int> v(x.size());
  for (int i = 0; i < x.size(); ++i) v[i] = i;
  return MonotoneMap(x, x, std::move(v));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!(f.cod == g.dom)) throw PosetError("compose: domain mismatch");
  std::vector<int> v(f.dom.size());
  for (int i = 0; i < f.dom.size(); ++i) v[i] = g.values[f.values[i]];
  return MonotoneMap(f.dom, g.cod, std::move(v));
}

Mask pushforward_mask(const MonotoneMap& f, Mask phi) {
  Mask out = 0;
  for (int i = 0; i < f.dom.size(); ++i)
    if ((phi >> i) & 1u) out |= f.cod.down_mask(f.values[i]);
  return out;
}

LowerSet pushforward(const MonotoneMap& f, const LowerSet& phi) {
  if (!(phi.base == f.dom)) throw PosetError("pushforward: lower set not based on the domain");
  return LowerSet(f.cod, pushforward_mask(f, phi.bits));
}

std::optional<MonotoneMap> right_adjoint(const MonotoneMap& f) {
  const int ny = f.cod.size();
  std::vector<int> adj(ny);
  for (int y = 0; y < ny; ++y) {
    Mask candidates = 0;
    for (int x = 0; x < f.dom.size(); ++x)
      if (f.cod.leq(f.values[x], y)) candidates |= Mask(1) << x;
    if (candidates == 0) return std::nullopt;
    const auto g = f.dom.greatest_in(candidates);
    if (!g) return std::nullopt;
    adj[y] = *g;
  }
  return MonotoneMap(f.cod, f.dom, std::move(adj));
}

std::optional<MonotoneMap> left_adjoint(const MonotoneMap& f) {
  const int ny = f.cod.size();
  std::vector<int> adj(ny);
  for (int y = 0; y < ny; ++y) {
    Mask candidates = 0;
    for (int x = 0; x < f.dom.size(); ++x)
      if (f.cod.leq(y, f.values[x])) candidates |= Mask(1) << x;
    if (candidates == 0) return std::nullopt;
    const auto l = f.dom.least_in(candidates);
    if (!l) return std::nullopt;
    adj[y] = *l;
  }
  return MonotoneMap(f.cod, f.dom, std::move(adj));
}

bool preserves_all_meets(const MonotoneMap& f) {
  const Mask full = f.dom.full_mask();
  for (Mask s = 0;; ++s) {
    const auto m = f.dom.meet_all(s);
    if (m) {
      Mask img = 0;
      for (int i = 0; i < f.dom.size(); ++i)
        if ((s >> i) & 1u) img |= Mask(1) << f.values[i];
      const auto mi = f.cod.meet_all(img);
      if (!mi || *mi != f.values[*m]) return false;
    }
    if (s == full) break;
  }
  return true;
}

bool preserves_all_joins(const MonotoneMap& f) {
  const Mask full = f.dom.full_mask();
  for (Mask s = 0;; ++s) {
    const auto m = f.dom.join_all(s);
    if (m) {
      Mask img = 0;
      for (int i = 0; i < f.dom.size(); ++i)
        if ((s >> i) & 1u) img |= Mask(1) << f.values[i];
      const auto mi = f.cod.join_all(img);
      if (!mi || *mi != f.values[*m]) return false;
    }
    if (s == full) break;
  }
  return true;
}

namespace {
void enum_maps_rec(const FinPoset& dom, const FinPoset& cod, const std::vector<int>& order,
                   std::size_t pos, std::vector<int>& values, std::vector<MonotoneMap>& out) {
  if (pos == order.size()) {
    out.emplace_back(dom, cod, values);
    return;
  }
  const int e = order[pos];
  for (int v = 0; v < cod.size(); ++v) {
    bool ok = true;
    for (std::size_t k = 0; k < pos && ok; ++k) {
      const int p = order[k];
      if (dom.leq(p, e) && !cod.leq(values[p], v)) ok = false;
      if (dom.leq(e, p) && !cod.leq(v, values[p])) ok = false;
    }
    if (!ok) continue;
    values[e] = v;
    enum_maps_rec(dom, cod, order, pos + 1, values, out);
  }
}
}  // namespace

std::vector<MonotoneMap> enumerate_monotone_maps(const FinPoset& dom, const FinPoset& cod) {
  std::vector<MonotoneMap> out;
  std::vector<int> values(dom.size(), 0);
  enum_maps_rec(dom, cod, dom.topo_order(), 0, values, out);
  return out;
}

}  // namespace ordkit
