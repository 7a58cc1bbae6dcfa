#include "ordkit/two_duality.hpp"

#include <algorithm>

#include "ordkit/lower_set.hpp"

namespace ordkit {

namespace {

Mask reindex(Mask global, const std::vector<int>& elems) {
  Mask m = 0;
  for (std::size_t k = 0; k < elems.size(); ++k)
    if ((global >> elems[k]) & 1u) m |= Mask(1) << k;
  return m;
}

}  // namespace

bool has_required_meets(const FinPoset& a, const DoctrinePair& pair, Mask* witness) {
  // Psi^op-meets in A are Psi-joins in A^op.
  const FinPoset aop = a.opposite();
  const Mask full = aop.full_mask();
  for (Mask s = 0;; ++s) {
    if (pair.psi.member(aop, s) && !aop.join_all(s)) {
      if (witness) *witness = s;
      return false;
    }
    if (s == full) break;
  }
  return true;
}

FinPoset dual_of_lattice(const FinPoset& x, const DoctrinePair& pair) {
  if (!is_algebraic(x, pair.phi))
    throw PosetError("dual_of_lattice: lattice is not " + pair.phi.name + "-algebraic");
  const auto rel = waydown(x, pair.phi);
  const FinPoset sub = x.induced(rel.compacts());
  const FinPoset dual = sub.opposite();
  Mask w = 0;
  if (!has_required_meets(dual, pair, &w))
    throw PosetError("dual_of_lattice: compacts miss a required " + pair.psi.name +
                     "-indexed meet");
  return dual;
}

InflatticeDual dual_of_inflattice(const FinPoset& a, const DoctrinePair& pair) {
  Mask w = 0;
  if (!has_required_meets(a, pair, &w))
    throw PosetError("dual_of_inflattice: missing " + pair.psi.name +
                     "-indexed meet of subset with mask " + std::to_string(w));
  const FinPoset aop = a.opposite();
  InflatticeDual out;
  out.elements = phi_of_masks(pair.phi, aop);
  const int m = (int)out.elements.size();
  if (m > FinPoset::kMaxElements) throw PosetError("dual_of_inflattice: dual too large");
  std::vector<Mask> up(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if ((out.elements[i] & ~out.elements[j]) == 0) up[i] |= Mask(1) << j;
  out.lattice = FinPoset::from_up_masks(m, std::move(up));

  // The dual must be Phi-algebraic with compacts isomorphic to A^op.
  if (!out.lattice.is_complete_lattice())
    throw PosetError("dual_of_inflattice: Phi(A^op) is not a complete lattice");
  if (!is_algebraic(out.lattice, pair.phi))
    throw PosetError("dual_of_inflattice: Phi(A^op) is not algebraic");
  const auto rel = waydown(out.lattice, pair.phi);
  const FinPoset compacts = out.lattice.induced(rel.compacts());
  if (!compacts.isomorphic_to(aop))
    throw PosetError("dual_of_inflattice: compacts of Phi(A^op) differ from A^op");
  return out;
}

DualityWitness roundtrip(const FinPoset& x, const DoctrinePair& pair) {
  if (!is_algebraic(x, pair.phi))
    throw PosetError("roundtrip: lattice is not " + pair.phi.name + "-algebraic");
  const auto rel = waydown(x, pair.phi);
  const Mask compacts = rel.compacts();
  const auto elems = mask_elements(compacts);
  const FinPoset sub = x.induced(compacts);

  auto targets = phi_of_masks(pair.phi, sub);
  std::sort(targets.begin(), targets.end());
  const int m = (int)targets.size();
  std::vector<Mask> up(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if ((targets[i] & ~targets[j]) == 0) up[i] |= Mask(1) << j;
  const FinPoset dual_lattice = FinPoset::from_up_masks(m, std::move(up));

  const auto index_of = [&](Mask t) {
    const auto it = std::lower_bound(targets.begin(), targets.end(), t);
    if (it == targets.end() || *it != t) throw PosetError("roundtrip: image not in Phi(X_Phi)");
    return (int)(it - targets.begin());
  };

  std::vector<int> fwd(x.size());
  for (int e = 0; e < x.size(); ++e) fwd[e] = index_of(reindex(compacts & x.down_mask(e), elems));
  std::vector<int> bwd(m);
  for (int t = 0; t < m; ++t) {
    Mask glob = 0;
    for (std::size_t k = 0; k < elems.size(); ++k)
      if ((targets[t] >> k) & 1u) glob |= Mask(1) << elems[k];
    bwd[t] = *x.join_all(glob);
  }

  DualityWitness w{MonotoneMap(x, dual_lattice, fwd), MonotoneMap(dual_lattice, x, bwd),
                   "(" + pair.phi.name + ", " + pair.psi.name + ")"};
  for (int e = 0; e < x.size(); ++e)
    if (bwd[fwd[e]] != e) throw PosetError("roundtrip: backward(forward) is not the identity");
  for (int t = 0; t < m; ++t)
    if (fwd[bwd[t]] != t) throw PosetError("roundtrip: forward(backward) is not the identity");
  return w;
}

MonotoneMap dual_morphism(const MonotoneMap& f, const DoctrinePair& pair) {
  // f must preserve meets and Phi-joins.
  if (!preserves_all_meets(f)) throw PosetError("dual_morphism: f does not preserve meets");
  {
    const Mask full = f.dom.full_mask();
    for (Mask s = 0;; ++s) {
      if (pair.phi.member(f.dom, s)) {
        const auto j = f.dom.join_all(s);
        if (j) {
          Mask img = 0;
          for (int i : mask_elements(s)) img |= Mask(1) << f.values[i];
          const auto ji = f.cod.join_all(img);
          if (!ji || *ji != f.values[*j])
            throw PosetError("dual_morphism: f does not preserve " + pair.phi.name +
                             "-joins (witness mask " + std::to_string(s) + ")");
        }
      }
      if (s == full) break;
    }
  }
  const auto adj = left_adjoint(f);
  if (!adj) throw PosetError("dual_morphism: no left adjoint");

  const Mask xc = waydown(f.dom, pair.phi).compacts();
  const Mask yc = waydown(f.cod, pair.phi).compacts();
  const auto xe = mask_elements(xc);
  const auto ye = mask_elements(yc);
  const FinPoset dual_dom = f.cod.induced(yc).opposite();
  const FinPoset dual_cod = f.dom.induced(xc).opposite();
  std::vector<int> values(ye.size());
  for (std::size_t k = 0; k < ye.size(); ++k) {
    const int image = (*adj)(ye[k]);
    const auto it = std::find(xe.begin(), xe.end(), image);
    if (it == xe.end())
      throw PosetError("dual_morphism: left adjoint does not restrict to compacts");
    values[k] = (int)(it - xe.begin());
  }
  return MonotoneMap(dual_dom, dual_cod, std::move(values));
}

}  // namespace ordkit
