#include "ordkit/continuity.hpp"

#include <algorithm>

#include "ordkit/lower_set.hpp"

namespace ordkit {

namespace {

void require_complete(const FinPoset& x, const char* who) {
  if (!x.is_complete_lattice()) throw PosetError(std::string(who) + ": not a complete lattice");
}

struct PhiData {
  std::vector<Mask> sets;    // Phi-lower-sets of X
  std::vector<int> joins;    // join of each set
};

PhiData phi_data(const FinPoset& x, const Doctrine& d) {
  PhiData pd;
  pd.sets = phi_of_masks(d, x);
  pd.joins.reserve(pd.sets.size());
  for (Mask m : pd.sets) pd.joins.push_back(*x.join_all(m));
  return pd;
}

}  // namespace

Mask WayBelowRelation::compacts() const {
  Mask m = 0;
  for (int i = 0; i < base.size(); ++i)
    if (way(i, i)) m |= Mask(1) << i;
  return m;
}

WayBelowRelation waydown(const FinPoset& x, const Doctrine& d) {
  require_complete(x, "waydown");
  const auto pd = phi_data(x, d);
  WayBelowRelation rel;
  rel.base = x;
  rel.doctrine = d.name;
  rel.waydown.assign(x.size(), 0);
  for (int e = 0; e < x.size(); ++e) {
    Mask acc = x.full_mask();
    for (std::size_t k = 0; k < pd.sets.size(); ++k)
      if (x.leq(e, pd.joins[k])) acc &= pd.sets[k];
    rel.waydown[e] = acc;
  }
  return rel;
}

std::vector<int> compact_elements(const FinPoset& x, const Doctrine& d) {
  return mask_elements(waydown(x, d).compacts());
}

ContinuityCriteria continuity_criteria(const FinPoset& x, const Doctrine& d) {
  require_complete(x, "continuity_criteria");
  const auto pd = phi_data(x, d);
  const auto rel = waydown(x, d);
  ContinuityCriteria c;

  // (i) a Phi-set inside the waydown set whose join reaches x.
  c.basis = true;
  for (int e = 0; e < x.size() && c.basis; ++e) {
    bool found = false;
    for (std::size_t k = 0; k < pd.sets.size() && !found; ++k)
      found = (pd.sets[k] & ~rel.waydown[e]) == 0 && x.leq(e, pd.joins[k]);
    c.basis = found;
  }

  // (ii) join : Phi(X) -> X has a least preimage over every x.
  c.adjoint = true;
  for (int e = 0; e < x.size() && c.adjoint; ++e) {
    bool least_found = false;
    for (std::size_t k = 0; k < pd.sets.size() && !least_found; ++k) {
      if (!x.leq(e, pd.joins[k])) continue;
      bool is_least = true;
      for (std::size_t l = 0; l < pd.sets.size() && is_least; ++l)
        if (x.leq(e, pd.joins[l]) && (pd.sets[k] & ~pd.sets[l]) != 0) is_least = false;
      least_found = is_least;
    }
    c.adjoint = least_found;
  }

  // (iii) join preserves meets in Phi(X).  Meets in a finite poset reduce to
  // the empty meet and binary meets, provided Phi(X) is closed under binary
  // intersection (the case for the four built-ins on a complete lattice);
  // otherwise fall back to all subfamilies.
  {
    const auto index_of = [&](Mask m) -> int {
      const auto it = std::find(pd.sets.begin(), pd.sets.end(), m);
      return it == pd.sets.end() ? -1 : (int)(it - pd.sets.begin());
    };
    bool intersection_closed = true;
    for (std::size_t a = 0; a < pd.sets.size() && intersection_closed; ++a)
      for (std::size_t b = a; b < pd.sets.size() && intersection_closed; ++b)
        if (index_of(pd.sets[a] & pd.sets[b]) < 0) intersection_closed = false;

    if (intersection_closed) {
      c.meet_pres = index_of(x.full_mask()) >= 0 &&
                    pd.joins[index_of(x.full_mask())] == *x.top();
      for (std::size_t a = 0; a < pd.sets.size() && c.meet_pres; ++a)
        for (std::size_t b = a; b < pd.sets.size() && c.meet_pres; ++b) {
          const int m = index_of(pd.sets[a] & pd.sets[b]);
          if (pd.joins[m] != *x.meet(pd.joins[a], pd.joins[b])) c.meet_pres = false;
        }
    } else if (pd.sets.size() <= 20) {
      // Meet of a subfamily = greatest Phi-set below all members, if any.
      c.meet_pres = true;
      const std::size_t nfam = std::size_t(1) << pd.sets.size();
      for (std::size_t fam = 0; fam < nfam && c.meet_pres; ++fam) {
        Mask inter = x.full_mask();
        int expected = *x.top();
        for (std::size_t k = 0; k < pd.sets.size(); ++k)
          if ((fam >> k) & 1u) {
            inter &= pd.sets[k];
            expected = *x.meet(expected, pd.joins[k]);
          }
        int best = -1;
        bool unique_max = true;
        for (std::size_t k = 0; k < pd.sets.size(); ++k)
          if ((pd.sets[k] & ~inter) == 0) {
            if (best < 0 || (pd.sets[best] & ~pd.sets[k]) == 0)
              best = (int)k;
          }
        if (best >= 0)
          for (std::size_t k = 0; k < pd.sets.size(); ++k)
            if ((pd.sets[k] & ~inter) == 0 && (pd.sets[k] & ~pd.sets[best]) != 0) unique_max = false;
        if (best < 0 || !unique_max || pd.joins[best] != expected) c.meet_pres = false;
      }
    } else {
      throw PosetError("continuity_criteria: Phi(X) too large for the meet criterion");
    }
  }

  // (iv) meets distribute over Phi-joins.
  c.distributive = check_meet_distributivity(x, d, nullptr);
  return c;
}

bool is_continuous(const FinPoset& x, const Doctrine& d) {
  const auto c = continuity_criteria(x, d);
  if (!c.agree())
    throw PosetError("continuity criteria disagree on " + x.encode() + " for " + d.name);
  return c.basis;
}

bool is_algebraic(const FinPoset& x, const Doctrine& d) {
  require_complete(x, "is_algebraic");
  const auto rel = waydown(x, d);
  const Mask compacts = rel.compacts();
  const FinPoset sub = x.induced(compacts);
  const auto elems = mask_elements(compacts);

  const auto reindex = [&](Mask below) {
    Mask m = 0;
    for (std::size_t k = 0; k < elems.size(); ++k)
      if ((below >> elems[k]) & 1u) m |= Mask(1) << k;
    return m;
  };

  std::vector<Mask> images(x.size());
  for (int e = 0; e < x.size(); ++e) {
    const Mask below = compacts & x.down_mask(e);
    images[e] = reindex(below);
    if (!d.member(sub, images[e])) return false;
    const auto j = x.join_all(below);
    if (!j || *j != e) return false;
  }

  // Generation established; x -> X_Phi ∩ ↓x must now be an order-isomorphism
  // onto Phi(X_Phi).
  auto targets = phi_of_masks(d, sub);
  std::sort(targets.begin(), targets.end());
  auto sorted = images;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted != targets)
    throw PosetError("is_algebraic: generation holds but X is not isomorphic to Phi(X_Phi)");
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < x.size(); ++b)
      if (x.leq(a, b) != ((images[a] & ~images[b]) == 0))
        throw PosetError("is_algebraic: compact-ideal map is not an order-isomorphism");
  return true;
}

bool check_meet_distributivity(const FinPoset& x, const Doctrine& d,
                               DistributivityWitness* witness) {
  require_complete(x, "check_meet_distributivity");
  const auto pd = phi_data(x, d);

  const auto check_family = [&](const std::vector<std::size_t>& fam) {
    Mask inter = x.full_mask();
    int lhs = *x.top();
    for (std::size_t k : fam) {
      inter &= pd.sets[k];
      lhs = *x.meet(lhs, pd.joins[k]);
    }
    const int rhs = *x.join_all(inter);
    return lhs == rhs;
  };

  bool intersection_closed = true;
  for (std::size_t a = 0; a < pd.sets.size() && intersection_closed; ++a)
    for (std::size_t b = a; b < pd.sets.size() && intersection_closed; ++b)
      intersection_closed =
          std::find(pd.sets.begin(), pd.sets.end(), pd.sets[a] & pd.sets[b]) != pd.sets.end();

  if (intersection_closed) {
    // Binary families generate the general case by induction.
    for (std::size_t a = 0; a < pd.sets.size(); ++a)
      for (std::size_t b = a; b < pd.sets.size(); ++b)
        if (!check_family({a, b})) {
          if (witness) witness->family = {pd.sets[a], pd.sets[b]};
          return false;
        }
    return true;
  }
  if (pd.sets.size() > 20)
    throw PosetError("check_meet_distributivity: Phi(X) too large for exhaustive families");
  const std::size_t nfam = std::size_t(1) << pd.sets.size();
  for (std::size_t fam = 0; fam < nfam; ++fam) {
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < pd.sets.size(); ++k)
      if ((fam >> k) & 1u) members.push_back(k);
    if (!check_family(members)) {
      if (witness)
        for (std::size_t k : members) witness->family.push_back(pd.sets[k]);
      return false;
    }
  }
  return true;
}

bool check_interpolation(const FinPoset& x, const Doctrine& d) {
  if (!is_continuous(x, d)) throw PosetError("check_interpolation: lattice is not continuous");
  const auto rel = waydown(x, d);
  for (int e = 0; e < x.size(); ++e)
    for (int z : mask_elements(rel.waydown[e])) {
      bool found = false;
      for (int y = 0; y < x.size() && !found; ++y)
        found = rel.way(z, y) && rel.way(y, e);
      if (!found) return false;
    }
  return true;
}

TransposeResult transpose_morphism(const MonotoneMap& f, const Doctrine& d) {
  if (!preserves_all_meets(f)) throw PosetError("transpose_morphism: f does not preserve meets");
  const auto adj = left_adjoint(f);
  if (!adj) throw PosetError("transpose_morphism: no left adjoint");
  TransposeResult r{*adj, false, false};

  // f preserves Phi-joins: over every subset of the domain in Phi.
  r.f_preserves_phi_joins = true;
  const Mask full = f.dom.full_mask();
  for (Mask s = 0; r.f_preserves_phi_joins; ++s) {
    if (d.member(f.dom, s)) {
      const auto j = f.dom.join_all(s);
      if (j) {
        Mask img = 0;
        for (int i : mask_elements(s)) img |= Mask(1) << f.values[i];
        const auto ji = f.cod.join_all(img);
        if (!ji || *ji != f.values[*j]) r.f_preserves_phi_joins = false;
      }
    }
    if (s == full) break;
  }

  // f^+ preserves << and all joins.
  const auto rel_dom = waydown(f.dom, d);
  const auto rel_cod = waydown(f.cod, d);
  r.adjoint_preserves_way = preserves_all_joins(r.left_adjoint);
  for (int a = 0; a < f.cod.size() && r.adjoint_preserves_way; ++a)
    for (int b = 0; b < f.cod.size() && r.adjoint_preserves_way; ++b)
      if (rel_cod.way(a, b) && !rel_dom.way(r.left_adjoint(a), r.left_adjoint(b)))
        r.adjoint_preserves_way = false;
  return r;
}

bool interval_way_below(const Rat& r, const Rat& s, const Doctrine& d) {
  if (!in_unit(r) || !in_unit(s)) throw std::invalid_argument("interval_way_below: out of [0,1]");
  if (r < s) return true;
  if (r == s && r == Rat(0)) return !d.contains_empty;
  return false;
}

}  // namespace ordkit
