#include "ordkit/doctrine.hpp"

#include <algorithm>

#include "ordkit/continuity.hpp"
#include "ordkit/enumerate.hpp"

namespace ordkit {

namespace {

bool has_greatest(const FinPoset& x, Mask m) {
  if (m == 0) return false;
  for (int i = 0; i < x.size(); ++i)
    if ((m >> i) & 1u)
      if ((m & ~x.down_mask(i)) == 0) return true;
  return false;
}

std::string mask_str(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int e : mask_elements(m)) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

}  // namespace

const std::vector<DoctrinePair>& builtin_doctrines() {
  static const std::vector<DoctrinePair> pairs = [] {
    // A finite poset is directed iff it is nonempty with a greatest element.
    auto directed = [](const FinPoset& x, Mask m) { return has_greatest(x, m); };
    auto empty_or_directed = [](const FinPoset& x, Mask m) {
      return m == 0 || has_greatest(x, m);
    };
    auto nonempty = [](const FinPoset&, Mask m) { return m != 0; };
    auto all = [](const FinPoset&, Mask) { return true; };
    auto fin_cof = [](const FinPoset&, Mask) { return true; };
    auto nonempty_fin_cof = [](const FinPoset&, Mask m) { return m != 0; };
    auto empty_or_greatest = [](const FinPoset& x, Mask m) {
      return m == 0 || has_greatest(x, m);
    };
    auto greatest = [](const FinPoset& x, Mask m) { return has_greatest(x, m); };

    std::vector<DoctrinePair> out;
    out.push_back({Doctrine{"directed", "finite-cofinality", false, true, directed},
                   Doctrine{"finite-cofinality", "directed", true, false, fin_cof}});
    out.push_back(
        {Doctrine{"empty-or-directed", "nonempty-finite-cofinality", true, true, empty_or_directed},
         Doctrine{"nonempty-finite-cofinality", "empty-or-directed", false, false,
                  nonempty_fin_cof}});
    out.push_back({Doctrine{"nonempty", "empty-or-greatest", false, true, nonempty},
                   Doctrine{"empty-or-greatest", "nonempty", true, false, empty_or_greatest}});
    out.push_back({Doctrine{"all", "has-greatest", true, true, all},
                   Doctrine{"has-greatest", "all", false, false, greatest}});
    return out;
  }();
  return pairs;
}

const DoctrinePair& doctrine_pair_by_name(const std::string& name) {
  for (const auto& p : builtin_doctrines())
    if (p.phi.name == name) return p;
  throw std::invalid_argument("unknown doctrine '" + name +
                              "' (expected directed|empty-or-directed|nonempty|all)");
}

std::vector<Mask> phi_of_masks(const Doctrine& d, const FinPoset& x) {
  std::vector<Mask> out;
  for (Mask m : all_lower_set_masks(x))
    if (d.member(x, m)) out.push_back(m);
  return out;
}

std::vector<LowerSet> phi_of(const Doctrine& d, const FinPoset& x) {
  std::vector<LowerSet> out;
  for (Mask m : phi_of_masks(d, x)) out.emplace_back(x, m);
  return out;
}

std::vector<LowerSet> phi_star(const Doctrine& d, const FinPoset& x, std::size_t max_lattice) {
  const auto ll = lower_set_lattice(x, max_lattice);
  const FinPoset& p = ll.order;
  // psi is Phi-compact in L(X) iff every Phi-family covering it contains it.
  std::vector<char> compact(p.size(), 1);
  for (Mask fam : all_lower_set_masks(p)) {
    if (!d.member(p, fam)) continue;
    Mask union_x = 0;
    for (int k : mask_elements(fam)) union_x |= ll.elements[k];
    for (int i = 0; i < p.size(); ++i)
      if (compact[i] && (ll.elements[i] & ~union_x) == 0 && !((fam >> i) & 1u)) compact[i] = 0;
  }
  std::vector<LowerSet> out;
  for (int i = 0; i < p.size(); ++i)
    if (compact[i]) out.emplace_back(x, ll.elements[i]);
  return out;
}

SaturationReport check_saturation(const Doctrine& d, int corpus_max_size) {
  SaturationReport report;
  report.doctrine = d.name;
  report.corpus_max_size = corpus_max_size;
  const auto corpus = posets_up_to(corpus_max_size);

  // Declared-flag consistency plus condition (i), the singleton unit.
  if (d.member_of(FinPoset()) != d.contains_empty)
    report.failures.push_back({"flags", "member(empty poset) != contains_empty"});
  if (!d.member_of(FinPoset::chain(1)))
    report.failures.push_back({"unit", "singleton poset not in the doctrine"});

  // (ii) union multiplication: a Phi-indexed union of Phi-subposets is in Phi.
  for (const auto& p : corpus) {
    const int n = p.size();
    const Mask full = p.full_mask();
    if (d.member(p, full)) continue;  // conclusion holds, nothing to refute
    const std::size_t nsub = std::size_t(1) << n;
    std::vector<char> sub_in_phi(nsub);
    for (Mask s = 0; s < nsub; ++s) sub_in_phi[s] = d.member(p, s);
    if (n > 4) continue;  // family space is 2^(2^n)
    const std::size_t nfam = std::size_t(1) << nsub;
    bool found = false;
    for (std::size_t fam = 1; fam < nfam && !found; ++fam) {
      Mask union_of = 0;
      bool members_ok = true;
      std::vector<Mask> members;
      for (std::size_t s = 0; s < nsub; ++s)
        if ((fam >> s) & 1u) {
          if (!sub_in_phi[s]) {
            members_ok = false;
            break;
          }
          union_of |= (Mask)s;
          members.push_back((Mask)s);
        }
      if (!members_ok || union_of != full) continue;
      // The family itself, ordered by inclusion, must be in Phi.
      const int m = (int)members.size();
      std::vector<Mask> up(m, 0);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          if ((members[a] & ~members[b]) == 0) up[a] |= Mask(1) << b;
      const FinPoset fam_poset = FinPoset::from_up_masks(m, std::move(up));
      if (!d.member_of(fam_poset)) continue;
      report.failures.push_back(
          {"multiplication", "poset " + p.encode() + " is a Phi-union of a Phi-family of " +
                                 std::to_string(m) + " Phi-subposets but is not in Phi"});
      found = true;
    }
  }

  // (iii) cofinal image closure.
  for (const auto& src : corpus) {
    if (!d.member_of(src)) continue;
    for (const auto& dst : corpus) {
      if (d.member_of(dst)) continue;
      if (src.size() == 0 && dst.size() > 0) continue;  // no map from empty onto nonempty cofinally
      bool found = false;
      for (const auto& f : enumerate_monotone_maps(src, dst)) {
        // image cofinal: every element of dst lies below some image point
        Mask up_of_image = 0;
        for (int i : mask_elements(f.image_mask())) up_of_image |= dst.down_mask(i);
        if (up_of_image == dst.full_mask()) {
          report.failures.push_back({"cofinal-image", "monotone map " + src.encode() + " -> " +
                                                          dst.encode() +
                                                          " with cofinal image leaves Phi"});
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }

  // (iv) cofinal subposet closure.
  for (const auto& p : corpus) {
    if (!d.member_of(p)) continue;
    const Mask full = p.full_mask();
    for (Mask s = 0; s <= full && !(p.size() == 0 && s > 0); ++s) {
      Mask up_of_s = 0;
      for (int i : mask_elements(s)) up_of_s |= p.down_mask(i);
      if (up_of_s != full) continue;  // not cofinal
      if (!d.member(p, s)) {
        report.failures.push_back(
            {"cofinal-subposet", "cofinal subposet " + mask_str(s) + " of " + p.encode() +
                                     " is not in Phi"});
        break;
      }
      if (s == full) break;
    }
  }
  return report;
}

SoundnessReport check_soundness_finite(const DoctrinePair& pair, const FinPoset& x) {
  SoundnessReport report;
  report.pair_name = "(" + pair.phi.name + ", " + pair.psi.name + ")";
  report.poset = x.encode();
  const auto lowers = all_lower_set_masks(x);
  const auto psi_sets = phi_of_masks(pair.psi, x);

  // (a) each theta in L(X) is the union of its Psi-lower subsets, and that
  // family (as a subposet of L(X)) indexes a Phi-join.
  {
    const auto ll = lower_set_lattice(x);
    for (Mask theta : lowers) {
      Mask fam = 0;  // mask over L(X) indices
      Mask union_of = 0;
      for (std::size_t k = 0; k < ll.elements.size(); ++k)
        if (pair.psi.member(x, ll.elements[k]) && (ll.elements[k] & ~theta) == 0) {
          fam |= Mask(1) << k;
          union_of |= ll.elements[k];
        }
      if (union_of != theta) {
        report.failures.push_back(
            {"generation-union", "lower set " + mask_str(theta) + " is not the union of its " +
                                     pair.psi.name + " lower subsets"});
        continue;
      }
      if (!pair.phi.member(ll.order, fam))
        report.failures.push_back(
            {"generation-index", "the family of " + pair.psi.name + " lower subsets of " +
                                     mask_str(theta) + " is not a " + pair.phi.name + " poset"});
    }
  }

  // (b) on a Psi-suplattice, Phi(X) = Psi-ideals of X.
  {
    bool psi_suplattice = true;
    const Mask full = x.full_mask();
    for (Mask s = 0; psi_suplattice; ++s) {
      if (pair.psi.member(x, s) && !x.join_all(s)) psi_suplattice = false;
      if (s == full) break;
    }
    if (psi_suplattice) {
      for (Mask low : lowers) {
        bool ideal = true;
        for (Mask s = low;; s = (s - 1) & low) {
          if (pair.psi.member(x, s)) {
            const auto j = x.join_all(s);
            if (j && !((low >> *j) & 1u)) {
              ideal = false;
              break;
            }
          }
          if (s == 0) break;
        }
        const bool in_phi = pair.phi.member(x, low);
        if (ideal != in_phi)
          report.failures.push_back(
              {"ideals", "lower set " + mask_str(low) + (in_phi ? " is in Phi but not a " :
                                                                  " is a ") +
                             pair.psi.name + "-ideal" + (in_phi ? "" : " outside Phi")});
      }
    }
  }

  // (c) Phi*(X) = Psi-membership lower sets.
  {
    std::vector<Mask> star;
    for (const auto& ls : phi_star(pair.phi, x)) star.push_back(ls.bits);
    std::sort(star.begin(), star.end());
    std::vector<Mask> expected = psi_sets;
    std::sort(expected.begin(), expected.end());
    if (star != expected)
      report.failures.push_back({"compacts", "Phi-compact lower sets differ from the " +
                                                 pair.psi.name + " lower sets"});
  }
  return report;
}

bool check_doctrine_continuity(const Doctrine& d, const FinPoset& x, std::size_t max_lattice) {
  const auto ll = lower_set_lattice(x, max_lattice);
  return is_continuous(ll.order, d);
}

}  // namespace ordkit
