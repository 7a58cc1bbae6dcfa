#include <doctest.h>

#include "ordkit/continuity.hpp"
#include "ordkit/doctrine.hpp"
#include "ordkit/enumerate.hpp"
#include "oracles.hpp"

using namespace ordkit;

TEST_CASE("the four built-in pairs and their flags") {
  const auto& pairs = builtin_doctrines();
  REQUIRE(pairs.size() == 4);
  CHECK(pairs[0].phi.name == "directed");
  CHECK(pairs[0].psi.name == "finite-cofinality");
  CHECK(pairs[1].phi.name == "empty-or-directed");
  CHECK(pairs[2].phi.name == "nonempty");
  CHECK(pairs[3].phi.name == "all");
  CHECK(pairs[3].psi.name == "has-greatest");

  for (const auto& p : pairs) {
    CHECK(p.phi.contains_omega);
    CHECK_FALSE(p.psi.contains_omega);
    CHECK(p.phi.contains_empty != p.psi.contains_empty);
    CHECK(p.phi.member_of(FinPoset()) == p.phi.contains_empty);
    CHECK(p.psi.member_of(FinPoset()) == p.psi.contains_empty);
    CHECK(p.phi.member_of(FinPoset::chain(1)));
    CHECK(p.psi.member_of(FinPoset::chain(1)));
  }

  CHECK_FALSE(pairs[0].phi.member_of(FinPoset::antichain(2)));
  CHECK(pairs[3].phi.member_of(FinPoset()));
  CHECK_FALSE(pairs[0].phi.member_of(FinPoset()));
  CHECK(pairs[3].psi.member_of(FinPoset::chain(3)));
  CHECK_THROWS_AS(doctrine_pair_by_name("bogus"), std::invalid_argument);
}

TEST_CASE("membership respects isomorphism") {
  const std::vector<std::vector<int>> perms3{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}, {2, 1, 0}};
  for (const auto& pair : builtin_doctrines())
    for (const auto& x : posets_up_to(3)) {
      if (x.size() != 3) continue;
      for (const auto& perm : perms3)
        CHECK(pair.phi.member_of(x) == pair.phi.member_of(x.relabel(perm)));
    }
}

TEST_CASE("phi_of filters the lower sets") {
  const auto& dir = doctrine_pair_by_name("directed").phi;
  const auto a2 = FinPoset::antichain(2);
  const auto got = phi_of(dir, a2);
  REQUIRE(got.size() == 2);  // exactly the principal ideals
  CHECK(got[0].bits == 0b01);
  CHECK(got[1].bits == 0b10);

  CHECK(phi_of(doctrine_pair_by_name("all").phi, FinPoset::chain(2)).size() == 3);
  CHECK(phi_of(doctrine_pair_by_name("nonempty").phi, FinPoset::chain(2)).size() == 2);
}

TEST_CASE("phi_of is closed under the monad operations") {
  for (const auto& pair : builtin_doctrines())
    for (const auto& x : posets_up_to(3)) {
      const auto phis = phi_of_masks(pair.phi, x);
      const auto member_of = [&](Mask m) {
        return std::find(phis.begin(), phis.end(), m) != phis.end();
      };
      // unit: principal ideals index joins
      for (int e = 0; e < x.size(); ++e) CHECK(member_of(x.down_mask(e)));
      // multiplication: a member-indexed union of members is a member
      const int k = (int)phis.size();
      std::vector<Mask> up(k, 0);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          if ((phis[a] & ~phis[b]) == 0) up[a] |= Mask(1) << b;
      const FinPoset phi_poset = FinPoset::from_up_masks(k, std::move(up));
      for (Mask family : all_lower_set_masks(phi_poset)) {
        if (!pair.phi.member(phi_poset, family)) continue;
        Mask u = 0;
        for (int j : mask_elements(family)) u |= phis[j];
        CHECK(member_of(u));
      }
    }
}

TEST_CASE("phi_star matches the covering definition and the partner doctrine") {
  const auto& pairs = builtin_doctrines();

  // hand-checked values
  {
    auto got = phi_star(doctrine_pair_by_name("all").phi, FinPoset::chain(2));
    REQUIRE(got.size() == 2);
    CHECK(got[0].bits == 0b01);
    CHECK(got[1].bits == 0b11);
  }
  CHECK(phi_star(doctrine_pair_by_name("directed").phi, FinPoset::antichain(2)).size() == 4);
  CHECK(phi_star(doctrine_pair_by_name("nonempty").phi, FinPoset::chain(1)).size() == 2);

  // oracle cross-check on every poset with at most 3 elements
  for (int n = 0; n <= 3; ++n)
    for (const auto& x : enumerate_posets(n))
      for (const auto& pair : pairs) {
        std::vector<Mask> got;
        for (const auto& ls : phi_star(pair.phi, x)) got.push_back(ls.bits);
        std::sort(got.begin(), got.end());
        CHECK(got == oracles::phi_compact_by_definition(pair.phi, x));
      }
}

TEST_CASE("saturation holds for the built-ins and fails for an ad-hoc class") {
  for (const auto& pair : builtin_doctrines()) {
    CHECK(check_saturation(pair.phi, 3).ok());
    CHECK(check_saturation(pair.psi, 3).ok());
  }

  const Doctrine small{"size-at-most-2", "", true, false,
                       [](const FinPoset&, Mask m) { return popcount(m) <= 2; }};
  const auto rep = check_saturation(small, 3);
  REQUIRE_FALSE(rep.ok());
  bool union_witness = false, cofinal_image_witness = false;
  for (const auto& f : rep.failures) {
    if (f.condition == "multiplication") union_witness = true;
    if (f.condition == "cofinal-image") cofinal_image_witness = true;
  }
  CHECK(union_witness);
  CHECK(cofinal_image_witness);
}

TEST_CASE("finite soundness of the four pairs, and failure of a mismatch") {
  CHECK(check_soundness_finite(doctrine_pair_by_name("all"), FinPoset::antichain(2)).ok());
  CHECK(check_soundness_finite(doctrine_pair_by_name("directed"), FinPoset::diamond()).ok());

  const DoctrinePair mismatched{doctrine_pair_by_name("directed").phi,
                                doctrine_pair_by_name("all").psi};
  const auto rep = check_soundness_finite(mismatched, FinPoset::antichain(2));
  REQUIRE_FALSE(rep.ok());
  bool compacts_differ = false;
  for (const auto& f : rep.failures)
    if (f.condition == "compacts") compacts_differ = true;
  CHECK(compacts_differ);
}

TEST_CASE("L(X) is continuous for every built-in doctrine") {
  CHECK(check_doctrine_continuity(doctrine_pair_by_name("directed").phi, FinPoset::chain(2)));
  CHECK(check_doctrine_continuity(doctrine_pair_by_name("all").phi, FinPoset::antichain(2)));
  for (const auto& pair : builtin_doctrines())
    CHECK(check_doctrine_continuity(pair.phi, FinPoset()));
}

TEST_CASE("meets indexed by the partner commute with joins in the two-element lattice") {
  // For posets X, Y up to 3 elements, monotone F : X^op x Y -> 2, and members
  // phi of Phi(Y), psi of Psi(X): min over psi of max over phi equals max
  // over phi of min over psi.
  const auto posets = posets_up_to(3);
  for (const auto& pair : builtin_doctrines())
    for (const auto& x : posets)
      for (const auto& y : posets) {
        const auto phis = phi_of_masks(pair.phi, y);
        const auto psis = phi_of_masks(pair.psi, x);
        // monotone F: antitone in x, monotone in y, as bitmasks over (x, y)
        const int cells = x.size() * y.size();
        if (cells > 12) continue;
        for (Mask f = 0; f < (Mask(1) << cells); ++f) {
          const auto F = [&](int a, int b) { return (f >> (a * y.size() + b)) & 1u; };
          bool monotone = true;
          for (int a = 0; a < x.size() && monotone; ++a)
            for (int a2 = 0; a2 < x.size() && monotone; ++a2)
              for (int b = 0; b < y.size() && monotone; ++b)
                for (int b2 = 0; b2 < y.size(); ++b2)
                  if (x.leq(a2, a) && y.leq(b, b2) && F(a, b) && !F(a2, b2)) {
                    monotone = false;
                    break;
                  }
          if (!monotone) continue;
          for (Mask phi : phis)
            for (Mask psi : psis) {
              unsigned min_max = 1;
              for (int a : mask_elements(psi)) {
                unsigned mx = 0;
                for (int b : mask_elements(phi)) mx |= F(a, b);
                min_max &= mx;
              }
              unsigned max_min = 0;
              for (int b : mask_elements(phi)) {
                unsigned mn = 1;
                for (int a : mask_elements(psi)) mn &= F(a, b);
                max_min |= mn;
              }
              CHECK(min_max == max_min);
            }
        }
      }
}
