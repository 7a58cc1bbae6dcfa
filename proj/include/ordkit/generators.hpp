#ifndef ORDKIT_GENERATORS_HPP
#define ORDKIT_GENERATORS_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "ordkit/plmap.hpp"
#include "ordkit/rational.hpp"
#include "ordkit/umodule.hpp"

namespace ordkit {

/// Seeded source of random exact values; property suites are reproducible
/// bit-for-bit given the seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) {
    return (int)std::uniform_int_distribution<long long>(lo, hi)(eng_);
  }

  Rat rat01(int max_den = 16) {
    const int den = uniform(1, max_den);
    return Rat(uniform(0, den), den);
  }

  /// Continuous monotone map fixing 1 (element of U-hat).
  PLMap uhat(int max_pieces = 3, int max_den = 8) {
    return monotone_chain(max_pieces, max_den, rat01(max_den), Rat(1));
  }

  /// Monotone surjection (element of U).
  PLMap u(int max_pieces = 3, int max_den = 8) {
    return monotone_chain(max_pieces, max_den, Rat(0), Rat(1));
  }

  /** Random carrier element of a FunctionModule.  A table is a carrier
      element exactly when its level sets are principal filters compatible
      with the pair, so we draw an increasing chain m_1 <= ... <= m_k of
      admissible level generators with increasing values r_i (r_k = 1) and set
      a(z) = max{r_i | z >= m_i}. */
  FunctionModule::Element function_elem(const FunctionModule& m, int max_den = 8) {
    const auto& x = m.lattice();
    std::vector<int> candidates;
    for (int e = 0; e < x.size(); ++e) {
      if (m.requires_bottom_zero() && e == *x.bottom()) continue;
      if (m.requires_binary_joins() && !join_prime(x, e)) continue;
      candidates.push_back(e);
    }
    const int steps = uniform(1, 3);
    std::vector<int> chain;
    for (int s = 0; s < steps; ++s) {
      std::vector<int> above;
      for (int e : candidates)
        if (chain.empty() || x.leq(chain.back(), e)) above.push_back(e);
      if (above.empty()) break;
      chain.push_back(above[uniform(0, (int)above.size() - 1)]);
    }
    std::vector<Rat> values;
    for (std::size_t i = 0; i < chain.size(); ++i) values.push_back(rat01(max_den));
    std::sort(values.begin(), values.end());
    if (!values.empty()) values.back() = Rat(1);

    FunctionModule::Element a(x.size(), Rat(0));
    for (int z = 0; z < x.size(); ++z)
      for (std::size_t i = 0; i < chain.size(); ++i)
        if (x.leq(chain[i], z)) a[z] = rat_max(a[z], values[i]);
    a[*x.top()] = Rat(1);
    m.require_element(a);
    return a;
  }

 private:
  std::mt19937_64 eng_;

  static bool join_prime(const FinPoset& x, int e) {
    if (e == *x.bottom()) return true;  // the whole lattice is a prime filter
    for (int i = 0; i < x.size(); ++i)
      for (int j = 0; j < x.size(); ++j)
        if (x.leq(e, *x.join(i, j)) && !x.leq(e, i) && !x.leq(e, j)) return false;
    return true;
  }

  PLMap monotone_chain(int max_pieces, int max_den, Rat y_first, Rat y_last) {
    const int pieces = uniform(1, max_pieces);
    std::vector<Rat> xs{Rat(0)};
    for (int i = 0; i < pieces - 1; ++i) xs.push_back(rat01(max_den));
    xs.push_back(Rat(1));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Rat> ys;
    for (std::size_t i = 0; i < xs.size(); ++i) ys.push_back(rat01(max_den));
    std::sort(ys.begin(), ys.end());
    ys.front() = y_first;
    ys.back() = y_last;
    std::sort(ys.begin(), ys.end());
    std::vector<std::pair<Rat, Rat>> pts;
    for (std::size_t i = 0; i < xs.size(); ++i) pts.push_back({xs[i], ys[i]});
    return PLMap::from_points(pts);
  }
};

}  // namespace ordkit

#endif
