#ifndef ORDKIT_ENUMERATE_HPP
#define ORDKIT_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "ordkit/poset.hpp"

namespace ordkit {

/// All posets on exactly n elements, one per isomorphism class, canonical form.
std::vector<FinPoset> enumerate_posets(int n, int max_n = 8);

/// All complete lattices on exactly n elements, one per isomorphism class.
std::vector<FinPoset> enumerate_lattices(int n, int max_n = 8);

std::vector<FinPoset> enumerate_distributive_lattices(int n, int max_n = 8);

/// Every poset with size <= n (classes), smallest first.
std::vector<FinPoset> posets_up_to(int n, int max_n = 8);
std::vector<FinPoset> lattices_up_to(int n, int max_n = 8);

}  // namespace ordkit

#endif
