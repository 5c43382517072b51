#include "jackideal/sympoly.hpp"

#include <algorithm>

namespace jackideal {

namespace {
std::atomic<std::size_t> g_term_budget{10'000'000};
}

std::size_t term_budget() { return g_term_budget.load(std::memory_order_relaxed); }

void set_term_budget(std::size_t terms) { g_term_budget.store(terms, std::memory_order_relaxed); }

std::size_t orbit_size(const Partition& lambda, int n) {
  // n! / Π (multiplicity)!, computed incrementally as a product of binomials
  std::vector<int> v = lambda.padded(static_cast<std::size_t>(n));
  std::size_t result = 1;
  std::size_t placed = 0;
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    const std::size_t mult = j - i;
    // multiply by C(placed + mult, mult)
    for (std::size_t t = 1; t <= mult; ++t) {
      result = result * (placed + t) / t;
    }
    placed += mult;
    i = j;
  }
  return result;
}

void for_each_orbit_point(const Partition& lambda, int n, const std::function<void(const Exponent&)>& visit) {
  Exponent e = lambda.padded(static_cast<std::size_t>(n));
  std::sort(e.begin(), e.end());
  do {
    visit(e);
  } while (std::next_permutation(e.begin(), e.end()));
}

}  // namespace jackideal
