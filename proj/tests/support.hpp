#ifndef JACKIDEAL_TESTS_SUPPORT_HPP
#define JACKIDEAL_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "jackideal/beta_poly.hpp"
#include "jackideal/bigrat.hpp"
#include "jackideal/partition.hpp"

namespace testing_support {

using jackideal::BetaPoly;
using jackideal::BigRat;
using jackideal::Partition;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int range(int lo, int hi) { return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  BigRat rat() {
    int den = range(1, 7);
    return BigRat(range(-20, 20), den);
  }
  BetaPoly poly(int max_degree) {
    std::vector<BigRat> c;
    for (int i = 0, d = range(0, max_degree); i <= d; ++i) c.push_back(rat());
    return BetaPoly(std::move(c));
  }

 private:
  std::mt19937_64 gen_;
};

// Every weakly decreasing sequence with parts <= d and sum d, by plain recursion;
// no ordering guarantees. Independent of partitions_of.
inline void brute_partitions(int left, int cap, std::size_t maxlen, std::vector<int>& cur,
                             std::vector<Partition>& out) {
  if (left == 0) {
    out.emplace_back(cur);
    return;
  }
  if (cur.size() == maxlen) return;
  for (int p = std::min(left, cap); p >= 1; --p) {
    cur.push_back(p);
    brute_partitions(left - p, p, maxlen, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Partition> brute_partitions(int d, std::size_t maxlen) {
  std::vector<Partition> out;
  std::vector<int> cur;
  brute_partitions(d, d, maxlen, cur, out);
  return out;
}

// Admissibility straight from the padded definition.
inline bool brute_admissible(const Partition& p, int k, int r, int n) {
  if (p.length() > static_cast<std::size_t>(n)) return false;
  std::vector<int> v = p.padded(static_cast<std::size_t>(n));
  for (int i = 0; i + k < n; ++i)
    if (v[i] - v[i + k] < r) return false;
  return true;
}

}  // namespace testing_support

#endif  // JACKIDEAL_TESTS_SUPPORT_HPP
