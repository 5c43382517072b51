#include <functional>
#include <random>

#include "jackideal/json_io.hpp"
#include "jackideal/operators.hpp"
#include "jackideal/suites.hpp"

namespace jackideal {

namespace {

using Poly = ExpandedPoly<BetaPoly>;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  // plain modulo keeps the stream identical across standard libraries
  int range(int lo, int hi) { return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 gen_;
};

BetaPoly random_coeff(Rng& rng) {
  for (;;) {
    BetaPoly c = BetaPoly::linear(BigRat(rng.range(-9, 9)), BigRat(rng.range(-9, 9)));
    if (!c.is_zero()) return c;
  }
}

Poly random_poly(int n, int degree, Rng& rng) {
  Poly p(n);
  const int terms = rng.range(1, 6);
  for (int t = 0; t < terms; ++t) {
    Exponent e(n, 0);
    int left = rng.range(0, degree);
    for (int i = 0; i < n && left > 0; ++i) {
      const int take = i == n - 1 ? left : rng.range(0, left);
      e[i] += take;
      left -= take;
    }
    // spread the remainder so the last variable is not favored
    std::swap(e[0], e[rng.range(0, n - 1)]);
    p.add_term(e, random_coeff(rng));
  }
  return p;
}

Poly random_symmetric(int n, int degree, Rng& rng) {
  MSymPoly<BetaPoly> p(n);
  const int terms = rng.range(1, 4);
  for (int t = 0; t < terms; ++t) {
    const auto parts = partitions_of(rng.range(0, degree), static_cast<std::size_t>(n));
    p.add_term(parts[rng.range(0, static_cast<int>(parts.size()) - 1)], random_coeff(rng));
  }
  return msym_to_expanded(p);
}

struct Relation {
  std::string name;
  bool symmetric_input;
  // returns (holds, parameters drawn for this trial)
  std::function<std::pair<bool, json>(const Poly&, Rng&)> check;
};

const BetaPoly& B() {
  static const BetaPoly b = BetaPoly::beta();
  return b;
}

Poly w(const Poly& p, int t, int m) { return apply_w_ext(p, t, m, B()); }

int swapped(int m, int i, int j) { return m == i ? j : (m == j ? i : m); }

std::vector<Relation> relations(int n) {
  std::vector<Relation> rels;
  rels.push_back({"dunkl_commute", false, [n](const Poly& p, Rng& rng) {
                    const int i = rng.range(0, n - 1);
                    const int j = (i + rng.range(1, n - 1)) % n;
                    const bool ok = apply_dunkl(apply_dunkl(p, j, B()), i, B()) == apply_dunkl(apply_dunkl(p, i, B()), j, B());
                    return std::pair{ok, json{{"i", i}, {"j", j}}};
                  }});
  rels.push_back({"dunkl_x", false, [n](const Poly& p, Rng& rng) {
                    const int i = rng.range(0, n - 1);
                    const int j = rng.range(0, n - 1);
                    const Poly lhs = apply_dunkl(multiply_var(p, j), i, B()) - multiply_var(apply_dunkl(p, i, B()), j);
                    Poly rhs(n);
                    if (i == j) {
                      rhs = p;
                      for (int t = 0; t < n; ++t)
                        if (t != i) rhs += apply_exchange(p, i, t) * B();
                    } else {
                      rhs = apply_exchange(p, i, j) * (-B());
                    }
                    return std::pair{lhs == rhs, json{{"i", i}, {"j", j}}};
                  }});
  rels.push_back({"exchange_dunkl", false, [n](const Poly& p, Rng& rng) {
                    const int i = rng.range(0, n - 1);
                    const int j = (i + rng.range(1, n - 1)) % n;
                    const int m = rng.range(0, n - 1);
                    const bool nabla = apply_exchange(apply_dunkl(p, m, B()), i, j) ==
                                       apply_dunkl(apply_exchange(p, i, j), swapped(m, i, j), B());
                    const bool x = apply_exchange(multiply_var(p, m), i, j) ==
                                   multiply_var(apply_exchange(p, i, j), swapped(m, i, j));
                    return std::pair{nabla && x, json{{"i", i}, {"j", j}, {"m", m}}};
                  }});
  rels.push_back({"cherednik_commute", false, [n](const Poly& p, Rng& rng) {
                    const int i = rng.range(0, n - 1);
                    const int j = (i + rng.range(1, n - 1)) % n;
                    const bool ok = apply_cherednik(apply_cherednik(p, j, B()), i, B()) ==
                                    apply_cherednik(apply_cherednik(p, i, B()), j, B());
                    return std::pair{ok, json{{"i", i}, {"j", j}}};
                  }});
  rels.push_back({"virasoro", false, [](const Poly& p, Rng& rng) {
                    const int a = rng.range(-1, 3);
                    int b = rng.range(-1, 2);
                    if (b >= a) ++b;
                    const Poly lhs = apply_l(apply_l(p, b), a) - apply_l(apply_l(p, a), b);
                    const bool ok = lhs == apply_l(p, a + b) * BetaPoly(b - a);
                    return std::pair{ok, json{{"a", a}, {"b", b}}};
                  }});
  rels.push_back({"l_pm", false, [](const Poly& p, Rng& rng) {
                    const int m = rng.range(1, 4);
                    const Poly lhs = apply_l(mul_power_sum(p, m), 1) - mul_power_sum(apply_l(p, 1), m);
                    return std::pair{lhs == mul_power_sum(p, m + 1) * BetaPoly(m), json{{"m", m}}};
                  }});
  rels.push_back({"l_w2", true, [](const Poly& p, Rng& rng) {
                    const int m = rng.range(-1, 3);
                    return std::pair{apply_l(p, m) == w(p, 2, m), json{{"m", m}}};
                  }});
  rels.push_back({"w30_hamiltonian", true, [](const Poly& p, Rng&) {
                    const Poly rhs = apply_hamiltonian(p, B()) + apply_l(p, 0) * (B() - BetaPoly(1)) -
                                     mul_power_sum(apply_l(p, -1), 1) * B();
                    return std::pair{w(p, 3, 0) == rhs, json::object()};
                  }});
  rels.push_back({"l_minus1_w30", false, [](const Poly& p, Rng&) {
                    const Poly lhs = apply_l(w(p, 3, 0), -1) - w(apply_l(p, -1), 3, 0);
                    return std::pair{lhs == w(p, 3, -1) * BetaPoly(2), json::object()};
                  }});
  rels.push_back({"w_lowest_w3", true, [](const Poly& p, Rng& rng) {
                    const int t = rng.range(2, 4);
                    const Poly lhs = w(w(p, 3, -1), t, -t + 1) - w(w(p, t, -t + 1), 3, -1);
                    return std::pair{lhs == w(p, t + 1, -t) * BetaPoly(t - 1), json{{"t", t}}};
                  }});
  rels.push_back({"w30_p2", true, [n](const Poly& p, Rng&) {
                    const Poly lhs = w(mul_power_sum(p, 2), 3, 0) - mul_power_sum(w(p, 3, 0), 2);
                    const BetaPoly c = BetaPoly::linear(BigRat(2 * (n - 1)), BigRat(2));
                    const Poly rhs = apply_l(p, 2) * BetaPoly(4) + mul_power_sum(p, 2) * c;
                    return std::pair{lhs == rhs, json::object()};
                  }});
  // [w^(t+1)_m, p_2] with the quadratic terms composed in either order
  for (bool right_first : {true, false}) {
    rels.push_back({right_first ? "w_p2_right_first" : "w_p2_left_first", true, [right_first](const Poly& p, Rng& rng) {
                      const int t = rng.range(2, 4);
                      const int m = rng.range(-t, 1);
                      const Poly lhs = w(mul_power_sum(p, 2), t + 1, m) - mul_power_sum(w(p, t + 1, m), 2);
                      Poly rhs = w(p, t, m + 2) * BetaPoly(2 * t) +
                                 w(p, t - 1, m + 2) * BetaPoly::linear(BigRat(-t * (t - 1)), BigRat(t * (t - 1)));
                      for (int i = 0; i <= t - 2; ++i) {
                        const int ta = i + 1, ma = m + t - i;
                        const int tb = t - 1 - i, mb = -t + 2 + i;
                        const Poly term = right_first ? w(w(p, tb, mb), ta, ma) : w(w(p, ta, ma), tb, mb);
                        rhs += term * (B() * BetaPoly(2 * (t - 1 - i)));
                      }
                      return std::pair{lhs == rhs, json{{"t", t}, {"m", m}}};
                    }});
  }
  return rels;
}

}  // namespace

Report verify_commutators(int n, int degree, int trials, std::uint64_t seed) {
  if (n < 2) throw InvalidParameters("commutator checks need n >= 2");
  Report rep;
  rep.suite = "commutators";
  rep.params = {{"n", n}, {"degree", degree}, {"trials", trials}, {"seed", seed}};
  const auto rels = relations(n);
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const std::uint64_t stream = seed + 0x9E3779B97F4A7C15ULL * (r + 1);
    Rng rng(stream);
    json failures = json::array();
    for (int trial = 0; trial < trials; ++trial) {
      const Poly p = rels[r].symmetric_input ? random_symmetric(n, degree, rng) : random_poly(n, degree, rng);
      auto [ok, drawn] = rels[r].check(p, rng);
      if (!ok) failures.push_back({{"trial", trial}, {"params", drawn}, {"input", p}});
    }
    json detail{{"trials", trials}, {"seed", seed}, {"stream", stream}, {"symmetric_input", rels[r].symmetric_input},
                {"failures", failures}};
    // the other composition order is recorded for comparison, not as a case
    if (rels[r].name == "w_p2_left_first") {
      detail["holds"] = failures.empty();
      rep.notes[rels[r].name] = std::move(detail);
    } else {
      rep.add(rels[r].name, failures.empty(), std::move(detail));
    }
  }
  return rep;
}

}  // namespace jackideal
