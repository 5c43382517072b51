// Acceptance checks. Prints one PASS/FAIL line per criterion followed by a
// short detail line; exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "jackideal/errors.hpp"
#include "jackideal/ideal.hpp"
#include "jackideal/jack.hpp"
#include "jackideal/partition.hpp"
#include "jackideal/suites.hpp"

using namespace jackideal;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Tally {
  std::size_t cases = 0, failed = 0;
  std::vector<std::string> first_failures;

  void absorb(const Report& rep, const std::string& tag) {
    cases += rep.cases.size();
    for (const auto& c : rep.cases) {
      if (c.pass) continue;
      ++failed;
      if (first_failures.size() < 3) first_failures.push_back(tag + " " + c.id);
    }
  }
  Outcome outcome(std::string what) const {
    Outcome o{failed == 0, std::move(what) + ": " + std::to_string(cases - failed) + "/" + std::to_string(cases) + " cases"};
    for (const auto& f : first_failures) o.detail += "; failed " + f;
    return o;
  }
};

std::string tag(int k, int r, int n) {
  return "(k=" + std::to_string(k) + ",r=" + std::to_string(r) + ",n=" + std::to_string(n) + ")";
}

const std::vector<std::pair<int, int>> kGrid{{1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 2}, {2, 5}};

// Pairs of the grid for which β(k,r) is defined; the rest must be rejected.
std::vector<std::pair<int, int>> usable_grid(std::string& note) {
  std::vector<std::pair<int, int>> out;
  for (auto [k, r] : kGrid) {
    try {
      beta_kr(k, r);
      out.emplace_back(k, r);
    } catch (const InvalidParameters&) {
      note += "; (k=" + std::to_string(k) + ",r=" + std::to_string(r) + ") rejected: k+1 and r-1 not coprime";
    }
  }
  return out;
}

Outcome jack_eigen() {
  Tally t;
  for (int n = 1; n <= 4; ++n) {
    const auto rep = verify_sekiguchi_suite(n, 8);
    Report eigen;
    for (const auto& c : rep.cases)
      if (c.id.rfind("cleared:", 0) != 0) eigen.cases.push_back(c);
    t.absorb(eigen, "n=" + std::to_string(n));
  }
  return t.outcome("H and Sekiguchi eigen-equations, |λ|<=8, n<=4");
}

Outcome known_coefficient() {
  // m_(2) + 2β/(1+β) m_(1,1), written out by hand
  MSymPoly<BetaRatFunc> want(2);
  want.add_term(Partition{2}, BetaRatFunc(1));
  want.add_term(Partition{1, 1}, BetaRatFunc(BetaPoly::linear(BigRat(2), BigRat(0)), BetaPoly::linear(BigRat(1), BigRat(1))));
  const auto got = jack_symbolic(Partition{2}, 2);
  return {got.poly == want, "P_(2), n=2: coefficient of m_(1,1) is " + got.coeff(Partition{1, 1}).to_string()};
}

Outcome denominator_clearing() {
  Tally t;
  for (int n = 1; n <= 4; ++n) {
    const auto rep = verify_sekiguchi_suite(n, 8);
    Report cleared;
    for (const auto& c : rep.cases)
      if (c.id.rfind("cleared:", 0) == 0) cleared.cases.push_back(c);
    t.absorb(cleared, "n=" + std::to_string(n));
  }
  return t.outcome("c_λ·P_λ polynomial in β, |λ|<=8, n<=4");
}

Outcome regularity() {
  std::string note;
  const auto grid = usable_grid(note);
  std::size_t cases = 0, pole_failures = 0, order_failures = 0;
  std::vector<std::string> examples;
  for (auto [k, r] : grid) {
    for (int n = 1; n <= 4; ++n) {
      const auto rep = verify_regularity(k, r, n, 10);
      cases += rep.cases.size();
      for (const auto& c : rep.cases) {
        if (c.pass) continue;
        const auto& d = c.detail;
        if (d.contains("pole_profile") && d.at("pole_profile") != 0) ++pole_failures;
        if (d.contains("c_lambda_zero_order") && d.at("c_lambda_zero_order") != 1) {
          ++order_failures;
          if (examples.size() < 3)
            examples.push_back(tag(k, r, n) + " " + c.id + " zero order " + d.at("c_lambda_zero_order").dump());
        }
      }
    }
  }
  Outcome o;
  o.pass = pole_failures == 0 && order_failures == 0;
  o.detail = std::to_string(cases) + " cases, |λ|<=10, n<=4; pole_profile nonzero: " + std::to_string(pole_failures) +
             "; non-admissible neighbors whose c_λ zero order is not 1: " + std::to_string(order_failures);
  for (const auto& e : examples) o.detail += "; e.g. " + e;
  o.detail += note;
  return o;
}

Outcome pieri_lassalle() {
  Tally t;
  for (int n = 1; n <= 4; ++n) {
    t.absorb(verify_pieri(n, 6), "pieri n=" + std::to_string(n));
    t.absorb(verify_lassalle(n, 6), "lassalle n=" + std::to_string(n));
  }
  return t.outcome("symbolic Pieri and both Lassalle rules, |μ|<=6, n<=4");
}

Outcome pieri_vanishing() {
  std::string note;
  Tally t;
  for (auto [k, r] : usable_grid(note))
    for (int n = 1; n <= 4; ++n) t.absorb(verify_pieri_specialization(k, r, n, 9), tag(k, r, n));
  auto o = t.outcome("specialized Pieri coefficients, admissible |μ|<=8, n<=4");
  o.detail += note;
  return o;
}

Outcome closure() {
  Tally t;
  for (auto [k, r] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {1, 4}})
    for (int n = 1; n <= 4; ++n) t.absorb(verify_closure(k, r, n, 10, 4, 4), tag(k, r, n));
  return t.outcome("p_m, l_m, w^(t)_m images reduce to members, dmax=10");
}

Outcome commutators() {
  const std::uint64_t seed = 20240601;
  const auto rep = verify_commutators(3, 5, 25, seed);
  Tally t;
  t.absorb(rep, "");
  auto o = t.outcome(std::to_string(rep.cases.size()) + " relations x 25 trials, n=3, degree<=5, seed " +
                     std::to_string(seed));
  return o;
}

Outcome wheel() {
  Tally t;
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}})
    t.absorb(verify_wheel_theorem(k, n, 10), "(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")");
  return t.outcome("vanishing on x_1=...=x_{k+1} and dimensions per degree, dmax=10");
}

Outcome principal() {
  Tally t;
  for (int n = 1; n <= 4; ++n) t.absorb(verify_principal(n, 8), "n=" + std::to_string(n));
  std::string note;
  auto pairs = usable_grid(note);
  pairs.emplace_back(1, 4);
  for (auto [k, r] : pairs)
    if (k + 1 <= 4) t.absorb(verify_principal_vanishing(k, r, 10), tag(k, r, k + 1));
  return t.outcome("product formula vs evaluation, |λ|<=8, n<=4; vanishing at n=k+1, |λ|<=10");
}

Outcome phi3() {
  Tally t;
  for (int r : {2, 3, 5, 6}) t.absorb(verify_phi3(r), "r=" + std::to_string(r));
  return t.outcome("P_(r,0,0) at β(2,r), r in {2,3,5,6}");
}

Outcome nonvanishing() {
  std::string note;
  Tally t;
  for (auto [k, r] : usable_grid(note))
    for (int n = 1; n <= 4; ++n) t.absorb(verify_nonvanishing(k, r, n, 10), tag(k, r, n));
  auto o = t.outcome("node factors nonzero on admissible λ, |λ|<=10, n<=4");
  o.detail += note;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"jack eigen-equations", jack_eigen},
      {"known coefficient P_(2)", known_coefficient},
      {"denominator clearing", denominator_clearing},
      {"regularity at β(k,r)", regularity},
      {"symbolic Pieri and Lassalle", pieri_lassalle},
      {"Pieri vanishing", pieri_vanishing},
      {"ideal closure", closure},
      {"commutator relations", commutators},
      {"wheel identification", wheel},
      {"principal specialization", principal},
      {"phi3 eigen-equations", phi3},
      {"node nonvanishing", nonvanishing},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s criterion %zu (%s) [%.1fs]\n    %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
