#include <filesystem>
#include <unistd.h>

#include "doctest.h"
#include "jackideal/errors.hpp"
#include "jackideal/ideal.hpp"
#include "jackideal/suites.hpp"
#include "support.hpp"

using namespace jackideal;
using testing_support::brute_admissible;
using testing_support::Rng;

namespace {

// Rank over ℚ by ordinary Gaussian elimination with BigRat pivots.
std::size_t rational_rank(std::vector<std::vector<BigRat>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      const BigRat f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_SUITE("ideal") {
  TEST_CASE("basis for k=1, r=2, n=2") {
    const auto basis = build_basis(1, 2, 2, 4);
    CHECK(basis.character() == std::vector<std::size_t>{0, 0, 1, 1, 2});
    CHECK(basis.degree(4).size() == 2);
    CHECK(basis.degree(4)[0].lambda == Partition{4});
    CHECK(basis.degree(4)[1].lambda == Partition{3, 1});
    CHECK(basis.find(Partition{2}) != nullptr);
    CHECK(basis.find(Partition{1, 1}) == nullptr);
    CHECK(basis.beta0() == BigRat(-1, 2));
    for (const auto& [d, list] : basis.elements())
      for (const auto& e : list) CHECK(e.poly.coeff(e.lambda) == BigRat(1));
  }

  TEST_CASE("vacuous admissibility gives every partition") {
    const auto basis = build_basis(2, 2, 2, 6);
    for (int d = 0; d <= 6; ++d) CHECK(basis.degree(d).size() == partitions_of(d, 2).size());
    CHECK(build_basis(3, 2, 2, 0).size() == 1);
    CHECK(build_basis(1, 2, 2, 0).size() == 0);
    CHECK_THROWS_AS(build_basis(1, 3, 2, 3), InvalidParameters);
  }

  TEST_CASE("membership examples") {
    const auto basis = build_basis(1, 2, 2, 6);
    const auto self = reduce_membership(basis.find(Partition{2})->poly, basis);
    CHECK(self.member);
    CHECK(self.combination == std::map<Partition, BigRat>{{Partition{2}, BigRat(1)}});

    const auto m11 = reduce_membership(MSymPoly<BigRat>::basis(2, Partition{1, 1}), basis);
    CHECK_FALSE(m11.member);
    REQUIRE(m11.obstruction.has_value());
    CHECK(*m11.obstruction == Partition{1, 1});

    // p1·P_(2) at β = −1/2 by hand: (m1)(m2 − 2 m11) = m3 − m21
    MSymPoly<BigRat> prod(2);
    prod.add_term(Partition{3}, BigRat(1));
    prod.add_term(Partition{2, 1}, BigRat(-1));
    CHECK(multiply(power_sum<BigRat>(1, 2), basis.find(Partition{2})->poly) == prod);
    const auto cert = reduce_membership(prod, basis);
    CHECK(cert.member);
    CHECK(cert.combination == std::map<Partition, BigRat>{{Partition{3}, BigRat(1)}});
    CHECK(recombine(cert, basis) == prod);

    CHECK_THROWS_AS(reduce_membership(MSymPoly<BigRat>::basis(2, Partition{7}), basis), DegreeOverflow);
    CHECK(reduce_membership(MSymPoly<BigRat>(2), basis).member);
  }

  TEST_CASE("reduction recovers random combinations") {
    Rng rng(5);
    for (auto [k, r, n] : {std::tuple{1, 2, 3}, {2, 3, 3}, {2, 2, 4}}) {
      const auto basis = build_basis(k, r, n, 9);
      std::vector<const SpecializedJack*> all;
      for (const auto& [d, list] : basis.elements())
        for (const auto& e : list) all.push_back(&e);
      REQUIRE(!all.empty());
      for (int trial = 0; trial < 15; ++trial) {
        std::map<Partition, BigRat> combo;
        MSymPoly<BigRat> p(n);
        for (int t = rng.range(1, 5); t > 0; --t) {
          const auto* e = all[rng.range(0, static_cast<int>(all.size()) - 1)];
          const BigRat c = rng.rat();
          combo[e->lambda] += c;
          p += e->poly * c;
        }
        std::erase_if(combo, [](const auto& kv) { return kv.second.is_zero(); });
        const auto cert = reduce_membership(p, basis);
        CHECK(cert.member);
        CHECK(cert.combination == combo);
        // perturbing by a non-admissible monomial leaves the ideal
        for (int d = 1; d <= 9; ++d) {
          for (const auto& mu : partitions_of(d, n)) {
            if (brute_admissible(mu, k, r, n)) continue;
            auto q = p + MSymPoly<BigRat>::basis(n, mu);
            bool dominated_by_support = false;
            for (const auto& [lam, c] : p.terms())
              if (lam.weight() == d && dominance_compare(mu, lam) == Dominance::less) dominated_by_support = true;
            if (!dominated_by_support) CHECK_FALSE(reduce_membership(q, basis).member);
            d = 10;
            break;
          }
        }
      }
    }
  }

  TEST_CASE("Pieri coefficients") {
    const BetaPoly b = BetaPoly::beta();
    CHECK(pieri_coefficient(Partition{}, 0) == BetaRatFunc(1));
    CHECK(pieri_coefficient(Partition{1}, 0) == BetaRatFunc(1));
    CHECK(pieri_coefficient(Partition{1}, 1) == BetaRatFunc(BetaPoly(2), b + BetaPoly(1)));
    CHECK_THROWS_AS(pieri_coefficient(Partition{1, 1}, 1), InvalidNode);
    CHECK(pieri_factors(Partition{2, 1}, 2).size() == 4);
    // the vanishing factor for μ=(2), λ=(2,1) at β = −1/2
    const auto f = pieri_factors(Partition{2}, 1);
    CHECK(f[1].label == "second(i=1)");
    CHECK(f[1].num(BigRat(-1, 2)).is_zero());
    CHECK(pieri_coefficient(Partition{2}, 1).evaluate_at(BigRat(-1, 2)).is_zero());
  }

  TEST_CASE("Lassalle coefficients") {
    const BetaPoly b = BetaPoly::beta();
    for (int n = 1; n <= 4; ++n) CHECK(lassalle_down(Partition{1}, 0, n) == BetaRatFunc(n));
    CHECK(lassalle_down(Partition{2}, 0, 2) ==
          BetaRatFunc(BetaPoly::linear(BigRat(4), BigRat(2)), b + BetaPoly(1)));
    // ψ″ for μ = (1): row 0 gives 1·(0·β + 1), row 1 gives 2/(β+1)·(−β)
    CHECK(lassalle_up(Partition{1}, 0) == BetaRatFunc(1));
    CHECK(lassalle_up(Partition{1}, 1) == BetaRatFunc(BetaPoly(-2) * b, b + BetaPoly(1)));
    CHECK_THROWS_AS(lassalle_down(Partition{2, 2}, 0, 2), InvalidNode);
    CHECK_THROWS_AS(lassalle_down(Partition{2}, 1, 2), InvalidNode);
    CHECK_THROWS_AS(lassalle_up(Partition{1, 1}, 1), InvalidNode);
    CHECK(changed_row(Partition{2, 1}, Partition{2, 1, 1}) == 2);
    CHECK(changed_row(Partition{2, 1}, Partition{2}) == 1);
    CHECK(changed_row(Partition{2}, Partition{2}) == -1);
  }

  TEST_CASE("fraction-free rank against rational elimination") {
    CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(exact_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(exact_rank({}) == 0);
    CHECK(exact_rank({{0, 1, 2}, {0, 0, 3}, {0, 2, 7}}) == 2);
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
      const int rows = rng.range(1, 6), cols = rng.range(1, 6);
      std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
      std::vector<std::vector<BigRat>> q(rows, std::vector<BigRat>(cols));
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
          const int v = rng.range(0, 2) == 0 ? 0 : rng.range(-5, 5);
          m[i][j] = v;
          q[i][j] = BigRat(v);
        }
      // duplicate a combination of rows to force rank deficiency
      if (rows > 2)
        for (int j = 0; j < cols; ++j) {
          m[rows - 1][j] = m[0][j] * 2 - m[1][j];
          q[rows - 1][j] = q[0][j] * BigRat(2) - q[1][j];
        }
      CHECK(exact_rank(m) == rational_rank(q));
    }
  }

  TEST_CASE("wheel dimensions") {
    CHECK(wheel_dimension(1, 2, 2) == 1);
    CHECK(wheel_dimension(1, 2, 1) == 0);
    CHECK(wheel_dimension(1, 2, 0) == 0);
    // k = 1, n = 2: multiples of (x1 − x2)^2, so partitions of d − 2 into ≤ 2 parts
    for (int d = 2; d <= 10; ++d) CHECK(wheel_dimension(1, 2, d) == partitions_of(d - 2, 2).size());
    CHECK(wheel_dimension(2, 2, 3) == partitions_of(3, 2).size());
  }

  TEST_CASE("basis serialization") {
    const auto dir = std::filesystem::temp_directory_path() / ("jackideal_basis_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    const auto basis = build_basis(2, 3, 3, 7);
    save_basis(basis, dir);
    CHECK(std::filesystem::exists(dir / "meta.json"));
    const auto back = load_basis(dir);
    CHECK(back.character() == basis.character());
    for (const auto& [d, list] : basis.elements())
      for (const auto& e : list) CHECK(back.find(e.lambda)->poly == e.poly);
    std::filesystem::remove_all(dir);
  }
}

TEST_SUITE("suites") {
  TEST_CASE("small suite runs pass") {
    CHECK(verify_pieri(3, 4).all_pass());
    CHECK(verify_lassalle(3, 4).all_pass());
    CHECK(verify_pieri_specialization(1, 2, 2, 6).all_pass());
    CHECK(verify_pieri_specialization(2, 2, 2, 5).all_pass());
    CHECK(verify_closure(1, 2, 2, 8, 3, 3).all_pass());
    CHECK(verify_restriction(1, 2, 2, 6, 2).all_pass());
    CHECK(verify_phi3(2).all_pass());
    CHECK(verify_phi3(3).all_pass());
    CHECK(verify_wheel_theorem(2, 2, 6).all_pass());
    CHECK(verify_wheel_theorem(1, 2, 6).all_pass());
    CHECK(verify_principal(3, 5).all_pass());
    const auto comm = verify_commutators(3, 4, 3, 99);
    CHECK(comm.all_pass());
    CHECK(comm.notes.at("w_p2_left_first").at("holds") == false);
  }

  TEST_CASE("report schema") {
    const auto rep = verify_phi3(2);
    const auto j = rep.to_json();
    CHECK(j.at("suite") == "phi3");
    CHECK(j.at("summary").at("pass") == 3);
    CHECK(j.at("summary").at("fail") == 0);
    for (const auto& c : j.at("cases")) {
      CHECK(c.contains("id"));
      CHECK((c.at("status") == "pass" || c.at("status") == "fail"));
      CHECK(c.contains("detail"));
    }
  }

  TEST_CASE("wheel suite records both readings of the empty partition") {
    const auto rep = verify_wheel_theorem(1, 2, 4);
    CHECK(rep.notes.at("strict_reading_matches") == true);
    CHECK(rep.notes.at("empty_always_reading_matches") == false);
  }

  TEST_CASE("commutator suite is reproducible") {
    const auto a = verify_commutators(3, 4, 4, 7).to_json();
    const auto b = verify_commutators(3, 4, 4, 7).to_json();
    CHECK(a == b);
  }
}
