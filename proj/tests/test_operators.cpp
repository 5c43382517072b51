#include "doctest.h"
#include "jackideal/errors.hpp"
#include "jackideal/operators.hpp"
#include "support.hpp"

using namespace jackideal;
using testing_support::Rng;

namespace {

using QPoly = ExpandedPoly<BigRat>;
using BPoly = ExpandedPoly<BetaPoly>;

QPoly mono(Exponent e, long c = 1) { return QPoly::monomial(std::move(e), BigRat(c)); }

BPoly random_bpoly(int n, int degree, Rng& rng) {
  BPoly p(n);
  for (int t = rng.range(1, 5); t > 0; --t) {
    Exponent e(n);
    for (auto& v : e) v = rng.range(0, degree / n + 1);
    p.add_term(e, rng.poly(1));
  }
  return p;
}

}  // namespace

TEST_SUITE("operators") {
  TEST_CASE("exchange, derivative and divided difference") {
    CHECK(apply_exchange(mono({2, 0, 1}), 0, 2) == mono({1, 0, 2}));
    CHECK(partial(mono({3, 1}), 0) == mono({2, 1}, 3));
    CHECK(multiply_var(mono({0, 1}), 0, 2) == mono({2, 1}));
    // (x^2 - y^2)/(x - y) = x + y
    CHECK(divided_difference(mono({2, 0}), 0, 1) == mono({1, 0}) + mono({0, 1}));
    CHECK(divided_difference(mono({1, 1}), 0, 1).is_zero());
    CHECK_THROWS(apply_exchange(mono({1, 0}), 0, 0));
    CHECK_THROWS_AS(partial(mono({1, 0}), 2), std::out_of_range);
  }

  TEST_CASE("divided difference times the difference restores P - K P") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const BPoly p = random_bpoly(3, 6, rng);
      const BPoly q = divided_difference(p, 0, 2);
      const BPoly back = multiply_var(q, 0) - multiply_var(q, 2);
      CHECK(back == p - apply_exchange(p, 0, 2));
    }
  }

  TEST_CASE("Dunkl operator values") {
    const BetaPoly b = BetaPoly::beta();
    // ∇_1 x_1 = 1 + β in two variables
    const BPoly x1 = BPoly::monomial({1, 0});
    CHECK(apply_dunkl(x1, 0, b) == BPoly::constant(2, b + BetaPoly(1)));
    CHECK(apply_dunkl(x1, 1, b) == BPoly::constant(2, -b));
    // on symmetric input the Dunkl operator is the plain derivative
    const BPoly sym = msym_to_expanded(MSymPoly<BetaPoly>::basis(3, Partition{2, 1}));
    CHECK(apply_dunkl(sym, 1, b) == partial(sym, 1));
  }

  TEST_CASE("Cherednik and Sekiguchi on constants") {
    const BetaPoly b = BetaPoly::beta();
    const BPoly one = BPoly::constant(3, BetaPoly(1));
    CHECK(apply_cherednik(one, 0, b) == one * (b * BetaPoly(2)));
    CHECK(apply_cherednik(one, 2, b).is_zero());
    // Π_i (u + (n−i)β) for n = 3: u^3 + 3β u^2 + 2β^2 u
    const auto s = apply_sekiguchi(one, b);
    REQUIRE(s.size() == 4);
    CHECK(s[0].is_zero());
    CHECK(s[1] == one * (b * b * BetaPoly(2)));
    CHECK(s[2] == one * (b * BetaPoly(3)));
    CHECK(s[3] == one);
  }

  TEST_CASE("Hamiltonian on low degree") {
    const BetaPoly b = BetaPoly::beta();
    const BPoly p1 = msym_to_expanded(MSymPoly<BetaPoly>::basis(2, Partition{1}));
    CHECK(apply_hamiltonian(p1, b) == p1 * (b + BetaPoly(1)));
    // m_(1,1) in 2 variables: (x∂)^2 gives 2 m_(1,1), the pair term vanishes
    const auto m11 = MSymPoly<BetaPoly>::basis(2, Partition{1, 1});
    CHECK(apply_hamiltonian(m11, b) == m11 * BetaPoly(2));
    CHECK_THROWS_AS(apply_hamiltonian(BPoly::monomial({1, 0}), b), NotSymmetric);
  }

  TEST_CASE("Virasoro-type operators") {
    const auto m1 = MSymPoly<BigRat>::basis(4, Partition{1});
    CHECK(apply_l(m1, -1) == MSymPoly<BigRat>::constant(4, BigRat(4)));
    CHECK(apply_l(m1, 0) == m1);
    const auto m21 = MSymPoly<BigRat>::basis(3, Partition{2, 1});
    CHECK(apply_l(m21, 0) == m21 * BigRat(3));
    CHECK_THROWS(apply_l(m1, -2));
    CHECK(mul_power_sum(MSymPoly<BigRat>::constant(2, BigRat(1)), 2) == MSymPoly<BigRat>::basis(2, Partition{2}));

    // w^(2)_m agrees with l_m on symmetric input
    const BigRat b0(-1, 2);
    for (int m = -1; m <= 3; ++m) CHECK(apply_w(m21, 2, m, b0) == apply_l(m21, m));
    // w^(2)_0 is the Euler operator on symmetric input
    CHECK(apply_w(m21, 2, 0, b0) == m21 * BigRat(3));
    CHECK_THROWS(apply_w(m21, 1, 0, b0));
    CHECK_THROWS(apply_w(m21, 3, -3, b0));
  }

  TEST_CASE("operator tags") {
    CHECK(OperatorTag::w(3, -2).degree_shift() == -2);
    CHECK(OperatorTag::l(2).to_string() == "l_2");
    CHECK_THROWS(OperatorTag::w(3, -3).validate(3));
    CHECK_THROWS(OperatorTag::exchange(0, 3).validate(3));
    CHECK_THROWS(OperatorTag::power_sum(0).validate(3));
    const auto m1 = MSymPoly<BigRat>::basis(2, Partition{1});
    CHECK(apply(OperatorTag::l(-1), m1, BigRat(0)) == MSymPoly<BigRat>::constant(2, BigRat(2)));
    CHECK_THROWS(apply(OperatorTag::sekiguchi(), msym_to_expanded(m1), BigRat(0)));
  }
}
