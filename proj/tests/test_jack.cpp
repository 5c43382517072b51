#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "doctest.h"
#include "jackideal/jack.hpp"
#include "jackideal/json_io.hpp"
#include "support.hpp"

using namespace jackideal;

namespace {

// Number of semistandard tableaux of shape `shape` and content `content`.
// Fills cells row by row; a cell value must exceed the one above and be at
// least the one to the left.
struct KostkaCounter {
  std::vector<int> shape;
  std::vector<int> left;
  std::vector<std::vector<int>> grid;

  long count(std::size_t row, int col) {
    if (row == shape.size()) return 1;
    if (col == shape[row]) return count(row + 1, 0);
    long total = 0;
    const int lo = std::max(col > 0 ? grid[row][col - 1] : 0, row > 0 ? grid[row - 1][col] + 1 : 0);
    for (int v = lo; v < static_cast<int>(left.size()); ++v) {
      if (left[v] == 0) continue;
      --left[v];
      grid[row][col] = v;
      total += count(row, col + 1);
      ++left[v];
    }
    return total;
  }
};

long kostka(const Partition& shape, const Partition& content) {
  KostkaCounter k{shape.parts(), content.parts(), {}};
  for (int len : shape.parts()) k.grid.emplace_back(len, 0);
  return k.count(0, 0);
}

}  // namespace

TEST_SUITE("jack") {
  TEST_CASE("P_(2) in two variables") {
    const auto j = jack_symbolic(Partition{2}, 2);
    MSymPoly<BetaRatFunc> want(2);
    want.add_term(Partition{2}, BetaRatFunc(1));
    want.add_term(Partition{1, 1},
                  BetaRatFunc(BetaPoly::linear(BigRat(2), BigRat(0)), BetaPoly::linear(BigRat(1), BigRat(1))));
    CHECK(j.poly == want);
  }

  TEST_CASE("column shapes and one variable") {
    for (int m = 1; m <= 4; ++m) {
      const Partition col(std::vector<int>(m, 1));
      CHECK(jack_symbolic(col, 4).poly == MSymPoly<BetaRatFunc>::basis(4, col));
    }
    CHECK(jack_symbolic(Partition{5}, 1).poly == MSymPoly<BetaRatFunc>::basis(1, Partition{5}));
    CHECK(jack_symbolic(Partition{}, 3).poly == MSymPoly<BetaRatFunc>::constant(3, BetaRatFunc(1)));
  }

  TEST_CASE("beta = 1 gives Schur polynomials (Kostka numbers)") {
    for (int d = 1; d <= 6; ++d) {
      for (int n = 1; n <= 4; ++n) {
        for (const auto& lambda : partitions_of(d, n)) {
          const auto p = specialize_at(jack_symbolic(lambda, n), BigRat(1));
          for (const auto& mu : partitions_of(d, n)) CHECK(p.coeff(mu) == BigRat(kostka(lambda, mu)));
        }
      }
    }
  }

  TEST_CASE("beta = 0 gives monomials") {
    for (int d = 0; d <= 6; ++d)
      for (const auto& lambda : partitions_of(d, 3))
        CHECK(specialize_at(jack_symbolic(lambda, 3), BigRat(0)) == MSymPoly<BigRat>::basis(3, lambda));
  }

  TEST_CASE("eigen-equations and denominator clearing") {
    for (int d = 0; d <= 6; ++d) {
      for (int n = 1; n <= 3; ++n) {
        for (const auto& lambda : partitions_of(d, n)) {
          CHECK(verify_hamiltonian_eigen(lambda, n));
          CHECK(verify_sekiguchi(lambda, n));
          const BetaPoly c = c_lambda(lambda);
          const auto jack = jack_symbolic(lambda, n);
          for (const auto& [mu, u] : jack.poly.terms())
            CHECK(divmod(c * u.num(), u.den()).second.is_zero());
        }
      }
    }
  }

  TEST_CASE("triangularity") {
    const auto j = jack_symbolic(Partition{3, 1}, 3);
    for (const auto& [mu, u] : j.poly.terms()) CHECK(dominated_by(mu, Partition{3, 1}));
    CHECK(j.coeff(Partition{3, 1}) == BetaRatFunc(1));
    CHECK(dominated_partitions(Partition{2, 1}, 3) == std::vector<Partition>{Partition{2, 1}, Partition{1, 1, 1}});
    CHECK(dominated_partitions(Partition{2, 2}, 2) == std::vector<Partition>{Partition{2, 2}});
  }

  TEST_CASE("specialization and poles") {
    CHECK_THROWS_AS(specialize_at(jack_symbolic(Partition{2}, 2), BigRat(-1)), SpecializationPole);
    CHECK(pole_profile(Partition{2}, 2, BigRat(-1)) == 1);
    CHECK(pole_profile(Partition{2}, 2, BigRat(-1, 2)) == 0);
    const auto s = specialize(Partition{2}, 2, 1, 2);
    CHECK(s.poly.coeff(Partition{1, 1}) == BigRat(-2));
    CHECK(s.k == 1);
    CHECK(s.r == 2);
  }

  TEST_CASE("principal specialization") {
    CHECK(principal_specialization(Partition{1}, 4) == BetaRatFunc(4));
    const BetaRatFunc want(BetaPoly::linear(BigRat(4), BigRat(2)), BetaPoly::linear(BigRat(1), BigRat(1)));
    CHECK(principal_specialization(Partition{2}, 2) == want);
    CHECK(principal_specialization(Partition{1, 1, 1}, 2).is_zero());
  }

  TEST_CASE("hamiltonian rows") {
    // H m_(1,1) = 2 m_(1,1) in two variables
    const auto row = hamiltonian_matrix_row(Partition{1, 1}, 2);
    REQUIRE(row.size() == 1);
    CHECK(row.at(Partition{1, 1}) == BetaPoly(2));
  }

  TEST_CASE("disk cache round trip") {
    const auto dir = std::filesystem::temp_directory_path() / ("jackideal_cache_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    JackStore store;
    store.set_cache_dir(dir);
    const auto first = store.get(Partition{3, 1}, 3);
    CHECK(std::filesystem::exists(dir / "jack_n3_3-1.json"));
    store.clear();
    CHECK(store.size() == 0);
    const auto again = store.get(Partition{3, 1}, 3);
    CHECK(again->poly == first->poly);
    // a corrupt entry is recomputed
    { std::ofstream(dir / "jack_n3_2-2.json") << "{not json"; }
    CHECK(store.get(Partition{2, 2}, 3)->poly == jack_symbolic(Partition{2, 2}, 3).poly);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("json round trip") {
    const auto j = jack_symbolic(Partition{2, 1}, 3);
    const json enc = j;
    CHECK(enc.get<JackPoly>().poly == j.poly);
    CHECK(json(BigRat(-3, 2)).dump() == R"({"den":"2","num":"-3"})");
    CHECK(json::parse("\"-3/6\"").get<BigRat>() == BigRat(-1, 2));
    CHECK(json::parse("7").get<BigRat>() == BigRat(7));
  }
}
