#ifndef JACKIDEAL_IDEAL_HPP
#define JACKIDEAL_IDEAL_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "jackideal/beta_ratfunc.hpp"
#include "jackideal/jack.hpp"
#include "jackideal/partition.hpp"
#include "jackideal/sympoly.hpp"

namespace jackideal {

/// Degree-graded basis {P_λ(x; β(k,r)) : λ (k,r,n)-admissible, |λ| ≤ dmax}.
class IdealBasis {
 public:
  IdealBasis() = default;
  IdealBasis(int k, int r, int n, int dmax);

  int k() const { return k_; }
  int r() const { return r_; }
  int n() const { return n_; }
  int dmax() const { return dmax_; }
  const BigRat& beta0() const { return beta0_; }

  /// Elements of one degree, ordered by decreasing leading partition.
  const std::vector<SpecializedJack>& degree(int d) const;
  const std::map<int, std::vector<SpecializedJack>>& elements() const { return elements_; }
  /// Element with leading partition λ, or nullptr when λ is not admissible.
  const SpecializedJack* find(const Partition& lambda) const;
  std::vector<std::size_t> character() const;
  std::size_t size() const;

  void insert(SpecializedJack element);

 private:
  int k_ = 0, r_ = 0, n_ = 0, dmax_ = -1;
  BigRat beta0_;
  std::map<int, std::vector<SpecializedJack>> elements_;
  std::map<Partition, std::pair<int, std::size_t>> index_;
};

/// Builds the basis; a pole on an admissible partition is reported as
/// std::logic_error since admissible Jack polynomials are regular.
IdealBasis build_basis(int k, int r, int n, int dmax, int workers = 1);

/// Writes meta.json plus one degree_<d>.json per degree.
void save_basis(const IdealBasis& basis, const std::filesystem::path& dir);
IdealBasis load_basis(const std::filesystem::path& dir);

struct MembershipCertificate {
  bool member = false;
  /// Coefficients on the basis elements, when member.
  std::map<Partition, BigRat> combination;
  /// A dominance-maximal, non-admissible partition of the residual support.
  std::optional<Partition> obstruction;
};

/// Triangular reduction against the unitriangular basis, degree by degree.
/// Throws DegreeOverflow when P has a component above the basis' dmax.
MembershipCertificate reduce_membership(const MSymPoly<BigRat>& p, const IdealBasis& basis);

/// Σ combination[λ] · P_λ(β0).
MSymPoly<BigRat> recombine(const MembershipCertificate& cert, const IdealBasis& basis);

/// One rational factor num/den of a Pieri or Lassalle coefficient.
struct CoefficientFactor {
  std::string label;
  BetaPoly num;
  BetaPoly den;
};

/// Factors of ψ′_{λ/μ} where λ adds a node in (0-based) `row`: two per i < row.
std::vector<CoefficientFactor> pieri_factors(const Partition& mu, int row);
BetaRatFunc pieri_coefficient(const Partition& mu, int row);

/// ψ″_{λ/μ} = ψ′_{λ/μ} · (−(j−1)β + μ_j), j the 1-based row receiving the node.
BetaRatFunc lassalle_up(const Partition& mu, int row);

/// Factors of ψ̃′_{μ/λ} where λ removes the node at the end of (0-based) `row`:
/// the 1/β prefactor, the two linear prefactors, then the two products.
std::vector<CoefficientFactor> lassalle_down_factors(const Partition& mu, int row, int n);
BetaRatFunc lassalle_down(const Partition& mu, int row, int n);

BetaRatFunc product(const std::vector<CoefficientFactor>& factors);

/// Row of the partition that gains (or loses) a node, comparing padded parts.
int changed_row(const Partition& from, const Partition& to);

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
std::size_t exact_rank(std::vector<std::vector<mpz_class>> rows);

/// dim of the degree-d part of {P symmetric : P = 0 when x_1 = … = x_{k+1}}.
/// When n ≤ k the condition is vacuous and every symmetric polynomial counts.
std::size_t wheel_dimension(int k, int n, int d);

}  // namespace jackideal

#endif  // JACKIDEAL_IDEAL_HPP
