#ifndef JACKIDEAL_JACK_HPP
#define JACKIDEAL_JACK_HPP

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jackideal/beta_poly.hpp"
#include "jackideal/beta_ratfunc.hpp"
#include "jackideal/partition.hpp"
#include "jackideal/sympoly.hpp"

namespace jackideal {

/// P_λ(x; β) in n variables: m_λ + Σ_{μ<λ} u_{λμ}(β) m_μ.
struct JackPoly {
  Partition lambda;
  int n = 0;
  MSymPoly<BetaRatFunc> poly;

  BetaRatFunc coeff(const Partition& mu) const { return poly.coeff(mu); }
};

/// P_λ(x; β0) with β0 = β(k,r), coefficients in ℚ.
struct SpecializedJack {
  Partition lambda;
  int n = 0;
  int k = 0;
  int r = 0;
  MSymPoly<BigRat> poly;
};

/// Raised when a Jack coefficient has a pole at the specialization point.
struct SpecializationPole : std::domain_error {
  SpecializationPole(Partition lambda, Partition mu, int order);
  Partition lambda;
  Partition mu;
  int order;
};

/// Row of the Calogero-Sutherland Hamiltonian in the monomial basis:
/// H m_μ = Σ_ν h_{μν} m_ν, each h_{μν} of degree ≤ 1 in β.
std::map<Partition, BetaPoly> hamiltonian_matrix_row(const Partition& mu, int n);

/// Partitions of |λ| with at most n parts dominated by λ, in decreasing
/// lexicographic order (λ first).
std::vector<Partition> dominated_partitions(const Partition& lambda, int n);

/// Memo of symbolic Jack polynomials keyed by (λ, n). Safe for concurrent
/// readers and writers; duplicate insertion keeps the first value. When a
/// cache directory is set, results are also persisted as JSON files.
class JackStore {
 public:
  std::shared_ptr<const JackPoly> get(const Partition& lambda, int n);
  std::shared_ptr<const std::map<Partition, BetaPoly>> row(const Partition& mu, int n);

  void set_cache_dir(std::optional<std::filesystem::path> dir);
  std::optional<std::filesystem::path> cache_dir() const;
  std::size_t size() const;
  void clear();

 private:
  using Key = std::pair<Partition, int>;
  std::shared_ptr<const JackPoly> compute(const Partition& lambda, int n);
  std::shared_ptr<const JackPoly> load(const Partition& lambda, int n) const;
  void save(const JackPoly& jack) const;

  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const JackPoly>> jacks_;
  std::map<Key, std::shared_ptr<const std::map<Partition, BetaPoly>>> rows_;
  std::optional<std::filesystem::path> cache_dir_;
};

/// Process-wide store used by the free functions below.
JackStore& jack_store();

/// Unique unitriangular eigenvector of H: u_{λλ} = 1 and, in decreasing
/// dominance, u_{λμ} = Σ_{μ<ν≤λ} u_{λν} h_{νμ} / (ε_λ − ε_μ).
JackPoly jack_symbolic(const Partition& lambda, int n);

/// Computes several Jack polynomials into the store on `workers` threads.
void precompute_jacks(const std::vector<std::pair<Partition, int>>& keys, int workers);

/// S(u,β) P_λ = c_{λλ}(u,β) P_λ identically in u and β. The check runs on
/// the denominator-cleared polynomial, which has coefficients in ℚ[β].
bool verify_sekiguchi(const Partition& lambda, int n);

/// H P_λ = ε_λ P_λ identically in β, via the expanded Hamiltonian.
bool verify_hamiltonian_eigen(const Partition& lambda, int n);

/// Least common multiple of the coefficient denominators, monic.
BetaPoly common_denominator(const MSymPoly<BetaRatFunc>& p);

/// Evaluates every coefficient at β0; throws SpecializationPole on a pole.
MSymPoly<BigRat> specialize_at(const JackPoly& jack, const BigRat& beta0);

SpecializedJack specialize(const Partition& lambda, int n, int k, int r);

/// Largest pole order of any coefficient at β0; 0 when all are regular.
int pole_profile(const Partition& lambda, int n, const BigRat& beta0);

/// P_λ(1,…,1; β) by the product formula over nodes.
BetaRatFunc principal_specialization(const Partition& lambda, int n);

}  // namespace jackideal

#endif  // JACKIDEAL_JACK_HPP
