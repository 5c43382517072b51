#ifndef JACKIDEAL_SUITES_HPP
#define JACKIDEAL_SUITES_HPP

#include <cstdint>

#include "jackideal/report.hpp"

namespace jackideal {

// Verification suites. Each returns a Report with one case per checked
// instance; nothing stops at the first failure. `workers` bounds the number
// of threads used for independent cases; case order is deterministic.

/// H and Sekiguchi eigen-equations identically in β, plus polynomiality of
/// c_λ·P_λ, for |λ| ≤ dmax in n variables.
Report verify_sekiguchi_suite(int n, int dmax, int workers = 1);

/// p₁P_μ = Σ ψ′_{λ/μ} P_λ over ℚ(β) for |μ| ≤ dmax.
Report verify_pieri(int n, int dmax, int workers = 1);

/// l₁P_μ = Σ ψ″_{λ/μ} P_λ and l₋₁P_μ = Σ ψ̃′_{μ/λ} P_λ over ℚ(β) for |μ| ≤ dmax.
Report verify_lassalle(int n, int dmax, int workers = 1);

/// For admissible μ with |μ| < dmax: vanishing of ψ′ toward non-admissible λ
/// (through the named factor), regularity toward admissible λ, and the
/// specialized Pieri identity, also checked through reduce_membership.
Report verify_pieri_specialization(int k, int r, int n, int dmax, int workers = 1);

/// Images of basis elements under p_m, l_m and w^(t)_m stay in the ideal.
Report verify_closure(int k, int r, int n, int dmax, int mmax, int tmax, int workers = 1);

/// (∂_n^j P)(x₁,…,x_{n−1},0) lies in the (n−1)-variable ideal for j ≤ jmax.
Report verify_restriction(int k, int r, int n, int dmax, int jmax, int workers = 1);

/// Admissible partitions and their one-node neighbors are regular at β(k,r);
/// c_λ has a simple zero there for non-admissible neighbors.
Report verify_regularity(int k, int r, int n, int dmax, int workers = 1);

/// check_nonvanishing on every admissible λ with |λ| ≤ dmax.
Report verify_nonvanishing(int k, int r, int n, int dmax);

/// Basis of the r = 2 ideal vanishes on x₁ = … = x_{k+1}, and the wheel
/// dimensions match the admissible counts degree by degree.
Report verify_wheel_theorem(int k, int n, int dmax, int workers = 1);

/// l₀P = rP, HP = ε_λP and l₋₁P = 0 for P = P_(r,0,0) at β(2,r), n = 3.
Report verify_phi3(int r);

/// Product formula against evaluation at (1,…,1) for |λ| ≤ dmax.
Report verify_principal(int n, int dmax, int workers = 1);

/// With n = k+1, the principal specialization of every admissible P_λ
/// vanishes at β(k,r).
Report verify_principal_vanishing(int k, int r, int dmax);

/// Dunkl, Virasoro and w-algebra commutation relations on pseudo-random
/// polynomials over ℚ[β]. Reproducible from the seed.
Report verify_commutators(int n, int degree, int trials, std::uint64_t seed);

}  // namespace jackideal

#endif  // JACKIDEAL_SUITES_HPP
