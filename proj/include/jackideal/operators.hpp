#ifndef JACKIDEAL_OPERATORS_HPP
#define JACKIDEAL_OPERATORS_HPP

// Dunkl-type operators acting on polynomials with coefficients in ℚ, ℚ[β] or
// ℚ(β). Every operator that involves the coupling takes it as a coefficient
// value `beta`: the indeterminate β for symbolic work, or a fixed rational
// β0 after specialization. Variable indices are 0-based.

#include <stdexcept>
#include <string>
#include <vector>

#include "jackideal/sympoly.hpp"

namespace jackideal {

namespace detail {
inline void check_index(int i, int n, const char* op) {
  if (i < 0 || i >= n)
    throw std::out_of_range(std::string(op) + ": variable index " + std::to_string(i) + " out of range for n=" +
                            std::to_string(n));
}
}  // namespace detail

/// K_ij: swaps the exponents of x_i and x_j.
template <Coefficient C>
ExpandedPoly<C> apply_exchange(const ExpandedPoly<C>& p, int i, int j) {
  detail::check_index(i, p.nvars(), "exchange");
  detail::check_index(j, p.nvars(), "exchange");
  if (i == j) throw std::invalid_argument("exchange requires i != j");
  ExpandedPoly<C> out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponent s = e;
    std::swap(s[i], s[j]);
    out.add_term(s, c);
  }
  return out;
}

template <Coefficient C>
ExpandedPoly<C> partial(const ExpandedPoly<C>& p, int i) {
  detail::check_index(i, p.nvars(), "partial");
  ExpandedPoly<C> out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    Exponent s = e;
    --s[i];
    out.add_term(s, c * C(BigRat(e[i])));
  }
  return out;
}

/// x_i^power · P.
template <Coefficient C>
ExpandedPoly<C> multiply_var(const ExpandedPoly<C>& p, int i, int power = 1) {
  detail::check_index(i, p.nvars(), "multiply_var");
  ExpandedPoly<C> out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponent s = e;
    s[i] += power;
    out.add_term(s, c);
  }
  return out;
}

/// (P − K_ij P)/(x_i − x_j), exact. Each monomial pair telescopes:
/// (x^p y^q − x^q y^p)/(x − y) = x^q y^q Σ_{t<p−q} x^t y^{p−q−1−t} for p > q.
template <Coefficient C>
ExpandedPoly<C> divided_difference(const ExpandedPoly<C>& p, int i, int j) {
  detail::check_index(i, p.nvars(), "divided_difference");
  detail::check_index(j, p.nvars(), "divided_difference");
  if (i == j) throw std::invalid_argument("divided_difference requires i != j");
  ExpandedPoly<C> out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    const int a = e[i];
    const int b = e[j];
    if (a == b) continue;
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    const C coeff = a > b ? c : -c;
    Exponent s = e;
    for (int t = 0; t < hi - lo; ++t) {
      s[i] = lo + t;
      s[j] = hi - 1 - t;
      out.add_term(s, coeff);
    }
  }
  return out;
}

/// ∇_i = ∂_i + β Σ_{j≠i} (1 − K_ij)/(x_i − x_j).
template <Coefficient C>
ExpandedPoly<C> apply_dunkl(const ExpandedPoly<C>& p, int i, const C& beta) {
  ExpandedPoly<C> out = partial(p, i);
  if (beta.is_zero()) return out;
  ExpandedPoly<C> diff(p.nvars());
  for (int j = 0; j < p.nvars(); ++j)
    if (j != i) diff += divided_difference(p, i, j);
  diff *= beta;
  out += diff;
  return out;
}

/// ∇_i applied `power` times.
template <Coefficient C>
ExpandedPoly<C> dunkl_power(ExpandedPoly<C> p, int i, int power, const C& beta) {
  for (int s = 0; s < power && !p.is_zero(); ++s) p = apply_dunkl(p, i, beta);
  return p;
}

/// D̂_i = x_i ∇_i + β Σ_{j>i} K_ij.
template <Coefficient C>
ExpandedPoly<C> apply_cherednik(const ExpandedPoly<C>& p, int i, const C& beta) {
  ExpandedPoly<C> out = multiply_var(apply_dunkl(p, i, beta), i);
  for (int j = i + 1; j < p.nvars(); ++j) out += apply_exchange(p, i, j) * beta;
  return out;
}

/// S(u,β) P = Π_i (u + D̂_i) P as a polynomial in u; entry p is the
/// coefficient of u^p.
template <Coefficient C>
std::vector<ExpandedPoly<C>> apply_sekiguchi(const ExpandedPoly<C>& p, const C& beta) {
  const int n = p.nvars();
  std::vector<ExpandedPoly<C>> acc{p};
  for (int i = n - 1; i >= 0; --i) {
    std::vector<ExpandedPoly<C>> next(acc.size() + 1, ExpandedPoly<C>(n));
    for (std::size_t q = 0; q < acc.size(); ++q) {
      next[q] += apply_cherednik(acc[q], i, beta);
      next[q + 1] += acc[q];
    }
    acc = std::move(next);
  }
  return acc;
}

/// Calogero-Sutherland Hamiltonian on a symmetric polynomial. The pair term
/// (x_i+x_j)/(x_i−x_j)·(x_i∂_i − x_j∂_j)P uses that the bracket is antisymmetric
/// in (i,j), so dividing by x_i − x_j equals half the divided difference.
template <Coefficient C>
ExpandedPoly<C> apply_hamiltonian(const ExpandedPoly<C>& p, const C& beta) {
  if (!is_symmetric(p)) throw NotSymmetric();
  const int n = p.nvars();
  ExpandedPoly<C> out(n);
  for (const auto& [e, c] : p.terms()) {
    long s = 0;
    for (int v : e) s += static_cast<long>(v) * v;
    out.add_term(e, c * C(BigRat(s)));
  }
  if (beta.is_zero()) return out;
  ExpandedPoly<C> pair(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ExpandedPoly<C> q(n);
      for (const auto& [e, c] : p.terms())
        if (e[i] != e[j]) q.add_term(e, c * C(BigRat(e[i] - e[j])));
      ExpandedPoly<C> quotient = divided_difference(q, i, j);
      pair += multiply_var(quotient, i);
      pair += multiply_var(quotient, j);
    }
  }
  pair *= beta * C(BigRat(1, 2));
  out += pair;
  return out;
}

template <Coefficient C>
MSymPoly<C> apply_hamiltonian(const MSymPoly<C>& p, const C& beta) {
  return expanded_to_msym(apply_hamiltonian(msym_to_expanded(p), beta));
}

/// l_m = Σ_j x_j^{m+1} ∂_j, m ≥ −1.
template <Coefficient C>
ExpandedPoly<C> apply_l(const ExpandedPoly<C>& p, int m) {
  if (m < -1) throw std::invalid_argument("l_m requires m >= -1");
  ExpandedPoly<C> out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    for (int j = 0; j < p.nvars(); ++j) {
      if (e[j] == 0) continue;
      Exponent s = e;
      s[j] += m;
      out.add_term(s, c * C(BigRat(e[j])));
    }
  }
  return out;
}

template <Coefficient C>
MSymPoly<C> apply_l(const MSymPoly<C>& p, int m) {
  return expanded_to_msym(apply_l(msym_to_expanded(p), m));
}

/// Multiplication by p_m = Σ_j x_j^m; m = 0 multiplies by n.
template <Coefficient C>
ExpandedPoly<C> mul_power_sum(const ExpandedPoly<C>& p, int m) {
  if (m < 0) throw std::invalid_argument("p_m requires m >= 0");
  if (m == 0) return p * C(BigRat(p.nvars()));
  ExpandedPoly<C> out(p.nvars());
  for (int j = 0; j < p.nvars(); ++j) out += multiply_var(p, j, m);
  return out;
}

template <Coefficient C>
MSymPoly<C> mul_power_sum(const MSymPoly<C>& p, int m) {
  return multiply(power_sum<C>(m, p.nvars()), p);
}

/// w^(t)_m = Σ_j x_j^{m+t−1} ∇_j^{t−1}. With t = 1 this is p_m, the
/// convention used in the commutator relations.
template <Coefficient C>
ExpandedPoly<C> apply_w_ext(const ExpandedPoly<C>& p, int t, int m, const C& beta) {
  if (t < 1) throw std::invalid_argument("w^(t)_m requires t >= 1");
  if (t == 1) return mul_power_sum(p, m);
  if (m < -t + 1) throw std::invalid_argument("w^(t)_m requires m >= -t+1");
  ExpandedPoly<C> out(p.nvars());
  for (int j = 0; j < p.nvars(); ++j) out += multiply_var(dunkl_power(p, j, t - 1, beta), j, m + t - 1);
  return out;
}

template <Coefficient C>
ExpandedPoly<C> apply_w(const ExpandedPoly<C>& p, int t, int m, const C& beta) {
  if (t < 2) throw std::invalid_argument("w^(t)_m requires t >= 2");
  return apply_w_ext(p, t, m, beta);
}

template <Coefficient C>
MSymPoly<C> apply_w(const MSymPoly<C>& p, int t, int m, const C& beta) {
  return expanded_to_msym(apply_w(msym_to_expanded(p), t, m, beta));
}

/// Names one operator of the family with its parameters.
struct OperatorTag {
  enum class Kind { Exchange, Dunkl, Cherednik, Sekiguchi, Hamiltonian, L, W, MulPowerSum };
  Kind kind;
  int i = 0;
  int j = 0;
  int t = 0;
  int m = 0;

  static OperatorTag exchange(int i, int j) { return {Kind::Exchange, i, j, 0, 0}; }
  static OperatorTag dunkl(int i) { return {Kind::Dunkl, i, 0, 0, 0}; }
  static OperatorTag cherednik(int i) { return {Kind::Cherednik, i, 0, 0, 0}; }
  static OperatorTag sekiguchi() { return {Kind::Sekiguchi}; }
  static OperatorTag hamiltonian() { return {Kind::Hamiltonian}; }
  static OperatorTag l(int m) { return {Kind::L, 0, 0, 0, m}; }
  static OperatorTag w(int t, int m) { return {Kind::W, 0, 0, t, m}; }
  static OperatorTag power_sum(int m) { return {Kind::MulPowerSum, 0, 0, 0, m}; }

  /// Throws std::invalid_argument when parameters are out of bounds for n variables.
  void validate(int n) const;
  /// Degree shift on homogeneous input.
  int degree_shift() const;
  std::string to_string() const;
};

/// Applies a tagged operator. Sekiguchi is rejected here because its value is
/// a polynomial in u; use apply_sekiguchi.
template <Coefficient C>
ExpandedPoly<C> apply(const OperatorTag& op, const ExpandedPoly<C>& p, const C& beta) {
  op.validate(p.nvars());
  switch (op.kind) {
    case OperatorTag::Kind::Exchange: return apply_exchange(p, op.i, op.j);
    case OperatorTag::Kind::Dunkl: return apply_dunkl(p, op.i, beta);
    case OperatorTag::Kind::Cherednik: return apply_cherednik(p, op.i, beta);
    case OperatorTag::Kind::Hamiltonian: return apply_hamiltonian(p, beta);
    case OperatorTag::Kind::L: return apply_l(p, op.m);
    case OperatorTag::Kind::W: return apply_w(p, op.t, op.m, beta);
    case OperatorTag::Kind::MulPowerSum: return mul_power_sum(p, op.m);
    case OperatorTag::Kind::Sekiguchi: break;
  }
  throw std::invalid_argument("Sekiguchi operator is u-valued; use apply_sekiguchi");
}

template <Coefficient C>
MSymPoly<C> apply(const OperatorTag& op, const MSymPoly<C>& p, const C& beta) {
  return expanded_to_msym(apply(op, msym_to_expanded(p), beta));
}

}  // namespace jackideal

#endif  // JACKIDEAL_OPERATORS_HPP
