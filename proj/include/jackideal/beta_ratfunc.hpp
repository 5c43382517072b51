#ifndef JACKIDEAL_BETA_RATFUNC_HPP
#define JACKIDEAL_BETA_RATFUNC_HPP

#include <concepts>
#include <optional>
#include <ostream>
#include <string>

#include "jackideal/beta_poly.hpp"
#include "jackideal/bigrat.hpp"

namespace jackideal {

/// Element of the rational function field ℚ(β).
///
/// Always stored in canonical form: numerator and denominator coprime, the
/// denominator monic, zero represented as 0/1. Two values are equal iff their
/// representations are identical.
class BetaRatFunc {
 public:
  BetaRatFunc() : den_(1) {}
  BetaRatFunc(BetaPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  BetaRatFunc(BigRat c) : BetaRatFunc(BetaPoly(std::move(c))) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  BetaRatFunc(I c) : BetaRatFunc(BetaPoly(c)) {}  // NOLINT(google-explicit-constructor)
  /// Normalizes num/den. Throws DivisionByZero for a zero denominator.
  BetaRatFunc(BetaPoly num, BetaPoly den);

  static BetaRatFunc beta() { return BetaRatFunc(BetaPoly::beta()); }

  const BetaPoly& num() const { return num_; }
  const BetaPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Positive: pole order at β0; zero or negative: regular, with -order the
  /// zero multiplicity. std::nullopt for the zero function.
  std::optional<int> pole_order(const BigRat& beta0) const;

  /// Exact value at β0; throws PoleError when β0 is a pole.
  BigRat evaluate_at(const BigRat& beta0) const;

  BetaRatFunc& operator+=(const BetaRatFunc& o);
  BetaRatFunc& operator-=(const BetaRatFunc& o);
  BetaRatFunc& operator*=(const BetaRatFunc& o);
  BetaRatFunc& operator/=(const BetaRatFunc& o);

  friend BetaRatFunc operator+(BetaRatFunc a, const BetaRatFunc& b) { return a += b; }
  friend BetaRatFunc operator-(BetaRatFunc a, const BetaRatFunc& b) { return a -= b; }
  friend BetaRatFunc operator*(BetaRatFunc a, const BetaRatFunc& b) { return a *= b; }
  friend BetaRatFunc operator/(BetaRatFunc a, const BetaRatFunc& b) { return a /= b; }
  friend BetaRatFunc operator-(const BetaRatFunc& a);

  friend bool operator==(const BetaRatFunc& a, const BetaRatFunc& b) = default;

  std::string to_string(const std::string& var = "b") const;
  friend std::ostream& operator<<(std::ostream& os, const BetaRatFunc& f) { return os << f.to_string(); }

 private:
  struct Canonical {};
  BetaRatFunc(BetaPoly num, BetaPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  BetaPoly num_;
  BetaPoly den_;
};

BetaRatFunc inverse(const BetaRatFunc& f);

}  // namespace jackideal

#endif  // JACKIDEAL_BETA_RATFUNC_HPP
