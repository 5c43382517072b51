#ifndef JACKIDEAL_BETA_POLY_HPP
#define JACKIDEAL_BETA_POLY_HPP

#include <concepts>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "jackideal/bigrat.hpp"

namespace jackideal {

/// Univariate polynomial in the coupling β with rational coefficients.
/// Coefficients are stored low degree first with no trailing zeros, so the
/// zero polynomial is the empty sequence.
class BetaPoly {
 public:
  BetaPoly() = default;
  BetaPoly(BigRat constant);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  BetaPoly(I constant) : BetaPoly(BigRat(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit BetaPoly(std::vector<BigRat> coeffs);

  /// The indeterminate β.
  static BetaPoly beta();
  /// slope·β + intercept.
  static BetaPoly linear(const BigRat& slope, const BigRat& intercept);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  BigRat coeff(int power) const;
  const BigRat& leading() const { return coeffs_.back(); }

  BigRat operator()(const BigRat& at) const;

  BetaPoly monic() const;

  /// Multiplicity of β0 as a root, by repeated exact division by (β − β0).
  /// Undefined (returns 0) for the zero polynomial.
  int root_multiplicity(const BigRat& beta0) const;

  /// Quotient by (β − β0); the remainder is discarded.
  BetaPoly divide_linear(const BigRat& beta0) const;

  BetaPoly& operator+=(const BetaPoly& o);
  BetaPoly& operator-=(const BetaPoly& o);
  BetaPoly& operator*=(const BetaPoly& o);
  BetaPoly& operator*=(const BigRat& s);

  friend BetaPoly operator+(BetaPoly a, const BetaPoly& b) { return a += b; }
  friend BetaPoly operator-(BetaPoly a, const BetaPoly& b) { return a -= b; }
  friend BetaPoly operator*(const BetaPoly& a, const BetaPoly& b);
  friend BetaPoly operator-(const BetaPoly& a);

  friend bool operator==(const BetaPoly& a, const BetaPoly& b) = default;

  std::string to_string(const std::string& var = "b") const;
  friend std::ostream& operator<<(std::ostream& os, const BetaPoly& p) { return os << p.to_string(); }

 private:
  void trim();
  std::vector<BigRat> coeffs_;
};

/// Quotient and remainder; throws DivisionByZero when b is zero.
std::pair<BetaPoly, BetaPoly> divmod(const BetaPoly& a, const BetaPoly& b);

/// Monic greatest common divisor (zero when both inputs are zero).
BetaPoly gcd(BetaPoly a, BetaPoly b);

}  // namespace jackideal

#endif  // JACKIDEAL_BETA_POLY_HPP
