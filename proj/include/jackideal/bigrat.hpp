#ifndef JACKIDEAL_BIGRAT_HPP
#define JACKIDEAL_BIGRAT_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace jackideal {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (zero is 0/1).
class BigRat {
 public:
  BigRat() = default;
  template <std::integral I>
  BigRat(I v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  BigRat(long num, long den);
  BigRat(const mpz_class& num, const mpz_class& den);
  explicit BigRat(mpq_class v);

  /// Parses "p", "-p" or "p/q" with decimal digits of any length.
  static BigRat parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  std::string to_string() const { return value_.get_str(); }

  BigRat& operator+=(const BigRat& o) { value_ += o.value_; return *this; }
  BigRat& operator-=(const BigRat& o) { value_ -= o.value_; return *this; }
  BigRat& operator*=(const BigRat& o) { value_ *= o.value_; return *this; }
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
  friend BigRat operator-(const BigRat& a) { return BigRat(mpq_class(-a.value_)); }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.value_; }

 private:
  mpq_class value_;
};

BigRat inverse(const BigRat& a);
BigRat pow(const BigRat& base, int exponent);

}  // namespace jackideal

#endif  // JACKIDEAL_BIGRAT_HPP
