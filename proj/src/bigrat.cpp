#include "jackideal/bigrat.hpp"

#include <stdexcept>
#include <utility>

#include "jackideal/errors.hpp"

namespace jackideal {

BigRat::BigRat(long num, long den) : BigRat(mpz_class(num), mpz_class(den)) {}

BigRat::BigRat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRat::BigRat(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

BigRat BigRat::parse(std::string_view text) {
  auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    std::string str(s);
    std::size_t start = (!str.empty() && (str[0] == '-' || str[0] == '+')) ? 1 : 0;
    if (start == str.size()) throw std::invalid_argument("malformed rational: empty integer");
    for (std::size_t i = start; i < str.size(); ++i) {
      if (str[i] < '0' || str[i] > '9') throw std::invalid_argument("malformed rational: " + str);
    }
    if (str[0] == '+') str.erase(0, 1);
    return mpz_class(str, 10);
  };
  if (slash == std::string_view::npos) return BigRat(parse_int(text), mpz_class(1));
  return BigRat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

BigRat inverse(const BigRat& a) { return BigRat(1) / a; }

BigRat pow(const BigRat& base, int exponent) {
  if (exponent < 0) return pow(inverse(base), -exponent);
  BigRat result(1);
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace jackideal
