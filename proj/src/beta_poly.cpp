#include "jackideal/beta_poly.hpp"

#include <algorithm>
#include <sstream>

#include "jackideal/errors.hpp"

namespace jackideal {

BetaPoly::BetaPoly(BigRat constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

BetaPoly::BetaPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

BetaPoly BetaPoly::beta() { return BetaPoly(std::vector<BigRat>{BigRat(0), BigRat(1)}); }

BetaPoly BetaPoly::linear(const BigRat& slope, const BigRat& intercept) {
  return BetaPoly(std::vector<BigRat>{intercept, slope});
}

void BetaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRat BetaPoly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return BigRat(0);
  return coeffs_[power];
}

BigRat BetaPoly::operator()(const BigRat& at) const {
  BigRat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

BetaPoly BetaPoly::monic() const {
  if (is_zero()) return *this;
  BetaPoly out = *this;
  out *= inverse(leading());
  return out;
}

BetaPoly BetaPoly::divide_linear(const BigRat& beta0) const {
  if (coeffs_.size() <= 1) return BetaPoly();
  // synthetic division, high degree first
  std::vector<BigRat> q(coeffs_.size() - 1);
  BigRat carry(0);
  for (std::size_t i = coeffs_.size() - 1; i >= 1; --i) {
    carry = coeffs_[i] + carry * beta0;
    q[i - 1] = carry;
  }
  return BetaPoly(std::move(q));
}

int BetaPoly::root_multiplicity(const BigRat& beta0) const {
  if (is_zero()) return 0;
  int mult = 0;
  BetaPoly p = *this;
  while (p.degree() >= 1 && p(beta0).is_zero()) {
    p = p.divide_linear(beta0);
    ++mult;
  }
  return mult;
}

BetaPoly& BetaPoly::operator+=(const BetaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

BetaPoly& BetaPoly::operator-=(const BetaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

BetaPoly operator*(const BetaPoly& a, const BetaPoly& b) {
  if (a.is_zero() || b.is_zero()) return BetaPoly();
  std::vector<BigRat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return BetaPoly(std::move(out));
}

BetaPoly& BetaPoly::operator*=(const BetaPoly& o) { return *this = *this * o; }

BetaPoly& BetaPoly::operator*=(const BigRat& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

BetaPoly operator-(const BetaPoly& a) {
  BetaPoly out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::pair<BetaPoly, BetaPoly> divmod(const BetaPoly& a, const BetaPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {BetaPoly(), a};
  std::vector<BigRat> rem = a.coeffs();
  std::vector<BigRat> quot(a.degree() - b.degree() + 1);
  const BigRat inv_lead = inverse(b.leading());
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i].is_zero()) continue;
    BigRat f = rem[i] * inv_lead;
    quot[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {BetaPoly(std::move(quot)), BetaPoly(std::move(rem))};
}

BetaPoly gcd(BetaPoly a, BetaPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string BetaPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigRat& c = coeffs_[i];
    if (c.is_zero()) continue;
    BigRat mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == BigRat(1);
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace jackideal
