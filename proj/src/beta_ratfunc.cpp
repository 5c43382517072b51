#include "jackideal/beta_ratfunc.hpp"

#include "jackideal/errors.hpp"

namespace jackideal {

BetaRatFunc::BetaRatFunc(BetaPoly num, BetaPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void BetaRatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = BetaPoly(1);
    return;
  }
  if (den_.degree() > 0) {
    BetaPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  if (den_.leading() != BigRat(1)) {
    BigRat s = inverse(den_.leading());
    num_ *= s;
    den_ *= s;
  }
}

std::optional<int> BetaRatFunc::pole_order(const BigRat& beta0) const {
  if (is_zero()) return std::nullopt;
  return den_.root_multiplicity(beta0) - num_.root_multiplicity(beta0);
}

BigRat BetaRatFunc::evaluate_at(const BigRat& beta0) const {
  BigRat d = den_(beta0);
  if (d.is_zero()) throw PoleError(*pole_order(beta0));
  return num_(beta0) / d;
}

BetaRatFunc& BetaRatFunc::operator+=(const BetaRatFunc& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.degree() > 0) normalize();
    else if (num_.is_zero()) den_ = BetaPoly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

BetaRatFunc& BetaRatFunc::operator-=(const BetaRatFunc& o) { return *this += -o; }

BetaRatFunc& BetaRatFunc::operator*=(const BetaRatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = BetaRatFunc();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  // cross-cancel so the product stays reduced
  BetaPoly g1 = gcd(num_, o.den_);
  BetaPoly g2 = gcd(o.num_, den_);
  BetaPoly a = g1.degree() > 0 ? divmod(num_, g1).first : num_;
  BetaPoly d = g1.degree() > 0 ? divmod(o.den_, g1).first : o.den_;
  BetaPoly c = g2.degree() > 0 ? divmod(o.num_, g2).first : o.num_;
  BetaPoly b = g2.degree() > 0 ? divmod(den_, g2).first : den_;
  num_ = a * c;
  den_ = b * d;
  BigRat s = inverse(den_.leading());
  if (s != BigRat(1)) {
    num_ *= s;
    den_ *= s;
  }
  return *this;
}

BetaRatFunc& BetaRatFunc::operator/=(const BetaRatFunc& o) { return *this *= inverse(o); }

BetaRatFunc operator-(const BetaRatFunc& a) { return BetaRatFunc(-a.num_, a.den_, BetaRatFunc::Canonical{}); }

BetaRatFunc inverse(const BetaRatFunc& f) {
  if (f.is_zero()) throw DivisionByZero();
  return BetaRatFunc(f.den(), f.num());
}

std::string BetaRatFunc::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace jackideal
