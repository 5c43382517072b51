#ifndef JACKIDEAL_SYMPOLY_HPP
#define JACKIDEAL_SYMPOLY_HPP

#include <algorithm>
#include <atomic>
#include <concepts>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jackideal/bigrat.hpp"
#include "jackideal/errors.hpp"
#include "jackideal/partition.hpp"

namespace jackideal {

/// Coefficient rings the polynomial containers accept: ℚ (BigRat), ℚ[β]
/// (BetaPoly) and ℚ(β) (BetaRatFunc).
template <class C>
concept Coefficient = std::regular<C> && std::constructible_from<C, BigRat> && requires(const C a, const C b) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { a.is_zero() } -> std::convertible_to<bool>;
};

/// Maximum number of terms an expansion may produce before ResourceLimit.
std::size_t term_budget();
void set_term_budget(std::size_t terms);

inline void check_term_budget(std::size_t terms, const char* what) {
  if (terms > term_budget())
    throw ResourceLimit(std::string(what) + " would produce " + std::to_string(terms) + " terms (budget " +
                        std::to_string(term_budget()) + ")");
}

using Exponent = std::vector<int>;

/// Sparse polynomial in n variables, x^α ↦ coefficient. No zero coefficients
/// are stored and every exponent vector has exactly n entries.
template <Coefficient C>
class ExpandedPoly {
 public:
  using Terms = std::map<Exponent, C>;

  explicit ExpandedPoly(int n = 0) : n_(n) {}

  static ExpandedPoly constant(int n, const C& c) {
    ExpandedPoly p(n);
    p.add_term(Exponent(n, 0), c);
    return p;
  }
  static ExpandedPoly monomial(Exponent e, const C& c = C(BigRat(1))) {
    ExpandedPoly p(static_cast<int>(e.size()));
    p.add_term(std::move(e), c);
    return p;
  }

  int nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  C coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(BigRat(0)) : it->second;
  }

  void add_term(const Exponent& e, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
  }

  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      if (d < 0) d = total(e);
      else if (total(e) != d) return false;
    }
    return true;
  }

  ExpandedPoly& operator+=(const ExpandedPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  ExpandedPoly& operator-=(const ExpandedPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  ExpandedPoly& operator*=(const C& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c = c * s;
    return *this;
  }

  friend ExpandedPoly operator+(ExpandedPoly a, const ExpandedPoly& b) { return a += b; }
  friend ExpandedPoly operator-(ExpandedPoly a, const ExpandedPoly& b) { return a -= b; }
  friend ExpandedPoly operator-(ExpandedPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend ExpandedPoly operator*(ExpandedPoly a, const C& s) { return a *= s; }
  friend ExpandedPoly operator*(const C& s, ExpandedPoly a) { return a *= s; }

  friend ExpandedPoly operator*(const ExpandedPoly& a, const ExpandedPoly& b) {
    check_term_budget(a.size() * b.size(), "polynomial product");
    ExpandedPoly out(a.n_);
    Exponent e(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const ExpandedPoly& a, const ExpandedPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Applies f to every coefficient, dropping zeros; f: C -> D.
  template <class F>
  auto map_coeffs(F&& f) const {
    using D = std::decay_t<std::invoke_result_t<F, const C&>>;
    ExpandedPoly<D> out(n_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  static int total(const Exponent& e) {
    int s = 0;
    for (int v : e) s += v;
    return s;
  }

 private:
  int n_;
  Terms terms_;
};

/// Symmetric polynomial in n variables in the monomial symmetric basis
/// {m_λ : length(λ) ≤ n}.
template <Coefficient C>
class MSymPoly {
 public:
  using Terms = std::map<Partition, C>;

  explicit MSymPoly(int n = 0) : n_(n) {}

  static MSymPoly basis(int n, const Partition& lambda, const C& c = C(BigRat(1))) {
    MSymPoly p(n);
    p.add_term(lambda, c);
    return p;
  }
  static MSymPoly constant(int n, const C& c) { return basis(n, Partition{}, c); }

  int nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  C coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? C(BigRat(0)) : it->second;
  }

  void add_term(const Partition& p, const C& c) {
    if (p.length() > static_cast<std::size_t>(n_))
      throw std::invalid_argument("partition " + p.to_string() + " exceeds " + std::to_string(n_) + " variables");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Homogeneous component of the given degree.
  MSymPoly component(int degree) const {
    MSymPoly out(n_);
    for (const auto& [p, c] : terms_)
      if (p.weight() == degree) out.terms_.emplace(p, c);
    return out;
  }

  std::vector<int> degrees() const {
    std::vector<int> ds;
    for (const auto& [p, c] : terms_) ds.push_back(p.weight());
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
  }

  bool is_homogeneous() const { return degrees().size() <= 1; }

  MSymPoly& operator+=(const MSymPoly& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
  }
  MSymPoly& operator-=(const MSymPoly& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
  }
  MSymPoly& operator*=(const C& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [p, c] : terms_) c = c * s;
    return *this;
  }

  friend MSymPoly operator+(MSymPoly a, const MSymPoly& b) { return a += b; }
  friend MSymPoly operator-(MSymPoly a, const MSymPoly& b) { return a -= b; }
  friend MSymPoly operator*(MSymPoly a, const C& s) { return a *= s; }
  friend MSymPoly operator*(const C& s, MSymPoly a) { return a *= s; }

  friend bool operator==(const MSymPoly& a, const MSymPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  template <class F>
  auto map_coeffs(F&& f) const {
    using D = std::decay_t<std::invoke_result_t<F, const C&>>;
    MSymPoly<D> out(n_);
    for (const auto& [p, c] : terms_) out.add_term(p, f(c));
    return out;
  }

 private:
  int n_;
  Terms terms_;
};

/// Number of distinct permutations of the padded partition.
std::size_t orbit_size(const Partition& lambda, int n);

/// Visits every distinct permutation of λ padded to n entries.
void for_each_orbit_point(const Partition& lambda, int n, const std::function<void(const Exponent&)>& visit);

template <Coefficient C>
ExpandedPoly<C> msym_to_expanded(const MSymPoly<C>& p) {
  std::size_t total = 0;
  for (const auto& [lambda, c] : p.terms()) total += orbit_size(lambda, p.nvars());
  check_term_budget(total, "orbit expansion");
  ExpandedPoly<C> out(p.nvars());
  for (const auto& [lambda, c] : p.terms())
    for_each_orbit_point(lambda, p.nvars(), [&](const Exponent& e) { out.add_term(e, c); });
  return out;
}

template <Coefficient C>
bool is_symmetric(const ExpandedPoly<C>& p) {
  const int n = p.nvars();
  // adjacent transpositions generate S_n
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i + 1 < n; ++i) {
      if (e[i] == e[i + 1]) continue;
      Exponent s = e;
      std::swap(s[i], s[i + 1]);
      auto it = p.terms().find(s);
      if (it == p.terms().end() || !(it->second == c)) return false;
    }
  }
  return true;
}

/// Collects a symmetric polynomial onto its dominant orbit representatives;
/// throws NotSymmetric otherwise.
template <Coefficient C>
MSymPoly<C> expanded_to_msym(const ExpandedPoly<C>& p) {
  if (!is_symmetric(p)) throw NotSymmetric();
  MSymPoly<C> out(p.nvars());
  for (const auto& [e, c] : p.terms())
    if (std::is_sorted(e.begin(), e.end(), std::greater<>())) out.add_term(Partition(e), c);
  return out;
}

/// Product of symmetric polynomials through the expansion; only dominant
/// exponents of the product are accumulated.
template <Coefficient C>
MSymPoly<C> multiply(const MSymPoly<C>& a, const MSymPoly<C>& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("multiply: variable counts differ");
  const int n = a.nvars();
  ExpandedPoly<C> ea = msym_to_expanded(a);
  ExpandedPoly<C> eb = msym_to_expanded(b);
  check_term_budget(ea.size() * eb.size(), "symmetric product");
  std::map<Exponent, C> acc;
  Exponent e(n);
  for (const auto& [xa, ca] : ea.terms()) {
    for (const auto& [xb, cb] : eb.terms()) {
      bool dominant = true;
      for (int i = 0; i < n; ++i) {
        e[i] = xa[i] + xb[i];
        if (i > 0 && e[i] > e[i - 1]) {
          dominant = false;
          break;
        }
      }
      if (!dominant) continue;
      auto [it, inserted] = acc.try_emplace(e, ca * cb);
      if (!inserted) it->second = it->second + ca * cb;
    }
  }
  MSymPoly<C> out(n);
  for (const auto& [x, c] : acc) out.add_term(Partition(x), c);
  return out;
}

/// p_m = m_(m) in n variables; m = 0 gives the constant n.
template <Coefficient C>
MSymPoly<C> power_sum(int m, int n) {
  if (m < 0) throw std::invalid_argument("power_sum requires m >= 0");
  if (m == 0) return MSymPoly<C>::constant(n, C(BigRat(n)));
  return MSymPoly<C>::basis(n, Partition{m});
}

/// P(x_1, …, x_{n−1}, 0) as a symmetric polynomial in n−1 variables.
template <Coefficient C>
MSymPoly<C> restrict_last_var(const MSymPoly<C>& p) {
  if (p.nvars() < 1) throw std::invalid_argument("restrict_last_var requires n >= 1");
  MSymPoly<C> out(p.nvars() - 1);
  for (const auto& [lambda, c] : p.terms())
    if (lambda.length() < static_cast<std::size_t>(p.nvars())) out.add_term(lambda, c);
  return out;
}

/// Sets x_1 = … = x_c = t; the result lives in n−c+1 variables (t first).
template <Coefficient C>
ExpandedPoly<C> substitute_coincident(const ExpandedPoly<C>& p, int c) {
  const int n = p.nvars();
  if (c < 1 || c > n) throw std::invalid_argument("substitute_coincident requires 1 <= c <= n");
  ExpandedPoly<C> out(n - c + 1);
  Exponent e(n - c + 1);
  for (const auto& [x, coeff] : p.terms()) {
    e[0] = 0;
    for (int i = 0; i < c; ++i) e[0] += x[i];
    for (int i = c; i < n; ++i) e[i - c + 1] = x[i];
    out.add_term(e, coeff);
  }
  return out;
}

template <Coefficient C>
ExpandedPoly<C> substitute_coincident(const MSymPoly<C>& p, int c) {
  return substitute_coincident(msym_to_expanded(p), c);
}

template <Coefficient C>
C evaluate(const ExpandedPoly<C>& p, std::span<const BigRat> point) {
  if (point.size() != static_cast<std::size_t>(p.nvars())) throw std::invalid_argument("evaluate: point has wrong length");
  C acc(BigRat(0));
  for (const auto& [e, c] : p.terms()) {
    BigRat mono(1);
    for (std::size_t i = 0; i < point.size(); ++i) mono *= pow(point[i], e[i]);
    acc = acc + c * C(mono);
  }
  return acc;
}

template <Coefficient C>
C evaluate(const MSymPoly<C>& p, std::span<const BigRat> point) {
  return evaluate(msym_to_expanded(p), point);
}

}  // namespace jackideal

#endif  // JACKIDEAL_SYMPOLY_HPP
