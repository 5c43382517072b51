#include "jackideal/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "jackideal/errors.hpp"

namespace jackideal {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) continue;
    std::size_t used = 0;
    int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument("malformed partition: " + std::string(text));
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

std::vector<int> Partition::padded(std::size_t n) const {
  if (parts_.size() > n) throw std::invalid_argument("partition " + to_string() + " longer than " + std::to_string(n));
  std::vector<int> out = parts_;
  out.resize(n, 0);
  return out;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> cols(parts_.front(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++cols[j];
  return Partition(std::move(cols));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Dominance dominance_compare(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight())
    throw DegreeMismatch("dominance requires equal degree: " + mu.to_string() + " vs " + lambda.to_string());
  bool some_less = false;
  bool some_greater = false;
  int smu = 0;
  int slam = 0;
  const std::size_t len = std::max(mu.length(), lambda.length());
  for (std::size_t i = 0; i < len; ++i) {
    smu += mu[i];
    slam += lambda[i];
    if (smu < slam) some_less = true;
    if (smu > slam) some_greater = true;
  }
  if (some_less && some_greater) return Dominance::incomparable;
  if (some_less) return Dominance::less;
  if (some_greater) return Dominance::greater;
  return Dominance::equal;
}

bool dominated_by(const Partition& mu, const Partition& lambda) {
  auto d = dominance_compare(mu, lambda);
  return d == Dominance::less || d == Dominance::equal;
}

namespace {

void partitions_rec(int remaining, int max_part, std::size_t slots, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    // p * slots must be able to cover the remainder
    if (static_cast<long>(p) * static_cast<long>(slots) < remaining) break;
    cur.push_back(p);
    partitions_rec(remaining - p, p, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int degree, std::size_t max_length) {
  std::vector<Partition> out;
  if (degree < 0) return out;
  std::vector<int> cur;
  partitions_rec(degree, degree, max_length, cur, out);
  return out;
}

void validate_kr(int k, int r) {
  if (k < 1) throw InvalidParameters("k must be >= 1, got " + std::to_string(k));
  if (r < 2) throw InvalidParameters("r must be >= 2, got " + std::to_string(r));
  if (std::gcd(k + 1, r - 1) != 1)
    throw InvalidParameters("k+1 and r-1 must be coprime, got k=" + std::to_string(k) + " r=" + std::to_string(r));
}

BigRat beta_kr(int k, int r) {
  validate_kr(k, r);
  return BigRat(-(r - 1), k + 1);
}

bool is_admissible(const Partition& lambda, int k, int r, std::size_t n) {
  validate_kr(k, r);
  if (lambda.length() > n)
    throw InvalidParameters("partition " + lambda.to_string() + " has more than n=" + std::to_string(n) + " parts");
  const std::size_t kk = static_cast<std::size_t>(k);
  for (std::size_t i = 0; i + kk < n; ++i) {
    if (lambda[i] - lambda[i + kk] < r) return false;
  }
  return true;
}

std::vector<std::size_t> AdmissibleFamily::character() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(dmax) + 1, 0);
  for (const auto& [d, parts] : by_degree)
    if (d >= 0 && d <= dmax) out[d] = parts.size();
  return out;
}

namespace {

// Rows are filled top-down; row i ≥ k is capped by λ_{i−k} − r.
void admissible_rec(std::size_t row, int budget, int k, int r, std::size_t n, std::vector<int>& cur,
                    std::map<int, std::vector<Partition>>& out, int used) {
  if (row == n) {
    out[used].emplace_back(cur);
    return;
  }
  int cap = row == 0 ? budget : std::min(cur[row - 1], budget);
  if (row >= static_cast<std::size_t>(k)) cap = std::min(cap, cur[row - k] - r);
  if (cap < 0) return;
  for (int p = cap; p >= 0; --p) {
    cur.push_back(p);
    admissible_rec(row + 1, budget - p, k, r, n, cur, out, used + p);
    cur.pop_back();
  }
}

}  // namespace

AdmissibleFamily enumerate_admissible(int k, int r, int n, int dmax) {
  validate_kr(k, r);
  if (n < 1) throw InvalidParameters("n must be >= 1");
  if (dmax < 0) throw InvalidParameters("dmax must be >= 0");
  AdmissibleFamily fam{k, r, n, dmax, {}};
  for (int d = 0; d <= dmax; ++d) fam.by_degree[d];
  std::vector<int> cur;
  admissible_rec(0, dmax, k, r, static_cast<std::size_t>(n), cur, fam.by_degree, 0);
  for (auto& [d, parts] : fam.by_degree) std::sort(parts.begin(), parts.end(), std::greater<>());
  return fam;
}

BetaPoly c_lambda(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  BetaPoly prod(1);
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      // 1-based node (i+1, j+1): (λ'_{j+1} − i)β + λ_{i+1} − (j+1)
      prod *= BetaPoly::linear(BigRat(conj[j] - static_cast<int>(i)), BigRat(lambda[i] - j - 1));
    }
  }
  return prod;
}

BetaPoly cs_eigenvalue(const Partition& lambda, int n) {
  if (lambda.length() > static_cast<std::size_t>(n)) throw InvalidParameters("partition longer than n");
  BetaPoly eps;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    const int li = lambda[i];
    const int i1 = static_cast<int>(i) + 1;
    eps += BetaPoly::linear(BigRat(static_cast<long>(n + 1 - 2 * i1) * li), BigRat(static_cast<long>(li) * li));
  }
  return eps;
}

UPoly sekiguchi_eigenvalue(const Partition& lambda, int n) {
  if (lambda.length() > static_cast<std::size_t>(n)) throw InvalidParameters("partition longer than n");
  UPoly acc{BetaPoly(1)};
  for (int i = 0; i < n; ++i) {
    // multiply by (u + c), c = λ_i + (n−1−i)β
    BetaPoly c = BetaPoly::linear(BigRat(n - 1 - i), BigRat(lambda[i]));
    UPoly next(acc.size() + 1);
    for (std::size_t p = 0; p < acc.size(); ++p) {
      next[p] += acc[p] * c;
      next[p + 1] += acc[p];
    }
    acc = std::move(next);
  }
  return acc;
}

NodeMoves node_moves(const Partition& lambda, int n) {
  NodeMoves moves;
  const std::size_t len = lambda.length();
  for (std::size_t i = 0; i <= len && i < static_cast<std::size_t>(n); ++i) {
    if (i == 0 || lambda[i - 1] > lambda[i]) {
      std::vector<int> p = lambda.parts();
      if (i == len) p.push_back(1);
      else ++p[i];
      moves.addable.emplace_back(std::move(p));
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (lambda[i] > lambda[i + 1]) {
      std::vector<int> p = lambda.parts();
      --p[i];
      moves.removable.emplace_back(std::move(p));
    }
  }
  return moves;
}

bool check_nonvanishing(const Partition& lambda, int k, int r, int n) {
  const BigRat b0 = beta_kr(k, r);
  const Partition conj = lambda.conjugate();
  // 1-based rows i < j ≤ n
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      BigRat v = BigRat(j - i) * b0 + BigRat(lambda[i - 1] - lambda[j - 1]);
      if (v.is_zero()) return false;
      if (lambda[j - 1] < lambda[j - 2] && v == BigRat(1)) return false;
    }
  }
  for (int i = 1; i <= static_cast<int>(lambda.length()); ++i) {
    for (int j = 1; j <= lambda[i - 1]; ++j) {
      BigRat v = BigRat(conj[j - 1] - i + 1) * b0 + BigRat(lambda[i - 1] - j);
      if (v.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace jackideal
