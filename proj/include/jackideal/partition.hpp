#ifndef JACKIDEAL_PARTITION_HPP
#define JACKIDEAL_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "jackideal/beta_poly.hpp"
#include "jackideal/bigrat.hpp"

namespace jackideal {

/// Integer partition, stored without trailing zeros. Row indices are 0-based:
/// `lambda[0]` is the largest part, and reading past the stored length yields 0,
/// which is how partitions are padded to an ambient number of variables.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Accepts any weakly decreasing nonnegative sequence; trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);

  /// Comma-separated parts, e.g. "4,2" or "" for the empty partition.
  static Partition parse(std::string_view text);

  int operator[](std::size_t row) const { return row < parts_.size() ? parts_[row] : 0; }
  std::size_t length() const { return parts_.size(); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }
  /// Parts padded with zeros to `n` entries; requires length() <= n.
  std::vector<int> padded(std::size_t n) const;

  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts: a linear extension of dominance within a degree.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

enum class Dominance { less, equal, greater, incomparable };

/// Dominance comparison of mu against lambda; throws DegreeMismatch when
/// |mu| != |lambda|.
Dominance dominance_compare(const Partition& mu, const Partition& lambda);
/// mu ≤ lambda in dominance (same degree required).
bool dominated_by(const Partition& mu, const Partition& lambda);

/// All partitions of `degree` with at most `max_length` parts, in decreasing
/// lexicographic order.
std::vector<Partition> partitions_of(int degree, std::size_t max_length);

/// β(k,r) = −(r−1)/(k+1). Throws InvalidParameters unless k ≥ 1, r ≥ 2 and
/// gcd(k+1, r−1) = 1.
BigRat beta_kr(int k, int r);
void validate_kr(int k, int r);

bool is_admissible(const Partition& lambda, int k, int r, std::size_t n);

struct AdmissibleFamily {
  int k = 0;
  int r = 0;
  int n = 0;
  int dmax = 0;
  std::map<int, std::vector<Partition>> by_degree;

  /// Number of admissible partitions per degree 0..dmax.
  std::vector<std::size_t> character() const;
};

AdmissibleFamily enumerate_admissible(int k, int r, int n, int dmax);

/// Product over nodes (i,j) of ((λ'_j − i + 1)β + λ_i − j), 1-based node coordinates.
BetaPoly c_lambda(const Partition& lambda);

/// Calogero-Sutherland eigenvalue Σ_i (λ_i + β(n+1−2i))λ_i.
BetaPoly cs_eigenvalue(const Partition& lambda, int n);

/// Polynomial in a formal variable u with BetaPoly coefficients, index = power of u.
using UPoly = std::vector<BetaPoly>;

/// Π_{i=1..n} (u + λ_i + (n−i)β).
UPoly sekiguchi_eigenvalue(const Partition& lambda, int n);

struct NodeMoves {
  std::vector<Partition> addable;
  std::vector<Partition> removable;
};

/// Partitions of length ≤ n obtained by adding or removing one node, each list
/// ordered by the row that changes.
NodeMoves node_moves(const Partition& lambda, int n);

/// Direct exact check that none of the denominators appearing in the Jack,
/// Pieri and Lassalle coefficients vanish at β(k,r) for this partition.
bool check_nonvanishing(const Partition& lambda, int k, int r, int n);

}  // namespace jackideal

#endif  // JACKIDEAL_PARTITION_HPP
