#include "jackideal/ideal.hpp"

#include <algorithm>
#include <fstream>

#include "jackideal/errors.hpp"
#include "jackideal/json_io.hpp"

namespace jackideal {

IdealBasis::IdealBasis(int k, int r, int n, int dmax) : k_(k), r_(r), n_(n), dmax_(dmax), beta0_(beta_kr(k, r)) {
  for (int d = 0; d <= dmax; ++d) elements_[d];
}

const std::vector<SpecializedJack>& IdealBasis::degree(int d) const {
  static const std::vector<SpecializedJack> empty;
  auto it = elements_.find(d);
  return it == elements_.end() ? empty : it->second;
}

const SpecializedJack* IdealBasis::find(const Partition& lambda) const {
  auto it = index_.find(lambda);
  if (it == index_.end()) return nullptr;
  return &elements_.at(it->second.first)[it->second.second];
}

std::vector<std::size_t> IdealBasis::character() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(std::max(dmax_, -1) + 1), 0);
  for (const auto& [d, list] : elements_)
    if (d <= dmax_) out[d] = list.size();
  return out;
}

std::size_t IdealBasis::size() const { return index_.size(); }

void IdealBasis::insert(SpecializedJack element) {
  const int d = element.lambda.weight();
  if (d > dmax_) throw DegreeOverflow("element degree exceeds basis dmax");
  auto& list = elements_[d];
  auto pos = std::find_if(list.begin(), list.end(), [&](const SpecializedJack& e) { return e.lambda < element.lambda; });
  pos = list.insert(pos, std::move(element));
  // reindex this degree
  for (std::size_t i = 0; i < list.size(); ++i) index_[list[i].lambda] = {d, i};
}

IdealBasis build_basis(int k, int r, int n, int dmax, int workers) {
  const AdmissibleFamily fam = enumerate_admissible(k, r, n, dmax);
  std::vector<std::pair<Partition, int>> keys;
  for (const auto& [d, list] : fam.by_degree)
    for (const auto& lambda : list) keys.emplace_back(lambda, n);
  precompute_jacks(keys, workers);

  IdealBasis basis(k, r, n, dmax);
  for (const auto& [lambda, nn] : keys) {
    try {
      basis.insert(specialize(lambda, n, k, r));
    } catch (const SpecializationPole& e) {
      throw std::logic_error(std::string("admissible partition specialized to a pole: ") + e.what());
    }
  }
  return basis;
}

void save_basis(const IdealBasis& basis, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  json meta = {{"k", basis.k()},
               {"r", basis.r()},
               {"n", basis.n()},
               {"dmax", basis.dmax()},
               {"beta", basis.beta0()},
               {"character", basis.character()}};
  std::ofstream(dir / "meta.json") << meta.dump(2) << "\n";
  for (const auto& [d, list] : basis.elements()) {
    json arr = json::array();
    for (const auto& e : list) arr.push_back(json(e));
    std::ofstream(dir / ("degree_" + std::to_string(d) + ".json")) << arr.dump() << "\n";
  }
}

IdealBasis load_basis(const std::filesystem::path& dir) {
  std::ifstream meta_in(dir / "meta.json");
  if (!meta_in) throw std::runtime_error("no basis metadata in " + dir.string());
  json meta = json::parse(meta_in);
  IdealBasis basis(meta.at("k").get<int>(), meta.at("r").get<int>(), meta.at("n").get<int>(),
                   meta.at("dmax").get<int>());
  for (int d = 0; d <= basis.dmax(); ++d) {
    std::ifstream in(dir / ("degree_" + std::to_string(d) + ".json"));
    if (!in) throw std::runtime_error("missing degree file " + std::to_string(d) + " in " + dir.string());
    for (const auto& e : json::parse(in)) basis.insert(e.get<SpecializedJack>());
  }
  return basis;
}

namespace {

// Support partitions not strictly dominated by another support partition.
std::vector<Partition> maximal_support(const MSymPoly<BigRat>& p) {
  std::vector<Partition> support;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) support.push_back(it->first);
  std::vector<Partition> maximal;
  for (std::size_t i = 0; i < support.size(); ++i) {
    bool dominated = false;
    // only lexicographically larger partitions can dominate support[i]
    for (std::size_t j = 0; j < i && !dominated; ++j)
      dominated = dominance_compare(support[i], support[j]) == Dominance::less;
    if (!dominated) maximal.push_back(support[i]);
  }
  return maximal;
}

}  // namespace

MembershipCertificate reduce_membership(const MSymPoly<BigRat>& p, const IdealBasis& basis) {
  if (p.nvars() != basis.n())
    throw std::invalid_argument("polynomial has " + std::to_string(p.nvars()) + " variables, basis has " +
                                std::to_string(basis.n()));
  MembershipCertificate cert;
  cert.member = true;
  for (int d : p.degrees()) {
    if (d > basis.dmax())
      throw DegreeOverflow("degree " + std::to_string(d) + " exceeds basis dmax " + std::to_string(basis.dmax()));
  }
  for (int d : p.degrees()) {
    MSymPoly<BigRat> residual = p.component(d);
    while (!residual.is_zero()) {
      const auto maximal = maximal_support(residual);
      for (const auto& lambda : maximal) {
        if (!basis.find(lambda)) {
          cert.member = false;
          cert.obstruction = lambda;
          cert.combination.clear();
          return cert;
        }
      }
      for (const auto& lambda : maximal) {
        const BigRat c = residual.coeff(lambda);
        residual -= basis.find(lambda)->poly * c;
        cert.combination[lambda] += c;
      }
    }
  }
  std::erase_if(cert.combination, [](const auto& kv) { return kv.second.is_zero(); });
  return cert;
}

MSymPoly<BigRat> recombine(const MembershipCertificate& cert, const IdealBasis& basis) {
  MSymPoly<BigRat> out(basis.n());
  for (const auto& [lambda, c] : cert.combination) {
    const auto* e = basis.find(lambda);
    if (!e) throw std::invalid_argument("certificate references non-basis partition " + lambda.to_string());
    out += e->poly * c;
  }
  return out;
}

std::vector<CoefficientFactor> pieri_factors(const Partition& mu, int row) {
  if (row < 0 || (row > 0 && mu[row - 1] <= mu[row]))
    throw InvalidNode("cannot add a node to row " + std::to_string(row) + " of " + mu.to_string());
  std::vector<CoefficientFactor> factors;
  const int j = row + 1;
  const int mj = mu[row];
  for (int i = 1; i < j; ++i) {
    const int d = mu[i - 1] - mj;
    factors.push_back({"first(i=" + std::to_string(i) + ")", BetaPoly::linear(BigRat(j - i - 1), BigRat(d)),
                       BetaPoly::linear(BigRat(j - i), BigRat(d - 1))});
    factors.push_back({"second(i=" + std::to_string(i) + ")", BetaPoly::linear(BigRat(j - i + 1), BigRat(d - 1)),
                       BetaPoly::linear(BigRat(j - i), BigRat(d))});
  }
  return factors;
}

BetaRatFunc product(const std::vector<CoefficientFactor>& factors) {
  BetaRatFunc acc(1);
  for (const auto& f : factors) acc *= BetaRatFunc(f.num, f.den);
  return acc;
}

BetaRatFunc pieri_coefficient(const Partition& mu, int row) { return product(pieri_factors(mu, row)); }

BetaRatFunc lassalle_up(const Partition& mu, int row) {
  return pieri_coefficient(mu, row) * BetaRatFunc(BetaPoly::linear(BigRat(-row), BigRat(mu[row])));
}

std::vector<CoefficientFactor> lassalle_down_factors(const Partition& mu, int row, int n) {
  if (row < 0 || static_cast<std::size_t>(row) >= mu.length() || mu[row] <= mu[row + 1])
    throw InvalidNode("no removable node in row " + std::to_string(row) + " of " + mu.to_string());
  if (mu.length() > static_cast<std::size_t>(n)) throw InvalidParameters("partition longer than n");
  const int i = row + 1;
  const int mi = mu[row];
  const Partition conj = mu.conjugate();
  std::vector<CoefficientFactor> factors;
  factors.push_back({"inv_beta", BetaPoly(1), BetaPoly::beta()});
  factors.push_back({"pre1", BetaPoly::linear(BigRat(n - i), BigRat(mi)), BetaPoly(1)});
  factors.push_back({"pre2", BetaPoly::linear(BigRat(n - i + 1), BigRat(mi - 1)), BetaPoly(1)});
  for (int j = i + 1; j <= n; ++j) {
    const int d = mi - mu[j - 1];
    factors.push_back({"right(j=" + std::to_string(j) + ")", BetaPoly::linear(BigRat(j - i - 1), BigRat(d)),
                       BetaPoly::linear(BigRat(j - i), BigRat(d))});
  }
  for (int j = 1; j <= mi - 1; ++j) {
    const int a = conj[j - 1] - i + 1;
    factors.push_back({"col(j=" + std::to_string(j) + ")", BetaPoly::linear(BigRat(a), BigRat(mi - j - 1)),
                       BetaPoly::linear(BigRat(a), BigRat(mi - j))});
  }
  return factors;
}

BetaRatFunc lassalle_down(const Partition& mu, int row, int n) { return product(lassalle_down_factors(mu, row, n)); }

int changed_row(const Partition& from, const Partition& to) {
  const std::size_t len = std::max(from.length(), to.length());
  for (std::size_t i = 0; i < len; ++i)
    if (from[i] != to[i]) return static_cast<int>(i);
  return -1;
}

std::size_t exact_rank(std::vector<std::vector<mpz_class>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const mpz_class& p = m[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class v = p * m[i][j] - m[i][col] * m[rank][j];
        if (prev != 1) {
          mpz_class q, rem;
          mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
          if (rem != 0) throw std::logic_error("fraction-free elimination: inexact division");
          v = q;
        }
        m[i][j] = v;
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t wheel_dimension(int k, int n, int d) {
  if (k < 1 || n < 1 || d < 0) throw InvalidParameters("wheel_dimension requires k >= 1, n >= 1, d >= 0");
  const auto parts = partitions_of(d, static_cast<std::size_t>(n));
  if (n <= k) return parts.size();
  std::map<Exponent, std::size_t> column;
  std::vector<ExpandedPoly<BigRat>> images;
  for (const auto& lambda : parts) {
    images.push_back(substitute_coincident(MSymPoly<BigRat>::basis(n, lambda), k + 1));
    for (const auto& [e, c] : images.back().terms()) column.try_emplace(e, column.size());
  }
  std::vector<std::vector<mpz_class>> matrix(parts.size(), std::vector<mpz_class>(column.size(), 0));
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (const auto& [e, c] : images[i].terms()) {
      if (!c.is_integer()) throw std::logic_error("orbit substitution produced a non-integer coefficient");
      matrix[i][column.at(e)] = c.num();
    }
  }
  return parts.size() - exact_rank(std::move(matrix));
}

}  // namespace jackideal
