#include "jackideal/jack.hpp"

#include <fstream>
#include <mutex>

#include "jackideal/json_io.hpp"
#include "jackideal/operators.hpp"
#include "jackideal/parallel.hpp"

namespace jackideal {

SpecializationPole::SpecializationPole(Partition lambda_, Partition mu_, int order_)
    : std::domain_error("P" + lambda_.to_string() + ": coefficient of m" + mu_.to_string() + " has a pole of order " +
                        std::to_string(order_)),
      lambda(std::move(lambda_)),
      mu(std::move(mu_)),
      order(order_) {}

std::map<Partition, BetaPoly> hamiltonian_matrix_row(const Partition& mu, int n) {
  auto image = apply_hamiltonian(MSymPoly<BetaPoly>::basis(n, mu), BetaPoly::beta());
  return {image.terms().begin(), image.terms().end()};
}

std::vector<Partition> dominated_partitions(const Partition& lambda, int n) {
  std::vector<Partition> out;
  for (auto& mu : partitions_of(lambda.weight(), static_cast<std::size_t>(n)))
    if (dominated_by(mu, lambda)) out.push_back(std::move(mu));
  return out;
}

JackStore& jack_store() {
  static JackStore store;
  return store;
}

void JackStore::set_cache_dir(std::optional<std::filesystem::path> dir) {
  std::unique_lock lock(mutex_);
  if (dir) std::filesystem::create_directories(*dir);
  cache_dir_ = std::move(dir);
}

std::optional<std::filesystem::path> JackStore::cache_dir() const {
  std::shared_lock lock(mutex_);
  return cache_dir_;
}

std::size_t JackStore::size() const {
  std::shared_lock lock(mutex_);
  return jacks_.size();
}

void JackStore::clear() {
  std::unique_lock lock(mutex_);
  jacks_.clear();
  rows_.clear();
}

std::shared_ptr<const std::map<Partition, BetaPoly>> JackStore::row(const Partition& mu, int n) {
  Key key{mu, n};
  {
    std::shared_lock lock(mutex_);
    if (auto it = rows_.find(key); it != rows_.end()) return it->second;
  }
  auto computed = std::make_shared<const std::map<Partition, BetaPoly>>(hamiltonian_matrix_row(mu, n));
  std::unique_lock lock(mutex_);
  return rows_.try_emplace(std::move(key), std::move(computed)).first->second;
}

std::shared_ptr<const JackPoly> JackStore::get(const Partition& lambda, int n) {
  if (lambda.length() > static_cast<std::size_t>(n))
    throw std::invalid_argument("partition " + lambda.to_string() + " has more than " + std::to_string(n) + " parts");
  Key key{lambda, n};
  {
    std::shared_lock lock(mutex_);
    if (auto it = jacks_.find(key); it != jacks_.end()) return it->second;
  }
  bool fresh = false;
  auto jack = load(lambda, n);
  if (!jack) {
    jack = compute(lambda, n);
    fresh = true;
  }
  std::shared_ptr<const JackPoly> stored;
  {
    std::unique_lock lock(mutex_);
    stored = jacks_.try_emplace(std::move(key), std::move(jack)).first->second;
  }
  if (fresh) save(*stored);
  return stored;
}

std::shared_ptr<const JackPoly> JackStore::compute(const Partition& lambda, int n) {
  const std::vector<Partition> below = dominated_partitions(lambda, n);
  const BetaPoly eps_lambda = cs_eigenvalue(lambda, n);

  std::vector<std::pair<BetaRatFunc, std::shared_ptr<const std::map<Partition, BetaPoly>>>> solved;
  auto result = std::make_shared<JackPoly>();
  result->lambda = lambda;
  result->n = n;
  result->poly = MSymPoly<BetaRatFunc>(n);
  result->poly.add_term(lambda, BetaRatFunc(1));
  solved.emplace_back(BetaRatFunc(1), row(lambda, n));

  for (std::size_t idx = 1; idx < below.size(); ++idx) {
    const Partition& mu = below[idx];
    BetaRatFunc sum;
    for (const auto& [u, h] : solved) {
      if (auto it = h->find(mu); it != h->end()) sum += u * BetaRatFunc(it->second);
    }
    if (sum.is_zero()) continue;
    const BetaPoly gap = eps_lambda - cs_eigenvalue(mu, n);
    // Σλ_i² > Σμ_i² for μ strictly below λ, so the gap has a nonzero constant term
    if (gap.is_zero())
      throw std::logic_error("eigenvalue gap vanishes for " + lambda.to_string() + " vs " + mu.to_string());
    BetaRatFunc u = sum / BetaRatFunc(gap);
    result->poly.add_term(mu, u);
    solved.emplace_back(std::move(u), row(mu, n));
  }
  return result;
}

namespace {

std::filesystem::path cache_file(const std::filesystem::path& dir, const Partition& lambda, int n) {
  std::string name = "jack_n" + std::to_string(n) + "_";
  if (lambda.empty()) name += "empty";
  for (std::size_t i = 0; i < lambda.length(); ++i) name += (i ? "-" : "") + std::to_string(lambda[i]);
  return dir / (name + ".json");
}

}  // namespace

std::shared_ptr<const JackPoly> JackStore::load(const Partition& lambda, int n) const {
  auto dir = cache_dir();
  if (!dir) return nullptr;
  std::ifstream in(cache_file(*dir, lambda, n));
  if (!in) return nullptr;
  try {
    auto jack = std::make_shared<JackPoly>(json::parse(in).get<JackPoly>());
    if (jack->lambda != lambda || jack->n != n || !(jack->poly.coeff(lambda) == BetaRatFunc(1))) return nullptr;
    return jack;
  } catch (const std::exception&) {
    return nullptr;  // unreadable entries are recomputed
  }
}

void JackStore::save(const JackPoly& jack) const {
  auto dir = cache_dir();
  if (!dir) return;
  const auto path = cache_file(*dir, jack.lambda, jack.n);
  const auto tmp = path.string() + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    out << json(jack).dump();
  }
  std::filesystem::rename(tmp, path);
}

JackPoly jack_symbolic(const Partition& lambda, int n) { return *jack_store().get(lambda, n); }

void precompute_jacks(const std::vector<std::pair<Partition, int>>& keys, int workers) {
  parallel_for(keys.size(), workers, [&](std::size_t i) { jack_store().get(keys[i].first, keys[i].second); });
}

BetaPoly common_denominator(const MSymPoly<BetaRatFunc>& p) {
  BetaPoly l(1);
  for (const auto& [mu, c] : p.terms()) {
    if (c.den().degree() == 0) continue;
    BetaPoly g = gcd(l, c.den());
    l = divmod(l * c.den(), g).first;
  }
  return l.monic();
}

namespace {

MSymPoly<BetaPoly> clear_denominators(const MSymPoly<BetaRatFunc>& p) {
  const BetaPoly l = common_denominator(p);
  return p.map_coeffs([&](const BetaRatFunc& c) { return c.num() * divmod(l, c.den()).first; });
}

}  // namespace

bool verify_sekiguchi(const Partition& lambda, int n) {
  const auto jack = jack_store().get(lambda, n);
  const auto cleared = msym_to_expanded(clear_denominators(jack->poly));
  const auto image = apply_sekiguchi(cleared, BetaPoly::beta());
  const UPoly eigen = sekiguchi_eigenvalue(lambda, n);
  if (image.size() != eigen.size()) return false;
  for (std::size_t q = 0; q < image.size(); ++q)
    if (!(image[q] == cleared * eigen[q])) return false;
  return true;
}

bool verify_hamiltonian_eigen(const Partition& lambda, int n) {
  const auto jack = jack_store().get(lambda, n);
  const auto cleared = msym_to_expanded(clear_denominators(jack->poly));
  return apply_hamiltonian(cleared, BetaPoly::beta()) == cleared * cs_eigenvalue(lambda, n);
}

MSymPoly<BigRat> specialize_at(const JackPoly& jack, const BigRat& beta0) {
  MSymPoly<BigRat> out(jack.n);
  for (const auto& [mu, c] : jack.poly.terms()) {
    auto order = c.pole_order(beta0);
    if (order && *order > 0) throw SpecializationPole(jack.lambda, mu, *order);
    out.add_term(mu, c.evaluate_at(beta0));
  }
  return out;
}

SpecializedJack specialize(const Partition& lambda, int n, int k, int r) {
  const BigRat beta0 = beta_kr(k, r);
  return SpecializedJack{lambda, n, k, r, specialize_at(*jack_store().get(lambda, n), beta0)};
}

int pole_profile(const Partition& lambda, int n, const BigRat& beta0) {
  int worst = 0;
  for (const auto& [mu, c] : jack_store().get(lambda, n)->poly.terms()) {
    auto order = c.pole_order(beta0);
    if (order) worst = std::max(worst, *order);
  }
  return worst;
}

BetaRatFunc principal_specialization(const Partition& lambda, int n) {
  if (lambda.length() > static_cast<std::size_t>(n)) return BetaRatFunc(0);
  const Partition conj = lambda.conjugate();
  BetaPoly num(1);
  BetaPoly den(1);
  // 1-based node (i, j): ((n−i+1)β + j−1) / ((λ'_j − i + 1)β + λ_i − j)
  for (int i = 1; i <= static_cast<int>(lambda.length()); ++i) {
    for (int j = 1; j <= lambda[i - 1]; ++j) {
      num *= BetaPoly::linear(BigRat(n - i + 1), BigRat(j - 1));
      den *= BetaPoly::linear(BigRat(conj[j - 1] - i + 1), BigRat(lambda[i - 1] - j));
    }
  }
  return BetaRatFunc(num, den);
}

}  // namespace jackideal
