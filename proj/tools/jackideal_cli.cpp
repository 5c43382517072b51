// jackideal: Jack polynomials at negative rational coupling and the ideals
// they span.
//
//   jackideal partitions --n 3 --dmax 6 [--k 1 --r 2] [--lambda 4,2]
//   jackideal jack --lambda 2 --n 2 [--symbolic | --k 1 --r 2 | --beta -1/2]
//   jackideal ideal basis --k 1 --r 2 --n 2 --dmax 6
//   jackideal ideal member --k 1 --r 2 --n 2 --dmax 6 --input poly.json
//   jackideal character --k 1 --r 2 --n 2 --dmax 8
//   jackideal specialize-principal --lambda 3,1 --n 3 [--k 2 --r 3]
//   jackideal verify wheel --k 2 --n 4 --dmax 10
//
// Exit status: 0 success, 1 a verification case failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "jackideal/errors.hpp"
#include "jackideal/ideal.hpp"
#include "jackideal/jack.hpp"
#include "jackideal/json_io.hpp"
#include "jackideal/suites.hpp"

using namespace jackideal;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Flags {
  std::optional<int> k, r, n, dmax;
  std::string lambda;
  bool has_lambda = false;
  std::string beta;
  bool symbolic = false;
  int mmax = 4, tmax = 4, jmax = 2, trials = 25;
  int degree = 5;
  std::uint64_t seed = 20240601;
  std::string format = "json";
  int workers = 1;
  std::string cache_dir;
  std::string input = "-";
};

int need(const std::optional<int>& v, const char* flag, const char* domain) {
  if (!v) throw UsageError(std::string("missing ") + flag + " (expected " + domain + ")");
  return *v;
}

int need_n(const Flags& f) {
  const int n = need(f.n, "--n", "an integer >= 1");
  if (n < 1) throw UsageError("--n must be >= 1, got " + std::to_string(n));
  return n;
}

int need_dmax(const Flags& f) {
  const int d = need(f.dmax, "--dmax", "an integer >= 0");
  if (d < 0) throw UsageError("--dmax must be >= 0, got " + std::to_string(d));
  return d;
}

std::pair<int, int> need_kr(const Flags& f) {
  const int k = need(f.k, "--k", "an integer >= 1");
  const int r = need(f.r, "--r", "an integer >= 2 with gcd(k+1, r-1) = 1");
  try {
    validate_kr(k, r);
  } catch (const InvalidParameters& e) {
    throw UsageError(std::string("--k/--r: ") + e.what());
  }
  return {k, r};
}

Partition need_lambda(const Flags& f) {
  if (!f.has_lambda) throw UsageError("missing --lambda (expected comma-separated parts, e.g. 4,2)");
  try {
    return Partition::parse(f.lambda);
  } catch (const std::exception& e) {
    throw UsageError("--lambda: " + std::string(e.what()));
  }
}

BigRat parse_beta(const std::string& text) {
  try {
    return BigRat::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("--beta: expected p/q, got \"" + text + "\"");
  }
}

void emit(const Flags& f, const json& j, const std::string& text) {
  if (f.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string poly_text(const MSymPoly<BetaRatFunc>& p) {
  std::ostringstream os;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    os << "  m" << it->first << "  " << it->second.to_string() << "\n";
  return os.str();
}

std::string poly_text(const MSymPoly<BigRat>& p) {
  std::ostringstream os;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    os << "  m" << it->first << "  " << it->second.to_string() << "\n";
  return os.str();
}

int cmd_partitions(const Flags& f) {
  const int n = need_n(f);
  if (f.has_lambda) {
    const Partition lambda = need_lambda(f);
    auto [k, r] = need_kr(f);
    const bool adm = lambda.length() <= static_cast<std::size_t>(n) && is_admissible(lambda, k, r, n);
    emit(f, {{"lambda", lambda}, {"k", k}, {"r", r}, {"n", n}, {"admissible", adm}},
         lambda.to_string() + (adm ? " admissible\n" : " not admissible\n"));
    return 0;
  }
  const int dmax = need_dmax(f);
  json out = json::object();
  std::ostringstream text;
  if (f.k || f.r) {
    auto [k, r] = need_kr(f);
    const auto fam = enumerate_admissible(k, r, n, dmax);
    out = to_json(fam);
    for (const auto& [d, list] : fam.by_degree) {
      text << d << ":";
      for (const auto& p : list) text << " " << p;
      text << "\n";
    }
  } else {
    for (int d = 0; d <= dmax; ++d) {
      const auto list = partitions_of(d, static_cast<std::size_t>(n));
      out[std::to_string(d)] = list;
      text << d << ":";
      for (const auto& p : list) text << " " << p;
      text << "\n";
    }
    out = {{"n", n}, {"partitions", out}};
  }
  emit(f, out, text.str());
  return 0;
}

int cmd_jack(const Flags& f) {
  const Partition lambda = need_lambda(f);
  const int n = need_n(f);
  if (lambda.length() > static_cast<std::size_t>(n))
    throw UsageError("--lambda has " + std::to_string(lambda.length()) + " parts but --n is " + std::to_string(n));
  const bool specialized = f.k || f.r || !f.beta.empty();
  if (f.symbolic && specialized) throw UsageError("--symbolic excludes --k/--r and --beta");
  if (!specialized) {
    const auto jack = jack_symbolic(lambda, n);
    emit(f, json(jack), "P" + lambda.to_string() + " in " + std::to_string(n) + " variables:\n" + poly_text(jack.poly));
    return 0;
  }
  BigRat beta0;
  json meta = {{"lambda", lambda}};
  if (!f.beta.empty()) {
    if (f.k || f.r) throw UsageError("--beta excludes --k/--r");
    beta0 = parse_beta(f.beta);
  } else {
    auto [k, r] = need_kr(f);
    beta0 = beta_kr(k, r);
    meta["k"] = k;
    meta["r"] = r;
  }
  meta["beta"] = beta0;
  try {
    const auto poly = specialize_at(jack_symbolic(lambda, n), beta0);
    meta["poly"] = poly;
    emit(f, meta, "P" + lambda.to_string() + " at beta=" + beta0.to_string() + ":\n" + poly_text(poly));
    return 0;
  } catch (const SpecializationPole& e) {
    std::cerr << "error: P" << lambda << " has a pole of order " << e.order << " at beta=" << beta0
              << " (coefficient of m" << e.mu << ")\n";
    return 1;
  }
}

json read_input(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("--input: cannot open " + path);
  return json::parse(in);
}

int cmd_ideal_basis(const Flags& f) {
  auto [k, r] = need_kr(f);
  const auto basis = build_basis(k, r, need_n(f), need_dmax(f), f.workers);
  json elements = json::array();
  std::ostringstream text;
  for (const auto& [d, list] : basis.elements()) {
    text << d << ":";
    for (const auto& e : list) {
      elements.push_back(e);
      text << " " << e.lambda;
    }
    text << "\n";
  }
  emit(f,
       {{"k", k}, {"r", r}, {"n", basis.n()}, {"dmax", basis.dmax()}, {"beta", basis.beta0()},
        {"character", basis.character()}, {"elements", elements}},
       text.str());
  return 0;
}

int cmd_ideal_member(const Flags& f) {
  auto [k, r] = need_kr(f);
  const int n = need_n(f);
  MSymPoly<BigRat> p;
  try {
    p = read_input(f.input).get<MSymPoly<BigRat>>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("--input: ") + e.what());
  }
  if (p.nvars() != n) throw UsageError("input has n=" + std::to_string(p.nvars()) + " but --n is " + std::to_string(n));
  int dmax = f.dmax ? *f.dmax : 0;
  if (!f.dmax)
    for (int d : p.degrees()) dmax = std::max(dmax, d);
  const auto basis = build_basis(k, r, n, dmax, f.workers);
  const auto cert = reduce_membership(p, basis);
  json out = {{"member", cert.member}};
  std::ostringstream text;
  text << (cert.member ? "member\n" : "not a member\n");
  if (cert.member) {
    json combo = json::array();
    for (auto it = cert.combination.rbegin(); it != cert.combination.rend(); ++it) {
      combo.push_back({{"lambda", it->first}, {"coeff", it->second}});
      text << "  " << it->second << " * P" << it->first << "\n";
    }
    out["combination"] = combo;
  } else {
    out["obstruction"] = *cert.obstruction;
    text << "  obstruction " << *cert.obstruction << "\n";
  }
  emit(f, out, text.str());
  return 0;
}

int cmd_character(const Flags& f) {
  auto [k, r] = need_kr(f);
  const auto ch = enumerate_admissible(k, r, need_n(f), need_dmax(f)).character();
  std::ostringstream text;
  for (std::size_t d = 0; d < ch.size(); ++d) text << (d ? " " : "") << ch[d];
  text << "\n";
  emit(f, json(ch), text.str());
  return 0;
}

int cmd_principal(const Flags& f) {
  const Partition lambda = need_lambda(f);
  const int n = need_n(f);
  const BetaRatFunc value = principal_specialization(lambda, n);
  json out = {{"lambda", lambda}, {"n", n}, {"value", value}, {"text", value.to_string()}};
  std::string text = "P" + lambda.to_string() + "(1^" + std::to_string(n) + ") = " + value.to_string() + "\n";
  std::optional<BigRat> at;
  if (!f.beta.empty()) at = parse_beta(f.beta);
  if (f.k || f.r) {
    auto [k, r] = need_kr(f);
    at = beta_kr(k, r);
  }
  if (at) {
    try {
      const BigRat v = value.evaluate_at(*at);
      out["beta"] = *at;
      out["at_beta"] = v;
      text += "  at beta=" + at->to_string() + ": " + v.to_string() + "\n";
    } catch (const PoleError& e) {
      std::cerr << "error: pole of order " << e.order << " at beta=" << *at << "\n";
      return 1;
    }
  }
  emit(f, out, text);
  return 0;
}

int cmd_verify(const std::string& suite, const Flags& f) {
  Report rep;
  if (suite == "commutators") {
    rep = verify_commutators(f.n ? need_n(f) : 3, f.degree, f.trials, f.seed);
  } else if (suite == "pieri") {
    if (f.k || f.r) {
      auto [k, r] = need_kr(f);
      rep = verify_pieri_specialization(k, r, need_n(f), need_dmax(f), f.workers);
    } else {
      rep = verify_pieri(need_n(f), need_dmax(f), f.workers);
    }
  } else if (suite == "lassalle") {
    rep = verify_lassalle(need_n(f), need_dmax(f), f.workers);
  } else if (suite == "closure") {
    auto [k, r] = need_kr(f);
    rep = verify_closure(k, r, need_n(f), need_dmax(f), f.mmax, f.tmax, f.workers);
  } else if (suite == "restriction") {
    auto [k, r] = need_kr(f);
    const int n = need_n(f);
    if (n < 2) throw UsageError("--n must be >= 2 for restriction");
    rep = verify_restriction(k, r, n, need_dmax(f), f.jmax, f.workers);
  } else if (suite == "regularity") {
    auto [k, r] = need_kr(f);
    const int n = need_n(f);
    const int dmax = need_dmax(f);
    rep = verify_regularity(k, r, n, dmax, f.workers);
    rep.merge(verify_nonvanishing(k, r, n, dmax), "nonvanishing/");
  } else if (suite == "wheel") {
    const int k = need(f.k, "--k", "an integer >= 1");
    if (k < 1) throw UsageError("--k must be >= 1");
    if (f.r && *f.r != 2) throw UsageError("the wheel suite fixes r = 2");
    rep = verify_wheel_theorem(k, need_n(f), need_dmax(f), f.workers);
  } else if (suite == "phi3") {
    const int r = need(f.r, "--r", "an integer >= 2 with gcd(3, r-1) = 1");
    try {
      validate_kr(2, r);
    } catch (const InvalidParameters& e) {
      throw UsageError(std::string("--r: ") + e.what());
    }
    rep = verify_phi3(r);
  } else if (suite == "sekiguchi") {
    rep = verify_sekiguchi_suite(need_n(f), need_dmax(f), f.workers);
  } else {
    throw UsageError("unknown suite " + suite);
  }
  if (f.format == "json")
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.to_text();
  return rep.all_pass() ? 0 : 1;
}

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--k", f.k, "cluster size k >= 1");
  app->add_option("--r", f.r, "exclusion r >= 2, gcd(k+1, r-1) = 1");
  app->add_option("--n", f.n, "number of variables");
  app->add_option("--dmax", f.dmax, "maximal degree");
  app->add_option("--workers", f.workers, "worker threads")->check(CLI::PositiveNumber);
  app->add_option("--format", f.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app->add_option("--cache-dir", f.cache_dir, "directory persisting computed Jack polynomials");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jack polynomials at beta = -(r-1)/(k+1) and the ideals they span"};
  app.require_subcommand(1);
  Flags f;

  auto* partitions = app.add_subcommand("partitions", "enumerate partitions or test admissibility");
  add_common(partitions, f);
  partitions->add_option("--lambda", f.lambda, "partition to test, e.g. 4,2");

  auto* jack = app.add_subcommand("jack", "Jack polynomial, symbolic or specialized");
  add_common(jack, f);
  jack->add_option("--lambda", f.lambda, "partition, e.g. 4,2");
  jack->add_option("--beta", f.beta, "specialize at beta = p/q");
  jack->add_flag("--symbolic", f.symbolic, "coefficients in Q(beta) (default)");

  auto* ideal = app.add_subcommand("ideal", "ideal basis and membership");
  ideal->require_subcommand(1);
  auto* basis = ideal->add_subcommand("basis", "specialized Jack basis up to dmax");
  add_common(basis, f);
  auto* member = ideal->add_subcommand("member", "decide membership of a symmetric polynomial");
  add_common(member, f);
  member->add_option("--input", f.input, "polynomial JSON file, - for stdin");

  auto* character = app.add_subcommand("character", "admissible partition counts by degree");
  add_common(character, f);

  auto* principal = app.add_subcommand("specialize-principal", "P_lambda(1,...,1) by the product formula");
  add_common(principal, f);
  principal->add_option("--lambda", f.lambda, "partition");
  principal->add_option("--beta", f.beta, "also evaluate at beta = p/q");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  std::string suite;
  for (const char* name : {"commutators", "pieri", "lassalle", "closure", "restriction", "regularity", "wheel", "phi3",
                           "sekiguchi"}) {
    auto* sub = verify->add_subcommand(name, std::string("verification suite ") + name);
    add_common(sub, f);
    sub->add_option("--mmax", f.mmax, "largest m for p_m, l_m, w_m");
    sub->add_option("--tmax", f.tmax, "largest t for w^(t)_m");
    sub->add_option("--jmax", f.jmax, "largest derivative order");
    sub->add_option("--trials", f.trials, "random trials per relation");
    sub->add_option("--degree", f.degree, "degree bound of random inputs");
    sub->add_option("--seed", f.seed, "seed of the random inputs");
    sub->callback([&suite, sub] { suite = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (auto* opt : {partitions, jack, principal})
    if (opt->parsed() && opt->count("--lambda")) f.has_lambda = true;

  try {
    if (!f.cache_dir.empty()) {
      std::filesystem::create_directories(f.cache_dir);
      jack_store().set_cache_dir(std::filesystem::path(f.cache_dir));
    }
    if (partitions->parsed()) return cmd_partitions(f);
    if (jack->parsed()) return cmd_jack(f);
    if (basis->parsed()) return cmd_ideal_basis(f);
    if (member->parsed()) return cmd_ideal_member(f);
    if (character->parsed()) return cmd_character(f);
    if (principal->parsed()) return cmd_principal(f);
    if (verify->parsed()) return cmd_verify(suite, f);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidParameters& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DegreeOverflow& e) {
    std::cerr << "usage error: " << e.what() << " (raise --dmax)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
