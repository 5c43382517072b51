#include "jackideal/suites.hpp"

#include <functional>

#include "jackideal/errors.hpp"
#include "jackideal/ideal.hpp"
#include "jackideal/jack.hpp"
#include "jackideal/json_io.hpp"
#include "jackideal/operators.hpp"
#include "jackideal/parallel.hpp"

namespace jackideal {

namespace {

using Cases = std::vector<Report::Case>;

/// Runs one case generator per index and appends the results in index order.
/// An exception inside a generator becomes a failing case.
void collect(Report& rep, std::size_t count, int workers, const std::function<Cases(std::size_t)>& gen,
             const std::function<std::string(std::size_t)>& label) {
  std::vector<Cases> out(count);
  parallel_for(count, workers, [&](std::size_t i) {
    try {
      out[i] = gen(i);
    } catch (const std::exception& e) {
      out[i] = {{label(i), false, {{"error", e.what()}}}};
    }
  });
  for (auto& list : out)
    for (auto& c : list) rep.cases.push_back(std::move(c));
}

std::vector<Partition> partitions_upto(int dmax, int n) {
  std::vector<Partition> out;
  for (int d = 0; d <= dmax; ++d)
    for (auto& p : partitions_of(d, static_cast<std::size_t>(n))) out.push_back(std::move(p));
  return out;
}

void warm(const std::vector<Partition>& parts, int n, int workers) {
  std::vector<std::pair<Partition, int>> keys;
  for (const auto& p : parts) keys.emplace_back(p, n);
  precompute_jacks(keys, workers);
}

const MSymPoly<BetaRatFunc>& jack_of(const Partition& lambda, int n) { return jack_store().get(lambda, n)->poly; }

std::size_t differing_terms(const MSymPoly<BetaRatFunc>& a, const MSymPoly<BetaRatFunc>& b) { return (a - b).size(); }

std::vector<const SpecializedJack*> all_elements(const IdealBasis& basis) {
  std::vector<const SpecializedJack*> out;
  for (const auto& [d, list] : basis.elements())
    for (const auto& e : list) out.push_back(&e);
  return out;
}

json certificate_json(const MembershipCertificate& cert) {
  json j = {{"member", cert.member}};
  if (cert.obstruction) j["obstruction"] = *cert.obstruction;
  return j;
}

}  // namespace

Report verify_sekiguchi_suite(int n, int dmax, int workers) {
  Report rep;
  rep.suite = "sekiguchi";
  rep.params = {{"n", n}, {"dmax", dmax}};
  const auto parts = partitions_upto(dmax, n);
  warm(parts, n, workers);
  collect(
      rep, parts.size(), workers,
      [&](std::size_t i) {
        const Partition& lambda = parts[i];
        const json detail = {{"lambda", lambda}, {"n", n}};
        Cases out;
        out.push_back({"sekiguchi:" + lambda.to_string(), verify_sekiguchi(lambda, n), detail});
        out.push_back({"hamiltonian:" + lambda.to_string(), verify_hamiltonian_eigen(lambda, n), detail});
        const BetaPoly c = c_lambda(lambda);
        bool cleared = true;
        for (const auto& [mu, u] : jack_of(lambda, n).terms())
          cleared = cleared && divmod(c * u.num(), u.den()).second.is_zero();
        out.push_back({"cleared:" + lambda.to_string(), cleared, detail});
        return out;
      },
      [&](std::size_t i) { return "lambda:" + parts[i].to_string(); });
  return rep;
}

Report verify_pieri(int n, int dmax, int workers) {
  Report rep;
  rep.suite = "pieri";
  rep.params = {{"n", n}, {"dmax", dmax}};
  const auto parts = partitions_upto(dmax, n);
  warm(partitions_upto(dmax + 1, n), n, workers);
  collect(
      rep, parts.size(), workers,
      [&](std::size_t i) {
        const Partition& mu = parts[i];
        const auto lhs = multiply(power_sum<BetaRatFunc>(1, n), jack_of(mu, n));
        MSymPoly<BetaRatFunc> rhs(n);
        for (const auto& lambda : node_moves(mu, n).addable)
          rhs += jack_of(lambda, n) * pieri_coefficient(mu, changed_row(mu, lambda));
        return Cases{{"mu:" + mu.to_string(), lhs == rhs,
                      {{"mu", mu}, {"n", n}, {"differing_terms", differing_terms(lhs, rhs)}}}};
      },
      [&](std::size_t i) { return "mu:" + parts[i].to_string(); });
  return rep;
}

Report verify_lassalle(int n, int dmax, int workers) {
  Report rep;
  rep.suite = "lassalle";
  rep.params = {{"n", n}, {"dmax", dmax}};
  const auto parts = partitions_upto(dmax, n);
  warm(partitions_upto(dmax + 1, n), n, workers);
  collect(
      rep, parts.size(), workers,
      [&](std::size_t i) {
        const Partition& mu = parts[i];
        const auto& pm = jack_of(mu, n);
        const auto moves = node_moves(mu, n);
        Cases out;

        const auto up = apply_l(pm, 1);
        MSymPoly<BetaRatFunc> up_rhs(n);
        for (const auto& lambda : moves.addable)
          up_rhs += jack_of(lambda, n) * lassalle_up(mu, changed_row(mu, lambda));
        out.push_back({"up:" + mu.to_string(), up == up_rhs,
                       {{"mu", mu}, {"n", n}, {"differing_terms", differing_terms(up, up_rhs)}}});

        const auto down = apply_l(pm, -1);
        MSymPoly<BetaRatFunc> down_rhs(n);
        for (const auto& lambda : moves.removable)
          down_rhs += jack_of(lambda, n) * lassalle_down(mu, changed_row(mu, lambda), n);
        out.push_back({"down:" + mu.to_string(), down == down_rhs,
                       {{"mu", mu}, {"n", n}, {"differing_terms", differing_terms(down, down_rhs)}}});
        return out;
      },
      [&](std::size_t i) { return "mu:" + parts[i].to_string(); });
  return rep;
}

Report verify_pieri_specialization(int k, int r, int n, int dmax, int workers) {
  Report rep;
  rep.suite = "pieri-specialization";
  rep.params = {{"k", k}, {"r", r}, {"n", n}, {"dmax", dmax}};
  const IdealBasis basis = build_basis(k, r, n, dmax, workers);
  const BigRat b0 = basis.beta0();
  std::vector<const SpecializedJack*> sources;
  for (const auto* e : all_elements(basis))
    if (e->lambda.weight() < dmax) sources.push_back(e);

  collect(
      rep, sources.size(), workers,
      [&](std::size_t s) {
        const Partition& mu = sources[s]->lambda;
        Cases out;
        MSymPoly<BigRat> rhs(n);
        std::map<Partition, BigRat> expected;
        for (const auto& lambda : node_moves(mu, n).addable) {
          const int row = changed_row(mu, lambda);
          const auto factors = pieri_factors(mu, row);
          const BetaRatFunc psi = product(factors);
          const int order = psi.pole_order(b0).value_or(-1);
          const bool admissible = is_admissible(lambda, k, r, static_cast<std::size_t>(n));
          json detail = {{"mu", mu}, {"lambda", lambda}, {"row", row}, {"admissible", admissible},
                         {"pole_order", order}, {"psi", psi.to_string()}};
          bool pass;
          if (admissible) {
            pass = order <= 0;
            if (pass) {
              const BigRat value = psi.evaluate_at(b0);
              rhs += basis.find(lambda)->poly * value;
              if (!value.is_zero()) expected[lambda] = value;
            }
          } else {
            // the violated gap sits k rows above the new node
            const int i = row + 1 - k;
            const std::string label = "second(i=" + std::to_string(i) + ")";
            bool factor_zero = false;
            for (const auto& f : factors)
              if (f.label == label) factor_zero = f.num(b0).is_zero();
            const bool gap = i >= 1 && mu[i - 1] == mu[row] + r;
            detail["vanishing_factor"] = label;
            detail["factor_zero"] = factor_zero;
            detail["gap_equals_r"] = gap;
            pass = order < 0 && factor_zero && gap;
          }
          out.push_back({"psi:" + mu.to_string() + "->" + lambda.to_string(), pass, std::move(detail)});
        }
        const auto lhs = multiply(power_sum<BigRat>(1, n), sources[s]->poly);
        out.push_back({"identity:" + mu.to_string(), lhs == rhs, {{"mu", mu}, {"differing_terms", (lhs - rhs).size()}}});
        const auto cert = reduce_membership(lhs, basis);
        json cdetail = certificate_json(cert);
        cdetail["mu"] = mu;
        cdetail["matches_pieri"] = cert.combination == expected;
        out.push_back({"membership:" + mu.to_string(), cert.member && cert.combination == expected, std::move(cdetail)});
        return out;
      },
      [&](std::size_t s) { return "mu:" + sources[s]->lambda.to_string(); });
  return rep;
}

Report verify_closure(int k, int r, int n, int dmax, int mmax, int tmax, int workers) {
  Report rep;
  rep.suite = "closure";
  rep.params = {{"k", k}, {"r", r}, {"n", n}, {"dmax", dmax}, {"mmax", mmax}, {"tmax", tmax}};
  const IdealBasis basis = build_basis(k, r, n, dmax, workers);
  std::vector<OperatorTag> ops;
  for (int m = 1; m <= mmax; ++m) ops.push_back(OperatorTag::power_sum(m));
  for (int m = -1; m <= mmax; ++m) ops.push_back(OperatorTag::l(m));
  for (int t = 2; t <= tmax; ++t)
    for (int m = -t + 1; m <= mmax; ++m) ops.push_back(OperatorTag::w(t, m));
  const auto elements = all_elements(basis);

  collect(
      rep, elements.size(), workers,
      [&](std::size_t s) {
        const SpecializedJack& e = *elements[s];
        const int d = e.lambda.weight();
        Cases out;
        for (const auto& op : ops) {
          if (d + op.degree_shift() > dmax) continue;
          const auto image = apply(op, e.poly, basis.beta0());
          const auto cert = reduce_membership(image, basis);
          json detail = certificate_json(cert);
          detail["lambda"] = e.lambda;
          detail["op"] = op.to_string();
          out.push_back({op.to_string() + ":" + e.lambda.to_string(), cert.member, std::move(detail)});
        }
        return out;
      },
      [&](std::size_t s) { return "lambda:" + elements[s]->lambda.to_string(); });
  return rep;
}

Report verify_restriction(int k, int r, int n, int dmax, int jmax, int workers) {
  if (n < 2) throw InvalidParameters("restriction requires n >= 2");
  Report rep;
  rep.suite = "restriction";
  rep.params = {{"k", k}, {"r", r}, {"n", n}, {"dmax", dmax}, {"jmax", jmax}};
  const IdealBasis basis = build_basis(k, r, n, dmax, workers);
  const IdealBasis lower = build_basis(k, r, n - 1, dmax, workers);
  const auto elements = all_elements(basis);

  collect(
      rep, elements.size(), workers,
      [&](std::size_t s) {
        const SpecializedJack& e = *elements[s];
        Cases out;
        auto ex = msym_to_expanded(e.poly);
        for (int j = 0; j <= jmax && j <= e.lambda.weight(); ++j) {
          if (j > 0) ex = partial(ex, n - 1);
          ExpandedPoly<BigRat> restricted(n - 1);
          for (const auto& [alpha, c] : ex.terms())
            if (alpha[n - 1] == 0) restricted.add_term(Exponent(alpha.begin(), alpha.end() - 1), c);
          const auto cert = reduce_membership(expanded_to_msym(restricted), lower);
          json detail = certificate_json(cert);
          detail["lambda"] = e.lambda;
          detail["j"] = j;
          out.push_back({"j=" + std::to_string(j) + ":" + e.lambda.to_string(), cert.member, std::move(detail)});
        }
        return out;
      },
      [&](std::size_t s) { return "lambda:" + elements[s]->lambda.to_string(); });
  return rep;
}

Report verify_regularity(int k, int r, int n, int dmax, int workers) {
  Report rep;
  rep.suite = "regularity";
  rep.params = {{"k", k}, {"r", r}, {"n", n}, {"dmax", dmax}};
  const BigRat b0 = beta_kr(k, r);
  const auto fam = enumerate_admissible(k, r, n, dmax);
  std::vector<Partition> sources;
  for (const auto& [d, list] : fam.by_degree) sources.insert(sources.end(), list.begin(), list.end());
  std::vector<Partition> needed = sources;
  for (const auto& mu : sources) {
    const auto moves = node_moves(mu, n);
    needed.insert(needed.end(), moves.addable.begin(), moves.addable.end());
    needed.insert(needed.end(), moves.removable.begin(), moves.removable.end());
  }
  warm(needed, n, workers);

  collect(
      rep, sources.size(), workers,
      [&](std::size_t s) {
        const Partition& mu = sources[s];
        Cases out;
        const int own = pole_profile(mu, n, b0);
        out.push_back({"admissible:" + mu.to_string(), own == 0, {{"lambda", mu}, {"pole_profile", own}}});
        const auto moves = node_moves(mu, n);
        auto neighbor = [&](const Partition& lambda, const char* kind) {
          const int order = pole_profile(lambda, n, b0);
          const bool admissible = is_admissible(lambda, k, r, static_cast<std::size_t>(n));
          json detail = {{"mu", mu}, {"lambda", lambda}, {"move", kind}, {"admissible", admissible}, {"pole_profile", order}};
          bool pass = order == 0;
          if (!admissible) {
            const int zeros = c_lambda(lambda).root_multiplicity(b0);
            detail["c_lambda_zero_order"] = zeros;
            pass = pass && zeros == 1;
          }
          out.push_back({std::string(kind) + ":" + mu.to_string() + "->" + lambda.to_string(), pass, std::move(detail)});
        };
        for (const auto& lambda : moves.addable) neighbor(lambda, "add");
        for (const auto& lambda : moves.removable) neighbor(lambda, "remove");
        return out;
      },
      [&](std::size_t s) { return "mu:" + sources[s].to_string(); });
  return rep;
}

Report verify_nonvanishing(int k, int r, int n, int dmax) {
  Report rep;
  rep.suite = "nonvanishing";
  rep.params = {{"k", k}, {"r", r}, {"n", n}, {"dmax", dmax}};
  for (const auto& [d, list] : enumerate_admissible(k, r, n, dmax).by_degree)
    for (const auto& lambda : list) rep.add("lambda:" + lambda.to_string(), check_nonvanishing(lambda, k, r, n), {{"lambda", lambda}});
  return rep;
}

Report verify_wheel_theorem(int k, int n, int dmax, int workers) {
  constexpr int r = 2;
  Report rep;
  rep.suite = "wheel";
  rep.params = {{"k", k}, {"r", r}, {"n", n}, {"dmax", dmax}};
  const IdealBasis basis = build_basis(k, r, n, dmax, workers);
  const auto elements = all_elements(basis);

  collect(
      rep, elements.size(), workers,
      [&](std::size_t s) {
        const SpecializedJack& e = *elements[s];
        // with n ≤ k there is no (k+1)-fold coincidence to impose
        const bool vanishes = n <= k || substitute_coincident(e.poly, k + 1).is_zero();
        return Cases{{"vanish:" + e.lambda.to_string(), vanishes, {{"lambda", e.lambda}}}};
      },
      [&](std::size_t s) { return "vanish:" + elements[s]->lambda.to_string(); });

  const auto strict = basis.character();
  const bool empty_strict = is_admissible(Partition{}, k, r, static_cast<std::size_t>(n));
  std::vector<std::size_t> dims(static_cast<std::size_t>(dmax) + 1);
  parallel_for(dims.size(), workers, [&](std::size_t d) { dims[d] = wheel_dimension(k, n, static_cast<int>(d)); });

  bool strict_all = true;
  bool lenient_all = true;
  for (int d = 0; d <= dmax; ++d) {
    const std::size_t lenient = strict[d] + ((d == 0 && !empty_strict) ? 1 : 0);
    strict_all = strict_all && strict[d] == dims[d];
    lenient_all = lenient_all && lenient == dims[d];
    rep.add("dimension:d=" + std::to_string(d), strict[d] == dims[d],
            {{"d", d}, {"wheel_dimension", dims[d]}, {"admissible", strict[d]}, {"admissible_empty_always", lenient}});
  }
  rep.notes = {{"padding", "zero-padded to n parts"},
               {"strict_reading_matches", strict_all},
               {"empty_always_reading_matches", lenient_all},
               {"wheel_character", dims},
               {"admissible_character", strict}};
  return rep;
}

Report verify_phi3(int r) {
  constexpr int k = 2;
  constexpr int n = 3;
  Report rep;
  rep.suite = "phi3";
  rep.params = {{"k", k}, {"r", r}, {"n", n}};
  const Partition lambda{r};
  const BigRat b0 = beta_kr(k, r);
  const auto p = specialize(lambda, n, k, r).poly;
  const json detail = {{"lambda", lambda}, {"beta", b0}};
  rep.add("l0", apply_l(p, 0) == p * BigRat(r), detail);
  const BigRat eps = cs_eigenvalue(lambda, n)(b0);
  json hdetail = detail;
  hdetail["eigenvalue"] = eps;
  rep.add("hamiltonian", apply_hamiltonian(p, b0) == p * eps, hdetail);
  rep.add("l_minus1", apply_l(p, -1).is_zero(), detail);
  return rep;
}

Report verify_principal(int n, int dmax, int workers) {
  Report rep;
  rep.suite = "principal";
  rep.params = {{"n", n}, {"dmax", dmax}};
  const auto parts = partitions_upto(dmax, n);
  warm(parts, n, workers);
  const std::vector<BigRat> ones(static_cast<std::size_t>(n), BigRat(1));
  collect(
      rep, parts.size(), workers,
      [&](std::size_t i) {
        const Partition& lambda = parts[i];
        const BetaRatFunc direct = evaluate(jack_of(lambda, n), std::span<const BigRat>(ones));
        const BetaRatFunc formula = principal_specialization(lambda, n);
        return Cases{{"lambda:" + lambda.to_string(), direct == formula,
                      {{"lambda", lambda}, {"direct", direct.to_string()}, {"formula", formula.to_string()}}}};
      },
      [&](std::size_t i) { return "lambda:" + parts[i].to_string(); });
  return rep;
}

Report verify_principal_vanishing(int k, int r, int dmax) {
  const int n = k + 1;
  Report rep;
  rep.suite = "principal-vanishing";
  rep.params = {{"k", k}, {"r", r}, {"n", n}, {"dmax", dmax}};
  const BigRat b0 = beta_kr(k, r);
  const std::vector<BigRat> ones(static_cast<std::size_t>(n), BigRat(1));
  for (const auto& [d, list] : enumerate_admissible(k, r, n, dmax).by_degree) {
    for (const auto& lambda : list) {
      const BetaRatFunc value = principal_specialization(lambda, n);
      const auto order = value.pole_order(b0);
      const bool zero = !order || *order < 0;
      const bool direct = evaluate(specialize(lambda, n, k, r).poly, std::span<const BigRat>(ones)).is_zero();
      rep.add("lambda:" + lambda.to_string(), zero && direct,
              {{"lambda", lambda}, {"formula_zero", zero}, {"specialized_zero", direct}});
    }
  }
  return rep;
}

}  // namespace jackideal
