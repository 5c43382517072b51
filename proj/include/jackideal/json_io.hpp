#ifndef JACKIDEAL_JSON_IO_HPP
#define JACKIDEAL_JSON_IO_HPP

// JSON encodings:
//   BigRat       {"num": "-3", "den": "2"}   (decimal strings)
//   BetaPoly     [c0, c1, ...]                (BigRat objects, low degree first)
//   BetaRatFunc  {"num": [...], "den": [...]}
//   Partition    [4, 2]
//   MSymPoly     {"n": 3, "basis": "msym", "terms": [{"partition": [2,1], "coeff": ...}]}
//   ExpandedPoly {"n": 3, "basis": "expanded", "terms": [{"exponents": [2,1,0], "coeff": ...}]}

#include "json.hpp"

#include "jackideal/beta_poly.hpp"
#include "jackideal/beta_ratfunc.hpp"
#include "jackideal/bigrat.hpp"
#include "jackideal/jack.hpp"
#include "jackideal/partition.hpp"
#include "jackideal/sympoly.hpp"

namespace jackideal {

using nlohmann::json;

void to_json(json& j, const BigRat& r);
/// Also accepts a JSON integer or a "p/q" string.
void from_json(const json& j, BigRat& r);

void to_json(json& j, const BetaPoly& p);
void from_json(const json& j, BetaPoly& p);

void to_json(json& j, const BetaRatFunc& f);
/// Also accepts anything that decodes as a BigRat.
void from_json(const json& j, BetaRatFunc& f);

void to_json(json& j, const Partition& p);
void from_json(const json& j, Partition& p);

json to_json(const AdmissibleFamily& fam);

/// {"lambda": [...], "k": .., "r": .., "beta": BigRat, "poly": MSymPoly}
void to_json(json& j, const SpecializedJack& s);
void from_json(const json& j, SpecializedJack& s);

/// {"lambda": [...], "poly": MSymPoly over ℚ(β)}
void to_json(json& j, const JackPoly& p);
void from_json(const json& j, JackPoly& p);

template <Coefficient C>
void to_json(json& j, const MSymPoly<C>& p) {
  json terms = json::array();
  // highest partitions first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"partition", it->first}, {"coeff", it->second}});
  j = {{"n", p.nvars()}, {"basis", "msym"}, {"terms", std::move(terms)}};
}

template <Coefficient C>
void from_json(const json& j, MSymPoly<C>& p) {
  if (j.value("basis", "msym") != "msym") throw std::invalid_argument("expected basis \"msym\"");
  MSymPoly<C> out(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) out.add_term(t.at("partition").get<Partition>(), t.at("coeff").get<C>());
  p = std::move(out);
}

template <Coefficient C>
void to_json(json& j, const ExpandedPoly<C>& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"exponents", it->first}, {"coeff", it->second}});
  j = {{"n", p.nvars()}, {"basis", "expanded"}, {"terms", std::move(terms)}};
}

template <Coefficient C>
void from_json(const json& j, ExpandedPoly<C>& p) {
  if (j.value("basis", "expanded") != "expanded") throw std::invalid_argument("expected basis \"expanded\"");
  const int n = j.at("n").get<int>();
  ExpandedPoly<C> out(n);
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exponents").get<Exponent>();
    if (static_cast<int>(e.size()) != n) throw std::invalid_argument("exponent vector length differs from n");
    for (int v : e)
      if (v < 0) throw std::invalid_argument("negative exponent");
    out.add_term(e, t.at("coeff").get<C>());
  }
  p = std::move(out);
}

}  // namespace jackideal

#endif  // JACKIDEAL_JSON_IO_HPP
