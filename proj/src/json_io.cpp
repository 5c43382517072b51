#include "jackideal/json_io.hpp"

namespace jackideal {

void to_json(json& j, const BigRat& r) { j = {{"num", r.num().get_str()}, {"den", r.den().get_str()}}; }

void from_json(const json& j, BigRat& r) {
  if (j.is_number_integer()) {
    r = BigRat(j.get<long>());
  } else if (j.is_string()) {
    r = BigRat::parse(j.get<std::string>());
  } else {
    r = BigRat(mpz_class(j.at("num").get<std::string>(), 10), mpz_class(j.at("den").get<std::string>(), 10));
  }
}

void to_json(json& j, const BetaPoly& p) {
  j = json::array();
  for (const auto& c : p.coeffs()) j.push_back(c);
}

void from_json(const json& j, BetaPoly& p) { p = BetaPoly(j.get<std::vector<BigRat>>()); }

void to_json(json& j, const BetaRatFunc& f) { j = {{"num", f.num()}, {"den", f.den()}}; }

void from_json(const json& j, BetaRatFunc& f) {
  if (j.is_object() && j.contains("num") && j.at("num").is_array()) {
    f = BetaRatFunc(j.at("num").get<BetaPoly>(), j.at("den").get<BetaPoly>());
  } else {
    f = BetaRatFunc(j.get<BigRat>());
  }
}

void to_json(json& j, const Partition& p) { j = p.parts(); }

void from_json(const json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

json to_json(const AdmissibleFamily& fam) {
  json parts = json::object();
  for (const auto& [d, list] : fam.by_degree) parts[std::to_string(d)] = list;
  return {{"k", fam.k}, {"r", fam.r}, {"n", fam.n}, {"character", fam.character()}, {"partitions", parts}};
}

void to_json(json& j, const SpecializedJack& s) {
  j = {{"lambda", s.lambda}, {"k", s.k}, {"r", s.r}, {"beta", beta_kr(s.k, s.r)}, {"poly", s.poly}};
}

void from_json(const json& j, SpecializedJack& s) {
  s.lambda = j.at("lambda").get<Partition>();
  s.k = j.at("k").get<int>();
  s.r = j.at("r").get<int>();
  s.poly = j.at("poly").get<MSymPoly<BigRat>>();
  s.n = s.poly.nvars();
}

void to_json(json& j, const JackPoly& p) { j = {{"lambda", p.lambda}, {"poly", p.poly}}; }

void from_json(const json& j, JackPoly& p) {
  p.lambda = j.at("lambda").get<Partition>();
  p.poly = j.at("poly").get<MSymPoly<BetaRatFunc>>();
  p.n = p.poly.nvars();
}

}  // namespace jackideal
