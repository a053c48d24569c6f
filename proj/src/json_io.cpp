#include "qident/json_io.hpp"

#include <stdexcept>

namespace qident {

using nlohmann::json;

json to_json(const Partition& p) {
  json arr = json::array();
  for (int v : p.parts()) arr.push_back(v);
  return arr;
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition_from_json: expected array");
  std::vector<int> parts;
  for (const auto& v : j) parts.push_back(v.get<int>());
  return Partition(std::move(parts));
}

json to_json(const TruncatedSeries& s) {
  json coeffs = json::array();
  for (const Rational& c : s.coeffs()) coeffs.push_back(rational_to_string(c));
  return json{{"trunc", s.trunc_order()}, {"coeffs", coeffs}};
}

TruncatedSeries series_from_json(const json& j) {
  int trunc = j.at("trunc").get<int>();
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_string(c.get<std::string>()));
  return TruncatedSeries(trunc, std::move(coeffs));
}

json to_json(const FqPoly& f) {
  json coeffs = json::array();
  for (long c : f.coeffs()) coeffs.push_back(c);
  return json{{"q", f.q()}, {"coeffs", coeffs}};
}

FqPoly fqpoly_from_json(const json& j) {
  std::vector<long> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(c.get<long>());
  return FqPoly(j.at("q").get<long>(), std::move(coeffs));
}

json to_json(const ClassData& c) {
  json arr = json::array();
  for (const auto& [phi, lam] : c.entries)
    arr.push_back(json{{"phi", to_json(phi)}, {"lambda", to_json(lam)}});
  return arr;
}

ClassData class_data_from_json(const json& j) {
  ClassData out;
  for (const auto& e : j)
    out.entries.emplace_back(fqpoly_from_json(e.at("phi")), partition_from_json(e.at("lambda")));
  return out;
}

json to_json(const AbstractClassData& c) {
  json arr = json::array();
  for (const auto& b : c.entries)
    arr.push_back(json{{"degree", b.degree}, {"tag", b.tag}, {"lambda", to_json(b.lambda)}});
  return arr;
}

json to_json(const HLPolynomial& p) {
  json terms = json::array();
  for (const auto& [key, coef] : p.terms) {
    json exps = json::array();
    for (int e : key) exps.push_back(e);
    json tc = json::array();
    for (const BigInt& c : coef.coeffs()) tc.push_back(c.get_str());
    terms.push_back(json{{"exponents", exps}, {"t_coeffs", tc}});
  }
  return json{{"n_vars", p.n_vars}, {"terms", terms}};
}

HLPolynomial hl_from_json(const json& j) {
  HLPolynomial out;
  out.n_vars = j.at("n_vars").get<int>();
  for (const auto& term : j.at("terms")) {
    std::vector<int> key;
    for (const auto& e : term.at("exponents")) key.push_back(e.get<int>());
    std::vector<BigInt> coeffs;
    for (const auto& c : term.at("t_coeffs")) coeffs.push_back(BigInt(c.get<std::string>()));
    out.terms.emplace(std::move(key), IntPoly(std::move(coeffs)));
  }
  return out;
}

json to_json(const RationalInterval& iv) {
  return json{{"lo", rational_to_string(iv.lo)}, {"hi", rational_to_string(iv.hi)}};
}

}  // namespace qident
