#include "tlcat/serialize.hpp"

#include <stdexcept>

namespace tlcat {

namespace {

nlohmann::json integer_json(const mpz_class &c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

mpz_class integer_from_json(const nlohmann::json &j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

} // namespace

nlohmann::json to_json(const LaurentPoly &p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto &[e, c] : p.terms()) j[std::to_string(e)] = integer_json(c);
  return j;
}

LaurentPoly laurent_from_json(const nlohmann::json &j) {
  if (!j.is_object()) throw std::invalid_argument("LaurentPoly: expected an object");
  LaurentPoly p;
  for (const auto &[key, value] : j.items()) p += LaurentPoly::monomial(std::stoi(key), integer_from_json(value));
  return p;
}

nlohmann::json to_json(const RationalFn &r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

RationalFn rational_from_json(const nlohmann::json &j) {
  return {laurent_from_json(j.at("num")), laurent_from_json(j.at("den"))};
}

nlohmann::json to_json(const Matching &m) { return m.partners(); }

Matching matching_from_json(const nlohmann::json &j) {
  auto partner = j.get<std::vector<int>>();
  if (partner.size() % 2 != 0) throw std::invalid_argument("Matching: odd number of points");
  const int N = static_cast<int>(partner.size() / 2);
  return Matching(N, N, std::move(partner));
}

nlohmann::json to_json(const Poly &p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto &[m, c] : p.terms()) j.push_back({{"exponents", m}, {"coeff", c.get_str()}});
  return j;
}

Poly poly_from_json(const nlohmann::json &j, int n) {
  Poly p(n);
  for (const auto &term : j) {
    mpq_class c(term.at("coeff").get<std::string>());
    c.canonicalize();
    p.add(term.at("exponents").get<Monomial>(), c);
  }
  return p;
}

} // namespace tlcat
