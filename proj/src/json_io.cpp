#include "spinwreath/json_io.hpp"

#include "spinwreath/error.hpp"

namespace spinwreath {

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw InputError("malformed integer string");
    return z;
  }
  throw InputError("expected an integer");
}

Json rational_to_json(const Rational& q) {
  return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) {
    if (j.is_string()) {
      Rational q;
      if (q.set_str(j.get<std::string>(), 10) != 0) throw InputError("malformed rational string");
      q.canonicalize();
      return q;
    }
    return Rational(integer_from_json(j));
  }
  if (!j.is_array() || j.size() != 2) throw InputError("rational must be [num, den]");
  Integer num = integer_from_json(j[0]);
  Integer den = integer_from_json(j[1]);
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Json cyc_to_json(const CycScalar& a) {
  Json coeffs = Json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(rational_to_json(c));
  Json j;
  j["N"] = a.order();
  j["coeffs"] = coeffs;
  return j;
}

CycScalar cyc_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return CycScalar(rational_from_json(j));
  if (!j.is_object() || !j.contains("N") || !j.contains("coeffs"))
    throw InputError("cyclotomic number must be an object with N and coeffs");
  if (!j["N"].is_number_integer() || j["N"].get<long>() < 1) throw InputError("cyclotomic order N must be a positive integer");
  int N = j["N"].get<int>();
  if (!j["coeffs"].is_array()) throw InputError("coeffs must be an array");
  std::vector<Rational> c;
  for (const auto& e : j["coeffs"]) c.push_back(rational_from_json(e));
  return CycScalar(N, std::move(c));
}

}  // namespace spinwreath
