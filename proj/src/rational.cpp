#include "hk/rational.hpp"

#include <limits>

#include "hk/error.hpp"

namespace hk {

Rational make_rational(long long num, long long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::SchemaError, "malformed rational '" + s + "'");
  }
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

long long to_int64(const Rational& r) {
  if (!is_integer(r)) throw Error(ErrorCode::NotRational, "expected an integer, got " + to_string(r));
  const Integer& n = r.get_num();
  if (!n.fits_slong_p()) throw Error(ErrorCode::NotRational, "integer out of range: " + to_string(r));
  return n.get_si();
}

}  // namespace hk
