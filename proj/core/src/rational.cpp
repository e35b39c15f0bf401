#include "hochlat/rational.hpp"

#include "hochlat/errors.hpp"

namespace hochlat {

Rational parse_rational(const std::string& text) {
  mpq_t q;
  mpq_init(q);
  if (text.empty() || mpq_set_str(q, text.c_str(), 10) != 0) {
    mpq_clear(q);
    throw IoError("malformed rational '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(q)) == 0) {
    mpq_clear(q);
    throw IoError("zero denominator in rational '" + text + "'");
  }
  mpq_canonicalize(q);
  Rational result(q);
  mpq_clear(q);
  return result;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

}  // namespace hochlat
