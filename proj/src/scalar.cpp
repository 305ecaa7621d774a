#include "area/scalar.hpp"

#include "area/errors.hpp"

namespace area {

std::string to_string(const Scalar& value) { return value.get_str(); }

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty numeric literal");
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Scalar out;
    if (out.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "bad numeric literal '" + s + "'");
    out.canonicalize();
    return out;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::string denom = "1" + std::string(s.size() - dot - 1, '0');
  Scalar out;
  if (digits.empty() || out.set_str(digits + "/" + denom, 10) != 0) {
    throw Error(ErrorKind::Parse, "bad numeric literal '" + s + "'");
  }
  out.canonicalize();
  return out;
}

int sign(const Scalar& value) { return sgn(value); }

bool exact_sqrt(const Scalar& value, Scalar& root) {
  if (sgn(value) < 0) return false;
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Scalar(rn, rd);
  root.canonicalize();
  return true;
}

}  // namespace area
