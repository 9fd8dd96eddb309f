#include "minvar/field.hpp"

namespace minvar {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldDesc FieldDesc::prime(std::uint32_t p) {
  if (!is_prime(p)) throw SpecError("field modulus " + std::to_string(p) + " is not prime");
  return {Kind::Prime, p};
}

FieldDesc FieldDesc::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rational();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad field spec '" + text + "'");
    unsigned long p = std::stoul(digits);
    if (p > 0xffffffffUL) throw ParseError("field modulus too large");
    return prime(static_cast<std::uint32_t>(p));
  }
  throw ParseError("bad field spec '" + text + "' (expected q or fp:P)");
}

std::string FieldDesc::to_string() const {
  return kind == Kind::Rational ? "q" : "fp:" + std::to_string(p);
}

QField::Elem QField::parse_coeff(const std::string& num, const std::string& den) const {
  mpq_class q;
  if (den.empty()) {
    q = mpq_class(mpz_class(num));
  } else {
    mpz_class d(den);
    if (sgn(d) == 0) throw ParseError("zero denominator");
    q = mpq_class(mpz_class(num), d);
    q.canonicalize();
  }
  return q;
}

FpField::FpField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw SpecError("field modulus " + std::to_string(p) + " is not prime");
}

FpField::Elem FpField::inv(Elem a) const {
  if (a == 0) throw ValueError("inverse of zero");
  // extended Euclid on (a, p)
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

FpField::Elem FpField::parse_coeff(const std::string& num, const std::string& den) const {
  mpz_class n(num);
  Elem a = static_cast<Elem>(mpz_class(n % p_).get_ui());
  if (den.empty()) return a;
  mpz_class d(den);
  Elem b = static_cast<Elem>(mpz_class(d % p_).get_ui());
  if (b == 0) throw ParseError("denominator divisible by field characteristic");
  return div(a, b);
}

}  // namespace minvar
