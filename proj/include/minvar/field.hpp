// Coefficient fields: the rationals via GMP, and prime fields with
// machine-word residues.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "minvar/errors.hpp"

namespace minvar {

bool is_prime(std::uint64_t n);

// Runtime description of a coefficient field, e.g. from the CLI ("q",
// "fp:32003").
struct FieldDesc {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Rational;
  std::uint32_t p = 0;

  static FieldDesc rational() { return {Kind::Rational, 0}; }
  static FieldDesc prime(std::uint32_t p);
  static FieldDesc parse(const std::string& text);
  std::uint32_t characteristic() const { return kind == Kind::Prime ? p : 0; }
  std::string to_string() const;
  bool operator==(const FieldDesc&) const = default;
};

// Exact rationals, always reduced with positive denominator (GMP canonical
// form).
class QField {
 public:
  using Elem = mpq_class;

  FieldDesc desc() const { return FieldDesc::rational(); }
  std::uint32_t characteristic() const { return 0; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_long(long n) const { return Elem(n); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return Elem(1) / a; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  bool negative(const Elem& a) const { return sgn(a) < 0; }

  // num and den are decimal digit strings; den empty means 1.
  Elem parse_coeff(const std::string& num, const std::string& den) const;
  std::string to_string(const Elem& a) const { return a.get_str(); }

  bool operator==(const QField&) const { return true; }
};

// Z/pZ for a word-sized prime p; elements are residues 0..p-1.
class FpField {
 public:
  using Elem = std::uint32_t;

  FpField() : p_(32003) {}
  explicit FpField(std::uint32_t p);

  FieldDesc desc() const { return FieldDesc::prime(p_); }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_long(long n) const {
    long r = n % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(std::uint64_t(a) * b % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool equal(Elem a, Elem b) const { return a == b; }
  bool negative(Elem) const { return false; }

  Elem parse_coeff(const std::string& num, const std::string& den) const;
  std::string to_string(Elem a) const { return std::to_string(a); }

  bool operator==(const FpField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace minvar
