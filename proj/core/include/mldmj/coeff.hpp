#pragma once

#include <gmpxx.h>

#include <string>

#include "mldmj/errors.hpp"

namespace mldmj {

bool is_prime(unsigned long n);

/// Exact field element: a rational when the characteristic is 0, a canonical
/// residue in [0, p) when it is a prime p.
class Coeff {
 public:
  Coeff() : char_(0), v_(0) {}
  Coeff(long n, unsigned long characteristic) : char_(characteristic), v_(n) {
    canonicalize();
  }
  Coeff(mpq_class q, unsigned long characteristic)
      : char_(characteristic), v_(std::move(q)) {
    canonicalize();
  }

  static Coeff zero(unsigned long characteristic) { return Coeff(0, characteristic); }
  static Coeff one(unsigned long characteristic) { return Coeff(1, characteristic); }

  unsigned long characteristic() const { return char_; }
  const mpq_class& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Coeff operator-() const;
  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;
  Coeff inverse() const;

  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

  bool operator==(const Coeff& o) const {
    check_char(o);
    return v_ == o.v_;
  }
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  /// p-th root in characteristic p (identity map on F_p). Errors in char 0.
  Coeff pth_root() const;

  std::string str() const;

 private:
  void canonicalize();
  void check_char(const Coeff& o) const {
    if (char_ != o.char_)
      throw CharacteristicMismatch("coefficients of different characteristic");
  }

  unsigned long char_;  // 0 or prime
  mpq_class v_;
};

}  // namespace mldmj
