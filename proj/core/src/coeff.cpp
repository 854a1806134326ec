#include "mldmj/coeff.hpp"

namespace mldmj {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void Coeff::canonicalize() {
  v_.canonicalize();
  if (char_ == 0) return;
  if (!is_prime(char_))
    throw CharacteristicUnsupported("characteristic must be 0 or prime");
  mpz_class p(static_cast<unsigned long>(char_));
  mpz_class num = v_.get_num();
  mpz_class den = v_.get_den();
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw Error("denominator not invertible mod p");
  mpz_class r = (num * dinv) % p;
  if (r < 0) r += p;
  v_ = mpq_class(r);
}

Coeff Coeff::operator-() const { return Coeff(-v_, char_); }

Coeff Coeff::operator+(const Coeff& o) const {
  check_char(o);
  return Coeff(v_ + o.v_, char_);
}

Coeff Coeff::operator-(const Coeff& o) const {
  check_char(o);
  return Coeff(v_ - o.v_, char_);
}

Coeff Coeff::operator*(const Coeff& o) const {
  check_char(o);
  return Coeff(v_ * o.v_, char_);
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inverse(); }

Coeff Coeff::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (char_ == 0) return Coeff(1 / v_, 0);
  mpz_class p(static_cast<unsigned long>(char_));
  mpz_class num = v_.get_num();
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
    throw Error("non-invertible residue");
  return Coeff(mpq_class(inv), char_);
}

Coeff Coeff::pth_root() const {
  if (char_ == 0)
    throw CharacteristicUnsupported("p-th root only defined in characteristic p");
  // Frobenius is the identity on the prime field.
  return *this;
}

std::string Coeff::str() const { return v_.get_str(); }

}  // namespace mldmj
