#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mldmj/errors.hpp"
#include "mldmj/poly.hpp"

using namespace mldmj;

namespace {

Poly random_poly(std::mt19937& rng, const RingPtr& ring, int deg, int terms) {
  std::uniform_int_distribution<int> dcoef(-5, 5);
  std::uniform_int_distribution<int> dexp(0, deg);
  Poly f(ring);
  for (int t = 0; t < terms; ++t) {
    Monomial m(ring->nvars());
    int left = deg;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      int e = dexp(rng) % (left + 1);
      m[i] = e;
      left -= e;
    }
    f.add_term(m, Coeff(dcoef(rng), ring->characteristic));
  }
  return f;
}

}  // namespace

TEST_CASE("coeff arithmetic over Q") {
  Coeff a(mpq_class(2, 3), 0), b(mpq_class(1, 6), 0);
  CHECK((a + b).value() == mpq_class(5, 6));
  CHECK((a * b).value() == mpq_class(1, 9));
  CHECK((a / b).value() == 4);
  CHECK((-a).value() == mpq_class(-2, 3));
  CHECK(a.inverse().value() == mpq_class(3, 2));
}

TEST_CASE("coeff arithmetic over F_p is canonical") {
  Coeff a(-1, 7);
  CHECK(a.value() == 6);
  CHECK((a + Coeff(1, 7)).is_zero());
  Coeff half = Coeff(1, 7) / Coeff(2, 7);
  CHECK((half * Coeff(2, 7)).is_one());
  // Every nonzero element is invertible.
  for (long v = 1; v < 7; ++v)
    CHECK((Coeff(v, 7) * Coeff(v, 7).inverse()).is_one());
  CHECK_THROWS_AS(Coeff(0, 7).inverse(), Error);
}

TEST_CASE("pth_root is the inverse of Frobenius on F_p") {
  for (long v = 0; v < 5; ++v) {
    Coeff a(v, 5);
    Coeff fifth = a * a * a * a * a;
    CHECK(fifth.pth_root() == a);
  }
  CHECK_THROWS_AS(Coeff(2, 0).pth_root(), Error);
}

TEST_CASE("non-prime characteristic is rejected") {
  CHECK_THROWS_AS(make_ring({"x"}, 4), CharacteristicUnsupported);
  CHECK_THROWS_AS(make_ring({"x"}, 1), CharacteristicUnsupported);
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(!is_prime(91));
}

TEST_CASE("parse round trip and grammar") {
  RingPtr r = make_ring({"x", "y"}, 0);
  Poly f = parse_poly("x^2 - 3/2*x*y + y^3", r);
  CHECK(f.coeff(Monomial{2, 0}) == Coeff(1, 0));
  CHECK(f.coeff(Monomial{1, 1}) == Coeff(mpq_class(-3, 2), 0));
  CHECK(f.coeff(Monomial{0, 3}) == Coeff(1, 0));
  CHECK(parse_poly(f.str(), r) == f);

  CHECK_THROWS_AS(parse_poly("x +* y", r), ParseError);
  CHECK_THROWS_AS(parse_poly("w", r), ParseError);
  CHECK_THROWS_AS(parse_poly("(x", r), ParseError);
}

TEST_CASE("parse_poly_infer orders variables by first appearance") {
  Poly f = parse_poly_infer("z*y + x^2", 0);
  CHECK(f.ring()->vars == std::vector<std::string>{"z", "y", "x"});
}

TEST_CASE("characteristic folds coefficients") {
  RingPtr r = make_ring({"x", "y"}, 3);
  Poly f = parse_poly("3*x^2 + 4*y", r);
  CHECK(f.coeff(Monomial{2, 0}).is_zero());
  CHECK(f.coeff(Monomial{0, 1}).is_one());
}

TEST_CASE("ring algebra laws on random samples") {
  std::mt19937 rng(11);
  for (unsigned long p : {0ul, 5ul}) {
    RingPtr r = make_ring({"x", "y", "z"}, p);
    for (int it = 0; it < 20; ++it) {
      Poly f = random_poly(rng, r, 4, 4);
      Poly g = random_poly(rng, r, 4, 4);
      Poly h = random_poly(rng, r, 4, 4);
      CHECK(f * (g + h) == f * g + f * h);
      CHECK(f * g == g * f);
      CHECK((f - f).is_zero());
      // Leibniz rule.
      for (std::size_t i = 0; i < 3; ++i)
        CHECK((f * g).derivative(i) ==
              f.derivative(i) * g + f * g.derivative(i));
    }
  }
}

TEST_CASE("degree, multiplicity, initial and homogeneous parts") {
  Poly f = parse_poly_infer("x^2*y + x^3 + y^5", 0);
  CHECK(f.degree() == 5);
  CHECK(*f.multiplicity() == 3);
  CHECK(f.initial_form() == parse_poly("x^2*y + x^3", f.ring()));
  CHECK(f.homogeneous_part(5) == parse_poly("y^5", f.ring()));
  CHECK(f.truncate_degree(3) == parse_poly("x^2*y + x^3", f.ring()));
  CHECK(!Poly(f.ring()).multiplicity().has_value());
  CHECK(f.initial_form().is_homogeneous());
}

TEST_CASE("mul_trunc agrees with multiply-then-truncate") {
  std::mt19937 rng(7);
  RingPtr r = make_ring({"x", "y"}, 0);
  for (int it = 0; it < 20; ++it) {
    Poly f = random_poly(rng, r, 5, 4);
    Poly g = random_poly(rng, r, 5, 4);
    CHECK(f.mul_trunc(g, 6) == (f * g).truncate_degree(6));
  }
}

TEST_CASE("substitute and translate") {
  RingPtr r = make_ring({"x", "y"}, 0);
  Poly f = parse_poly("x^2 + y", r);
  // x -> y, y -> x^2.
  Poly g = f.substitute({Poly::variable(r, 1), Poly::variable(r, 0).pow(2)});
  CHECK(g == parse_poly("y^2 + x^2", r));

  Poly t = f.translate({Coeff(1, 0), Coeff(-1, 0)});
  CHECK(t == parse_poly("x^2 + 2*x + y", r));
  CHECK(t.evaluate({Coeff(0, 0), Coeff(0, 0)}) ==
        f.evaluate({Coeff(1, 0), Coeff(-1, 0)}));
}

TEST_CASE("pow with truncation") {
  RingPtr r = make_ring({"x"}, 0);
  Poly f = parse_poly("1 + x", r);
  CHECK(f.pow(5, 2) == parse_poly("1 + 5*x + 10*x^2", r));
}

TEST_CASE("monomial orders are total and multiplicative") {
  MonomialOrder grevlex = MonomialOrder::grevlex();
  MonomialOrder lex = MonomialOrder::lex();
  Monomial a{1, 2, 0}, b{0, 1, 2}, c{1, 1, 1};
  // grevlex on equal degree: smaller last exponent wins.
  CHECK(grevlex.less(b, a));
  CHECK(grevlex.less(b, c));
  CHECK(lex.less(b, a));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(0, 3);
  for (int it = 0; it < 50; ++it) {
    Monomial x{d(rng), d(rng), d(rng)}, y{d(rng), d(rng), d(rng)},
        z{d(rng), d(rng), d(rng)};
    for (const MonomialOrder& ord : {grevlex, lex}) {
      // Antisymmetry and multiplicativity.
      if (x != y) CHECK(ord.less(x, y) != ord.less(y, x));
      if (ord.less(x, y)) CHECK(ord.less(mono_mul(x, z), mono_mul(y, z)));
    }
  }
}

TEST_CASE("leading terms under grevlex") {
  Poly f = parse_poly_infer("x*y^2 + x^2*y + x^3", 0);
  CHECK(f.leading_monomial(MonomialOrder::grevlex()) == Monomial{3, 0});
}
