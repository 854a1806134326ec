#include <cctype>
#include <set>

#include "mldmj/errors.hpp"
#include "mldmj/poly.hpp"

namespace mldmj {
namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  RingPtr ring;

  explicit Parser(const std::string& text, RingPtr r) : s(text), ring(std::move(r)) {}

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError(why + " at position " + std::to_string(pos));
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return mpz_class(s.substr(start, pos - start));
  }

  std::string ident() {
    skip();
    std::size_t start = pos;
    if (pos >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      fail("expected identifier");
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }

  Poly expr() {
    bool neg = false;
    skip();
    if (accept('-')) neg = true;
    else accept('+');
    Poly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip();
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (accept('^')) {
      mpz_class e = integer();
      if (e < 0 || e > 10000) fail("exponent out of range");
      return base.pow(static_cast<int>(e.get_si()));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    if (accept('(')) {
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (accept('-')) return -factor();
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      if (accept('/')) {
        mpz_class den = integer();
        if (den == 0) fail("zero denominator");
        return Poly::constant(ring, Coeff(mpq_class(num, den), ring->characteristic));
      }
      return Poly::constant(ring, Coeff(mpq_class(num), ring->characteristic));
    }
    std::string name = ident();
    for (std::size_t i = 0; i < ring->nvars(); ++i)
      if (ring->vars[i] == name) return Poly::variable(ring, i);
    fail("unknown variable '" + name + "'");
  }
};

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
  Parser p(text, ring);
  Poly r = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

Poly parse_poly_infer(const std::string& text, unsigned long characteristic) {
  // Collect identifiers in order of first appearance.
  std::vector<std::string> vars;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < text.size();) {
    char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string name = text.substr(i, j - i);
      if (seen.insert(name).second) vars.push_back(name);
      i = j;
    } else {
      ++i;
    }
  }
  return parse_poly(text, make_ring(std::move(vars), characteristic));
}

}  // namespace mldmj
