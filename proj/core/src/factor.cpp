#include "mldmj/factor.hpp"

#include <algorithm>

#include "mldmj/errors.hpp"

namespace mldmj {
namespace {

unsigned long upchar(const UPoly& f) {
  return f.empty() ? 0 : f[0].characteristic();
}

bool uis_zero(const UPoly& f) {
  for (const auto& c : f)
    if (!c.is_zero()) return false;
  return true;
}

UPoly uconst(const Coeff& c) { return UPoly{c}; }

}  // namespace

int udeg(const UPoly& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (!f[i].is_zero()) return static_cast<int>(i);
  return -1;
}

UPoly utrim(UPoly f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  return f;
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (uis_zero(a) || uis_zero(b)) return {};
  unsigned long p = upchar(a);
  UPoly r(a.size() + b.size() - 1, Coeff::zero(p));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return utrim(std::move(r));
}

std::pair<UPoly, UPoly> udivmod(const UPoly& a, const UPoly& b) {
  int db = udeg(b);
  if (db < 0) throw Error("univariate division by zero");
  unsigned long p = b[static_cast<std::size_t>(db)].characteristic();
  UPoly r = utrim(a);
  int dr = udeg(r);
  if (dr < db) return {UPoly{}, std::move(r)};
  Coeff lbinv = b[static_cast<std::size_t>(db)].inverse();
  UPoly q(static_cast<std::size_t>(dr - db + 1), Coeff::zero(p));
  while ((dr = udeg(r)) >= db) {
    Coeff t = r[static_cast<std::size_t>(dr)] * lbinv;
    std::size_t shift = static_cast<std::size_t>(dr - db);
    q[shift] = t;
    for (int i = 0; i <= db; ++i)
      r[shift + static_cast<std::size_t>(i)] -= t * b[static_cast<std::size_t>(i)];
  }
  return {utrim(std::move(q)), utrim(std::move(r))};
}

UPoly udivexact(const UPoly& a, const UPoly& b) {
  auto [q, r] = udivmod(a, b);
  if (!uis_zero(r)) throw Error("univariate division not exact");
  return q;
}

UPoly uderiv(const UPoly& f, unsigned long characteristic) {
  UPoly r;
  for (std::size_t i = 1; i < f.size(); ++i)
    r.push_back(f[i] * Coeff(static_cast<long>(i), characteristic));
  return utrim(std::move(r));
}

UPoly umonic(UPoly f) {
  f = utrim(std::move(f));
  int d = udeg(f);
  if (d < 0) return f;
  Coeff inv = f[static_cast<std::size_t>(d)].inverse();
  for (auto& c : f) c *= inv;
  return f;
}

UPoly ugcd(UPoly a, UPoly b) {
  a = utrim(std::move(a));
  b = utrim(std::move(b));
  while (!uis_zero(b)) {
    UPoly r = udivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(std::move(a));
}

std::vector<std::pair<UPoly, int>> squarefree_decompose(const UPoly& f0,
                                                        unsigned long characteristic) {
  UPoly f = umonic(utrim(f0));
  std::vector<std::pair<UPoly, int>> out;
  if (udeg(f) <= 0) return out;

  UPoly fp = uderiv(f, characteristic);
  if (uis_zero(fp)) {
    // f = g(y^p); exponents divide by p, coefficients are fixed by Frobenius
    // over the prime field.
    std::size_t p = static_cast<std::size_t>(characteristic);
    UPoly g;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i % p == 0) {
        g.push_back(f[i].pth_root());
      } else if (!f[i].is_zero()) {
        throw Error("derivative zero but not a p-th power");
      }
    }
    for (auto& [fac, mult] : squarefree_decompose(g, characteristic))
      out.emplace_back(std::move(fac), mult * static_cast<int>(characteristic));
    return out;
  }

  UPoly a = ugcd(f, fp);
  UPoly w = udivexact(f, a);
  int i = 1;
  while (udeg(w) > 0) {
    UPoly y = ugcd(w, a);
    UPoly z = udivexact(w, y);
    if (udeg(z) > 0) out.emplace_back(umonic(std::move(z)), i);
    a = udivexact(a, y);
    w = std::move(y);
    ++i;
  }
  if (udeg(a) > 0) {
    // Residual part: product of factors whose multiplicity is divisible by p.
    for (auto& [fac, mult] : squarefree_decompose(a, characteristic))
      out.emplace_back(std::move(fac), mult);
  }
  return out;
}

namespace {

// Dehomogenize a binary form at z = 1 as a univariate polynomial in y.
UPoly dehomogenize(const Poly& h) {
  unsigned long p = h.characteristic();
  int n = h.degree();
  UPoly u(static_cast<std::size_t>(n + 1), Coeff::zero(p));
  for (const auto& [m, c] : h.terms()) u[static_cast<std::size_t>(m[0])] = c;
  return utrim(std::move(u));
}

Poly homogenize(const UPoly& u, int target_degree, const RingPtr& ring) {
  Poly h(ring);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    Monomial m{static_cast<int>(i), target_degree - static_cast<int>(i)};
    h.add_term(m, u[i]);
  }
  return h;
}

}  // namespace

std::vector<int> squarefree_pattern(const Poly& h) {
  std::vector<int> pattern;
  for (const auto& [fac, mult] : binary_squarefree_factors(h))
    pattern.insert(pattern.end(), static_cast<std::size_t>(fac.degree()), mult);
  std::sort(pattern.rbegin(), pattern.rend());
  return pattern;
}

std::vector<std::pair<Poly, int>> binary_squarefree_factors(const Poly& h) {
  if (h.is_zero()) throw ZeroPolynomial("factoring the zero form");
  if (h.nvars() != 2 || !h.is_homogeneous())
    throw Error("expected a nonzero binary form");
  std::vector<std::pair<Poly, int>> out;
  int n = h.degree();
  UPoly u = dehomogenize(h);
  int zmult = n - udeg(u);
  if (zmult > 0)
    out.emplace_back(Poly::variable(h.ring(), 1), zmult);
  for (auto& [fac, mult] : squarefree_decompose(u, h.characteristic()))
    out.emplace_back(homogenize(fac, udeg(fac), h.ring()), mult);
  return out;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("division by the zero polynomial");
  MonomialOrder ord;
  Poly r = a;
  Poly q(a.ring());
  const Monomial& lmb = b.leading_monomial(ord);
  Coeff lcb = b.leading_coeff(ord);
  while (!r.is_zero()) {
    const Monomial& lmr = r.leading_monomial(ord);
    if (!divides(lmb, lmr)) throw Error("polynomial division not exact");
    Poly t = Poly::term(a.ring(), mono_div(lmr, lmb), r.leading_coeff(ord) / lcb);
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

// View a 2-variable Poly as an element of (k[z])[y]: coefficient of y^i is a
// UPoly in z.
using BPoly = std::vector<UPoly>;

BPoly to_bpoly(const Poly& f) {
  BPoly b;
  unsigned long p = f.characteristic();
  for (const auto& [m, c] : f.terms()) {
    std::size_t dy = static_cast<std::size_t>(m[0]);
    std::size_t dz = static_cast<std::size_t>(m[1]);
    if (b.size() <= dy) b.resize(dy + 1);
    UPoly& u = b[dy];
    if (u.size() <= dz) u.resize(dz + 1, Coeff::zero(p));
    u[dz] = c;
  }
  for (auto& u : b) u = utrim(std::move(u));
  while (!b.empty() && b.back().empty()) b.pop_back();
  return b;
}

Poly from_bpoly(const BPoly& b, const RingPtr& ring) {
  Poly f(ring);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b[i].size(); ++j)
      if (!b[i][j].is_zero())
        f.add_term(Monomial{static_cast<int>(i), static_cast<int>(j)}, b[i][j]);
  return f;
}

bool bis_zero(const BPoly& b) {
  for (const auto& u : b)
    if (!uis_zero(u)) return false;
  return true;
}

int bdeg(const BPoly& b) {
  for (std::size_t i = b.size(); i-- > 0;)
    if (!uis_zero(b[i])) return static_cast<int>(i);
  return -1;
}

UPoly bcontent(const BPoly& b) {
  UPoly g;
  for (const auto& u : b)
    if (!uis_zero(u)) g = ugcd(g, u);
  return g;
}

BPoly bscale(const BPoly& b, const UPoly& s) {
  BPoly r;
  r.reserve(b.size());
  for (const auto& u : b) r.push_back(umul(u, s));
  return r;
}

BPoly bprimitive(const BPoly& b) {
  UPoly c = bcontent(b);
  if (udeg(c) <= 0) return b;
  BPoly r;
  r.reserve(b.size());
  for (const auto& u : b) r.push_back(uis_zero(u) ? UPoly{} : udivexact(u, c));
  return r;
}

// Pseudo-remainder of a by b in y: prem = lc(b)^(da-db+1) * a mod b.
BPoly bprem(BPoly a, const BPoly& b) {
  int db = bdeg(b);
  const UPoly& lb = b[static_cast<std::size_t>(db)];
  int da;
  while ((da = bdeg(a)) >= db) {
    UPoly la = a[static_cast<std::size_t>(da)];
    BPoly next = bscale(a, lb);
    std::size_t shift = static_cast<std::size_t>(da - db);
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (uis_zero(b[i])) continue;
      UPoly t = umul(la, b[i]);
      UPoly& dst = next[i + shift];
      if (dst.size() < t.size()) dst.resize(t.size(), Coeff::zero(upchar(t)));
      for (std::size_t j = 0; j < t.size(); ++j) dst[j] -= t[j];
      dst = utrim(std::move(dst));
    }
    next[static_cast<std::size_t>(da)] = {};
    while (!next.empty() && uis_zero(next.back())) next.pop_back();
    a = std::move(next);
  }
  return a;
}

}  // namespace

Poly bivariate_gcd(const Poly& a, const Poly& b) {
  if (a.nvars() != 2 || b.nvars() != 2)
    throw Error("bivariate gcd needs exactly 2 variables");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  BPoly fa = to_bpoly(a), fb = to_bpoly(b);
  UPoly cont = ugcd(bcontent(fa), bcontent(fb));
  fa = bprimitive(fa);
  fb = bprimitive(fb);
  if (bdeg(fa) < bdeg(fb)) std::swap(fa, fb);
  while (!bis_zero(fb)) {
    BPoly r = bprimitive(bprem(fa, fb));
    fa = std::move(fb);
    fb = std::move(r);
  }
  fa = bprimitive(fa);
  // Restore the content and normalize the y-leading coefficient.
  if (uis_zero(cont)) cont = uconst(Coeff::one(a.characteristic()));
  Poly result = from_bpoly(bscale(fa, cont), a.ring());
  if (result.is_zero()) return result;
  MonomialOrder ord;
  return result * result.leading_coeff(ord).inverse();
}

bool pth_power_root(const Poly& f, Poly* root) {
  unsigned long p = f.characteristic();
  if (p == 0) return false;
  Poly g(f.ring());
  for (const auto& [m, c] : f.terms()) {
    Monomial nm = m;
    for (auto& e : nm) {
      if (e % static_cast<int>(p) != 0) return false;
      e /= static_cast<int>(p);
    }
    g.add_term(nm, c.pth_root());
  }
  if (root) *root = std::move(g);
  return true;
}

}  // namespace mldmj
