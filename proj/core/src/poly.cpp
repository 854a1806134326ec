#include "mldmj/poly.hpp"

#include <algorithm>
#include <sstream>

#include "mldmj/errors.hpp"

namespace mldmj {

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  auto at = [&](const Monomial& m, std::size_t i) {
    return perm.empty() ? m[i] : m[static_cast<std::size_t>(perm[i])];
  };
  const std::size_t n = a.size();
  if (kind != Kind::Lex) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
  }
  if (kind == Kind::GrevLex) {
    // a < b iff the last nonzero entry of a-b is positive.
    for (std::size_t i = n; i-- > 0;) {
      int d = at(a, i) - at(b, i);
      if (d != 0) return d > 0;
    }
    return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    int d = at(a, i) - at(b, i);
    if (d != 0) return d < 0;
  }
  return false;
}

RingPtr make_ring(std::vector<std::string> vars, unsigned long characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw CharacteristicUnsupported("characteristic must be 0 or prime");
  auto r = std::make_shared<Ring>();
  r->characteristic = characteristic;
  r->vars = std::move(vars);
  return r;
}

Poly Poly::constant(const RingPtr& ring, const Coeff& c) {
  Poly p(ring);
  p.add_term(Monomial(ring->nvars(), 0), c);
  return p;
}

Poly Poly::variable(const RingPtr& ring, std::size_t index) {
  Monomial m(ring->nvars(), 0);
  m[index] = 1;
  return term(ring, std::move(m), Coeff::one(ring->characteristic));
}

Poly Poly::term(const RingPtr& ring, Monomial m, const Coeff& c) {
  Poly p(ring);
  p.add_term(std::move(m), c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

std::optional<int> Poly::multiplicity() const {
  if (terms_.empty()) return std::nullopt;
  int d = total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_) d = std::min(d, total_degree(m));
  return d;
}

Poly Poly::initial_form() const {
  auto mu = multiplicity();
  if (!mu) throw ZeroPolynomial("initial form of the zero polynomial");
  return homogeneous_part(*mu);
}

Poly Poly::truncate_degree(int m) const {
  Poly r(ring_);
  for (const auto& [mono, c] : terms_)
    if (total_degree(mono) <= m) r.terms_.emplace(mono, c);
  return r;
}

Poly Poly::homogeneous_part(int k) const {
  Poly r(ring_);
  for (const auto& [mono, c] : terms_)
    if (total_degree(mono) == k) r.terms_.emplace(mono, c);
  return r;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != d) return false;
  return true;
}

void Poly::check_ring(const Poly& o) const {
  if (!ring_ || !o.ring_) throw Error("polynomial without a ring");
  if (ring_->characteristic != o.ring_->characteristic)
    throw CharacteristicMismatch("mixing characteristics");
  if (ring_->nvars() != o.ring_->nvars())
    throw Error("polynomials over different rings");
}

Poly Poly::operator-() const {
  Poly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  check_ring(o);
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check_ring(o);
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const { return mul_trunc(o, -1); }

Poly Poly::mul_trunc(const Poly& o, int trunc) const {
  check_ring(o);
  Poly r(ring_);
  for (const auto& [ma, ca] : terms_) {
    int da = total_degree(ma);
    for (const auto& [mb, cb] : o.terms_) {
      if (trunc >= 0 && da + total_degree(mb) > trunc) continue;
      r.add_term(mono_mul(ma, mb), ca * cb);
    }
  }
  return r;
}

Poly Poly::operator*(const Coeff& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, cc] : terms_) {
    Coeff v = cc * c;
    if (!v.is_zero()) r.terms_.emplace(m, v);
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  check_ring(o);
  return terms_ == o.terms_;
}

Poly Poly::pow(int e, int trunc) const {
  if (e < 0) throw Error("negative exponent");
  Poly r = constant(ring_, Coeff::one(characteristic()));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) r = r.mul_trunc(base, trunc);
    e >>= 1;
    if (e > 0) base = base.mul_trunc(base, trunc);
  }
  return r;
}

Poly Poly::derivative(std::size_t var) const {
  Poly r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Coeff nc = c * Coeff(m[var], characteristic());
    if (nc.is_zero()) continue;
    Monomial nm = m;
    nm[var] -= 1;
    r.add_term(std::move(nm), nc);
  }
  return r;
}

Coeff Poly::evaluate(const std::vector<Coeff>& point) const {
  Coeff acc = Coeff::zero(characteristic());
  for (const auto& [m, c] : terms_) {
    Coeff t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

Poly Poly::substitute(const std::vector<Poly>& assignment, int trunc) const {
  if (assignment.size() != nvars())
    throw Error("assignment must cover every variable");
  const RingPtr& target = assignment.empty() ? ring_ : assignment[0].ring();
  Poly r(target);
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) t = t.mul_trunc(assignment[i].pow(m[i], trunc), trunc);
    r += t;
  }
  return r;
}

Poly Poly::translate(const std::vector<Coeff>& a) const {
  std::vector<Poly> assign;
  assign.reserve(nvars());
  for (std::size_t i = 0; i < nvars(); ++i)
    assign.push_back(Poly::variable(ring_, i) + Poly::constant(ring_, a[i]));
  return substitute(assign);
}

Coeff Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff::zero(characteristic()) : it->second;
}

void Poly::add_term(const Monomial& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const Monomial& Poly::leading_monomial(const MonomialOrder& ord) const {
  if (terms_.empty()) throw ZeroPolynomial("leading monomial of 0");
  const Monomial* best = &terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    if (ord.less(*best, m)) best = &m;
  return *best;
}

Coeff Poly::leading_coeff(const MonomialOrder& ord) const {
  return terms_.at(leading_monomial(ord));
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  // Print in descending grevlex for stable, readable output.
  std::vector<const std::pair<const Monomial, Coeff>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  MonomialOrder ord;
  std::sort(ts.begin(), ts.end(),
            [&](auto* a, auto* b) { return ord.less(b->first, a->first); });
  std::ostringstream out;
  bool first = true;
  for (auto* t : ts) {
    mpq_class v = t->second.value();
    bool neg = v < 0;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    mpq_class av = neg ? mpq_class(-v) : v;
    bool unit = (av == 1);
    bool any_var = total_degree(t->first) > 0;
    if (!unit || !any_var) out << av.get_str();
    bool star = !unit || !any_var;
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      int e = t->first[i];
      if (e == 0) continue;
      if (star) out << "*";
      star = true;
      out << ring_->vars[i];
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace mldmj
