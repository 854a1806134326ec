#include "mldmj/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "mldmj/errors.hpp"

namespace mldmj {
namespace {

Poly reduce_once(const Poly& p, const Poly& g, const MonomialOrder& ord,
                 const Monomial& m, const Coeff& c) {
  // p - (c/lc(g)) * (m/LM(g)) * g
  Poly t = Poly::term(p.ring(), mono_div(m, g.leading_monomial(ord)),
                      c / g.leading_coeff(ord));
  return p - t * g;
}

Poly normal_form_budgeted(const Poly& f, const std::vector<Poly>& basis,
                          const MonomialOrder& order, long* steps, long budget) {
  Poly p = f;
  Poly r(f.ring());
  while (!p.is_zero()) {
    const Monomial& lm = p.leading_monomial(order);
    bool reduced = false;
    for (const Poly& g : basis) {
      if (g.is_zero()) continue;
      if (divides(g.leading_monomial(order), lm)) {
        // Charge by the operand sizes: one reduction rebuilds p and walks g,
        // so the budget tracks actual monomial operations.
        if (steps && budget >= 0 &&
            (*steps += static_cast<long>(g.terms().size() + p.terms().size())) >
                budget)
          throw ResourceLimit("Groebner step budget exhausted", *steps);
        p = reduce_once(p, g, order, lm, p.leading_coeff(order));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Coeff c = p.coeff(lm);
      r.add_term(lm, c);
      p.add_term(lm, -c);
    }
  }
  return r;
}

}  // namespace

Poly normal_form(const Poly& f, const std::vector<Poly>& basis,
                 const MonomialOrder& order) {
  return normal_form_budgeted(f, basis, order, nullptr, -1);
}

std::vector<Poly> groebner_basis(std::vector<Poly> gens, const GroebnerOptions& opts) {
  const MonomialOrder& ord = opts.order;
  std::vector<Poly> g;
  for (Poly& f : gens)
    if (!f.is_zero()) g.push_back(std::move(f));
  if (g.empty()) return g;

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int deg;
  };
  std::vector<Pair> pairs;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = mono_lcm(g[i].leading_monomial(ord), g[j].leading_monomial(ord));
      pairs.push_back({i, j, l, total_degree(l)});
    }
  };
  for (std::size_t j = 0; j < g.size(); ++j) push_pairs(j);

  long steps = 0;
  while (!pairs.empty()) {
    // Normal strategy: smallest lcm degree first.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (pairs[k].deg < pairs[best].deg) best = k;
    Pair pr = pairs[best];
    pairs[best] = pairs.back();
    pairs.pop_back();

    const Monomial& lmi = g[pr.i].leading_monomial(ord);
    const Monomial& lmj = g[pr.j].leading_monomial(ord);
    if (pr.lcm == mono_mul(lmi, lmj)) continue;  // coprime leading monomials

    if (opts.step_budget >= 0 &&
        (steps += static_cast<long>(g[pr.i].terms().size() +
                                    g[pr.j].terms().size())) > opts.step_budget)
      throw ResourceLimit("Groebner step budget exhausted", steps);

    Poly s = Poly::term(g[pr.i].ring(), mono_div(pr.lcm, lmi),
                        g[pr.i].leading_coeff(ord).inverse()) *
                 g[pr.i] -
             Poly::term(g[pr.j].ring(), mono_div(pr.lcm, lmj),
                        g[pr.j].leading_coeff(ord).inverse()) *
                 g[pr.j];
    Poly r = normal_form_budgeted(s, g, ord, &steps, opts.step_budget);
    if (!r.is_zero()) {
      g.push_back(std::move(r));
      push_pairs(g.size() - 1);
    }
  }

  // Interreduce to the reduced basis.
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != i) others.push_back(g[j]);
    Poly r = normal_form_budgeted(g[i], others, ord, &steps, opts.step_budget);
    if (!r.is_zero()) reduced.push_back(r * r.leading_coeff(ord).inverse());
    else g[i] = Poly(g[i].ring());  // drop redundant element for later rounds
  }
  // A second full-reduction pass against the surviving set makes tails canonical.
  std::vector<Poly> out;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    Poly r = normal_form_budgeted(reduced[i], others, ord, &steps, opts.step_budget);
    if (!r.is_zero()) out.push_back(r * r.leading_coeff(ord).inverse());
  }
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
    return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
  });
  return out;
}

bool basis_contains_one(const std::vector<Poly>& gb) {
  for (const Poly& g : gb)
    if (!g.is_zero() && g.degree() == 0) return true;
  return false;
}

bool ideal_member(const Poly& f, const std::vector<Poly>& gb,
                  const MonomialOrder& order) {
  return normal_form(f, gb, order).is_zero();
}

namespace {

// Minimum hitting set over the supports of the leading monomials, by
// branching on the elements of a yet-unhit support.
void min_hitting_set(const std::vector<std::uint64_t>& supports,
                     std::uint64_t chosen, int size, int& best) {
  if (size >= best) return;
  std::uint64_t unhit = 0;
  for (std::uint64_t s : supports) {
    if ((s & chosen) == 0) {
      unhit = s;
      break;
    }
  }
  if (unhit == 0) {
    best = size;
    return;
  }
  for (std::uint64_t s = unhit; s;) {
    std::uint64_t bit = s & (~s + 1);
    s ^= bit;
    min_hitting_set(supports, chosen | bit, size + 1, best);
  }
}

}  // namespace

int ideal_dimension(const std::vector<Poly>& gb, const MonomialOrder& order) {
  if (basis_contains_one(gb)) return -1;
  std::size_t n = 0;
  std::vector<std::uint64_t> supports;
  for (const Poly& g : gb) {
    if (g.is_zero()) continue;
    const Monomial& lm = g.leading_monomial(order);
    n = lm.size();
    if (n > 63) throw DimensionTooLarge("more than 63 variables");
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < lm.size(); ++i)
      if (lm[i] > 0) s |= std::uint64_t{1} << i;
    supports.push_back(s);
  }
  if (supports.empty()) return static_cast<int>(n);
  // Drop supports that contain another support: redundant constraints.
  std::sort(supports.begin(), supports.end(),
            [](std::uint64_t a, std::uint64_t b) {
              return std::popcount(a) < std::popcount(b);
            });
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t s : supports) {
    bool keep = true;
    for (std::uint64_t t : minimal)
      if ((t & s) == t) keep = false;
    if (keep) minimal.push_back(s);
  }
  int best = static_cast<int>(n);
  min_hitting_set(minimal, 0, 0, best);
  return static_cast<int>(n) - best;
}

bool torus_has_zero(const std::vector<Poly>& gens, const GroebnerOptions& opts) {
  if (gens.empty()) return true;
  const RingPtr& base = gens[0].ring();
  std::vector<std::string> vars = base->vars;
  vars.push_back("_w");
  RingPtr ext = make_ring(std::move(vars), base->characteristic);

  auto lift = [&](const Poly& f) {
    Poly r(ext);
    for (const auto& [m, c] : f.terms()) {
      Monomial nm = m;
      nm.push_back(0);
      r.add_term(nm, c);
    }
    return r;
  };

  std::vector<Poly> sys;
  for (const Poly& f : gens) sys.push_back(lift(f));
  Monomial prod(ext->nvars(), 1);
  Poly rab = Poly::constant(ext, Coeff::one(ext->characteristic)) -
             Poly::term(ext, std::move(prod), Coeff::one(ext->characteristic));
  sys.push_back(std::move(rab));
  return !basis_contains_one(groebner_basis(std::move(sys), opts));
}

}  // namespace mldmj
