#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "mldmj/errors.hpp"
#include "mldmj/groebner.hpp"

using namespace mldmj;

namespace {

Poly random_poly(std::mt19937& rng, const RingPtr& ring, int deg, int terms) {
  std::uniform_int_distribution<int> dcoef(-3, 3);
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

/// Independent-set dimension oracle: the largest subset S of variables such
/// that no leading monomial is supported inside S, by brute force.
int dimension_oracle(const std::vector<Poly>& gb, const MonomialOrder& ord) {
  if (gb.empty()) return -2;  // caller handles
  std::size_t n = gb[0].nvars();
  std::vector<Monomial> lts;
  for (const Poly& g : gb) lts.push_back(g.leading_monomial(ord));
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const Monomial& lt : lts) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i)
        if (lt[i] > 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace

TEST_CASE("normal form reduces and is linear") {
  RingPtr r = make_ring({"x", "y"}, 0);
  MonomialOrder ord = MonomialOrder::grevlex();
  std::vector<Poly> basis = {parse_poly("x^2 - y", r), parse_poly("y^2 - 1", r)};
  auto gb = groebner_basis(basis);
  CHECK(normal_form(parse_poly("x^4", r), gb, ord) ==
        parse_poly("1", r));
  std::mt19937 rng(17);
  for (int it = 0; it < 20; ++it) {
    Poly f = random_poly(rng, r, 5, 4);
    Poly g = random_poly(rng, r, 5, 4);
    CHECK(normal_form(f + g, gb, ord) ==
          normal_form(f, gb, ord) + normal_form(g, gb, ord));
    // The normal form is a fixed point.
    Poly nf = normal_form(f, gb, ord);
    CHECK(normal_form(nf, gb, ord) == nf);
  }
}

TEST_CASE("groebner basis of a textbook ideal") {
  // I = (x^2 + y^2 - 1, x - y): eliminating gives 2y^2 - 1.
  RingPtr r = make_ring({"x", "y"}, 0);
  auto gb = groebner_basis({parse_poly("x^2 + y^2 - 1", r), parse_poly("x - y", r)});
  CHECK(ideal_member(parse_poly("y^2 - 1/2", r), gb, MonomialOrder::grevlex()));
  CHECK(!ideal_member(parse_poly("x", r), gb, MonomialOrder::grevlex()));
  // Reduced basis is monic and deterministic under regeneration.
  for (const Poly& g : gb)
    CHECK(g.leading_coeff(MonomialOrder::grevlex()).is_one());
  auto gb2 = groebner_basis({parse_poly("x - y", r), parse_poly("x^2 + y^2 - 1", r)});
  CHECK(gb == gb2);
}

TEST_CASE("basis_contains_one") {
  RingPtr r = make_ring({"x", "y"}, 0);
  CHECK(basis_contains_one(groebner_basis({parse_poly("x", r), parse_poly("x - 1", r)})));
  CHECK(!basis_contains_one(groebner_basis({parse_poly("x", r), parse_poly("y", r)})));
}

TEST_CASE("step budget raises ResourceLimit") {
  RingPtr r = make_ring({"x", "y", "z"}, 0);
  GroebnerOptions opts;
  opts.step_budget = 1;
  // Cyclic-3: leading monomials are not pairwise coprime, so S-pairs are
  // actually reduced and the budget is consumed.
  CHECK_THROWS_AS(groebner_basis({parse_poly("x + y + z", r),
                                  parse_poly("x*y + y*z + z*x", r),
                                  parse_poly("x*y*z - 1", r)},
                                 opts),
                  ResourceLimit);
  opts.step_budget = -1;
  CHECK(!groebner_basis({parse_poly("x + y + z", r),
                         parse_poly("x*y + y*z + z*x", r),
                         parse_poly("x*y*z - 1", r)},
                        opts)
             .empty());
}

TEST_CASE("ideal dimension on known ideals") {
  MonomialOrder ord = MonomialOrder::grevlex();
  RingPtr r = make_ring({"x", "y", "z"}, 0);
  CHECK(ideal_dimension(groebner_basis({parse_poly("x", r)}), ord) == 2);
  CHECK(ideal_dimension(groebner_basis({parse_poly("x", r), parse_poly("y", r)}), ord) == 1);
  CHECK(ideal_dimension(groebner_basis({parse_poly("x*y - 1", r)}), ord) == 2);
  CHECK(ideal_dimension(groebner_basis({parse_poly("1", r)}), ord) == -1);
  // The twisted cubic cone has dimension 2 in A^4.
  RingPtr r4 = make_ring({"x", "y", "z", "w"}, 0);
  auto gb = groebner_basis({parse_poly("x*z - y^2", r4),
                            parse_poly("x*w - y*z", r4),
                            parse_poly("y*w - z^2", r4)});
  CHECK(ideal_dimension(gb, ord) == 2);
}

TEST_CASE("ideal dimension matches the brute-force oracle") {
  MonomialOrder ord = MonomialOrder::grevlex();
  std::mt19937 rng(23);
  int tested = 0;
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 3 + it % 2;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    RingPtr r = make_ring(names, it % 3 == 0 ? 5 : 0);
    std::vector<Poly> gens;
    for (int g = 0; g < 2; ++g) {
      Poly f = random_poly(rng, r, 3, 3);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    GroebnerOptions opts;
    opts.step_budget = 100000;
    std::vector<Poly> gb;
    try {
      gb = groebner_basis(gens, opts);
    } catch (const ResourceLimit&) {
      continue;
    }
    if (gb.empty() || basis_contains_one(gb)) continue;
    CHECK(ideal_dimension(gb, ord) == dimension_oracle(gb, ord));
    ++tested;
  }
  CHECK(tested >= 10);
}

TEST_CASE("ideal dimension is invariant under variable permutation") {
  MonomialOrder ord = MonomialOrder::grevlex();
  std::mt19937 rng(29);
  RingPtr r = make_ring({"x", "y", "z"}, 0);
  for (int it = 0; it < 15; ++it) {
    std::vector<Poly> gens;
    for (int g = 0; g < 2; ++g) {
      Poly f = random_poly(rng, r, 3, 3);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    std::vector<std::size_t> perm{2, 0, 1};
    std::vector<Poly> permuted;
    for (const Poly& f : gens) {
      Poly g(r);
      for (const auto& [m, c] : f.terms()) {
        Monomial pm(3);
        for (std::size_t i = 0; i < 3; ++i) pm[perm[i]] = m[i];
        g.add_term(pm, c);
      }
      permuted.push_back(g);
    }
    GroebnerOptions opts;
    opts.step_budget = 100000;
    try {
      int d1 = ideal_dimension(groebner_basis(gens, opts), ord);
      int d2 = ideal_dimension(groebner_basis(permuted, opts), ord);
      CHECK(d1 == d2);
    } catch (const ResourceLimit&) {
      continue;
    }
  }
}

TEST_CASE("torus_has_zero") {
  RingPtr r = make_ring({"x", "y"}, 0);
  CHECK(torus_has_zero({parse_poly("x + y", r)}));
  CHECK(torus_has_zero({parse_poly("x - 1", r), parse_poly("y - 1", r)}));
  CHECK(!torus_has_zero({parse_poly("x", r)}));
  CHECK(!torus_has_zero({parse_poly("x - 1", r), parse_poly("x - 2", r)}));
  // Zeros exist over the closure even when none are rational: (1, i).
  CHECK(torus_has_zero({parse_poly("x^2 + y^2", r)}));
  RingPtr r3 = make_ring({"x", "y"}, 3);
  CHECK(torus_has_zero({parse_poly("x^2 + y^2", r3)}));
  CHECK(!torus_has_zero({parse_poly("x + y", r3), parse_poly("x - y", r3)}));
}
