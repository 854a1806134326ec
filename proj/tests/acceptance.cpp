// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 9 needs the path to the mld binary as argv[1] for the
// probe half; without it that half is reported as failed, not skipped.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mldmj/classify.hpp"
#include "mldmj/errors.hpp"
#include "mldmj/groebner.hpp"
#include "mldmj/jets.hpp"
#include "mldmj/newton.hpp"
#include "mldmj/nondegen.hpp"
#include "mldmj/result.hpp"

using namespace mldmj;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL")
            << " - " << detail << "\n";
  if (!ok) ++failures;
}

std::vector<Coeff> origin(std::size_t n, unsigned long p) {
  return std::vector<Coeff>(n, Coeff::zero(p));
}

Poly random_poly(std::mt19937& rng, const RingPtr& ring, int deg, int terms) {
  std::uniform_int_distribution<int> dcoef(-4, 4);
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
    if (total_degree(m) == 0) continue;
    f.add_term(m, Coeff(dcoef(rng), ring->characteristic));
  }
  return f;
}

// Criterion 1: the four polygon fixtures, exact integers, under a second.
void criterion1() {
  struct Fx {
    std::vector<Monomial> gens;
    Covector p;
    long k, val;
  };
  std::vector<Fx> fixtures = {
      {{{2, 0, 0}, {0, 5, 0}, {0, 0, 5}}, {5, 2, 2}, 9, 10},
      {{{2, 0, 0}, {0, 3, 0}, {0, 0, 7}}, {21, 14, 6}, 41, 42},
      {{{2, 0, 0}, {0, 3, 1}, {0, 0, 5}}, {15, 8, 6}, 29, 30},
      {{{2, 0, 0}, {0, 4, 0}, {0, 0, 5}}, {10, 5, 4}, 19, 20},
  };
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail = "polygon fixtures exact";
  for (const Fx& fx : fixtures) {
    NewtonPolygon g(fx.gens);
    if (pairing(fx.p, Monomial(3, 1)) != fx.k) ok = false;
    if (g.min_pairing(fx.p) != fx.val) ok = false;
    PolygonMld m = mld_polygon(g);
    if (m.finite) ok = false;
    if (toric_log_discrepancy(g, m.witness.p) >= 0) ok = false;
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  if (ms > 1000) {
    ok = false;
    detail += " (too slow)";
  }
  report(1, ok, detail);
}

// Criterion 2: curve theorem values, certificates, jets agreement.
void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  RingPtr r = make_ring({"x", "y"}, 0);
  bool ok = true;
  struct Fx {
    const char* poly;
    bool finite;
    long value;
    long kE;  // -1 = smooth certificate expected
  };
  for (const Fx& fx : std::vector<Fx>{{"x*y", true, 0, 1},
                                      {"x^2 - y^3", false, 0, 4},
                                      {"x^3 + y^3", false, 0, 1},
                                      {"x - y^2", true, 1, -1}}) {
    Poly f = parse_poly(fx.poly, r);
    MldResult c = classify_curve(f);
    if (c.finite != fx.finite || (fx.finite && c.value != fx.value) ||
        !c.certified)
      ok = false;
    if (fx.kE >= 0 && c.certificate.kE != fx.kE) ok = false;
    if (fx.kE < 0 && c.certificate.label != "smooth") ok = false;
    MldResult j = mld_via_jets({f}, 1, origin(2, 0), 5);
    if (!j.certified || j.finite != fx.finite ||
        (fx.finite && j.value != fx.value))
      ok = false;
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  report(2, ok && ms < 30000, "curve theorem with jets agreement");
}

// Criterion 3: surface class table with re-validated covectors.
void criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  RingPtr r = make_ring({"x", "y", "z"}, 0);
  bool ok = true;
  struct Fx {
    const char* poly;
    const char* label;
    bool finite;
    long value;
    Covector p;
  };
  for (const Fx& fx : std::vector<Fx>{
           {"x^2 + y*z*(y+z)", "A-1", true, 1, {3, 2, 2}},
           {"x^2 + y^2*z", "A-2", true, 1, {}},
           {"x^2 + y^3 + z^7", "A-3-1", false, 0, {21, 14, 6}},
           {"x^2 + y*z*(y+z)*(y-z)", "B-1", true, 0, {2, 1, 1}},
           {"x^2 + y^2*z^2", "B-3-2", true, 0, {2, 1, 1}},
           {"x^2 + y^3*z", "B-4", false, 0, {15, 8, 6}},
           {"x^2 + y^4 + z^5", "B-5", false, 0, {10, 5, 4}}}) {
    SurfaceOutcome o;
    try {
      o = classify_surface_double(parse_poly(fx.poly, r));
    } catch (const Error&) {
      ok = false;
      continue;
    }
    if (o.cls.label != fx.label || o.result.finite != fx.finite ||
        (fx.finite && o.result.value != fx.value) || !o.result.certified)
      ok = false;
    if (!fx.p.empty()) {
      if (o.result.certificate.p != fx.p) ok = false;
      // Re-validate through the newton module on the normalized polygon.
      std::vector<Monomial> pts{{2, 0, 0}};
      for (const auto& [m, c] : o.cls.h.terms()) pts.push_back({0, m[0], m[1]});
      NewtonPolygon g(pts);
      long a = toric_log_discrepancy(g, fx.p);
      if (fx.finite ? a > fx.value : a >= 0) ok = false;
    }
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  report(3, ok && ms < 10000, "surface class table");
}

// Criterion 4: case arithmetic through the Groebner route.
void criterion4() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  {
    RingPtr r5 = make_ring({"x1", "x2", "x3", "x4", "x5"}, 0);
    std::vector<Poly> gens;
    for (const char* t : {"x1*x3-x2^2", "x1*x4-x2*x3", "x1*x5-x2*x4",
                          "x2*x4-x3^2", "x2*x5-x3*x4", "x3*x5-x4^2"})
      gens.push_back(parse_poly(t, r5));
    if (embedding_dimension(gens, origin(5, 0)) != 5) ok = false;
    if (s_m_at(gens, 2, origin(5, 0), 1) != -1) ok = false;
  }
  {
    RingPtr r4 = make_ring({"x", "y", "z", "w"}, 0);
    std::vector<Poly> gens = {parse_poly("x^3+y^3+z^3+w^3", r4),
                              parse_poly("x*y*z+w^3", r4)};
    if (s_m_at(gens, 2, origin(4, 0), 2) != -2) ok = false;
  }
  {
    RingPtr r3 = make_ring({"x", "y", "z"}, 0);
    Poly f = parse_poly("x^4+y^4+z^4", r3);
    if (s_m_at({f}, 2, origin(3, 0), 3) != -1) ok = false;
    // Height 0: the level-3 local ideal is empty, its basis too.
    if (!groebner_basis(local_jet_ideal({f}, 3)).empty()) ok = false;
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  report(4, ok && ms < 60000, "case arithmetic s_1/s_2/s_3");
}

// Criterion 5: truncation invariance, 50 random polynomials, zero failures.
void criterion5() {
  std::mt19937 rng(53);
  GroebnerOptions opts;
  opts.step_budget = 300000;
  int mismatches = 0, compared = 0, samples = 0;
  while (samples < 50) {
    unsigned long p = std::vector<unsigned long>{0, 3, 5}[samples % 3];
    std::size_t nv = 2 + samples % 2;
    RingPtr r = make_ring(nv == 2 ? std::vector<std::string>{"x", "y"}
                                  : std::vector<std::string>{"x", "y", "z"},
                          p);
    Poly f = random_poly(rng, r, 6, 4);
    if (f.is_zero()) continue;
    ++samples;
    const int m = 4;
    Poly ftr = f.truncate_degree(m);
    if (ftr.is_zero()) continue;
    for (int j = 1; j <= m; ++j) {
      try {
        auto gb1 = groebner_basis(local_jet_ideal({f}, j), opts);
        auto gb2 = groebner_basis(local_jet_ideal({ftr}, j), opts);
        ++compared;
        if (!(gb1 == gb2)) ++mismatches;
      } catch (const ResourceLimit&) {
      }
    }
  }
  report(5, mismatches == 0 && compared >= 100,
         "truncation invariance (" + std::to_string(compared) +
             " comparisons, " + std::to_string(mismatches) + " mismatches)");
}

// Criterion 6: polygon property suite, 100 random generator sets.
void criterion6() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> d(0, 5);
  const long B = 25;
  int bad = 0;
  for (int it = 0; it < 100; ++it) {
    std::vector<Monomial> gens;
    for (int i = 0; i < 1 + it % 4; ++i) {
      Monomial m{d(rng), d(rng), d(rng)};
      if (total_degree(m) == 0) m[0] = 1;
      gens.push_back(m);
    }
    NewtonPolygon g(gens);
    PolygonMld m = mld_polygon(g);
    if (m.finite != g.contains_one()) ++bad;

    // Homogeneity.
    Covector p2 = m.witness.p;
    for (long& c : p2) c *= 2;
    if (g.min_pairing(p2) != 2 * g.min_pairing(m.witness.p)) ++bad;

    // Box oracle.
    bool neg = false;
    long best = 0;
    bool first = true;
    Covector p(3, 1);
    for (;;) {
      long disc = pairing(p, Monomial(3, 1)) - g.min_pairing(p);
      if (first || disc < best) best = disc, first = false;
      if (disc < 0) neg = true;
      std::size_t i = 0;
      while (i < 3 && p[i] == B) p[i++] = 1;
      if (i == 3) break;
      ++p[i];
    }
    if (m.finite && (neg || best != m.value)) ++bad;
    if (!m.finite && !neg) ++bad;

    // Monotonicity under adding a generator.
    std::vector<Monomial> bigger = gens;
    bigger.push_back({d(rng), d(rng), 1 + d(rng)});
    PolygonMld m2 = mld_polygon(NewtonPolygon(bigger));
    if (m.finite && (!m2.finite || m2.value < m.value)) ++bad;
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  report(6, bad == 0 && ms < 120000,
         "polygon properties (" + std::to_string(bad) + " violations)");
}

// Criterion 7: non-degeneracy verdicts.
void criterion7() {
  bool ok = true;
  for (const char* text : {"x^2+y^2*z^2", "x^2+y^3+z^7", "x^2+y^4+z^5",
                           "x^3+y^3+z^3"})
    if (!is_nondegenerate(parse_poly_infer(text, 0), FaceMode::AllFaces)
             .nondegenerate)
      ok = false;
  // Class A-1 compact-face fixture.
  if (!is_nondegenerate(parse_poly_infer("x^2+y*z*(y+z)", 0),
                        FaceMode::CompactFaces)
           .nondegenerate)
    ok = false;
  NondegenReport rep =
      is_nondegenerate(parse_poly_infer("(y-z)^2+x^3", 0), FaceMode::AllFaces);
  if (rep.nondegenerate || !rep.failing_face.has_value()) ok = false;
  report(7, ok, "non-degeneracy verdicts with reported face");
}

// Criterion 8: jet-level sandwich and cone decomposition. Levels beyond the
// budget are skipped; the count of computed instances keeps that honest.
void criterion8() {
  const long budget = 200000;
  int violations = 0, sandwiches = 0, decomps = 0;

  RingPtr r4 = make_ring({"x", "y", "z", "w"}, 0);
  std::vector<Poly> cone = {parse_poly("x*z - y^2", r4),
                            parse_poly("x*w - y*z", r4),
                            parse_poly("y*w - z^2", r4)};
  RingPtr r3 = make_ring({"x", "y", "z"}, 0);
  std::vector<Poly> fermat = {parse_poly("x^3 + y^3 + z^3", r3)};

  struct Input {
    std::vector<Poly> gens;
    int alpha;
    std::size_t N;
  };
  for (const Input& in : {Input{cone, 2, 4}, Input{fermat, 3, 3}}) {
    for (int m = in.alpha; m <= 5; ++m) {
      int big = (in.alpha + 1) * m - in.alpha * in.alpha;
      try {
        long sm = s_m_at(in.gens, 2, origin(in.N, 0), m, budget);
        long sy = initial_ideal_jets(in.gens, 2, m, budget);
        long sbig = s_m_at(in.gens, 2, origin(in.N, 0), big, budget);
        ++sandwiches;
        if (sm < sy || sy < sbig) ++violations;
      } catch (const ResourceLimit&) {
      }
    }
    // Cone decomposition: Y_m(0) = Y_{m-alpha} x A^{(alpha-1)N}. The left
    // side is the local fiber (N*m variables), the right side the full
    // lower-level jet scheme (N*(m-alpha+1) variables, weight 0 included).
    for (int m = in.alpha + 1; m <= 5; ++m) {
      auto local_dim = [&](int level) {
        std::vector<Poly> ideal = local_jet_ideal(in.gens, level);
        std::size_t nv = in.N * static_cast<std::size_t>(level);
        if (ideal.empty()) return static_cast<int>(nv);
        GroebnerOptions opts;
        opts.step_budget = budget;
        return ideal_dimension(groebner_basis(ideal, opts),
                               MonomialOrder::grevlex());
      };
      auto global_dim = [&](int level) {
        JetSystem sys = jet_equations(in.gens, level);
        std::vector<Poly> ideal;
        for (const auto& per_gen : sys.equations)
          for (const Poly& e : per_gen)
            if (!e.is_zero()) ideal.push_back(e);
        std::size_t nv = in.N * static_cast<std::size_t>(level + 1);
        if (ideal.empty()) return static_cast<int>(nv);
        GroebnerOptions opts;
        opts.step_budget = budget;
        return ideal_dimension(groebner_basis(ideal, opts),
                               MonomialOrder::grevlex());
      };
      try {
        int dm = local_dim(m);
        int dsmall = global_dim(m - in.alpha);
        ++decomps;
        if (dm != dsmall + (in.alpha - 1) * static_cast<int>(in.N))
          ++violations;
      } catch (const ResourceLimit&) {
      }
    }
  }
  report(8, violations == 0 && sandwiches >= 2 && decomps >= 3,
         "sandwich and cone decomposition (" +
             std::to_string(sandwiches) + " sandwiches, " +
             std::to_string(decomps) + " decompositions, " +
             std::to_string(violations) + " violations)");
}

// Criterion 9: desk-scale honesty. The theoretical d = 2 constants (levels
// up to 41) are out of computational reach; what is checkable is that the
// certified flag refuses nonnegative d = 2 verdicts below bound 41, and
// that the probe finds no budget-feasible counterexample on 50
// non-degenerate samples.
void criterion9(const char* mld_path) {
  bool ok = true;
  RingPtr r = make_ring({"x", "y", "z"}, 0);
  for (int bound : {2, 8, 15}) {
    MldResult m = mld_via_jets({parse_poly("x^2 + y^2*z^2", r)}, 2,
                               origin(3, 0), bound, 50000);
    if (m.finite && m.certified) ok = false;
  }

  bool probe_ok = false;
  std::string probe_note = "probe not run (no binary path)";
  if (mld_path) {
    std::string cmd = std::string(mld_path) +
                      " probe -d 2 --samples 50 --seed 1 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe) {
      std::string out;
      char buf[256];
      while (fgets(buf, sizeof buf, pipe)) out += buf;
      int rc = pclose(pipe);
      probe_ok = rc == 0 &&
                 out.find("flagged samples (bound exceeded): 0") != std::string::npos;
      probe_note = probe_ok ? "probe found 0 counterexamples"
                            : "probe output unexpected";
    }
  }
  report(9, ok && probe_ok,
         "N_2=41/M_2=58/B_2=39 not desk-reproducible; substitute checks: "
         "certified-flag refusal below bound 41, " + probe_note);
}

}  // namespace

int main(int argc, char** argv) {
  const char* mld_path = argc > 1 ? argv[1] : nullptr;
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9(mld_path);
  if (failures) {
    std::cout << failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria pass\n";
  return 0;
}
