// mld: Mather-Jacobian minimal log discrepancies of curve and surface
// singularities over Q and F_p, with machine-checkable certificates.
//
// Subcommands: newton, jets, classify, verify, probe. Output is
// human-readable text by default; --json emits the documented schema.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mldmj/classify.hpp"
#include "mldmj/errors.hpp"
#include "mldmj/jets.hpp"
#include "mldmj/newton.hpp"
#include "mldmj/nondegen.hpp"
#include "mldmj/poly.hpp"
#include "mldmj/result.hpp"

using namespace mldmj;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

// Exit codes, stable and documented in the README.
enum ExitCode {
  kOk = 0,
  kVerifyFailure = 1,
  kParse = 2,
  kDimension = 3,
  kPoint = 4,
  kBudget = 5,
  kCharacteristic = 6,
  kNormalization = 7,
};

struct CommonArgs {
  std::string poly;
  std::string gens_points;
  unsigned long characteristic = 0;
  std::string vars;
  std::string point;
  int dim = 0;
  int bound = 0;
  int trunc = kDefaultTrunc;
  bool json_out = false;
  std::uint64_t seed = 0;
  long budget = -1;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Poly> parse_gens(const CommonArgs& a) {
  if (a.poly.empty()) throw ParseError("no polynomial given (use -f)");
  std::vector<std::string> texts = split(a.poly, ';');
  RingPtr ring;
  if (!a.vars.empty()) {
    ring = make_ring(split(a.vars, ','), a.characteristic);
  } else {
    // Infer a common variable list from the joined text.
    std::string joined;
    for (const std::string& t : texts) joined += (joined.empty() ? "" : "+") + t;
    ring = parse_poly_infer(joined, a.characteristic).ring();
  }
  std::vector<Poly> gens;
  for (const std::string& t : texts) gens.push_back(parse_poly(t, ring));
  return gens;
}

std::vector<Coeff> parse_point(const CommonArgs& a, std::size_t n) {
  std::vector<Coeff> pt(n, Coeff::zero(a.characteristic));
  if (a.point.empty()) return pt;
  std::vector<std::string> parts = split(a.point, ',');
  if (parts.size() != n)
    throw ParseError("--point has " + std::to_string(parts.size()) +
                     " coordinates, expected " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    try {
      mpq_class q(parts[i]);
      q.canonicalize();
      pt[i] = Coeff(q, a.characteristic);
    } catch (const std::exception&) {
      throw ParseError("bad point coordinate: " + parts[i]);
    }
  }
  return pt;
}

std::vector<Monomial> parse_lattice_points(const std::string& text) {
  std::vector<Monomial> pts;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
    if (i >= text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in --gens");
    std::size_t close = text.find(')', i);
    if (close == std::string::npos) throw ParseError("unbalanced '(' in --gens");
    Monomial m;
    for (const std::string& c : split(text.substr(i + 1, close - i - 1), ','))
      try {
        m.push_back(std::stoi(c));
      } catch (const std::exception&) {
        throw ParseError("bad lattice coordinate: " + c);
      }
    if (!pts.empty() && pts.back().size() != m.size())
      throw ParseError("inconsistent lattice point dimensions");
    pts.push_back(std::move(m));
    i = close + 1;
  }
  if (pts.empty()) throw ParseError("no lattice points in --gens");
  return pts;
}

json make_report(const CommonArgs& a, const std::string& route,
                 const MldResult& r, const SmProfile* profile, double ms) {
  json j;
  to_json(j, r);
  json point = json::array();
  for (const std::string& c : a.point.empty() ? std::vector<std::string>{}
                                              : split(a.point, ','))
    point.push_back(c);
  j["schema"] = kSchemaVersion;
  j["input"] = {{"poly", a.poly}, {"char", a.characteristic}, {"point", point}};
  j["route"] = route;
  j["time_ms"] = ms;
  if (profile) {
    json pj;
    to_json(pj, *profile);
    j["s_profile"] = pj["entries"];
  }
  return j;
}

void print_certificate(const Certificate& c) {
  std::cout << "certificate: " << cert_kind_name(c.kind);
  switch (c.kind) {
    case CertKind::ToricCovector: {
      std::cout << " p=(";
      for (std::size_t i = 0; i < c.p.size(); ++i)
        std::cout << (i ? "," : "") << c.p[i];
      std::cout << ") kE=" << c.kE << " val=" << c.val;
      break;
    }
    case CertKind::JetLevel:
      std::cout << " level=" << c.level << " s=" << c.s;
      break;
    case CertKind::ClassLabel:
      std::cout << " class=" << c.label;
      if (!c.p.empty()) {
        std::cout << " p=(";
        for (std::size_t i = 0; i < c.p.size(); ++i)
          std::cout << (i ? "," : "") << c.p[i];
        std::cout << ") kE=" << c.kE << " val=" << c.val;
      }
      if (!c.provenance.empty()) std::cout << " [" << c.provenance << "]";
      break;
    case CertKind::BlowupChain:
      std::cout << " " << c.label << " kE=" << c.kE << " val=" << c.val;
      break;
  }
  std::cout << "\n";
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

int cmd_newton(const CommonArgs& a) {
  auto t0 = std::chrono::steady_clock::now();
  NewtonPolygon polygon = [&] {
    if (!a.gens_points.empty())
      return NewtonPolygon(parse_lattice_points(a.gens_points));
    std::vector<Poly> gens = parse_gens(a);
    if (gens.size() != 1) throw ParseError("newton takes one polynomial");
    return NewtonPolygon::of(gens[0]);
  }();
  if (polygon.ambient_dim() > 4)
    throw DimensionTooLarge("newton route limited to 4 variables");

  PolygonMld m = mld_polygon(polygon);
  MldResult r;
  r.finite = m.finite;
  r.value = m.value;
  r.certified = true;
  r.certificate = make_toric_certificate(polygon, m.witness.p, m.finite, m.value);

  if (a.json_out) {
    std::cout << make_report(a, "newton", r, nullptr, elapsed_ms(t0)).dump(2)
              << "\n";
    return kOk;
  }
  std::cout << "vertices:";
  for (const Monomial& v : polygon.vertices()) {
    std::cout << " (";
    for (std::size_t i = 0; i < v.size(); ++i)
      std::cout << (i ? "," : "") << v[i];
    std::cout << ")";
  }
  std::cout << "\ncontains (1,...,1): " << (polygon.contains_one() ? "yes" : "no")
            << "\nmld: " << value_str(r) << "\n";
  print_certificate(r.certificate);
  return kOk;
}

int cmd_jets(const CommonArgs& a) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Poly> gens = parse_gens(a);
  int d = a.dim > 0 ? a.dim : static_cast<int>(gens[0].nvars()) - 1;
  // Hypersurface convention: without --vars, a d-dimensional variety lives
  // in at least d+1 ambient variables; pad the inferred ring.
  if (a.vars.empty() && gens[0].nvars() < static_cast<std::size_t>(d) + 1) {
    std::vector<std::string> names = gens[0].ring()->vars;
    for (std::size_t i = names.size(); i < static_cast<std::size_t>(d) + 1; ++i)
      names.push_back("u" + std::to_string(i));
    RingPtr wide = make_ring(names, a.characteristic);
    std::vector<Poly> assign;
    for (std::size_t i = 0; i < gens[0].nvars(); ++i)
      assign.push_back(Poly::variable(wide, i));
    for (Poly& g : gens) g = g.substitute(assign);
  }
  std::vector<Coeff> pt = parse_point(a, gens[0].nvars());
  int bound = a.bound > 0 ? a.bound : default_jet_bound(d);
  if (bound < 1) throw ParseError("--bound must be >= 1");

  SmProfile profile;
  MldResult r = mld_via_jets(gens, d, pt, bound, a.budget, &profile);

  if (a.json_out) {
    std::cout << make_report(a, "jets", r, &profile, elapsed_ms(t0)).dump(2)
              << "\n";
  } else {
    for (const SmEntry& e : profile.entries)
      std::cout << "s_" << e.m << " = " << e.s << " (" << e.status << ")\n";
    std::cout << "mld" << (r.certified ? "" : " upper bound") << ": "
              << value_str(r) << (r.certified ? " (certified)" : "") << "\n";
    print_certificate(r.certificate);
    if (r.nu_upper) std::cout << "nu upper bound: " << *r.nu_upper << "\n";
  }
  bool any_budget = false, any_computed = false;
  for (const SmEntry& e : profile.entries) {
    if (e.status == "budget-exceeded") any_budget = true;
    if (e.status == "computed") any_computed = true;
  }
  return (any_budget && !r.certified && any_computed) ? kBudget : kOk;
}

int cmd_classify(const CommonArgs& a) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Poly> gens = parse_gens(a);
  std::size_t n = gens[0].nvars();
  std::vector<Coeff> pt = parse_point(a, n);

  MldResult r;
  SurfaceClass cls;
  SmProfile profile;
  bool have_cls = false;
  if (n == 2) {
    if (gens.size() != 1) throw ParseError("curve input takes one polynomial");
    Poly f = gens[0].translate(pt);
    r = classify_curve(f);
  } else if (n == 3 || n == 4) {
    r = dispatch_surface(gens, pt, a.budget, &profile, &cls, a.trunc);
    have_cls = !cls.label.empty();
  } else {
    throw DimensionTooLarge("classify handles 2 (curve) to 4 variables");
  }

  if (a.json_out) {
    json j = make_report(a, "classify", r,
                         profile.entries.empty() ? nullptr : &profile,
                         elapsed_ms(t0));
    if (have_cls) j["class"] = cls.label;
    std::cout << j.dump(2) << "\n";
  } else {
    if (have_cls) std::cout << "class: " << cls.label << "\n";
    std::cout << "mld" << (r.certified ? "" : " upper bound") << ": "
              << value_str(r) << (r.certified ? " (certified)" : "") << "\n";
    print_certificate(r.certificate);
    if (r.nu_upper) std::cout << "nu upper bound: " << *r.nu_upper << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify: replay the fixture corpus, re-checking every certificate at this
// boundary instead of trusting the library.

struct FixtureFailure : Error {
  using Error::Error;
};

void expect(bool ok, const std::string& fixture, const std::string& what) {
  if (!ok) throw FixtureFailure(fixture + ": " + what);
}

void recheck_toric(const MldResult& r, const NewtonPolygon& polygon,
                   const std::string& fixture) {
  if (r.certificate.kind != CertKind::ToricCovector &&
      r.certificate.p.empty())
    return;
  long a = toric_log_discrepancy(polygon, r.certificate.p);
  if (r.finite)
    expect(a <= r.value, fixture, "covector exceeds the claimed value");
  else
    expect(a < 0, fixture, "covector does not certify -infinity");
  expect(pairing(r.certificate.p, Monomial(polygon.ambient_dim(), 1)) - 1 ==
             r.certificate.kE,
         fixture, "kE mismatch");
  expect(polygon.min_pairing(r.certificate.p) == r.certificate.val, fixture,
         "val mismatch");
}

void verify_newton() {
  struct Fx {
    std::string name;
    std::vector<Monomial> gens;
    Covector p;
    long k_plus_val[2];  // <p,1> and <p,Gamma>
  };
  std::vector<Fx> fixtures = {
      {"newton/gamma1", {{2, 0, 0}, {0, 5, 0}, {0, 0, 5}}, {5, 2, 2}, {9, 10}},
      {"newton/gamma2", {{2, 0, 0}, {0, 3, 0}, {0, 0, 7}}, {21, 14, 6}, {41, 42}},
      {"newton/gamma3", {{2, 0, 0}, {0, 3, 1}, {0, 0, 5}}, {15, 8, 6}, {29, 30}},
      {"newton/gamma4", {{2, 0, 0}, {0, 4, 0}, {0, 0, 5}}, {10, 5, 4}, {19, 20}},
  };
  for (const Fx& fx : fixtures) {
    NewtonPolygon polygon(fx.gens);
    expect(pairing(fx.p, Monomial(3, 1)) == fx.k_plus_val[0], fx.name,
           "<p,1> off");
    expect(polygon.min_pairing(fx.p) == fx.k_plus_val[1], fx.name, "<p,Gamma> off");
    expect(toric_log_discrepancy(polygon, fx.p) < 0, fx.name,
           "witness does not certify -infinity");
    PolygonMld m = mld_polygon(polygon);
    expect(!m.finite, fx.name, "optimizer found a finite value");
    expect(toric_log_discrepancy(polygon, m.witness.p) < 0, fx.name,
           "optimizer witness invalid");
  }
  {
    PolygonMld m = mld_polygon(NewtonPolygon::of(parse_poly_infer("x^2+y^2*z", 0)));
    expect(m.finite && m.value == 1, "newton/pinch", "expected mld 1");
  }
  {
    PolygonMld m = mld_polygon(NewtonPolygon({{1, 1, 1}}));
    expect(m.finite && m.value == 0, "newton/ones", "expected mld 0");
  }
}

void verify_curve() {
  struct Fx {
    std::string name, poly;
    bool finite;
    long value;
    long kE;
  };
  std::vector<Fx> fixtures = {
      {"curve/node", "x*y", true, 0, 1},
      {"curve/cusp", "x^2-y^3", false, 0, 4},
      {"curve/triple", "x^3+y^3", false, 0, 1},
      {"curve/smooth", "x-y^2", true, 1, 0},
  };
  for (const Fx& fx : fixtures) {
    Poly f = parse_poly(fx.poly, make_ring({"x", "y"}, 0));
    MldResult r = classify_curve(f);
    expect(r.finite == fx.finite, fx.name, "finiteness mismatch");
    if (fx.finite) expect(r.value == fx.value, fx.name, "value mismatch");
    expect(r.certified, fx.name, "not certified");
    if (fx.kE > 0)
      expect(r.certificate.kE == fx.kE, fx.name, "kE mismatch");
    // The jets route must agree, certified, with bound 5.
    MldResult j = mld_via_jets({f}, 1, {Coeff::zero(0), Coeff::zero(0)}, 5);
    expect(j.certified, fx.name, "jets route not certified");
    expect(j.finite == fx.finite && (!fx.finite || j.value == fx.value),
           fx.name, "jets route disagrees");
  }
}

void verify_surface() {
  struct Fx {
    std::string name, poly, label;
    bool finite;
    long value;
    Covector p;  // empty = no covector expected
  };
  std::vector<Fx> fixtures = {
      {"surface/A-1", "x^2+y*z*(y+z)", "A-1", true, 1, {3, 2, 2}},
      {"surface/A-2", "x^2+y^2*z", "A-2", true, 1, {}},
      {"surface/A-3-1", "x^2+y^3+z^7", "A-3-1", false, 0, {21, 14, 6}},
      {"surface/B-1", "x^2+y*z*(y+z)*(y-z)", "B-1", true, 0, {2, 1, 1}},
      {"surface/B-3-2", "x^2+y^2*z^2", "B-3-2", true, 0, {2, 1, 1}},
      {"surface/B-4", "x^2+y^3*z", "B-4", false, 0, {15, 8, 6}},
      {"surface/B-5", "x^2+y^4+z^5", "B-5", false, 0, {10, 5, 4}},
  };
  RingPtr ring = make_ring({"x", "y", "z"}, 0);
  for (const Fx& fx : fixtures) {
    SurfaceOutcome o = classify_surface_double(parse_poly(fx.poly, ring));
    expect(o.cls.label == fx.label, fx.name,
           "label mismatch: got " + o.cls.label);
    expect(o.result.finite == fx.finite, fx.name, "finiteness mismatch");
    if (fx.finite)
      expect(o.result.value == fx.value, fx.name, "value mismatch");
    expect(o.result.certified, fx.name, "not certified");
    if (!fx.p.empty()) {
      expect(o.result.certificate.p == fx.p, fx.name, "covector mismatch");
      // Re-validate against the polygon of x^2 + h (the normalized model).
      std::vector<Monomial> pts{{2, 0, 0}};
      for (const auto& [m, c] : o.cls.h.terms())
        pts.push_back({0, m[0], m[1]});
      recheck_toric(o.result, NewtonPolygon(pts), fx.name);
    }
  }
}

void verify_jets() {
  // Cone over the degree-4 rational normal curve: emb 5 at 0, s_1 = -1.
  {
    RingPtr r5 = make_ring({"x1", "x2", "x3", "x4", "x5"}, 0);
    std::vector<Poly> gens;
    for (const char* t : {"x1*x3-x2^2", "x1*x4-x2*x3", "x1*x5-x2*x4",
                          "x2*x4-x3^2", "x2*x5-x3*x4", "x3*x5-x4^2"})
      gens.push_back(parse_poly(t, r5));
    std::vector<Coeff> origin(5, Coeff::zero(0));
    expect(embedding_dimension(gens, origin) == 5, "jets/emb5", "emb != 5");
    expect(s_m_at(gens, 2, origin, 1) == -1, "jets/emb5", "s_1 != -1");
  }
  // emb 4, ord 3: s_2 = 6 - 8 = -2.
  {
    RingPtr r4 = make_ring({"x", "y", "z", "w"}, 0);
    std::vector<Poly> gens = {parse_poly("x^3+y^3+z^3+w^3", r4),
                              parse_poly("x*y*z+w^3", r4)};
    std::vector<Coeff> origin(4, Coeff::zero(0));
    expect(s_m_at(gens, 2, origin, 2) == -2, "jets/emb4ord3", "s_2 != -2");
  }
  // ord 4 hypersurface in A^3: X_3(0) = A^9, s_3 = -1 (height 0 via Groebner).
  {
    Poly f = parse_poly_infer("x^4+y^4+z^4", 0);
    std::vector<Coeff> origin(3, Coeff::zero(0));
    expect(s_m_at({f}, 2, origin, 3) == -1, "jets/ord4", "s_3 != -1");
    expect(local_jet_ideal({f}, 3).empty(), "jets/ord4",
           "level-3 local ideal not empty");
  }
  // Node: profile minimum 0, certified at bound 5.
  {
    Poly f = parse_poly_infer("x*y", 0);
    SmProfile profile;
    MldResult r = mld_via_jets({f}, 1, {Coeff::zero(0), Coeff::zero(0)}, 5,
                               -1, &profile);
    expect(r.finite && r.value == 0 && r.certified, "jets/node",
           "expected certified 0");
    for (const SmEntry& e : profile.entries)
      expect(e.s >= 0, "jets/node", "negative s_m for the node");
  }
}

void verify_nondegen() {
  struct Fx {
    std::string name, poly;
    bool nondeg;
  };
  std::vector<Fx> fixtures = {
      {"nondegen/B-3-2", "x^2+y^2*z^2", true},
      {"nondegen/fermat", "x^3+y^3+z^3", true},
      {"nondegen/A-3-1", "x^2+y^3+z^7", true},
      {"nondegen/degenerate", "(y-z)^2+x^3", false},
  };
  for (const Fx& fx : fixtures) {
    NondegenReport rep =
        is_nondegenerate(parse_poly_infer(fx.poly, 0), FaceMode::AllFaces);
    expect(rep.nondegenerate == fx.nondeg, fx.name, "verdict mismatch");
    if (!fx.nondeg)
      expect(rep.failing_face.has_value(), fx.name, "no failing face reported");
  }
}

int cmd_verify(const std::string& filter) {
  struct Group {
    std::string name;
    void (*run)();
  };
  std::vector<Group> groups = {
      {"newton", verify_newton},
      {"curve", verify_curve},
      {"surface", verify_surface},
      {"jets", verify_jets},
      {"nondegen", verify_nondegen},
  };
  int ran = 0;
  for (const Group& g : groups) {
    if (!filter.empty() && g.name.find(filter) == std::string::npos) continue;
    try {
      g.run();
      std::cout << "group " << g.name << ": pass\n";
      ++ran;
    } catch (const FixtureFailure& e) {
      std::cout << "FAIL " << e.what() << "\n";
      return kVerifyFailure;
    }
  }
  if (ran == 0) {
    std::cout << "no fixture group matches filter '" << filter << "'\n";
    return kVerifyFailure;
  }
  std::cout << "all fixtures pass\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// probe: seeded random sampling against the conjectured level bounds. A
// falsification harness, never a proof.

Poly random_poly(std::mt19937_64& rng, const RingPtr& ring, int degree_cap,
                 int terms) {
  std::uniform_int_distribution<int> dcoef(-4, 4);
  std::uniform_int_distribution<int> dexp(0, degree_cap);
  Poly f(ring);
  unsigned long p = ring->characteristic;
  for (int t = 0; t < terms; ++t) {
    Monomial m(ring->nvars());
    int budget_deg = degree_cap;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      int e = dexp(rng) % (budget_deg + 1);
      m[i] = e;
      budget_deg -= e;
    }
    if (total_degree(m) == 0) continue;  // keep f(0) = 0
    int c = dcoef(rng);
    if (c == 0) c = 1;
    f.add_term(m, Coeff(c, p));
  }
  return f;
}

int cmd_probe(const CommonArgs& a, int samples, int degree_cap) {
  if (a.dim != 1 && a.dim != 2) throw ParseError("--dim must be 1 or 2");
  std::mt19937_64 rng(a.seed);
  unsigned long p = a.characteristic;
  std::cout << "probe dim=" << a.dim << " samples=" << samples
            << " degree<=" << degree_cap << " char=" << p
            << " seed=" << a.seed << "\n";

  std::vector<int> level_histogram(64, 0);
  int flagged = 0, budget_failures = 0, skipped = 0;

  // For d = 2 keep drawing until `samples` non-degenerate polynomials have
  // been processed (degenerate draws are discarded, with a cap on attempts).
  int done = 0, attempts = 0;
  while (done < samples && attempts < 100 * samples) {
    ++attempts;
    if (a.dim == 1) {
      RingPtr ring = make_ring({"x", "y"}, p);
      Poly f = random_poly(rng, ring, degree_cap, 5);
      if (f.is_zero()) {
        ++skipped;
        continue;
      }
      ++done;
      MldResult ref = classify_curve(f);
      SmProfile profile;
      MldResult jr;
      try {
        jr = mld_via_jets({f}, 1, {Coeff::zero(p), Coeff::zero(p)}, 5,
                          a.budget, &profile);
      } catch (const ResourceLimit&) {
        ++budget_failures;
        continue;
      }
      int best = -1;
      long bestv = 0;
      for (const SmEntry& e : profile.entries)
        if (e.status == "computed" && (best < 0 || e.s < bestv)) {
          best = e.m;
          bestv = e.s;
        }
      if (best >= 0) ++level_histogram[static_cast<std::size_t>(best)];
      bool agree = jr.finite == ref.finite &&
                   (!jr.finite || jr.value == ref.value);
      if (!agree) ++flagged;  // would mean no m <= 5 computes the mld
    } else {
      RingPtr ring = make_ring({"x", "y", "z"}, p);
      Poly f = random_poly(rng, ring, degree_cap, 6);
      if (f.is_zero()) {
        ++skipped;
        continue;
      }
      NondegenReport rep;
      try {
        rep = is_nondegenerate(f, FaceMode::AllFaces, 200000);
      } catch (const ResourceLimit&) {
        ++budget_failures;
        continue;
      }
      if (!rep.nondegenerate) {
        ++skipped;
        continue;
      }
      ++done;
      NewtonPolygon polygon = NewtonPolygon::of(f);
      PolygonMld toric = mld_polygon(polygon);
      // The certificate must validate.
      make_toric_certificate(polygon, toric.witness.p, toric.finite, toric.value);
      SmProfile profile;
      try {
        mld_via_jets({f}, 2, std::vector<Coeff>(3, Coeff::zero(p)), 4,
                     a.budget > 0 ? a.budget : 200000, &profile);
      } catch (const ResourceLimit&) {
        ++budget_failures;
        continue;
      }
      // A budget-feasible counterexample to C_2 would be a computed s_m
      // strictly below the toric mld.
      for (const SmEntry& e : profile.entries) {
        if (e.status != "computed") continue;
        if (toric.finite ? e.s < toric.value : false) {
          ++flagged;
          break;
        }
        if (e.s < 0) ++level_histogram[static_cast<std::size_t>(e.m)];
      }
    }
  }

  std::cout << "processed: " << done << " (of " << attempts << " draws)\n";
  std::cout << "minimizing-level histogram:";
  for (std::size_t m = 0; m < level_histogram.size(); ++m)
    if (level_histogram[m] > 0)
      std::cout << " " << m << ":" << level_histogram[m];
  std::cout << "\nflagged samples (bound exceeded): " << flagged
            << "\nbudget failures: " << budget_failures
            << "\nskipped: " << skipped << "\nseed: " << a.seed << "\n";
  return kOk;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Mather-Jacobian minimal log discrepancies with certificates"};
  app.require_subcommand(1);

  CommonArgs a;
  int samples = 100, degree_cap = 6;
  std::string filter;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-f,--poly", a.poly,
                    "polynomial, or ';'-separated generator list");
    sub->add_option("--char", a.characteristic, "characteristic (0 or prime)");
    sub->add_option("--vars", a.vars, "comma-separated variable names");
    sub->add_option("--point", a.point, "rational point, comma-separated");
    sub->add_option("--bound", a.bound, "jet level bound");
    sub->add_option("--trunc", a.trunc, "truncation degree for normalization");
    sub->add_flag("--json", a.json_out, "emit the JSON report");
    sub->add_option("--seed", a.seed, "PRNG seed");
    sub->add_option("--budget", a.budget, "Groebner step budget");
  };

  CLI::App* newton = app.add_subcommand("newton", "Newton polygon route");
  add_common(newton);
  newton->add_option("--gens", a.gens_points,
                     "lattice points (a,b,c),(d,e,f),... generating Gamma");

  CLI::App* jets = app.add_subcommand("jets", "jet-scheme s_m route");
  add_common(jets);
  jets->add_option("-d,--dim", a.dim, "dimension of the variety");

  CLI::App* classify = app.add_subcommand("classify", "closed-form route");
  add_common(classify);

  CLI::App* verify = app.add_subcommand("verify", "replay the fixture corpus");
  verify->add_option("--filter", filter, "run only matching fixture groups");

  CLI::App* probe = app.add_subcommand("probe", "random sampling harness");
  add_common(probe);
  probe->add_option("-d,--dim", a.dim, "dimension (1 or 2)");
  probe->add_option("--samples", samples, "sample count");
  probe->add_option("--degree", degree_cap, "degree cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  if (newton->parsed()) return cmd_newton(a);
  if (jets->parsed()) return cmd_jets(a);
  if (classify->parsed()) return cmd_classify(a);
  if (verify->parsed()) return cmd_verify(filter);
  if (probe->parsed()) return cmd_probe(a, samples, degree_cap);
  return kParse;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DimensionTooLarge& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kDimension;
  } catch (const PointNotOnVariety& e) {
    std::cerr << "point error: " << e.what() << "\n";
    return kPoint;
  } catch (const ResourceLimit& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const CharacteristicUnsupported& e) {
    std::cerr << "characteristic error: " << e.what() << "\n";
    return kCharacteristic;
  } catch (const CharacteristicMismatch& e) {
    std::cerr << "characteristic error: " << e.what() << "\n";
    return kCharacteristic;
  } catch (const NormalizationFailed& e) {
    std::cerr << "normalization error: " << e.what() << "\n";
    return kNormalization;
  } catch (const NonSplitInitialForm& e) {
    std::cerr << "normalization error: " << e.what() << "\n";
    return kNormalization;
  } catch (const PrecisionInsufficient& e) {
    std::cerr << "normalization error: " << e.what() << "\n";
    return kNormalization;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailure;
  }
}
