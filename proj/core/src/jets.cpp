#include "mldmj/jets.hpp"

#include <algorithm>

#include "mldmj/errors.hpp"
#include "mldmj/groebner.hpp"

namespace mldmj {
namespace {

RingPtr jet_ring(const RingPtr& base, int m) {
  std::vector<std::string> vars;
  for (const std::string& v : base->vars)
    for (int j = 0; j <= m; ++j) vars.push_back(v + "_" + std::to_string(j));
  return make_ring(std::move(vars), base->characteristic);
}

// Truncated power series in t with Poly coefficients, length m+1.
using TSeries = std::vector<Poly>;

TSeries series_mul(const TSeries& a, const TSeries& b) {
  std::size_t len = a.size();
  TSeries r(len, Poly(a[0].ring()));
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < len; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

int jet_weight(const Monomial& mono, std::size_t N, int m) {
  int w = 0;
  for (std::size_t i = 0; i < N; ++i)
    for (int j = 0; j <= m; ++j) w += mono[jet_var_index(i, j, m)] * j;
  return w;
}

JetSystem jet_equations(const std::vector<Poly>& gens, int m) {
  if (gens.empty()) throw Error("jet equations need at least one generator");
  if (m < 0) throw Error("negative jet level");
  JetSystem sys;
  sys.N = gens[0].nvars();
  sys.m = m;
  sys.ring = jet_ring(gens[0].ring(), m);

  // x_i as a truncated series sum_j x_i^(j) t^j.
  std::vector<TSeries> series(sys.N);
  for (std::size_t i = 0; i < sys.N; ++i) {
    TSeries s(static_cast<std::size_t>(m + 1), Poly(sys.ring));
    for (int j = 0; j <= m; ++j)
      s[static_cast<std::size_t>(j)] =
          Poly::variable(sys.ring, jet_var_index(i, j, m));
    series[i] = std::move(s);
  }

  for (const Poly& f : gens) {
    TSeries acc(static_cast<std::size_t>(m + 1), Poly(sys.ring));
    for (const auto& [mono, c] : f.terms()) {
      TSeries term(static_cast<std::size_t>(m + 1), Poly(sys.ring));
      term[0] = Poly::constant(sys.ring, c);
      for (std::size_t i = 0; i < sys.N; ++i)
        for (int e = 0; e < mono[i]; ++e) term = series_mul(term, series[i]);
      for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += term[j];
    }
    sys.equations.push_back(std::move(acc));
  }
  return sys;
}

JetSystem localize_at_origin(JetSystem sys) {
  if (sys.local) throw Error("jet system already local");
  sys.local = true;
  for (auto& eqs : sys.equations) {
    std::vector<Poly> kept;
    for (Poly& f : eqs) {
      Poly g(sys.ring);
      for (const auto& [mono, c] : f.terms()) {
        bool kills = false;
        for (std::size_t i = 0; i < sys.N; ++i)
          if (mono[jet_var_index(i, 0, sys.m)] > 0) kills = true;
        if (!kills) g.add_term(mono, c);
      }
      if (!g.is_zero()) kept.push_back(std::move(g));
    }
    eqs = std::move(kept);
  }
  return sys;
}

std::vector<Poly> local_jet_ideal(const std::vector<Poly>& gens, int m) {
  for (const Poly& f : gens) {
    std::vector<Coeff> origin(f.nvars(), Coeff::zero(f.characteristic()));
    if (!f.evaluate(origin).is_zero())
      throw PointNotOnVariety("generator does not vanish at the origin");
  }
  JetSystem sys = localize_at_origin(jet_equations(gens, m));

  // Re-express in the ring of the weight >= 1 variables only.
  const RingPtr& base = gens[0].ring();
  std::vector<std::string> vars;
  for (const std::string& v : base->vars)
    for (int j = 1; j <= m; ++j) vars.push_back(v + "_" + std::to_string(j));
  RingPtr local = make_ring(std::move(vars), base->characteristic);

  std::vector<Poly> out;
  for (const auto& eqs : sys.equations) {
    for (const Poly& f : eqs) {
      Poly g(local);
      for (const auto& [mono, c] : f.terms()) {
        Monomial nm(local->nvars(), 0);
        for (std::size_t i = 0; i < sys.N; ++i)
          for (int j = 1; j <= m; ++j)
            nm[i * static_cast<std::size_t>(m) + static_cast<std::size_t>(j - 1)] =
                mono[jet_var_index(i, j, m)];
        g.add_term(nm, c);
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

namespace {

std::vector<Poly> translate_to_origin(const std::vector<Poly>& gens,
                                      const std::vector<Coeff>& point) {
  std::vector<Poly> out;
  for (const Poly& f : gens) {
    if (point.size() != f.nvars()) throw Error("point has the wrong length");
    if (!f.evaluate(point).is_zero())
      throw PointNotOnVariety("point is not on the variety");
    out.push_back(f.translate(point));
  }
  return out;
}

long s_m_origin(const std::vector<Poly>& gens, int d, int m, long budget) {
  std::vector<Poly> ideal = local_jet_ideal(gens, m);
  std::size_t nvars = gens[0].nvars() * static_cast<std::size_t>(m);
  GroebnerOptions opts;
  opts.step_budget = budget;
  std::vector<Poly> gb = groebner_basis(ideal, opts);
  int dim;
  if (gb.empty()) {
    dim = static_cast<int>(nvars);
  } else {
    dim = ideal_dimension(gb, opts.order);
    if (dim < 0) throw Error("local jet ideal is the unit ideal");
  }
  return static_cast<long>(m + 1) * d - dim;
}

}  // namespace

long s_m_at(const std::vector<Poly>& gens, int d, const std::vector<Coeff>& point,
            int m, long budget) {
  return s_m_origin(translate_to_origin(gens, point), d, m, budget);
}

int embedding_dimension(const std::vector<Poly>& gens,
                        const std::vector<Coeff>& point) {
  std::vector<Poly> at0 = translate_to_origin(gens, point);
  std::size_t N = gens[0].nvars();
  // Rank of the Jacobian at the origin = rank of the linear parts.
  std::vector<std::vector<Coeff>> rows;
  for (const Poly& f : at0) {
    std::vector<Coeff> row;
    for (std::size_t i = 0; i < N; ++i) {
      Monomial e(N, 0);
      e[i] = 1;
      row.push_back(f.coeff(e));
    }
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < N && rank < rows.size(); ++col) {
    std::size_t piv = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (!rows[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Coeff f = rows[r][col] / rows[rank][col];
      for (std::size_t c2 = col; c2 < N; ++c2)
        rows[r][c2] -= f * rows[rank][c2];
    }
    ++rank;
  }
  return static_cast<int>(N - rank);
}

int order_of_ideal(const std::vector<Poly>& gens, const std::vector<Coeff>& point) {
  if (gens.empty()) throw Error("order of the empty generating set");
  std::vector<Poly> at0 = translate_to_origin(gens, point);
  int best = -1;
  for (const Poly& f : at0) {
    auto mu = f.multiplicity();
    if (!mu) continue;
    if (best < 0 || *mu < best) best = *mu;
  }
  if (best < 0) throw ZeroPolynomial("every generator is zero");
  return best;
}

long initial_ideal_jets(const std::vector<Poly>& gens, int d, int m, long budget) {
  std::vector<Coeff> origin(gens[0].nvars(), Coeff::zero(gens[0].characteristic()));
  int alpha = order_of_ideal(gens, origin);
  std::vector<Poly> inits;
  for (const Poly& f : gens) {
    auto mu = f.multiplicity();
    if (mu && *mu == alpha) inits.push_back(f.initial_form());
  }
  return s_m_origin(inits, d, m, budget);
}

int default_jet_bound(int d) { return d >= 2 ? 8 : 5; }

MldResult mld_via_jets(const std::vector<Poly>& gens, int d,
                       const std::vector<Coeff>& point, int bound, long budget,
                       SmProfile* profile) {
  if (bound < 1) throw Error("jet level bound must be >= 1");
  std::vector<Poly> at0 = translate_to_origin(gens, point);
  unsigned long p = gens[0].characteristic();

  SmProfile prof;
  prof.d = d;
  long best = 0;
  int best_m = -1;
  bool negative = false;
  for (int m = 1; m <= bound && !negative; ++m) {
    try {
      long s = s_m_origin(at0, d, m, budget);
      prof.entries.push_back({m, s, "computed"});
      if (best_m < 0 || s < best) {
        best = s;
        best_m = m;
      }
      if (s < 0) negative = true;
    } catch (const ResourceLimit&) {
      prof.entries.push_back({m, 0, "budget-exceeded"});
    }
  }
  if (profile) *profile = prof;
  if (best_m < 0)
    throw ResourceLimit("no jet level computed within budget");

  MldResult r;
  r.certificate.kind = CertKind::JetLevel;
  r.certificate.level = best_m;
  r.certificate.s = best;
  r.nu_upper = best_m + 1;
  if (best < 0) {
    r.finite = false;
    r.certified = true;
  } else {
    r.finite = true;
    r.value = best;
    r.certified = (d == 1 && bound >= 5) || (d == 2 && p != 2 && bound >= 41);
  }
  return r;
}

void to_json(nlohmann::json& j, const SmEntry& e) {
  j = nlohmann::json{{"m", e.m}, {"s", e.s}, {"status", e.status}};
}

void to_json(nlohmann::json& j, const SmProfile& p) {
  j = nlohmann::json{{"d", p.d}, {"levels", p.entries}};
}

}  // namespace mldmj
