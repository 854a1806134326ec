#include "mldmj/newton.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mldmj/errors.hpp"

namespace mldmj {

long pairing(const Covector& p, const Monomial& v) {
  long s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * v[i];
  return s;
}

Covector primitive_covector(Covector p) {
  long g = 0;
  for (long x : p) g = std::gcd(g, x);
  if (g > 1)
    for (long& x : p) x /= g;
  return p;
}

namespace {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

int qrank(QMat m) {
  if (m.empty()) return 0;
  std::size_t cols = m[0].size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    std::size_t piv = m.size();
    for (std::size_t i = static_cast<std::size_t>(r); i < m.size(); ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == m.size()) continue;
    std::swap(m[static_cast<std::size_t>(r)], m[piv]);
    QVec& row = m[static_cast<std::size_t>(r)];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (static_cast<int>(i) == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c] / row[c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * row[j];
    }
    ++r;
  }
  return r;
}

// If the nullspace of m (rows are functionals on Q^cols) is 1-dimensional,
// store a spanning vector and return true.
bool nullspace1(const QMat& m, std::size_t cols, QVec* out) {
  QMat a = m;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = a.size();
    for (std::size_t i = r; i < a.size(); ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    mpq_class d = a[r][c];
    for (std::size_t j = 0; j < cols; ++j) a[r][j] /= d;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (cols - r != 1) return false;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::size_t free_col = 0;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_col = c;
  QVec v(cols, mpq_class(0));
  v[free_col] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i)
    v[pivot_col[i]] = -a[i][free_col];
  *out = std::move(v);
  return true;
}

std::vector<long> integralize(const QVec& v) {
  mpz_class l(1);
  for (const mpq_class& q : v)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  mpz_class g(0);
  std::vector<mpz_class> w;
  for (const mpq_class& q : v) {
    mpz_class z = mpz_class(q * l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    w.push_back(z);
  }
  std::vector<long> out;
  for (mpz_class& z : w) {
    if (g > 1) z /= g;
    if (!z.fits_slong_p()) throw Error("covector entry overflow");
    out.push_back(z.get_si());
  }
  return out;
}

// All size-k index subsets of [0, n), visited via callback.
template <typename F>
void for_subsets(std::size_t n, std::size_t k, F&& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

NewtonPolygon::NewtonPolygon(std::vector<Monomial> points) {
  if (points.empty()) throw ZeroPolynomial("Newton polygon of the empty set");
  n_ = points[0].size();
  for (const Monomial& m : points) {
    if (m.size() != n_) throw Error("inconsistent exponent lengths");
    for (int e : m)
      if (e < 0) throw Error("negative exponent");
  }
  if (n_ == 0) throw Error("Newton polygon needs at least one variable");

  // Keep only undominated points.
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const Monomial& m : points) {
    bool dominated = false;
    for (const Monomial& w : points)
      if (w != m && divides(w, m)) dominated = true;
    if (!dominated) gens_.push_back(m);
  }

  // Homogenized cone generators: (v, 1) for points, (e_i, 0) for recession.
  QMat rows;
  for (const Monomial& v : gens_) {
    QVec r;
    for (int e : v) r.emplace_back(e);
    r.emplace_back(1);
    rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    QVec r(n_ + 1, mpq_class(0));
    r[i] = 1;
    rows.push_back(std::move(r));
  }

  std::map<Covector, long> seen;
  for_subsets(rows.size(), n_, [&](const std::vector<std::size_t>& idx) {
    QMat sub;
    for (std::size_t i : idx) sub.push_back(rows[i]);
    QVec w;
    if (!nullspace1(sub, n_ + 1, &w)) return;
    std::vector<long> normal = integralize(w);

    long sign = 0;
    QMat equal_rows;
    for (const QVec& r : rows) {
      mpq_class dot(0);
      for (std::size_t j = 0; j <= n_; ++j) dot += r[j] * normal[j];
      if (dot == 0) {
        equal_rows.push_back(r);
      } else if (dot > 0) {
        if (sign < 0) return;
        sign = 1;
      } else {
        if (sign > 0) return;
        sign = -1;
      }
    }
    if (sign < 0)
      for (long& x : normal) x = -x;
    if (qrank(equal_rows) != static_cast<int>(n_)) return;

    Covector p(normal.begin(), normal.begin() + static_cast<long>(n_));
    bool zero = std::all_of(p.begin(), p.end(), [](long x) { return x == 0; });
    if (zero) return;
    seen.emplace(std::move(p), -normal[n_]);
  });
  for (auto& [p, c] : seen) facets_.push_back({p, c});

  for (const Monomial& v : gens_) {
    QMat active;
    for (const Facet& f : facets_) {
      if (pairing(f.normal, v) != f.offset) continue;
      QVec r;
      for (long x : f.normal) r.emplace_back(x);
      active.push_back(std::move(r));
    }
    if (qrank(active) == static_cast<int>(n_)) vertices_.push_back(v);
  }
}

NewtonPolygon NewtonPolygon::of(const Poly& f) {
  if (f.is_zero()) throw ZeroPolynomial("Newton polygon of 0");
  std::vector<Monomial> pts;
  for (const auto& [m, c] : f.terms()) pts.push_back(m);
  return NewtonPolygon(std::move(pts));
}

bool NewtonPolygon::contains(const Monomial& x) const {
  for (const Facet& f : facets_)
    if (pairing(f.normal, x) < f.offset) return false;
  return true;
}

bool NewtonPolygon::contains_one() const {
  return contains(Monomial(n_, 1));
}

long NewtonPolygon::min_pairing(const Covector& p) const {
  for (long x : p)
    if (x < 0) throw Error("min_pairing needs a nonnegative covector");
  long best = pairing(p, gens_[0]);
  for (const Monomial& v : gens_) best = std::min(best, pairing(p, v));
  return best;
}

std::vector<Face> NewtonPolygon::faces(bool compact_only) const {
  std::vector<Face> out;
  std::set<std::vector<std::size_t>> keys;
  for (std::size_t k = 1; k <= std::min(n_, facets_.size()); ++k) {
    for_subsets(facets_.size(), k, [&](const std::vector<std::size_t>& idx) {
      // The intersection of the chosen facets is the argmin face of the sum
      // of their normals.
      Covector q(n_, 0);
      for (std::size_t fi : idx)
        for (std::size_t j = 0; j < n_; ++j) q[j] += facets_[fi].normal[j];
      long mq = min_pairing(q);
      std::vector<const Monomial*> vmin;
      for (const Monomial& v : vertices_)
        if (pairing(q, v) == mq) vmin.push_back(&v);

      // Full active set: facets containing every minimizing vertex and every
      // unbounded direction e_i with q_i = 0.
      std::vector<std::size_t> active;
      for (std::size_t fj = 0; fj < facets_.size(); ++fj) {
        const Facet& f = facets_[fj];
        bool contains_face = true;
        for (const Monomial* v : vmin)
          if (pairing(f.normal, *v) != f.offset) contains_face = false;
        for (std::size_t j = 0; j < n_; ++j)
          if (q[j] == 0 && f.normal[j] != 0) contains_face = false;
        if (contains_face) active.push_back(fj);
      }
      if (!keys.insert(active).second) return;

      Covector p(n_, 0);
      for (std::size_t fj : active)
        for (std::size_t j = 0; j < n_; ++j) p[j] += facets_[fj].normal[j];
      bool compact =
          std::all_of(p.begin(), p.end(), [](long x) { return x > 0; });
      if (compact_only && !compact) return;
      p = primitive_covector(std::move(p));
      Face face;
      face.value = min_pairing(p);
      face.covector = std::move(p);
      face.compact = compact;
      for (const Monomial& g : gens_)
        if (pairing(face.covector, g) == face.value) face.points.push_back(g);
      out.push_back(std::move(face));
    });
  }
  return out;
}

Poly face_restriction(const Poly& f, const Face& face) {
  Poly r(f.ring());
  for (const auto& [m, c] : f.terms())
    if (pairing(face.covector, m) == face.value) r.add_term(m, c);
  return r;
}

namespace {

long dot(const Covector& a, const Covector& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Extreme rays of {p >= 0 : <r, p> >= 0 for the given rows}.
std::vector<Covector> cone_rays(const std::vector<Covector>& rows, std::size_t n) {
  QMat qrows;
  for (const Covector& r : rows) {
    QVec q;
    for (long x : r) q.emplace_back(x);
    qrows.push_back(std::move(q));
  }
  std::set<Covector> rays;
  for_subsets(qrows.size(), n - 1, [&](const std::vector<std::size_t>& idx) {
    QMat sub;
    for (std::size_t i : idx) sub.push_back(qrows[i]);
    QVec w;
    if (!nullspace1(sub, n, &w)) return;
    std::vector<long> d = integralize(w);
    Covector dir(d.begin(), d.end());
    auto ok = [&](const Covector& v) {
      for (const Covector& r : rows)
        if (dot(r, v) < 0) return false;
      return true;
    };
    if (ok(dir)) {
      rays.insert(primitive_covector(dir));
    } else {
      for (long& x : dir) x = -x;
      if (ok(dir)) rays.insert(primitive_covector(dir));
    }
  });
  return {rays.begin(), rays.end()};
}

void enumerate_box(const std::vector<long>& bound,
                   const std::vector<Covector>& rows, Covector& cur,
                   std::size_t coord, std::vector<Covector>& out) {
  std::size_t n = bound.size();
  if (coord == n) {
    if (std::any_of(cur.begin(), cur.end(), [](long x) { return x != 0; }))
      out.push_back(cur);
    return;
  }
  for (long v = 0; v <= bound[coord]; ++v) {
    cur[coord] = v;
    // Infeasibility pruning: a constraint that cannot recover even with the
    // largest remaining coordinates rules out the whole subtree.
    bool feasible = true;
    for (const Covector& r : rows) {
      long s = 0;
      for (std::size_t j = 0; j <= coord; ++j) s += r[j] * cur[j];
      for (std::size_t j = coord + 1; j < n; ++j)
        if (r[j] > 0) s += r[j] * bound[j];
      if (s < 0) {
        feasible = false;
        break;
      }
    }
    if (feasible) enumerate_box(bound, rows, cur, coord + 1, out);
  }
  cur[coord] = 0;
}

}  // namespace

PolygonMld mld_polygon(const NewtonPolygon& polygon) {
  const std::size_t n = polygon.ambient_dim();
  const Monomial ones(n, 1);

  if (!polygon.contains_one()) {
    const Facet* bad = nullptr;
    for (const Facet& f : polygon.facets())
      if (pairing(f.normal, ones) < f.offset) bad = &f;
    Covector p(n, 1);
    for (long K = 1;; K *= 2) {
      for (std::size_t i = 0; i < n; ++i) p[i] = K * bad->normal[i] + 1;
      long k = pairing(p, ones);
      long val = polygon.min_pairing(p);
      if (k - val < 0) {
        p = primitive_covector(std::move(p));
        k = pairing(p, ones);
        val = polygon.min_pairing(p);
        return {false, 0, {std::move(p), k, val}};
      }
      if (K > (1L << 50)) throw Error("no negative covector found");
    }
  }

  auto disc = [&](const Covector& p) {
    return pairing(p, ones) - polygon.min_pairing(p);
  };

  std::set<Covector> candidates;
  candidates.insert(Covector(n, 1));
  for (const Monomial& v : polygon.vertices()) {
    std::vector<Covector> rows;
    for (std::size_t i = 0; i < n; ++i) {
      Covector e(n, 0);
      e[i] = 1;
      rows.push_back(std::move(e));
    }
    for (const Monomial& w : polygon.vertices()) {
      if (w == v) continue;
      Covector r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = w[i] - v[i];
      rows.push_back(std::move(r));
    }
    std::vector<Covector> rays = cone_rays(rows, n);
    std::vector<long> bound(n, 0);
    for (const Covector& r : rays)
      for (std::size_t i = 0; i < n; ++i) bound[i] += r[i];
    double volume = 1;
    for (long b : bound) volume *= static_cast<double>(b + 1);
    if (volume > 2e7)
      throw ResourceLimit("normal cone lattice enumeration too large");

    std::vector<Covector> grid;
    Covector cur(n, 0);
    enumerate_box(bound, rows, cur, 0, grid);
    std::sort(grid.begin(), grid.end(), [](const Covector& a, const Covector& b) {
      long sa = std::accumulate(a.begin(), a.end(), 0L);
      long sb = std::accumulate(b.begin(), b.end(), 0L);
      return sa != sb ? sa < sb : a < b;
    });

    // Irreducible elements generate the monoid: anything else splits off a
    // smaller kept element with the difference still in the cone.
    std::vector<Covector> basis;
    for (const Covector& h : grid) {
      bool reducible = false;
      for (const Covector& g : basis) {
        Covector d(n);
        bool nonneg = true, nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
          d[i] = h[i] - g[i];
          if (d[i] < 0) nonneg = false;
          if (d[i] != 0) nonzero = true;
        }
        if (!nonneg || !nonzero) continue;
        bool in_cone = true;
        for (const Covector& r : rows)
          if (dot(r, d) < 0) in_cone = false;
        if (in_cone) {
          reducible = true;
          break;
        }
      }
      if (!reducible) basis.push_back(h);
    }

    // Sums of up to n distinct basis elements cover a strictly positive
    // minimizer in this cone.
    std::size_t kmax = std::min(n, basis.size());
    for (std::size_t k = 1; k <= kmax; ++k) {
      for_subsets(basis.size(), k, [&](const std::vector<std::size_t>& idx) {
        Covector s(n, 0);
        for (std::size_t bi : idx)
          for (std::size_t i = 0; i < n; ++i) s[i] += basis[bi][i];
        if (std::any_of(s.begin(), s.end(), [](long x) { return x <= 0; }))
          return;
        candidates.insert(primitive_covector(std::move(s)));
      });
    }
  }

  const Covector* best = nullptr;
  long best_disc = 0;
  for (const Covector& p : candidates) {
    long d = disc(p);
    if (d < 0) throw Error("negative discrepancy despite 1 in the polygon");
    if (!best || d < best_disc || (d == best_disc && p < *best)) {
      best = &p;
      best_disc = d;
    }
  }
  Covector p = *best;
  long k = pairing(p, ones);
  long val = polygon.min_pairing(p);
  return {true, best_disc, {std::move(p), k, val}};
}

}  // namespace mldmj
