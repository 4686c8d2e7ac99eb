#include "hypermod/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

#include "hypermod/matroid.hpp"
#include "hypermod/partitions.hpp"

namespace hypermod {

namespace {

void check_caps(const Hypergraph& h, int vertex_cap, int edge_cap, const char* who) {
  if (h.vertex_count() > vertex_cap)
    throw CapacityError(std::string(who) + ": " + std::to_string(h.vertex_count()) +
                        " vertices exceeds cap " + std::to_string(vertex_cap));
  if (h.edge_count() > edge_cap)
    throw CapacityError(std::string(who) + ": " + std::to_string(h.edge_count()) +
                        " edges exceeds cap " + std::to_string(edge_cap));
}

std::vector<Rational> to_rational(const std::vector<long>& v) {
  return std::vector<Rational>(v.begin(), v.end());
}

}  // namespace

ExplicitFamily enumerate_hypertrees(const Hypergraph& h, int vertex_cap, int edge_cap) {
  check_caps(h, vertex_cap, edge_cap, "enumerate_hypertrees");
  long need = h.vertex_count() - 1;
  ExplicitFamily fam;
  if (need < 1) return fam;

  std::vector<long> mult(h.edge_count(), 0);
  // Grow independent prefixes only; a hypertree's every prefix is a hyperforest.
  auto rec = [&](auto&& self, int e, long chosen) -> void {
    if (chosen == need) {
      if (is_hypertree(h, mult, vertex_cap)) fam.members.push_back(to_rational(mult));
      return;
    }
    if (e >= h.edge_count() || chosen + (h.edge_count() - e) < need) return;
    self(self, e + 1, chosen);
    mult[e] = 1;
    if (is_hyperforest(h, mult, vertex_cap)) self(self, e + 1, chosen + 1);
    mult[e] = 0;
  };
  rec(rec, 0, 0);
  std::sort(fam.members.begin(), fam.members.end());
  return fam;
}

ExplicitFamily enumerate_multitrees(const Hypergraph& h, int cap, int vertex_cap, int edge_cap) {
  check_caps(h, vertex_cap, edge_cap, "enumerate_multitrees");
  if (cap < 0) cap = h.vertex_count();
  long need = h.vertex_count() - 1;
  ExplicitFamily fam;
  if (need < 1) return fam;

  std::vector<long> mult(h.edge_count(), 0);
  auto rec = [&](auto&& self, int e, long chosen) -> void {
    if (chosen == need) {
      if (is_hypertree(h, mult, vertex_cap)) fam.members.push_back(to_rational(mult));
      return;
    }
    if (e >= h.edge_count()) return;
    if (chosen + static_cast<long>(h.edge_count() - e) * cap < need) return;
    for (long m = 0; m <= std::min<long>(cap, need - chosen); ++m) {
      mult[e] = m;
      if (m == 0 || is_hyperforest(h, mult, vertex_cap)) self(self, e + 1, chosen + m);
    }
    mult[e] = 0;
  };
  rec(rec, 0, 0);
  std::sort(fam.members.begin(), fam.members.end());
  return fam;
}

// ---- exact LP --------------------------------------------------------------

LpResult lp_min(const std::vector<Rational>& objective,
                const std::vector<std::pair<std::vector<Rational>, Rational>>& constraints) {
  int n = static_cast<int>(objective.size());
  int m = static_cast<int>(constraints.size());
  if (n < 1) throw ArgumentError("lp_min: empty objective");
  for (const auto& [row, b] : constraints)
    if (static_cast<int>(row.size()) != n) throw ArgumentError("lp_min: row dimension mismatch");

  bool c_nonneg = std::all_of(objective.begin(), objective.end(),
                              [](const Rational& c) { return c >= 0; });
  if (!c_nonneg) {
    bool a_nonneg = true;
    for (const auto& [row, b] : constraints)
      for (const auto& a : row)
        if (a < 0) a_nonneg = false;
    if (!a_nonneg)
      throw ArgumentError("lp_min: negative objective entries need nonnegative constraint rows");
    // x can grow along the negative-cost coordinate; feasibility only needs
    // every positive bound to be reachable.
    for (const auto& [row, b] : constraints)
      if (b > 0 && std::all_of(row.begin(), row.end(), [](const Rational& a) { return a == 0; }))
        throw InfeasibilityError("lp_min: a positive bound has an all-zero row");
    throw UnboundednessError("lp_min: objective unbounded below on the feasible region");
  }

  // Dual: max b.y  s.t.  A^T y <= c, y >= 0. Slack basis is feasible (c >= 0).
  // Tableau: n rows, columns 0..m-1 = y, m..m+n-1 = slacks, last = rhs.
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(m + n + 1, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) t[i][j] = constraints[j].first[i];
    t[i][m + i] = 1;
    t[i][m + n] = objective[i];
  }
  std::vector<int> basis(n);
  std::iota(basis.begin(), basis.end(), m);
  auto dual_coeff = [&](int j) { return j < m ? constraints[j].second : Rational(0); };

  while (true) {
    int enter = -1;
    for (int j = 0; j < m + n && enter < 0; ++j) {
      Rational r = dual_coeff(j);
      for (int i = 0; i < n; ++i) r -= dual_coeff(basis[i]) * t[i][j];
      if (r > 0) enter = j;  // Bland: first improving column
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < n; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][m + n] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw InfeasibilityError("lp_min: no feasible point");
    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (int j = 0; j <= m + n; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  LpResult res;
  res.argmin.assign(n, Rational(0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) res.argmin[j] += dual_coeff(basis[i]) * t[i][m + j];
  res.value = 0;
  for (int j = 0; j < n; ++j) res.value += objective[j] * res.argmin[j];

  Rational dual_obj(0);
  for (int i = 0; i < n; ++i) dual_obj += dual_coeff(basis[i]) * t[i][m + n];
  if (dual_obj != res.value) throw ConsistencyError("lp_min: duality gap in exact simplex");
  for (const auto& [row, b] : constraints) {
    Rational lhs(0);
    for (int j = 0; j < n; ++j) lhs += row[j] * res.argmin[j];
    if (lhs < b) throw ConsistencyError("lp_min: simplex returned an infeasible point");
  }
  for (const auto& x : res.argmin)
    if (x < 0) throw ConsistencyError("lp_min: simplex returned a negative coordinate");
  return res;
}

// ---- exact min-norm point --------------------------------------------------

namespace {

// Solves the bordered KKT system [2G 1; 1^T 0] (alpha; mu) = (0; 1) exactly.
std::vector<Rational> affine_minimizer(const std::vector<std::vector<Rational>>& gram) {
  int s = static_cast<int>(gram.size());
  int dim = s + 1;
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(dim + 1, Rational(0)));
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) a[i][j] = 2 * gram[i][j];
    a[i][s] = 1;
  }
  for (int j = 0; j < s; ++j) a[s][j] = 1;
  a[s][dim] = 1;

  for (int col = 0; col < dim; ++col) {
    int piv = -1;
    for (int i = col; i < dim; ++i)
      if (a[i][col] != 0) { piv = i; break; }
    if (piv < 0) throw ConsistencyError("qp_min_norm: affinely dependent support");
    std::swap(a[col], a[piv]);
    Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (int i = 0; i < dim; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (int j = col; j <= dim; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<Rational> alpha(s);
  for (int i = 0; i < s; ++i) alpha[i] = a[i][dim];
  return alpha;
}

}  // namespace

QpResult qp_min_norm(const ExplicitFamily& hull, const std::vector<Rational>& scale) {
  const auto& mem = hull.members;
  if (mem.empty()) throw ArgumentError("qp_min_norm: empty hull");
  if (mem.size() > 10'000) throw CapacityError("qp_min_norm: more than 10^4 members");
  int n = static_cast<int>(mem.front().size());
  if (static_cast<int>(scale.size()) != n) throw ArgumentError("qp_min_norm: scale size mismatch");
  for (const auto& s : scale)
    if (s <= 0) throw ArgumentError("qp_min_norm: scale entries must be positive");
  for (const auto& v : mem)
    if (static_cast<int>(v.size()) != n) throw ArgumentError("qp_min_norm: ragged members");

  auto ip = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
    Rational out(0);
    for (int e = 0; e < n; ++e) out += u[e] * v[e] / scale[e];
    return out;
  };

  // Start at the member of least norm.
  int start = 0;
  Rational start_norm = ip(mem[0], mem[0]);
  for (int k = 1; k < static_cast<int>(mem.size()); ++k) {
    Rational norm = ip(mem[k], mem[k]);
    if (norm < start_norm) { start = k; start_norm = norm; }
  }
  std::vector<int> support{start};
  std::vector<Rational> lambda{Rational(1)};
  std::vector<Rational> x = mem[start];

  auto rebuild_x = [&] {
    x.assign(n, Rational(0));
    for (size_t i = 0; i < support.size(); ++i)
      for (int e = 0; e < n; ++e) x[e] += lambda[i] * mem[support[i]][e];
  };

  for (long major = 0; major < 100'000; ++major) {
    Rational xx = ip(x, x);
    int q = -1;
    Rational best;
    for (int k = 0; k < static_cast<int>(mem.size()); ++k) {
      Rational v = ip(x, mem[k]);
      if (q < 0 || v < best) { q = k; best = v; }
    }
    if (best >= xx) break;
    if (std::find(support.begin(), support.end(), q) != support.end())
      throw ConsistencyError("qp_min_norm: improving direction already in support");
    support.push_back(q);
    lambda.push_back(Rational(0));

    while (true) {
      int s = static_cast<int>(support.size());
      std::vector<std::vector<Rational>> gram(s, std::vector<Rational>(s));
      for (int i = 0; i < s; ++i)
        for (int j = i; j < s; ++j) gram[i][j] = gram[j][i] = ip(mem[support[i]], mem[support[j]]);
      std::vector<Rational> alpha = affine_minimizer(gram);
      if (std::all_of(alpha.begin(), alpha.end(), [](const Rational& a) { return a > 0; })) {
        lambda = alpha;
        rebuild_x();
        break;
      }
      Rational theta(1);
      for (int i = 0; i < s; ++i)
        if (alpha[i] <= 0) theta = std::min(theta, Rational(lambda[i] / (lambda[i] - alpha[i])));
      std::vector<int> ns;
      std::vector<Rational> nl;
      for (int i = 0; i < s; ++i) {
        Rational li = (1 - theta) * lambda[i] + theta * alpha[i];
        if (li > 0) { ns.push_back(support[i]); nl.push_back(li); }
      }
      support = std::move(ns);
      lambda = std::move(nl);
      rebuild_x();
    }
  }
  return {ip(x, x), x};
}

// ---- vertex enumeration ----------------------------------------------------

namespace {

using Bits = std::vector<std::uint64_t>;

bool subset_of(const Bits& a, const Bits& b) {  // a subseteq b (as zero sets)
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

void normalize_ray(std::vector<Rational>& z) {
  Rational sum(0);
  for (const auto& v : z) sum += v;  // all components nonnegative here
  if (sum != 0)
    for (auto& v : z) v /= sum;
}

}  // namespace

std::vector<std::vector<Rational>> cone_vertices(const std::vector<std::vector<Rational>>& rows,
                                                 const std::vector<Rational>& rhs, int dim) {
  if (rows.size() != rhs.size()) throw ArgumentError("cone_vertices: rows/rhs mismatch");
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != dim) throw ArgumentError("cone_vertices: row dimension");

  // Homogenize: z = (x0, x), cone constraints z >= 0 componentwise and
  // rows[i].x - rhs[i] x0 >= 0. Start from the orthant with its unit rays.
  int d = dim + 1;
  std::vector<std::vector<Rational>> cons;
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> c(d, Rational(0));
    c[i] = 1;
    cons.push_back(std::move(c));
  }
  std::vector<std::vector<Rational>> rays;
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> r(d, Rational(0));
    r[i] = 1;
    rays.push_back(std::move(r));
  }

  for (size_t ci = 0; ci < rows.size(); ++ci) {
    std::vector<Rational> c(d);
    c[0] = -rhs[ci];
    for (int j = 0; j < dim; ++j) c[j + 1] = rows[ci][j];

    std::vector<Rational> val(rays.size());
    for (size_t r = 0; r < rays.size(); ++r) {
      val[r] = 0;
      for (int j = 0; j < d; ++j) val[r] += c[j] * rays[r][j];
    }

    // Zero sets over the constraints processed so far, for adjacency tests.
    size_t words = (cons.size() + 63) / 64;
    std::vector<Bits> zero(rays.size(), Bits(words, 0));
    for (size_t r = 0; r < rays.size(); ++r)
      for (size_t k = 0; k < cons.size(); ++k) {
        Rational v(0);
        for (int j = 0; j < d; ++j) v += cons[k][j] * rays[r][j];
        if (v == 0) zero[r][k / 64] |= std::uint64_t(1) << (k % 64);
      }

    std::vector<std::vector<Rational>> next;
    for (size_t r = 0; r < rays.size(); ++r)
      if (val[r] >= 0) next.push_back(rays[r]);
    for (size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (size_t q = 0; q < rays.size(); ++q) {
        if (val[q] >= 0) continue;
        Bits common(words);
        for (size_t w = 0; w < words; ++w) common[w] = zero[p][w] & zero[q][w];
        bool adjacent = true;
        for (size_t t = 0; t < rays.size() && adjacent; ++t)
          if (t != p && t != q && subset_of(common, zero[t])) adjacent = false;
        if (!adjacent) continue;
        std::vector<Rational> nr(d);
        for (int j = 0; j < d; ++j) nr[j] = val[p] * rays[q][j] - val[q] * rays[p][j];
        normalize_ray(nr);
        next.push_back(std::move(nr));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rays = std::move(next);
    cons.push_back(std::move(c));
  }

  std::vector<std::vector<Rational>> verts;
  for (const auto& r : rays) {
    if (r[0] == 0) continue;  // recession direction
    std::vector<Rational> x(dim);
    for (int j = 0; j < dim; ++j) x[j] = r[j + 1] / r[0];
    verts.push_back(std::move(x));
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

std::vector<std::vector<Rational>> polyhedron_vertices(const Hypergraph& h, int vertex_cap,
                                                       int edge_cap) {
  check_caps(h, vertex_cap, edge_cap, "polyhedron_vertices");
  int n = h.edge_count();

  // One row per distinct cut set, with the largest |P|-1 seen for it.
  std::map<std::vector<int>, long> by_cut;
  for_each_partition(
      h, 2,
      [&](const Partition& p) {
        auto it = by_cut.find(p.cut);
        long bound = p.size() - 1;
        if (it == by_cut.end())
          by_cut.emplace(p.cut, bound);
        else
          it->second = std::max(it->second, bound);
        return true;
      },
      vertex_cap);

  std::vector<std::pair<std::vector<int>, long>> kept(by_cut.begin(), by_cut.end());
  // Drop rows implied by a subset cut with an equal-or-larger bound.
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (size_t i = 0; i < kept.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < kept.size() && !dominated; ++j) {
      if (i == j) continue;
      if (kept[j].second >= kept[i].second &&
          std::includes(kept[i].first.begin(), kept[i].first.end(), kept[j].first.begin(),
                        kept[j].first.end()) &&
          (kept[j].second > kept[i].second || kept[j].first != kept[i].first))
        dominated = true;
    }
    if (dominated) continue;
    std::vector<Rational> row(n, Rational(0));
    for (int e : kept[i].first) row[e] = 1;
    rows.push_back(std::move(row));
    rhs.emplace_back(kept[i].second);
  }
  return cone_vertices(rows, rhs, n);
}

}  // namespace hypermod
