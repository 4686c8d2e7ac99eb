#include "hypermod/modulus.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "hypermod/matroid.hpp"
#include "hypermod/metrics.hpp"

namespace hypermod {

namespace {

std::vector<Rational> to_rational(const std::vector<long>& v) {
  return std::vector<Rational>(v.begin(), v.end());
}

std::vector<Rational> default_weights(const Hypergraph& h) {
  std::vector<Rational> w;
  for (int e = 0; e < h.edge_count(); ++e) w.push_back(h.weight(e));
  return w;
}

void check_weights(const std::vector<Rational>& w, int n, const char* who) {
  if (static_cast<int>(w.size()) != n)
    throw ArgumentError(std::string(who) + ": weight size mismatch");
  for (const auto& x : w)
    if (x <= 0) throw ArgumentError(std::string(who) + ": weights must be positive");
}

}  // namespace

ObjectFamily hypertree_family(const Hypergraph& h, int vertex_cap) {
  if (h.vertex_count() < 2) throw ArgumentError("hypertree_family: need at least 2 vertices");
  // Existence probe; greedy reaches size |V|-1 iff h has a hypertree.
  greedy_min_basis(h, std::vector<Rational>(h.edge_count(), Rational(1)), 1, true, vertex_cap);

  ObjectFamily fam;
  fam.name = "hypertree";
  fam.ground = h.edge_ids();
  fam.lmo = [h, vertex_cap](const std::vector<Rational>& cost) {
    return to_rational(greedy_min_basis(h, cost, 1, true, vertex_cap));
  };
  fam.enumerate = [h, vertex_cap] { return enumerate_hypertrees(h, vertex_cap); };
  return fam;
}

ObjectFamily multitree_family(const Hypergraph& h, int vertex_cap) {
  if (h.vertex_count() < 2) throw ArgumentError("multitree_family: need at least 2 vertices");
  if (!is_connected(h))
    throw InfeasibilityError("multitree_family: disconnected input has no multi-trees");
  int cap = h.vertex_count();

  ObjectFamily fam;
  fam.name = "multitree";
  fam.ground = h.edge_ids();
  fam.lmo = [h, cap, vertex_cap](const std::vector<Rational>& cost) {
    return to_rational(greedy_min_basis(h, cost, cap, true, vertex_cap));
  };
  fam.enumerate = [h, cap, vertex_cap] { return enumerate_multitrees(h, cap, vertex_cap); };
  return fam;
}

ObjectFamily explicit_family(std::vector<std::vector<Rational>> members,
                             std::vector<std::string> ground) {
  if (members.empty()) throw ArgumentError("explicit_family: no members");
  int n = static_cast<int>(ground.size());
  for (const auto& m : members) {
    if (static_cast<int>(m.size()) != n) throw ArgumentError("explicit_family: ragged member");
    bool nonzero = false;
    for (const auto& x : m) {
      if (x < 0) throw ArgumentError("explicit_family: negative usage");
      if (x > 0) nonzero = true;
    }
    if (!nonzero) throw ArgumentError("explicit_family: zero usage vector");
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  ObjectFamily fam;
  fam.name = "explicit";
  fam.ground = std::move(ground);
  fam.lmo = [members, n](const std::vector<Rational>& cost) {
    if (static_cast<int>(cost.size()) != n) throw ArgumentError("lmo: cost size mismatch");
    int best = 0;
    Rational best_val;
    for (size_t k = 0; k < members.size(); ++k) {
      Rational v(0);
      for (int e = 0; e < n; ++e) v += cost[e] * members[k][e];
      if (k == 0 || v < best_val) { best = static_cast<int>(k); best_val = v; }
    }
    return members[best];
  };
  fam.enumerate = [members] {
    ExplicitFamily f;
    f.members = members;
    return f;
  };
  return fam;
}

bool is_admissible(const ObjectFamily& fam, const std::vector<Rational>& rho, double tol) {
  if (static_cast<int>(rho.size()) != fam.size())
    throw ArgumentError("is_admissible: rho size mismatch");
  for (const auto& x : rho)
    if (x < 0) return false;
  std::vector<Rational> u = fam.lmo(rho);
  Rational cost(0);
  for (int e = 0; e < fam.size(); ++e) cost += rho[e] * u[e];
  return to_double(cost) >= 1.0 - tol;
}

Rational energy(const std::vector<Rational>& rho, const std::vector<Rational>& weights, int p) {
  if (p != 1 && p != 2) throw ArgumentError("energy: p must be 1 or 2");
  check_weights(weights, static_cast<int>(rho.size()), "energy");
  Rational out(0);
  for (size_t e = 0; e < rho.size(); ++e)
    out += weights[e] * (p == 1 ? rho[e] : Rational(rho[e] * rho[e]));
  return out;
}

ModulusResult mod1(const ObjectFamily& fam, const Hypergraph& h,
                   const std::optional<std::vector<Rational>>& weights, int max_lp_members,
                   int vertex_cap) {
  std::vector<Rational> w = weights ? *weights : default_weights(h);
  ModulusResult res;
  res.p = 1;

  if (fam.name == "multitree") {
    check_weights(w, h.edge_count(), "mod1");
    res.exact = strength(h, w, false, vertex_cap).value;
  } else if (fam.name == "hypertree") {
    check_weights(w, h.edge_count(), "mod1");
    res.exact = matroid_strength(h, w).value;
  } else {
    check_weights(w, fam.size(), "mod1");
  }

  if (fam.enumerate) {
    ExplicitFamily mem = fam.enumerate();
    if (static_cast<int>(mem.members.size()) <= max_lp_members) {
      if (mem.members.empty()) throw InfeasibilityError("mod1: empty family");
      std::vector<std::pair<std::vector<Rational>, Rational>> rows;
      for (auto& m : mem.members) rows.emplace_back(std::move(m), Rational(1));
      LpResult lp = lp_min(w, rows);
      if (res.exact && *res.exact != lp.value)
        throw ConsistencyError("mod1: LP value disagrees with the closed form");
      res.exact = lp.value;
      res.rho_exact = lp.argmin;
      for (const auto& x : lp.argmin) res.rho_star.push_back(to_double(x));
    }
  }
  if (!res.exact) throw ArgumentError("mod1: family is neither closed-form nor enumerable");
  res.value = to_double(*res.exact);
  return res;
}

ModulusResult mod2_mnp(const ObjectFamily& fam, const std::vector<Rational>& weights, double tol,
                       long max_vertices) {
  int n = fam.size();
  check_weights(weights, n, "mod2_mnp");
  if (tol <= 0) throw ArgumentError("mod2_mnp: tol must be positive");

  std::vector<double> rt(n);
  for (int e = 0; e < n; ++e) rt[e] = std::sqrt(to_double(weights[e]));

  // Vertex store in the scaled coordinates y(e) = eta(e)/sqrt(sigma(e)).
  std::vector<std::vector<Rational>> usages;
  std::vector<Eigen::VectorXd> ys;
  std::map<std::vector<Rational>, int> seen;
  auto fetch = [&](const std::vector<Rational>& cost) {
    std::vector<Rational> u = fam.lmo(cost);
    auto it = seen.find(u);
    if (it != seen.end()) return it->second;
    Eigen::VectorXd y(n);
    for (int e = 0; e < n; ++e) y[e] = to_double(u[e]) / rt[e];
    int id = static_cast<int>(usages.size());
    usages.push_back(u);
    ys.push_back(std::move(y));
    seen.emplace(usages.back(), id);
    return id;
  };

  int first = fetch(std::vector<Rational>(n, Rational(0)));
  std::vector<int> support{first};
  std::vector<double> lambda{1.0};
  Eigen::VectorXd x = ys[first];

  double gap = 0;
  long iters = 0;
  while (true) {
    if (++iters > max_vertices)
      throw ConvergenceError("mod2_mnp: iteration cap reached, gap " + std::to_string(gap));
    std::vector<Rational> cost(n);
    for (int e = 0; e < n; ++e) cost[e] = Rational(x[e] / rt[e]);
    int q = fetch(cost);
    gap = x.dot(x) - x.dot(ys[q]);
    if (gap <= tol) break;
    if (std::find(support.begin(), support.end(), q) != support.end()) break;  // stalled
    support.push_back(q);
    lambda.push_back(0.0);

    while (true) {
      int s = static_cast<int>(support.size());
      Eigen::MatrixXd m(s + 1, s + 1);
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(s + 1);
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) m(i, j) = 2.0 * ys[support[i]].dot(ys[support[j]]);
      for (int i = 0; i < s; ++i) { m(i, s) = 1.0; m(s, i) = 1.0; }
      m(s, s) = 0.0;
      rhs[s] = 1.0;
      Eigen::VectorXd sol = m.fullPivLu().solve(rhs);
      std::vector<double> alpha(sol.data(), sol.data() + s);

      if (std::all_of(alpha.begin(), alpha.end(), [](double a) { return a > -1e-12; })) {
        double sum = 0;
        for (auto& a : alpha) { a = std::max(a, 0.0); sum += a; }
        for (auto& a : alpha) a /= sum;
        lambda = alpha;
        break;
      }
      double theta = 1.0;
      for (int i = 0; i < s; ++i)
        if (alpha[i] <= 0) theta = std::min(theta, lambda[i] / (lambda[i] - alpha[i]));
      std::vector<int> nsup;
      std::vector<double> nlam;
      for (int i = 0; i < s; ++i) {
        double li = (1 - theta) * lambda[i] + theta * alpha[i];
        if (li > 1e-14) { nsup.push_back(support[i]); nlam.push_back(li); }
      }
      double sum = std::accumulate(nlam.begin(), nlam.end(), 0.0);
      for (auto& l : nlam) l /= sum;
      support = std::move(nsup);
      lambda = std::move(nlam);
    }
    x.setZero(n);
    for (size_t i = 0; i < support.size(); ++i) x += lambda[i] * ys[support[i]];
  }

  ModulusResult res;
  res.p = 2;
  res.tol = tol;
  res.gap = gap;
  res.iterations = iters;
  res.dual_objective = x.dot(x);
  if (res.dual_objective <= 0) throw ConsistencyError("mod2_mnp: nonpositive dual objective");
  res.value = 1.0 / res.dual_objective;
  res.eta_star.resize(n);
  res.rho_star.resize(n);
  for (int e = 0; e < n; ++e) {
    res.eta_star[e] = x[e] * rt[e];
    res.rho_star[e] = res.eta_star[e] * res.value / to_double(weights[e]);
  }
  for (size_t i = 0; i < support.size(); ++i) {
    if (lambda[i] <= 1e-12) continue;
    res.support.push_back(usages[support[i]]);
    res.support_lambda.push_back(lambda[i]);
  }
  return res;
}

std::pair<std::vector<double>, std::vector<double>> duality_pair(
    const ModulusResult& res, const std::vector<Rational>& weights, int p) {
  if (p != 2) throw ArgumentError("duality_pair: only p = 2 supported");
  if (res.p != 2) throw ArgumentError("duality_pair: result is not a 2-modulus result");
  int n = static_cast<int>(res.eta_star.size());
  check_weights(weights, n, "duality_pair");
  double slack = 10 * res.tol + 1e-12;
  if (std::abs(res.value * res.dual_objective - 1.0) > slack)
    throw ConsistencyError("duality_pair: product identity violated");
  for (int e = 0; e < n; ++e) {
    double expect = to_double(weights[e]) * res.rho_star[e] / res.value;
    if (std::abs(res.eta_star[e] - expect) > slack)
      throw ConsistencyError("duality_pair: eta/rho relation violated at " + std::to_string(e));
  }
  return {res.rho_star, res.eta_star};
}

ObjectFamily symmetry_quotient(const ObjectFamily& fam_big, const std::vector<int>& group_of,
                               std::vector<std::string> quotient_ground) {
  int big_n = fam_big.size();
  int n = static_cast<int>(quotient_ground.size());
  if (static_cast<int>(group_of.size()) != big_n)
    throw ArgumentError("symmetry_quotient: group map size mismatch");
  std::vector<bool> hit(n, false);
  for (int g : group_of) {
    if (g < 0 || g >= n) throw ArgumentError("symmetry_quotient: group index out of range");
    hit[g] = true;
  }
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
    throw ArgumentError("symmetry_quotient: empty group");

  auto collapse = [group_of, n](const std::vector<Rational>& big) {
    std::vector<Rational> q(n, Rational(0));
    for (size_t e = 0; e < big.size(); ++e) q[group_of[e]] += big[e];
    return q;
  };

  ObjectFamily fam;
  fam.name = fam_big.name + "/quotient";
  fam.ground = std::move(quotient_ground);
  fam.lmo = [fam_big, group_of, collapse](const std::vector<Rational>& cost) {
    std::vector<Rational> big_cost(group_of.size());
    for (size_t e = 0; e < group_of.size(); ++e) big_cost[e] = cost[group_of[e]];
    return collapse(fam_big.lmo(big_cost));
  };
  if (fam_big.enumerate) {
    auto big_enum = fam_big.enumerate;
    fam.enumerate = [big_enum, collapse] {
      ExplicitFamily big = big_enum();
      ExplicitFamily out;
      for (const auto& m : big.members) out.members.push_back(collapse(m));
      std::sort(out.members.begin(), out.members.end());
      out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
      return out;
    };
  }
  return fam;
}

std::vector<Rational> quotient_weights(const std::vector<Rational>& big_weights,
                                       const std::vector<int>& group_of, int n_groups) {
  if (big_weights.size() != group_of.size())
    throw ArgumentError("quotient_weights: size mismatch");
  std::vector<Rational> rep(n_groups, Rational(0));
  std::vector<long> count(n_groups, 0);
  for (size_t e = 0; e < group_of.size(); ++e) {
    int g = group_of[e];
    if (g < 0 || g >= n_groups) throw ArgumentError("quotient_weights: group index out of range");
    if (count[g] == 0)
      rep[g] = big_weights[e];
    else if (rep[g] != big_weights[e])
      throw ArgumentError("quotient_weights: unequal weights inside a group");
    ++count[g];
  }
  std::vector<Rational> out(n_groups);
  for (int g = 0; g < n_groups; ++g) {
    if (count[g] == 0) throw ArgumentError("quotient_weights: empty group");
    out[g] = rep[g] * count[g];
  }
  return out;
}

}  // namespace hypermod
