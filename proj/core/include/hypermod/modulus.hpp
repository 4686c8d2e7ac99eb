#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypermod/hypergraph.hpp"
#include "hypermod/oracle.hpp"

namespace hypermod {

/// A finite object family given by its ground set, a linear-minimization
/// oracle (cost -> usage vector of a member minimizing cost . usage), and an
/// optional exhaustive enumerator.
struct ObjectFamily {
  std::string name;                  // "hypertree" | "multitree" | "explicit"
  std::vector<std::string> ground;   // edge ids
  std::function<std::vector<Rational>(const std::vector<Rational>&)> lmo;
  std::function<ExplicitFamily()> enumerate;  // may be empty

  int size() const { return static_cast<int>(ground.size()); }
};

/// Gamma(H): the hypertrees of h. Throws InfeasibilityError when h contains
/// no hypertree (not partition-connected).
ObjectFamily hypertree_family(const Hypergraph& h, int vertex_cap = kDefaultVertexCap);

/// Omega(H): the multi-tree family. Throws InfeasibilityError when h is
/// disconnected (Omega empty).
ObjectFamily multitree_family(const Hypergraph& h, int vertex_cap = kDefaultVertexCap);

ObjectFamily explicit_family(std::vector<std::vector<Rational>> members,
                             std::vector<std::string> ground);

/// min over the family of rho . usage >= 1 - tol, certified through the LMO.
bool is_admissible(const ObjectFamily& fam, const std::vector<Rational>& rho,
                   double tol = 1e-9);

/// E_{p,sigma}(rho) = sum sigma(e) rho(e)^p, exact.
Rational energy(const std::vector<Rational>& rho, const std::vector<Rational>& weights, int p);

struct ModulusResult {
  int p = 2;
  double value = 0;                       // Mod_{p,sigma}
  std::optional<Rational> exact;          // exact value when available (p = 1)
  std::vector<double> rho_star;           // empty when not recovered
  std::optional<std::vector<Rational>> rho_exact;
  std::vector<double> eta_star;           // p = 2 only
  double dual_objective = 0;              // p = 2: min over conv of sum eta^2/sigma
  double gap = 0;
  long iterations = 0;
  std::vector<std::vector<Rational>> support;  // retained family members
  std::vector<double> support_lambda;
  double tol = 0;
};

/// 1-modulus: the strength value for Omega, the matroid strength for Gamma,
/// the exact LP for explicit families. rho* recovered through the oracle LP
/// whenever the family enumerates to at most max_lp_members members.
ModulusResult mod1(const ObjectFamily& fam, const Hypergraph& h,
                   const std::optional<std::vector<Rational>>& weights = std::nullopt,
                   int max_lp_members = 5000, int vertex_cap = kDefaultVertexCap);

/// 2-modulus via Wolfe's min-norm-point over conv(family) in the coordinates
/// y(e) = eta(e)/sqrt(sigma(e)); the LMO serves as the vertex oracle.
/// Mod_{2,sigma} = 1/objective; rho*(e) = eta*(e) Mod / sigma(e).
ModulusResult mod2_mnp(const ObjectFamily& fam, const std::vector<Rational>& weights,
                       double tol = 1e-9, long max_vertices = 100'000);

/// The consistent (rho*, eta*) pair of a 2-modulus result; asserts the
/// product identity value * dual_objective = 1 within 10 * tol.
std::pair<std::vector<double>, std::vector<double>> duality_pair(
    const ModulusResult& res, const std::vector<Rational>& weights, int p = 2);

/// Quotient of a family over E^t whose members are symmetric within the
/// parallel groups: usage sums over each group. group_of maps the big ground
/// set onto 0..|quotient_ground|-1.
ObjectFamily symmetry_quotient(const ObjectFamily& fam_big, const std::vector<int>& group_of,
                               std::vector<std::string> quotient_ground);

/// sigma_P(q_i) = sigma(e) |E_i| for the group of parallel copies of e.
std::vector<Rational> quotient_weights(const std::vector<Rational>& big_weights,
                                       const std::vector<int>& group_of, int n_groups);

}  // namespace hypermod
