// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hypermod/decompose.hpp"
#include "hypermod/fulkerson.hpp"
#include "hypermod/matroid.hpp"
#include "hypermod/metrics.hpp"
#include "hypermod/modulus.hpp"
#include "hypermod/oracle.hpp"

using namespace hypermod;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok) {
  std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
  if (!ok) ++failures;
}

void run(int criterion, const std::string& what, const std::function<bool()>& body) {
  bool ok = false;
  std::string note = what;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note += std::string(" [exception: ") + e.what() + "]";
  }
  report(criterion, note, ok);
}

std::vector<Rational> units(int n) { return std::vector<Rational>(n, Rational(1)); }

bool approx(double a, double b, double eps = 1e-6) { return std::abs(a - b) < eps; }

// The two-parallel-triple instance, solved exactly end to end.
bool criterion1() {
  Hypergraph h = fixtures::twin_triples();
  std::vector<std::vector<Rational>> omega{{Rational(0), Rational(2)},
                                           {Rational(1), Rational(1)},
                                           {Rational(2), Rational(0)}};
  if (enumerate_multitrees(h).members != omega) return false;
  std::vector<std::vector<Rational>> verts{{Rational(0), Rational(2)},
                                           {Rational(2), Rational(0)}};
  if (polyhedron_vertices(h) != verts) return false;
  std::vector<Rational> sigma{Rational(1), Rational(2)};
  if (strength(h, sigma).value != Rational(3, 2)) return false;
  ModulusResult omega1 = mod1(multitree_family(h), h, sigma);
  if (!omega1.exact || *omega1.exact != Rational(3, 2)) return false;
  ModulusResult gamma1 = mod1(hypertree_family(h), h, sigma);
  if (!gamma1.exact || *gamma1.exact != Rational(1)) return false;
  ModulusResult m2 = mod2_mnp(multitree_family(h), units(2));
  return approx(m2.value, 0.5, 1e-8) && approx(m2.eta_star[0], 1.0) &&
         approx(m2.eta_star[1], 1.0);
}

// A single triple edge separates the two 1-modulus flavors.
bool criterion2() {
  Hypergraph h = fixtures::single_triple();
  if (strength(h).value != Rational(1, 2)) return false;
  if (matroid_strength(h, units(1)).value != Rational(1)) return false;
  ModulusResult omega = mod1(multitree_family(h), h);
  return omega.exact && *omega.exact == Rational(1, 2);
}

// On partition-connected inputs the matroid strength equals the strength.
bool criterion3() {
  int n = 0;
  for (const Hypergraph& h : fixtures::corpus().partition_connected) {
    ++n;
    if (matroid_strength(h, units(h.edge_count())).value != strength(h).value) return false;
  }
  return n >= 200;
}

// The exact LP over the enumerated multi-tree family reproduces the
// weighted strength.
bool criterion4() {
  int n = 0;
  for (const Hypergraph& h : fixtures::corpus().connected) {
    if (n >= 40) break;
    ExplicitFamily omega = enumerate_multitrees(h);
    if (omega.members.empty() || omega.members.size() > 150) continue;
    ++n;
    std::vector<Rational> sigma = fixtures::random_weights(h.edge_count(), 400 + n);
    std::vector<std::pair<std::vector<Rational>, Rational>> rows;
    for (const auto& m : omega.members) rows.emplace_back(m, Rational(1));
    if (lp_min(sigma, rows).value != strength(h, sigma).value) return false;
  }
  return n >= 40;
}

// The blocker family coincides with the extreme points of the admissible set
// and with the vertices of the partition polyhedron.
bool criterion5() {
  int n = 0;
  for (const Hypergraph& h : fixtures::corpus().connected) {
    if (n >= 30) break;
    if (h.vertex_count() > 6) continue;
    if (enumerate_multitrees(h).members.size() > 200) continue;
    ++n;
    BlockerReport rep = blocker_matches_extremes(h);
    if (!rep.ok) return false;
  }
  return n >= 30;
}

// The partition-formula rank and the greedy rank agree on every subset.
bool criterion6() {
  int n = 0;
  for (const Hypergraph& h : fixtures::corpus().connected) {
    if (n >= 30) break;
    int m = h.edge_count();
    if (m > 6) continue;
    ++n;
    for (int mask = 0; mask < (1 << m); ++mask) {
      std::vector<int> f;
      for (int e = 0; e < m; ++e)
        if (mask & (1 << e)) f.push_back(e);
      if (rank(h, f) != rank_greedy(h, f)) return false;
    }
  }
  return n >= 30;
}

// The iterative 2-modulus matches the exact rational QP and satisfies the
// product identity.
bool criterion7() {
  int n = 0;
  for (const Hypergraph& h : fixtures::corpus().partition_connected) {
    if (n >= 30) break;
    ExplicitFamily gamma = enumerate_hypertrees(h);
    if (gamma.members.empty() || gamma.members.size() > 200) continue;
    ++n;
    std::vector<Rational> sigma = fixtures::random_weights(h.edge_count(), 700 + n);
    QpResult exact = qp_min_norm(gamma, sigma);
    ModulusResult it = mod2_mnp(hypertree_family(h), sigma);
    if (!approx(it.dual_objective, to_double(exact.value))) return false;
    if (!approx(it.value * it.dual_objective, 1.0)) return false;
    duality_pair(it, sigma);
  }
  return n >= 30;
}

// The extreme optimal densities recover the strength and the fractional
// arboricity on every corpus instance.
bool criterion8() {
  int n = 0;
  for (const Hypergraph& h : fixtures::corpus().connected) {
    ++n;
    Main2Report rep = theorem_main2_check(h);
    if (!rep.ok) return false;
  }
  return n >= 200;
}

// The decomposition process: serial splits verify internally (additivity,
// strength preservation, homogeneous leaves) and the parent solution
// restricts to each child's own solution.
bool criterion9() {
  int n = 0, splits = 0;
  for (const Hypergraph& h : fixtures::corpus().connected) {
    if (n >= 60) break;
    ++n;
    DecompositionNode root = hdp(h, FamilyKind::Multitree);
    if (root.kind != DecompositionNode::Kind::Split) continue;
    ++splits;
    ModulusResult parent = mod2_mnp(multitree_family(h), units(h.edge_count()));
    for (const DecompositionNode& child : root.children) {
      const Hypergraph& ch = child.hypergraph;
      if (ch.edge_count() == 0) continue;
      ModulusResult own = mod2_mnp(multitree_family(ch), units(ch.edge_count()));
      for (int e = 0; e < ch.edge_count(); ++e) {
        int pe = h.edge_index(ch.edge(e).id);
        if (pe < 0) return false;
        if (!approx(parent.eta_star[pe], own.eta_star[e])) return false;
      }
    }
  }
  return n >= 60 && splits >= 10;
}

// On partition-connected inputs the hypertree and multi-tree solutions agree.
bool criterion10() {
  int n = 0;
  for (const Hypergraph& h : fixtures::corpus().partition_connected) {
    if (n >= 60) break;
    ++n;
    std::vector<Rational> sigma = units(h.edge_count());
    ModulusResult gamma = mod2_mnp(hypertree_family(h), sigma);
    ModulusResult omega = mod2_mnp(multitree_family(h), sigma);
    if (!approx(gamma.value, omega.value)) return false;
    for (int e = 0; e < h.edge_count(); ++e)
      if (!approx(gamma.eta_star[e], omega.eta_star[e])) return false;
  }
  return n >= 60;
}

// The symmetry quotient of the parallelized hypertree family reproduces the
// multi-tree 2-modulus: Mod2(Omega(H)) = Mod2(Gamma(H^t)) / t with t = |V|.
bool criterion11() {
  int n = 0;
  for (const Hypergraph& h : fixtures::corpus().connected) {
    if (n >= 15) break;
    if (h.vertex_count() > 4 || h.edge_count() > 5) continue;
    ++n;
    int t = h.vertex_count();
    std::vector<int> group_of;
    Hypergraph big = parallelize(h, t, &group_of);
    ObjectFamily q = symmetry_quotient(hypertree_family(big), group_of, h.edge_ids());
    std::vector<Rational> wq = quotient_weights(units(big.edge_count()), group_of,
                                                h.edge_count());
    double via_quotient = mod2_mnp(q, wq).value / t;
    double direct = mod2_mnp(multitree_family(h), units(h.edge_count())).value;
    if (!approx(via_quotient, direct)) return false;
  }
  return n >= 15;
}

// The three-level instance decomposes with density levels 3/2, 1, 3/5 and the
// expected tree shape.
bool criterion12() {
  Hypergraph h = fixtures::three_level();
  Main2Report rep = theorem_main2_check(h);
  if (!rep.ok) return false;
  if (rep.strength_value != Rational(2, 3)) return false;
  if (rep.arboricity_value != Rational(5, 3)) return false;

  ModulusResult res = mod2_mnp(multitree_family(h), units(h.edge_count()));
  std::vector<EtaLevel> levels = extract_levels(res.eta_star);
  if (levels.size() != 3) return false;
  if (!approx(levels[0].value, 1.5) || !approx(levels[1].value, 1.0) ||
      !approx(levels[2].value, 0.6))
    return false;

  DecompositionNode root = hdp(h, FamilyKind::Multitree);
  if (root.kind != DecompositionNode::Kind::Split) return false;
  if (root.children.size() != 5) return false;
  const DecompositionNode& shrunk = root.children[0];
  if (shrunk.provenance != "shrunk" ||
      shrunk.kind != DecompositionNode::Kind::Homogeneous ||
      *shrunk.strength_value != Rational(2, 3))
    return false;
  int blocks = 0, isolated = 0;
  for (size_t i = 1; i < root.children.size(); ++i) {
    const DecompositionNode& c = root.children[i];
    if (c.kind == DecompositionNode::Kind::Isolated) {
      ++isolated;
      continue;
    }
    if (c.kind != DecompositionNode::Kind::Split || c.children.size() != 3) return false;
    bool has_bridge = false, has_dense = false;
    for (const DecompositionNode& g : c.children) {
      if (g.kind == DecompositionNode::Kind::Homogeneous &&
          g.strength_value == Rational(1))
        has_bridge = true;
      if (g.kind == DecompositionNode::Kind::Homogeneous &&
          g.strength_value == Rational(5, 3))
        has_dense = true;
    }
    if (!has_bridge || !has_dense) return false;
    ++blocks;
  }
  return blocks == 2 && isolated == 2;
}

}  // namespace

int main() {
  run(1, "two parallel triples: families, vertices, weighted moduli", criterion1);
  run(2, "single triple: strength 1/2 vs matroid strength 1", criterion2);
  run(3, "matroid strength equals strength when partition-connected", criterion3);
  run(4, "exact LP over the multi-tree family equals the weighted strength", criterion4);
  run(5, "blocker family equals the admissible-set extreme points", criterion5);
  run(6, "partition-formula rank equals greedy rank on all subsets", criterion6);
  run(7, "iterative 2-modulus matches the exact QP and the product identity", criterion7);
  run(8, "optimal density extremes recover strength and arboricity", criterion8);
  run(9, "serial decomposition verifies and restricts to child solutions", criterion9);
  run(10, "hypertree and multi-tree solutions agree when partition-connected", criterion10);
  run(11, "symmetry quotient of parallel copies reproduces the 2-modulus", criterion11);
  run(12, "three-level instance: levels 3/2, 1, 3/5 and decomposition shape", criterion12);

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all 12 criteria passed\n");
  return 0;
}
