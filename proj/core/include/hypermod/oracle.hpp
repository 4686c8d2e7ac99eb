#pragma once

#include <utility>
#include <vector>

#include "hypermod/hypergraph.hpp"

namespace hypermod {

/// A finite family materialized as explicit usage vectors, deduplicated.
struct ExplicitFamily {
  std::vector<std::vector<Rational>> members;
};

/// All edge subsets of size |V|-1 that are hypertrees, as 0/1 vectors.
ExplicitFamily enumerate_hypertrees(const Hypergraph& h, int vertex_cap = kDefaultVertexCap,
                                    int edge_cap = kDefaultEdgeCap);

/// All integer multisets with entries <= cap, total |V|-1, spanning and
/// hyperforest. cap < 0 means |V|.
ExplicitFamily enumerate_multitrees(const Hypergraph& h, int cap = -1,
                                    int vertex_cap = kDefaultVertexCap,
                                    int edge_cap = kDefaultEdgeCap);

struct LpResult {
  Rational value;
  std::vector<Rational> argmin;
};

/// Exact minimum of objective . x over { x >= 0 : a_i . x >= b_i } by rational
/// simplex on the dual program (Bland's rule; the optimal primal point is read
/// off the slack multipliers).
LpResult lp_min(const std::vector<Rational>& objective,
                const std::vector<std::pair<std::vector<Rational>, Rational>>& constraints);

struct QpResult {
  Rational value;
  std::vector<Rational> point;
};

/// Exact minimum of sum eta(e)^2 / scale(e) over the convex hull of the
/// members, by the min-norm-point algorithm run in rational arithmetic with
/// an explicit scan as the linear minimizer.
QpResult qp_min_norm(const ExplicitFamily& hull, const std::vector<Rational>& scale);

/// Vertices of { x >= 0 : rows[i] . x >= rhs[i] }, exact, via the double
/// description method on the homogenization cone. Unbounded directions are
/// dropped; vertices come out sorted.
std::vector<std::vector<Rational>> cone_vertices(const std::vector<std::vector<Rational>>& rows,
                                                 const std::vector<Rational>& rhs, int dim);

/// Vertices of the partition polyhedron
///   { x >= 0 : x(delta(P)) >= |P|-1 for every partition with |P| >= 2 }.
std::vector<std::vector<Rational>> polyhedron_vertices(const Hypergraph& h,
                                                       int vertex_cap = kDefaultVertexCap,
                                                       int edge_cap = 8);

}  // namespace hypermod
