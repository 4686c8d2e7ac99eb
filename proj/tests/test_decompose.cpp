#include <doctest.h>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "hypermod/decompose.hpp"
#include "hypermod/modulus.hpp"

using namespace hypermod;

TEST_CASE("eta level extraction") {
  auto levels = extract_levels({1.0, 0.5, 1.0 + 1e-7, 0.5});
  REQUIRE(levels.size() == 2);
  CHECK(levels[0].value == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(levels[0].edges == std::vector<int>{0, 2});
  CHECK(levels[1].edges == std::vector<int>{1, 3});

  CHECK(extract_levels({0.25, 0.25, 0.25}).size() == 1);
  CHECK_THROWS_AS(extract_levels({1.0, 1.0 - 3e-5}, 1e-5), AmbiguityError);
}

TEST_CASE("homogeneity") {
  CHECK(is_homogeneous(fixtures::twin_triples()));
  CHECK(is_homogeneous(fixtures::triangle()));
  CHECK(is_homogeneous(fixtures::path_abc()));
  CHECK_FALSE(is_homogeneous(fixtures::pendant_triple()));
  CHECK_FALSE(is_homogeneous(fixtures::three_level()));
}

TEST_CASE("serial split of the pendant-triple instance") {
  Hypergraph fr = fixtures::pendant_triple();
  ModulusResult res = mod2_mnp(multitree_family(fr), {Rational(1), Rational(1)});
  SerialSplit split = serial_split(fr, FamilyKind::Multitree, res.eta_star);

  CHECK(split.e_max == std::vector<int>{0});
  CHECK(split.shrunk.vertex_count() == 3);
  CHECK(split.shrunk.edge_count() == 1);
  REQUIRE(split.parts.size() == 1);
  CHECK(split.parts[0].vertex_count() == 2);
  CHECK(split.parts[0].edge(0).id == "e2");
  CHECK(split.isolated_vertices == std::vector<int>{0, 1});
  CHECK(split.partition.size() == 3);
}

TEST_CASE("decomposition process leaves and splits") {
  DecompositionNode tri = hdp(fixtures::triangle(), FamilyKind::Tree);
  CHECK(tri.kind == DecompositionNode::Kind::Homogeneous);
  CHECK(tri.children.empty());
  CHECK(*tri.strength_value == Rational(3, 2));
  CHECK(*tri.arboricity_value == Rational(3, 2));

  DecompositionNode fr = hdp(fixtures::pendant_triple(), FamilyKind::Multitree);
  CHECK(fr.kind == DecompositionNode::Kind::Split);
  REQUIRE(fr.children.size() == 4);  // shrunk + one component + two isolated
  const DecompositionNode& shrunk = fr.children[0];
  CHECK(shrunk.provenance == "shrunk");
  CHECK(shrunk.kind == DecompositionNode::Kind::Homogeneous);
  CHECK(*shrunk.strength_value == Rational(1, 2));
  int isolated = 0, component = 0;
  for (const auto& c : fr.children) {
    if (c.kind == DecompositionNode::Kind::Isolated) ++isolated;
    if (c.provenance == "component") {
      ++component;
      CHECK(*c.strength_value == Rational(1));
    }
  }
  CHECK(isolated == 2);
  CHECK(component == 1);

  // Dual additivity: 5 = 1 (tail edge) + 4 (shrunk triple at multiplicity 2).
  CHECK(fr.dual_objective == doctest::Approx(5.0).epsilon(1e-7));
  CHECK(shrunk.dual_objective == doctest::Approx(4.0).epsilon(1e-7));
}

TEST_CASE("shrinking process") {
  CHECK(hsp(fixtures::triangle(), FamilyKind::Tree).empty());
  CHECK(hsp(fixtures::twin_triples(), FamilyKind::Multitree).empty());

  auto seq = hsp(fixtures::pendant_triple(), FamilyKind::Multitree);
  REQUIRE(seq.size() == 1);
  CHECK(seq[0].vertex_count() == 3);
  CHECK(seq[0].edge_count() == 1);

  // Triangle with a pendant edge: the triangle is the homogeneous core.
  Hypergraph tp = Hypergraph::make(
      {"a", "b", "c", "d"},
      {{"e1", {"a", "b"}}, {"e2", {"a", "c"}}, {"e3", {"b", "c"}}, {"e4", {"c", "d"}}});
  auto seq2 = hsp(tp, FamilyKind::Multitree);
  REQUIRE(seq2.size() == 1);
  CHECK(seq2[0].vertex_count() == 2);
  CHECK(seq2[0].edge_count() == 1);
  CHECK(is_homogeneous(seq2[0]));
}

TEST_CASE("eta extremes match strength and arboricity") {
  Main2Report fr = theorem_main2_check(fixtures::pendant_triple());
  CHECK(fr.ok);
  CHECK(fr.strength_value == Rational(1, 2));
  CHECK(fr.arboricity_value == Rational(1));
  CHECK(fr.eta_max == doctest::Approx(2.0).epsilon(1e-7));
  CHECK(fr.eta_min == doctest::Approx(1.0).epsilon(1e-7));

  Main2Report f1 = theorem_main2_check(fixtures::twin_triples());
  CHECK(f1.ok);
  CHECK(f1.eta_max == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(f1.eta_min == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("decomposition serialization") {
  DecompositionNode root = hdp(fixtures::pendant_triple(), FamilyKind::Multitree);
  std::string dot = decomposition_to_dot(root);
  CHECK(dot.find("digraph") != std::string::npos);

  nlohmann::json j = nlohmann::json::parse(decomposition_to_json(root));
  CHECK(j.contains("children"));
  CHECK(j["children"].size() == 4);
}

TEST_CASE("two-level density extraction") {
  Hypergraph fr = fixtures::pendant_triple();
  ModulusResult res = mod2_mnp(multitree_family(fr), {Rational(1), Rational(1)});
  auto levels = extract_levels(res.eta_star);
  REQUIRE(levels.size() == 2);
  CHECK(levels[0].value == doctest::Approx(2.0).epsilon(1e-7));
  CHECK(levels[0].edges == std::vector<int>{0});
  CHECK(levels[1].value == doctest::Approx(1.0).epsilon(1e-7));

  Main2Report tri = theorem_main2_check(fixtures::triangle());
  CHECK(tri.ok);
  CHECK(tri.eta_max == doctest::Approx(2.0 / 3.0).epsilon(1e-7));
  CHECK(tri.eta_min == doctest::Approx(2.0 / 3.0).epsilon(1e-7));
}
