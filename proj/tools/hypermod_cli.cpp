#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hypermod/decompose.hpp"
#include "hypermod/fulkerson.hpp"
#include "hypermod/matroid.hpp"
#include "hypermod/metrics.hpp"
#include "hypermod/modulus.hpp"
#include "hypermod/oracle.hpp"

using nlohmann::json;
using namespace hypermod;

namespace {

struct RunConfig {
  std::string input;
  std::string format = "json";
  std::string weights_path;
  std::string family = "multitree";
  int p = 2;
  double tol = 1e-9;
  std::string dot_path;
  bool as_json = false;
  int cap_vertices = kDefaultVertexCap;
  int cap_edges = kDefaultEdgeCap;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Hypergraph load(const RunConfig& cfg) {
  if (cfg.cap_vertices > kDefaultVertexCap || cfg.cap_edges > kDefaultEdgeCap)
    throw ArgumentError("caps can only be lowered below the defaults");
  if (cfg.tol <= 0) throw ArgumentError("tolerance must be positive");
  auto fmt = cfg.format == "lines" ? Hypergraph::Format::Lines : Hypergraph::Format::Json;
  Hypergraph h = Hypergraph::parse(slurp(cfg.input), fmt);
  if (h.vertex_count() > cfg.cap_vertices)
    throw CapacityError("input has " + std::to_string(h.vertex_count()) +
                        " vertices, above the cap of " + std::to_string(cfg.cap_vertices) +
                        "; analyses are exhaustive, use a smaller instance");
  if (h.edge_count() > cfg.cap_edges)
    throw CapacityError("input has " + std::to_string(h.edge_count()) +
                        " edges, above the cap of " + std::to_string(cfg.cap_edges));
  return h;
}

std::vector<Rational> load_weights(const RunConfig& cfg, const Hypergraph& h) {
  std::vector<Rational> w;
  for (int e = 0; e < h.edge_count(); ++e) w.push_back(h.weight(e));
  if (cfg.weights_path.empty()) return w;
  json j = json::parse(slurp(cfg.weights_path));
  if (!j.is_object()) throw ValidationError("weights file must be a JSON object");
  for (auto& [id, val] : j.items()) {
    int e = h.edge_index(id);
    if (e < 0) throw ValidationError("weights file names unknown edge: " + id);
    w[e] = val.is_string() ? parse_rational(val.get<std::string>())
                           : Rational(val.get<long>());
    if (w[e] <= 0) throw ValidationError("weight for edge " + id + " must be positive");
  }
  return w;
}

json rational_vec_json(const Hypergraph& h, const std::vector<Rational>& v) {
  json out = json::object();
  for (int e = 0; e < h.edge_count(); ++e) out[h.edge(e).id] = rational_to_string(v[e]);
  return out;
}

json double_vec_json(const Hypergraph& h, const std::vector<double>& v) {
  json out = json::object();
  for (int e = 0; e < h.edge_count(); ++e) out[h.edge(e).id] = v[e];
  return out;
}

json partition_json(const Hypergraph& h, const Partition& p) {
  json out = json::array();
  for (const auto& cls : p.classes) {
    json names = json::array();
    for (int v : cls) names.push_back(h.vertex_name(v));
    out.push_back(names);
  }
  return out;
}

void emit(const RunConfig& cfg, const json& j, const std::string& text) {
  if (cfg.as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

const char kNoHypertreeMsg[] =
    "the input contains no hypertree: some vertex partition P has fewer than "
    "|P|-1 crossing hyperedges, so the hypertree family is empty";

// ---- commands --------------------------------------------------------------

json info_block(const Hypergraph& h, const RunConfig& cfg) {
  json j;
  j["vertices"] = h.vertex_count();
  j["edges"] = h.edge_count();
  bool conn = is_connected(h);
  j["connected"] = conn;
  if (conn && h.vertex_count() >= 2 && h.edge_count() >= 1) {
    StrengthReport s = strength(h, std::nullopt, false, cfg.cap_vertices);
    ArboricityReport d = arboricity(h, cfg.cap_vertices, cfg.cap_edges);
    std::vector<int> all(h.edge_count());
    std::iota(all.begin(), all.end(), 0);
    j["strength"] = rational_to_string(s.value);
    j["arboricity"] = rational_to_string(d.value);
    j["density"] = rational_to_string(density(h, all));
    j["max_disjoint_hypertrees"] = max_disjoint_hypertrees(h, cfg.cap_vertices);
    j["homogeneous"] = (s.value == d.value);
  }
  return j;
}

int cmd_info(const RunConfig& cfg) {
  Hypergraph h = load(cfg);
  json j = info_block(h, cfg);
  std::ostringstream text;
  text << "vertices: " << h.vertex_count() << "\nedges: " << h.edge_count()
       << "\nconnected: " << (j["connected"].get<bool>() ? "yes" : "no") << "\n";
  if (j.contains("strength")) {
    text << "strength S: " << j["strength"].get<std::string>()
         << "\narboricity D: " << j["arboricity"].get<std::string>()
         << "\ndensity theta: " << j["density"].get<std::string>()
         << "\nmax disjoint hypertrees: " << j["max_disjoint_hypertrees"].get<long>()
         << "\nhomogeneous: " << (j["homogeneous"].get<bool>() ? "yes" : "no") << "\n";
  } else if (!j["connected"].get<bool>()) {
    j["components"] = json::array();
    for (const auto& comp : components(h)) {
      json cj = json::object();
      cj["vertices"] = comp.vertex_names();
      if (comp.vertex_count() >= 2 && comp.edge_count() >= 1) {
        cj["strength"] = rational_to_string(strength(comp, std::nullopt, false,
                                                     cfg.cap_vertices).value);
        cj["arboricity"] =
            rational_to_string(arboricity(comp, cfg.cap_vertices, cfg.cap_edges).value);
      }
      j["components"].push_back(cj);
      text << "component {";
      for (size_t i = 0; i < comp.vertex_names().size(); ++i)
        text << (i ? "," : "") << comp.vertex_names()[i];
      text << "}";
      if (cj.contains("strength"))
        text << " S=" << cj["strength"].get<std::string>()
             << " D=" << cj["arboricity"].get<std::string>();
      text << "\n";
    }
  }
  emit(cfg, j, text.str());
  return 0;
}

int cmd_strength(const RunConfig& cfg) {
  Hypergraph h = load(cfg);
  StrengthReport rep = strength(h, load_weights(cfg, h), false, cfg.cap_vertices);
  json j;
  j["strength"] = rational_to_string(rep.value);
  j["witness_partition"] = partition_json(h, rep.witness_partition);
  std::ostringstream text;
  text << "strength: " << rational_to_string(rep.value) << "\nwitness partition: ";
  for (const auto& cls : rep.witness_partition.classes) {
    text << "{";
    for (size_t i = 0; i < cls.size(); ++i) text << (i ? "," : "") << h.vertex_name(cls[i]);
    text << "} ";
  }
  text << "\n";
  emit(cfg, j, text.str());
  return 0;
}

int cmd_arboricity(const RunConfig& cfg) {
  Hypergraph h = load(cfg);
  ArboricityReport rep = arboricity(h, cfg.cap_vertices, cfg.cap_edges);
  json j;
  j["arboricity"] = rational_to_string(rep.value);
  json wit = json::array();
  for (int v : rep.witness_vertex_set) wit.push_back(h.vertex_name(v));
  j["witness_vertex_set"] = wit;
  std::ostringstream text;
  text << "arboricity: " << rational_to_string(rep.value) << "\nwitness vertex set: {";
  for (size_t i = 0; i < rep.witness_vertex_set.size(); ++i)
    text << (i ? "," : "") << h.vertex_name(rep.witness_vertex_set[i]);
  text << "}\n";
  emit(cfg, j, text.str());
  return 0;
}

int cmd_rank(const RunConfig& cfg) {
  Hypergraph h = load(cfg);
  std::vector<int> all(h.edge_count());
  std::iota(all.begin(), all.end(), 0);
  long r = rank(h, all, cfg.cap_vertices);
  long rg = rank_greedy(h, all, cfg.cap_vertices);
  if (r != rg) throw ConsistencyError("rank: partition formula and greedy disagree");
  json j;
  j["rank"] = r;
  j["full"] = (r == h.vertex_count() - 1);
  std::ostringstream text;
  text << "rank of the full edge set: " << r << " (|V|-1 = " << h.vertex_count() - 1 << ")\n";
  emit(cfg, j, text.str());
  return 0;
}

int cmd_hypertrees(const RunConfig& cfg) {
  Hypergraph h = load(cfg);
  ExplicitFamily fam = cfg.family == "tree"
                           ? enumerate_hypertrees(h, cfg.cap_vertices, cfg.cap_edges)
                           : enumerate_multitrees(h, -1, cfg.cap_vertices, cfg.cap_edges);
  json j;
  j["family"] = cfg.family;
  j["count"] = fam.members.size();
  j["members"] = json::array();
  std::ostringstream text;
  text << fam.members.size() << (cfg.family == "tree" ? " hypertrees" : " multi-trees") << "\n";
  for (const auto& m : fam.members) {
    j["members"].push_back(rational_vec_json(h, m));
    text << "(";
    for (int e = 0; e < h.edge_count(); ++e)
      text << (e ? "," : "") << rational_to_string(m[e]);
    text << ")\n";
  }
  emit(cfg, j, text.str());
  return 0;
}

int cmd_mod(const RunConfig& cfg) {
  Hypergraph h = load(cfg);
  std::vector<Rational> w = load_weights(cfg, h);
  ObjectFamily fam;
  try {
    fam = cfg.family == "tree" ? hypertree_family(h, cfg.cap_vertices)
                               : multitree_family(h, cfg.cap_vertices);
  } catch (const InfeasibilityError&) {
    throw InfeasibilityError(cfg.family == "tree"
                                 ? kNoHypertreeMsg
                                 : "the input is disconnected: the multi-tree family is empty");
  }
  json j;
  j["p"] = cfg.p;
  j["family"] = cfg.family;
  std::ostringstream text;
  if (cfg.p == 1) {
    ModulusResult res = mod1(fam, h, w, 5000, cfg.cap_vertices);
    j["value"] = rational_to_string(*res.exact);
    text << "Mod_1 = " << rational_to_string(*res.exact) << "\n";
    if (res.rho_exact) {
      j["rho_star"] = rational_vec_json(h, *res.rho_exact);
      text << "rho*: ";
      for (int e = 0; e < h.edge_count(); ++e)
        text << h.edge(e).id << "=" << rational_to_string((*res.rho_exact)[e]) << " ";
      text << "\n";
    }
  } else {
    ModulusResult res = mod2_mnp(fam, w, cfg.tol);
    j["value"] = res.value;
    j["dual_objective"] = res.dual_objective;
    j["gap"] = res.gap;
    j["iterations"] = res.iterations;
    j["rho_star"] = double_vec_json(h, res.rho_star);
    j["eta_star"] = double_vec_json(h, res.eta_star);
    text << "Mod_2 = " << res.value << "\ndual objective = " << res.dual_objective
         << "\ngap = " << res.gap << "\n";
    text << "rho*: ";
    for (int e = 0; e < h.edge_count(); ++e)
      text << h.edge(e).id << "=" << res.rho_star[e] << " ";
    text << "\neta*: ";
    for (int e = 0; e < h.edge_count(); ++e)
      text << h.edge(e).id << "=" << res.eta_star[e] << " ";
    text << "\n";
  }
  emit(cfg, j, text.str());
  return 0;
}

int cmd_blocker(const RunConfig& cfg) {
  Hypergraph h = load(cfg);
  if (!is_connected(h)) throw ArgumentError("blocker: input must be connected");
  auto elements = blocker_omega(h, false, cfg.cap_vertices);
  if (cfg.as_json) {
    std::cout << blocker_to_json(h, elements) << "\n";
    return 0;
  }
  std::cout << elements.size() << " blocker elements\n";
  for (const auto& el : elements) {
    std::cout << "partition ";
    for (const auto& cls : el.usage.partition.classes) {
      std::cout << "{";
      for (size_t i = 0; i < cls.size(); ++i)
        std::cout << (i ? "," : "") << h.vertex_name(cls[i]);
      std::cout << "}";
    }
    std::cout << " -> (";
    for (int e = 0; e < h.edge_count(); ++e)
      std::cout << (e ? "," : "") << rational_to_string(el.usage.usage[e]);
    std::cout << ")\n";
  }
  return 0;
}

void print_tree(const DecompositionNode& node, int depth, std::ostream& out) {
  out << std::string(2 * depth, ' ') << "- " << node.provenance << " |V|="
      << node.hypergraph.vertex_count() << " |E|=" << node.hypergraph.edge_count();
  if (node.strength_value)
    out << " S=" << rational_to_string(*node.strength_value)
        << " D=" << rational_to_string(*node.arboricity_value);
  if (node.eta_level) out << " eta=" << *node.eta_level;
  switch (node.kind) {
    case DecompositionNode::Kind::Homogeneous: out << " [homogeneous]"; break;
    case DecompositionNode::Kind::Split: out << " [split]"; break;
    case DecompositionNode::Kind::Isolated: out << " [isolated]"; break;
  }
  out << "\n";
  for (const auto& c : node.children) print_tree(c, depth + 1, out);
}

int cmd_decompose(const RunConfig& cfg) {
  Hypergraph h = load(cfg);
  FamilyKind kind = cfg.family == "tree" ? FamilyKind::Tree : FamilyKind::Multitree;
  DecompositionNode root = hdp(h, kind, cfg.tol, 1e-5, cfg.cap_vertices);
  if (!cfg.dot_path.empty()) {
    std::ofstream out(cfg.dot_path);
    if (!out) throw ArgumentError("cannot write DOT file: " + cfg.dot_path);
    out << decomposition_to_dot(root);
  }
  if (cfg.as_json) {
    std::cout << decomposition_to_json(root) << "\n";
  } else {
    std::ostringstream text;
    print_tree(root, 0, text);
    std::cout << text.str();
  }
  return 0;
}

int cmd_shrink(const RunConfig& cfg) {
  Hypergraph h = load(cfg);
  FamilyKind kind = cfg.family == "tree" ? FamilyKind::Tree : FamilyKind::Multitree;
  std::vector<Hypergraph> seq = hsp(h, kind, cfg.tol, 1e-5, cfg.cap_vertices);
  if (cfg.as_json) {
    json j = json::array();
    for (const auto& step : seq) j.push_back(json::parse(step.to_json()));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (seq.empty()) {
    std::cout << "already homogeneous; nothing to shrink\n";
    return 0;
  }
  for (size_t i = 0; i < seq.size(); ++i) {
    std::cout << "step " << i + 1 << ": |V|=" << seq[i].vertex_count()
              << " |E|=" << seq[i].edge_count() << "\n";
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  Hypergraph h = load(cfg);
  int failures = 0;
  auto report = [&](const std::string& name, const std::function<bool()>& check) {
    try {
      bool ok = check();
      if (!ok) ++failures;
      std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
    } catch (const CapacityError&) {
      std::cout << "SKIP  " << name << " (capacity)\n";
    }
  };
  if (!is_connected(h)) throw ArgumentError("verify: input must be connected");
  std::vector<Rational> w = load_weights(cfg, h);

  report("rank: partition formula matches greedy on all edge subsets", [&] {
    if (h.edge_count() > 6) throw CapacityError("rank scan");
    for (unsigned long mask = 0; mask < (1ul << h.edge_count()); ++mask) {
      std::vector<int> f;
      for (int e = 0; e < h.edge_count(); ++e)
        if (mask >> e & 1) f.push_back(e);
      if (rank(h, f, cfg.cap_vertices) != rank_greedy(h, f, cfg.cap_vertices)) return false;
    }
    return true;
  });
  report("strength equals the multi-tree 1-modulus (oracle LP)", [&] {
    ObjectFamily fam = multitree_family(h, cfg.cap_vertices);
    ModulusResult res = mod1(fam, h, w, 5000, cfg.cap_vertices);
    return *res.exact == strength(h, w, false, cfg.cap_vertices).value;
  });
  report("matroid strength equals the hypertree 1-modulus when hypertrees exist", [&] {
    ExplicitFamily trees = enumerate_hypertrees(h, cfg.cap_vertices, cfg.cap_edges);
    if (trees.members.empty()) return true;
    ObjectFamily fam = hypertree_family(h, cfg.cap_vertices);
    ModulusResult res = mod1(fam, h, w, 5000, cfg.cap_vertices);
    return *res.exact == matroid_strength(h, w, cfg.cap_edges).value;
  });
  report("blocker family matches the polyhedron extreme points", [&] {
    if (h.edge_count() > 8) throw CapacityError("vertex enumeration");
    return blocker_matches_extremes(h, cfg.cap_vertices, 8).ok;
  });
  report("2-modulus solver matches the oracle min-norm point", [&] {
    ObjectFamily fam = multitree_family(h, cfg.cap_vertices);
    ExplicitFamily mem = fam.enumerate();
    if (mem.members.size() > 200) throw CapacityError("hull too large");
    ModulusResult res = mod2_mnp(fam, w, cfg.tol);
    QpResult qp = qp_min_norm(mem, w);
    return std::abs(res.dual_objective - to_double(qp.value)) <= 1e-6 &&
           std::abs(res.value * res.dual_objective - 1.0) <= 1e-6;
  });
  report("optimal density levels recover S and D", [&] {
    Main2Report rep = theorem_main2_check(h, cfg.tol, 1e-5, cfg.cap_vertices);
    return rep.ok;
  });
  report("decomposition leaves are homogeneous and duals are additive", [&] {
    DecompositionNode root = hdp(h, FamilyKind::Multitree, cfg.tol, 1e-5, cfg.cap_vertices);
    std::function<bool(const DecompositionNode&)> leaves_ok =
        [&](const DecompositionNode& n) {
          if (n.kind == DecompositionNode::Kind::Homogeneous &&
              *n.strength_value != *n.arboricity_value)
            return false;
          for (const auto& c : n.children)
            if (!leaves_ok(c)) return false;
          return true;
        };
    return leaves_ok(root);
  });
  report("parallel-copy quotient reproduces the multi-tree modulus", [&] {
    if (h.vertex_count() > 4) throw CapacityError("quotient check");
    int t = h.vertex_count();
    std::vector<int> group_of;
    Hypergraph ht = parallelize(h, t, &group_of);
    std::vector<Rational> wt(ht.edge_count());
    for (int e = 0; e < ht.edge_count(); ++e) wt[e] = w[group_of[e]];
    ModulusResult big = mod2_mnp(hypertree_family(ht, cfg.cap_vertices), wt, cfg.tol);
    ModulusResult small = mod2_mnp(multitree_family(h, cfg.cap_vertices), w, cfg.tol);
    return std::abs(small.value - big.value / t) <= 1e-6;
  });
  std::cout << (failures == 0 ? "all checks passed" : "some checks FAILED") << "\n";
  return failures > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypergraph strength, arboricity, and modulus toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string command;
  for (const char* name : {"info", "strength", "arboricity", "rank", "hypertrees", "mod",
                           "blocker", "decompose", "shrink", "verify"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", cfg.input, "input hypergraph file")->required();
    sub->add_option("--format", cfg.format, "input format")
        ->check(CLI::IsMember({"json", "lines"}));
    sub->add_option("--weights", cfg.weights_path, "edge weights JSON file");
    sub->add_option("--p", cfg.p, "modulus exponent")->check(CLI::IsMember({1, 2}));
    sub->add_option("--family", cfg.family, "object family")
        ->check(CLI::IsMember({"tree", "multitree"}));
    sub->add_option("--tol", cfg.tol, "solver tolerance");
    sub->add_option("--dot", cfg.dot_path, "write a DOT diagram here");
    sub->add_flag("--json", cfg.as_json, "emit JSON");
    sub->add_option("--cap-vertices", cfg.cap_vertices, "lower the vertex cap");
    sub->add_option("--cap-edges", cfg.cap_edges, "lower the edge cap");
    sub->callback([&command, name] { command = name; });
  }

  CLI11_PARSE(app, argc, argv);
  try {
    if (command == "info") return cmd_info(cfg);
    if (command == "strength") return cmd_strength(cfg);
    if (command == "arboricity") return cmd_arboricity(cfg);
    if (command == "rank") return cmd_rank(cfg);
    if (command == "hypertrees") return cmd_hypertrees(cfg);
    if (command == "mod") return cmd_mod(cfg);
    if (command == "blocker") return cmd_blocker(cfg);
    if (command == "decompose") return cmd_decompose(cfg);
    if (command == "shrink") return cmd_shrink(cfg);
    if (command == "verify") return cmd_verify(cfg);
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const ArgumentError& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const InfeasibilityError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 4;
  } catch (const ConvergenceError& e) {
    std::cerr << "nonconvergence: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
