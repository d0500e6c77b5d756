#pragma once

#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "gwa/oracle.hpp"

namespace gwa {

struct GraphVertex {
  std::string id;
  int wt = 0;
};

// X u = ap v unless the label is y; Y v = am u unless the label is x.
struct GraphEdge {
  int from = 0, to = 0;  // vertex indices
  char label = '1';
  Cyclo ap, am;
};

struct GraphModule {
  TParam t;
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;

  int index_of(const std::string& id) const;  // -1 if absent
  nlohmann::json to_json() const;
  static GraphModule from_json(const nlohmann::json& j, const OrbitConfig& cfg);
};

// Checks conditions (a)-(f) and the path/cycle shape; throws a named validation error.
void graph_validate(const GraphModule& g, const OrbitConfig& cfg);

// Connected components as vertex index sequences in edge order.
struct GraphComponent {
  std::vector<int> vertices;
  std::vector<int> edges;  // edges[k] joins vertices[k] and vertices[k+1] (cyclically for cycles)
  bool cycle = false;
};
std::vector<GraphComponent> graph_components(const GraphModule& g);

ExplicitModule graph_to_explicit(const GraphModule& g, const OrbitConfig& cfg);
// One word module per component; cycles carry the monodromy as a 1x1 F before splitting.
std::vector<Module> graph_component_modules(const GraphModule& g, const OrbitConfig& cfg);
Decomposition graph_to_module(const GraphModule& g, const OrbitConfig& cfg);
GraphModule module_to_graph(const Module& m, const OrbitConfig& cfg);
GraphModule module_to_graph(const Decomposition& d, const OrbitConfig& cfg);

GraphModule graph_tensor(const GraphModule& a, const GraphModule& b);
GraphModule graph_disjoint_union(const GraphModule& a, const GraphModule& b);

// The two factors of the reference graph tensor example (p = 3) and the expected product.
GraphModule figure_graph_left(const OrbitConfig& cfg);
GraphModule figure_graph_right(const OrbitConfig& cfg);

// Rescales every edge by random nonzero factors while keeping condition (f).
GraphModule random_rescale(const GraphModule& g, std::mt19937_64& rng, const OrbitConfig& cfg);

}  // namespace gwa
