#include "helpers.hpp"

#include "gwa/acceptance.hpp"
#include "gwa/graphmod.hpp"
#include "gwa/tensor.hpp"

using namespace gwa;

namespace {

std::string error_name(const GraphModule& g, const OrbitConfig& cfg) {
  try {
    graph_validate(g, cfg);
  } catch (const GwaError& e) {
    return e.name();
  }
  return "";
}

}  // namespace

TEST_CASE("module to graph and back") {
  OrbitConfig cfg(3, 3);
  for (const char* s : {"V[t=0:1,2:1; i=2; w=\"x1x\"]", "V[t=0:1; w=\"11y11x\"; F=[[\"z\",1]]]", "V[t=; w=\"111\"; F=[[\"2\",1]]]",
                        "V[t=1:1,2:1; i=1; w=\"\"]"}) {
    Module m = th::M(s, cfg);
    GraphModule g = module_to_graph(m, cfg);
    CHECK(error_name(g, cfg) == "");
    CHECK(graph_to_module(g, cfg) == split_module(m, cfg));
    CHECK(oracle_decompose(graph_to_explicit(g, cfg)) == split_module(m, cfg));
  }
  CHECK_THROWS_AS(module_to_graph(th::M("V[t=; w=\"111\"; F=[[\"1\",2]]]", cfg), cfg), GwaError);
}

TEST_CASE("path graph reads its word") {
  OrbitConfig cfg(3, 3);
  GraphModule g = module_to_graph(th::M("V[t=0:1,2:1; i=2; w=\"x1x\"]", cfg), cfg);
  std::vector<Module> mods = graph_component_modules(g, cfg);
  REQUIRE(mods.size() == 1);
  CHECK(mods[0].w == "x1x");
  CHECK(mods[0].i == 2);
}

TEST_CASE("breakless cycle of length dp") {
  OrbitConfig cfg(2, 4);
  // two turns with accumulated scalar -1 give x^2 + 1 = (x - z)(x + z)
  GraphModule g = module_to_graph(Module::cycle(TParam::one(2), "1111", th::Q(4, -1)), cfg);
  CHECK(graph_to_module(g, cfg) == th::D("V[t=; w=\"11\"; F=[[\"z\",1]]] + V[t=; w=\"11\"; F=[[\"-z\",1]]]", cfg));
}

TEST_CASE("validation conditions") {
  OrbitConfig cfg(3, 3);
  GraphModule g = module_to_graph(th::M("V[t=0:1; w=\"11x\"; F=[[\"1\",1]]]", cfg), cfg);
  GraphModule bad_f = g;
  bad_f.edges[0].ap = bad_f.edges[0].ap * th::Q(3, 2);
  CHECK(error_name(bad_f, cfg) == "GraphConditionF");
  GraphModule bad_e = g;
  bad_e.edges[2].am = th::Q(3, 0);
  CHECK(error_name(bad_e, cfg) == "GraphConditionE");
  GraphModule bad_d = g;
  bad_d.edges[0].label = 'x';
  CHECK(error_name(bad_d, cfg) == "GraphConditionD");
  GraphModule bad_a = g;
  bad_a.vertices.push_back({"extra", 0});
  bad_a.edges[2].to = 3;
  bad_a.edges.push_back({3, 0, '1', th::Q(3, 1), th::Q(3, 1)});
  CHECK(error_name(bad_a, cfg) == "GraphConditionA");
  CHECK(error_name(figure_graph_right(cfg), cfg) == "GraphConditionB");
  GraphModule branch = g;
  branch.edges.push_back({0, 1, '1', th::Q(3, 1), th::Q(3, 1)});
  CHECK(error_name(branch, cfg) == "GraphShape");
}

TEST_CASE("figure product") {
  OrbitConfig cfg(3, 3);
  GraphModule g = graph_tensor(figure_graph_left(cfg), figure_graph_right(cfg));
  CHECK(g.vertices.size() == 5);
  REQUIRE(g.edges.size() == 3);
  std::string labels;
  for (const auto& c : graph_components(g))
    for (int e : c.edges) labels += g.edges[e].label;
  CHECK(labels == "xyx");
  CHECK(g.vertices[0].id == "(v0,w0')");
}

TEST_CASE("tensor with the unit graph") {
  OrbitConfig cfg(3, 3);
  GraphModule g = module_to_graph(th::M("V[t=0:1,2:1; i=2; w=\"x1x\"]", cfg), cfg);
  GraphModule u = module_to_graph(th::M("V[t=; w=\"111\"; F=[[\"1\",1]]]", cfg), cfg);
  GraphModule gu = graph_tensor(g, u);
  CHECK(gu.vertices.size() == g.vertices.size());
  CHECK(graph_to_module(gu, cfg) == graph_to_module(g, cfg));
}

TEST_CASE("disjoint union is the direct sum") {
  OrbitConfig cfg(3, 3);
  Module a = th::M("V[t=0:1; i=0; w=\"11\"]", cfg), b = th::M("V[t=0:1; w=\"11y\"; F=[[\"2\",1]]]", cfg);
  Decomposition want;
  want.add(a);
  want.add(b);
  want.normalize();
  CHECK(graph_to_module(graph_disjoint_union(module_to_graph(a, cfg), module_to_graph(b, cfg)), cfg) == want);
}

TEST_CASE("random rescaled pairs match the module tensor product") {
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 15) {
    OrbitConfig cfg(3, 12);
    GraphModule g1 = random_graph(cfg, rng, 5), g2 = random_graph(cfg, rng, 5);
    try {
      Decomposition want = tensor(graph_to_module(g1, cfg), graph_to_module(g2, cfg), cfg).decomposition;
      GraphModule prod = graph_tensor(g1, g2);
      CHECK(error_name(prod, cfg) == "");
      CHECK(graph_to_module(prod, cfg) == want);
      ++checked;
    } catch (const GwaError& e) {
      REQUIRE(e.name() == "NonSplitSpectrum");
    }
  }
}

TEST_CASE("JSON round trip") {
  OrbitConfig cfg(3, 3);
  GraphModule g = graph_tensor(figure_graph_left(cfg), figure_graph_left(cfg));
  GraphModule h = GraphModule::from_json(g.to_json(), cfg);
  CHECK(h.to_json() == g.to_json());
  CHECK_THROWS_AS(GraphModule::from_json(nlohmann::json::parse(R"({"t":"","vertices":[]})"), cfg), ParseError);
}
