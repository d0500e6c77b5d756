#include "gwa/graphmod.hpp"

#include <map>

#include "gwa/errors.hpp"
#include "gwa/parse.hpp"

namespace gwa {

int GraphModule::index_of(const std::string& id) const {
  for (std::size_t k = 0; k < vertices.size(); ++k)
    if (vertices[k].id == id) return static_cast<int>(k);
  return -1;
}

nlohmann::json GraphModule::to_json() const {
  nlohmann::json vs = nlohmann::json::array(), es = nlohmann::json::array();
  for (const auto& v : vertices) vs.push_back({{"id", v.id}, {"wt", v.wt}});
  for (const auto& e : edges)
    es.push_back({{"from", vertices[e.from].id},
                  {"to", vertices[e.to].id},
                  {"label", std::string(1, e.label)},
                  {"ap", e.ap.str()},
                  {"am", e.am.str()}});
  return {{"t", t.str()}, {"vertices", vs}, {"edges", es}};
}

GraphModule GraphModule::from_json(const nlohmann::json& j, const OrbitConfig& cfg) {
  GraphModule g;
  try {
    g.t = parse_tparam(j.at("t").get<std::string>(), cfg.p);
    for (const auto& v : j.at("vertices")) {
      GraphVertex gv{v.at("id").get<std::string>(), v.at("wt").get<int>()};
      if (g.index_of(gv.id) >= 0) throw validation_error("GraphShape", "duplicate vertex id " + gv.id);
      g.vertices.push_back(gv);
    }
    for (const auto& e : j.at("edges")) {
      GraphEdge ge;
      ge.from = g.index_of(e.at("from").get<std::string>());
      ge.to = g.index_of(e.at("to").get<std::string>());
      if (ge.from < 0 || ge.to < 0) throw validation_error("GraphShape", "edge refers to an unknown vertex");
      std::string lab = e.at("label").get<std::string>();
      if (lab.size() != 1) throw validation_error("GraphConditionD", "label must be one of 1, x, y");
      ge.label = lab[0];
      ge.ap = e.contains("ap") ? parse_scalar(e.at("ap").get<std::string>(), cfg.N) : cfg.one();
      ge.am = e.contains("am") ? parse_scalar(e.at("am").get<std::string>(), cfg.N) : cfg.one();
      g.edges.push_back(ge);
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(0, std::string("graph JSON: ") + ex.what());
  }
  return g;
}

std::vector<GraphComponent> graph_components(const GraphModule& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<int> out(n, -1), in(n, -1);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto& e = g.edges[k];
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) throw validation_error("GraphShape", "edge endpoint out of range");
    if (out[e.from] >= 0 || in[e.to] >= 0)
      throw validation_error("GraphShape", "components must be directed paths or cycles");
    out[e.from] = static_cast<int>(k);
    in[e.to] = static_cast<int>(k);
  }
  std::vector<bool> seen(n, false);
  std::vector<GraphComponent> comps;
  auto walk = [&](int s, bool cyc) {
    GraphComponent c;
    c.cycle = cyc;
    int v = s;
    while (true) {
      seen[v] = true;
      c.vertices.push_back(v);
      int e = out[v];
      if (e < 0) break;
      c.edges.push_back(e);
      v = g.edges[e].to;
      if (v == s) break;
    }
    comps.push_back(std::move(c));
  };
  for (int v = 0; v < n; ++v)
    if (in[v] < 0) walk(v, false);
  for (int v = 0; v < n; ++v)
    if (!seen[v]) walk(v, true);
  return comps;
}

void graph_validate(const GraphModule& g, const OrbitConfig& cfg) {
  const int p = cfg.p;
  if (g.t.p() != p) throw validation_error("ContextMismatch", "t has the wrong number of exponents");
  for (const auto& v : g.vertices)
    if (v.wt < 0 || v.wt >= p) throw validation_error("GraphConditionA", "weight of " + v.id + " out of range");
  auto comps = graph_components(g);
  for (const auto& e : g.edges) {
    const auto& u = g.vertices[e.from];
    const auto& v = g.vertices[e.to];
    if (v.wt != cfg.mod(u.wt + 1)) throw validation_error("GraphConditionA", "edge " + u.id + "->" + v.id + " does not step the weight");
    if (e.label != '1' && e.label != 'x' && e.label != 'y')
      throw validation_error("GraphConditionD", "label must be one of 1, x, y");
    if ((e.label == '1') == g.t.is_break(u.wt))
      throw validation_error("GraphConditionD", "edge " + u.id + "->" + v.id + " has label 1 exactly off the breaks");
    if (e.ap.is_zero() || e.am.is_zero()) throw validation_error("GraphConditionE", "scaling factors must be nonzero");
    if (e.label == '1' && e.ap * e.am != g.t.at(cfg, u.wt))
      throw validation_error("GraphConditionF", "edge " + u.id + "->" + v.id + " violates ap*am = t");
  }
  for (const auto& c : comps) {
    if (c.cycle) continue;
    const auto& s = g.vertices[c.vertices.front()];
    const auto& k = g.vertices[c.vertices.back()];
    if (!g.t.is_break(s.wt - 1)) throw validation_error("GraphConditionB", "source " + s.id + " does not follow a break");
    if (!g.t.is_break(k.wt)) throw validation_error("GraphConditionC", "sink " + k.id + " is not at a break");
  }
}

ExplicitModule graph_to_explicit(const GraphModule& g, const OrbitConfig& cfg) {
  const int p = cfg.p;
  ExplicitModule e;
  e.cfg = cfg;
  e.t = g.t;
  e.dims.assign(p, 0);
  std::vector<int> pos(g.vertices.size());
  for (std::size_t k = 0; k < g.vertices.size(); ++k) pos[k] = e.dims[g.vertices[k].wt]++;
  for (int k = 0; k < p; ++k) {
    e.X.emplace_back(e.dims[(k + 1) % p], e.dims[k], cfg.N);
    e.Y.emplace_back(e.dims[k], e.dims[(k + 1) % p], cfg.N);
  }
  for (const auto& ed : g.edges) {
    const int k = g.vertices[ed.from].wt;
    if (ed.label != 'y') e.X[k](pos[ed.to], pos[ed.from]) = ed.ap;
    if (ed.label != 'x') e.Y[k](pos[ed.from], pos[ed.to]) = ed.am;
  }
  e.check_relations();
  return e;
}

std::vector<Module> graph_component_modules(const GraphModule& g, const OrbitConfig& cfg) {
  graph_validate(g, cfg);
  std::vector<Module> out;
  for (const auto& c : graph_components(g)) {
    std::string w;
    if (!c.cycle) {
      for (int e : c.edges) w.push_back(g.edges[e].label);
      out.push_back(Module::path(g.t, cfg.mod(g.vertices[c.vertices.front()].wt - 1), w));
      continue;
    }
    // start at a vertex of weight 1 so the word is indexed from 1
    const std::size_t n = c.vertices.size();
    std::size_t s = 0;
    while (g.vertices[c.vertices[s]].wt != cfg.mod(1)) ++s;
    Cyclo xi = cfg.one();
    for (std::size_t k = 0; k < n; ++k) {
      const auto& e = g.edges[c.edges[(s + k) % n]];
      w.push_back(e.label);
      const int wt = g.vertices[e.from].wt;
      if (e.label == '1') xi *= e.ap / g.t.at(cfg, wt);
      else if (e.label == 'x') xi *= e.ap;
      else xi /= e.am;
    }
    out.push_back(Module::cycle(g.t, w, xi));
  }
  return out;
}

Decomposition graph_to_module(const GraphModule& g, const OrbitConfig& cfg) {
  Decomposition d;
  for (const Module& m : graph_component_modules(g, cfg)) d.add(split_module(m, cfg));
  d.normalize();
  return d;
}

namespace {

void append_module(GraphModule& g, const Module& m, const OrbitConfig& cfg, const std::string& prefix) {
  const int p = cfg.p;
  auto add_edge = [&](int from, int to, char lab, const Cyclo& scale) {
    GraphEdge e;
    e.from = from;
    e.to = to;
    e.label = lab;
    const int wt = g.vertices[from].wt;
    e.ap = lab == '1' ? g.t.at(cfg, wt) : cfg.one();
    e.am = cfg.one();
    if (!scale.is_one()) {
      if (lab == 'y') e.am = e.am / scale;
      else if (lab == 'x') e.ap = e.ap * scale;
      else {
        e.ap = e.ap * scale;
        e.am = e.am / scale;
      }
    }
    g.edges.push_back(e);
  };
  if (m.is_path()) {
    const int base = static_cast<int>(g.vertices.size());
    for (std::size_t k = 0; k <= m.w.size(); ++k) {
      long pos = m.i + 1 + static_cast<long>(k);
      g.vertices.push_back({prefix + "e" + std::to_string(pos), cfg.mod(pos)});
    }
    for (std::size_t k = 0; k < m.w.size(); ++k) {
      if (m.w[k] == '0') throw validation_error("NotAGraphModule", "split letter-0 paths before converting");
      add_edge(base + static_cast<int>(k), base + static_cast<int>(k) + 1, m.w[k], cfg.one());
    }
    return;
  }
  const int n = static_cast<int>(m.w.size());
  int comp = 0;
  for (const auto& b : m.F.blocks) {
    if (b.size != 1) throw validation_error("NotAGraphModule", "graph cycles carry x^d - xi; Jordan block of size " + std::to_string(b.size));
    const int base = static_cast<int>(g.vertices.size());
    for (int k = 1; k <= n; ++k)
      g.vertices.push_back({prefix + "c" + std::to_string(comp) + "_" + std::to_string(k), k % p});
    for (int k = 0; k < n; ++k)
      add_edge(base + k, base + (k + 1) % n, m.w[k], k == n - 1 ? b.eigenvalue : cfg.one());
    ++comp;
  }
}

}  // namespace

GraphModule module_to_graph(const Module& m, const OrbitConfig& cfg) {
  validate(m, cfg);
  GraphModule g;
  g.t = m.t;
  append_module(g, m, cfg, "");
  return g;
}

GraphModule module_to_graph(const Decomposition& d, const OrbitConfig& cfg) {
  GraphModule g;
  if (d.summands.empty()) return g;
  g.t = d.summands[0].m.t;
  int idx = 0;
  for (const auto& s : d.summands) {
    if (!(s.m.t == g.t)) throw validation_error("ContextMismatch", "summands have different t");
    validate(s.m, cfg);
    for (int c = 0; c < s.mult; ++c) append_module(g, s.m, cfg, "s" + std::to_string(idx++) + ":");
  }
  return g;
}

GraphModule graph_tensor(const GraphModule& a, const GraphModule& b) {
  GraphModule g;
  g.t = a.t * b.t;
  std::map<std::pair<int, int>, int> idx;
  for (std::size_t i = 0; i < a.vertices.size(); ++i)
    for (std::size_t j = 0; j < b.vertices.size(); ++j) {
      if (a.vertices[i].wt != b.vertices[j].wt) continue;
      idx[{static_cast<int>(i), static_cast<int>(j)}] = static_cast<int>(g.vertices.size());
      g.vertices.push_back({"(" + a.vertices[i].id + "," + b.vertices[j].id + ")", a.vertices[i].wt});
    }
  for (const auto& e : a.edges)
    for (const auto& f : b.edges) {
      auto u = idx.find({e.from, f.from});
      auto v = idx.find({e.to, f.to});
      if (u == idx.end() || v == idx.end()) continue;
      char lab = letter_mul(e.label, f.label);
      if (lab == '0') continue;
      g.edges.push_back({u->second, v->second, lab, e.ap * f.ap, e.am * f.am});
    }
  return g;
}

GraphModule graph_disjoint_union(const GraphModule& a, const GraphModule& b) {
  if (!(a.t == b.t)) throw validation_error("ContextMismatch", "disjoint union needs equal t");
  GraphModule g;
  g.t = a.t;
  for (const auto& v : a.vertices) g.vertices.push_back({"L:" + v.id, v.wt});
  for (const auto& v : b.vertices) g.vertices.push_back({"R:" + v.id, v.wt});
  g.edges = a.edges;
  const int off = static_cast<int>(a.vertices.size());
  for (auto e : b.edges) {
    e.from += off;
    e.to += off;
    g.edges.push_back(e);
  }
  return g;
}

namespace {

GraphModule chain(const OrbitConfig& cfg, const TParam& t, const std::vector<std::pair<std::string, int>>& vs,
                  const std::string& labels) {
  GraphModule g;
  g.t = t;
  for (const auto& [id, wt] : vs) g.vertices.push_back({id, wt});
  for (std::size_t k = 0; k < labels.size(); ++k) {
    GraphEdge e;
    e.from = static_cast<int>(k);
    e.to = static_cast<int>(k) + 1;
    e.label = labels[k];
    e.ap = labels[k] == '1' ? t.at(cfg, vs[k].second) : cfg.one();
    e.am = cfg.one();
    g.edges.push_back(e);
  }
  return g;
}

}  // namespace

GraphModule figure_graph_left(const OrbitConfig& cfg) {
  return chain(cfg, TParam({1, 0, 1}), {{"v0", 0}, {"v1", 1}, {"v2", 2}, {"w0", 0}}, "x1x");
}

GraphModule figure_graph_right(const OrbitConfig& cfg) {
  return chain(cfg, TParam({0, 1, 1}), {{"v1'", 1}, {"v2'", 2}, {"w0'", 0}, {"w1'", 1}}, "yx1");
}

GraphModule random_rescale(const GraphModule& g, std::mt19937_64& rng, const OrbitConfig& cfg) {
  const std::vector<Cyclo> pool = {Cyclo(cfg.N, mpq_class(2)), Cyclo(cfg.N, mpq_class(-1)), Cyclo(cfg.N, mpq_class(1, 3)),
                                   Cyclo::root(cfg.N, 1), cfg.one()};
  auto pick = [&] { return pool[rng() % pool.size()]; };
  GraphModule out = g;
  for (auto& e : out.edges) {
    Cyclo c = pick();
    if (e.label == '1') {
      e.ap *= c;
      e.am /= c;
    } else {
      e.ap *= c;
      e.am *= pick();
    }
  }
  return out;
}

}  // namespace gwa
