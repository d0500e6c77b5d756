#include "gwa/render.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "gwa/errors.hpp"
#include "gwa/parse.hpp"

namespace gwa {

RenderFormat parse_format(const std::string& s) {
  if (s == "text") return RenderFormat::Text;
  if (s == "json") return RenderFormat::Json;
  if (s == "dot") return RenderFormat::Dot;
  if (s == "svg") return RenderFormat::Svg;
  throw ParseError(0, "format must be one of json, text, dot, svg");
}

namespace {

struct Figure {
  std::string caption;
  GraphModule g;
};

struct Point {
  double x, y;
};

constexpr double kPi = 3.14159265358979323846;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '"' || c == '\\') o += '\\';
    o += c;
  }
  return o;
}

std::string xml(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '<') o += "&lt;";
    else if (c == '>') o += "&gt;";
    else if (c == '&') o += "&amp;";
    else if (c == '"') o += "&quot;";
    else o += c;
  }
  return o;
}

// Cycles whose monodromy is not diagonal are drawn as the semisimplified
// cycles, with the true F in the caption.
Figure module_figure(const Module& m, const OrbitConfig& cfg, int mult) {
  Module shown = m;
  if (m.is_cycle()) {
    std::vector<JordanBlock> bl;
    for (const auto& b : m.F.blocks)
      for (int k = 0; k < b.size; ++k) bl.push_back({b.eigenvalue, 1});
    shown.F = JordanType(bl);
  }
  Figure f;
  f.caption = m.str() + (mult > 1 ? " ^" + std::to_string(mult) : "");
  if (shown.is_path() && shown.has_zero()) {
    Decomposition d = split_path_at_zeros(shown);
    f.g = module_to_graph(d, cfg);
  } else {
    f.g = module_to_graph(shown, cfg);
  }
  return f;
}

std::vector<Point> layout(const GraphModule& g, int p) {
  std::map<int, int> used;
  std::vector<Point> pts;
  for (const auto& v : g.vertices) {
    int n = used[v.wt]++;
    double r = 1.0 + 0.6 * n;
    double th = 2 * kPi * v.wt / p;
    pts.push_back({r * std::cos(th), r * std::sin(th)});
  }
  return pts;
}

double extent(const std::vector<Point>& pts) {
  double e = 1.0;
  for (const auto& q : pts) e = std::max(e, std::max(std::abs(q.x), std::abs(q.y)));
  return e + 0.5;
}

std::string edge_dir(char label) { return label == 'x' ? "forward" : label == 'y' ? "back" : "both"; }

std::string dot(const std::vector<Figure>& figs, int p) {
  std::ostringstream o;
  o << "digraph gwa {\n  layout=neato;\n  node [shape=point, width=0.08];\n  edge [fontsize=10];\n";
  double x0 = 0;
  for (std::size_t k = 0; k < figs.size(); ++k) {
    const auto& g = figs[k].g;
    auto pts = layout(g, p);
    double e = extent(pts);
    if (k > 0) {
      o << "  plus" << k << " [shape=plaintext, label=\"⊕\", pos=\"" << num(x0) << ",0!\"];\n";
      x0 += 1.0;
    }
    double cx = x0 + e;
    std::string pre = "f" + std::to_string(k) + ":";
    o << "  subgraph cluster_" << k << " {\n    label=\"" << escape(figs[k].caption) << "\";\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
      o << "    \"" << escape(pre + g.vertices[i].id) << "\" [pos=\"" << num(cx + pts[i].x) << "," << num(pts[i].y)
        << "!\", xlabel=\"" << g.vertices[i].wt << "\"];\n";
    o << "  }\n";
    for (const auto& ed : g.edges)
      o << "  \"" << escape(pre + g.vertices[ed.from].id) << "\" -> \"" << escape(pre + g.vertices[ed.to].id)
        << "\" [label=\"" << ed.label << "\", dir=" << edge_dir(ed.label) << "];\n";
    x0 = cx + e;
  }
  o << "}\n";
  return o.str();
}

std::string svg(const std::vector<Figure>& figs, int p) {
  const double s = 60;  // pixels per unit
  std::ostringstream body;
  double x0 = 0, h = 2.0;
  for (std::size_t k = 0; k < figs.size(); ++k) {
    const auto& g = figs[k].g;
    auto pts = layout(g, p);
    double e = extent(pts);
    h = std::max(h, e);
    if (k > 0) {
      body << "<text x=\"" << num(x0 * s + 0.5 * s) << "\" y=\"0\" text-anchor=\"middle\" font-size=\"20\">⊕</text>\n";
      x0 += 1.0;
    }
    double cx = x0 + e;
    body << "<g>\n<text x=\"" << num(cx * s) << "\" y=\"" << num(-(e - 0.1) * s) << "\" text-anchor=\"middle\" font-size=\"11\">"
         << xml(figs[k].caption) << "</text>\n";
    for (int w = 0; w < p; ++w) {
      double th = 2 * kPi * w / p;
      body << "<line x1=\"" << num(cx * s) << "\" y1=\"0\" x2=\"" << num((cx + (e - 0.3) * std::cos(th)) * s) << "\" y2=\""
           << num(-(e - 0.3) * std::sin(th) * s) << "\" stroke=\"#ddd\"/>\n";
    }
    for (const auto& ed : g.edges) {
      Point a = pts[ed.from], b = pts[ed.to];
      body << "<line x1=\"" << num((cx + a.x) * s) << "\" y1=\"" << num(-a.y * s) << "\" x2=\"" << num((cx + b.x) * s)
           << "\" y2=\"" << num(-b.y * s) << "\" stroke=\"black\"";
      if (ed.label != 'y') body << " marker-end=\"url(#head)\"";
      if (ed.label != 'x') body << " marker-start=\"url(#tail)\"";
      body << "/>\n<text x=\"" << num((cx + (a.x + b.x) / 2) * s + 4) << "\" y=\"" << num(-(a.y + b.y) / 2 * s - 4)
           << "\" font-size=\"10\">" << ed.label << "</text>\n";
    }
    for (const auto& q : pts)
      body << "<circle cx=\"" << num((cx + q.x) * s) << "\" cy=\"" << num(-q.y * s) << "\" r=\"3\"/>\n";
    body << "</g>\n";
    x0 = cx + e;
  }
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(-0.2 * s) << " " << num(-h * s) << " "
    << num((x0 + 0.4) * s) << " " << num(2 * h * s) << "\">\n"
    << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"8\" refY=\"4\" orient=\"auto\">"
       "<path d=\"M0,0 L8,4 L0,8 z\"/></marker>"
       "<marker id=\"tail\" markerWidth=\"8\" markerHeight=\"8\" refX=\"0\" refY=\"4\" orient=\"auto\">"
       "<path d=\"M8,0 L0,4 L8,8 z\"/></marker></defs>\n"
    << body.str() << "</svg>\n";
  return o.str();
}

std::string graph_text(const GraphModule& g) {
  std::ostringstream o;
  o << "t = " << (g.t.str().empty() ? "1" : g.t.str()) << "\n";
  for (const auto& v : g.vertices) o << "vertex " << v.id << " wt " << v.wt << "\n";
  for (const auto& e : g.edges)
    o << "edge " << g.vertices[e.from].id << " -> " << g.vertices[e.to].id << " label " << e.label << " ap " << e.ap.str()
      << " am " << e.am.str() << "\n";
  return o.str();
}

std::string figures(const std::vector<Figure>& figs, int p, RenderFormat f) {
  return f == RenderFormat::Dot ? dot(figs, p) : svg(figs, p);
}

}  // namespace

std::string render(const Module& m, const OrbitConfig& cfg, RenderFormat f) {
  switch (f) {
    case RenderFormat::Text:
      return m.str() + "\n";
    case RenderFormat::Json:
      return module_to_json(m).dump(2) + "\n";
    default:
      return figures({module_figure(m, cfg, 1)}, cfg.p, f);
  }
}

std::string render(const Decomposition& d, const OrbitConfig& cfg, RenderFormat f) {
  switch (f) {
    case RenderFormat::Text: {
      std::string o;
      for (const auto& s : d.summands)
        o += s.m.str() + (s.mult > 1 ? " ^" + std::to_string(s.mult) : "") + "  (dim " + std::to_string(s.m.dim()) + ")\n";
      return o.empty() ? "0\n" : o;
    }
    case RenderFormat::Json:
      return decomposition_to_json(d).dump(2) + "\n";
    default: {
      std::vector<Figure> figs;
      for (const auto& s : d.summands) figs.push_back(module_figure(s.m, cfg, s.mult));
      return figures(figs, cfg.p, f);
    }
  }
}

std::string render(const GraphModule& g, const OrbitConfig& cfg, RenderFormat f) {
  switch (f) {
    case RenderFormat::Text:
      return graph_text(g);
    case RenderFormat::Json:
      return g.to_json().dump(2) + "\n";
    default:
      return figures({Figure{"", g}}, cfg.p, f);
  }
}

}  // namespace gwa
