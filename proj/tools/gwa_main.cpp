// gwa: command-line front end for the weight-module library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gwa/acceptance.hpp"
#include "gwa/errors.hpp"
#include "gwa/groth.hpp"
#include "gwa/oracle.hpp"
#include "gwa/parse.hpp"
#include "gwa/render.hpp"
#include "gwa/split.hpp"
#include "gwa/tensor.hpp"

using namespace gwa;

namespace {

struct Globals {
  int p = 3;
  int conductor = 0;  // 0: use p
  std::uint64_t seed = 20240601;
  std::string format = "json";
  std::string out;

  OrbitConfig cfg() const { return OrbitConfig(p, conductor ? conductor : p); }
  RenderFormat fmt() const { return parse_format(format); }
};

// "@file" reads the argument from a file
std::string input(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw validation_error("FileNotFound", "cannot read " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ring element outputs are JSON objects carrying the expression as "text"
std::string ring_text(const std::string& arg) {
  std::string s = input(arg);
  auto k = s.find_first_not_of(" \t\r\n");
  if (k != std::string::npos && s[k] == '{') {
    try {
      return nlohmann::json::parse(s).at("text").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(0, std::string("element JSON: ") + e.what());
    }
  }
  return s;
}

nlohmann::json graph_json(const std::string& arg) {
  try {
    return nlohmann::json::parse(input(arg));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "graph must be JSON");
  }
}

void emit(const Globals& g, const std::string& doc) {
  if (g.out.empty()) {
    std::cout << doc;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw validation_error("FileNotWritable", "cannot write " + g.out);
  f << doc;
}

std::string ring_doc(const Globals& g, const std::string& text, const nlohmann::json& j) {
  return g.fmt() == RenderFormat::Text ? text + "\n" : j.dump(2) + "\n";
}

int exit_code(const GwaError& e) {
  switch (e.family()) {
    case ErrorFamily::Parse: return 2;
    case ErrorFamily::Validation: return 3;
    case ErrorFamily::Math: return 4;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight modules over rank-one generalized Weyl algebras on a finite orbit"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--p", g.p, "Orbit size p")->capture_default_str();
  app.add_option("--conductor", g.conductor, "Scalars live in Q(zeta_N); N must be a multiple of p (default p)");
  app.add_option("--seed", g.seed, "Seed for randomized searches and the self-test")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text", "dot", "svg"}))->capture_default_str();
  app.add_option("--out", g.out, "Write output to FILE instead of stdout");
  app.footer(
      "Module literals: V[t=0:1,2:1; i=2; w=\"x1x\"] (path) or V[t=; w=\"111\"@1; F=[[\"1\",1]]] (cycle),\n"
      "joined by '+' with optional ^m; JSON forms are accepted too. Arguments starting with @ are read from a file.\n"
      "Exit codes: 0 ok, 2 parse error, 3 validation error, 4 mathematical error, 5 mismatch.");

  std::string a, b, ring = "quotient", route = "rewrite";
  bool direct = false, oracle = false, no_validate = false;
  int maxdeg = 6;

  auto* tensor_cmd = app.add_subcommand("tensor", "Decompose the tensor product of two modules");
  tensor_cmd->add_option("A", a, "First module or sum of modules")->required();
  tensor_cmd->add_option("B", b, "Second module or sum of modules")->required();
  tensor_cmd->add_flag("--direct", direct, "Dispatch without splitting the inputs first");

  auto* decompose_cmd = app.add_subcommand("decompose", "Split a module into indecomposables");
  decompose_cmd->add_option("M", a, "Module or sum of modules")->required();
  decompose_cmd->add_flag("--oracle", oracle, "Use the explicit-matrix oracle instead of the word rules");

  auto* groth_cmd = app.add_subcommand("groth-mul", "Multiply in the Grothendieck ring");
  groth_cmd->add_option("A", a, "Element, e.g. 2*x[0,1]*x[2] + u[z]")->required();
  groth_cmd->add_option("B", b, "Element")->required();
  groth_cmd->add_option("--route", route, "rewrite or modules")->check(CLI::IsMember({"rewrite", "modules"}));

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Basis dimensions of the u = 1 quotient by degree");
  hilbert_cmd->add_option("--maxdeg", maxdeg, "Largest total degree")->capture_default_str();

  auto* split_cmd = app.add_subcommand("split-mul", "Multiply in a split Grothendieck ring");
  split_cmd->add_option("--ring", ring, "trivial, quotient or semisimple")
      ->check(CLI::IsMember({"trivial", "quotient", "semisimple"}))
      ->capture_default_str();
  split_cmd->add_option("A", a, "Element")->required();
  split_cmd->add_option("B", b, "Element")->required();
  split_cmd->add_option("--route", route, "rewrite (table) or modules")->check(CLI::IsMember({"rewrite", "modules"}));

  auto* graph_cmd = app.add_subcommand("graph-tensor", "Tensor product of two graph modules (JSON)");
  graph_cmd->add_option("G1", a, "Graph JSON or @file")->required();
  graph_cmd->add_option("G2", b, "Graph JSON or @file")->required();
  graph_cmd->add_flag("--no-validate", no_validate, "Skip conditions (a)-(f) on the inputs");

  auto* render_cmd = app.add_subcommand("render", "Render a module, decomposition or graph");
  render_cmd->add_option("VALUE", a, "Module literal, decomposition, or graph JSON")->required();

  auto* check_cmd = app.add_subcommand("oracle-check", "Compare the tensor rules with the explicit-matrix oracle");
  check_cmd->add_option("A", a, "First module")->required();
  check_cmd->add_option("B", b, "Second module")->required();

  auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
  bool serial = false;
  self_cmd->add_flag("--serial", serial, "Run the criteria one after another");

  for (auto* s : app.get_subcommands({})) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const RenderFormat fmt = g.fmt();
    if (*tensor_cmd) {
      OrbitConfig cfg = g.cfg();
      TensorOptions opt;
      opt.presplit = !direct;
      TensorResult r = tensor(parse_modules(input(a), cfg), parse_modules(input(b), cfg), cfg, opt);
      if (fmt == RenderFormat::Json) {
        nlohmann::json j = decomposition_to_json(r.decomposition);
        j["t"] = r.product_t.str();
        emit(g, j.dump(2) + "\n");
      } else {
        emit(g, render(r.decomposition, cfg, fmt));
      }
    } else if (*decompose_cmd) {
      OrbitConfig cfg = g.cfg();
      Decomposition in = parse_modules(input(a), cfg);
      Decomposition d;
      if (oracle) {
        if (in.summands.empty()) throw validation_error("EmptyInput", "nothing to decompose");
        d = oracle_decompose(realize(in, cfg, in.summands[0].m.t));
      } else {
        for (const auto& s : in.summands) d.add(split_module(s.m, cfg), s.mult);
        d.normalize();
      }
      emit(g, render(d, cfg, fmt));
    } else if (*groth_cmd) {
      OrbitConfig cfg = g.cfg();
      GrothElement x = parse_groth(ring_text(a), cfg), y = parse_groth(ring_text(b), cfg);
      GrothElement r = route == "modules" ? groth_mul_modules(x, y, cfg) : groth_mul_rewrite(x, y, cfg);
      emit(g, ring_doc(g, r.str(), groth_to_json(r)));
    } else if (*hilbert_cmd) {
      if (maxdeg < 0) throw validation_error("InvalidDegree", "maxdeg must be nonnegative");
      nlohmann::json en = nlohmann::json::array(), cl = nlohmann::json::array();
      std::string text = "deg enumerated closed-form\n";
      for (int n = 0; n <= maxdeg; ++n) {
        long e = hilbert_enumerated(g.p, n), c = hilbert_closed_form(g.p, n);
        en.push_back(e);
        cl.push_back(c);
        text += std::to_string(n) + " " + std::to_string(e) + " " + std::to_string(c) + "\n";
      }
      nlohmann::json j = {{"p", g.p}, {"enumerated", en}, {"closed_form", cl}, {"agree", en == cl}};
      emit(g, fmt == RenderFormat::Text ? text : j.dump(2) + "\n");
    } else if (*split_cmd) {
      OrbitConfig cfg = g.cfg();
      const bool mods = route == "modules";
      if (ring == "trivial") {
        auto x = parse_trivial(ring_text(a), cfg), y = parse_trivial(ring_text(b), cfg);
        auto r = mods ? trivial_mul_modules(x, y, cfg) : trivial_mul(x, y);
        emit(g, ring_doc(g, r.str(), lincomb_to_json(r)));
      } else if (ring == "quotient") {
        auto x = parse_quotient(ring_text(a), cfg), y = parse_quotient(ring_text(b), cfg);
        auto r = mods ? quotient_mul_modules(x, y, cfg) : quotient_mul(x, y, cfg);
        emit(g, ring_doc(g, r.str(), lincomb_to_json(r)));
      } else {
        auto x = parse_semisimple(ring_text(a), cfg), y = parse_semisimple(ring_text(b), cfg);
        auto r = mods ? semisimple_mul_modules(x, y, cfg) : semisimple_mul(x, y, cfg);
        emit(g, ring_doc(g, r.str(), lincomb_to_json(r)));
      }
    } else if (*graph_cmd) {
      OrbitConfig cfg = g.cfg();
      GraphModule g1 = GraphModule::from_json(graph_json(a), cfg), g2 = GraphModule::from_json(graph_json(b), cfg);
      if (!no_validate) {
        graph_validate(g1, cfg);
        graph_validate(g2, cfg);
      }
      emit(g, render(graph_tensor(g1, g2), cfg, fmt));
    } else if (*render_cmd) {
      OrbitConfig cfg = g.cfg();
      std::string v = input(a);
      auto j = nlohmann::json::parse(v, nullptr, false);
      if (!j.is_discarded() && j.is_object() && j.contains("vertices"))
        emit(g, render(GraphModule::from_json(j, cfg), cfg, fmt));
      else
        emit(g, render(parse_modules(v, cfg), cfg, fmt));
    } else if (*check_cmd) {
      OrbitConfig cfg = g.cfg();
      Decomposition x = parse_modules(input(a), cfg), y = parse_modules(input(b), cfg);
      if (x.summands.empty() || y.summands.empty()) throw validation_error("EmptyInput", "both inputs need a module");
      Decomposition rules = tensor(x, y, cfg).decomposition;
      Decomposition orc = oracle_decompose(
          kronecker_tensor(realize(x, cfg, x.summands[0].m.t), realize(y, cfg, y.summands[0].m.t)));
      bool match = rules == orc;
      nlohmann::json j = {{"result", match ? "MATCH" : "MISMATCH"},
                          {"rules", decomposition_to_json(rules)},
                          {"oracle", decomposition_to_json(orc)}};
      std::string text = match ? "MATCH\n" : "MISMATCH\n";
      if (!match) {
        for (const auto& s : rules.summands) {
          bool found = false;
          for (const auto& o : orc.summands) found = found || (o.m == s.m && o.mult == s.mult);
          if (!found) text += "rules only: " + s.m.str() + (s.mult > 1 ? " ^" + std::to_string(s.mult) : "") + "\n";
        }
        for (const auto& o : orc.summands) {
          bool found = false;
          for (const auto& s : rules.summands) found = found || (o.m == s.m && o.mult == s.mult);
          if (!found) text += "oracle only: " + o.m.str() + (o.mult > 1 ? " ^" + std::to_string(o.mult) : "") + "\n";
        }
      }
      j["text"] = text;
      emit(g, fmt == RenderFormat::Text ? text : j.dump(2) + "\n");
      return match ? 0 : 5;
    } else if (*self_cmd) {
      AcceptanceOptions opt;
      opt.seed = g.seed;
      opt.parallel = !serial;
      int failed = 0;
      std::string text;
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : run_acceptance(opt)) {
        text += format_result(r) + "\n";
        arr.push_back({{"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
        failed += !r.pass;
      }
      text += std::to_string(9 - failed) + "/9 criteria passed\n";
      emit(g, fmt == RenderFormat::Json ? nlohmann::json({{"criteria", arr}, {"failed", failed}}).dump(2) + "\n" : text);
      return failed ? 5 : 0;
    }
  } catch (const GwaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: InternalError: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
