#pragma once

#include <string>

#include <json.hpp>

#include "gwa/groth.hpp"
#include "gwa/modules.hpp"
#include "gwa/split.hpp"

namespace gwa {

// Sums and products of rationals and z^k (z = zeta_N), with parentheses.
Cyclo parse_scalar(const std::string& s, int N);
TParam parse_tparam(const std::string& s, int p);
// Letters over 01xy; offsets in errors are positions inside the word.
std::string parse_word(const std::string& s);
// [["xi", a], ...]
JordanType parse_jordan(const std::string& s, int N);

// V[t=..; i=..; w=".."] or V[t=..; w=".."@k; F=[["xi",a]]]
Module parse_module(const std::string& s, const OrbitConfig& cfg);
// Module literals joined by '+', each optionally raised to ^m.
Decomposition parse_modules(const std::string& s, const OrbitConfig& cfg);

// Generators u[xi], x[i], x[i,j], y[i], ys[i]; products with '*', powers with '^'.
GrothElement parse_groth(const std::string& s, const OrbitConfig& cfg);
// Generators u[xi] = u(xi,1) and u[xi,a].
TrivialElement parse_trivial(const std::string& s, const OrbitConfig& cfg);
// Generators u[xi], u[1,2], yw[word], ur[c] (u-part whose r-th power is c).
QuotientElement parse_quotient(const std::string& s, const OrbitConfig& cfg);
// Generators u[xi], xa[a], ya[a,xi], ysa[a,xi].
SemisimpleElement parse_semisimple(const std::string& s, const OrbitConfig& cfg);

// JSON forms.  Modules: {"kind":"path","t":..,"i":..,"w":..} or
// {"kind":"cycle","t":..,"w":..,"F":[["xi",a]]}; "w" may also be {"w":..,"start":k}.
nlohmann::json module_to_json(const Module& m);
Module module_from_json(const nlohmann::json& j, const OrbitConfig& cfg);
nlohmann::json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const nlohmann::json& j, const OrbitConfig& cfg);
nlohmann::json groth_to_json(const GrothElement& e);

template <class T>
nlohmann::json lincomb_to_json(const LinComb<T>& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, v] : e.terms) terms.push_back({{"coeff", v.second.get_str()}, {"monomial", v.first.str()}});
  return {{"text", e.str()}, {"terms", terms}};
}

}  // namespace gwa
