#pragma once

#include <doctest.h>

#include "gwa/parse.hpp"

namespace th {

inline gwa::Cyclo Q(int N, long a, long b = 1) { return gwa::Cyclo(N, mpq_class(a, b)); }
inline gwa::Module M(const std::string& s, const gwa::OrbitConfig& cfg) { return gwa::parse_module(s, cfg); }
inline gwa::Decomposition D(const std::string& s, const gwa::OrbitConfig& cfg) { return gwa::parse_modules(s, cfg); }

}  // namespace th
