#pragma once

#include <string>

#include "gwa/graphmod.hpp"
#include "gwa/modules.hpp"

namespace gwa {

enum class RenderFormat { Text, Json, Dot, Svg };

RenderFormat parse_format(const std::string& s);

// Circle layout: weight k sits on the ray at angle 2*pi*k/p, and the n-th
// vertex of that weight (within one sub-figure) at radius 1 + 0.6 n.
std::string render(const Module& m, const OrbitConfig& cfg, RenderFormat f);
std::string render(const Decomposition& d, const OrbitConfig& cfg, RenderFormat f);
std::string render(const GraphModule& g, const OrbitConfig& cfg, RenderFormat f);

}  // namespace gwa
