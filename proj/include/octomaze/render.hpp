#pragma once

#include <cstddef>
#include <string>

#include "octomaze/geometry.hpp"

namespace octomaze {

constexpr std::size_t kDefaultBounceCap = 1000;

/// SVG picture of the maze and the first bounces of the ray. The viewBox is
/// the bounding box with y pointing up. Reflective sides get a tick.
std::string render_svg(const Environment& env, std::size_t bounce_cap = kDefaultBounceCap);

}  // namespace octomaze
