#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "octomaze/geometry.hpp"

namespace octomaze {

/// Line grammar, '#' starts a comment:
///   segment X1 Y1 X2 Y2 left=(reflect|absorb) right=(reflect|absorb)
///   ray PX PY DX DY
///   bbox X1 Y1 X2 Y2
/// Exactly one ray, at most one bbox. Errors carry the offending line.
Environment parse_environment(std::string_view text);

/// Text that parses back to an equal environment.
std::string serialize_environment(const Environment& env);

struct GenOptions {
  std::uint64_t seed = 0;
  std::size_t segments = 0;
  long extent = 16;
  /// Chance, in percent, that a given side reflects.
  int reflect_percent = 50;
  /// Largest |dx|, |dy| of the ray direction.
  int max_direction = 7;
};

/// Random disjoint octagonal segments in [0, extent]^2 with a start and
/// direction; same options, same text. GenerationFailure if placement keeps
/// colliding.
std::string generate_environment(const GenOptions& opts);

}  // namespace octomaze
