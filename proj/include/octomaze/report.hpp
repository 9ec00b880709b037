#pragma once

#include <string>

#include "octomaze/pipeline.hpp"

namespace octomaze {

/// JSON fate report: exact numbers as strings, rationals as "p/q", fixed
/// key order, two-space indent, trailing newline.
std::string fate_report(const Fate& f);

/// Same document for a failure: {"error": code, "message": ..., "line": n}.
std::string error_report(const Error& e);

}  // namespace octomaze
