#pragma once

#include <string>

#include "rectdist/geometry.hpp"

namespace rectdist {

// Parses a flat "key = value" scenario description. Recognized keys:
// name, lx, ly, ux, uy, uz, vz. Blank lines and '#' comments are ignored.
// lx and ly are mandatory; ux/uy/uz default to 0; vz stays unset when
// absent. Unknown keys, malformed ordinals and geometry violations throw
// std::invalid_argument.
RectScenario parse_scenario_text(const std::string& text,
                                 const std::string& fallback_name);

// Reads a scenario from a file with parse_scenario_text; the file's stem is
// the fallback name. Throws std::invalid_argument when unreadable.
RectScenario load_scenario_file(const std::string& path);

// Accepts a preset letter ("O", "A", "B", "C") or a config file path.
RectScenario load_scenario(const std::string& name_or_path);

// Shortest round-trippable decimal with 12 significant digits; the CSV
// number format everywhere.
std::string format_g12(double v);

// FNV-1a 64-bit hash of the scenario geometry (not the name), as 16 hex
// digits. Stamped into sample/codebook CSV headers so outputs can be traced
// to the exact geometry that produced them.
std::string scenario_hash_hex(const RectScenario& s);

}  // namespace rectdist
