#pragma once

#include <string>

#include <json.hpp>

#include "tanrep/window.hpp"

namespace tanrep {

// Shortest round-trip decimal for a double ("%.17g" style, locale-free).
std::string format_real(double v);

nlohmann::ordered_json window_to_json(const WindowParams& w);

}  // namespace tanrep
