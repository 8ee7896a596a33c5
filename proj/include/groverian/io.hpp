#pragma once

#include <string>

#include "groverian/state.hpp"

namespace groverian {

// State file format:
//   {"n": <int>, "amplitudes": [[re, im], ...]}
// with 2^n entries; a bare number is accepted as the real-only shorthand.
StateVector load_state_json(const std::string& path);
StateVector parse_state_json(const std::string& text, const std::string& origin = "<string>");

std::string state_to_json(const StateVector& s);
void save_state_json(const StateVector& s, const std::string& path);

} // namespace groverian
