#pragma once

#include <string>

#include "raaskit/scenario.hpp"

namespace raaskit {

// Line-oriented scenario grammar. '#' starts a comment. Sections:
//   [costs]        key = value pairs: alpha beta gamma tau zeta kappa rho premium
//   [actions]      levels = <ascending list>, load = , max_generation =
//   [outcomes]     whitespace-separated ascending outcome list
//   [distribution] one probability row per action, columns follow outcomes
// Throws ParseError (line-anchored) on grammar violations and
// ValidationError when the parsed scenario breaks a model invariant.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

// Canonical emission; parse_scenario(format_scenario(s)) reproduces s
// exactly, bit for bit.
std::string format_scenario(const Scenario& s);
void save_scenario(const Scenario& s, const std::string& path);

}  // namespace raaskit
