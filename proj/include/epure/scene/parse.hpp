#pragma once

#include <string>

#include "epure/scene/ast.hpp"

namespace epure::scene {

// Parse a scene script.  Line-oriented grammar; throws ParseError carrying
// the line/column of the first offending token.
Scene parse_scene(const std::string& text);

// Canonical source text for a scene; parse_scene(pretty_print(s)) == s.
std::string pretty_print(const Scene& s);

}  // namespace epure::scene
