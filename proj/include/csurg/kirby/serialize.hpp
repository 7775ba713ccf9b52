#pragma once

#include <string>
#include <string_view>

#include "csurg/kirby/diagram.hpp"

namespace csurg::kirby {

// Canonical text; see docs/kirby_format.md. Validates first.
std::string serialize_diagram(const KirbyDiagram& d);

// Throws malformed_text with a line number, or dangling_reference.
KirbyDiagram parse_diagram(std::string_view text);

}  // namespace csurg::kirby
