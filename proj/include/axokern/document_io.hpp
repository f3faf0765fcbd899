#pragma once

#include <string>

#include "axokern/schematic.hpp"

namespace axokern {

// Builds a Schematic from the JSON document text. Malformed documents raise
// KernelError(kParseError); structurally valid ones that fail validation
// raise ValidationFailed with the full diagnostic list.
Schematic parse_schematic(const std::string& text);

// parse_schematic over the contents of path; unreadable files raise
// KernelError(kIoError).
Schematic load_schematic(const std::string& path);

}  // namespace axokern
