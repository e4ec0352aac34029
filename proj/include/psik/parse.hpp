#pragma once

// Text grammar for group specs:
//   spec  := atom { "*" atom }
//   atom  := "C" int | "D" int | "Dic" int
//          | "A[" prime ":" parts { ";" prime ":" parts } "]"
//          | "SD(" prime "^" int "," int "," int ")"
//          | "file:" path
//   parts := int { "," int }
// "*" is direct product. D18 denotes the dihedral group of order 36.

#include <string>
#include <string_view>

#include "psik/group.hpp"

namespace psik {

/// Parse and structurally validate a spec. Syntax errors raise usage_error
/// with a caret marking the offending position; invariant violations raise
/// validation_error naming the broken invariant.
GroupSpec parse_spec(std::string_view text,
                     CayleyCheckPolicy policy = CayleyCheckPolicy::Auto);

} // namespace psik
