#pragma once

#include <stdexcept>
#include <string>

namespace psik {

// Base class for library errors. Subclasses map onto CLI exit codes:
// usage -> 1, validation/resource/internal -> 2. Theorem violations are
// verdicts, not exceptions.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed request: bad spec text, unknown theorem id, wrong flag combo.
struct usage_error : error {
    using error::error;
};

// Structurally invalid data: broken group invariants, bad Cayley table,
// corrupt cache entry that fails re-derivation.
struct validation_error : error {
    using error::error;
};

// A configured cap was exceeded (Cayley materialization size, k limit).
struct resource_error : error {
    using error::error;
};

// Internal consistency assertion failed, e.g. a closed-form division left
// a remainder. Indicates a bug, never user input.
struct internal_error : error {
    using error::error;
};

} // namespace psik
