#pragma once

#include <stdexcept>
#include <string>

namespace matpoly {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, matrices, polynomial files).
struct parse_error : error {
    using error::error;
};

/// Unreadable or missing file.
struct io_error : error {
    using error::error;
};

/// Dimension, index, or degree precondition violated.
struct shape_error : error {
    using error::error;
};

/// Two grid nodes project to the same value under the chosen direction.
struct collision_error : error {
    collision_error(const std::string& msg, int i1, int j1, int i2, int j2)
        : error(msg), i1(i1), j1(j1), i2(i2), j2(j2) {}
    int i1, j1, i2, j2;
};

/// Reference data disagrees with the matrix it is supposed to reproduce.
struct mismatch_error : error {
    using error::error;
};

} // namespace matpoly
