#pragma once

#include <stdexcept>
#include <string>

namespace germ {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input or violated precondition. The CLI maps this to exit code 2.
struct InputError : Error {
    using Error::Error;
};

// A configured resource limit was hit (tower depth, refinement budget).
// The CLI maps this to exit code 3.
struct ResourceError : Error {
    using Error::Error;
};

// A broken internal invariant; always a bug.
struct InternalError : Error {
    using Error::Error;
};

// Tunable limits for the exact-arithmetic kernel. Values are read at the
// point of use, so they must be configured before computation starts.
struct Limits {
    int tower_depth = 16;      // max number of stacked algebraic extensions
    int refine_steps = 256;    // interval bisections before the exact zero
                               // test becomes mandatory
    long track_steps = 20000;  // Newton-polygon tracking step budget
};

Limits& limits();

}  // namespace germ
