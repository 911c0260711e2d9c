#pragma once

#include <stdexcept>
#include <string>

namespace gammacone {

// Bad user-supplied data: malformed files, invalid family parameters,
// orders that are not extensions, cyclic input where acyclic is required.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A size guard tripped. These bound enumeration blowup (2^(l-1) orientations,
// |Pi_1|! orders, l! permutations); callers can catch and report separately.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gammacone
