#pragma once

#include <stdexcept>
#include <string>

namespace qsim {

// Invalid arguments: out-of-range indices, malformed inputs, broken preconditions.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A request exceeding the qubit, matrix or shot caps.
struct resource_error : std::length_error {
    using std::length_error::length_error;
};

// Not enough measurement data yet; the caller should gather more rounds.
struct insufficient_data : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace qsim
