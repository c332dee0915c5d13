#pragma once

#include "qsim/qstate.hpp"

namespace qsim {

template <class Answer>
struct AlgorithmResult {
    Answer answer{};
    Distribution exact_distribution;  // pre-measurement distribution of the read-out register
    int rounds_used = 0;
    bool success = true;
};

}  // namespace qsim
