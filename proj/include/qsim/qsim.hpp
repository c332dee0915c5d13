#pragma once

#include "qsim/algorithms.hpp"
#include "qsim/bits.hpp"
#include "qsim/circuit.hpp"
#include "qsim/errors.hpp"
#include "qsim/gates.hpp"
#include "qsim/gf2.hpp"
#include "qsim/limits.hpp"
#include "qsim/numtheory.hpp"
#include "qsim/oracles/boolean_expr.hpp"
#include "qsim/oracles/modular.hpp"
#include "qsim/oracles/synthesis.hpp"
#include "qsim/oracles/truth_table.hpp"
#include "qsim/qstate.hpp"
#include "qsim/random.hpp"
