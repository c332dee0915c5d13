#pragma once

#include "qsim/algorithms/bernstein_vazirani.hpp"
#include "qsim/algorithms/deutsch.hpp"
#include "qsim/algorithms/dlog.hpp"
#include "qsim/algorithms/grover.hpp"
#include "qsim/algorithms/qft.hpp"
#include "qsim/algorithms/qpe.hpp"
#include "qsim/algorithms/result.hpp"
#include "qsim/algorithms/shor.hpp"
#include "qsim/algorithms/simon.hpp"
#include "qsim/algorithms/skeleton.hpp"
