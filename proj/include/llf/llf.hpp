#pragma once

#include "llf/error.hpp"
#include "llf/expr.hpp"
#include "llf/lfactor.hpp"
#include "llf/numeric.hpp"
#include "llf/parameters.hpp"
#include "llf/predicates.hpp"
#include "llf/rational.hpp"
#include "llf/rules.hpp"
#include "llf/sweeps.hpp"
#include "llf/tensor.hpp"
