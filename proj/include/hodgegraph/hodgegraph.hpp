#pragma once

#include "hodgegraph/boundary.hpp"
#include "hodgegraph/check_suite.hpp"
#include "hodgegraph/cycles.hpp"
#include "hodgegraph/error.hpp"
#include "hodgegraph/fields.hpp"
#include "hodgegraph/graph.hpp"
#include "hodgegraph/hodge.hpp"
#include "hodgegraph/maxwell.hpp"
#include "hodgegraph/numerics.hpp"
#include "hodgegraph/operators.hpp"
#include "hodgegraph/random.hpp"
#include "hodgegraph/theorems.hpp"
