// avoidance.hpp -- umbrella header for the avoidance-kit library.

#pragma once

#include "classify.hpp"
#include "enumerate.hpp"
#include "factor_set.hpp"
#include "json_io.hpp"
#include "morphism.hpp"
#include "permutation.hpp"
#include "search.hpp"
#include "squares.hpp"
#include "word.hpp"
