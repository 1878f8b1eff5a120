#ifndef SYMPOLY_SYMPOLY_HPP
#define SYMPOLY_SYMPOLY_HPP

// Everything except io.hpp, which additionally needs nlohmann/json.

#include "budget.hpp"
#include "ehrhart.hpp"
#include "facets.hpp"
#include "families.hpp"
#include "flows.hpp"
#include "generators.hpp"
#include "genfun.hpp"
#include "graph.hpp"
#include "kr.hpp"
#include "linear.hpp"
#include "polynomial.hpp"
#include "rational_function.hpp"
#include "types.hpp"
#include "verify.hpp"
#include "volume.hpp"

#endif
