#pragma once

#include "legint/rational.hpp"
#include "legint/gamma.hpp"
#include "legint/polynomial.hpp"
#include "legint/legendre.hpp"
#include "legint/hypergeom.hpp"
#include "legint/pipeline.hpp"
#include "legint/oracles.hpp"
