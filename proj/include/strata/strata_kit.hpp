#pragma once

#include "strata/error.hpp"
#include "strata/exact.hpp"
#include "strata/comm_poly.hpp"
#include "strata/labels.hpp"
#include "strata/groebner.hpp"
#include "strata/poisson.hpp"
#include "strata/quantum.hpp"
#include "strata/expr.hpp"
#include "strata/skew.hpp"
#include "strata/strata_data.hpp"
#include "strata/stratum_maps.hpp"
#include "strata/report.hpp"
#include "strata/suites.hpp"
