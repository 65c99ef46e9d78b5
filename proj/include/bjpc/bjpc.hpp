#ifndef BJPC_BJPC_HPP
#define BJPC_BJPC_HPP

#include "bjpc/estimate.hpp"
#include "bjpc/experiments.hpp"
#include "bjpc/intervals.hpp"
#include "bjpc/io.hpp"
#include "bjpc/model.hpp"
#include "bjpc/ocs.hpp"
#include "bjpc/parallel.hpp"
#include "bjpc/reference_tables.hpp"
#include "bjpc/region.hpp"
#include "bjpc/rng.hpp"
#include "bjpc/roots.hpp"
#include "bjpc/simulate.hpp"
#include "bjpc/special_functions.hpp"

#endif  // BJPC_BJPC_HPP
