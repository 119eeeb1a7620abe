#ifndef REGOPEN_REGOPEN_HPP
#define REGOPEN_REGOPEN_HPP

#include "regopen/density.hpp"
#include "regopen/enumerate.hpp"
#include "regopen/error.hpp"
#include "regopen/ideals.hpp"
#include "regopen/io.hpp"
#include "regopen/lattice.hpp"
#include "regopen/metric.hpp"
#include "regopen/point_set.hpp"
#include "regopen/regular_open.hpp"
#include "regopen/suite.hpp"
#include "regopen/symbolic.hpp"
#include "regopen/topology.hpp"

#endif  // REGOPEN_REGOPEN_HPP
