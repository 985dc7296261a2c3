#pragma once

#include "mixdisc/config.hpp"
#include "mixdisc/csv.hpp"
#include "mixdisc/cubature.hpp"
#include "mixdisc/discretization.hpp"
#include "mixdisc/dyadic.hpp"
#include "mixdisc/errors.hpp"
#include "mixdisc/experiment.hpp"
#include "mixdisc/grid.hpp"
#include "mixdisc/kernels.hpp"
#include "mixdisc/norms.hpp"
#include "mixdisc/plot.hpp"
#include "mixdisc/random.hpp"
#include "mixdisc/rate_fit.hpp"
#include "mixdisc/trig_io.hpp"
#include "mixdisc/trig_poly.hpp"
