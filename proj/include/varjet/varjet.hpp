// Umbrella header.
#pragma once

#include "affine.hpp"
#include "dual.hpp"
#include "errors.hpp"
#include "euclid3.hpp"
#include "euler_poisson.hpp"
#include "fields.hpp"
#include "flow.hpp"
#include "helmholtz.hpp"
#include "jet_point.hpp"
#include "jet_project.hpp"
#include "metric.hpp"
#include "ode.hpp"
#include "sampling.hpp"
#include "series.hpp"
#include "symmetry.hpp"
