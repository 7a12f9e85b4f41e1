#pragma once

#include "jostlab/analysis.hpp"
#include "jostlab/errors.hpp"
#include "jostlab/potentials.hpp"
#include "jostlab/quadrature.hpp"
#include "jostlab/resonances.hpp"
#include "jostlab/scattering.hpp"
#include "jostlab/surface.hpp"
#include "jostlab/testfuncs.hpp"
#include "jostlab/transforms.hpp"
