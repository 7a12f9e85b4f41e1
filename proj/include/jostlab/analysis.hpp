#pragma once

#include "jostlab/arcscan.hpp"
#include "jostlab/bounds.hpp"
#include "jostlab/qat.hpp"
