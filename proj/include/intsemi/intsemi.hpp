#pragma once

#include "intsemi/core.hpp"
#include "intsemi/estimates.hpp"
#include "intsemi/euler.hpp"
#include "intsemi/families.hpp"
#include "intsemi/fracint.hpp"
#include "intsemi/gallery.hpp"
#include "intsemi/grid.hpp"
#include "intsemi/linalg.hpp"
#include "intsemi/quadrature.hpp"
#include "intsemi/special.hpp"
#include "intsemi/trace.hpp"
#include "intsemi/transforms.hpp"
