#pragma once

#include "vortex/basis.hpp"
#include "vortex/bounds.hpp"
#include "vortex/errors.hpp"
#include "vortex/field.hpp"
#include "vortex/model.hpp"
#include "vortex/optimizer.hpp"
#include "vortex/oracle.hpp"
#include "vortex/params.hpp"
#include "vortex/quadrature.hpp"
#include "vortex/special.hpp"
#include "vortex/sphere_descent.hpp"
#include "vortex/tent.hpp"
#include "vortex/version.hpp"
