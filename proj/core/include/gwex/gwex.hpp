#pragma once

#include "gwex/covariance.hpp"
#include "gwex/entropy.hpp"
#include "gwex/errors.hpp"
#include "gwex/fock.hpp"
#include "gwex/measurement.hpp"
#include "gwex/symplectic.hpp"
#include "gwex/thermo.hpp"
