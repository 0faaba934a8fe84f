#pragma once

#include "thermoform/calculus.hpp"
#include "thermoform/core.hpp"
#include "thermoform/cycles.hpp"
#include "thermoform/dual.hpp"
#include "thermoform/eos.hpp"
#include "thermoform/lagrangian.hpp"
#include "thermoform/maxwell.hpp"
#include "thermoform/paths.hpp"
#include "thermoform/quadrature.hpp"
