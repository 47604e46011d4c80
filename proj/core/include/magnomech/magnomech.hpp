#pragma once

// Umbrella header for the magnomech steady-state entanglement library.

#include "magnomech/constants.hpp"
#include "magnomech/dynamics.hpp"
#include "magnomech/entanglement.hpp"
#include "magnomech/errors.hpp"
#include "magnomech/lyapunov.hpp"
#include "magnomech/params.hpp"
#include "magnomech/pipeline.hpp"
#include "magnomech/sphere.hpp"
#include "magnomech/steadystate.hpp"
#include "magnomech/sweep.hpp"
#include "magnomech/thermal.hpp"
#include "magnomech/types.hpp"
#include "magnomech/validity.hpp"
