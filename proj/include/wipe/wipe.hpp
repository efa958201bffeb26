// wipe.hpp: Umbrella header.

#pragma once

#include "wipe/analytic_qubit.hpp"
#include "wipe/config.hpp"
#include "wipe/linalg.hpp"
#include "wipe/measures.hpp"
#include "wipe/models.hpp"
#include "wipe/scenarios.hpp"
#include "wipe/state.hpp"
#include "wipe/stepper.hpp"
#include "wipe/sweep.hpp"
#include "wipe/table.hpp"
