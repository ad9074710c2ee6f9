#pragma once

#include "wlanrr/convex_subsets.hpp"
#include "wlanrr/error.hpp"
#include "wlanrr/mac_simulator.hpp"
#include "wlanrr/mesh.hpp"
#include "wlanrr/num_solver.hpp"
#include "wlanrr/example_scenario.hpp"
#include "wlanrr/rate_region.hpp"
#include "wlanrr/sampling.hpp"
#include "wlanrr/tolerances.hpp"
#include "wlanrr/utility.hpp"
#include "wlanrr/wlan_model.hpp"
