#pragma once

#include "comblock/analog.hpp"
#include "comblock/error.hpp"
#include "comblock/keyspace.hpp"
#include "comblock/lock.hpp"
#include "comblock/scenario_io.hpp"
#include "comblock/sim.hpp"
#include "comblock/table1.hpp"
