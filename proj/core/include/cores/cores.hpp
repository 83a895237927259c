#pragma once

#include "cores/abacus.hpp"
#include "cores/actions.hpp"
#include "cores/alcove.hpp"
#include "cores/error.hpp"
#include "cores/orbits.hpp"
#include "cores/partition.hpp"
