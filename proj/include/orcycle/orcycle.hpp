#pragma once

// Umbrella header: the whole public interface.

#include "orcycle/classify.hpp"
#include "orcycle/coloring.hpp"
#include "orcycle/construct.hpp"
#include "orcycle/cycle.hpp"
#include "orcycle/enumerate.hpp"
#include "orcycle/error.hpp"
#include "orcycle/oracle.hpp"
#include "orcycle/sweep.hpp"
#include "orcycle/target.hpp"
