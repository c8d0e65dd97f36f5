// Umbrella header.
#pragma once

#include "schurlab/completion.hpp"
#include "schurlab/core_matrix.hpp"
#include "schurlab/extreme_points.hpp"
#include "schurlab/group_enumeration.hpp"
#include "schurlab/infinite_truncation.hpp"
#include "schurlab/multiplicative.hpp"
#include "schurlab/random.hpp"
#include "schurlab/star_positive.hpp"
