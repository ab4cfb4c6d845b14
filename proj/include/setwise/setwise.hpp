#pragma once

#include "errors.hpp"
#include "numeric.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "cycle_counts.hpp"
#include "characters.hpp"
#include "spectral.hpp"
#include "extremal.hpp"
#include "io.hpp"
