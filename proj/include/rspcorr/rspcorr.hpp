#pragma once

#include "rspcorr/entropy.hpp"
#include "rspcorr/format.hpp"
#include "rspcorr/measures.hpp"
#include "rspcorr/optimize.hpp"
#include "rspcorr/parallel.hpp"
#include "rspcorr/quadrature.hpp"
#include "rspcorr/random.hpp"
#include "rspcorr/rsp.hpp"
#include "rspcorr/state.hpp"
#include "rspcorr/state_spec.hpp"
#include "rspcorr/types.hpp"
#include "rspcorr/verify.hpp"
