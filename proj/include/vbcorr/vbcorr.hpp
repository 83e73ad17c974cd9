#pragma once

#include "vbcorr/linalg.hpp"
#include "vbcorr/kinematics.hpp"
#include "vbcorr/spin1rep.hpp"
#include "vbcorr/states.hpp"
#include "vbcorr/observables.hpp"
#include "vbcorr/correlators.hpp"
#include "vbcorr/numerics.hpp"
#include "vbcorr/bell.hpp"
#include "vbcorr/random.hpp"
#include "vbcorr/io.hpp"
#include "vbcorr/sweep.hpp"
#include "vbcorr/verify.hpp"
