#pragma once

#include "errors.hpp"
#include "expansion.hpp"
#include "fft_expansion.hpp"
#include "oracles.hpp"
#include "polynomial.hpp"
#include "spatial.hpp"
#include "trial.hpp"
#include "trinary.hpp"
#include "update.hpp"
