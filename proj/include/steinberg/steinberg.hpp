#pragma once

#include "steinberg/affine_oracle.hpp"
#include "steinberg/coxfaces.hpp"
#include "steinberg/descent_algebra.hpp"
#include "steinberg/error.hpp"
#include "steinberg/family.hpp"
#include "steinberg/torusfaces.hpp"
#include "steinberg/verify.hpp"
#include "steinberg/weyl.hpp"
