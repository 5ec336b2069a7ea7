#pragma once

#include "hypell/errors.hpp"
#include "hypell/numerics.hpp"
#include "hypell/hypergeometric.hpp"
#include "hypell/jacobi.hpp"
#include "hypell/modulus.hpp"
#include "hypell/amplitude.hpp"
#include "hypell/weierstrass.hpp"
#include "hypell/family.hpp"
#include "hypell/verify.hpp"
