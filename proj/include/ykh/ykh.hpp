#pragma once

#include "ykh/adelic.hpp"
#include "ykh/braid.hpp"
#include "ykh/cyclotomic.hpp"
#include "ykh/error.hpp"
#include "ykh/esystem.hpp"
#include "ykh/invariant.hpp"
#include "ykh/laurent.hpp"
#include "ykh/permutation.hpp"
#include "ykh/random.hpp"
#include "ykh/ratfunc.hpp"
#include "ykh/rational.hpp"
#include "ykh/trace.hpp"
#include "ykh/trace_polynomial.hpp"
#include "ykh/verify.hpp"
#include "ykh/yokonuma.hpp"
