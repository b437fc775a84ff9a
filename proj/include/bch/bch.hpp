#pragma once

#include "bch/complex_eig.hpp"
#include "bch/error.hpp"
#include "bch/operators.hpp"
#include "bch/oracle.hpp"
#include "bch/scalar.hpp"
#include "bch/tmodule.hpp"
#include "bch/types.hpp"
