#pragma once

#include "radix/algebra.hpp"
#include "radix/errors.hpp"
#include "radix/expr.hpp"
#include "radix/numeric.hpp"
#include "radix/radical.hpp"
#include "radix/report.hpp"
