#pragma once

#include "gammacone/bignum.hpp"
#include "gammacone/count.hpp"
#include "gammacone/errors.hpp"
#include "gammacone/graph.hpp"
#include "gammacone/order.hpp"
#include "gammacone/principal.hpp"
#include "gammacone/report.hpp"
#include "gammacone/series.hpp"
#include "gammacone/verify.hpp"
