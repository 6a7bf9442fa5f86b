#pragma once

// Umbrella header: exact-arithmetic quasimap wall-crossing toolkit.

#include "qwc/bernoulli.hpp"
#include "qwc/brackets.hpp"
#include "qwc/cache.hpp"
#include "qwc/cohomology.hpp"
#include "qwc/errors.hpp"
#include "qwc/genus0.hpp"
#include "qwc/ifun.hpp"
#include "qwc/invariant_table.hpp"
#include "qwc/json_io.hpp"
#include "qwc/rational.hpp"
#include "qwc/report.hpp"
#include "qwc/series.hpp"
#include "qwc/target.hpp"
#include "qwc/wallcross.hpp"
#include "qwc/zpoly.hpp"
