#pragma once

#include "perob/arith.hpp"
#include "perob/census.hpp"
#include "perob/data_set.hpp"
#include "perob/error.hpp"
#include "perob/fillability.hpp"
#include "perob/gluing.hpp"
#include "perob/json_io.hpp"
#include "perob/monodromy.hpp"
#include "perob/openbook.hpp"
#include "perob/parse.hpp"
#include "perob/realization.hpp"
#include "perob/svg.hpp"
