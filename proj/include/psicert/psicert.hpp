#pragma once

#include "psicert/rational.hpp"
#include "psicert/interval.hpp"
#include "psicert/elementary.hpp"
#include "psicert/json.hpp"
#include "psicert/series.hpp"
#include "psicert/polygamma.hpp"
#include "psicert/polynomial.hpp"
#include "psicert/logexpr.hpp"
#include "psicert/expr.hpp"
#include "psicert/catalog.hpp"
#include "psicert/theorems.hpp"
#include "psicert/report.hpp"
