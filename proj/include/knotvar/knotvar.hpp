#pragma once

#include "knotvar/bigint.hpp"
#include "knotvar/closedform.hpp"
#include "knotvar/exactpoly.hpp"
#include "knotvar/ffield.hpp"
#include "knotvar/knot.hpp"
#include "knotvar/matgroups.hpp"
#include "knotvar/parallel.hpp"
#include "knotvar/repcount.hpp"
#include "knotvar/strata.hpp"
#include "knotvar/trends.hpp"
