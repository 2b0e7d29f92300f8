#pragma once

#include "ballot.hpp"
#include "bigint.hpp"
#include "census.hpp"
#include "checks.hpp"
#include "errors.hpp"
#include "report.hpp"
#include "rootops.hpp"
#include "rootops_nd.hpp"
#include "series.hpp"
#include "walk.hpp"
#include "walk_nd.hpp"
