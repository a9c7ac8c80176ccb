#pragma once

#include "sbp/algebra.hpp"
#include "sbp/error.hpp"
#include "sbp/functions.hpp"
#include "sbp/incidence.hpp"
#include "sbp/report.hpp"
#include "sbp/search.hpp"
#include "sbp/splitting.hpp"
#include "sbp/verify.hpp"
