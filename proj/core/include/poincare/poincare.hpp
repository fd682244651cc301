#pragma once

#include "poincare/error.hpp"
#include "poincare/matrix.hpp"
#include "poincare/partition.hpp"
#include "poincare/positivity.hpp"
#include "poincare/quantum.hpp"
#include "poincare/rational.hpp"
#include "poincare/series.hpp"
#include "poincare/symfun.hpp"
