#pragma once

#include "hyptmp/measure.hpp"
#include "hyptmp/report.hpp"

namespace hyptmp {

// Entry points over all three curve types; k >= 3 is required.
SolveReport decide(const BivSeq& s, const CurveType& c);
PlaneMeasure construct_measure(const BivSeq& s, const CurveType& c, unsigned bits);

}  // namespace hyptmp
