#include "hyptmp/solve.hpp"

#include "hyptmp/type1.hpp"
#include "hyptmp/type2.hpp"
#include "hyptmp/type3.hpp"

namespace hyptmp {

namespace {

void require_order(const BivSeq& s, const CurveType& c) {
  c.validate();
  if (s.k() < 3) throw std::invalid_argument("degree 2k with k >= 3 required, got k = " + std::to_string(s.k()));
}

}  // namespace

SolveReport decide(const BivSeq& s, const CurveType& c) {
  require_order(s, c);
  switch (c.tag) {
    case Curve::Hyp1:
      return decide_type1(s);
    case Curve::Hyp2:
      return decide_type2(s, c.a);
    case Curve::Hyp3:
      return decide_type3(s, c.a);
  }
  throw std::logic_error("unknown curve");
}

PlaneMeasure construct_measure(const BivSeq& s, const CurveType& c, unsigned bits) {
  require_order(s, c);
  switch (c.tag) {
    case Curve::Hyp1:
      return construct_measure_type1(s, bits);
    case Curve::Hyp2:
      return construct_measure_type2(s, c.a, bits);
    case Curve::Hyp3:
      return construct_measure_type3(s, c.a, bits);
  }
  throw std::logic_error("unknown curve");
}

}  // namespace hyptmp
