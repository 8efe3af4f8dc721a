#pragma once

#include "hyptmp/hamburger.hpp"
#include "hyptmp/measure.hpp"

#include <optional>
#include <string>

namespace hyptmp {

struct ConicReport {
  bool representable = false;
  Index rank = 0;
  std::string branch;  // "B-block pd" or "rank equality"
  std::string reason;
};

// Identities L(x^i y^j c) = 0, i + j <= 2k - 2, for a conic c.
template <class T>
RelationReport check_conic_relations(const BasicBivSeq<T>& s, const BiPoly& c);

template <class T>
ConicReport solve_xy1(const BasicBivSeq<T>& s);

// Atoms (x, 1/x) from the strong Hamburger measure of
// v = (beta_{0,2k}, ..., beta_{0,0}, beta_{1,0}, ..., beta_{2k,0}).
template <class T>
PlaneMeasure extract_xy1(const BasicBivSeq<T>& s, unsigned bits);

// Maps sending the conic to xy = 1: (x, y) -> (1 - x, 1 - y) for x + y - xy,
// (x, y) -> (1 - 2(x+y)/a, 1 + 2(x-y)/a) for a y + x^2 - y^2.
Affine xy1_map_x_plus_y_minus_xy();
Affine xy1_map_ay_x2_y2(const Rat& a);

template <class T>
ConicReport solve_x_plus_y_minus_xy(const BasicBivSeq<T>& s);
template <class T>
PlaneMeasure extract_x_plus_y_minus_xy(const BasicBivSeq<T>& s, unsigned bits);

template <class T>
ConicReport solve_ay_x2_y2(const BasicBivSeq<T>& s, const Rat& a);
template <class T>
PlaneMeasure extract_ay_x2_y2(const BasicBivSeq<T>& s, const Rat& a, unsigned bits);

}  // namespace hyptmp
