#pragma once

#include "hyptmp/decompose.hpp"
#include "hyptmp/measure.hpp"
#include "hyptmp/report.hpp"

#include <vector>

namespace hyptmp {

// Curve y (a y + x^2 - y^2).
struct Type3Workspace {
  Decomposition d;
  Rat a;
  Rat eta;
  RatMat H1;   // H(A_hat) on 1, X^2..X^k
  RatMat H2;   // H(A_hat) on X..X^k
  RatMat H22;  // H(A_hat) on X^2..X^k
  std::vector<Rat> h12_1, h12_2;
  Rat t0, u0;
  Rat c_ratio;  // H2 / H22
  bool h2_psd = false;
};

struct BoundaryPoints {
  std::vector<Witness> points;  // increasing u
  bool degenerate_line = false;  // c_ratio = 0
};

Type3Workspace build_workspace3(const BivSeq& s, const Rat& a);

template <class T>
HypStatus hyp_tilde_status(const Matrix<T>& F, int k);

// G(t, u) = A_hat + t E_11 + u (E_12 + E_21).
QMat type3_g(const Type3Workspace& w, const QuadExt& t, const QuadExt& u);

// Points of the boundary of R1 on the boundary of R2; requires eta > 0.
BoundaryPoints boundary_intersection(const Type3Workspace& w);

SolveReport decide_type3(const BivSeq& s, const Rat& a);
Index minimal_atoms_type3(const BivSeq& s, const Rat& a);
PlaneMeasure construct_measure_type3(const BivSeq& s, const Rat& a, unsigned bits);

}  // namespace hyptmp
