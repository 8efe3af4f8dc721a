#pragma once

#include "hyptmp/decompose.hpp"
#include "hyptmp/measure.hpp"
#include "hyptmp/report.hpp"

#include <vector>

namespace hyptmp {

// Curve y (x + y + a x y); solved after rescaling to a = -1.
struct Type2Workspace {
  Decomposition d;
  Rat eta;
  RatMat H22;  // H(A_hat) on X..X^{k-1}
  std::vector<Rat> h12, h23;
  RatMat K;
  Rat t_max, u_max, k12;
  RatMat F22;  // F(A_min) on Y^k..Y, X..X^{k-1}
  Rat B_const;
};

// phi(x, y) = (-a x, -a y).
Affine type2_normalizer(const Rat& a);
BivSeq normalize_type2(const BivSeq& s, const Rat& a);

// Expects a normalized sequence.
Type2Workspace build_workspace2(const BivSeq& s);

template <class T>
HypStatus hyp_status(const Matrix<T>& F, int k);

// G(t, u) = A_hat + t E_11 + u E_{k+1,k+1}.
QMat type2_g(const Type2Workspace& w, const QuadExt& t, const QuadExt& u);

std::vector<Witness> candidate_pairs2(const Type2Workspace& w);

// The sequence is given in the original coordinates with coefficient a.
SolveReport decide_type2(const BivSeq& s, const Rat& a = Rat(-1));
Index minimal_atoms_type2(const BivSeq& s, const Rat& a = Rat(-1));
PlaneMeasure construct_measure_type2(const BivSeq& s, const Rat& a, unsigned bits);

}  // namespace hyptmp
