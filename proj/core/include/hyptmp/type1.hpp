#pragma once

#include "hyptmp/hamburger.hpp"
#include "hyptmp/measure.hpp"
#include "hyptmp/report.hpp"

#include <vector>

namespace hyptmp {

// Curve y (1 - x y).
struct Type1Workspace {
  int k = 0;
  std::vector<Monomial> t_order;  // Y^k..Y, YX..YX^{k-1}, 1..X^k
  RatMat M_hat_T;
  RatMat N;  // X^k replaced by YX^k
  RatMat R;
  std::vector<Rat> m12, n12;
  RatMat F1;  // rows 1..X^{k-1}
  RatMat F2;  // rows Y^k..Y, YX..YX^k
  std::vector<Rat> w1, w2;
  std::vector<Rat> a, b, c;
  Rat t_prime, u_prime, u_dprime;
};

// beta_{i,j} extended past degree 2k by the relation x y^2 = y.
Rat type1_moment(const BivSeq& s, int i, int j);

Type1Workspace build_workspace1(const BivSeq& s);

UniSeq<QuadExt> gamma1_type1(const BivSeq& s, const QuadExt& t, const QuadExt& u);
UniSeq<QuadExt> gamma2_type1(const BivSeq& s, const QuadExt& t, const QuadExt& u);

SolveReport decide_type1(const BivSeq& s);
Index minimal_atoms_type1(const BivSeq& s);
PlaneMeasure construct_measure_type1(const BivSeq& s, unsigned bits);

}  // namespace hyptmp
