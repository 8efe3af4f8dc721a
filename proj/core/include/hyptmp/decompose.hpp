#pragma once

#include "hyptmp/hamburger.hpp"
#include "hyptmp/moments.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyptmp {

class PreconditionFailure : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Decomposition {
  CurveType curve;
  int k = 0;
  MomentMatrix<Rat> mm;          // M(k) in degree-lex order
  IndexList x_pos;               // rows of 1, X, ..., X^k
  std::vector<Monomial> t1;      // leading monomials of the T1 columns
  RatMat t1_basis;               // T1 columns as combinations of monomial columns
  IndexList order;               // X block, T1 leads, remaining columns
  RatMat m_tilde;                // M(k) permuted by `order`
  RatMat A11, A12, A22;
  RatMat A_min;
  RatMat A_hat;
  Rat eta{0};
  Index hat_row = 0, hat_col = 0;  // corrected entry of A_hat (and its mirror)
};

// Requires the curve relations and M(k) psd; throws PreconditionFailure otherwise.
// hyp2 sequences must already be normalized to c = x + y - xy.
Decomposition build_decomposition(const BivSeq& s, const CurveType& c);

// F(A): M(k) with the X block replaced by A (degree-lex order).
template <class T>
Matrix<T> f_of(const Decomposition& d, const Matrix<T>& A);
// H(A) = A11 - A.
template <class T>
Matrix<T> h_of(const Decomposition& d, const Matrix<T>& A);

// The conic moments beta^(c)_{i,0} fixed by L(x^i c) = 0.
std::vector<std::pair<Index, Rat>> determined_conic_moments(const BivSeq& s, const CurveType& c);

// (g_0, ..., g_2k) with A(i, j) = g_{i+j}; throws std::logic_error when A is not Hankel.
template <class T>
UniSeq<T> hankel_entries(const Matrix<T>& A);

// beta with the pure x-moments replaced by the Hankel entries of A.
template <class T>
BasicBivSeq<T> conic_sequence(const BivSeq& s, const Matrix<T>& A);

// beta_{i,0} - g_i for the Hankel entries g of A.
template <class T>
UniSeq<T> line_sequence(const BivSeq& s, const Matrix<T>& A);

enum class HypTag { Hyp1, Hyp2, None };
std::string to_string(HypTag t);

struct HypStatus {
  HypTag tag = HypTag::None;
  bool psd = false;
  Index rank = 0;
  Index rank_drop_first = 0;   // without X^k
  Index rank_drop_second = 0;  // without Y^k (hyp2) or YX^{k-1} (hyp3)
};

// Rank conditions on F over a basis B; `second` is the other monomial removed.
template <class T>
HypStatus hyp_check(const Matrix<T>& F, int k, const std::vector<Monomial>& basis, const Monomial& second);

}  // namespace hyptmp
