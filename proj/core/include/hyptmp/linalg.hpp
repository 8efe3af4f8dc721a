#pragma once

#include "hyptmp/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace hyptmp {

inline bool is_zero(const Rat& q) { return q == 0; }
inline bool is_zero(const QuadExt& q) { return q.sign() == 0; }

struct Echelon {
  IndexList pivots;  // pivot columns of the reduced row echelon form
};

template <class T>
Index rank(const Matrix<T>& m);

// Reduced row echelon form; returns the nonzero rows and records pivot columns.
template <class T>
Matrix<T> rref(const Matrix<T>& m, Echelon* info = nullptr);

// Columns form a basis of the null space; each has a 1 at its free column.
template <class T>
Matrix<T> kernel(const Matrix<T>& m);

// Inverse of a nonsingular square matrix; throws std::domain_error otherwise.
template <class T>
Matrix<T> inverse(const Matrix<T>& m);

// Solves a x = b for nonsingular square a.
template <class T>
std::vector<T> solve(const Matrix<T>& a, const std::vector<T>& b);

// Moore-Penrose pseudoinverse through the full-rank factorization m = F G.
template <class T>
Matrix<T> pinv(const Matrix<T>& m);

struct PsdInfo {
  bool psd = false;
  Index rank = 0;
};

// Symmetric-pivoted LDL^T. Rank is meaningful only when psd holds.
template <class T>
PsdInfo psd_info(const Matrix<T>& m);

template <class T>
bool is_psd(const Matrix<T>& m) {
  return psd_info(m).psd;
}
template <class T>
bool is_pd(const Matrix<T>& m) {
  auto r = psd_info(m);
  return r.psd && r.rank == m.rows();
}

// M/A = C - B^T A^+ B for M = [[A, B], [B^T, C]] with A the leading head block.
// With trailing = true, returns M/C = A - B C^+ B^T instead.
template <class T>
Matrix<T> schur(const Matrix<T>& m, Index head, bool trailing = false);

// Generalized Schur complement of m with respect to the principal block on keep_out,
// i.e. m[rest] - m[rest, keep_out] m[keep_out]^+ m[keep_out, rest].
template <class T>
Matrix<T> schur_on(const Matrix<T>& m, const IndexList& pivot_block);

struct BlockPsd {
  bool psd = false;
  bool colspace_ok = false;
  Index rank_m = 0;
  Index rank_a = 0;
  Index rank_schur = 0;
};

template <class T>
BlockPsd block_psd(const Matrix<T>& m, Index head);

// True when every column of b lies in the column space of a.
template <class T>
bool in_colspace(const Matrix<T>& a, const Matrix<T>& b);

// W = A^+ B with AW = B and B^T W = C; throws std::domain_error when AW = B is inconsistent.
template <class T>
Matrix<T> colspace_solve(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c);

struct PartialSymMat {
  RatMat base;  // entries at (i, j) and (j, i) are ignored
  Index i = 0;
  Index j = 1;
};

struct Completion {
  QuadExt x_minus;
  QuadExt x_plus;
  Index rank_at_endpoint = 0;
  Index rank_interior = 0;
};

class NotPartiallyPsd : public std::domain_error {
 public:
  NotPartiallyPsd() : std::domain_error("partial matrix is not partially positive semidefinite") {}
};

// Interval of values x for which the completed matrix is psd.
Completion psd_completion(const PartialSymMat& p);

// Embeds v at subset positions and checks full * v_hat == 0.
template <class T>
bool kernel_extends(const Matrix<T>& full, const IndexList& subset, const std::vector<T>& v);

}  // namespace hyptmp
