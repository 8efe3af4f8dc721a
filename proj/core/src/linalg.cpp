#include "hyptmp/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace hyptmp {

IndexList range(Index n) { return range(0, n); }

IndexList range(Index from, Index to) {
  IndexList r;
  for (Index i = from; i < to; ++i) r.push_back(i);
  return r;
}

IndexList without(const IndexList& idx, Index drop) {
  IndexList r;
  for (Index v : idx)
    if (v != drop) r.push_back(v);
  return r;
}

template <class T>
Matrix<T> rref(const Matrix<T>& m, Echelon* info) {
  Matrix<T> a(m);
  Index r = 0;
  IndexList piv;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (Index j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    T inv = T(1) / a(r, c);
    for (Index j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      T f = a(i, c);
      for (Index j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (info) info->pivots = piv;
  Matrix<T> out(r, a.cols());
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

template <class T>
Matrix<T> kernel(const Matrix<T>& m) {
  Echelon e;
  Matrix<T> r = rref(m, &e);
  IndexList free;
  for (Index c = 0, p = 0; c < m.cols(); ++c) {
    if (p < e.pivots.size() && e.pivots[p] == c)
      ++p;
    else
      free.push_back(c);
  }
  Matrix<T> k(m.cols(), free.size());
  for (Index f = 0; f < free.size(); ++f) {
    k(free[f], f) = T(1);
    for (Index row = 0; row < e.pivots.size(); ++row) k(e.pivots[row], f) = -r(row, free[f]);
  }
  return k;
}

template <class T>
Index rank(const Matrix<T>& m) {
  // Forward elimination only.
  Matrix<T> a(m);
  Index r = 0;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (Index j = c; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    for (Index i = r + 1; i < a.rows(); ++i) {
      if (is_zero(a(i, c))) continue;
      T f = a(i, c) / a(r, c);
      for (Index j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  Index n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  Echelon e;
  Matrix<T> r = rref(aug, &e);
  if (r.rows() < n || (n && e.pivots[n - 1] != n - 1)) throw std::domain_error("singular matrix");
  Matrix<T> inv(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

template <class T>
std::vector<T> solve(const Matrix<T>& a, const std::vector<T>& b) {
  Index n = a.rows();
  Matrix<T> aug(n, n + 1);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  Echelon e;
  Matrix<T> r = rref(aug, &e);
  if (r.rows() < n || (n && e.pivots[n - 1] != n - 1)) throw std::domain_error("singular system");
  std::vector<T> x(n);
  for (Index i = 0; i < n; ++i) x[i] = r(i, n);
  return x;
}

template <class T>
Matrix<T> pinv(const Matrix<T>& m) {
  Echelon e;
  Matrix<T> g = rref(m, &e);
  Index r = g.rows();
  if (r == 0) return Matrix<T>(m.cols(), m.rows());
  Matrix<T> f = m.sub(range(m.rows()), e.pivots);
  Matrix<T> ft = f.transpose();
  Matrix<T> gt = g.transpose();
  return gt * inverse(g * gt) * inverse(ft * f) * ft;
}

template <class T>
PsdInfo psd_info(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("psd test on non-square matrix");
  Matrix<T> a(m);
  Index n = a.rows();
  std::vector<bool> done(n, false);
  PsdInfo out;
  for (;;) {
    Index piv = n;
    for (Index i = 0; i < n; ++i) {
      if (done[i]) continue;
      int s = sign(a(i, i));
      if (s < 0) return out;
      if (s > 0 && piv == n) piv = i;
    }
    if (piv == n) {
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          if (!done[i] && !done[j] && !is_zero(a(i, j))) return out;
      out.psd = true;
      return out;
    }
    done[piv] = true;
    ++out.rank;
    T p = a(piv, piv);
    for (Index i = 0; i < n; ++i) {
      if (done[i] || is_zero(a(i, piv))) continue;
      T f = a(i, piv) / p;
      for (Index j = 0; j < n; ++j) {
        if (done[j]) continue;
        a(i, j) -= f * a(piv, j);
      }
    }
  }
}

template <class T>
Matrix<T> schur(const Matrix<T>& m, Index head, bool trailing) {
  Index n = m.rows();
  if (head > n) throw std::invalid_argument("schur head exceeds dimension");
  IndexList h = range(head), t = range(head, n);
  if (trailing) std::swap(h, t);
  Matrix<T> a = m.principal(h);
  Matrix<T> b = m.sub(h, t);
  Matrix<T> c = m.principal(t);
  return c - b.transpose() * pinv(a) * b;
}

template <class T>
Matrix<T> schur_on(const Matrix<T>& m, const IndexList& pivot_block) {
  IndexList rest;
  for (Index i = 0; i < m.rows(); ++i)
    if (std::find(pivot_block.begin(), pivot_block.end(), i) == pivot_block.end()) rest.push_back(i);
  Matrix<T> a = m.principal(pivot_block);
  Matrix<T> b = m.sub(pivot_block, rest);
  return m.principal(rest) - b.transpose() * pinv(a) * b;
}

template <class T>
bool in_colspace(const Matrix<T>& a, const Matrix<T>& b) {
  if (b.cols() == 0) return true;
  Matrix<T> aug(a.rows(), a.cols() + b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (Index j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  return rank(aug) == rank(a);
}

template <class T>
BlockPsd block_psd(const Matrix<T>& m, Index head) {
  BlockPsd out;
  Index n = m.rows();
  Matrix<T> a = m.principal(range(head));
  Matrix<T> b = m.sub(range(head), range(head, n));
  out.colspace_ok = in_colspace(a, b);
  PsdInfo ai = psd_info(a);
  Matrix<T> s = schur(m, head);
  PsdInfo si = psd_info(s);
  out.psd = ai.psd && out.colspace_ok && si.psd;
  out.rank_m = rank(m);
  out.rank_a = rank(a);
  out.rank_schur = rank(s);
  if (out.psd && out.rank_m != out.rank_a + out.rank_schur)
    throw std::logic_error("rank additivity violated on a psd block split");
  return out;
}

template <class T>
Matrix<T> colspace_solve(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c) {
  Matrix<T> w = pinv(a) * b;
  if (a * w != b) throw std::domain_error("AW = B has no solution");
  (void)c;
  return w;
}

template <class T>
bool kernel_extends(const Matrix<T>& full, const IndexList& subset, const std::vector<T>& v) {
  std::vector<T> vh(full.cols(), T(0));
  for (Index t = 0; t < subset.size(); ++t) vh[subset[t]] = v[t];
  for (Index i = 0; i < full.rows(); ++i) {
    T s(0);
    for (Index j = 0; j < full.cols(); ++j) s += full(i, j) * vh[j];
    if (!is_zero(s)) return false;
  }
  return true;
}

Completion psd_completion(const PartialSymMat& p) {
  const RatMat& m = p.base;
  Index n = m.rows(), i = p.i, j = p.j;
  if (i == j || i >= n || j >= n) throw std::invalid_argument("bad missing position");
  IndexList all = range(n);
  IndexList rest = without(without(all, i), j);
  IndexList i2 = without(all, j);  // contains i, not j
  IndexList i3 = without(all, i);
  RatMat a2 = m.principal(i2), a3 = m.principal(i3);
  if (!is_psd(a2) || !is_psd(a3)) throw NotPartiallyPsd();
  RatMat a1 = m.principal(rest);
  RatMat a1p = pinv(a1);
  std::vector<Rat> av, bv;
  for (Index r : rest) {
    av.push_back(m(r, i));
    bv.push_back(m(r, j));
  }
  Rat center = bilinear(bv, a1p, av);
  Rat s2 = m(i, i) - bilinear(av, a1p, av);
  Rat s3 = m(j, j) - bilinear(bv, a1p, bv);
  QuadExt root = QuadExt::sqrt(s2 * s3);
  Completion c;
  c.x_minus = QuadExt(center) - root;
  c.x_plus = QuadExt(center) + root;
  c.rank_at_endpoint = std::max(rank(a2), rank(a3));
  c.rank_interior = c.rank_at_endpoint + 1;
  return c;
}

#define HYPTMP_INSTANTIATE(T)                                                              \
  template Matrix<T> rref(const Matrix<T>&, Echelon*);                                     \
  template Matrix<T> kernel(const Matrix<T>&);                                             \
  template Index rank(const Matrix<T>&);                                                   \
  template Matrix<T> inverse(const Matrix<T>&);                                            \
  template std::vector<T> solve(const Matrix<T>&, const std::vector<T>&);                  \
  template Matrix<T> pinv(const Matrix<T>&);                                               \
  template PsdInfo psd_info(const Matrix<T>&);                                             \
  template Matrix<T> schur(const Matrix<T>&, Index, bool);                                 \
  template Matrix<T> schur_on(const Matrix<T>&, const IndexList&);                         \
  template bool in_colspace(const Matrix<T>&, const Matrix<T>&);                           \
  template BlockPsd block_psd(const Matrix<T>&, Index);                                    \
  template Matrix<T> colspace_solve(const Matrix<T>&, const Matrix<T>&, const Matrix<T>&); \
  template bool kernel_extends(const Matrix<T>&, const IndexList&, const std::vector<T>&);

HYPTMP_INSTANTIATE(Rat)
HYPTMP_INSTANTIATE(QuadExt)

}  // namespace hyptmp
