#include "hyptmp/decompose.hpp"

#include <algorithm>

namespace hyptmp {

namespace {

RatMat column_basis(Index n, const std::vector<std::vector<std::pair<Index, Rat>>>& cols) {
  RatMat v(n, cols.size());
  for (Index c = 0; c < cols.size(); ++c)
    for (const auto& [row, coef] : cols[c]) v(row, c) += coef;
  return v;
}

}  // namespace

Decomposition build_decomposition(const BivSeq& s, const CurveType& c) {
  c.validate();
  if (c.tag == Curve::Hyp2 && c.a != -1) throw std::invalid_argument("hyp2 decomposition expects a = -1");
  auto rel = check_relations(s, c);
  if (!rel.ok)
    throw PreconditionFailure("curve relation violated at (i,j) = (" + std::to_string(rel.violations[0].i) + "," +
                              std::to_string(rel.violations[0].j) + ")");
  Decomposition d;
  d.curve = c;
  d.k = s.k();
  int k = d.k;
  d.mm = moment_matrix(s);
  if (!is_psd(d.mm.m)) throw PreconditionFailure("M(k) is not psd");
  Index n = d.mm.order.size();
  for (int i = 0; i <= k; ++i) d.x_pos.push_back(deglex_index(i, 0));

  std::vector<std::vector<std::pair<Index, Rat>>> cols;
  auto mono_col = [&](int i, int j) {
    d.t1.push_back({i, j});
    cols.push_back({{deglex_index(i, j), Rat(1)}});
  };
  switch (c.tag) {
    case Curve::Hyp1:
      for (int j = k; j >= 1; --j) mono_col(0, j);
      for (int i = 1; i <= k - 1; ++i) mono_col(i, 1);
      break;
    case Curve::Hyp2:
      for (int j = k; j >= 1; --j) mono_col(0, j);
      for (int i = 1; i <= k - 1; ++i) {
        d.t1.push_back({i, 1});
        cols.push_back({{deglex_index(i, 1), Rat(1)}, {deglex_index(i - 1, 1), Rat(-1)}});
      }
      break;
    case Curve::Hyp3:
      for (int i = 0; i <= k - 1; ++i) mono_col(i, 1);
      for (int i = 0; i <= k - 2; ++i) mono_col(i, 2);
      break;
  }
  d.t1_basis = column_basis(n, cols);

  d.order = d.x_pos;
  for (const auto& m : d.t1) d.order.push_back(deglex_index(m));
  for (Index p = 0; p < n; ++p)
    if (std::find(d.order.begin(), d.order.end(), p) == d.order.end()) d.order.push_back(p);
  d.m_tilde = d.mm.m.principal(d.order);

  RatMat ex(n, k + 1);
  for (int i = 0; i <= k; ++i) ex(d.x_pos[i], i) = 1;
  RatMat mv = d.mm.m * d.t1_basis;
  d.A11 = d.mm.m.principal(d.x_pos);
  d.A12 = ex.transpose() * mv;
  d.A22 = d.t1_basis.transpose() * mv;
  d.A_min = d.A12 * pinv(d.A22) * d.A12.transpose();
  d.A_hat = d.A_min;

  // Entry of the X block not fixed by the conic, with the entry it must match.
  Index r = 0, cc = 0, rr = 0, rc = 0;
  switch (c.tag) {
    case Curve::Hyp1:
      r = k - 1; cc = k - 1; rr = k - 2; rc = k;
      break;
    case Curve::Hyp2:
      r = 0; cc = k; rr = 1; rc = k - 1;
      break;
    case Curve::Hyp3:
      r = 1; cc = 1; rr = 0; rc = 2;
      break;
  }
  d.hat_row = r;
  d.hat_col = cc;
  d.eta = d.A_min(rr, rc) - d.A_min(r, cc);
  d.A_hat(r, cc) += d.eta;
  if (r != cc) d.A_hat(cc, r) += d.eta;
  return d;
}

template <class T>
Matrix<T> f_of(const Decomposition& d, const Matrix<T>& A) {
  if (A.rows() != d.x_pos.size() || A.cols() != d.x_pos.size()) throw std::invalid_argument("F(A): size mismatch");
  Matrix<T> f = d.mm.m.template cast<T>();
  for (Index i = 0; i < d.x_pos.size(); ++i)
    for (Index j = 0; j < d.x_pos.size(); ++j) f(d.x_pos[i], d.x_pos[j]) = A(i, j);
  return f;
}

template <class T>
Matrix<T> h_of(const Decomposition& d, const Matrix<T>& A) {
  if (A.rows() != d.x_pos.size() || A.cols() != d.x_pos.size()) throw std::invalid_argument("H(A): size mismatch");
  return d.A11.template cast<T>() - A;
}

std::vector<std::pair<Index, Rat>> determined_conic_moments(const BivSeq& s, const CurveType& c) {
  BiPoly p = c.conic();
  Rat lead(0);
  int shift = -1;
  for (int e = 0; e <= 2 && shift < 0; ++e) {
    auto it = p.terms().find(Monomial{e, 0});
    if (it != p.terms().end()) {
      lead = it->second;
      shift = e;
    }
  }
  if (shift < 0) throw std::invalid_argument("conic has no pure x term");
  std::vector<std::pair<Index, Rat>> out;
  int k = s.k();
  for (int i = 0; i <= 2 * k - 2; ++i) {
    Rat acc(0);
    for (const auto& [m, coef] : p.terms())
      if (m.j > 0) acc += coef * s(i + m.i, m.j);
    out.push_back({static_cast<Index>(i + shift), -acc / lead});
  }
  return out;
}

template <class T>
UniSeq<T> hankel_entries(const Matrix<T>& A) {
  Index n = A.rows();
  UniSeq<T> g(2 * n - 1, T(0));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (i == 0 || j + 1 == n)
        g[i + j] = A(i, j);
      else if (A(i, j) != g[i + j])
        throw std::logic_error("matrix is not Hankel");
    }
  return g;
}

template <class T>
BasicBivSeq<T> conic_sequence(const BivSeq& s, const Matrix<T>& A) {
  BasicBivSeq<T> out = s.template cast<T>();
  auto g = hankel_entries(A);
  for (Index i = 0; i < g.size(); ++i) out.at(static_cast<int>(i), 0) = g[i];
  return out;
}

template <class T>
UniSeq<T> line_sequence(const BivSeq& s, const Matrix<T>& A) {
  auto g = hankel_entries(A);
  UniSeq<T> out;
  for (Index i = 0; i < g.size(); ++i) out.push_back(T(s(static_cast<int>(i), 0)) - g[i]);
  return out;
}

std::string to_string(HypTag t) {
  switch (t) {
    case HypTag::Hyp1:
      return "Hyp1";
    case HypTag::Hyp2:
      return "Hyp2";
    case HypTag::None:
      return "none";
  }
  return "?";
}

template <class T>
HypStatus hyp_check(const Matrix<T>& F, int k, const std::vector<Monomial>& basis, const Monomial& second) {
  HypStatus st;
  PsdInfo pi = psd_info(F);
  st.psd = pi.psd;
  st.rank = pi.psd ? pi.rank : rank(F);
  IndexList b1, b2;
  for (const auto& m : basis) {
    if (!(m == Monomial{k, 0})) b1.push_back(deglex_index(m));
    if (!(m == second)) b2.push_back(deglex_index(m));
  }
  st.rank_drop_first = rank(F.principal(b1));
  st.rank_drop_second = rank(F.principal(b2));
  if (!st.psd) return st;
  if (st.rank == st.rank_drop_first && st.rank == st.rank_drop_second)
    st.tag = HypTag::Hyp1;
  else if (st.rank == static_cast<Index>(2 * k + 1))
    st.tag = HypTag::Hyp2;
  return st;
}

#define HYPTMP_INSTANTIATE(T)                                                                       \
  template Matrix<T> f_of(const Decomposition&, const Matrix<T>&);                                  \
  template Matrix<T> h_of(const Decomposition&, const Matrix<T>&);                                  \
  template UniSeq<T> hankel_entries(const Matrix<T>&);                                              \
  template BasicBivSeq<T> conic_sequence(const BivSeq&, const Matrix<T>&);                          \
  template UniSeq<T> line_sequence(const BivSeq&, const Matrix<T>&);                                \
  template HypStatus hyp_check(const Matrix<T>&, int, const std::vector<Monomial>&, const Monomial&);

HYPTMP_INSTANTIATE(Rat)
HYPTMP_INSTANTIATE(QuadExt)

}  // namespace hyptmp
