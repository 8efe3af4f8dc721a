#include "hyptmp/hamburger.hpp"

#include "polynomial_impl.hpp"

namespace hyptmp {

namespace {

bool rational_valued(const Rat&) { return true; }
bool rational_valued(const QuadExt& q) { return q.is_rational(); }
Rat as_rat(const Rat& q) { return q; }
Rat as_rat(const QuadExt& q) { return q.a(); }

template <class T>
Index order_of(const UniSeq<T>& g) {
  if (g.size() % 2 == 0) throw std::invalid_argument("univariate sequence must have odd length");
  return (g.size() - 1) / 2;
}

Real real_pow(const Real& x, int p) {
  Real r = 1;
  Real b = p < 0 ? Real(1 / x) : x;
  for (int e = p < 0 ? -p : p; e > 0; --e) r *= b;
  return r;
}

}  // namespace

template <class T>
Matrix<T> hankel(const UniSeq<T>& g) {
  Index m = order_of(g);
  Matrix<T> a(m + 1, m + 1);
  for (Index i = 0; i <= m; ++i)
    for (Index j = 0; j <= m; ++j) a(i, j) = g[i + j];
  return a;
}

template <class T>
Matrix<T> hankel_corner(const UniSeq<T>& g, Index p) {
  return hankel(g).principal(range(p + 1));
}

template <class T>
Matrix<T> hankel_tail(const UniSeq<T>& g, Index p) {
  Index m = order_of(g);
  return hankel(g).principal(range(m - p, m + 1));
}

template <class T>
HamburgerResult solve_hamburger(const UniSeq<T>& g) {
  Index m = order_of(g);
  Matrix<T> a = hankel(g);
  PsdInfo full = psd_info(a);
  HamburgerResult r;
  if (!full.psd) {
    r.reason = "A_gamma is not psd";
    return r;
  }
  r.rank = full.rank;
  if (m == 0) {
    r.representable = true;
    r.reason = "order zero";
    return r;
  }
  Matrix<T> corner = a.principal(range(m));
  PsdInfo ci = psd_info(corner);
  if (ci.rank == m) {
    r.representable = true;
    r.reason = "corner A_gamma(m-1) is pd";
  } else if (ci.rank == full.rank) {
    r.representable = true;
    r.reason = "flat: Rank A_gamma(m-1) = Rank A_gamma";
  } else {
    r.reason = "rank jump: Rank A_gamma(m-1) = " + std::to_string(ci.rank) + " < Rank A_gamma = " +
               std::to_string(full.rank);
  }
  return r;
}

template <class T>
HamburgerResult solve_strong(const UniSeq<T>& g) {
  Index m = order_of(g);
  Matrix<T> a = hankel(g);
  PsdInfo full = psd_info(a);
  HamburgerResult r;
  if (!full.psd) {
    r.reason = "A_gamma is not psd";
    return r;
  }
  r.rank = full.rank;
  if (full.rank == m + 1) {
    r.representable = true;
    r.reason = "A_gamma is pd";
    return r;
  }
  if (m == 0) {
    r.representable = full.rank == 0;
    r.reason = r.representable ? "zero sequence" : "singular order-zero sequence";
    return r;
  }
  Index rc = rank(a.principal(range(m)));
  Index rt = rank(a.principal(range(1, m + 1)));
  if (rc == full.rank && rt == full.rank) {
    r.representable = true;
    r.reason = "Rank A_gamma = corner rank = tail rank";
  } else {
    r.reason = "Rank A_gamma = " + std::to_string(full.rank) + ", corner rank " + std::to_string(rc) +
               ", tail rank " + std::to_string(rt);
  }
  return r;
}

template <class T>
LineMeasure extract_line_measure(const UniSeq<T>& g, bool avoid_zero, unsigned bits) {
  PrecisionScope scope(bits + 64);
  Index m = order_of(g);
  Matrix<T> a = hankel(g);
  Index r = rank(a);
  LineMeasure mu;
  mu.bits = bits;
  if (r == 0) return mu;

  std::vector<T> coeffs;  // generating polynomial x^deg - sum c_i x^i
  if (r <= m) {
    Matrix<T> ar = a.principal(range(r));
    std::vector<T> rhs(g.begin() + static_cast<long>(r), g.begin() + static_cast<long>(2 * r));
    std::vector<T> c;
    try {
      c = solve(ar, rhs);
    } catch (const std::domain_error&) {
      throw ExtractionError("leading Hankel block is singular; sequence is not flat");
    }
    for (auto& v : c) coeffs.push_back(-v);
    coeffs.push_back(T(1));
    if (avoid_zero && is_zero(coeffs[0])) throw ExtractionError("zero atom in a flat sequence");
  } else {
    // One-parameter family of flat extensions, c = c0 + s * ainv e_m. Pick s so
    // that a node lands at xi near the mean; s = 0 can push an atom far out.
    Matrix<T> ainv = inverse(a);
    std::vector<T> b(g.begin() + static_cast<long>(m + 1), g.end());
    b.push_back(T(0));
    std::vector<T> c0(m + 1, T(0)), dir(m + 1, T(0));
    for (Index i = 0; i <= m; ++i) {
      dir[i] = ainv(i, m);
      for (Index j = 0; j <= m; ++j) c0[i] += ainv(i, j) * b[j];
    }
    auto eval = [](const std::vector<T>& v, const T& x) {
      T r(0);
      for (auto it = v.rbegin(); it != v.rend(); ++it) r = r * x + *it;
      return r;
    };
    T mean = g[1] / g[0];
    const std::vector<T> nodes{mean, T(mean + T(1)), T(mean - T(1)), T(1), T(-1), T(2), T(-2)};
    bool found = false;
    for (const T& xi : nodes) {
      if (avoid_zero && is_zero(xi)) continue;
      T q = eval(dir, xi);
      if (is_zero(q)) continue;
      // p(xi) = xi^{m+1} - c0(xi) - s q(xi) = 0
      T xm(1);
      for (Index i = 0; i <= m; ++i) xm *= xi;
      T sv = (xm - eval(c0, xi)) / q;
      coeffs.clear();
      for (Index i = 0; i <= m; ++i) coeffs.push_back(-(c0[i] + sv * dir[i]));
      coeffs.push_back(T(1));
      if (!avoid_zero || !is_zero(coeffs[0])) {
        found = true;
        break;
      }
    }
    if (!found) throw ExtractionError("no admissible flat extension node");
  }
  Poly<T> p(coeffs);
  std::vector<RealRoot> roots;
  try {
    roots = real_roots(p, bits + 32);
  } catch (const RootIsolationError& e) {
    throw ExtractionError(e.what());
  }
  if (static_cast<int>(roots.size()) != p.degree())
    throw ExtractionError("generating polynomial has " + std::to_string(roots.size()) + " real roots, expected " +
                          std::to_string(p.degree()));
  Index n = roots.size();
  if (avoid_zero)
    for (const auto& rt : roots)
      if (rt.exact && *rt.exact == 0) throw ExtractionError("atom at 0");

  bool exact = true;
  for (const auto& rt : roots) exact = exact && rt.exact.has_value();
  for (Index i = 0; i < n && exact; ++i) exact = rational_valued(g[i]);
  mu.atoms.resize(n);
  if (exact) {
    RatMat v(n, n);
    std::vector<Rat> rhs(n);
    for (Index i = 0; i < n; ++i) {
      rhs[i] = as_rat(g[i]);
      for (Index j = 0; j < n; ++j) v(i, j) = pow(*roots[j].exact, static_cast<unsigned>(i));
    }
    auto w = solve(v, rhs);
    for (Index j = 0; j < n; ++j) {
      if (w[j] <= 0) throw ExtractionError("nonpositive weight");
      mu.atoms[j] = {to_real(*roots[j].exact), to_real(w[j]), roots[j].exact, w[j]};
    }
  } else {
    // Gaussian elimination with partial pivoting on the Vandermonde system.
    std::vector<std::vector<Real>> v(n, std::vector<Real>(n + 1));
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) v[i][j] = real_pow(roots[j].value, static_cast<int>(i));
      v[i][n] = to_real(g[i]);
    }
    for (Index c = 0; c < n; ++c) {
      Index piv = c;
      for (Index i = c + 1; i < n; ++i)
        if (abs(v[i][c]) > abs(v[piv][c])) piv = i;
      std::swap(v[c], v[piv]);
      for (Index i = c + 1; i < n; ++i) {
        Real f = v[i][c] / v[c][c];
        for (Index j = c; j <= n; ++j) v[i][j] -= f * v[c][j];
      }
    }
    std::vector<Real> w(n);
    for (Index i = n; i-- > 0;) {
      Real s = v[i][n];
      for (Index j = i + 1; j < n; ++j) s -= v[i][j] * w[j];
      w[i] = s / v[i][i];
    }
    for (Index j = 0; j < n; ++j) {
      if (w[j] <= 0) throw ExtractionError("nonpositive weight");
      mu.atoms[j] = {roots[j].value, w[j], roots[j].exact, std::nullopt};
    }
  }

  auto rec = line_moments(mu, 0, static_cast<int>(2 * m));
  Real tol = boost::multiprecision::ldexp(Real(1), -static_cast<int>(bits / 2));
  for (Index i = 0; i <= 2 * m; ++i) {
    Real gi = to_real(g[i]);
    Real scale = abs(gi) > 1 ? Real(abs(gi)) : Real(1);
    if (abs(rec[i] - gi) > tol * scale)
      throw ExtractionError("reconstructed moment " + std::to_string(i) + " deviates beyond tolerance");
  }
  return mu;
}

template <class T>
LineMeasure extract_strong_measure(const UniSeq<T>& g, int shift, unsigned bits) {
  PrecisionScope scope(bits + 64);
  LineMeasure nu = extract_line_measure(g, true, bits);
  for (auto& at : nu.atoms) {
    if (at.x == 0) throw ExtractionError("atom at 0");
    at.w *= real_pow(at.x, shift);
    if (at.w_exact && at.x_exact) at.w_exact = *at.w_exact * pow(*at.x_exact, static_cast<unsigned>(shift));
  }
  return nu;
}

std::vector<Real> line_moments(const LineMeasure& mu, int from, int to) {
  std::vector<Real> out;
  for (int p = from; p <= to; ++p) {
    Real s = 0;
    for (const auto& at : mu.atoms) s += at.w * real_pow(at.x, p);
    out.push_back(s);
  }
  return out;
}

#define HYPTMP_INSTANTIATE(T)                                                            \
  template Matrix<T> hankel(const UniSeq<T>&);                                           \
  template Matrix<T> hankel_corner(const UniSeq<T>&, Index);                             \
  template Matrix<T> hankel_tail(const UniSeq<T>&, Index);                               \
  template HamburgerResult solve_hamburger(const UniSeq<T>&);                            \
  template HamburgerResult solve_strong(const UniSeq<T>&);                               \
  template LineMeasure extract_line_measure(const UniSeq<T>&, bool, unsigned);           \
  template LineMeasure extract_strong_measure(const UniSeq<T>&, int, unsigned);          \
  template Poly<T> derivative(const Poly<T>&);                                           \
  template Poly<T> remainder(const Poly<T>&, const Poly<T>&);                            \
  template std::vector<Poly<T>> sturm_chain(const Poly<T>&);                             \
  template int sign_changes(const std::vector<Poly<T>>&, const Rat&);                    \
  template std::vector<RealRoot> real_roots(const Poly<T>&, unsigned);

HYPTMP_INSTANTIATE(Rat)
HYPTMP_INSTANTIATE(QuadExt)

}  // namespace hyptmp
