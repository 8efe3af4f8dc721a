#include "hyptmp/hyperbola.hpp"

namespace hyptmp {

namespace {


std::optional<Rat> exact_affine(const Rat& c0, const Rat& c1, const std::optional<Rat>& x, const Rat& c2,
                                const std::optional<Rat>& y) {
  if ((c1 != 0 && !x) || (c2 != 0 && !y)) return std::nullopt;
  Rat r = c0;
  if (c1 != 0) r += c1 * *x;
  if (c2 != 0) r += c2 * *y;
  return r;
}

}  // namespace

std::vector<Real> plane_moments(const PlaneMeasure& mu, int k) {
  PrecisionScope scope(mu.bits + 64);
  std::vector<Real> out(deglex_count(2 * k), Real(0));
  for (const auto& at : mu.atoms) {
    std::vector<Real> xp(2 * k + 1), yp(2 * k + 1);
    xp[0] = yp[0] = 1;
    for (int e = 1; e <= 2 * k; ++e) {
      xp[e] = xp[e - 1] * at.x;
      yp[e] = yp[e - 1] * at.y;
    }
    for (int d = 0; d <= 2 * k; ++d)
      for (int j = 0; j <= d; ++j) out[deglex_index(d - j, j)] += at.w * xp[d - j] * yp[j];
  }
  return out;
}

template <class T>
Real relative_residual(const PlaneMeasure& mu, const BasicBivSeq<T>& s) {
  PrecisionScope scope(mu.bits + 64);
  auto rec = plane_moments(mu, s.k());
  Real worst = 0;
  for (int d = 0; d <= 2 * s.k(); ++d)
    for (int j = 0; j <= d; ++j) {
      Real b = to_real(s(d - j, j));
      Real scale = abs(b) > 1 ? Real(abs(b)) : Real(1);
      Real dev = abs(rec[deglex_index(d - j, j)] - b) / scale;
      if (dev > worst) worst = dev;
    }
  return worst;
}

template <class T>
void require_reproduces(const PlaneMeasure& mu, const BasicBivSeq<T>& s, const char* what) {
  PrecisionScope scope(mu.bits + 64);
  Real tol = boost::multiprecision::ldexp(Real(1), -static_cast<int>(mu.bits / 2));
  if (relative_residual(mu, s) > tol) throw ExtractionError(what);
}

void append_line_atoms(PlaneMeasure& mu, const LineMeasure& line) {
  for (const auto& at : line.atoms) {
    PlaneAtom p;
    p.x = at.x;
    p.y = 0;
    p.w = at.w;
    p.x_exact = at.x_exact;
    p.y_exact = Rat(0);
    p.w_exact = at.w_exact;
    p.on_line = true;
    mu.atoms.push_back(p);
  }
}

PlaneMeasure map_measure(const PlaneMeasure& mu, const Affine& phi) {
  PrecisionScope scope(mu.bits + 64);
  PlaneMeasure out;
  out.bits = mu.bits;
  for (const auto& at : mu.atoms) {
    PlaneAtom b = at;
    b.x = to_real(phi.a) + to_real(phi.b) * at.x + to_real(phi.c) * at.y;
    b.y = to_real(phi.d) + to_real(phi.e) * at.x + to_real(phi.f) * at.y;
    b.x_exact = exact_affine(phi.a, phi.b, at.x_exact, phi.c, at.y_exact);
    b.y_exact = exact_affine(phi.d, phi.e, at.x_exact, phi.f, at.y_exact);
    if (b.x_exact) b.x = to_real(*b.x_exact);
    if (b.y_exact) b.y = to_real(*b.y_exact);
    out.atoms.push_back(b);
  }
  return out;
}

template <class T>
RelationReport check_conic_relations(const BasicBivSeq<T>& s, const BiPoly& c) {
  RelationReport rep;
  int top = 2 * s.k() - c.degree();
  for (int d = 0; d <= top; ++d)
    for (int j = 0; j <= d; ++j)
      if (!is_zero(riesz(s, BiPoly::monomial(d - j, j) * c))) {
        rep.ok = false;
        rep.violations.push_back({d - j, j});
      }
  return rep;
}

template <class T>
ConicReport solve_xy1(const BasicBivSeq<T>& s) {
  ConicReport r;
  int k = s.k();
  auto mm = moment_matrix(s);
  PsdInfo pi = psd_info(mm.m);
  if (!pi.psd) {
    r.reason = "M(k) is not psd";
    return r;
  }
  r.rank = pi.rank;
  auto rel = check_conic_relations(s, BiPoly(Rat(1)) - BiPoly::monomial(1, 1));
  if (!rel.ok) {
    r.reason = "relation beta_{i+1,j+1} = beta_{i,j} fails at (" + std::to_string(rel.violations[0].i) + "," +
               std::to_string(rel.violations[0].j) + ")";
    return r;
  }
  std::vector<Monomial> b;
  for (int j = k; j >= 1; --j) b.push_back({0, j});
  for (int i = 0; i <= k; ++i) b.push_back({i, 0});
  Matrix<T> mb = restrict(mm, b, b);
  PsdInfo bi = psd_info(mb);
  if (bi.rank == b.size()) {
    r.representable = true;
    r.branch = "B-block pd";
    return r;
  }
  IndexList no_yk = range(1, b.size()), no_xk = range(b.size() - 1);
  Index r1 = rank(mb.principal(no_yk)), r2 = rank(mb.principal(no_xk));
  if (pi.rank == r1 && pi.rank == r2) {
    r.representable = true;
    r.branch = "rank equality";
  } else {
    r.reason = "Rank M(k) = " + std::to_string(pi.rank) + ", Rank without Y^k = " + std::to_string(r1) +
               ", Rank without X^k = " + std::to_string(r2);
  }
  return r;
}

template <class T>
PlaneMeasure extract_xy1(const BasicBivSeq<T>& s, unsigned bits) {
  PrecisionScope scope(bits + 64);
  int k = s.k();
  UniSeq<T> v;
  for (int j = 2 * k; j >= 1; --j) v.push_back(s(0, j));
  for (int i = 0; i <= 2 * k; ++i) v.push_back(s(i, 0));
  LineMeasure nu = extract_strong_measure(v, 2 * k, bits);
  PlaneMeasure mu;
  mu.bits = bits;
  for (const auto& at : nu.atoms) {
    PlaneAtom p;
    p.x = at.x;
    p.y = 1 / at.x;
    p.w = at.w;
    p.x_exact = at.x_exact;
    if (at.x_exact) p.y_exact = 1 / *at.x_exact;
    p.w_exact = at.w_exact;
    mu.atoms.push_back(p);
  }
  require_reproduces(mu, s, "xy = 1 measure does not reproduce the sequence");
  return mu;
}

Affine xy1_map_x_plus_y_minus_xy() { return Affine{Rat(1), Rat(-1), Rat(0), Rat(1), Rat(0), Rat(-1)}; }

Affine xy1_map_ay_x2_y2(const Rat& a) {
  if (a == 0) throw std::invalid_argument("a must be nonzero");
  Rat t = Rat(2) / a;
  return Affine{Rat(1), -t, -t, Rat(1), t, -t};
}

template <class T>
ConicReport solve_x_plus_y_minus_xy(const BasicBivSeq<T>& s) {
  return solve_xy1(affine_apply(s, xy1_map_x_plus_y_minus_xy()));
}

template <class T>
PlaneMeasure extract_x_plus_y_minus_xy(const BasicBivSeq<T>& s, unsigned bits) {
  Affine phi = xy1_map_x_plus_y_minus_xy();
  PlaneMeasure mu = map_measure(extract_xy1(affine_apply(s, phi), bits), phi.inverse());
  return mu;
}

template <class T>
ConicReport solve_ay_x2_y2(const BasicBivSeq<T>& s, const Rat& a) {
  return solve_xy1(affine_apply(s, xy1_map_ay_x2_y2(a)));
}

template <class T>
PlaneMeasure extract_ay_x2_y2(const BasicBivSeq<T>& s, const Rat& a, unsigned bits) {
  Affine phi = xy1_map_ay_x2_y2(a);
  return map_measure(extract_xy1(affine_apply(s, phi), bits), phi.inverse());
}

#define HYPTMP_INSTANTIATE(T)                                                                  \
  template Real relative_residual(const PlaneMeasure&, const BasicBivSeq<T>&);                 \
  template void require_reproduces(const PlaneMeasure&, const BasicBivSeq<T>&, const char*);   \
  template RelationReport check_conic_relations(const BasicBivSeq<T>&, const BiPoly&);         \
  template ConicReport solve_xy1(const BasicBivSeq<T>&);                                       \
  template PlaneMeasure extract_xy1(const BasicBivSeq<T>&, unsigned);                          \
  template ConicReport solve_x_plus_y_minus_xy(const BasicBivSeq<T>&);                         \
  template PlaneMeasure extract_x_plus_y_minus_xy(const BasicBivSeq<T>&, unsigned);            \
  template ConicReport solve_ay_x2_y2(const BasicBivSeq<T>&, const Rat&);                      \
  template PlaneMeasure extract_ay_x2_y2(const BasicBivSeq<T>&, const Rat&, unsigned);

HYPTMP_INSTANTIATE(Rat)
HYPTMP_INSTANTIATE(QuadExt)

}  // namespace hyptmp
