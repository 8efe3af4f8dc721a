#include "hyptmp/type3.hpp"

#include "hyptmp/hyperbola.hpp"

#include <optional>

namespace hyptmp {

namespace {

std::vector<Monomial> hyp_tilde_basis(int k) {
  std::vector<Monomial> b;
  for (int i = 0; i <= k; ++i) b.push_back({i, 0});
  for (int i = 0; i <= k - 1; ++i) b.push_back({i, 1});
  return b;
}

// Atoms of the measure built at the witness when both parts are flat.
std::optional<Index> realized_atoms(const BivSeq& s, const Type3Workspace& w, const Witness& c) {
  QMat g = type3_g(w, c.t, c.u);
  QMat f = f_of(w.d, g);
  if (hyp_tilde_status(f, w.d.k).tag != HypTag::Hyp1) return std::nullopt;
  return rank(f) + rank(hankel(line_sequence(s, g)));
}

bool passes(const BivSeq& s, const Type3Workspace& w, const Witness& c) {
  QMat g = type3_g(w, c.t, c.u);
  if (!solve_hamburger(line_sequence(s, g)).representable) return false;
  return hyp_tilde_status(f_of(w.d, g), w.d.k).tag != HypTag::None;
}

SolveReport decide_impl(const BivSeq& s, const Rat& a, Type3Workspace* out) {
  SolveReport rep;
  Type3Workspace w;
  try {
    w = build_workspace3(s, a);
  } catch (const PreconditionFailure& e) {
    rep.certificate = e.what();
    return rep;
  }
  if (out) *out = w;
  int k = w.d.k;
  rep.rank_m = rank(w.d.mm.m);
  HypStatus hmin = hyp_tilde_status(f_of(w.d, w.d.A_min), k);
  bool hmin1 = hmin.tag == HypTag::Hyp1;
  if (!hmin1 && hmin.rank != static_cast<Index>(2 * k - 1)) {
    rep.certificate = "A_min fails (Hyp~)_1 and Rank F(A_min) != 2k-1";
    return rep;
  }
  if (w.eta < 0) {
    rep.certificate = "eta < 0, so F(G(t,u)) is never psd";
    return rep;
  }
  Index rank_h = rank(h_of(w.d, w.d.A_min));
  Index rank_h22 = rank(w.H22);
  if (w.eta == 0) {
    if (!hmin1) {
      rep.certificate = "eta = 0 but A_min fails (Hyp~)_1";
      return rep;
    }
    if (!solve_hamburger(line_sequence(s, type3_g(w, 0, 0))).representable) {
      rep.certificate = "eta = 0 but gamma(0,0) is not representable";
      return rep;
    }
    rep.exists = true;
    rep.witness = Witness{0, 0};
    rep.branch = "eta = 0";
    rep.minimal_atoms = rep.rank_m;
    return rep;
  }

  BoundaryPoints bp = boundary_intersection(w);
  bool h2_pd = is_pd(w.H2);
  if (bp.points.size() == 2) {
    if (!h2_pd) {
      rep.certificate = "two boundary points but H2 is not positive definite";
      return rep;
    }
    rep.exists = true;
    rep.branch = "two boundary points";
    std::vector<Witness> tries = bp.points;
    // Interior point of R1 and R2; rational because the two points are conjugate.
    tries.push_back({(bp.points[0].t + bp.points[1].t) / QuadExt(2), (bp.points[0].u + bp.points[1].u) / QuadExt(2)});
    for (const auto& c : tries)
      if (passes(s, w, c)) {
        rep.witness = c;
        break;
      }
    Index extra = 1;
    if (!hmin1 && hmin.rank == static_cast<Index>(2 * k - 1) && rank_h == static_cast<Index>(k))
      extra = 2;
    else if (hyp_tilde_status(f_of(w.d, w.d.A_hat), k).tag == HypTag::Hyp1 && is_pd(h_of(w.d, w.d.A_min)))
      extra = 0;
    rep.minimal_atoms = rep.rank_m + extra;
    return rep;
  }
  if (bp.points.empty()) {
    rep.certificate = "boundaries of R1 and R2 do not meet";
    return rep;
  }
  const Witness p = bp.points[0];
  for (const Witness& c : {p, Witness{QuadExt(w.t0), p.u}})
    if (passes(s, w, c)) {
      rep.exists = true;
      rep.witness = c;
      break;
    }
  if (!rep.exists) {
    rep.certificate = "single boundary point: neither (t~,u~) nor (t0,u~) passes";
    return rep;
  }
  rep.branch = "single boundary point";
  bool single = !bp.degenerate_line || w.u0 * w.u0 / w.eta == w.t0;
  Index extra = 1;
  if (rank_h == rank_h22 + 2) {
    if (single)
      extra = 0;
    else if (solve_ay_x2_y2(conic_sequence(s, type3_g(w, p.t, p.u)), a).representable)
      extra = 0;
  }
  // With H2/H22 = 0 and the vertex on the parabola, the Schur block of H(A_min)
  // is singular and the rank test above cannot fire; count at the witness.
  if (auto n = realized_atoms(s, w, *rep.witness); n && *n == rep.rank_m) extra = 0;
  rep.minimal_atoms = rep.rank_m + extra;
  return rep;
}

}  // namespace

Type3Workspace build_workspace3(const BivSeq& s, const Rat& a) {
  Type3Workspace w;
  w.a = a;
  w.d = build_decomposition(s, CurveType::hyp3(a));
  int k = w.d.k;
  w.eta = w.d.eta;
  RatMat hhat = h_of(w.d, w.d.A_hat);
  IndexList tail = range(2, k + 1);
  IndexList one_tail = tail, x_tail = tail;
  one_tail.insert(one_tail.begin(), 0);
  x_tail.insert(x_tail.begin(), 1);
  w.H22 = hhat.principal(tail);
  w.H1 = hhat.principal(one_tail);
  w.H2 = hhat.principal(x_tail);
  for (Index r : tail) {
    w.h12_1.push_back(hhat(r, 0));
    w.h12_2.push_back(hhat(r, 1));
  }
  RatMat p = pinv(w.H22);
  w.t0 = hhat(0, 0) - bilinear(w.h12_1, p, w.h12_1);
  w.u0 = hhat(0, 1) - bilinear(w.h12_1, p, w.h12_2);
  w.c_ratio = hhat(1, 1) - bilinear(w.h12_2, p, w.h12_2);
  w.h2_psd = is_psd(w.H2);
  return w;
}

template <class T>
HypStatus hyp_tilde_status(const Matrix<T>& F, int k) {
  return hyp_check(F, k, hyp_tilde_basis(k), Monomial{k - 1, 1});
}

QMat type3_g(const Type3Workspace& w, const QuadExt& t, const QuadExt& u) {
  QMat g = w.d.A_hat.cast<QuadExt>();
  g(0, 0) += t;
  g(0, 1) += u;
  g(1, 0) += u;
  return g;
}

BoundaryPoints boundary_intersection(const Type3Workspace& w) {
  if (w.eta <= 0) throw std::invalid_argument("boundary intersection needs eta > 0");
  BoundaryPoints bp;
  if (!w.h2_psd) return bp;
  const Rat &eta = w.eta, &c = w.c_ratio, &u0 = w.u0, &t0 = w.t0;
  if (c == 0) {
    bp.degenerate_line = true;
    Rat t = u0 * u0 / eta;
    if (t <= t0) bp.points.push_back({t, u0});
    return bp;
  }
  Rat lead = 1 + c / eta;
  // Quarter of the discriminant of lead u^2 - 2 u0 u + (u0^2 - c t0).
  Rat disc = u0 * u0 - lead * (u0 * u0 - c * t0);
  if (disc < 0) return bp;
  if (disc == 0) {
    Rat u = u0 / lead;
    bp.points.push_back({Rat(u * u / eta), u});
    return bp;
  }
  QuadExt root = QuadExt::sqrt(disc);
  for (int sgn : {-1, 1}) {
    QuadExt u = (QuadExt(u0) + QuadExt(Rat(sgn)) * root) / QuadExt(lead);
    bp.points.push_back({u * u / QuadExt(eta), u});
  }
  return bp;
}

SolveReport decide_type3(const BivSeq& s, const Rat& a) { return decide_impl(s, a, nullptr); }

Index minimal_atoms_type3(const BivSeq& s, const Rat& a) {
  SolveReport r = decide_type3(s, a);
  if (!r.exists) throw std::domain_error("no representing measure: " + r.certificate);
  return *r.minimal_atoms;
}

PlaneMeasure construct_measure_type3(const BivSeq& s, const Rat& a, unsigned bits) {
  Type3Workspace w;
  SolveReport r = decide_impl(s, a, &w);
  if (!r.exists) throw std::domain_error("no representing measure: " + r.certificate);
  if (!r.witness) throw ExtractionError("no boundary or interior point splits the sequence");
  PrecisionScope scope(bits + 64);
  QMat g = type3_g(w, r.witness->t, r.witness->u);
  PlaneMeasure mu = extract_ay_x2_y2(conic_sequence(s, g), a, bits);
  LineMeasure line = extract_line_measure(line_sequence(s, g), false, bits);
  append_line_atoms(mu, line);
  mu.bits = bits;
  require_reproduces(mu, s, "line and conic parts do not reproduce the sequence");
  return mu;
}

template HypStatus hyp_tilde_status(const RatMat&, int);
template HypStatus hyp_tilde_status(const QMat&, int);

}  // namespace hyptmp
