#include "hyptmp/type2.hpp"

#include "hyptmp/hyperbola.hpp"

namespace hyptmp {

namespace {

std::vector<Monomial> hyp_basis(int k) {
  std::vector<Monomial> b;
  for (int j = k; j >= 1; --j) b.push_back({0, j});
  for (int i = 0; i <= k; ++i) b.push_back({i, 0});
  return b;
}

struct Check {
  bool line = false;
  HypStatus hyp;
};

Check check_pair(const BivSeq& s, const Type2Workspace& w, const Witness& c) {
  QMat g = type2_g(w, c.t, c.u);
  Check r;
  r.line = solve_hamburger(line_sequence(s, g)).representable;
  r.hyp = hyp_status(f_of(w.d, g), w.d.k);
  return r;
}

SolveReport decide_normalized(const BivSeq& s, Type2Workspace* out) {
  SolveReport rep;
  Type2Workspace w;
  try {
    w = build_workspace2(s);
  } catch (const PreconditionFailure& e) {
    rep.certificate = e.what();
    return rep;
  }
  int k = w.d.k;
  rep.rank_m = rank(w.d.mm.m);
  if (out) *out = w;
  auto cands = candidate_pairs2(w);
  if (cands.empty()) {
    rep.certificate = w.u_max < 0 ? "u_max < 0" : "t_max <= 0 with k12 != 0";
    return rep;
  }
  bool any_line = false;
  for (Index i = 0; i < cands.size(); ++i) {
    Check c = check_pair(s, w, cands[i]);
    any_line = any_line || c.line;
    if (c.line && c.hyp.tag != HypTag::None) {
      rep.exists = true;
      rep.witness = cands[i];
      rep.branch = "candidate " + std::to_string(i + 1) + " of " + std::to_string(cands.size()) + ", " +
                   to_string(c.hyp.tag);
      break;
    }
  }
  if (!rep.exists) {
    rep.certificate = any_line ? "no candidate pair gives F(G(t,u)) with (Hyp)"
                               : "gamma_1 is not representable at any candidate pair";
    return rep;
  }

  HypStatus hmin = hyp_status(f_of(w.d, w.d.A_min), k);
  Index rank_h = rank(h_of(w.d, w.d.A_min));
  bool f22_pd = is_pd(w.F22), h22_pd = is_pd(w.H22);
  Index extra = 0;
  if (w.eta != 0 && w.k12 != 0 && rank_h == static_cast<Index>(k) && hmin.tag == HypTag::None) {
    extra = 2;
  } else if (f22_pd && !h22_pd && rank_h == rank(w.H22) + 1 && w.t_max * w.u_max > w.eta * w.eta &&
             w.eta != 0) {
    extra = 1;
  } else if (f22_pd && h22_pd && w.k12 != 0) {
    bool hyp1 = hmin.tag == HypTag::Hyp1;
    if (w.eta == 0 && rank_h == static_cast<Index>(k + 1) && !hyp1) extra = 1;
    if (w.eta != 0 && (!hyp1 || rank_h == static_cast<Index>(k))) extra = 1;
  }
  rep.minimal_atoms = rep.rank_m + extra;
  return rep;
}

}  // namespace

Affine type2_normalizer(const Rat& a) {
  if (a == 0) throw std::invalid_argument("a must be nonzero");
  return Affine{Rat(0), -a, Rat(0), Rat(0), Rat(0), -a};
}

BivSeq normalize_type2(const BivSeq& s, const Rat& a) { return affine_apply(s, type2_normalizer(a)); }

Type2Workspace build_workspace2(const BivSeq& s) {
  Type2Workspace w;
  w.d = build_decomposition(s, CurveType::hyp2());
  int k = w.d.k;
  w.eta = w.d.eta;
  RatMat hhat = h_of(w.d, w.d.A_hat);
  IndexList mid = range(1, k);
  w.H22 = hhat.principal(mid);
  for (Index r : mid) {
    w.h12.push_back(hhat(r, 0));
    w.h23.push_back(hhat(r, k));
  }
  w.K = schur_on(hhat, mid);
  w.t_max = w.K(0, 0);
  w.u_max = w.K(1, 1);
  w.k12 = w.K(0, 1);
  IndexList t4;
  for (int j = k; j >= 1; --j) t4.push_back(deglex_index(0, j));
  for (int i = 1; i <= k - 1; ++i) t4.push_back(deglex_index(i, 0));
  w.F22 = f_of(w.d, w.d.A_min).principal(t4);
  w.B_const = w.k12 * w.k12 - w.t_max * w.u_max - w.eta * w.eta;
  return w;
}

template <class T>
HypStatus hyp_status(const Matrix<T>& F, int k) {
  return hyp_check(F, k, hyp_basis(k), Monomial{0, k});
}

QMat type2_g(const Type2Workspace& w, const QuadExt& t, const QuadExt& u) {
  QMat g = w.d.A_hat.cast<QuadExt>();
  Index k = w.d.k;
  g(0, 0) += t;
  g(k, k) += u;
  return g;
}

std::vector<Witness> candidate_pairs2(const Type2Workspace& w) {
  std::vector<Witness> c;
  const Rat &tm = w.t_max, &um = w.u_max, &eta = w.eta;
  if (um < 0) return c;
  if (um == 0) return {{0, 0}, {tm, 0}};
  if (w.k12 == 0) return {{0, 0}, {Rat(eta * eta / um), um}, {tm, um}};
  if (tm <= 0) return c;
  Rat disc = w.B_const * w.B_const - 4 * tm * um * eta * eta;
  if (disc >= 0) {
    QuadExt root = QuadExt::sqrt(disc);
    for (int sgn : {-1, 1}) {
      QuadExt u = (QuadExt(-w.B_const) + QuadExt(Rat(sgn)) * root) / QuadExt(2 * tm);
      // With eta = 0 the boundary of R1 meets u = 0 along the t axis.
      QuadExt t = u.sign() == 0 ? QuadExt(tm - w.k12 * w.k12 / um) : QuadExt(eta * eta) / u;
      c.push_back({t, u});
    }
  }
  QuadExt r = QuadExt::sqrt(tm * um);
  Rat ak = abs(w.k12);
  c.push_back({QuadExt(tm) - QuadExt(ak / um) * r, QuadExt(um) - QuadExt(ak / tm) * r});
  return c;
}

SolveReport decide_type2(const BivSeq& s, const Rat& a) { return decide_normalized(normalize_type2(s, a), nullptr); }

Index minimal_atoms_type2(const BivSeq& s, const Rat& a) {
  SolveReport r = decide_type2(s, a);
  if (!r.exists) throw std::domain_error("no representing measure: " + r.certificate);
  return *r.minimal_atoms;
}

PlaneMeasure construct_measure_type2(const BivSeq& s, const Rat& a, unsigned bits) {
  BivSeq n = normalize_type2(s, a);
  Type2Workspace w;
  SolveReport r = decide_normalized(n, &w);
  if (!r.exists) throw std::domain_error("no representing measure: " + r.certificate);
  PrecisionScope scope(bits + 64);
  QMat g = type2_g(w, r.witness->t, r.witness->u);
  PlaneMeasure mu = extract_x_plus_y_minus_xy(conic_sequence(n, g), bits);
  LineMeasure line = extract_line_measure(line_sequence(n, g), false, bits);
  append_line_atoms(mu, line);
  mu.bits = bits;
  mu = map_measure(mu, type2_normalizer(a).inverse());
  require_reproduces(mu, s, "line and conic parts do not reproduce the sequence");
  return mu;
}

template HypStatus hyp_status(const RatMat&, int);
template HypStatus hyp_status(const QMat&, int);

}  // namespace hyptmp
