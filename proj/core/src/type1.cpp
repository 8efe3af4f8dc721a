#include "hyptmp/type1.hpp"

#include "hyptmp/decompose.hpp"
#include "hyptmp/hyperbola.hpp"

namespace hyptmp {

Rat type1_moment(const BivSeq& s, int i, int j) {
  while (i + j > s.degree() && i >= 1 && j >= 2) {
    --i;
    --j;
  }
  return s(i, j);
}

namespace {

// Entries past degree 2k that the relations cannot reduce are left at 0.
RatMat gram(const BivSeq& s, const std::vector<Monomial>& rows, bool allow_unknown = false) {
  RatMat m(rows.size(), rows.size());
  for (Index r = 0; r < rows.size(); ++r)
    for (Index c = 0; c < rows.size(); ++c) {
      int i = rows[r].i + rows[c].i, j = rows[r].j + rows[c].j;
      if (allow_unknown && i + j > s.degree() && j < 2) continue;
      m(r, c) = type1_moment(s, i, j);
    }
  return m;
}

std::vector<Monomial> t_tuple(int k) {
  std::vector<Monomial> t;
  for (int j = k; j >= 1; --j) t.push_back({0, j});
  for (int i = 1; i <= k - 1; ++i) t.push_back({i, 1});
  for (int i = 0; i <= k; ++i) t.push_back({i, 0});
  return t;
}

QuadExt pencil_u(const Type1Workspace& w, const QuadExt& t) {
  std::vector<QuadExt> v(w.w2.begin(), w.w2.end());
  v.back() = t;
  return bilinear(v, pinv(w.F2).cast<QuadExt>(), v);
}

bool passes(const BivSeq& s, const QuadExt& t, const QuadExt& u) {
  return solve_hamburger(gamma1_type1(s, t, u)).representable && solve_strong(gamma2_type1(s, t, u)).representable;
}

BasicBivSeq<QuadExt> conic_part(const BivSeq& s, const Witness& w) {
  BasicBivSeq<QuadExt> c = s.cast<QuadExt>();
  int k = s.k();
  for (int i = 0; i <= 2 * k - 2; ++i) c.at(i, 0) = s(i + 1, 1);
  c.at(2 * k - 1, 0) = w.t;
  c.at(2 * k, 0) = w.u;
  return c;
}

}  // namespace

Type1Workspace build_workspace1(const BivSeq& s) {
  CurveType curve = CurveType::hyp1();
  auto rel = check_relations(s, curve);
  if (!rel.ok)
    throw PreconditionFailure("relation beta_{i+1,j+2} = beta_{i,j+1} fails at (" +
                              std::to_string(rel.violations[0].i) + "," + std::to_string(rel.violations[0].j) + ")");
  if (!is_psd(moment_matrix(s).m)) throw PreconditionFailure("M(k) is not psd");
  Type1Workspace w;
  int k = w.k = s.k();
  w.t_order = t_tuple(k);
  w.M_hat_T = gram(s, w.t_order);
  auto n_order = w.t_order;
  n_order.back() = {k, 1};
  w.N = gram(s, n_order);
  Index n = w.t_order.size();
  w.R = w.M_hat_T.principal(range(n - 1));
  for (Index r = 0; r + 1 < n; ++r) {
    w.m12.push_back(w.M_hat_T(r, n - 1));
    w.n12.push_back(w.N(r, n - 1));
  }
  for (int i = 0; i <= k - 1; ++i) w.a.push_back(s(i, 1));
  for (int i = k; i <= 2 * k - 2; ++i) w.b.push_back(s(i, 1));
  for (int i = k; i <= 2 * k - 1; ++i) w.c.push_back(s(i, 1));

  w.F1 = RatMat(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) w.F1(i, j) = s(i + j, 0) - s(i + j + 1, 1);
  std::vector<Monomial> f2_order;
  for (int j = k; j >= 1; --j) f2_order.push_back({0, j});
  for (int i = 1; i <= k; ++i) f2_order.push_back({i, 1});
  w.F2 = gram(s, f2_order);

  w.t_prime = bilinear(w.n12, pinv(w.R), w.m12);
  for (int i = k; i <= 2 * k - 2; ++i) w.w1.push_back(s(i, 0) - s(i + 1, 1));
  w.w1.push_back(s(2 * k - 1, 0) - w.t_prime);
  for (int i = 1; i <= 2 * k - 1; ++i) w.w2.push_back(s(i, 1));
  w.w2.push_back(w.t_prime);
  w.u_prime = s(2 * k, 0) - bilinear(w.w1, pinv(w.F1), w.w1);
  w.u_dprime = bilinear(w.w2, pinv(w.F2), w.w2);
  return w;
}

UniSeq<QuadExt> gamma1_type1(const BivSeq& s, const QuadExt& t, const QuadExt& u) {
  int k = s.k();
  UniSeq<QuadExt> g;
  for (int i = 0; i <= 2 * k - 2; ++i) g.push_back(QuadExt(s(i, 0) - s(i + 1, 1)));
  g.push_back(QuadExt(s(2 * k - 1, 0)) - t);
  g.push_back(QuadExt(s(2 * k, 0)) - u);
  return g;
}

UniSeq<QuadExt> gamma2_type1(const BivSeq& s, const QuadExt& t, const QuadExt& u) {
  int k = s.k();
  UniSeq<QuadExt> g;
  for (int j = 2 * k; j >= 1; --j) g.push_back(QuadExt(s(0, j)));
  for (int i = 1; i <= 2 * k - 1; ++i) g.push_back(QuadExt(s(i, 1)));
  g.push_back(t);
  g.push_back(u);
  return g;
}

SolveReport decide_type1(const BivSeq& s) {
  SolveReport rep;
  Type1Workspace w;
  try {
    w = build_workspace1(s);
  } catch (const PreconditionFailure& e) {
    rep.certificate = e.what();
    return rep;
  }
  rep.rank_m = psd_info(moment_matrix(s).m).rank;
  PsdInfo n_info = psd_info(w.N);
  if (!n_info.psd) {
    rep.certificate = "N(k) is not psd";
    return rep;
  }
  Index n = w.t_order.size();
  if (is_pd(w.M_hat_T) && n_info.rank == n) {
    rep.exists = true;
    rep.branch = "restricted M(k) and N(k) positive definite";
    // Unknown entry is the X^k / YX^k moment of the conic part.
    auto order = w.t_order;
    order.push_back({w.k, 1});
    PartialSymMat p{gram(s, order, true), n - 1, n};
    Completion c = psd_completion(p);
    for (const QuadExt& t : {c.x_minus, c.x_plus}) {
      QuadExt u = pencil_u(w, t);
      if (passes(s, t, u)) {
        rep.witness = Witness{t, u};
        break;
      }
    }
  } else {
    for (const Rat& u : {w.u_prime, w.u_dprime}) {
      if (passes(s, QuadExt(w.t_prime), QuadExt(u))) {
        rep.exists = true;
        rep.witness = Witness{QuadExt(w.t_prime), QuadExt(u)};
        rep.branch = u == w.u_prime ? "t', u'" : "t', u''";
        break;
      }
    }
    if (!rep.exists) {
      rep.certificate = "gamma_2(t', u) is not strongly representable for u in {u', u''}";
      for (const Rat& u : {w.u_prime, w.u_dprime})
        if (!solve_hamburger(gamma1_type1(s, QuadExt(w.t_prime), QuadExt(u))).representable &&
            solve_strong(gamma2_type1(s, QuadExt(w.t_prime), QuadExt(u))).representable)
          rep.certificate = "gamma_1(t', u) is not representable where gamma_2(t', u) is";
      return rep;
    }
  }
  rep.minimal_atoms = n_info.rank <= rep.rank_m ? rep.rank_m : rep.rank_m + 1;
  return rep;
}

Index minimal_atoms_type1(const BivSeq& s) {
  SolveReport r = decide_type1(s);
  if (!r.exists) throw std::domain_error("no representing measure: " + r.certificate);
  return *r.minimal_atoms;
}

PlaneMeasure construct_measure_type1(const BivSeq& s, unsigned bits) {
  SolveReport r = decide_type1(s);
  if (!r.exists) throw std::domain_error("no representing measure: " + r.certificate);
  if (!r.witness) throw ExtractionError("no endpoint of the completion interval splits the sequence");
  PrecisionScope scope(bits + 64);
  PlaneMeasure mu = extract_xy1(conic_part(s, *r.witness), bits);
  LineMeasure line = extract_line_measure(gamma1_type1(s, r.witness->t, r.witness->u), false, bits);
  append_line_atoms(mu, line);
  mu.bits = bits;
  require_reproduces(mu, s, "line and conic parts do not reproduce the sequence");
  return mu;
}

}  // namespace hyptmp
