#include "hyptmp/moments.hpp"

#include <algorithm>

namespace hyptmp {

std::vector<Monomial> deglex_monomials(int degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= degree; ++d)
    for (int j = 0; j <= d; ++j) out.push_back({d - j, j});
  return out;
}

std::string to_string(const Monomial& m) {
  if (m.i == 0 && m.j == 0) return "1";
  std::string s;
  if (m.j) s += m.j == 1 ? "Y" : "Y^" + std::to_string(m.j);
  if (m.i) s += m.i == 1 ? "X" : "X^" + std::to_string(m.i);
  return s;
}

template <class T>
Index MomentMatrix<T>::index(const Monomial& mono) const {
  Index p = deglex_index(mono);
  if (mono.i < 0 || mono.j < 0 || p >= order.size())
    throw std::out_of_range("monomial " + to_string(mono) + " outside M(k)");
  return p;
}

template <class T>
MomentMatrix<T> moment_matrix(const BasicBivSeq<T>& s) {
  MomentMatrix<T> mm;
  mm.order = deglex_monomials(s.k());
  Index n = mm.order.size();
  mm.m = Matrix<T>(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = r; c < n; ++c) {
      const auto& a = mm.order[r];
      const auto& b = mm.order[c];
      mm.m(r, c) = s(a.i + b.i, a.j + b.j);
      mm.m(c, r) = mm.m(r, c);
    }
  return mm;
}

template <class T>
Matrix<T> restrict(const MomentMatrix<T>& mm, const std::vector<Monomial>& rows, const std::vector<Monomial>& cols) {
  IndexList r, c;
  for (const auto& m : rows) r.push_back(mm.index(m));
  for (const auto& m : cols) c.push_back(mm.index(m));
  return mm.m.sub(r, c);
}

BiPoly BiPoly::monomial(int i, int j, const Rat& c) {
  BiPoly p;
  p.add(i, j, c);
  return p;
}

void BiPoly::add(int i, int j, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.emplace(Monomial{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

int BiPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m.degree());
  return d;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.t_) add(m.i, m.j, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.t_) add(m.i, m.j, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly p;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) p.add(ma.i + mb.i, ma.j + mb.j, ca * cb);
  return p;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly r(Rat(1)), b(*this);
  while (e) {
    if (e & 1u) r = r * b;
    b = b * b;
    e >>= 1u;
  }
  return r;
}

template <class T>
T riesz(const BasicBivSeq<T>& s, const BiPoly& p) {
  if (p.degree() > s.degree()) throw DegreeOverflow("polynomial degree exceeds 2k");
  T sum(0);
  for (const auto& [m, c] : p.terms()) sum += T(c) * s(m.i, m.j);
  return sum;
}

Affine Affine::inverse() const {
  Rat dt = det();
  if (dt == 0) throw std::domain_error("singular affine map");
  // [[b, c], [e, f]]^-1 = [[f, -c], [-e, b]] / det
  Affine inv;
  inv.b = f / dt;
  inv.c = -c / dt;
  inv.e = -e / dt;
  inv.f = b / dt;
  inv.a = -(inv.b * a + inv.c * d);
  inv.d = -(inv.e * a + inv.f * d);
  return inv;
}

template <class T>
BasicBivSeq<T> affine_apply(const BasicBivSeq<T>& s, const Affine& phi) {
  if (phi.det() == 0) throw std::domain_error("singular affine map");
  int n = s.degree();
  BiPoly p1 = BiPoly(phi.a) + BiPoly::monomial(1, 0, phi.b) + BiPoly::monomial(0, 1, phi.c);
  BiPoly p2 = BiPoly(phi.d) + BiPoly::monomial(1, 0, phi.e) + BiPoly::monomial(0, 1, phi.f);
  std::vector<BiPoly> pw1{BiPoly(Rat(1))}, pw2{BiPoly(Rat(1))};
  for (int e = 1; e <= n; ++e) {
    pw1.push_back(pw1.back() * p1);
    pw2.push_back(pw2.back() * p2);
  }
  BasicBivSeq<T> out(s.k());
  for (int d = 0; d <= n; ++d)
    for (int j = 0; j <= d; ++j) out.at(d - j, j) = riesz(s, pw1[d - j] * pw2[j]);
  return out;
}

void CurveType::validate() const {
  if (tag != Curve::Hyp1 && a == 0) throw std::invalid_argument("curve coefficient a must be nonzero");
}

BiPoly CurveType::conic() const {
  switch (tag) {
    case Curve::Hyp1:
      return BiPoly(Rat(1)) - BiPoly::monomial(1, 1);
    case Curve::Hyp2:
      return BiPoly::x() + BiPoly::y() + BiPoly::monomial(1, 1, a);
    case Curve::Hyp3:
      return BiPoly::monomial(0, 1, a) + BiPoly::monomial(2, 0) - BiPoly::monomial(0, 2);
  }
  return {};
}

std::string to_string(Curve c) {
  switch (c) {
    case Curve::Hyp1:
      return "hyp1";
    case Curve::Hyp2:
      return "hyp2";
    case Curve::Hyp3:
      return "hyp3";
  }
  return "?";
}

Curve parse_curve(const std::string& s) {
  if (s == "hyp1") return Curve::Hyp1;
  if (s == "hyp2") return Curve::Hyp2;
  if (s == "hyp3") return Curve::Hyp3;
  throw std::invalid_argument("unknown curve type '" + s + "'");
}

template <class T>
RelationReport check_relations(const BasicBivSeq<T>& s, const CurveType& c) {
  RelationReport rep;
  BiPoly p = c.cubic();
  int top = 2 * s.k() - 3;
  for (int d = 0; d <= top; ++d)
    for (int j = 0; j <= d; ++j) {
      if (!is_zero(riesz(s, BiPoly::monomial(d - j, j) * p))) {
        rep.ok = false;
        rep.violations.push_back({d - j, j});
      }
    }
  return rep;
}

template <class T>
std::vector<T> column_relation(const BasicBivSeq<T>& s, const BiPoly& p) {
  if (p.degree() > s.k()) throw DegreeOverflow("column relation degree exceeds k");
  auto order = deglex_monomials(s.k());
  std::vector<T> v(order.size(), T(0));
  for (Index r = 0; r < order.size(); ++r)
    for (const auto& [m, c] : p.terms()) v[r] += T(c) * s(order[r].i + m.i, order[r].j + m.j);
  return v;
}

#define HYPTMP_INSTANTIATE(T)                                                                                 \
  template struct MomentMatrix<T>;                                                                            \
  template MomentMatrix<T> moment_matrix(const BasicBivSeq<T>&);                                              \
  template Matrix<T> restrict(const MomentMatrix<T>&, const std::vector<Monomial>&, const std::vector<Monomial>&); \
  template T riesz(const BasicBivSeq<T>&, const BiPoly&);                                                     \
  template BasicBivSeq<T> affine_apply(const BasicBivSeq<T>&, const Affine&);                                 \
  template RelationReport check_relations(const BasicBivSeq<T>&, const CurveType&);                          \
  template std::vector<T> column_relation(const BasicBivSeq<T>&, const BiPoly&);

HYPTMP_INSTANTIATE(Rat)
HYPTMP_INSTANTIATE(QuadExt)

}  // namespace hyptmp
