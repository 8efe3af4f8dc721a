#pragma once

#include "hyptmp/linalg.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyptmp {

// x^i y^j
struct Monomial {
  int i = 0;
  int j = 0;
  int degree() const { return i + j; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Position in the degree-lexicographic order 1, X, Y, X^2, XY, Y^2, ...
inline Index deglex_index(int i, int j) {
  int d = i + j;
  return static_cast<Index>(d * (d + 1) / 2 + j);
}
inline Index deglex_index(const Monomial& m) { return deglex_index(m.i, m.j); }
inline Index deglex_count(int degree) { return static_cast<Index>((degree + 1) * (degree + 2) / 2); }
std::vector<Monomial> deglex_monomials(int degree);
std::string to_string(const Monomial& m);

// Truncated bivariate sequence {beta_ij : i + j <= 2k}.
template <class T>
class BasicBivSeq {
 public:
  BasicBivSeq() = default;
  explicit BasicBivSeq(int k) : k_(k), v_(deglex_count(2 * k), T(0)) {
    if (k < 0) throw std::invalid_argument("negative truncation order");
  }

  int k() const { return k_; }
  int degree() const { return 2 * k_; }
  bool has(int i, int j) const { return i >= 0 && j >= 0 && i + j <= 2 * k_; }
  const T& operator()(int i, int j) const { return v_.at(checked(i, j)); }
  T& at(int i, int j) { return v_.at(checked(i, j)); }
  const std::vector<T>& raw() const { return v_; }

  template <class U>
  BasicBivSeq<U> cast() const {
    BasicBivSeq<U> out(k_);
    for (int d = 0; d <= 2 * k_; ++d)
      for (int j = 0; j <= d; ++j) out.at(d - j, j) = U(v_[deglex_index(d - j, j)]);
    return out;
  }

  friend bool operator==(const BasicBivSeq& a, const BasicBivSeq& b) { return a.k_ == b.k_ && a.v_ == b.v_; }

 private:
  Index checked(int i, int j) const {
    if (!has(i, j)) throw std::out_of_range("moment index (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return deglex_index(i, j);
  }

  int k_ = 0;
  std::vector<T> v_;
};

using BivSeq = BasicBivSeq<Rat>;

template <class T>
struct MomentMatrix {
  Matrix<T> m;
  std::vector<Monomial> order;  // row i <-> order[i]
  Index index(const Monomial& mono) const;
  Index index(int i, int j) const { return index(Monomial{i, j}); }
};

template <class T>
MomentMatrix<T> moment_matrix(const BasicBivSeq<T>& s);

// Exact submatrix in the given row/column order.
template <class T>
Matrix<T> restrict(const MomentMatrix<T>& mm, const std::vector<Monomial>& rows, const std::vector<Monomial>& cols);

// Sparse bivariate polynomial with rational coefficients.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(const Rat& c) { add(0, 0, c); }  // NOLINT(google-explicit-constructor)
  static BiPoly monomial(int i, int j, const Rat& c = Rat(1));
  static BiPoly x() { return monomial(1, 0); }
  static BiPoly y() { return monomial(0, 1); }

  void add(int i, int j, const Rat& c);
  const std::map<Monomial, Rat>& terms() const { return t_; }
  int degree() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
  BiPoly pow(unsigned e) const;

 private:
  std::map<Monomial, Rat> t_;
};

class DegreeOverflow : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// L_beta(p) = sum a_ij beta_ij.
template <class T>
T riesz(const BasicBivSeq<T>& s, const BiPoly& p);

// Affine map phi(x, y) = (a + b x + c y, d + e x + f y).
struct Affine {
  Rat a{0}, b{1}, c{0}, d{0}, e{0}, f{1};
  Rat det() const { return b * f - c * e; }
  Affine inverse() const;
  // Image of a point.
  std::pair<Rat, Rat> operator()(const Rat& x, const Rat& y) const { return {a + b * x + c * y, d + e * x + f * y}; }
};

// beta~_ij = L_beta(phi1^i phi2^j). Throws std::domain_error on a singular map.
template <class T>
BasicBivSeq<T> affine_apply(const BasicBivSeq<T>& s, const Affine& phi);

enum class Curve { Hyp1, Hyp2, Hyp3 };

struct CurveType {
  Curve tag = Curve::Hyp1;
  // hyp2: c = x + y + a xy (canonical a = -1); hyp3: c = a y + x^2 - y^2.
  Rat a{0};

  static CurveType hyp1() { return {Curve::Hyp1, Rat(0)}; }
  static CurveType hyp2(const Rat& a = Rat(-1)) { return {Curve::Hyp2, a}; }
  static CurveType hyp3(const Rat& a) { return {Curve::Hyp3, a}; }
  void validate() const;
  // The conic factor c of p = y c.
  BiPoly conic() const;
  BiPoly cubic() const { return BiPoly::y() * conic(); }
};

std::string to_string(Curve c);
Curve parse_curve(const std::string& s);

struct RelationReport {
  bool ok = true;
  std::vector<Monomial> violations;  // (i, j) of each violated identity
};

// The identities L_beta(x^i y^j p) = 0 for i + j <= 2k - 3.
template <class T>
RelationReport check_relations(const BasicBivSeq<T>& s, const CurveType& c);

// p(X, Y) evaluated on the columns of M(k): M(k) times the coefficient vector of p.
template <class T>
std::vector<T> column_relation(const BasicBivSeq<T>& s, const BiPoly& p);

}  // namespace hyptmp
