#pragma once

#include "hyptmp/rational.hpp"

#include <stdexcept>
#include <string>

namespace hyptmp {

class MixedRadicandError : public std::runtime_error {
 public:
  MixedRadicandError() : std::runtime_error("arithmetic across incompatible quadratic radicands") {}
};

// a + b*sqrt(d) with d a positive non-square integer, or d = 0 and b = 0 for
// plain rationals. Radicands d1, d2 with d1*d2 a perfect square are merged.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rat& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long a) : a_(a) {}        // NOLINT(google-explicit-constructor)
  QuadExt(int a) : a_(a) {}         // NOLINT(google-explicit-constructor)
  QuadExt(const Rat& a, const Rat& b, const Rat& radicand);

  static QuadExt sqrt(const Rat& r);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Int& d() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  int sign() const;
  QuadExt conj() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);
  QuadExt operator-() const;

  friend QuadExt operator+(QuadExt l, const QuadExt& r) { return l += r; }
  friend QuadExt operator-(QuadExt l, const QuadExt& r) { return l -= r; }
  friend QuadExt operator*(QuadExt l, const QuadExt& r) { return l *= r; }
  friend QuadExt operator/(QuadExt l, const QuadExt& r) { return l /= r; }
  friend bool operator==(const QuadExt& l, const QuadExt& r) { return (l - r).sign() == 0; }
  friend bool operator!=(const QuadExt& l, const QuadExt& r) { return !(l == r); }
  friend bool operator<(const QuadExt& l, const QuadExt& r) { return (l - r).sign() < 0; }
  friend bool operator>(const QuadExt& l, const QuadExt& r) { return (l - r).sign() > 0; }
  friend bool operator<=(const QuadExt& l, const QuadExt& r) { return (l - r).sign() <= 0; }
  friend bool operator>=(const QuadExt& l, const QuadExt& r) { return (l - r).sign() >= 0; }

  std::string str() const;

 private:
  // Rewrites o's irrational part over this->d_ (or adopts o's radicand).
  Rat aligned_b(const QuadExt& o);
  void normalize();

  Rat a_{0};
  Rat b_{0};
  Int d_{0};
};

inline int sign(const QuadExt& q) { return q.sign(); }
QuadExt abs(const QuadExt& q);

}  // namespace hyptmp
