#include "hyptmp/quadext.hpp"

namespace hyptmp {

namespace {

// Writes r = s^2 * m with m an integer free of small square factors; returns {s, m}.
std::pair<Rat, Int> split_radicand(const Rat& r) {
  Int m = r.get_num() * r.get_den();
  Rat s(1, r.get_den());
  for (unsigned long p = 2; p < 2000; ++p) {
    Int p2 = Int(p) * Int(p);
    if (p2 > m) break;
    while (mpz_divisible_p(m.get_mpz_t(), p2.get_mpz_t())) {
      m /= p2;
      s *= p;
    }
  }
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    s *= Int(::sqrt(m));
    m = 1;
  }
  s.canonicalize();
  return {s, m};
}

}  // namespace

QuadExt::QuadExt(const Rat& a, const Rat& b, const Rat& radicand) : a_(a) {
  if (radicand < 0) throw std::domain_error("negative radicand");
  if (b == 0 || radicand == 0) return;
  auto [s, m] = split_radicand(radicand);
  if (m == 1) {
    a_ += b * s;
    return;
  }
  b_ = b * s;
  d_ = m;
}

QuadExt QuadExt::sqrt(const Rat& r) { return QuadExt(Rat(0), Rat(1), r); }

int QuadExt::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  Rat a2 = a_ * a_;
  Rat bd = b_ * b_ * d_;
  int c = (a2 > bd) - (a2 < bd);
  // sa > 0 > sb: sign of a^2 - b^2 d; sa < 0 < sb: the opposite.
  return sa > 0 ? c : -c;
}

QuadExt QuadExt::conj() const {
  QuadExt r(*this);
  r.b_ = -r.b_;
  return r;
}

Rat QuadExt::aligned_b(const QuadExt& o) {
  if (o.b_ == 0) return Rat(0);
  if (b_ == 0 && d_ == 0) {
    d_ = o.d_;
    return o.b_;
  }
  if (o.d_ == d_) return o.b_;
  Int prod = d_ * o.d_;
  if (!mpz_perfect_square_p(prod.get_mpz_t())) throw MixedRadicandError();
  // sqrt(d2) = sqrt(d1 d2) / d1 * sqrt(d1)
  Rat f(Int(::sqrt(prod)), d_);
  f.canonicalize();
  return o.b_ * f;
}

void QuadExt::normalize() {
  if (b_ == 0) d_ = 0;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  Rat ob = aligned_b(o);
  a_ += o.a_;
  b_ += ob;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  Rat ob = aligned_b(o);
  a_ -= o.a_;
  b_ -= ob;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  if (o.b_ == 0) {
    a_ *= o.a_;
    b_ *= o.a_;
    normalize();
    return *this;
  }
  Rat ob = aligned_b(o);
  Rat na = a_ * o.a_ + b_ * ob * d_;
  Rat nb = a_ * ob + b_ * o.a_;
  a_ = na;
  b_ = nb;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.b_ == 0) {
    if (o.a_ == 0) throw std::domain_error("division by zero");
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  Rat ob = aligned_b(o);
  Rat n = o.a_ * o.a_ - ob * ob * d_;
  if (n == 0) throw std::domain_error("division by zero");
  Rat na = (a_ * o.a_ - b_ * ob * d_) / n;
  Rat nb = (b_ * o.a_ - a_ * ob) / n;
  a_ = na;
  b_ = nb;
  normalize();
  return *this;
}

QuadExt QuadExt::operator-() const {
  QuadExt r(*this);
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

std::string QuadExt::str() const {
  if (b_ == 0) return a_.get_str();
  return a_.get_str() + (b_ < 0 ? "-" : "+") + abs(b_).get_str() + "*sqrt(" + d_.get_str() + ")";
}

QuadExt abs(const QuadExt& q) { return q.sign() < 0 ? -q : q; }

}  // namespace hyptmp
