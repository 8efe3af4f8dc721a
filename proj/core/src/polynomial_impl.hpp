#pragma once

#include "hyptmp/polynomial.hpp"

#include <algorithm>

namespace hyptmp {

namespace detail {

inline Rat abs_upper(const Rat& q) { return abs(q); }
inline Rat abs_upper(const QuadExt& q) {
  Int s = sqrt(q.d()) + 1;
  return abs(q.a()) + abs(q.b()) * Rat(s);
}

template <class T>
int sign_at(const Poly<T>& p, const Rat& x) {
  return sign(p(T(x)));
}

}  // namespace detail

template <class T>
Poly<T> derivative(const Poly<T>& p) {
  std::vector<T> d;
  for (Index i = 1; i < p.c.size(); ++i) d.push_back(p.c[i] * T(Rat(static_cast<long>(i))));
  return Poly<T>(d);
}

template <class T>
Poly<T> remainder(const Poly<T>& a, const Poly<T>& b) {
  if (b.zero()) throw std::domain_error("polynomial division by zero");
  std::vector<T> r = a.c;
  int db = b.degree();
  T lb = b.lead();
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (is_zero(r[i])) continue;
    T f = r[i] / lb;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c[j];
  }
  r.resize(std::min<Index>(r.size(), static_cast<Index>(db)));
  return Poly<T>(r);
}

template <class T>
std::vector<Poly<T>> sturm_chain(const Poly<T>& p) {
  std::vector<Poly<T>> chain{p, derivative(p)};
  while (!chain.back().zero()) {
    Poly<T> r = remainder(chain[chain.size() - 2], chain.back());
    for (auto& v : r.c) v = -v;
    if (r.zero()) break;
    chain.push_back(r);
  }
  if (chain.back().zero()) chain.pop_back();
  return chain;
}

template <class T>
int sign_changes(const std::vector<Poly<T>>& chain, const Rat& x) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    int s = detail::sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

template <class T>
std::vector<RealRoot> real_roots(const Poly<T>& p, unsigned bits) {
  std::vector<RealRoot> out;
  if (p.degree() <= 0) return out;
  auto chain = sturm_chain(p);
  Rat bound(1);
  Real lead_r = abs(to_real(p.lead()));
  for (Index i = 0; i + 1 < p.c.size(); ++i) {
    Real ratio = to_real(detail::abs_upper(p.c[i])) / lead_r;
    Rat rq = rationalize(ratio, Int(1) << 20) + 1;
    if (rq > bound) bound = rq;
  }
  bound = bound * 2 + 1;

  auto count = [&](const Rat& l, const Rat& r) { return sign_changes(chain, l) - sign_changes(chain, r); };

  struct Interval {
    Rat l, r;
  };
  std::vector<Interval> stack{{-bound, bound}}, isolated;
  std::vector<Rat> exact_roots;
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    int n = count(iv.l, iv.r);
    if (n <= 0) continue;
    if (n == 1) {
      isolated.push_back(iv);
      continue;
    }
    Rat mid = (iv.l + iv.r) / 2;
    if (detail::sign_at(p, mid) == 0) {
      exact_roots.push_back(mid);
      Rat e = (iv.r - iv.l) / 4;
      while (detail::sign_at(p, mid - e) == 0 || detail::sign_at(p, mid + e) == 0 || count(mid - e, mid + e) != 1)
        e /= 2;
      stack.push_back({iv.l, mid - e});
      stack.push_back({mid + e, iv.r});
    } else {
      stack.push_back({iv.l, mid});
      stack.push_back({mid, iv.r});
    }
  }

  for (const Rat& q : exact_roots) out.push_back({to_real(q), q});
  const Rat width = Rat(1, Int(1) << 60);
  for (Interval iv : isolated) {
    int sl = detail::sign_at(p, iv.l), sr = detail::sign_at(p, iv.r);
    if (sl == 0 || sr == 0 || sl == sr) throw RootIsolationError("root of even multiplicity");
    std::optional<Rat> hit;
    while (iv.r - iv.l > width) {
      Rat mid = (iv.l + iv.r) / 2;
      int sm = detail::sign_at(p, mid);
      if (sm == 0) {
        hit = mid;
        break;
      }
      if (sm == sl)
        iv.l = mid;
      else
        iv.r = mid;
    }
    if (hit) {
      out.push_back({to_real(*hit), hit});
      continue;
    }
    std::vector<Real> cr;
    for (const auto& v : p.c) cr.push_back(to_real(v));
    Real x = to_real((iv.l + iv.r) / 2), lo = to_real(iv.l), hi = to_real(iv.r);
    Real tol = boost::multiprecision::ldexp(Real(1), -static_cast<int>(bits) - 8);
    for (int it = 0; it < 100; ++it) {
      Real f = 0, df = 0;
      for (auto k = cr.rbegin(); k != cr.rend(); ++k) {
        df = df * x + f;
        f = f * x + *k;
      }
      if (df == 0) break;
      Real nx = x - f / df;
      if (nx < lo || nx > hi) nx = (lo + hi) / 2;
      Real step = abs(nx - x);
      x = nx;
      if (step <= tol * (1 + abs(x))) break;
    }
    RealRoot root{x, std::nullopt};
    Rat guess = rationalize(x, Int(1) << (bits / 4));
    if (guess > iv.l && guess < iv.r && detail::sign_at(p, guess) == 0) root = {to_real(guess), guess};
    out.push_back(root);
  }
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
  return out;
}

}  // namespace hyptmp
