#include "hyptmp/oracle.hpp"

#include <set>
#include <utility>

namespace hyptmp {

BivSeq forward_moments(const std::vector<ExactAtom>& atoms, int k) {
  BivSeq s(k);
  for (const auto& at : atoms) {
    std::vector<Rat> xp{Rat(1)}, yp{Rat(1)};
    for (int e = 1; e <= 2 * k; ++e) {
      xp.push_back(xp.back() * at.x);
      yp.push_back(yp.back() * at.y);
    }
    for (int d = 0; d <= 2 * k; ++d)
      for (int j = 0; j <= d; ++j) s.at(d - j, j) += at.w * xp[d - j] * yp[j];
  }
  return s;
}

Rat random_rational(std::mt19937_64& rng, int h, bool positive) {
  auto draw = [&](std::uint64_t n) { return static_cast<long>(rng() % n); };
  long num = positive ? 1 + draw(h) : draw(2 * h + 1) - h;
  long den = 1 + draw(h);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

std::pair<Rat, Rat> conic_point(const CurveType& c, std::mt19937_64& rng) {
  for (;;) {
    Rat p = random_rational(rng, 50);
    switch (c.tag) {
      case Curve::Hyp1:
        if (p != 0) return {p, 1 / p};
        break;
      case Curve::Hyp2: {
        Rat den = 1 + c.a * p;
        if (den != 0) return {p, Rat(-p / den)};
        break;
      }
      case Curve::Hyp3:
        if (p != 0) {
          Rat inv = 1 / p;
          return {Rat(c.a * (inv - p) / 4), Rat(c.a * (2 - p - inv) / 4)};
        }
        break;
    }
  }
}

}  // namespace

GroundTruth random_curve_measure(const CurveType& c, int k, int n_line, int n_conic, std::uint64_t seed) {
  c.validate();
  GroundTruth g;
  g.curve = c;
  g.seed = seed;
  std::mt19937_64 rng(seed);
  std::set<std::pair<Rat, Rat>> seen;
  auto add = [&](std::pair<Rat, Rat> pt, bool line) {
    if (!seen.insert(pt).second) return false;
    g.atoms.push_back({pt.first, pt.second, random_rational(rng, 50, true), line});
    return true;
  };
  for (int i = 0; i < n_line;)
    if (add({random_rational(rng, 50), Rat(0)}, true)) ++i;
  for (int i = 0; i < n_conic;)
    if (add(conic_point(c, rng), false)) ++i;
  g.moments = forward_moments(g.atoms, k);
  return g;
}

CompareReport compare(const BivSeq& s1, const BivSeq& s2) {
  if (s1.k() != s2.k()) throw std::invalid_argument("sequences of different degree");
  CompareReport r;
  r.equal = s1 == s2;
  for (Index i = 0; i < s1.raw().size(); ++i) {
    const Rat& b = s2.raw()[i];
    Rat scale = abs(b) > 1 ? Rat(abs(b)) : Rat(1);
    Rat dev = abs(Rat(s1.raw()[i] - b)) / scale;
    if (dev > r.max_relative) r.max_relative = dev;
  }
  return r;
}

}  // namespace hyptmp
