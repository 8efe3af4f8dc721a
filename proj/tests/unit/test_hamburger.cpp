#include "support.hpp"

#include "hyptmp/hamburger.hpp"
#include "hyptmp/polynomial.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hyptmp;

namespace {

UniSeq<Rat> seq(std::initializer_list<long> v) {
  UniSeq<Rat> g;
  for (long x : v) g.push_back(Rat(x));
  return g;
}

}  // namespace

TEST_CASE("Hankel views") {
  auto g = seq({1, 2, 3, 4, 5, 6, 7});
  auto a = hankel(g);
  CHECK(a.rows() == 4);
  CHECK(a(1, 3) == 5);
  CHECK(hankel_corner(g, 1) == RatMat{{1, 2}, {2, 3}});
  CHECK(hankel_tail(g, 1) == RatMat{{5, 6}, {6, 7}});
  CHECK_THROWS_AS(hankel(seq({1, 2})), std::invalid_argument);
}

TEST_CASE("Hamburger decisions") {
  auto r = solve_hamburger(seq({2, 0, 2, 0, 2, 0, 2}));
  CHECK(r.representable);
  CHECK(r.rank == 2);
  CHECK_FALSE(solve_hamburger(seq({1, 0, 0, 0, 1})).representable);
  CHECK_FALSE(solve_hamburger(seq({1, 0, -1})).representable);
  CHECK(solve_hamburger(seq({1, 1, 1, 1, 1})).representable);
}

TEST_CASE("strong Hamburger decisions") {
  auto r = solve_strong(seq({2, 0, 2, 0, 2, 0, 2}));
  CHECK(r.representable);
  CHECK(r.rank == 2);
  // Dirac at 0 is representable on R but not on R \ {0}.
  CHECK(solve_hamburger(seq({1, 0, 0, 0, 0})).representable);
  CHECK_FALSE(solve_strong(seq({1, 0, 0, 0, 0})).representable);
  // Dirac at the origin mixed with other atoms, flat case.
  auto g = test::power_sums({{0, 1}, {2, 3}}, 3);
  CHECK(solve_hamburger(g).representable);
  CHECK_FALSE(solve_strong(g).representable);
}

TEST_CASE("line measure extraction") {
  auto mu = extract_line_measure(seq({2, 0, 2, 0, 2, 0, 2}), false, 256);
  REQUIRE(mu.atoms.size() == 2);
  CHECK(mu.atoms[0].x_exact == Rat(-1));
  CHECK(mu.atoms[1].x_exact == Rat(1));
  CHECK(mu.atoms[0].w_exact == Rat(1));

  mu = extract_line_measure(seq({1, 1, 1, 1, 1}), false, 256);
  REQUIRE(mu.atoms.size() == 1);
  CHECK(mu.atoms[0].x_exact == Rat(1));
  CHECK(mu.atoms[0].w_exact == Rat(1));

  CHECK(extract_line_measure(seq({0, 0, 0}), false, 256).atoms.empty());
}

TEST_CASE("four-atom rational measure is recovered exactly") {
  std::vector<std::pair<Rat, Rat>> atoms{{Rat(-3, 2), 2}, {Rat(1, 7), Rat(1, 3)}, {2, 5}, {9, Rat(1, 11)}};
  auto g = test::power_sums(atoms, 4);  // rank 4 < m + 1 = 5: flat and determinate
  auto mu = extract_line_measure(g, false, 256);
  REQUIRE(mu.atoms.size() == 4);
  for (Index i = 0; i < 4; ++i) {
    CHECK(mu.atoms[i].x_exact == atoms[i].first);
    CHECK(mu.atoms[i].w_exact == atoms[i].second);
  }
}

TEST_CASE("positive definite sequences get rank-many atoms") {
  PrecisionScope scope(320);
  std::vector<std::pair<Rat, Rat>> atoms{{-2, 1}, {Rat(1, 3), 2}, {1, 1}, {4, Rat(1, 2)}};
  auto g = test::power_sums(atoms, 2);  // 4 atoms, Hankel 3x3 pd
  auto mu = extract_line_measure(g, false, 256);
  CHECK(mu.atoms.size() == 3);
  auto rec = line_moments(mu, 0, 4);
  for (int i = 0; i <= 4; ++i) CHECK(abs(rec[i] - to_real(g[i])) < Real("1e-60"));
  auto nu = extract_strong_measure(g, 0, 256);
  for (const auto& a : nu.atoms) CHECK(a.x != 0);
}

TEST_CASE("strong extraction shifts weights") {
  PrecisionScope scope(320);
  // Atoms 1/2 and 3 with the v-sequence indexed from x^-2.
  std::vector<std::pair<Rat, Rat>> atoms{{Rat(1, 2), 1}, {3, 2}};
  UniSeq<Rat> v;
  for (int p = -2; p <= 2; ++p) {
    Rat s(0);
    for (auto [x, w] : atoms) s += w * (p < 0 ? 1 / test::qpow(x, -p) : test::qpow(x, p));
    v.push_back(s);
  }
  auto mu = extract_strong_measure(v, 2, 256);
  REQUIRE(mu.atoms.size() == 2);
  CHECK(mu.atoms[0].x_exact == Rat(1, 2));
  CHECK(mu.atoms[0].w_exact == Rat(1));
  CHECK(mu.atoms[1].w_exact == Rat(2));
}

TEST_CASE("quadratic-field sequences") {
  PrecisionScope scope(320);
  QuadExt r2 = QuadExt::sqrt(2);
  std::vector<QuadExt> xs{QuadExt(1), r2, QuadExt(3) + r2}, ws{QuadExt(1), QuadExt(2), QuadExt(Rat(1, 3))};
  UniSeq<QuadExt> g;
  for (int i = 0; i <= 6; ++i) {
    QuadExt s(0);
    for (int a = 0; a < 3; ++a) {
      QuadExt p(1);
      for (int e = 0; e < i; ++e) p *= xs[a];
      s += ws[a] * p;
    }
    g.push_back(s);
  }
  CHECK(solve_hamburger(g).representable);
  CHECK(solve_hamburger(g).rank == 3);
  auto mu = extract_line_measure(g, false, 256);
  REQUIRE(mu.atoms.size() == 3);
  for (int a = 0; a < 3; ++a) {
    CHECK(abs(mu.atoms[a].x - to_real(xs[a])) < Real("1e-70"));
    CHECK(abs(mu.atoms[a].w - to_real(ws[a])) < Real("1e-70"));
  }
}

TEST_CASE("Sturm root isolation") {
  PrecisionScope scope(256);
  Poly<Rat> p(std::vector<Rat>{-2, 0, 1});
  auto roots = real_roots(p, 200);
  REQUIRE(roots.size() == 2);
  CHECK(abs(roots[1].value - boost::multiprecision::sqrt(Real(2))) < Real("1e-55"));
  CHECK_FALSE(roots[1].exact.has_value());
  // (x - 1/3)(x + 2)(x - 5)
  Poly<Rat> c(std::vector<Rat>{Rat(10, 3), Rat(-9), Rat(-10, 3), 1});
  roots = real_roots(c, 200);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].exact == Rat(-2));
  CHECK(roots[1].exact == Rat(1, 3));
  CHECK(roots[2].exact == Rat(5));
  CHECK(real_roots(Poly<Rat>(std::vector<Rat>{1, 0, 1}), 200).empty());
}

TEST_CASE("random flat sequences round trip") {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 100; ++it) {
    int m = 2 + rng() % 4;
    int n = 1 + rng() % m;
    std::vector<std::pair<Rat, Rat>> atoms;
    while (static_cast<int>(atoms.size()) < n) {
      Rat x = test::draw(rng, 12);
      if (std::none_of(atoms.begin(), atoms.end(), [&](const auto& a) { return a.first == x; }))
        atoms.push_back({x, test::draw(rng, 12, true)});
    }
    std::sort(atoms.begin(), atoms.end());
    auto g = test::power_sums(atoms, m);
    REQUIRE(solve_hamburger(g).representable);
    auto mu = extract_line_measure(g, false, 256);
    REQUIRE(mu.atoms.size() == atoms.size());
    for (Index i = 0; i < atoms.size(); ++i) {
      CHECK(mu.atoms[i].x_exact == atoms[i].first);
      CHECK(mu.atoms[i].w_exact == atoms[i].second);
    }
  }
}
