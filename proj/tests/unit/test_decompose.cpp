#include "support.hpp"

#include "hyptmp/decompose.hpp"
#include "hyptmp/oracle.hpp"

#include <doctest.h>

using namespace hyptmp;
using test::PointMass;

namespace {

BivSeq dirac(const Rat& x, const Rat& y, int k = 3) { return test::moments_of({{x, y, Rat(1)}}, k); }

// Conic-only and full moments of a random split measure.
struct Split {
  BivSeq full, conic;
};

Split split_measure(const CurveType& c, std::uint64_t seed) {
  GroundTruth gt = random_curve_measure(c, 3, 2, 5, seed);
  std::vector<PointMass> all, con;
  for (const auto& a : gt.atoms) {
    all.push_back({a.x, a.y, a.w});
    if (!a.on_line) con.push_back({a.x, a.y, a.w});
  }
  return {test::moments_of(all, 3), test::moments_of(con, 3)};
}

const CurveType kCurves[] = {CurveType::hyp1(), CurveType::hyp2(), CurveType::hyp3(2)};

}  // namespace

TEST_CASE("line atom gives zero A_min") {
  auto d = build_decomposition(dirac(1, 0), CurveType::hyp1());
  CHECK(d.A12.is_zero());
  CHECK(d.A_min.is_zero());
  CHECK(d.eta == 0);
}

TEST_CASE("conic atom leaves nothing for the line") {
  auto d = build_decomposition(dirac(1, 1), CurveType::hyp1());
  CHECK(h_of(d, d.A_min).is_zero());
}

TEST_CASE("F and H at the trivial arguments") {
  auto s = split_measure(CurveType::hyp1(), 3).full;
  auto d = build_decomposition(s, CurveType::hyp1());
  CHECK(h_of(d, d.A11).is_zero());
  RatMat zero(d.k + 1, d.k + 1);
  CHECK(h_of(d, zero) == d.A11);
  RatMat f0 = f_of(d, zero);
  for (Index r : d.x_pos)
    for (Index c : d.x_pos) CHECK(f0(r, c) == 0);
  CHECK_THROWS(f_of(d, RatMat(2, 2)));
}

TEST_CASE("preconditions are enforced") {
  BivSeq s = dirac(1, 1);
  s.at(0, 0) = -1;
  CHECK_THROWS_AS(build_decomposition(s, CurveType::hyp1()), PreconditionFailure);
  CHECK_THROWS_AS(build_decomposition(dirac(1, 2), CurveType::hyp1()), PreconditionFailure);
}

TEST_CASE("decomposition laws on random split measures") {
  for (const CurveType& c : kCurves) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      Split sp = split_measure(c, seed);
      auto d = build_decomposition(sp.full, c);
      RatMat f = f_of(d, d.A_min), h = h_of(d, d.A_min);
      CHECK(is_psd(f));
      CHECK(is_psd(h));
      CHECK(rank(d.mm.m) == rank(f) + rank(h));
      CHECK(d.A_min == d.A12 * pinv(d.A22) * d.A12.transpose());
      CHECK(d.m_tilde.is_symmetric());
      // A_hat differs from A_min at one symmetric pair, by eta.
      RatMat diff = d.A_hat - d.A_min;
      CHECK(diff(d.hat_row, d.hat_col) == d.eta);
      diff(d.hat_row, d.hat_col) = 0;
      diff(d.hat_col, d.hat_row) = 0;
      CHECK(diff.is_zero());
      CHECK(hankel_entries(d.A_hat).size() == static_cast<Index>(2 * d.k + 1));

      // F(A_min) carries the conic column relations x^i y^j c for i + j <= k - 2.
      auto mons = deglex_monomials(d.k);
      for (int i = 0; i <= d.k - 2; ++i)
        for (int j = 0; i + j <= d.k - 2; ++j) {
          BiPoly p = BiPoly::monomial(i, j) * c.conic();
          std::vector<Rat> v(mons.size(), Rat(0));
          for (const auto& [m, coef] : p.terms()) v[deglex_index(m)] = coef;
          for (Index r = 0; r < f.rows(); ++r) {
            Rat acc(0);
            for (Index col = 0; col < f.cols(); ++col) acc += f(r, col) * v[col];
            CHECK(acc == 0);
          }
        }

      // F(A) psd iff A >= A_min, probed with rank-one perturbations.
      std::mt19937_64 rng(seed);
      RatMat p = test::random_psd(rng, d.k + 1, 1, 3);
      if (!p.is_zero()) {
        CHECK(is_psd(f_of(d, d.A_min + p)));
        CHECK_FALSE(is_psd(f_of(d, d.A_min - p)));
      }

      // Forced conic moments agree with the true conic part.
      for (const auto& [i, v] : determined_conic_moments(sp.full, c)) CHECK(v == sp.conic(static_cast<int>(i), 0));
    }
  }
}

TEST_CASE("forced conic moments per curve") {
  BivSeq s = split_measure(CurveType::hyp1(), 1).full;
  auto f = determined_conic_moments(s, CurveType::hyp1());
  REQUIRE(f.size() == 5);
  for (const auto& [i, v] : f) CHECK(v == s(static_cast<int>(i) + 1, 1));
  auto g = determined_conic_moments(split_measure(CurveType::hyp2(), 1).full, CurveType::hyp2());
  CHECK(g.front().first == 1);
  CHECK(g.back().first == 5);
  auto h = determined_conic_moments(split_measure(CurveType::hyp3(2), 1).full, CurveType::hyp3(2));
  CHECK(h.front().first == 2);
  CHECK(h.back().first == 6);
}

TEST_CASE("Hankel entries") {
  RatMat a{{1, 2, 3}, {2, 3, 4}, {3, 4, 5}};
  auto g = hankel_entries(a);
  CHECK(g == UniSeq<Rat>{1, 2, 3, 4, 5});
  a(1, 1) = 7;
  CHECK_THROWS_AS(hankel_entries(a), std::logic_error);
}
