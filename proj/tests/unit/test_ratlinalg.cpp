#include "support.hpp"

#include "hyptmp/linalg.hpp"
#include "hyptmp/real.hpp"

#include <doctest.h>

using namespace hyptmp;
using hyptmp::test::q;

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rat("6/4") == Rat(3, 2));
  CHECK(parse_rat("-6/4").get_den() == 2);
  CHECK(parse_rat("7") == 7);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK(exact_sqrt(Rat(9, 4)) == Rat(3, 2));
  CHECK_FALSE(exact_sqrt(Rat(2)).has_value());
}

TEST_CASE("rank of small matrices") {
  CHECK(rank(RatMat::identity(3)) == 3);
  CHECK(rank(RatMat(3, 3)) == 0);
  CHECK(rank(RatMat{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("pseudoinverse examples") {
  CHECK(pinv(RatMat::identity(3)) == RatMat::identity(3));
  RatMat z(2, 3);
  RatMat pz = pinv(z);
  CHECK(pz.rows() == 3);
  CHECK(pz.cols() == 2);
  CHECK(pz.is_zero());
  RatMat ones{{1, 1}, {1, 1}};
  Rat f(1, 4);
  CHECK(pinv(ones) == RatMat{{f, f}, {f, f}});
}

TEST_CASE("pseudoinverse of a rank-2 integer matrix matches a frozen value") {
  // Frozen from sympy Matrix([[1,2,3],[4,5,6],[7,8,9]]).pinv().
  RatMat m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  RatMat expected{{q("-23/36"), q("-1/6"), q("11/36")}, {q("-1/18"), q("0"), q("1/18")}, {q("19/36"), q("1/6"), q("-7/36")}};
  CHECK(pinv(m) == expected);
}

TEST_CASE("Penrose identities on random matrices") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 60; ++it) {
    Index r = 1 + rng() % 5, c = 1 + rng() % 5, k = 1 + rng() % std::min(r, c);
    RatMat m = test::random_matrix(rng, r, k, 6) * test::random_matrix(rng, k, c, 6);
    RatMat p = pinv(m);
    CHECK(m * p * m == m);
    CHECK(p * m * p == p);
    CHECK((m * p).is_symmetric());
    CHECK((p * m).is_symmetric());
  }
}

TEST_CASE("psd test") {
  CHECK(is_psd(RatMat{{1, 0}, {0, 0}}));
  CHECK_FALSE(is_psd(RatMat{{0, 1}, {1, 0}}));
  CHECK(is_psd(RatMat{{2, 1}, {1, 2}}));
  CHECK_FALSE(is_psd(RatMat{{0, 0}, {0, -1}}));
  auto info = psd_info(RatMat{{1, 1, 0}, {1, 1, 0}, {0, 0, 0}});
  CHECK(info.psd);
  CHECK(info.rank == 1);
}

TEST_CASE("psd over a quadratic field") {
  QuadExt r2 = QuadExt::sqrt(2);
  QMat m{{QuadExt(2), r2}, {r2, QuadExt(1)}};  // det 0
  auto info = psd_info(m);
  CHECK(info.psd);
  CHECK(info.rank == 1);
  QMat n{{QuadExt(1), r2}, {r2, QuadExt(1)}};  // det -1
  CHECK_FALSE(is_psd(n));
}

TEST_CASE("Schur complements") {
  CHECK(schur(RatMat{{1, 1}, {1, 1}}, 1) == RatMat{{0}});
  CHECK(schur(RatMat{{1, 0}, {0, 5}}, 1) == RatMat{{5}});
  CHECK(schur(RatMat{{0, 1}, {1, 1}}, 1) == RatMat{{1}});
  CHECK(schur(RatMat{{1, 0}, {0, 5}}, 1, true) == RatMat{{1}});
}

TEST_CASE("block psd and Albert rank additivity") {
  auto b = block_psd(RatMat::identity(4), 2);
  CHECK(b.psd);
  CHECK(b.rank_m == 4);
  CHECK(b.rank_a == 2);
  CHECK(b.rank_schur == 2);
  b = block_psd(RatMat{{1, 1}, {1, 1}}, 1);
  CHECK(b.psd);
  CHECK(b.rank_m == 1);
  CHECK(b.rank_schur == 0);
  b = block_psd(RatMat{{0, 1}, {1, 1}}, 1);
  CHECK_FALSE(b.psd);
  CHECK_FALSE(b.colspace_ok);

  std::mt19937_64 rng(5);
  for (int it = 0; it < 40; ++it) {
    Index n = 2 + rng() % 5;
    RatMat m = test::random_psd(rng, n, 1 + rng() % n);
    Index head = 1 + rng() % (n - 1);
    auto r = block_psd(m, head);
    CHECK(r.psd);
    CHECK(r.rank_m == r.rank_a + r.rank_schur);
  }
}

TEST_CASE("column-space solve") {
  RatMat b{{1, 2}, {3, 4}};
  CHECK(colspace_solve(RatMat::identity(2), b, RatMat{{0, 0}, {0, 0}}) == b);
  // pinv([[1,1],[1,1]]) has entries 1/4, so W = (1/2, 1/2) and C = B^T W = 1.
  Rat f(1, 2);
  RatMat w = colspace_solve(RatMat{{1, 1}, {1, 1}}, RatMat{{1}, {1}}, RatMat{{1}});
  CHECK(w == RatMat{{f}, {f}});
  CHECK_THROWS_AS(colspace_solve(RatMat{{1, 0}, {0, 0}}, RatMat{{0}, {1}}, RatMat{{1}}), std::domain_error);

  std::mt19937_64 rng(9);
  for (int it = 0; it < 30; ++it) {
    // M = G^T G with the trailing columns of G in the span of the leading ones: Rank M = Rank A.
    Index na = 2 + rng() % 3, nb = 1 + rng() % 3;
    RatMat ga = test::random_matrix(rng, na + 1, na, 5);
    RatMat gb = ga * test::random_matrix(rng, na, nb, 5);
    RatMat a = ga.transpose() * ga, bb = ga.transpose() * gb, c = gb.transpose() * gb;
    RatMat wv = colspace_solve(a, bb, c);
    CHECK(a * wv == bb);
    CHECK(bb.transpose() * wv == c);
  }
}

TEST_CASE("psd completion examples") {
  RatMat m{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  Completion c = psd_completion({m, 0, 2});
  CHECK(c.x_minus == QuadExt(-1));
  CHECK(c.x_plus == QuadExt(1));
  CHECK(c.rank_at_endpoint == 2);
  CHECK(c.rank_interior == 3);

  RatMat ones{{1, 1, 0}, {1, 1, 1}, {0, 1, 1}};
  c = psd_completion({ones, 0, 2});
  CHECK(c.x_minus == QuadExt(1));
  CHECK(c.x_plus == QuadExt(1));
  CHECK(c.rank_at_endpoint == 1);

  CHECK_THROWS_AS(psd_completion({RatMat{{1, 2, 0}, {2, 1, 0}, {0, 0, 1}}, 0, 2}), NotPartiallyPsd);
}

TEST_CASE("kernel_extends") {
  RatMat d{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}};
  CHECK(kernel_extends(d, {1}, std::vector<Rat>{1}));
  CHECK(kernel_extends(RatMat{{1, 1}, {1, 1}}, {0, 1}, std::vector<Rat>{1, -1}));

  std::mt19937_64 rng(3);
  for (int it = 0; it < 20; ++it) {
    // Column 2 of G is twice column 0 minus column 1: restricted kernel (2, -1, -1) on {0, 1, 2}.
    RatMat g = test::random_matrix(rng, 5, 5, 4);
    for (Index r = 0; r < 5; ++r) g(r, 2) = 2 * g(r, 0) - g(r, 1);
    RatMat full = g.transpose() * g;
    CHECK(kernel_extends(full, {0, 1, 2}, std::vector<Rat>{2, -1, -1}));
  }
}

TEST_CASE("kernel basis") {
  RatMat m{{1, 2, 3}, {2, 4, 6}};
  RatMat k = kernel(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
}

TEST_CASE("quadratic field arithmetic") {
  QuadExt r2 = QuadExt::sqrt(2), r8 = QuadExt::sqrt(8);
  CHECK(r8 == 2 * r2);
  CHECK(r2 * r2 == QuadExt(2));
  CHECK((QuadExt(1) + r2) * (QuadExt(1) - r2) == QuadExt(-1));
  CHECK((QuadExt(3) / (QuadExt(1) + r2)) == QuadExt(-3) + 3 * r2);
  CHECK(QuadExt::sqrt(Rat(9, 4)).is_rational());
  CHECK_THROWS_AS(r2 + QuadExt::sqrt(3), MixedRadicandError);
  // Sign where a^2 and b^2 d differ by a lot: 3 - 1000 sqrt(2) < 0.
  CHECK(sign(QuadExt(3) - 1000 * r2) == -1);
  CHECK(sign(QuadExt(-3) + 1000 * r2) == 1);
  CHECK(sign(QuadExt(1000) - 3 * r2) == 1);
}

TEST_CASE("quadratic field sign agrees with 128-bit evaluation") {
  PrecisionScope scope(128);
  std::mt19937_64 rng(21);
  const int d_choices[] = {2, 3, 5, 6, 7, 10, 127};
  for (int it = 0; it < 10000; ++it) {
    int d = d_choices[rng() % 7];
    QuadExt v(test::draw(rng, 1000), test::draw(rng, 1000), Rat(d));
    Real x = to_real(v);
    int s = x > 0 ? 1 : (x < 0 ? -1 : 0);
    REQUIRE(sign(v) == s);
  }
}
