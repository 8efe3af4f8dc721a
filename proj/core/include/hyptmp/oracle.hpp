#pragma once

#include "hyptmp/moments.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace hyptmp {

struct ExactAtom {
  Rat x;
  Rat y;
  Rat w;
  bool on_line = false;
};

struct GroundTruth {
  CurveType curve;
  std::vector<ExactAtom> atoms;
  BivSeq moments;
  std::uint64_t seed = 0;
};

BivSeq forward_moments(const std::vector<ExactAtom>& atoms, int k);

// Distinct atoms with coordinates of height <= 50. Conic atoms are drawn from
// hyp1: (x, 1/x); hyp2: (x, -x/(1 + a x)); hyp3: (a(1/r - r)/4, a(2 - r - 1/r)/4).
GroundTruth random_curve_measure(const CurveType& c, int k, int n_line, int n_conic, std::uint64_t seed);

// Uniform small-height rational num/den with |num| <= h, 1 <= den <= h.
Rat random_rational(std::mt19937_64& rng, int h, bool positive = false);

struct CompareReport {
  bool equal = false;
  Rat max_relative{0};  // max |a - b| / max(1, |b|)
  bool within(const Rat& tol) const { return max_relative <= tol; }
};

CompareReport compare(const BivSeq& s1, const BivSeq& s2);

}  // namespace hyptmp
