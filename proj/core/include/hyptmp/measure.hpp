#pragma once

#include "hyptmp/hamburger.hpp"
#include "hyptmp/moments.hpp"
#include "hyptmp/real.hpp"

#include <optional>
#include <vector>

namespace hyptmp {

struct PlaneAtom {
  Real x;
  Real y;
  Real w;
  std::optional<Rat> x_exact;
  std::optional<Rat> y_exact;
  std::optional<Rat> w_exact;
  bool on_line = false;  // part of the y = 0 component
};

struct PlaneMeasure {
  std::vector<PlaneAtom> atoms;
  unsigned bits = 256;
};

// Moments of degree <= 2k in degree-lexicographic order.
std::vector<Real> plane_moments(const PlaneMeasure& mu, int k);

// max over i+j <= 2k of |beta_rec - beta| / max(1, |beta|).
template <class T>
Real relative_residual(const PlaneMeasure& mu, const BasicBivSeq<T>& s);

// Adds the atoms of a measure on the line y = 0.
void append_line_atoms(PlaneMeasure& mu, const LineMeasure& line);

// Throws ExtractionError when the residual exceeds 2^(-bits/2).
template <class T>
void require_reproduces(const PlaneMeasure& mu, const BasicBivSeq<T>& s, const char* what);

// Pushes every atom through phi, keeping exact coordinates exact.
PlaneMeasure map_measure(const PlaneMeasure& mu, const Affine& phi);

}  // namespace hyptmp
