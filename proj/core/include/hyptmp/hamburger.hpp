#pragma once

#include "hyptmp/linalg.hpp"
#include "hyptmp/real.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyptmp {

template <class T>
using UniSeq = std::vector<T>;

// A_gamma = (gamma_{i+j}) of size m+1 for a sequence of length 2m+1.
template <class T>
Matrix<T> hankel(const UniSeq<T>& g);
// Leading principal block of size p+1 (A_gamma(p)) and trailing block of size p+1 (A_gamma[p]).
template <class T>
Matrix<T> hankel_corner(const UniSeq<T>& g, Index p);
template <class T>
Matrix<T> hankel_tail(const UniSeq<T>& g, Index p);

struct HamburgerResult {
  bool representable = false;
  Index rank = 0;
  std::string reason;
};

template <class T>
HamburgerResult solve_hamburger(const UniSeq<T>& g);

// Representability by a measure on R \ {0}.
template <class T>
HamburgerResult solve_strong(const UniSeq<T>& g);

struct LineAtom {
  Real x;
  Real w;
  std::optional<Rat> x_exact;
  std::optional<Rat> w_exact;
};

struct LineMeasure {
  std::vector<LineAtom> atoms;
  unsigned bits = 256;
};

class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Measure with moments g_0..g_2m and exactly Rank A_gamma atoms.
template <class T>
LineMeasure extract_line_measure(const UniSeq<T>& g, bool avoid_zero, unsigned bits);

// Measure mu on R \ {0} with int x^(i - shift) dmu = g_i.
template <class T>
LineMeasure extract_strong_measure(const UniSeq<T>& g, int shift, unsigned bits);

// sum_l w_l x_l^p for p = from..to (negative powers allowed when no atom is 0).
std::vector<Real> line_moments(const LineMeasure& mu, int from, int to);

}  // namespace hyptmp
