#pragma once

#include "hyptmp/linalg.hpp"
#include "hyptmp/real.hpp"

#include <optional>
#include <vector>

namespace hyptmp {

// Dense univariate polynomial, c[i] the coefficient of x^i, trailing zeros trimmed.
template <class T>
struct Poly {
  std::vector<T> c;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool zero() const { return c.empty(); }
  const T& lead() const { return c.back(); }
  void trim() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }
  T operator()(const T& x) const {
    T r(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
  }
};

template <class T>
Poly<T> derivative(const Poly<T>& p);

// Remainder of a divided by b (b nonzero).
template <class T>
Poly<T> remainder(const Poly<T>& a, const Poly<T>& b);

template <class T>
std::vector<Poly<T>> sturm_chain(const Poly<T>& p);

// Number of sign changes of the chain at x (zeros skipped).
template <class T>
int sign_changes(const std::vector<Poly<T>>& chain, const Rat& x);

struct RealRoot {
  Real value;
  std::optional<Rat> exact;
};

class RootIsolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All distinct real roots in increasing order, refined to about `bits` bits.
// Must be called inside a PrecisionScope of at least `bits`.
template <class T>
std::vector<RealRoot> real_roots(const Poly<T>& p, unsigned bits);

}  // namespace hyptmp
