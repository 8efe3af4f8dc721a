#pragma once

#include "hyptmp/hamburger.hpp"
#include "hyptmp/moments.hpp"
#include "hyptmp/rational.hpp"

#include <json.hpp>

#include <fstream>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace hyptmp::test {

inline Rat q(const char* s) { return parse_rat(s); }

inline Rat qpow(const Rat& x, int e) {
  Rat r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

// Power sums computed directly, independent of the library's forward_moments.
struct PointMass {
  Rat x, y, w;
};

inline BivSeq moments_of(const std::vector<PointMass>& atoms, int k) {
  BivSeq s(k);
  for (int d = 0; d <= 2 * k; ++d)
    for (int j = 0; j <= d; ++j) {
      Rat v(0);
      for (const auto& a : atoms) v += a.w * qpow(a.x, d - j) * qpow(a.y, j);
      s.at(d - j, j) = v;
    }
  return s;
}

inline UniSeq<Rat> power_sums(const std::vector<std::pair<Rat, Rat>>& atoms, int m) {
  UniSeq<Rat> g;
  for (int p = 0; p <= 2 * m; ++p) {
    Rat v(0);
    for (const auto& [x, w] : atoms) v += w * qpow(x, p);
    g.push_back(v);
  }
  return g;
}

inline Rat draw(std::mt19937_64& rng, int h, bool positive = false) {
  std::uniform_int_distribution<int> num(positive ? 1 : -h, h), den(1, h);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline RatMat random_matrix(std::mt19937_64& rng, Index rows, Index cols, int h) {
  RatMat m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = draw(rng, h);
  return m;
}

// G^T G with G of the given rank; psd with rank <= r.
inline RatMat random_psd(std::mt19937_64& rng, Index n, Index r, int h = 5) {
  RatMat g = random_matrix(rng, r, n, h);
  return g.transpose() * g;
}

inline BivSeq load_instance(const std::string& path) {
  std::ifstream in(path);
  nlohmann::json j = nlohmann::json::parse(in);
  BivSeq s(j.at("degree").get<int>() / 2);
  for (const auto& m : j.at("moments")) s.at(m.at("i"), m.at("j")) = parse_rat(m.at("value").get<std::string>());
  return s;
}

}  // namespace hyptmp::test
