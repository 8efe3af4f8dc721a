#pragma once

#include "hyptmp/linalg.hpp"
#include "hyptmp/quadext.hpp"

#include <optional>
#include <string>

namespace hyptmp {

// Values of the free moments (t, u) used to split beta into line and conic parts.
struct Witness {
  QuadExt t;
  QuadExt u;
};

struct SolveReport {
  bool exists = false;
  std::optional<Witness> witness;
  std::optional<Index> minimal_atoms;
  Index rank_m = 0;
  std::string branch;       // decision branch that fired
  std::string certificate;  // failed condition when exists = false
};

}  // namespace hyptmp
