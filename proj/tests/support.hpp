#pragma once
// Enumeration helpers shared by the suites and the acceptance run.

#include <algorithm>
#include <vector>

#include "flagdom/schubert.hpp"

namespace support {

using flagdom::Int;
using flagdom::IntVector;
using flagdom::Parabolic;

inline std::vector<Parabolic> all_parabolics(int rank) {
  std::vector<Parabolic> out;
  for (int mask = 0; mask < (1 << rank); ++mask) {
    Parabolic p;
    for (int j = 0; j < rank; ++j)
      if (mask >> j & 1) p.levi.push_back(j);
    out.push_back(p);
  }
  return out;
}

// All weights with coordinates in [-r, r] that are dominant on the Levi.
inline std::vector<IntVector> levi_dominant_box(int rank, const Parabolic& p, Int r) {
  std::vector<IntVector> out{{}};
  for (int j = 0; j < rank; ++j) {
    std::vector<IntVector> next;
    const bool levi = std::find(p.levi.begin(), p.levi.end(), j) != p.levi.end();
    for (const auto& v : out)
      for (Int x = levi ? 0 : -r; x <= r; ++x) {
        auto w = v;
        w.push_back(x);
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace support
