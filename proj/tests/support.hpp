#pragma once

#include <random>

#include "qsing/quiver.hpp"

namespace qsing::testing {

// Linearly oriented A_n: 1 -> 2 -> ... -> n.
inline Quiver a_linear(int n) {
  std::vector<Arrow> arrows;
  for (int i = 1; i < n; ++i) arrows.push_back({i, i + 1});
  return Quiver(n, arrows);
}

// D_n with the three short arms pointing at vertex 2.
inline Quiver d_quiver(int n) {
  std::vector<Arrow> arrows{{1, 2}, {3, 2}};
  for (int i = 4; i <= n; ++i) arrows.push_back({i, i - 2 == 2 ? 2 : i - 1});
  return Quiver(n, arrows);
}

inline Quiver e_quiver(int n) {
  // Bottom row 1..n-1, vertex n above vertex 3.
  std::vector<Arrow> arrows{{1, 2}, {2, 3}, {n, 3}};
  for (int i = 4; i < n; ++i) arrows.push_back({i, i - 1});
  return Quiver(n, arrows);
}

inline std::vector<Quiver> dynkin_zoo() {
  return {a_linear(2), a_linear(3), a_linear(4), a_linear(5), d_quiver(4), d_quiver(5), e_quiver(6), e_quiver(7),
          e_quiver(8)};
}

}  // namespace qsing::testing
