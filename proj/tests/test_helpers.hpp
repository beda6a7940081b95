#pragma once

#include <optional>
#include <vector>

#include "loopkit/construct.hpp"
#include "loopkit/loop.hpp"

namespace loopkit::testing {

// backtracking search for the first nonassociative loop of order 5
inline FiniteLoop order5_nonassociative_loop() {
  const int n = 5;
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    t[0][static_cast<std::size_t>(i)] = i;
    t[static_cast<std::size_t>(i)][0] = i;
  }
  std::optional<FiniteLoop> found;
  auto fill = [&](auto&& self, int cell) -> bool {
    if (found) return true;
    if (cell == n * n) {
      FiniteLoop q = FiniteLoop::from_table(t);
      if (!is_associative(q)) {
        found = q;
        return true;
      }
      return false;
    }
    int r = cell / n, c = cell % n;
    if (t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] >= 0)
      return self(self, cell + 1);
    for (int v = 0; v < n; ++v) {
      bool clash = false;
      for (int k = 0; k < n && !clash; ++k) {
        if (t[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] == v) clash = true;
        if (t[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] == v) clash = true;
      }
      if (clash) continue;
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      if (self(self, cell + 1)) return true;
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = -1;
    }
    return false;
  };
  fill(fill, 0);
  return *found;
}

inline FiniteLoop moufang_12() { return chein_double(symmetric_group(3)); }
inline FiniteLoop moufang_16d() { return chein_double(dihedral_group(8)); }
inline FiniteLoop moufang_16q() { return chein_double(quaternion_group(8)); }
inline FiniteLoop moufang_20() { return chein_double(dihedral_group(10)); }

}  // namespace loopkit::testing
