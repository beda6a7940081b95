#include "loopkit/construct.hpp"

#include <algorithm>
#include <numeric>

#include "loopkit/errors.hpp"

namespace loopkit {

FiniteLoop cyclic_group(int n) {
  if (n < 1) throw Error("cyclic_group: order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  return FiniteLoop::from_table(t);
}

FiniteLoop dihedral_group(int order) {
  if (order < 2 || order % 2) throw Error("dihedral_group: order must be even and >= 2");
  const int m = order / 2;
  // element (r, s) -> index s*m + r; (r1,s1)(r2,s2) = (r1 + (-1)^s1 r2, s1^s2)
  auto idx = [m](int r, int s) { return s * m + r; };
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  for (int s1 = 0; s1 < 2; ++s1)
    for (int r1 = 0; r1 < m; ++r1)
      for (int s2 = 0; s2 < 2; ++s2)
        for (int r2 = 0; r2 < m; ++r2) {
          int r = s1 == 0 ? (r1 + r2) % m : (r1 - r2 + m) % m;
          t[static_cast<std::size_t>(idx(r1, s1))][static_cast<std::size_t>(idx(r2, s2))] =
              idx(r, s1 ^ s2);
        }
  return FiniteLoop::from_table(t);
}

FiniteLoop quaternion_group(int order) {
  if (order < 8 || order % 4) throw Error("quaternion_group: order must be a multiple of 4 and >= 8");
  const int m = order / 2;  // <a,b | a^m = 1 via b^2 = a^{m/2}, bab^-1 = a^-1>
  auto idx = [m](int i, int j) { return j * m + i; };
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  for (int j1 = 0; j1 < 2; ++j1)
    for (int i1 = 0; i1 < m; ++i1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < m; ++i2) {
          int i, j;
          if (j1 == 0) {
            i = (i1 + i2) % m;
            j = j2;
          } else if (j2 == 0) {
            i = (i1 - i2 + m) % m;
            j = 1;
          } else {
            i = (i1 - i2 + m / 2 + m) % m;
            j = 0;
          }
          t[static_cast<std::size_t>(idx(i1, j1))][static_cast<std::size_t>(idx(i2, j2))] = idx(i, j);
        }
  return FiniteLoop::from_table(t);
}

FiniteLoop symmetric_group(int k) {
  if (k < 1 || k > 4) throw Error("symmetric_group: k must be in 1..4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  auto find = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i)
        c[static_cast<std::size_t>(i)] =
            perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = find(c);
    }
  return FiniteLoop::from_table(t);
}

FiniteLoop direct_product(const FiniteLoop& a, const FiniteLoop& b) {
  const int na = a.size(), nb = b.size(), n = na * nb;
  if (n > 255) throw Error("direct_product: order exceeds 255");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          t[static_cast<std::size_t>(x1 * nb + y1)][static_cast<std::size_t>(x2 * nb + y2)] =
              a.mul(x1, x2) * nb + b.mul(y1, y2);
  return FiniteLoop::from_table(t);
}

FiniteLoop chein_double(const FiniteLoop& g) {
  if (!is_associative(g)) throw NotAGroup();
  const int n = g.size(), m = 2 * n;
  if (m > 255) throw Error("chein_double: order exceeds 255");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = g.mul(a, b);
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(n + b)] = n + g.mul(b, a);
      t[static_cast<std::size_t>(n + a)][static_cast<std::size_t>(b)] = n + g.mul(a, g.inv(b));
      t[static_cast<std::size_t>(n + a)][static_cast<std::size_t>(n + b)] = g.mul(g.inv(b), a);
    }
  FiniteLoop out = FiniteLoop::from_table(t);
  if (!is_moufang(out).holds) throw Error("chein_double: result failed the Moufang check");
  return out;
}

FiniteLoop builtin_group(const std::string& kind, int order) {
  if (order > 24) throw Error("builtin_group: order must be <= 24");
  if (kind == "cyclic") return cyclic_group(order);
  if (kind == "dihedral") return dihedral_group(order);
  if (kind == "quaternion") return quaternion_group(order);
  if (kind == "symmetric") {
    for (int k = 1; k <= 4; ++k) {
      int fact = 1;
      for (int i = 2; i <= k; ++i) fact *= i;
      if (fact == order) return symmetric_group(k);
    }
    throw Error("builtin_group: no symmetric group of order " + std::to_string(order));
  }
  throw Error("builtin_group: unknown kind '" + kind + "'");
}

std::vector<std::string> builtin_group_kinds() {
  return {"cyclic", "dihedral", "quaternion", "symmetric"};
}

namespace {

bool extend_iso(const FiniteLoop& a, const FiniteLoop& b, std::vector<int>& map,
                std::vector<char>& used, int next) {
  const int n = a.size();
  if (next == n) return true;
  if (map[static_cast<std::size_t>(next)] >= 0) return extend_iso(a, b, map, used, next + 1);
  for (int img = 0; img < n; ++img) {
    if (used[static_cast<std::size_t>(img)]) continue;
    map[static_cast<std::size_t>(next)] = img;
    used[static_cast<std::size_t>(img)] = 1;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (map[static_cast<std::size_t>(x)] < 0) continue;
      int xy = a.mul(x, next), yx = a.mul(next, x);
      int bxy = b.mul(map[static_cast<std::size_t>(x)], img), byx = b.mul(img, map[static_cast<std::size_t>(x)]);
      if (map[static_cast<std::size_t>(xy)] >= 0 && map[static_cast<std::size_t>(xy)] != bxy) ok = false;
      if (ok && map[static_cast<std::size_t>(yx)] >= 0 && map[static_cast<std::size_t>(yx)] != byx) ok = false;
    }
    if (ok && extend_iso(a, b, map, used, next + 1)) return true;
    map[static_cast<std::size_t>(next)] = -1;
    used[static_cast<std::size_t>(img)] = 0;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const FiniteLoop& a, const FiniteLoop& b) {
  if (a.size() != b.size()) return false;
  if (a.size() > 16) throw Error("is_isomorphic: order exceeds the n <= 16 cap");
  std::vector<int> map(static_cast<std::size_t>(a.size()), -1);
  std::vector<char> used(static_cast<std::size_t>(a.size()), 0);
  map[0] = 0;
  used[0] = 1;
  return extend_iso(a, b, map, used, 1);
}

}  // namespace loopkit
