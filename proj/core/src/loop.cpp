#include "loopkit/loop.hpp"

#include <algorithm>
#include <deque>

#include "loopkit/errors.hpp"

namespace loopkit {

FiniteLoop FiniteLoop::from_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw BadTable("empty table");
  if (n > 255) throw BadTable("loop order exceeds 255");
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(table[static_cast<std::size_t>(i)].size()) != n)
      throw BadTable("ragged row " + std::to_string(i));

  for (int i = 0; i < n; ++i) {
    std::vector<char> row_seen(static_cast<std::size_t>(n), 0), col_seen(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
      int r = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      int c = table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (r < 0 || r >= n) throw BadTable("entry out of range at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (row_seen[static_cast<std::size_t>(r)]) throw NotLatinSquare(i, j);
      if (col_seen[static_cast<std::size_t>(c)]) throw NotLatinSquare(j, i);
      row_seen[static_cast<std::size_t>(r)] = 1;
      col_seen[static_cast<std::size_t>(c)] = 1;
    }
  }

  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int x = 0; x < n; ++x) {
      if (table[static_cast<std::size_t>(cand)][static_cast<std::size_t>(x)] != x ||
          table[static_cast<std::size_t>(x)][static_cast<std::size_t>(cand)] != x) {
        ok = false;
        break;
      }
    }
    if (ok) e = cand;
  }
  if (e < 0) throw NoIdentity();

  // renumber so the identity is 0 (swap labels 0 <-> e)
  std::vector<int> relabel(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) relabel[static_cast<std::size_t>(i)] = i;
  relabel[0] = e;
  relabel[static_cast<std::size_t>(e)] = 0;

  FiniteLoop q;
  q.n_ = n;
  q.mul_.assign(static_cast<std::size_t>(n * n), 0);
  q.ld_.assign(static_cast<std::size_t>(n * n), 0);
  q.rd_.assign(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = table[static_cast<std::size_t>(relabel[static_cast<std::size_t>(i)])]
                   [static_cast<std::size_t>(relabel[static_cast<std::size_t>(j)])];
      q.mul_[static_cast<std::size_t>(i * n + j)] = relabel[static_cast<std::size_t>(v)];
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int p = q.mul_[static_cast<std::size_t>(i * n + j)];
      q.ld_[static_cast<std::size_t>(i * n + p)] = j;
      q.rd_[static_cast<std::size_t>(p * n + j)] = i;
    }
  return q;
}

int FiniteLoop::power(int a, int k) const {
  if (k == 0) return 0;
  int base = k < 0 ? inv(a) : a;
  if (k < 0) k = -k;
  int acc = base;
  for (int i = 1; i < k; ++i) acc = mul(acc, base);
  return acc;
}

Perm FiniteLoop::left_translation(int x) const {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) img[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(mul(x, v));
  return Perm(std::move(img));
}

Perm FiniteLoop::right_translation(int x) const {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) img[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(mul(v, x));
  return Perm(std::move(img));
}

Perm FiniteLoop::middle_translation(int x) const {
  return left_translation(x) * right_translation(x);
}

std::vector<std::vector<int>> FiniteLoop::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mul(i, j);
  return out;
}

Perm inner_t(const FiniteLoop& q, int u) {
  return q.right_translation(u).inverse() * q.left_translation(u);
}

Perm inner_l(const FiniteLoop& q, int u, int v) {
  return q.left_translation(q.mul(u, v)).inverse() * q.left_translation(u) * q.left_translation(v);
}

Perm inner_r(const FiniteLoop& q, int u, int v) {
  return q.right_translation(q.mul(u, v)).inverse() * q.right_translation(v) * q.right_translation(u);
}

MoufangCheck is_moufang(const FiniteLoop& q) {
  const int n = q.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (q.mul(x, q.mul(y, q.mul(x, z))) != q.mul(q.mul(q.mul(x, y), x), z))
          return {false, {x, y, z}};
  return {true, {}};
}

bool moufang_identity_holds(const FiniteLoop& q, int which) {
  const int n = q.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        bool ok = true;
        switch (which) {
          case 0: ok = q.mul(x, q.mul(y, q.mul(x, z))) == q.mul(q.mul(q.mul(x, y), x), z); break;
          case 1: ok = q.mul(q.mul(q.mul(z, x), y), x) == q.mul(z, q.mul(x, q.mul(y, x))); break;
          case 2: ok = q.mul(x, q.mul(q.mul(y, z), x)) == q.mul(q.mul(x, y), q.mul(z, x)); break;
          default: ok = q.mul(q.mul(x, q.mul(y, z)), x) == q.mul(q.mul(x, y), q.mul(z, x)); break;
        }
        if (!ok) return false;
      }
  return true;
}

namespace {

// closure of `seed` under mul/ldiv/rdiv
std::vector<int> closure_elements(const FiniteLoop& q, std::vector<int> seed) {
  std::vector<char> in(static_cast<std::size_t>(q.size()), 0);
  std::deque<int> todo;
  std::vector<int> out;
  auto add = [&](int x) {
    if (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = 1;
      out.push_back(x);
      todo.push_back(x);
    }
  };
  add(0);
  for (int s : seed) add(s);
  while (!todo.empty()) {
    int a = todo.front();
    todo.pop_front();
    for (std::size_t i = 0; i < out.size(); ++i) {
      int b = out[i];
      add(q.mul(a, b));
      add(q.mul(b, a));
      add(q.ldiv(a, b));
      add(q.ldiv(b, a));
      add(q.rdiv(a, b));
      add(q.rdiv(b, a));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool subset_associative(const FiniteLoop& q, const std::vector<int>& s) {
  for (int a : s)
    for (int b : s)
      for (int c : s)
        if (q.mul(q.mul(a, b), c) != q.mul(a, q.mul(b, c))) return false;
  return true;
}

}  // namespace

IdentityReport check_identity_suite(const FiniteLoop& q) {
  const int n = q.size();
  IdentityReport rep;

  rep.inverse_property = true;
  for (int x = 0; x < n && rep.inverse_property; ++x) {
    int xl = q.ldiv(x, 0);
    int xr = q.rdiv(0, x);
    if (xl != xr) {
      rep.inverse_property = false;
      break;
    }
    for (int y = 0; y < n; ++y)
      if (q.mul(xl, q.mul(x, y)) != y || q.mul(q.mul(y, x), xl) != y) {
        rep.inverse_property = false;
        break;
      }
  }

  rep.power_associative = true;
  for (int x = 0; x < n && rep.power_associative; ++x)
    if (!subset_associative(q, closure_elements(q, {x}))) rep.power_associative = false;

  rep.diassociative = true;
  for (int x = 0; x < n && rep.diassociative; ++x)
    for (int y = x; y < n && rep.diassociative; ++y)
      if (!subset_associative(q, closure_elements(q, {x, y}))) rep.diassociative = false;

  rep.flexible = true;
  for (int x = 0; x < n && rep.flexible; ++x)
    for (int y = 0; y < n; ++y)
      if (q.mul(x, q.mul(y, x)) != q.mul(q.mul(x, y), x)) {
        rep.flexible = false;
        break;
      }

  return rep;
}

bool is_associative(const FiniteLoop& q) { return !find_nonassociative_triple(q).has_value(); }

bool is_commutative(const FiniteLoop& q) {
  for (int x = 0; x < q.size(); ++x)
    for (int y = x + 1; y < q.size(); ++y)
      if (q.mul(x, y) != q.mul(y, x)) return false;
  return true;
}

bool is_power_associative(const FiniteLoop& q) {
  for (int x = 0; x < q.size(); ++x)
    if (!subset_associative(q, closure_elements(q, {x}))) return false;
  return true;
}

bool is_d_divisible(const FiniteLoop& q, int d) {
  if (!is_power_associative(q)) throw NotPowerAssociative();
  std::vector<char> hit(static_cast<std::size_t>(q.size()), 0);
  int count = 0;
  for (int x = 0; x < q.size(); ++x) {
    int y = q.power(x, d);
    if (!hit[static_cast<std::size_t>(y)]) {
      hit[static_cast<std::size_t>(y)] = 1;
      ++count;
    }
  }
  return count == q.size();
}

int commutator(const FiniteLoop& q, int x, int y) {
  return q.rdiv(q.rdiv(q.mul(x, y), x), y);
}

int associator(const FiniteLoop& q, int x, int y, int z) {
  return q.rdiv(q.rdiv(q.mul(q.mul(x, y), z), q.mul(y, z)), x);
}

int classical_commutator(const FiniteLoop& q, int x, int y) {
  return q.mul(q.mul(q.inv(x), q.inv(y)), q.mul(x, y));
}

std::optional<std::array<int, 3>> find_nonassociative_triple(const FiniteLoop& q) {
  for (int x = 0; x < q.size(); ++x)
    for (int y = 0; y < q.size(); ++y)
      for (int z = 0; z < q.size(); ++z)
        if (q.mul(q.mul(x, y), z) != q.mul(x, q.mul(y, z))) return std::array<int, 3>{x, y, z};
  return std::nullopt;
}

}  // namespace loopkit
