#include "loopkit/subloop.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "loopkit/errors.hpp"

namespace loopkit {

namespace {

std::vector<Perm> standard_generator_perms(const FiniteLoop& q) {
  std::vector<Perm> gens;
  std::set<std::vector<std::uint8_t>> seen;
  auto add = [&](const Perm& p) {
    if (seen.insert(p.images()).second) gens.push_back(p);
  };
  for (int u = 0; u < q.size(); ++u) {
    add(inner_t(q, u));
    for (int v = 0; v < q.size(); ++v) {
      add(inner_l(q, u, v));
      add(inner_r(q, u, v));
    }
  }
  return gens;
}

}  // namespace

SubloopHandle SubloopHandle::from_elements(const FiniteLoop& q, std::vector<int> elems) {
  SubloopHandle s;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  s.elements = std::move(elems);
  s.mask.assign(static_cast<std::size_t>(q.size()), 0);
  for (int e : s.elements) s.mask[static_cast<std::size_t>(e)] = 1;
  return s;
}

SubloopHandle subloop_closure(const FiniteLoop& q, std::span<const int> seed) {
  std::vector<char> in(static_cast<std::size_t>(q.size()), 0);
  std::vector<int> members;
  std::deque<int> todo;
  auto add = [&](int x) {
    if (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = 1;
      members.push_back(x);
      todo.push_back(x);
    }
  };
  add(0);
  for (int s : seed) add(s);
  while (!todo.empty()) {
    int a = todo.front();
    todo.pop_front();
    for (std::size_t i = 0; i < members.size(); ++i) {
      int b = members[i];
      add(q.mul(a, b));
      add(q.mul(b, a));
      add(q.ldiv(a, b));
      add(q.ldiv(b, a));
      add(q.rdiv(a, b));
      add(q.rdiv(b, a));
    }
  }
  return SubloopHandle::from_elements(q, std::move(members));
}

bool is_subloop(const FiniteLoop& q, const SubloopHandle& s) {
  if (s.elements.empty() || !s.contains(0)) return false;
  for (int a : s.elements)
    for (int b : s.elements)
      if (!s.contains(q.mul(a, b)) || !s.contains(q.ldiv(a, b)) || !s.contains(q.rdiv(a, b)))
        return false;
  return true;
}

bool is_normal_subloop(const FiniteLoop& q, const SubloopHandle& s) {
  if (!is_subloop(q, s)) return false;
  for (int u = 0; u < q.size(); ++u) {
    Perm t = inner_t(q, u);
    for (int x : s.elements)
      if (!s.contains(t[x])) return false;
    for (int v = 0; v < q.size(); ++v) {
      Perm l = inner_l(q, u, v);
      Perm r = inner_r(q, u, v);
      for (int x : s.elements)
        if (!s.contains(l[x]) || !s.contains(r[x])) return false;
    }
  }
  return true;
}

SubloopHandle normal_subloop_closure(const FiniteLoop& q, std::span<const int> seed) {
  auto gens = standard_generator_perms(q);
  SubloopHandle cur = subloop_closure(q, seed);
  for (;;) {
    std::vector<int> fresh;
    for (const Perm& g : gens)
      for (int x : cur.elements)
        if (!cur.contains(g[x])) fresh.push_back(g[x]);
    if (fresh.empty()) return cur;
    fresh.insert(fresh.end(), cur.elements.begin(), cur.elements.end());
    cur = subloop_closure(q, fresh);
  }
}

std::vector<SubloopHandle> normal_subloops(const FiniteLoop& q) {
  std::set<std::vector<int>> found;
  std::deque<std::vector<int>> work;
  auto add = [&](const SubloopHandle& s) {
    if (found.insert(s.elements).second) work.push_back(s.elements);
  };
  for (int x = 0; x < q.size(); ++x) add(normal_subloop_closure(q, std::array<int, 1>{x}));
  while (!work.empty()) {
    std::vector<int> a = std::move(work.front());
    work.pop_front();
    for (const auto& b : std::set<std::vector<int>>(found)) {
      std::vector<int> join = a;
      join.insert(join.end(), b.begin(), b.end());
      add(normal_subloop_closure(q, join));
    }
  }
  std::vector<SubloopHandle> out;
  for (const auto& elems : found) out.push_back(SubloopHandle::from_elements(q, elems));
  std::sort(out.begin(), out.end(), [](const SubloopHandle& a, const SubloopHandle& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements < b.elements;
  });
  // every returned set must be invariant under all standard generators
  for (const auto& s : out)
    if (!is_normal_subloop(q, s)) throw Error("normal_subloops: closure produced a non-normal set");
  return out;
}

std::vector<SubloopHandle> all_subloops(const FiniteLoop& q) {
  if (q.size() > 24) throw Error("all_subloops: order " + std::to_string(q.size()) + " exceeds the n <= 24 cap");
  std::set<std::vector<int>> found;
  std::deque<std::vector<int>> work;
  auto add = [&](const SubloopHandle& s) {
    if (found.insert(s.elements).second) work.push_back(s.elements);
  };
  add(subloop_closure(q, {}));
  while (!work.empty()) {
    std::vector<int> base = std::move(work.front());
    work.pop_front();
    SubloopHandle h = SubloopHandle::from_elements(q, base);
    for (int x = 0; x < q.size(); ++x) {
      if (h.contains(x)) continue;
      std::vector<int> seed = base;
      seed.push_back(x);
      add(subloop_closure(q, seed));
    }
  }
  std::vector<SubloopHandle> out;
  for (const auto& elems : found) out.push_back(SubloopHandle::from_elements(q, elems));
  std::sort(out.begin(), out.end(), [](const SubloopHandle& a, const SubloopHandle& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements < b.elements;
  });
  return out;
}

Nuclei nuclei(const FiniteLoop& q) {
  const int n = q.size();
  std::vector<int> nuc, nucl, cen;
  for (int a = 0; a < n; ++a) {
    bool left = true, middle = true, right = true;
    for (int u = 0; u < n && (left || middle || right); ++u)
      for (int v = 0; v < n; ++v) {
        if (left && q.mul(a, q.mul(u, v)) != q.mul(q.mul(a, u), v)) left = false;
        if (middle && q.mul(u, q.mul(a, v)) != q.mul(q.mul(u, a), v)) middle = false;
        if (right && q.mul(u, q.mul(v, a)) != q.mul(q.mul(u, v), a)) right = false;
        if (!left && !middle && !right) break;
      }
    if (left) nucl.push_back(a);
    if (left && middle && right) {
      nuc.push_back(a);
      bool commutes = true;
      for (int x = 0; x < n; ++x)
        if (q.mul(a, x) != q.mul(x, a)) {
          commutes = false;
          break;
        }
      if (commutes) cen.push_back(a);
    }
  }
  Nuclei out{SubloopHandle::from_elements(q, nuc), SubloopHandle::from_elements(q, nucl),
             SubloopHandle::from_elements(q, cen)};
  if (is_moufang(q).holds && out.nucleus.elements != out.left_nucleus.elements)
    throw Error("nuclei: Nuc != Nuc_l on a Moufang loop");
  return out;
}

QuotientLoop quotient(const FiniteLoop& q, const SubloopHandle& x) {
  if (!is_normal_subloop(q, x)) throw NotNormal();
  const int n = q.size();
  std::vector<int> coset_rep(static_cast<std::size_t>(n), -1);  // least element of the coset
  std::vector<std::vector<int>> cosets;
  for (int v = 0; v < n; ++v) {
    if (coset_rep[static_cast<std::size_t>(v)] >= 0) continue;
    std::vector<int> cs;
    for (int s : x.elements) cs.push_back(q.mul(v, s));
    std::sort(cs.begin(), cs.end());
    for (int y : cs) coset_rep[static_cast<std::size_t>(y)] = cs.front();
    cosets.push_back(std::move(cs));
  }
  // label cosets by least element order
  std::sort(cosets.begin(), cosets.end());
  const int m = static_cast<int>(cosets.size());
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  for (int c = 0; c < m; ++c)
    for (int y : cosets[static_cast<std::size_t>(c)]) label[static_cast<std::size_t>(y)] = c;
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ca = label[static_cast<std::size_t>(a)], cb = label[static_cast<std::size_t>(b)];
      int cab = label[static_cast<std::size_t>(q.mul(a, b))];
      int& cell = table[static_cast<std::size_t>(ca)][static_cast<std::size_t>(cb)];
      if (cell < 0)
        cell = cab;
      else if (cell != cab)
        throw Error("quotient: coset product not well defined");
    }
  QuotientLoop out{FiniteLoop::from_table(table), std::move(label)};
  return out;
}

SubLoopView restrict_to(const FiniteLoop& q, const SubloopHandle& s) {
  if (!is_subloop(q, s)) throw NotASubloop();
  const int m = s.size();
  std::vector<int> back(static_cast<std::size_t>(q.size()), -1);
  for (int i = 0; i < m; ++i) back[static_cast<std::size_t>(s.elements[static_cast<std::size_t>(i)])] = i;
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          back[static_cast<std::size_t>(q.mul(s.elements[static_cast<std::size_t>(i)],
                                              s.elements[static_cast<std::size_t>(j)]))];
  return SubLoopView{FiniteLoop::from_table(table), s.elements};
}

}  // namespace loopkit
