#include "loopkit/extension.hpp"

#include <algorithm>

#include "loopkit/errors.hpp"

namespace loopkit {

bool is_automorphism(const FiniteLoop& q, const Perm& p) {
  if (p.degree() != q.size() || !p.is_bijection() || p[0] != 0) return false;
  for (int x = 0; x < q.size(); ++x)
    for (int y = 0; y < q.size(); ++y)
      if (p[q.mul(x, y)] != q.mul(p[x], p[y])) return false;
  return true;
}

namespace {

void extend_aut(const FiniteLoop& q, std::vector<int>& map, std::vector<char>& used, int next,
                std::vector<Perm>& out) {
  const int n = q.size();
  if (next == n) {
    std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(map[static_cast<std::size_t>(i)]);
    out.emplace_back(std::move(img));
    return;
  }
  if (map[static_cast<std::size_t>(next)] >= 0) {
    extend_aut(q, map, used, next + 1, out);
    return;
  }
  for (int img = 0; img < n; ++img) {
    if (used[static_cast<std::size_t>(img)]) continue;
    map[static_cast<std::size_t>(next)] = img;
    used[static_cast<std::size_t>(img)] = 1;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (map[static_cast<std::size_t>(x)] < 0) continue;
      int xy = q.mul(x, next), yx = q.mul(next, x);
      int ixy = q.mul(map[static_cast<std::size_t>(x)], img);
      int iyx = q.mul(img, map[static_cast<std::size_t>(x)]);
      if (map[static_cast<std::size_t>(xy)] >= 0 && map[static_cast<std::size_t>(xy)] != ixy) ok = false;
      if (ok && map[static_cast<std::size_t>(yx)] >= 0 && map[static_cast<std::size_t>(yx)] != iyx) ok = false;
    }
    if (ok) extend_aut(q, map, used, next + 1, out);
    map[static_cast<std::size_t>(next)] = -1;
    used[static_cast<std::size_t>(img)] = 0;
  }
}

}  // namespace

std::vector<Perm> automorphism_group(const FiniteLoop& q) {
  if (q.size() > 16) throw Error("automorphism_group: order exceeds the n <= 16 cap");
  std::vector<int> map(static_cast<std::size_t>(q.size()), -1);
  std::vector<char> used(static_cast<std::size_t>(q.size()), 0);
  map[0] = 0;
  used[0] = 1;
  std::vector<Perm> out;
  extend_aut(q, map, used, 1, out);
  return out;
}

void validate_extension_data(const ExtensionData& data) {
  const int nf = data.factor.size(), nx = data.base.size();
  if (!is_associative(data.base) || !is_commutative(data.base))
    throw Error("extension data: base must be a commutative group");
  auto shape_ok = [&](const auto& grid) {
    if (static_cast<int>(grid.size()) != nf) return false;
    for (const auto& row : grid)
      if (static_cast<int>(row.size()) != nf) return false;
    return true;
  };
  if (!shape_ok(data.phi) || !shape_ok(data.psi) || !shape_ok(data.theta))
    throw Error("extension data: tables must be |F| x |F|");
  for (int r = 0; r < nf; ++r)
    for (int s = 0; s < nf; ++s) {
      const Perm& ph = data.phi[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
      const Perm& ps = data.psi[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
      if (!is_automorphism(data.base, ph) || !is_automorphism(data.base, ps))
        throw Error("extension data: phi/psi entry at (" + std::to_string(r) + "," + std::to_string(s) +
                    ") is not an automorphism of the base");
      int th = data.theta[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
      if (th < 0 || th >= nx) throw Error("extension data: theta entry out of range");
    }
  for (int s = 0; s < nf; ++s) {
    if (!data.psi[0][static_cast<std::size_t>(s)].is_identity())
      throw Error("extension data: psi[1][s] must be the identity");
    if (data.theta[0][static_cast<std::size_t>(s)] != 0)
      throw Error("extension data: theta[1][s] must be 1");
  }
  for (int r = 0; r < nf; ++r) {
    if (!data.phi[static_cast<std::size_t>(r)][0].is_identity())
      throw Error("extension data: phi[r][1] must be the identity");
    if (data.theta[static_cast<std::size_t>(r)][0] != 0)
      throw Error("extension data: theta[r][1] must be 1");
  }
}

FiniteLoop build_abelian_extension(const ExtensionData& data) {
  validate_extension_data(data);
  const int nf = data.factor.size(), nx = data.base.size();
  const int n = nf * nx;
  if (n > 255) throw NotALoop("order exceeds 255");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int r = 0; r < nf; ++r)
    for (int x = 0; x < nx; ++x)
      for (int s = 0; s < nf; ++s)
        for (int y = 0; y < nx; ++y) {
          const Perm& ph = data.phi[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
          const Perm& ps = data.psi[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
          int th = data.theta[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
          int z = data.base.mul(data.base.mul(ph[x], ps[y]), th);
          t[static_cast<std::size_t>(r * nx + x)][static_cast<std::size_t>(s * nx + y)] =
              data.factor.mul(r, s) * nx + z;
        }
  try {
    return FiniteLoop::from_table(t);
  } catch (const NotLatinSquare& e) {
    throw NotALoop("row/column repeat at cell (" + std::to_string(e.row) + "," + std::to_string(e.col) + ")");
  } catch (const NoIdentity&) {
    throw NotALoop("no identity");
  }
}

ExtensionData random_extension_data(const FiniteLoop& x, const FiniteLoop& f, std::mt19937_64& rng) {
  auto auts = automorphism_group(x);
  const int nf = f.size();
  ExtensionData data;
  data.base = x;
  data.factor = f;
  Perm id = Perm::identity(x.size());
  data.phi.assign(static_cast<std::size_t>(nf), std::vector<Perm>(static_cast<std::size_t>(nf), id));
  data.psi.assign(static_cast<std::size_t>(nf), std::vector<Perm>(static_cast<std::size_t>(nf), id));
  data.theta.assign(static_cast<std::size_t>(nf), std::vector<int>(static_cast<std::size_t>(nf), 0));
  std::uniform_int_distribution<std::size_t> pick_aut(0, auts.size() - 1);
  std::uniform_int_distribution<int> pick_elem(0, x.size() - 1);
  for (int r = 1; r < nf; ++r)
    for (int s = 1; s < nf; ++s) {
      data.phi[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = auts[pick_aut(rng)];
      data.psi[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = auts[pick_aut(rng)];
      data.theta[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = pick_elem(rng);
    }
  data.transversal.resize(static_cast<std::size_t>(nf));
  for (int r = 0; r < nf; ++r) data.transversal[static_cast<std::size_t>(r)] = r * x.size();
  return data;
}

}  // namespace loopkit
