#pragma once

#include <array>
#include <optional>
#include <vector>

#include "loopkit/perm.hpp"

namespace loopkit {

/// A finite loop as a validated Cayley table with derived division tables.
/// Element 0 is always the two-sided identity; tables whose identity sits
/// elsewhere are renumbered on ingestion.
class FiniteLoop {
 public:
  FiniteLoop() = default;  // empty; assign from from_table before use

  /// Validates and normalizes a raw table. Throws NotLatinSquare (with the
  /// witness cell) or NoIdentity.
  static FiniteLoop from_table(const std::vector<std::vector<int>>& table);

  int size() const { return n_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a * n_ + b)]; }
  /// a \ b: the x with a*x = b.
  int ldiv(int a, int b) const { return ld_[static_cast<std::size_t>(a * n_ + b)]; }
  /// a / b: the x with x*b = a.
  int rdiv(int a, int b) const { return rd_[static_cast<std::size_t>(a * n_ + b)]; }
  /// Left inverse a \ 1 (two-sided in inverse property loops).
  int inv(int a) const { return ldiv(a, 0); }
  int power(int a, int k) const;

  Perm left_translation(int x) const;
  Perm right_translation(int x) const;
  /// M_x = L_x R_x.
  Perm middle_translation(int x) const;

  std::vector<std::vector<int>> rows() const;

 private:
  int n_ = 0;
  std::vector<int> mul_, ld_, rd_;
};

/// Standard generators of Inn(Q): T_u = R_u^-1 L_u, L_{u,v} = L_{uv}^-1 L_u L_v,
/// R_{u,v} = R_{uv}^-1 R_v R_u.
Perm inner_t(const FiniteLoop& q, int u);
Perm inner_l(const FiniteLoop& q, int u, int v);
Perm inner_r(const FiniteLoop& q, int u, int v);

struct MoufangCheck {
  bool holds = false;
  std::array<int, 3> witness{};  // violating (x, y, z) when !holds
};

/// First Moufang identity x(y*xz) = (xy*x)z over all triples.
MoufangCheck is_moufang(const FiniteLoop& q);

/// One of the four equivalent (M) identities, index 0..3.
bool moufang_identity_holds(const FiniteLoop& q, int which);

struct IdentityReport {
  bool inverse_property = false;
  bool power_associative = false;
  bool diassociative = false;
  bool flexible = false;
};

IdentityReport check_identity_suite(const FiniteLoop& q);

bool is_associative(const FiniteLoop& q);
bool is_commutative(const FiniteLoop& q);
bool is_power_associative(const FiniteLoop& q);

/// x -> x^d surjective. Throws NotPowerAssociative.
bool is_d_divisible(const FiniteLoop& q, int d);

/// [x,y] = ((xy)/x)/y; identity iff xy = yx.
int commutator(const FiniteLoop& q, int x, int y);
/// [x,y,z] = ((xy*z)/(yz))/x; identity iff xy*z = x*yz.
int associator(const FiniteLoop& q, int x, int y, int z);
/// Classical x^-1 y^-1 * xy (unambiguous inside the diassociative hull).
int classical_commutator(const FiniteLoop& q, int x, int y);

std::optional<std::array<int, 3>> find_nonassociative_triple(const FiniteLoop& q);

}  // namespace loopkit
