#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace loopkit {

/// A permutation of {0..m-1} stored as its image sequence: img[i] is the
/// image of point i. Composition applies the right factor first, project-wide:
/// (a*b)(x) = a(b(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint8_t> img) : img_(std::move(img)) {}
  Perm(std::initializer_list<int> img);

  static Perm identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint8_t>& images() const { return img_; }

  bool is_identity() const;
  bool is_bijection() const;

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm power(int k) const;

  bool operator==(const Perm&) const = default;

  std::string str() const;

 private:
  std::vector<std::uint8_t> img_;
};

int perm_order(const Perm& p);

/// [a,b] = a^-1 b^-1 a b (fixed project-wide; validated against the
/// pseudoautomorphism identities by the test suite).
Perm perm_commutator(const Perm& a, const Perm& b);

}  // namespace loopkit

template <>
struct std::hash<loopkit::Perm> {
  std::size_t operator()(const loopkit::Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto b : p.images()) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};
