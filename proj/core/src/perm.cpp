#include "loopkit/perm.hpp"

#include <algorithm>

#include "loopkit/errors.hpp"

namespace loopkit {

Perm::Perm(std::initializer_list<int> img) {
  img_.reserve(img.size());
  for (int v : img) img_.push_back(static_cast<std::uint8_t>(v));
}

Perm Perm::identity(int degree) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

bool Perm::is_bijection() const {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm Perm::operator*(const Perm& rhs) const {
  std::vector<std::uint8_t> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[rhs.img_[i]];
  return Perm(std::move(out));
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[img_[i]] = static_cast<std::uint8_t>(i);
  return Perm(std::move(out));
}

Perm Perm::power(int k) const {
  Perm base = k < 0 ? inverse() : *this;
  if (k < 0) k = -k;
  Perm acc = Perm::identity(degree());
  for (int i = 0; i < k; ++i) acc = base * acc;
  return acc;
}

std::string Perm::str() const {
  std::string out = "[";
  for (int i = 0; i < degree(); ++i) {
    if (i) out += ' ';
    out += std::to_string(img_[static_cast<std::size_t>(i)]);
  }
  out += ']';
  return out;
}

int perm_order(const Perm& p) {
  Perm acc = p;
  int k = 1;
  while (!acc.is_identity()) {
    acc = acc * p;
    ++k;
  }
  return k;
}

Perm perm_commutator(const Perm& a, const Perm& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace loopkit
