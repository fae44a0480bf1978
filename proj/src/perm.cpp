#include "braidinv/perm.hpp"

#include <algorithm>

#include "braidinv/errors.hpp"

namespace braidinv {

Permutation::Permutation(std::vector<std::int32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::int32_t v : images_) {
    if (v < 1 || v > static_cast<std::int32_t>(images_.size()) || seen[v - 1])
      throw Error("permutation images must be a bijection of 1..n");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<std::int32_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  if (a < 1 || b < 1 || a > n || b > n) throw Error("transposition points out of range");
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree()) throw Error("permutation degree mismatch");
  std::vector<std::int32_t> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[i] = other.images_[images_[i] - 1];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<std::int32_t> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    img[images_[i] - 1] = static_cast<std::int32_t>(i) + 1;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<std::int32_t>(i) + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == static_cast<std::int32_t>(i) + 1) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += ",";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(images_[j] - 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::size_t Permutation::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::int32_t v : images_) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace braidinv
