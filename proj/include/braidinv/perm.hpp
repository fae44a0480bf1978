#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace braidinv {

// Permutation of {1..n}, stored as the image of each point.
//
// Products compose left to right: (p * q)(i) = q(p(i)), the same convention
// as braid words and the Artin action.
class Permutation {
public:
  explicit Permutation(std::vector<std::int32_t> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  std::int32_t operator()(int point) const { return images_[point - 1]; }
  const std::vector<std::int32_t>& images() const { return images_; }

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation& other) const = default;
  bool operator<(const Permutation& other) const { return images_ < other.images_; }

  // Cycle notation, e.g. "(1,2)(3,4,5)"; "()" for the identity.
  std::string to_string() const;

  std::size_t hash() const;

private:
  std::vector<std::int32_t> images_;
};

} // namespace braidinv
