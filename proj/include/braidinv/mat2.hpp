#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

namespace braidinv {

// 2x2 matrix over Z/mZ with determinant 1, entries normalized into 0..m-1.
// Row-major: [[a, b], [c, d]].
class Mat2Mod {
public:
  Mat2Mod(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::uint32_t modulus);

  static Mat2Mod identity(std::uint32_t modulus);

  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t a() const { return e_[0]; }
  std::uint32_t b() const { return e_[1]; }
  std::uint32_t c() const { return e_[2]; }
  std::uint32_t d() const { return e_[3]; }
  const std::array<std::uint32_t, 4>& entries() const { return e_; }

  Mat2Mod operator*(const Mat2Mod& other) const;
  Mat2Mod inverse() const; // adjugate; valid since det = 1
  bool is_identity() const;

  bool operator==(const Mat2Mod& other) const = default;
  bool operator<(const Mat2Mod& other) const;

  // "[[a, b], [c, d]] mod m"
  std::string to_string() const;

  std::size_t hash() const;

private:
  std::array<std::uint32_t, 4> e_;
  std::uint32_t modulus_;
};

} // namespace braidinv
