#include "braidinv/mat2.hpp"

#include <tuple>

#include "braidinv/errors.hpp"

namespace braidinv {

namespace {

std::uint32_t norm(std::int64_t v, std::uint32_t m) {
  std::int64_t r = v % static_cast<std::int64_t>(m);
  if (r < 0) r += m;
  return static_cast<std::uint32_t>(r);
}

} // namespace

Mat2Mod::Mat2Mod(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                 std::uint32_t modulus)
    : modulus_(modulus) {
  if (modulus < 2) throw Error("matrix modulus must be >= 2");
  e_ = {norm(a, modulus), norm(b, modulus), norm(c, modulus), norm(d, modulus)};
  const std::uint64_t det =
      (static_cast<std::uint64_t>(e_[0]) * e_[3] % modulus + modulus -
       static_cast<std::uint64_t>(e_[1]) * e_[2] % modulus) %
      modulus;
  if (det != 1 % modulus)
    throw Error("matrix determinant must be 1 mod " + std::to_string(modulus));
}

Mat2Mod Mat2Mod::identity(std::uint32_t modulus) { return Mat2Mod(1, 0, 0, 1, modulus); }

Mat2Mod Mat2Mod::operator*(const Mat2Mod& o) const {
  if (modulus_ != o.modulus_) throw Error("matrix modulus mismatch");
  const std::uint64_t m = modulus_;
  const std::uint64_t a = e_[0], b = e_[1], c = e_[2], d = e_[3];
  const std::uint64_t e = o.e_[0], f = o.e_[1], g = o.e_[2], h = o.e_[3];
  Mat2Mod out = *this;
  out.e_ = {static_cast<std::uint32_t>((a * e + b * g) % m),
            static_cast<std::uint32_t>((a * f + b * h) % m),
            static_cast<std::uint32_t>((c * e + d * g) % m),
            static_cast<std::uint32_t>((c * f + d * h) % m)};
  return out;
}

Mat2Mod Mat2Mod::inverse() const {
  const std::int64_t m = modulus_;
  return Mat2Mod(e_[3], m - e_[1], m - e_[2], e_[0], modulus_);
}

bool Mat2Mod::is_identity() const {
  return e_[0] == 1 % modulus_ && e_[1] == 0 && e_[2] == 0 && e_[3] == 1 % modulus_;
}

bool Mat2Mod::operator<(const Mat2Mod& o) const {
  return std::tie(modulus_, e_) < std::tie(o.modulus_, o.e_);
}

std::string Mat2Mod::to_string() const {
  return "[[" + std::to_string(e_[0]) + ", " + std::to_string(e_[1]) + "], [" +
         std::to_string(e_[2]) + ", " + std::to_string(e_[3]) + "]] mod " +
         std::to_string(modulus_);
}

std::size_t Mat2Mod::hash() const {
  std::size_t h = 1469598103934665603ull ^ modulus_;
  for (std::uint32_t v : e_) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace braidinv
