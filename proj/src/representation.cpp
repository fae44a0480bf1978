#include "braidinv/representation.hpp"

#include "braidinv/errors.hpp"

namespace braidinv {

Representation::Representation(int strands, std::vector<GroupElement> images)
    : strands_(strands), images_(std::move(images)) {
  if (strands_ < 2) throw Error("representation needs at least 2 strands");
  if (static_cast<int>(images_.size()) != strands_ - 1)
    throw Error("representation of B_" + std::to_string(strands_) + " needs " +
                std::to_string(strands_ - 1) + " generator images, got " +
                std::to_string(images_.size()));
  for (const GroupElement& g : images_)
    if (!g.same_ambient(images_.front()))
      throw Error("representation images have mixed ambients");

  const int k = static_cast<int>(images_.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (j == i + 1) {
        if (images_[i] * images_[j] * images_[i] != images_[j] * images_[i] * images_[j])
          throw Error("braid relation s" + std::to_string(i + 1) + " s" + std::to_string(j + 1) +
                      " s" + std::to_string(i + 1) + " = s" + std::to_string(j + 1) + " s" +
                      std::to_string(i + 1) + " s" + std::to_string(j + 1) +
                      " violated by the images");
      } else {
        if (images_[i] * images_[j] != images_[j] * images_[i])
          throw Error("commutation relation [s" + std::to_string(i + 1) + ", s" +
                      std::to_string(j + 1) + "] = 1 violated by the images");
      }
    }
}

Representation sl2_mod_rep(std::uint32_t m) {
  std::vector<GroupElement> images{Mat2Mod(1, 0, static_cast<std::int64_t>(m) - 1, 1, m),
                                   Mat2Mod(1, 1, 0, 1, m)};
  return Representation(3, std::move(images));
}

Representation sym_rep(int d) {
  if (d < 2) throw Error("sym_rep needs degree >= 2");
  std::vector<GroupElement> images;
  images.reserve(d - 1);
  for (int i = 1; i < d; ++i) images.push_back(Permutation::transposition(d, i, i + 1));
  return Representation(d, std::move(images));
}

GroupElement apply_rep(const Representation& rep, const BraidWord& b) {
  if (b.strands() != rep.strands())
    throw Error("apply_rep: braid strands " + std::to_string(b.strands()) +
                " != representation strands " + std::to_string(rep.strands()));
  GroupElement out = rep.identity();
  for (Letter l : b.letters()) {
    const GroupElement& img = rep.images()[static_cast<std::size_t>(std::abs(l)) - 1];
    out = l > 0 ? out * img : out * img.inverse();
  }
  return out;
}

} // namespace braidinv
