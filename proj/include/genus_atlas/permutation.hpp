#ifndef GENUS_ATLAS_PERMUTATION_HPP_
#define GENUS_ATLAS_PERMUTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace atlas {

// A permutation of the points 1..degree. Points are stored 0-based; the
// public text form (cycle notation) is 1-based.
//
// Products act left to right: compose(p, q) applies p first, then q,
// so compose(p, q)(i) = q(p(i)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  // `images[i]` is the 0-based image of point i. Throws std::invalid_argument
  // unless the images form a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  // Parses disjoint or non-disjoint cycle notation, e.g. "(1,2)(3,4,5)" or "()".
  // Cycles are multiplied left to right. Throws ParseError.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t point) const { return images_[point]; }
  std::span<const std::uint32_t> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  // Least k >= 1 with p^k = id (lcm of the cycle lengths).
  std::uint64_t order() const;

  // Canonical cycle notation: disjoint cycles, each starting at its smallest
  // point, ordered by that point; the identity is "()".
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<std::uint32_t> images_;
};

// Left-to-right product. Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

// a^-1 b^-1 a b in the left-to-right convention.
Permutation commutator(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

} // namespace atlas

#endif // GENUS_ATLAS_PERMUTATION_HPP_
