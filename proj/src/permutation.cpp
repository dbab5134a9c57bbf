#include "genus_atlas/permutation.hpp"

#include <numeric>
#include <stdexcept>

#include "genus_atlas/errors.hpp"

namespace atlas {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0)
    throw ParseError("permutation degree must be positive");
  Permutation result(degree);
  if (text == "()")
    return result;
  std::size_t pos = 0;
  if (text.empty())
    throw ParseError("empty permutation");
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' in permutation \"" + std::string(text) + "\"");
    ++pos;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      std::size_t start = pos;
      std::uint64_t value = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > degree)
          throw ParseError("point out of range in \"" + std::string(text) + "\"");
        ++pos;
      }
      if (pos == start)
        throw ParseError("expected a point in permutation \"" + std::string(text) + "\"");
      if (value == 0)
        throw ParseError("point out of range in \"" + std::string(text) + "\"");
      auto point = static_cast<std::uint32_t>(value - 1);
      for (std::uint32_t c : cycle)
        if (c == point)
          throw ParseError("not a bijection: repeated point in \"" + std::string(text) + "\"");
      cycle.push_back(point);
      if (pos >= text.size())
        throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError("unexpected character in permutation \"" + std::string(text) + "\"");
    }
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    result = compose(result, Permutation(std::move(images)));
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i)
        out += ',';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch (" + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()) + ")");
  std::vector<std::uint32_t> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = q[p[i]];
  return Permutation(std::move(images));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(compose(a.inverse(), b.inverse()), a), b);
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace atlas
