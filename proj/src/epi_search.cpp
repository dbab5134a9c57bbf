#include "genus_atlas/epi_search.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace atlas {

namespace {

// Image tuple layout during the search: slots [0, 2 g0) hold a_1, b_1, ...;
// slots [2 g0, 2 g0 + r) hold the elliptic images for the periods sorted in
// descending order. The last elliptic slot, when present, is forced.
class Backtracker {
public:
  Backtracker(const Signature& sig, const FiniteGroup& g, std::size_t limit)
      : g_(g), limit_(limit) {
    hyperbolic_ = 2 * static_cast<std::size_t>(sig.orbit_genus);
    descending_ = sig.periods;
    std::sort(descending_.begin(), descending_.end(), std::greater<>());
    images_.assign(hyperbolic_ + descending_.size(), g.identity());
  }

  std::vector<Witness> run() {
    const std::size_t r = descending_.size();
    for (int m : descending_)
      if (g_.elements_of_order(static_cast<std::uint64_t>(m)).empty())
        return {};

    // Selection order: first elliptic, hyperbolic pairs, remaining free elliptics.
    if (r >= 2)
      free_slots_.push_back(hyperbolic_);
    for (std::size_t i = 0; i < hyperbolic_; ++i)
      free_slots_.push_back(i);
    for (std::size_t i = 1; i + 1 < r; ++i)
      free_slots_.push_back(hyperbolic_ + i);

    for (std::size_t depth = 0; depth < free_slots_.size(); ++depth)
      candidates_.push_back(candidates_for(free_slots_[depth], depth == 0));

    dfs(0);
    return std::move(found_);
  }

private:
  std::vector<Element> candidates_for(std::size_t slot, bool first) const {
    const bool elliptic = slot >= hyperbolic_;
    const auto period = elliptic ? static_cast<std::uint64_t>(descending_[slot - hyperbolic_]) : 0;
    std::vector<Element> out;
    if (first) {
      // Simultaneous conjugation preserves orders, the relation and
      // generation, so one representative per class suffices.
      for (const auto& cls : g_.classes())
        if (!elliptic || cls.element_order == period)
          out.push_back(cls.representative);
      return out;
    }
    if (elliptic) {
      auto xs = g_.elements_of_order(period);
      return {xs.begin(), xs.end()};
    }
    out.resize(g_.order());
    for (Element x = 0; x < g_.order(); ++x)
      out[x] = x;
    return out;
  }

  bool dfs(std::size_t depth) {
    if (depth == free_slots_.size())
      return leaf();
    const std::size_t slot = free_slots_[depth];
    for (Element x : candidates_[depth]) {
      images_[slot] = x;
      if (dfs(depth + 1))
        return true;
    }
    return false;
  }

  // Returns true once the requested number of witnesses has been collected.
  bool leaf() {
    const std::size_t r = descending_.size();
    Element product = g_.identity();
    for (std::size_t j = 0; j < hyperbolic_; j += 2)
      product = g_.multiply(product, g_.commutator(images_[j], images_[j + 1]));
    const std::size_t chosen = r == 0 ? 0 : r - 1;
    for (std::size_t i = 0; i < chosen; ++i)
      product = g_.multiply(product, images_[hyperbolic_ + i]);
    if (r == 0) {
      if (product != g_.identity())
        return false;
    } else {
      Element forced = g_.inverse(product);
      if (g_.element_order(forced) != static_cast<std::uint64_t>(descending_.back()))
        return false;
      images_.back() = forced;
    }
    if (!g_.generates(images_))
      return false;
    found_.push_back(to_canonical());
    return found_.size() >= limit_;
  }

  // Rewrites [a_1,b_1]...[a_h,b_h] e_1...e_r = 1 (periods descending) as
  // [b_h,a_h]...[b_1,a_1] e_r^-1 ... e_1^-1 = 1, whose periods ascend.
  Witness to_canonical() const {
    Witness w;
    for (std::size_t j = hyperbolic_; j >= 2; j -= 2) {
      w.hyperbolic.push_back(g_.element(images_[j - 1]));
      w.hyperbolic.push_back(g_.element(images_[j - 2]));
    }
    for (std::size_t i = images_.size(); i > hyperbolic_; --i)
      w.elliptic.push_back(g_.element(g_.inverse(images_[i - 1])));
    return w;
  }

  const FiniteGroup& g_;
  std::size_t limit_;
  std::size_t hyperbolic_ = 0;
  std::vector<int> descending_;
  std::vector<Element> images_;
  std::vector<std::size_t> free_slots_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Witness> found_;
};

} // namespace

std::optional<Witness> find_surface_kernel_epi(const Signature& sig, const FiniteGroup& g) {
  auto found = Backtracker(sig, g, 1).run();
  if (found.empty())
    return std::nullopt;
  return std::move(found.front());
}

std::vector<Witness> find_all_surface_kernel_epis(const Signature& sig, const FiniteGroup& g,
                                                  std::size_t limit) {
  if (limit == 0)
    return {};
  return Backtracker(sig, g, limit).run();
}

bool validate_witness(const Signature& sig, const FiniteGroup& g, const Witness& w) {
  if (w.hyperbolic.size() != 2 * static_cast<std::size_t>(sig.orbit_genus) ||
      w.elliptic.size() != sig.r())
    return false;
  std::vector<Element> ids;
  for (const auto& p : w.all_images()) {
    if (p.degree() != g.degree())
      return false;
    auto id = g.find(p);
    if (!id)
      return false;
    ids.push_back(*id);
  }
  const std::size_t h = w.hyperbolic.size();
  for (std::size_t i = 0; i < sig.r(); ++i)
    if (g.element_order(ids[h + i]) != static_cast<std::uint64_t>(sig.periods[i]))
      return false;
  Element product = g.identity();
  for (std::size_t j = 0; j < h; j += 2)
    product = g.multiply(product, g.commutator(ids[j], ids[j + 1]));
  for (std::size_t i = h; i < ids.size(); ++i)
    product = g.multiply(product, ids[i]);
  if (product != g.identity())
    return false;
  return g.generates(ids);
}

bool brute_force_epi_exists(const Signature& sig, const FiniteGroup& g) {
  const std::size_t n = g.order();
  const std::size_t h = 2 * static_cast<std::size_t>(sig.orbit_genus);
  const std::size_t k = h + sig.r();
  if (n > 24)
    throw std::invalid_argument("brute_force_epi_exists: group order above 24");
  double tuples = 1;
  for (std::size_t i = 0; i < k; ++i)
    tuples *= static_cast<double>(n);
  if (tuples > static_cast<double>(1u << 26))
    throw std::invalid_argument("brute_force_epi_exists: more than 2^26 image tuples");

  auto generates_all = [&](const std::vector<Element>& gens) {
    std::vector<bool> in(n, false);
    std::vector<Element> members{g.identity()};
    in[g.identity()] = true;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Element s : gens) {
        Element y = g.multiply(members[i], s);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    return members.size() == n;
  };

  std::vector<Element> tuple(k, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < sig.r() && ok; ++i)
      ok = g.element_order(tuple[h + i]) == static_cast<std::uint64_t>(sig.periods[i]);
    if (ok) {
      Element product = g.identity();
      for (std::size_t j = 0; j < h; j += 2) {
        Element a = tuple[j], b = tuple[j + 1];
        product = g.multiply(product, g.multiply(g.multiply(g.inverse(a), g.inverse(b)),
                                                 g.multiply(a, b)));
      }
      for (std::size_t i = h; i < k; ++i)
        product = g.multiply(product, tuple[i]);
      if (product == g.identity() && generates_all(tuple))
        return true;
    }
    std::size_t pos = 0;
    while (pos < k && ++tuple[pos] == n)
      tuple[pos++] = 0;
    if (pos == k)
      return false;
  }
}

} // namespace atlas
