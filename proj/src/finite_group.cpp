#include "genus_atlas/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "genus_atlas/errors.hpp"

namespace atlas {

std::uint64_t AbelianInvariants::torsion_order() const {
  std::uint64_t n = 1;
  for (auto d : factors)
    n *= d;
  return n;
}

FiniteGroup Subgroup::as_group(const FiniteGroup& parent) const {
  std::vector<Permutation> gens;
  for (Element x : generators_)
    gens.push_back(parent.element(x));
  if (gens.empty())
    gens.push_back(Permutation::identity(parent.degree()));
  return FiniteGroup(std::move(gens));
}

FiniteGroup::FiniteGroup(std::vector<Permutation> generators, std::size_t cap)
    : generators_(std::move(generators)) {
  if (generators_.empty())
    throw std::invalid_argument("generate: empty generator list");
  degree_ = generators_.front().degree();
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generate: generators have different degrees");

  elements_.push_back(Permutation::identity(degree_));
  index_.emplace(elements_.front(), 0);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (const auto& g : generators_) {
      Permutation y = compose(elements_[i], g);
      if (index_.contains(y))
        continue;
      if (elements_.size() >= cap)
        throw CapExceeded("group closure exceeds the element cap of " + std::to_string(cap));
      index_.emplace(y, static_cast<Element>(elements_.size()));
      elements_.push_back(std::move(y));
    }
  }
  for (const auto& g : generators_)
    generator_ids_.push_back(index_.at(g));

  const std::size_t n = elements_.size();
  if (n <= kTableLimit) {
    table_.resize(n * n);
    std::vector<std::uint32_t> buf(degree_);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const auto& pa = elements_[a];
        const auto& pb = elements_[b];
        for (std::size_t i = 0; i < degree_; ++i)
          buf[i] = pb[pa[i]];
        table_[a * n + b] = index_.at(Permutation(buf));
      }
    }
  }

  inverses_.resize(n);
  orders_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    inverses_[x] = index_.at(elements_[x].inverse());
    orders_[x] = elements_[x].order();
    order_index_[orders_[x]].push_back(static_cast<Element>(x));
  }
  build_classes();
}

Element FiniteGroup::multiply_slow(Element a, Element b) const {
  return index_.at(compose(elements_[a], elements_[b]));
}

std::optional<Element> FiniteGroup::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

Element FiniteGroup::power(Element x, std::uint64_t k) const {
  Element result = identity();
  Element base = x;
  while (k > 0) {
    if (k & 1)
      result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

std::span<const Element> FiniteGroup::elements_of_order(std::uint64_t m) const {
  auto it = order_index_.find(m);
  if (it == order_index_.end())
    return {};
  return it->second;
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (const auto& [m, xs] : order_index_)
    e = std::lcm(e, m);
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < generator_ids_.size(); ++i)
    for (std::size_t j = i + 1; j < generator_ids_.size(); ++j)
      if (multiply(generator_ids_[i], generator_ids_[j]) !=
          multiply(generator_ids_[j], generator_ids_[i]))
        return false;
  return true;
}

void FiniteGroup::build_classes() {
  const std::size_t n = order();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  class_of_.assign(n, kUnassigned);
  for (std::size_t x = 0; x < n; ++x) {
    if (class_of_[x] != kUnassigned)
      continue;
    const std::size_t id = classes_.size();
    ConjugacyClass cls{static_cast<Element>(x), {static_cast<Element>(x)}, orders_[x]};
    class_of_[x] = id;
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      for (Element g : generator_ids_) {
        Element y = conjugate(cls.members[i], g);
        if (class_of_[y] == kUnassigned) {
          class_of_[y] = id;
          cls.members.push_back(y);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes_.push_back(std::move(cls));
  }
}

Subgroup FiniteGroup::generated_subgroup(std::span<const Element> gens) const {
  Subgroup h;
  h.mask_.assign(order(), 0);
  h.members_.push_back(identity());
  h.mask_[identity()] = 1;
  for (Element g : gens)
    if (g != identity())
      h.generators_.push_back(g);
  for (std::size_t i = 0; i < h.members_.size(); ++i) {
    for (Element g : h.generators_) {
      Element y = multiply(h.members_[i], g);
      if (!h.mask_[y]) {
        h.mask_[y] = 1;
        h.members_.push_back(y);
      }
    }
  }
  std::sort(h.members_.begin(), h.members_.end());
  return h;
}

std::size_t FiniteGroup::generated_order(std::span<const Element> gens) const {
  thread_local std::vector<std::uint32_t> stamp;
  thread_local std::uint32_t epoch = 0;
  thread_local std::vector<Element> queue;
  if (stamp.size() < order()) {
    stamp.assign(order(), 0);
    epoch = 0;
  }
  if (++epoch == 0) {
    std::fill(stamp.begin(), stamp.end(), 0);
    epoch = 1;
  }
  queue.clear();
  queue.push_back(identity());
  stamp[identity()] = epoch;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element g : gens) {
      Element y = multiply(queue[i], g);
      if (stamp[y] != epoch) {
        stamp[y] = epoch;
        queue.push_back(y);
      }
    }
  }
  return queue.size();
}

Subgroup FiniteGroup::normal_closure(std::span<const Element> set) const {
  std::vector<Element> gens;
  for (Element s : set)
    if (s != identity())
      gens.push_back(s);
  Subgroup h = generated_subgroup(gens);
  for (bool changed = true; changed;) {
    changed = false;
    const std::size_t count = gens.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (Element g : generator_ids_) {
        Element c = conjugate(gens[i], g);
        if (!h.contains(c)) {
          gens.push_back(c);
          h = generated_subgroup(gens);
          changed = true;
        }
      }
    }
  }
  return h;
}

Subgroup FiniteGroup::derived_subgroup() const {
  std::vector<Element> comms;
  for (Element a : generator_ids_)
    for (Element b : generator_ids_)
      comms.push_back(commutator(a, b));
  return normal_closure(comms);
}

std::vector<Element> elements_of_exact_order(const FiniteGroup& g, std::uint64_t m) {
  auto xs = g.elements_of_order(m);
  return {xs.begin(), xs.end()};
}

AbelianInvariants abelian_invariants(const FiniteGroup& g) {
  // Peel off a coset of maximal order in the abelian quotient G/N, then
  // enlarge N by it; an element of maximal order spans a direct summand.
  Subgroup n = g.derived_subgroup();
  std::vector<Element> gens = n.generators();
  std::vector<std::uint64_t> descending;
  while (!n.is_whole()) {
    Element best = g.identity();
    std::uint64_t best_order = 1;
    for (Element x = 0; x < g.order(); ++x) {
      if (n.contains(x))
        continue;
      std::uint64_t k = 1;
      for (Element y = x; !n.contains(y); y = g.multiply(y, x))
        ++k;
      if (k > best_order) {
        best_order = k;
        best = x;
      }
    }
    descending.push_back(best_order);
    gens.push_back(best);
    n = g.generated_subgroup(gens);
  }
  AbelianInvariants inv;
  inv.factors.assign(descending.rbegin(), descending.rend());
  return inv;
}

bool is_perfect(const FiniteGroup& g) {
  return g.derived_subgroup().order() == g.order();
}

namespace {

bool is_cyclic(const FiniteGroup& g) {
  return !g.elements_of_order(g.order()).empty();
}

bool is_dihedral(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n % 2 != 0 || n < 4)
    return false;
  const std::uint64_t half = n / 2;
  auto involutions = g.elements_of_order(2);
  for (Element r : g.elements_of_order(half)) {
    std::vector<char> in_rotations(n, 0);
    for (Element y = r, k = 0; k < half; y = g.multiply(y, r), ++k)
      in_rotations[y] = 1;
    for (Element s : involutions) {
      if (in_rotations[s])
        continue;
      Element sr = g.multiply(s, r);
      // <r, s> has order 2*half once s lies outside <r>.
      if (g.multiply(sr, sr) == g.identity())
        return true;
    }
  }
  return false;
}

bool matches_fingerprint(const FiniteGroup& g, std::size_t order,
                         const std::map<std::uint64_t, std::size_t>& counts) {
  if (g.order() != order || g.order_index().size() != counts.size())
    return false;
  for (const auto& [m, xs] : g.order_index()) {
    auto it = counts.find(m);
    if (it == counts.end() || it->second != xs.size())
      return false;
  }
  return true;
}

} // namespace

bool recognize_genus_zero(const FiniteGroup& g) {
  if (is_cyclic(g) || is_dihedral(g))
    return true;
  return matches_fingerprint(g, 12, {{1, 1}, {2, 3}, {3, 8}}) ||
         matches_fingerprint(g, 24, {{1, 1}, {2, 9}, {3, 8}, {4, 6}}) ||
         matches_fingerprint(g, 60, {{1, 1}, {2, 15}, {3, 20}, {5, 24}});
}

} // namespace atlas
