#ifndef GENUS_ATLAS_FINITE_GROUP_HPP_
#define GENUS_ATLAS_FINITE_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "genus_atlas/permutation.hpp"

namespace atlas {

// Index of an element inside one FiniteGroup. The identity is always 0.
using Element = std::uint32_t;

struct ConjugacyClass {
  Element representative;
  std::vector<Element> members;  // ascending
  std::uint64_t element_order;
};

// Invariant factors d_1 | d_2 | ... | d_k (all >= 2) plus a free rank.
struct AbelianInvariants {
  std::vector<std::uint64_t> factors;
  std::uint64_t rank = 0;

  std::uint64_t torsion_order() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

class FiniteGroup;

// A subgroup of a FiniteGroup, held as a membership mask over the parent's
// element indices.
class Subgroup {
public:
  std::size_t order() const { return members_.size(); }
  bool contains(Element x) const { return mask_[x] != 0; }
  const std::vector<Element>& members() const { return members_; }
  const std::vector<Element>& generators() const { return generators_; }
  bool is_whole() const { return members_.size() == mask_.size(); }

  // The subgroup as a standalone permutation group.
  FiniteGroup as_group(const FiniteGroup& parent) const;

private:
  friend class FiniteGroup;
  std::vector<char> mask_;
  std::vector<Element> members_;
  std::vector<Element> generators_;
};

// A finite permutation group with its full element set enumerated.
// Immutable after construction; safe to share read-only between threads.
class FiniteGroup {
public:
  static constexpr std::size_t kDefaultCap = 20000;
  // Orders up to this bound get a precomputed multiplication table.
  static constexpr std::size_t kTableLimit = 2048;

  // Breadth-first closure of the generators. Throws std::invalid_argument on
  // an empty or mixed-degree generator list, CapExceeded past `cap` elements.
  explicit FiniteGroup(std::vector<Permutation> generators, std::size_t cap = kDefaultCap);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Element>& generator_ids() const { return generator_ids_; }

  Element identity() const { return 0; }
  const Permutation& element(Element x) const { return elements_[x]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::optional<Element> find(const Permutation& p) const;

  Element multiply(Element a, Element b) const {
    if (!table_.empty())
      return table_[static_cast<std::size_t>(a) * elements_.size() + b];
    return multiply_slow(a, b);
  }
  Element inverse(Element x) const { return inverses_[x]; }
  Element conjugate(Element x, Element by) const {  // by^-1 x by
    return multiply(multiply(inverses_[by], x), by);
  }
  Element commutator(Element a, Element b) const {  // a^-1 b^-1 a b
    return multiply(multiply(inverses_[a], inverses_[b]), multiply(a, b));
  }
  Element power(Element x, std::uint64_t k) const;

  std::uint64_t element_order(Element x) const { return orders_[x]; }
  // Elements of exactly order m, ascending; empty when there are none.
  std::span<const Element> elements_of_order(std::uint64_t m) const;
  const std::map<std::uint64_t, std::vector<Element>>& order_index() const { return order_index_; }
  std::uint64_t exponent() const;

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(Element x) const { return class_of_[x]; }

  bool is_abelian() const;

  Subgroup generated_subgroup(std::span<const Element> gens) const;
  // Order of <gens> without materializing a Subgroup.
  std::size_t generated_order(std::span<const Element> gens) const;
  bool generates(std::span<const Element> gens) const {
    return generated_order(gens) == order();
  }
  Subgroup normal_closure(std::span<const Element> set) const;
  Subgroup derived_subgroup() const;

private:
  Element multiply_slow(Element a, Element b) const;
  void build_classes();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Element> generator_ids_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Element, PermutationHash> index_;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::uint64_t> orders_;
  std::map<std::uint64_t, std::vector<Element>> order_index_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

inline FiniteGroup generate(std::vector<Permutation> gens,
                            std::size_t cap = FiniteGroup::kDefaultCap) {
  return FiniteGroup(std::move(gens), cap);
}

std::vector<Element> elements_of_exact_order(const FiniteGroup& g, std::uint64_t m);

// Invariant factors of G/[G,G] (rank 0).
AbelianInvariants abelian_invariants(const FiniteGroup& g);

bool is_perfect(const FiniteGroup& g);

// True for cyclic and dihedral groups (the Klein group counts as dihedral of
// order 4) and for groups matching the A4, S4 or A5 element-order fingerprint.
bool recognize_genus_zero(const FiniteGroup& g);

} // namespace atlas

#endif // GENUS_ATLAS_FINITE_GROUP_HPP_
