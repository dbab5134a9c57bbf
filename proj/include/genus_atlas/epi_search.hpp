#ifndef GENUS_ATLAS_EPI_SEARCH_HPP_
#define GENUS_ATLAS_EPI_SEARCH_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "genus_atlas/finite_group.hpp"
#include "genus_atlas/signature.hpp"
#include "genus_atlas/witness.hpp"

namespace atlas {

// Backtracking search for a surface kernel epimorphism Gamma(sig) -> G.
//
// Elliptic generators are chosen in descending period order with the last
// one forced by the long relation; the first free generator only ranges over
// conjugacy class representatives. The returned witness is rewritten into
// the canonical ascending order of `sig`. Absence is a proof of nonexistence.
std::optional<Witness> find_surface_kernel_epi(const Signature& sig, const FiniteGroup& g);

// Every witness the search visits (up to `limit`), in search order.
std::vector<Witness> find_all_surface_kernel_epis(
    const Signature& sig, const FiniteGroup& g,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

// Checks exact elliptic orders, the long relation and generation of G.
bool validate_witness(const Signature& sig, const FiniteGroup& g, const Witness& w);

// Unpruned enumeration of every image tuple; a test oracle. Refuses
// (std::invalid_argument) groups above order 24 or more than 2^26 tuples.
bool brute_force_epi_exists(const Signature& sig, const FiniteGroup& g);

} // namespace atlas

#endif // GENUS_ATLAS_EPI_SEARCH_HPP_
