#ifndef GENUS_ATLAS_WITNESS_HPP_
#define GENUS_ATLAS_WITNESS_HPP_

#include <vector>

#include "genus_atlas/permutation.hpp"

namespace atlas {

// Images of the canonical generators of a Fuchsian group with signature
// (g0; m_1 <= ... <= m_r): a_1, b_1, ..., a_g0, b_g0 then x_1, ..., x_r.
// A surface kernel epimorphism satisfies
//   [a_1,b_1] ... [a_g0,b_g0] x_1 ... x_r = id,  order(x_i) = m_i,
// and the images generate the target group.
struct Witness {
  std::vector<Permutation> hyperbolic;
  std::vector<Permutation> elliptic;

  std::vector<Permutation> all_images() const {
    std::vector<Permutation> out = hyperbolic;
    out.insert(out.end(), elliptic.begin(), elliptic.end());
    return out;
  }
  friend bool operator==(const Witness&, const Witness&) = default;
};

} // namespace atlas

#endif // GENUS_ATLAS_WITNESS_HPP_
