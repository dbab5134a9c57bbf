#ifndef GENUS_ATLAS_INTEGER_MATRIX_HPP_
#define GENUS_ATLAS_INTEGER_MATRIX_HPP_

#include <cstdint>
#include <vector>

namespace atlas {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Nonzero elementary divisors d_1 | d_2 | ... (all positive) of a rectangular
// integer matrix; their count is the rank.
std::vector<std::int64_t> smith_diagonal(IntMatrix a);

} // namespace atlas

#endif // GENUS_ATLAS_INTEGER_MATRIX_HPP_
