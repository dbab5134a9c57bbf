#include "genus_atlas/integer_matrix.hpp"

#include <cstdlib>
#include <utility>

namespace atlas {

std::vector<std::int64_t> smith_diagonal(IntMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::vector<std::int64_t> diag;

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    for (;;) {
      // Pivot on the smallest nonzero entry of the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows)
        return diag;
      std::swap(a[t], a[pr]);
      for (auto& row : a)
        std::swap(row[t], row[pc]);

      bool clean = true;
      const std::int64_t p = a[t][t];
      for (std::size_t i = t + 1; i < rows; ++i) {
        const std::int64_t q = a[i][t] / p;
        for (std::size_t j = t; j < cols; ++j)
          a[i][j] -= q * a[t][j];
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const std::int64_t q = a[t][j] / p;
        for (std::size_t i = t; i < rows; ++i)
          a[i][j] -= q * a[i][t];
        clean = clean && a[t][j] == 0;
      }
      if (!clean)
        continue;  // a smaller remainder now exists; pivot again

      // The pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % p != 0) {
            for (std::size_t k = t; k < cols; ++k)
              a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    diag.push_back(std::llabs(a[t][t]));
  }
  return diag;
}

} // namespace atlas
