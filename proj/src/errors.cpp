#include "genus_atlas/errors.hpp"

namespace atlas {

namespace {

std::string coverage_message(const std::vector<long>& missing) {
  std::string msg = "catalog does not cover required orders:";
  for (long n : missing)
    msg += " " + std::to_string(n);
  return msg;
}

} // namespace

CoverageError::CoverageError(std::vector<long> missing)
    : std::runtime_error(coverage_message(missing)), missing_(std::move(missing)) {}

} // namespace atlas
