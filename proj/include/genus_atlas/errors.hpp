#ifndef GENUS_ATLAS_ERRORS_HPP_
#define GENUS_ATLAS_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace atlas {

// Malformed catalog, permutation or signature text. Maps to CLI exit code 3.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// The catalog does not cover every order the enumeration needs. Exit code 2.
class CoverageError : public std::runtime_error {
public:
  explicit CoverageError(std::vector<long> missing);
  const std::vector<long>& missing_orders() const { return missing_; }

private:
  std::vector<long> missing_;
};

// Classification database is corrupt, inconsistent or incomplete. Exit code 4.
class DbError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Closure enumeration hit the configured element cap.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace atlas

#endif // GENUS_ATLAS_ERRORS_HPP_
