#ifndef GENUS_ATLAS_SIGNATURE_HPP_
#define GENUS_ATLAS_SIGNATURE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genus_atlas/rational.hpp"

namespace atlas {

// Fuchsian signature (g0; m_1, ..., m_r): orbit genus plus ascending periods.
struct Signature {
  int orbit_genus = 0;
  std::vector<int> periods;

  // Throws std::invalid_argument for a negative orbit genus or a period < 2.
  Signature(int g0, std::vector<int> ms);
  Signature() = default;

  std::size_t r() const { return periods.size(); }
  // 2 g0 - 2 + sum (1 - 1/m_i); positive exactly for hyperbolic signatures.
  Rational area() const;
  bool is_hyperbolic() const { return area() > Rational(0); }

  // "(0; 2,3,7)"; an empty period list prints as "(1; -)".
  std::string to_string() const;
  // Inverse of to_string. Throws ParseError.
  static Signature parse(std::string_view text);

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

struct CandidatePair {
  std::uint64_t order;
  Signature signature;
  int target_genus;

  friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

// Riemann-Hurwitz: genus of the surface H/K for |Gamma/K| = n.
Rational rh_genus(const Signature& sig, std::uint64_t n);

// The group order n with rh_genus(sig, n) = g, when that n is a positive
// integer. Throws std::invalid_argument for non-hyperbolic signatures.
std::optional<std::uint64_t> order_for(const Signature& sig, int g);

struct LargeOrderRow {
  Signature signature;
  Rational coefficient;  // |G| = coefficient * (g - 1)
};

// The nine triangle signatures admitting |G| >= 24(g-1), largest first.
std::vector<LargeOrderRow> large_order_signatures(int g);

// Every (order, signature) with 2 <= order <= 84(g-1), each period dividing
// the order and rh_genus = g exactly. Sorted by order, orbit genus, period
// count, then periods. Throws std::invalid_argument for g < 2.
std::vector<CandidatePair> candidate_pairs(int g);

// The four torsion signatures with zero area, plus (1; -).
std::vector<Signature> euclidean_signatures();

} // namespace atlas

#endif // GENUS_ATLAS_SIGNATURE_HPP_
