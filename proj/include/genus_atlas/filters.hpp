#ifndef GENUS_ATLAS_FILTERS_HPP_
#define GENUS_ATLAS_FILTERS_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "genus_atlas/catalog.hpp"
#include "genus_atlas/classification_db.hpp"
#include "genus_atlas/finite_group.hpp"
#include "genus_atlas/signature.hpp"

namespace atlas {

// Abelianization of a Fuchsian group: Z^rank + torsion, rank = 2 g0.
struct SignatureAbelianization {
  std::uint64_t rank = 0;
  AbelianInvariants torsion;
};

SignatureAbelianization signature_abelianization(const Signature& sig);

// Is there an epimorphism Z^free_rank + H -> G of abelian groups (G finite)?
// Decided prime by prime on the invariant-factor exponents.
bool abelian_epi_exists(std::uint64_t free_rank, const AbelianInvariants& source,
                        const AbelianInvariants& target);

// Surface kernel epimorphism onto an abelian group, decided arithmetically.
// Throws std::invalid_argument when G is not abelian.
bool abelian_ske_exists(const Signature& sig, const FiniteGroup& g);

// For sig = (0; p, ..., p), p prime: the elements of order p must normally
// generate G. Vacuously true for other signatures.
bool prime_signature_ok(const FiniteGroup& g, const Signature& sig);

// (0; 2,3,7) quotients are perfect.
bool hurwitz_ok(const FiniteGroup& g, const Signature& sig);

enum class RejectReason {
  kAlreadyClassified,
  kAbelianInvariants,
  kAbelianSke,
  kPrimeClosure,
  kHurwitzPerfect,
};

std::string_view to_string(RejectReason reason);

struct FilterVerdict {
  bool pass = true;
  std::optional<RejectReason> reason;  // set iff !pass

  static FilterVerdict accept() { return {}; }
  static FilterVerdict reject(RejectReason r) { return {false, r}; }
};

// Per-group facts reused across all candidate signatures of its order.
struct CandidateGroup {
  CandidateGroup(GroupId id, const FiniteGroup& group);

  GroupId id;
  const FiniteGroup* group;
  AbelianInvariants abelianization;
  bool abelian;
};

// Applies, in order: already-classified, abelian-invariants, abelian-ske
// (abelian G only), prime-closure, hurwitz-perfect. The first failure wins.
// Throws DbError unless the db is complete through genus target - 1.
FilterVerdict run_filters(const CandidatePair& pair, const CandidateGroup& candidate,
                          const ClassificationDb& db);

} // namespace atlas

#endif // GENUS_ATLAS_FILTERS_HPP_
