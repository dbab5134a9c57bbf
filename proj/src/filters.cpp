#include "genus_atlas/filters.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "genus_atlas/errors.hpp"
#include "genus_atlas/integer_matrix.hpp"

namespace atlas {

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    ps.push_back(p);
    while (n % p == 0)
      n /= p;
  }
  if (n > 1)
    ps.push_back(n);
  return ps;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  for (; n > 0 && n % p == 0; n /= p)
    ++v;
  return v;
}

// Exponents of the p-parts of the invariant factors, largest first, zeros dropped.
std::vector<unsigned> p_exponents(const AbelianInvariants& inv, std::uint64_t p) {
  std::vector<unsigned> e;
  for (auto d : inv.factors)
    if (unsigned v = valuation(d, p); v > 0)
      e.push_back(v);
  std::sort(e.begin(), e.end(), std::greater<>());
  return e;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

} // namespace

SignatureAbelianization signature_abelianization(const Signature& sig) {
  SignatureAbelianization out;
  out.rank = 2 * static_cast<std::uint64_t>(sig.orbit_genus);
  const std::size_t r = sig.r();
  if (r == 0)
    return out;
  // Relations on x_1..x_r: m_i x_i = 0 and x_1 + ... + x_r = 0.
  IntMatrix rel(r + 1, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    rel[i][i] = sig.periods[i];
    rel[r][i] = 1;
  }
  auto diag = smith_diagonal(std::move(rel));
  out.rank += r - diag.size();
  for (auto d : diag)
    if (d > 1)
      out.torsion.factors.push_back(static_cast<std::uint64_t>(d));
  return out;
}

bool abelian_epi_exists(std::uint64_t free_rank, const AbelianInvariants& source,
                        const AbelianInvariants& target) {
  const std::uint64_t n = target.torsion_order();
  for (std::uint64_t p : prime_divisors(n)) {
    auto a = p_exponents(source, p);
    auto b = p_exponents(target, p);
    if (b.size() > a.size() + free_rank)
      return false;
    // The free summands cover the free_rank largest target factors; every
    // remaining target factor must be dominated by a source factor.
    for (std::size_t i = 0; i + free_rank < b.size(); ++i)
      if (b[i + free_rank] > a[i])
        return false;
  }
  return true;
}

bool abelian_ske_exists(const Signature& sig, const FiniteGroup& g) {
  if (!g.is_abelian())
    throw std::invalid_argument("abelian_ske_exists: group is not abelian");
  const AbelianInvariants inv = abelian_invariants(g);
  const auto& ms = sig.periods;
  const std::size_t r = ms.size();
  const bool spherical_base = sig.orbit_genus == 0;

  // (o) an epimorphism exists at all
  auto ab = signature_abelianization(sig);
  if (!abelian_epi_exists(ab.rank, ab.torsion, inv))
    return false;

  std::uint64_t lcm_all = 1;
  for (int m : ms)
    lcm_all = std::lcm(lcm_all, static_cast<std::uint64_t>(m));

  // (i) no single period carries a prime power the others lack
  for (std::size_t skip = 0; skip < r; ++skip) {
    std::uint64_t l = 1;
    for (std::size_t i = 0; i < r; ++i)
      if (i != skip)
        l = std::lcm(l, static_cast<std::uint64_t>(ms[i]));
    if (l != lcm_all)
      return false;
  }

  // (ii)
  const std::uint64_t exponent = inv.factors.empty() ? 1 : inv.factors.back();
  if (exponent % lcm_all != 0)
    return false;
  if (spherical_base && lcm_all != exponent)
    return false;

  // (iii)
  if (r == 1 || (spherical_base && r < 3))
    return false;

  // (iv)
  if (lcm_all % 2 == 0) {
    const std::uint64_t two_part = std::uint64_t{1} << valuation(lcm_all, 2);
    auto divisible = [two_part](std::uint64_t x) { return x % two_part == 0; };
    const auto in_group = std::count_if(inv.factors.begin(), inv.factors.end(), divisible);
    if (in_group == 1) {
      const auto in_periods = std::count_if(ms.begin(), ms.end(), [&](int m) {
        return divisible(static_cast<std::uint64_t>(m));
      });
      if (in_periods % 2 != 0)
        return false;
    }
  }
  return true;
}

bool prime_signature_ok(const FiniteGroup& g, const Signature& sig) {
  if (sig.orbit_genus != 0 || sig.periods.empty())
    return true;
  const int p = sig.periods.front();
  if (sig.periods.back() != p || !is_prime(static_cast<std::uint64_t>(p)))
    return true;
  auto xs = g.elements_of_order(static_cast<std::uint64_t>(p));
  return g.normal_closure(xs).is_whole();
}

bool hurwitz_ok(const FiniteGroup& g, const Signature& sig) {
  static const Signature hurwitz(0, {2, 3, 7});
  if (sig != hurwitz)
    return true;
  return is_perfect(g);
}

std::string_view to_string(RejectReason reason) {
  switch (reason) {
  case RejectReason::kAlreadyClassified:
    return "already-classified";
  case RejectReason::kAbelianInvariants:
    return "abelian-invariants";
  case RejectReason::kAbelianSke:
    return "abelian-ske";
  case RejectReason::kPrimeClosure:
    return "prime-closure";
  case RejectReason::kHurwitzPerfect:
    return "hurwitz-perfect";
  }
  return "unknown";
}

CandidateGroup::CandidateGroup(GroupId group_id, const FiniteGroup& g)
    : id(group_id), group(&g), abelianization(abelian_invariants(g)), abelian(g.is_abelian()) {}

FilterVerdict run_filters(const CandidatePair& pair, const CandidateGroup& candidate,
                          const ClassificationDb& db) {
  const int g = pair.target_genus;
  if (db.complete_through() < g - 1)
    throw DbError("classification db is complete through genus " +
                  std::to_string(db.complete_through()) + ", genus " + std::to_string(g) +
                  " needs " + std::to_string(g - 1));
  if (auto prior = db.lookup(candidate.id); prior && *prior >= 2 && *prior <= g - 1)
    return FilterVerdict::reject(RejectReason::kAlreadyClassified);

  auto ab = signature_abelianization(pair.signature);
  if (!abelian_epi_exists(ab.rank, ab.torsion, candidate.abelianization))
    return FilterVerdict::reject(RejectReason::kAbelianInvariants);
  if (candidate.abelian && !abelian_ske_exists(pair.signature, *candidate.group))
    return FilterVerdict::reject(RejectReason::kAbelianSke);
  if (!prime_signature_ok(*candidate.group, pair.signature))
    return FilterVerdict::reject(RejectReason::kPrimeClosure);
  if (!hurwitz_ok(*candidate.group, pair.signature))
    return FilterVerdict::reject(RejectReason::kHurwitzPerfect);
  return FilterVerdict::accept();
}

} // namespace atlas
