#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "doctest.h"
#include "genus_atlas/errors.hpp"
#include "genus_atlas/signature.hpp"

using namespace atlas;

namespace {

using PairKey = std::tuple<std::uint64_t, int, std::vector<int>>;

void all_multisets(const std::vector<int>& divisors, std::size_t len, std::size_t start,
                   std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (cur.size() == len) {
    f(cur);
    return;
  }
  for (std::size_t i = start; i < divisors.size(); ++i) {
    cur.push_back(divisors[i]);
    all_multisets(divisors, len, i, cur, f);
    cur.pop_back();
  }
}

// Unpruned oracle: every order n <= 84(g-1), orbit genus g0 <= g and every
// multiset of at most 2(g-1)+4 periods dividing n, tested with the integer
// form of Riemann-Hurwitz: 2(g-1) = 2n(g0-1) + sum(n - n/m_i).
std::set<PairKey> brute_force_pairs(int g) {
  std::set<PairKey> out;
  const std::int64_t lhs = 2 * (g - 1);
  const std::size_t max_r = static_cast<std::size_t>(2 * (g - 1) + 4);
  for (std::int64_t n = 2; n <= 84 * (g - 1); ++n) {
    std::vector<int> divisors;
    for (std::int64_t d = 2; d <= n; ++d)
      if (n % d == 0)
        divisors.push_back(static_cast<int>(d));
    for (int g0 = 0; g0 <= g; ++g0) {
      for (std::size_t r = 0; r <= max_r; ++r) {
        std::vector<int> cur;
        all_multisets(divisors, r, 0, cur, [&](const std::vector<int>& ms) {
          std::int64_t rhs = 2 * n * (g0 - 1);
          for (int m : ms)
            rhs += n - n / m;
          if (rhs == lhs)
            out.insert({static_cast<std::uint64_t>(n), g0, ms});
        });
      }
    }
  }
  return out;
}

} // namespace

TEST_CASE("rh_genus") {
  CHECK(rh_genus(Signature(0, {2, 3, 7}), 84) == Rational(2));
  CHECK(rh_genus(Signature(0, {2, 4, 5}), 40) == Rational(2));
  CHECK(rh_genus(Signature(0, {2, 3, 7}), 168) == Rational(3));
  for (std::uint64_t n : {1u, 2u, 7u, 60u}) {
    CHECK(rh_genus(Signature(1, {}), n) == Rational(1));
    CHECK(rh_genus(Signature(0, {2, 2, 2, 2}), n) == Rational(1));
  }
  CHECK(rh_genus(Signature(0, {2, 3, 11}), 132) == Rational(6));
  CHECK(rh_genus(Signature(0, {2, 3, 11}), 26) == Rational(131, 66));
}

TEST_CASE("order_for") {
  CHECK(order_for(Signature(0, {2, 3, 8}), 2) == 48u);
  CHECK_FALSE(order_for(Signature(0, {2, 3, 11}), 2).has_value());
  CHECK(order_for(Signature(0, {2, 3, 7}), 3) == 168u);
  CHECK(order_for(Signature(0, {2, 3, 11}), 6) == 132u);
  CHECK_THROWS_AS(order_for(Signature(0, {2, 3, 6}), 2), std::invalid_argument);
  CHECK_THROWS_AS(order_for(Signature(0, {2, 2}), 2), std::invalid_argument);
}

TEST_CASE("large-order table") {
  const auto rows = large_order_signatures(2);
  REQUIRE(rows.size() == 9);
  CHECK(rows.front().signature == Signature(0, {2, 3, 7}));
  CHECK(rows.front().coefficient == Rational(84));
  const std::vector<Rational> expected{84, 48, 40, 36, 30, Rational(132, 5), 24, 24, 24};
  std::vector<Signature> twenty_four;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].coefficient == expected[i]);
    // |G| = 2(g-1) / (1 - sum 1/m_i)
    Rational reciprocal_sum(0);
    for (int m : rows[i].signature.periods)
      reciprocal_sum += Rational(1, m);
    CHECK(Rational(2) / (Rational(1) - reciprocal_sum) == rows[i].coefficient);
    if (rows[i].coefficient == Rational(24))
      twenty_four.push_back(rows[i].signature);
  }
  CHECK(twenty_four == std::vector<Signature>{Signature(0, {2, 3, 12}), Signature(0, {2, 4, 6}),
                                              Signature(0, {3, 3, 4})});
}

TEST_CASE("large-order orders for genus 2..25") {
  for (int g = 2; g <= 25; ++g) {
    for (const auto& row : large_order_signatures(g)) {
      Rational n = row.coefficient * Rational(g - 1);
      auto got = order_for(row.signature, g);
      if (n.is_integer()) {
        REQUIRE(got.has_value());
        CHECK(*got == static_cast<std::uint64_t>(n.num()));
      } else {
        CHECK_FALSE(got.has_value());
      }
      if (row.signature == Signature(0, {2, 3, 11}))
        CHECK(got.has_value() == ((g - 1) % 5 == 0));
    }
  }
}

TEST_CASE("candidate_pairs for genus 2") {
  const auto pairs = candidate_pairs(2);
  auto has = [&](std::uint64_t n, const Signature& s) {
    return std::any_of(pairs.begin(), pairs.end(),
                       [&](const CandidatePair& p) { return p.order == n && p.signature == s; });
  };
  CHECK(has(48, Signature(0, {2, 3, 8})));
  CHECK(has(24, Signature(0, {3, 3, 4})));
  for (const auto& p : pairs)
    if (p.order == 84)
      CHECK(p.signature == Signature(0, {2, 3, 7}));
  CHECK(pairs.size() == 33);
  CHECK_THROWS_AS(candidate_pairs(1), std::invalid_argument);
}

TEST_CASE("candidate_pairs equals the brute-force set") {
  for (int g : {2, 3}) {
    CAPTURE(g);
    std::set<PairKey> emitted;
    for (const auto& p : candidate_pairs(g))
      emitted.insert({p.order, p.signature.orbit_genus, p.signature.periods});
    CHECK(emitted == brute_force_pairs(g));
  }
}

TEST_CASE("property: emitted pairs are exact, divisible, hyperbolic and ordered") {
  for (int g = 2; g <= 6; ++g) {
    const auto pairs = candidate_pairs(g);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& p = pairs[i];
      CAPTURE(p.signature.to_string());
      CHECK(rh_genus(p.signature, p.order) == Rational(g));
      for (int m : p.signature.periods)
        CHECK(p.order % static_cast<std::uint64_t>(m) == 0);
      CHECK(p.signature.is_hyperbolic());
      CHECK_FALSE((p.signature.orbit_genus == 0 && p.signature.r() <= 2));
      CHECK(std::is_sorted(p.signature.periods.begin(), p.signature.periods.end()));
      if (i > 0) {
        const auto& q = pairs[i - 1];
        auto key = [](const CandidatePair& c) {
          return std::make_tuple(c.order, c.signature.orbit_genus, c.signature.r(),
                                 c.signature.periods);
        };
        CHECK(key(q) < key(p));
      }
    }
  }
}

TEST_CASE("signature text round trip") {
  for (const auto& s : {Signature(0, {2, 3, 7}), Signature(1, {}), Signature(2, {3}),
                        Signature(0, {2, 2, 2, 2, 2, 2})})
    CHECK(Signature::parse(s.to_string()) == s);
  CHECK(Signature(0, {7, 2, 3}).to_string() == "(0; 2,3,7)");
  CHECK(Signature(1, {}).to_string() == "(1; -)");
  CHECK_THROWS_AS(Signature::parse("(0 2,3,7)"), ParseError);
  CHECK_THROWS_AS(Signature::parse("(0; 1,3)"), ParseError);
  CHECK_THROWS_AS(Signature(0, {1}), std::invalid_argument);
}
