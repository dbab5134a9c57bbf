#include <algorithm>
#include <map>

#include "doctest.h"
#include "genus_atlas/errors.hpp"
#include "genus_atlas/finite_group.hpp"
#include "test_support.hpp"

using namespace atlas;
using namespace atlas::testing;

TEST_CASE("generate") {
  CHECK(FiniteGroup({perm("(1,2)", 2)}).order() == 2);
  CHECK(s3().order() == 6);
  CHECK_THROWS_AS(FiniteGroup(std::vector<Permutation>{}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup({perm("(1,2)", 2), perm("(1,2)", 3)}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup({perm("(1,2,3,4,5,6,7)", 7), perm("(1,2)", 7)}, 100), CapExceeded);
}

TEST_CASE("Q8 from its permutation generators") {
  const auto g = q8();
  REQUIRE(g.order() == 8);
  const Element a = g.generator_ids()[0];
  const Element b = g.generator_ids()[1];
  CHECK(g.power(a, 4) == g.identity());
  CHECK(g.power(a, 2) == g.power(b, 2));
  CHECK(g.multiply(g.multiply(b, a), g.inverse(b)) == g.inverse(a));
  CHECK(g.elements_of_order(4).size() == 6);
  CHECK(g.elements_of_order(2).size() == 1);
}

TEST_CASE("elements of exact order") {
  const auto c6 = cyclic(6);
  CHECK(elements_of_exact_order(c6, 1) == std::vector<Element>{c6.identity()});
  CHECK(elements_of_exact_order(c6, 4).empty());
  CHECK(elements_of_exact_order(c6, 6).size() == 2);
}

TEST_CASE("normal closure") {
  const auto g4 = a4();
  CHECK(g4.normal_closure(std::vector<Element>{g4.identity()}).order() == 1);
  CHECK(g4.normal_closure(g4.elements_of_order(2)).order() == 4);

  const auto g = s4();
  auto transposition = g.find(perm("(1,2)", 4));
  REQUIRE(transposition);
  CHECK(g.normal_closure(std::vector<Element>{*transposition}).is_whole());
}

TEST_CASE("abelian invariants and perfection") {
  CHECK(abelian_invariants(cyclic(6)).factors == std::vector<std::uint64_t>{6});
  CHECK(abelian_invariants(s3()).factors == std::vector<std::uint64_t>{2});
  CHECK(abelian_invariants(q8()).factors == std::vector<std::uint64_t>{2, 2});
  CHECK(abelian_invariants(c4xc2()).factors == std::vector<std::uint64_t>{2, 4});
  CHECK(abelian_invariants(a5()).factors.empty());

  CHECK_FALSE(is_perfect(cyclic(2)));
  CHECK(is_perfect(a5()));
  CHECK_FALSE(is_perfect(s4()));
}

TEST_CASE("genus-zero recognizer") {
  CHECK(recognize_genus_zero(cyclic(7)));
  CHECK(recognize_genus_zero(s3()));
  CHECK(recognize_genus_zero(a4()));
  CHECK(recognize_genus_zero(s4()));
  CHECK(recognize_genus_zero(a5()));
  CHECK_FALSE(recognize_genus_zero(q8()));
  CHECK_FALSE(recognize_genus_zero(c2cubed()));
  CHECK_FALSE(recognize_genus_zero(c4xc2()));
  for (std::size_t n = 1; n <= 42; ++n) {
    CAPTURE(n);
    CHECK(recognize_genus_zero(cyclic(n)));
    CHECK(recognize_genus_zero(dihedral(n)));
  }
}

TEST_CASE("property: catalog groups have consistent classes, orders and invariants") {
  for (const auto& rec : small_catalog().records()) {
    CAPTURE(rec.name);
    const auto g = group_of(rec);
    const std::size_t n = g.order();

    std::size_t total = 0;
    for (const auto& cls : g.classes()) {
      total += cls.members.size();
      CHECK(n % cls.members.size() == 0);
      for (Element x : cls.members)
        CHECK(g.element_order(x) == cls.element_order);
    }
    CHECK(total == n);
    CHECK(g.classes()[g.class_of(g.identity())].members.size() == 1);

    for (const auto& [m, xs] : g.order_index())
      CHECK(n % m == 0);

    const auto derived = g.derived_subgroup();
    const auto inv = abelian_invariants(g);
    CHECK(inv.torsion_order() * derived.order() == n);
    for (std::size_t i = 0; i + 1 < inv.factors.size(); ++i)
      CHECK(inv.factors[i + 1] % inv.factors[i] == 0);

    // Normal closure of a class representative is normal and contains it.
    const Element x = g.classes().back().representative;
    const auto closure = g.normal_closure(std::vector<Element>{x});
    CHECK(closure.contains(x));
    for (Element h : closure.members())
      for (Element s : g.generator_ids())
        CHECK(closure.contains(g.conjugate(h, s)));
  }
}

TEST_CASE("subgroup converts to a standalone group") {
  const auto g = s4();
  const auto v4 = g.normal_closure(g.elements_of_order(2)).order();
  CHECK(v4 == 24);  // transpositions are among the involutions
  const auto sub = g.generated_subgroup(g.elements_of_order(3));
  CHECK(sub.order() == 12);
  CHECK(sub.as_group(g).order() == 12);
}
