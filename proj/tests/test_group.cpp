#include <doctest.h>

#include <stdexcept>

#include <numeric>

#include "cayley/characters.hpp"
#include "cayley/group.hpp"

using namespace cayley;

namespace {

std::vector<GroupSpec> small_groups(int max_order) {
  std::vector<GroupSpec> out;
  for (int n = 2; n <= max_order; ++n)
    for (auto& g : abelian_groups_of_order(n)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("elements are mixed-radix lexicographic with zero first") {
  CHECK(GroupSpec({3}).elements() == std::vector<Element>{{0}, {1}, {2}});
  CHECK(GroupSpec({2, 2}).elements() == std::vector<Element>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  for (const auto& g : small_groups(16)) {
    auto elems = g.elements();
    CHECK(g.is_zero(elems[0]));
    for (int i = 0; i < g.order(); ++i) CHECK(g.index_of(elems[static_cast<std::size_t>(i)]) == i);
  }
  const GroupSpec c2c6({2, 6});
  for (int i = 0; i < c2c6.order(); ++i) CHECK(c2c6.index_of(c2c6.element_at(i)) == i);
}

TEST_CASE("componentwise arithmetic") {
  const GroupSpec c6({6});
  CHECK(c6.add({4}, {5}) == Element{3});
  CHECK(GroupSpec({3, 3}).neg({1, 2}) == Element{2, 1});
  CHECK(GroupSpec({5}).twice({3}) == Element{1});
  CHECK_THROWS_AS(c6.add({6}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(c6.neg({-1}), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec({2, 2}).neg({1}), std::invalid_argument);
}

TEST_CASE("group axioms on every group up to order 12") {
  for (const auto& g : small_groups(12)) {
    auto elems = g.elements();
    for (const auto& a : elems) {
      CHECK(g.is_zero(g.add(a, g.neg(a))));
      CHECK(g.twice(a) == g.add(a, a));
      for (const auto& b : elems) {
        CHECK(g.add(a, b) == g.add(b, a));
        for (const auto& c : elems) CHECK(g.add(g.add(a, b), c) == g.add(a, g.add(b, c)));
      }
    }
  }
}

TEST_CASE("doubling preimages") {
  const GroupSpec c5({5});
  for (const auto& a : c5.elements()) CHECK(c5.doubling_preimage_count(a) == 1);
  const GroupSpec c6({6});
  CHECK(c6.doubling_preimage_count({0}) == 2);
  CHECK(c6.doubling_preimage_count({1}) == 0);
  CHECK(c6.in_2G({4}));
  CHECK_FALSE(c6.in_2G({3}));
  CHECK(GroupSpec({2, 2}).doubling_preimage_count({0, 0}) == 4);

  for (const auto& g : small_groups(16)) {
    int total = 0;
    auto elems = g.elements();
    for (const auto& a : elems) {
      // Oracle: count g with 2g = a directly.
      int direct = 0;
      for (const auto& x : elems) direct += g.twice(x) == a;
      CHECK(g.doubling_preimage_count(a) == direct);
      total += direct;
      if (g.order() % 2 == 1) CHECK(g.doubling_preimage_count(a) == 1);
      if (g.order() % 4 == 2) CHECK(g.doubling_preimage_count(a) == 2 * static_cast<int>(g.in_2G(a)));
    }
    CHECK(total == g.order());
    if (g.order() % 4 == 2) {
      int in2g = 0;
      for (const auto& a : elems) in2g += g.in_2G(a);
      CHECK(in2g == g.order() / 2);
    }
  }
}

TEST_CASE("negation parity") {
  CHECK(GroupSpec({3}).negation_parity() == -1);
  CHECK(GroupSpec({2}).negation_parity() == 1);
  CHECK(GroupSpec({5}).negation_parity() == 1);
  // Oracle: sign of the negation permutation from its cycle type.
  for (const auto& g : small_groups(16)) {
    std::vector<int> perm;
    for (const auto& a : g.elements()) perm.push_back(g.index_of(g.neg(a)));
    CHECK(g.negation_parity() == CycleType::of(perm).sign());
  }
}

TEST_CASE("parsing and canonical form") {
  CHECK(GroupSpec::parse("c3").factors() == std::vector<int>{3});
  CHECK(GroupSpec::parse("c2xc4").factors() == std::vector<int>{2, 4});
  CHECK(GroupSpec::parse("c3xc3").to_string() == "c3xc3");
  CHECK_THROWS_AS(GroupSpec::parse("c1"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("c0xc3"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("c"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("z3"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("c3x"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("C3"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("c3a"), std::invalid_argument);

  CHECK(GroupSpec({2, 6}).canonical_factors() == std::vector<int>{2, 6});
  CHECK(GroupSpec({6, 2}).canonical_factors() == std::vector<int>{2, 6});
  CHECK(GroupSpec({2, 3}).canonical_factors() == std::vector<int>{6});
  CHECK(GroupSpec({4, 6, 9}).canonical_factors() == std::vector<int>{6, 36});
  CHECK(GroupSpec({2, 6}).isomorphic_to(GroupSpec({6, 2})));
  CHECK_FALSE(GroupSpec({4}).isomorphic_to(GroupSpec({2, 2})));
}

TEST_CASE("abelian groups by order") {
  CHECK(abelian_groups_of_order(8).size() == 3);
  CHECK(abelian_groups_of_order(9).size() == 2);
  CHECK(abelian_groups_of_order(12).size() == 2);
  CHECK(abelian_groups_of_order(16).size() == 5);
  CHECK(abelian_groups_of_order(7).size() == 1);
  for (const auto& g : abelian_groups_of_order(12)) CHECK(g.order() == 12);
  int p = 0, r = 0;
  CHECK(is_prime_power(9, &p, &r));
  CHECK(p == 3);
  CHECK(r == 2);
  CHECK_FALSE(is_prime_power(12));
  CHECK_FALSE(is_prime_power(1));
}
