#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>

#include "oracles.hpp"
#include "sbp/algebra.hpp"
#include "sbp/error.hpp"
#include "sbp/functions.hpp"

using namespace sbp;

namespace {

ErrorKind kindOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an sbp::Error");
  return ErrorKind::InvalidInput;
}

const std::vector<std::vector<int>> kSmallGroups = {
    {2}, {3}, {4}, {6}, {2, 2}, {2, 3}, {3, 2}, {2, 2, 2}, {4, 2}, {8}, {2, 4, 3}, {2, 2, 2, 2}, {16}, {4, 4},
};

}  // namespace

TEST_CASE("makeGroup accepts products of cyclic factors") {
  CHECK(makeGroup({6}).order() == 6);
  CHECK(makeGroup({2, 2}).order() == 4);
  CHECK(makeGroup({2, 4, 3}).order() == 24);
  CHECK(kindOf([] { makeGroup({1}); }) == ErrorKind::InvalidGroup);
  CHECK(kindOf([] { makeGroup({}); }) == ErrorKind::InvalidGroup);
  CHECK(kindOf([] { makeGroup({4, 0}); }) == ErrorKind::InvalidGroup);
}

TEST_CASE("group names and parsing") {
  CHECK(Group::parse("6").name() == "Z6");
  CHECK(Group::parse("2x2").name() == "Z2xZ2");
  CHECK(Group::parse("Z2xZ2") == makeGroup({2, 2}));
  CHECK(kindOf([] { Group::parse("2 x2"); }) == ErrorKind::InvalidGroup);
  CHECK(kindOf([] { Group::parse("x2"); }) == ErrorKind::InvalidGroup);
  CHECK(kindOf([] { Group::parse(""); }) == ErrorKind::InvalidGroup);
}

TEST_CASE("group arithmetic examples") {
  Group z6({6});
  CHECK(z6.add(4, 5) == 3);
  CHECK(z6.neg(2) == 4);
  CHECK(z6.sub(1, 3) == 4);
  Group v4({2, 2});
  CHECK(v4.add(1, 3) == 2);
  for (Element x = 0; x < 4; ++x) CHECK(v4.add(v4.zero(), x) == x);
  CHECK(kindOf([&] { z6.add(6, 0); }) == ErrorKind::InvalidElement);
  CHECK(kindOf([&] { z6.neg(-1); }) == ErrorKind::InvalidElement);
}

TEST_CASE("mixed-radix codec round trips, first factor least significant") {
  for (const auto& factors : kSmallGroups) {
    Group g(factors);
    for (Element x = 0; x < g.order(); ++x) CHECK(g.encode(g.decode(x)) == x);
  }
  Group g({2, 3});
  CHECK(g.decode(1) == std::vector<int>{1, 0});
  CHECK(g.decode(2) == std::vector<int>{0, 1});
}

TEST_CASE("group axioms hold exhaustively and match the naive digit arithmetic") {
  for (const auto& factors : kSmallGroups) {
    Group g(factors);
    oracle::NaiveGroup naive{factors};
    const int k = g.order();
    for (Element x = 0; x < k; ++x) {
      CHECK(g.add(x, g.neg(x)) == 0);
      CHECK(g.add(0, x) == x);
      for (Element y = 0; y < k; ++y) {
        REQUIRE(g.add(x, y) == naive.add(x, y));
        REQUIRE(g.add(x, y) == g.add(y, x));
        for (Element z = 0; z < k; ++z) REQUIRE(g.add(g.add(x, y), z) == g.add(x, g.add(y, z)));
      }
    }
  }
  // Orders up to 64 without the Cayley table path as well.
  Group big({2, 2, 2, 2, 2, 2});
  for (Element x = 0; x < 64; ++x)
    for (Element y = 0; y < 64; ++y) REQUIRE(big.add(x, y) == (x ^ y));
  Group huge({512});
  CHECK(huge.add(300, 400) == 188);
  CHECK(huge.neg(1) == 511);
}

TEST_CASE("index2Subgroups") {
  CHECK(index2Subgroups(Group({6})) == std::vector<ElementSet>{{0, 2, 4}});
  CHECK(index2Subgroups(Group({2, 2})) == std::vector<ElementSet>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(index2Subgroups(Group({3})).empty());
  CHECK(index2Subgroups(Group({3, 5})).empty());
  for (int e = 1; e <= 5; ++e) {
    Group g(std::vector<int>(e, 2));
    auto subgroups = index2Subgroups(g);
    CHECK(subgroups.size() == (std::size_t{1} << e) - 1);
    for (const auto& s : subgroups) {
      CHECK(isSubgroup(g, s));
      CHECK(2 * s.size() == static_cast<std::size_t>(g.order()));
    }
  }
  for (const auto& factors : kSmallGroups) {
    Group g(factors);
    for (const auto& s : index2Subgroups(g)) {
      CHECK(isSubgroup(g, s));
      CHECK(2 * s.size() == static_cast<std::size_t>(g.order()));
    }
  }
}

TEST_CASE("index2Subgroups is complete against enumeration of all half-size subsets") {
  for (const auto& factors : std::vector<std::vector<int>>{{4}, {6}, {2, 2}, {8}, {2, 4}, {2, 2, 2}}) {
    Group g(factors);
    const int k = g.order();
    std::vector<ElementSet> brute;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      if (2 * std::popcount(mask) != k) continue;
      ElementSet s;
      for (int x = 0; x < k; ++x)
        if (mask >> x & 1) s.push_back(x);
      if (isSubgroup(g, s)) brute.push_back(s);
    }
    std::sort(brute.begin(), brute.end());
    CHECK(index2Subgroups(g) == brute);
  }
}

TEST_CASE("isSubgroup and coset") {
  Group z6({6});
  CHECK(isSubgroup(z6, ElementSet{0, 2, 4}));
  CHECK_FALSE(isSubgroup(z6, ElementSet{0, 1}));
  CHECK_FALSE(isSubgroup(z6, ElementSet{2, 4}));
  CHECK(isSubgroup(z6, ElementSet{0}));
  CHECK(coset(z6, ElementSet{0, 2, 4}, 1) == ElementSet{1, 3, 5});
  CHECK(kindOf([&] { isSubgroup(z6, ElementSet{0, 7}); }) == ErrorKind::InvalidElement);
}

TEST_CASE("automorphisms of cyclic groups") {
  auto aut6 = automorphisms(Group({6}));
  REQUIRE(aut6.size() == 2);
  CHECK(aut6[0] == Permutation{0, 1, 2, 3, 4, 5});
  CHECK(aut6[1] == Permutation{0, 5, 4, 3, 2, 1});
  CHECK(automorphisms(Group({2})).size() == 1);
  CHECK(automorphisms(Group({8})).size() == 4);
  CHECK(kindOf([] { automorphisms(Group({2, 2})); }) == ErrorKind::UnsupportedGroup);
  for (const auto& perm : automorphisms(Group({12}))) CHECK(isAutomorphism(Group({12}), perm));
}

TEST_CASE("isAutomorphism agrees with brute force over all permutations of Z2xZ2 and Z6") {
  // |Aut(Z2xZ2)| = |GL(2,2)| = 6, |Aut(Z6)| = 2.
  for (auto [factors, expected] : std::vector<std::pair<std::vector<int>, int>>{{{2, 2}, 6}, {{6}, 2}, {{4}, 2}}) {
    Group g(factors);
    Permutation perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    int count = 0;
    do {
      if (isAutomorphism(g, perm)) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(count == expected);
  }
  CHECK_FALSE(isAutomorphism(Group({6}), Permutation{0, 1, 2}));
  CHECK_FALSE(isAutomorphism(Group({4}), Permutation{0, 0, 2, 3}));
}

TEST_CASE("makeField uses validated irreducible moduli") {
  for (int e = 1; e <= 8; ++e) {
    Field field = makeField(e);
    CHECK(field.degree == e);
    CHECK(isIrreducible(field.modulus));
    CHECK((field.modulus >> e) == 1u);
    // Lexicographically least: no smaller degree-e polynomial is irreducible.
    for (std::uint32_t p = 1u << e; p < field.modulus; ++p) CHECK_FALSE(isIrreducible(p));
  }
  CHECK(kindOf([] { makeField(0); }) == ErrorKind::UnsupportedDegree);
  CHECK(kindOf([] { makeField(9); }) == ErrorKind::UnsupportedDegree);
  CHECK_FALSE(isIrreducible(0b101));  // (X+1)^2
  CHECK(isIrreducible(0b111));
}

TEST_CASE("field multiplication examples and schoolbook oracle") {
  Field gf4 = makeField(2), gf8 = makeField(3);
  CHECK(fieldMul(gf4, 2, 2) == 3);
  CHECK(fieldMul(gf4, 2, 2) == oracle::schoolbookMulMod(2, 2, 0b111));
  CHECK(fieldMul(gf8, 2, 2) == 4);
  CHECK(fieldMul(gf8, 2, 4) == 3);
  CHECK(fieldMul(gf8, 2, 4) == oracle::schoolbookMulMod(2, 4, 0b1011));
  for (int e = 1; e <= 8; ++e) {
    Field field = makeField(e);
    for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(field.size()); ++x)
      for (std::uint32_t y = 0; y < static_cast<std::uint32_t>(field.size()); y += (e > 6 ? 7 : 1))
        REQUIRE(fieldMul(field, x, y) == oracle::schoolbookMulMod(x, y, field.modulus));
  }
  CHECK(kindOf([&] { fieldMul(gf4, 4, 1); }) == ErrorKind::InvalidElement);
}

TEST_CASE("field axioms exhaustive for e <= 4") {
  for (int e = 1; e <= 4; ++e) {
    Field field = makeField(e);
    const auto n = static_cast<std::uint32_t>(field.size());
    for (std::uint32_t x = 0; x < n; ++x) {
      CHECK(fieldMul(field, x, 1) == x);
      if (x) CHECK(fieldPow(field, x, n - 1) == 1);
      for (std::uint32_t y = 0; y < n; ++y) {
        REQUIRE(fieldMul(field, x, y) == fieldMul(field, y, x));
        for (std::uint32_t z = 0; z < n; ++z) {
          REQUIRE(fieldMul(field, fieldMul(field, x, y), z) == fieldMul(field, x, fieldMul(field, y, z)));
          REQUIRE(fieldMul(field, x, y ^ z) == (fieldMul(field, x, y) ^ fieldMul(field, x, z)));
        }
      }
    }
  }
}

TEST_CASE("fieldPow matches repeated multiplication") {
  Field gf16 = makeField(4);
  for (std::uint32_t x = 0; x < 16; ++x) {
    std::uint32_t acc = 1;
    for (int n = 0; n < 20; ++n) {
      CHECK(fieldPow(gf16, x, n) == acc);
      acc = fieldMul(gf16, acc, x);
    }
  }
}

TEST_CASE("gold and inverse tables") {
  // Cubes in GF(4): 0 -> 0 and every nonzero element -> 1.
  Field gf4 = makeField(2);
  std::vector<Element> cubes;
  for (std::uint32_t x = 0; x < 4; ++x) cubes.push_back(static_cast<Element>(fieldPow(gf4, x, 3)));
  CHECK(cubes == std::vector<Element>{0, 1, 1, 1});
  const auto gold = goldTable(2, 1);
  CHECK(std::vector<Element>(gold.values().begin(), gold.values().end()) == cubes);

  CHECK(goldTable(3, 1)(2) == 3);
  for (int e = 2; e <= 8; ++e)
    for (int alpha = 1; alpha < e; ++alpha) {
      auto f = goldTable(e, alpha);
      CHECK(f(0) == 0);
      CHECK(f(1) == 1);
      CHECK(f.domain() == Group(std::vector<int>(e, 2)));
    }
  CHECK(kindOf([] { goldTable(3, 0); }) == ErrorKind::InvalidParameter);
  CHECK(kindOf([] { goldTable(3, 3); }) == ErrorKind::InvalidParameter);
  CHECK(kindOf([] { goldTable(9, 1); }) == ErrorKind::InvalidParameter);

  for (int e = 1; e <= 8; ++e) {
    auto inv = inverseTable(e);
    CHECK(isBijection(inv));
    Field field = makeField(e);
    for (std::uint32_t x = 1; x < static_cast<std::uint32_t>(field.size()); ++x)
      CHECK(fieldMul(field, x, static_cast<std::uint32_t>(inv(static_cast<Element>(x)))) == 1);
  }
}

TEST_CASE("gold table semi-planar iff gcd(alpha, e) = 1 for e <= 5") {
  for (int e = 2; e <= 5; ++e)
    for (int alpha = 1; alpha < e; ++alpha) {
      auto f = goldTable(e, alpha);
      oracle::NaiveGroup g{std::vector<int>(e, 2)};
      std::vector<int> values(f.values().begin(), f.values().end());
      const bool expected = std::gcd(alpha, e) == 1;
      CHECK(isSemiPlanar(f).isSemiPlanar == expected);
      CHECK(oracle::semiPlanar(g, g, values) == expected);
    }
}
