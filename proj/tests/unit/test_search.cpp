#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "sbp/error.hpp"
#include "sbp/report.hpp"
#include "sbp/search.hpp"

using namespace sbp;

namespace {

std::vector<std::vector<Element>> tables(const SearchResult& r) {
  std::vector<std::vector<Element>> out;
  for (const auto& f : r.found) out.emplace_back(f.values().begin(), f.values().end());
  return out;
}

// Independent enumeration with the naive semi-planarity test.
std::vector<std::vector<int>> bruteForce(const std::vector<int>& factors, bool fixZero) {
  oracle::NaiveGroup g{factors};
  std::vector<std::vector<int>> out;
  oracle::forEachTable(g.order(), g.order(), fixZero, [&](const std::vector<int>& t) {
    if (oracle::semiPlanar(g, g, t)) out.push_back(t);
  });
  return out;
}

SearchOptions options(bool normalized, bool prune, bool fiber) {
  SearchOptions o;
  o.fixZeroAtZero = normalized;
  o.usePruning = prune;
  o.useFiberLimit = fiber;
  return o;
}

const std::vector<std::vector<int>> kUpTo6 = {{2}, {3}, {4}, {2, 2}, {5}, {6}, {2, 3}, {3, 2}};

}  // namespace

TEST_CASE("exhaustiveSearch examples") {
  Group z6({6}), z2({2}), v4({2, 2}), z4({4});
  CHECK(exhaustiveSearch(z6, z6).count == 0);

  auto r2 = exhaustiveSearch(z2, z2);
  CHECK(r2.count == 2);
  CHECK(tables(r2) == std::vector<std::vector<Element>>{{0, 0}, {0, 1}});

  auto rv4 = exhaustiveSearch(v4, v4);
  CHECK(std::find(rv4.found.begin(), rv4.found.end(), goldTable(2, 1)) != rv4.found.end());
  // Frozen from the brute-force oracle over 4^3 normalized tables.
  CHECK(rv4.count == 48);
  CHECK(static_cast<long>(bruteForce({2, 2}, true).size()) == 48);

  auto rz4 = exhaustiveSearch(z4, z4);
  CHECK(rz4.count == 8);
  CHECK(static_cast<long>(bruteForce({4}, true).size()) == 8);
  auto unprunedZ4 = exhaustiveSearch(z4, z4, options(true, false, false));
  CHECK(tables(unprunedZ4) == tables(rz4));
  CHECK(unprunedZ4.totalCandidatesVisited == 64);
}

TEST_CASE("search equals the brute-force oracle under every flag combination, order <= 6") {
  for (const auto& factors : kUpTo6) {
    Group g(factors);
    for (bool normalized : {true, false}) {
      auto expected = bruteForce(factors, normalized);
      for (bool prune : {true, false})
        for (bool fiber : {true, false}) {
          auto result = exhaustiveSearch(g, g, options(normalized, prune, fiber));
          auto found = tables(result);
          REQUIRE(found.size() == expected.size());
          for (std::size_t i = 0; i < found.size(); ++i)
            REQUIRE(std::vector<int>(found[i].begin(), found[i].end()) == expected[i]);
          CHECK(result.count == static_cast<long long>(expected.size()));
          if (!prune && !fiber) {
            long long all = 1;
            for (int i = normalized ? 1 : 0; i < g.order(); ++i) all *= g.order();
            CHECK(result.totalCandidatesVisited == all);
          }
        }
    }
  }
}

TEST_CASE("found tables pass isSemiPlanar and unfound tables fail it") {
  for (const auto& factors : std::vector<std::vector<int>>{{2}, {4}, {2, 2}, {3}}) {
    Group g(factors);
    auto found = tables(exhaustiveSearch(g, g, options(false, true, true)));
    oracle::forEachTable(g.order(), g.order(), false, [&](const std::vector<int>& t) {
      const bool listed = std::binary_search(found.begin(), found.end(), std::vector<Element>(t.begin(), t.end()));
      REQUIRE(listed == isSemiPlanar(FuncTable(g, g, t)).isSemiPlanar);
    });
  }
  Group z6({6});
  std::mt19937 rng(17);
  std::uniform_int_distribution<Element> pick(0, 5);
  for (int i = 0; i < 2000; ++i) {
    std::vector<Element> v(6);
    for (auto& x : v) x = pick(rng);
    CHECK_FALSE(isSemiPlanar(FuncTable(z6, z6, v)).isSemiPlanar);
  }
}

TEST_CASE("normalized count times |H| equals the unnormalized count") {
  for (const auto& factors : std::vector<std::vector<int>>{{2}, {4}, {2, 2}, {6}, {8}}) {
    Group g(factors);
    auto normalized = exhaustiveSearch(g, g, options(true, true, true));
    auto full = exhaustiveSearch(g, g, options(false, true, true));
    CHECK(normalized.count * g.order() == full.count);
    // Each full result is a d-translate of exactly one normalized result.
    for (const auto& f : full.found) {
      std::vector<Element> shifted(f.values().begin(), f.values().end());
      const Element d = g.neg(shifted[0]);
      for (auto& y : shifted) y = g.add(y, d);
      CHECK(std::find(normalized.found.begin(), normalized.found.end(), FuncTable(g, g, shifted)) !=
            normalized.found.end());
    }
  }
}

TEST_CASE("fiber-limit pruning keeps every result over Z6 and Z8") {
  for (int k : {6, 8}) {
    Group g({k});
    auto with = exhaustiveSearch(g, g, options(true, false, true));
    auto without = exhaustiveSearch(g, g, options(true, false, false));
    CHECK(tables(with) == tables(without));
    CHECK(with.totalCandidatesVisited < without.totalCandidatesVisited);
  }
}

TEST_CASE("pruning reduces the visited count") {
  Group z6({6});
  auto pruned = exhaustiveSearch(z6, z6, options(false, true, true));
  auto plain = exhaustiveSearch(z6, z6, options(false, false, false));
  CHECK(plain.totalCandidatesVisited == 46656);
  CHECK(pruned.totalCandidatesVisited < plain.totalCandidatesVisited);
  CHECK(pruned.nodesExpanded < plain.nodesExpanded);
}

TEST_CASE("search reports are identical for any worker count") {
  for (const auto& factors : std::vector<std::vector<int>>{{6}, {2, 2}, {4}, {8}, {2, 4}}) {
    Group g(factors);
    for (bool normalized : {true, false}) {
      std::string reference;
      for (int workers : {1, 2, 3, 8, 64}) {
        auto opts = options(normalized, true, true);
        opts.workers = workers;
        auto r = exhaustiveSearch(g, g, opts);
        auto text = toJson(r, g, normalized, false).dump() + std::to_string(r.nodesExpanded);
        if (reference.empty()) reference = text;
        CHECK(text == reference);
      }
    }
  }
}

TEST_CASE("search budget and result truncation") {
  Group z6({6}), z9({9}), z4({4});
  CHECK_THROWS_AS(exhaustiveSearch(z9, z9), Error);
  try {
    exhaustiveSearch(z9, z9);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SearchBudget);
  }
  SearchOptions tight;
  tight.maxOrder = 4;
  CHECK_THROWS_AS(exhaustiveSearch(z6, z6, tight), Error);
  tight.allowLarge = true;
  CHECK(exhaustiveSearch(z6, z6, tight).count == 0);
  CHECK_THROWS_AS(exhaustiveSearch(z4, Group({2}), SearchOptions{}), Error);

  Group v4({2, 2});
  SearchOptions capped;
  capped.maxResults = 5;
  auto r = exhaustiveSearch(v4, v4, capped);
  CHECK(r.found.size() == 5);
  CHECK(r.count == 48);
  auto all = exhaustiveSearch(v4, v4);
  CHECK(std::equal(r.found.begin(), r.found.end(), all.found.begin()));
}

TEST_CASE("searchAndClassify") {
  Group v4({2, 2}), z2({2}), z6({6});
  auto classified = searchAndClassify(v4, v4);
  CHECK(classified.size() == 48);
  bool sawGold = false;
  for (const auto& [f, kind] : classified) {
    if (f == goldTable(2, 1)) {
      sawGold = true;
      CHECK(kind == SplitKind::CaseI);
      CHECK(components(Structure(f)).componentCount == 2);
    }
  }
  CHECK(sawGold);
  auto k2 = searchAndClassify(z2, z2);
  REQUIRE(k2.size() == 2);
  for (const auto& [f, kind] : k2) CHECK(kind != SplitKind::Connected);
  CHECK(searchAndClassify(z6, z6).empty());
}

TEST_CASE("verifyZ6NonExistence") {
  CHECK(verifyZ6NonExistence());
  auto plain = verifyZ6NonExistence(false, false);
  CHECK(plain.holds());
  CHECK(plain.normalized.totalCandidatesVisited == 7776);
  CHECK(plain.unnormalized.totalCandidatesVisited == 46656);
  auto pruned = verifyZ6NonExistence(true, true, 4);
  CHECK(pruned.holds());
  CHECK(pruned.normalized.totalCandidatesVisited < 7776);
}

TEST_CASE("orbitReduce") {
  Group z2({2});
  std::vector<FuncTable> all = {FuncTable(z2, z2, {0, 0}), FuncTable(z2, z2, {0, 1}), FuncTable(z2, z2, {1, 1}),
                                FuncTable(z2, z2, {1, 0})};
  auto reps = orbitReduce(all, z2, z2);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0] == FuncTable(z2, z2, {0, 0}));
  CHECK(reps[1] == FuncTable(z2, z2, {0, 1}));

  Group z4({4});
  FuncTable single(z4, z4, {0, 0, 0, 2});
  CHECK(orbitReduce({single}, z4, z4) == std::vector<FuncTable>{single});

  Group v4({2, 2});
  try {
    orbitReduce({goldTable(2, 1)}, v4, v4);
    FAIL("expected unsupported-group");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedGroup);
  }

  // Every member's orbit representative appears, and representatives are pairwise inequivalent.
  auto full = exhaustiveSearch(z4, z4, options(false, true, true)).found;
  auto reduced = orbitReduce(full, z4, z4);
  CHECK(reduced.size() < full.size());
  CHECK(std::is_sorted(reduced.begin(), reduced.end(), [](const FuncTable& a, const FuncTable& b) {
    return std::lexicographical_compare(a.values().begin(), a.values().end(), b.values().begin(), b.values().end());
  }));
  for (const auto& f : full) CHECK(orbitReduce({f}, z4, z4).size() == 1);
  for (const auto& r : reduced) CHECK(orbitReduce({r}, z4, z4)[0] == r);
  CHECK(orbitReduce(reduced, z4, z4).size() == reduced.size());
}
