#pragma once

#include <chrono>
#include <optional>
#include <utility>
#include <vector>

#include "sbp/splitting.hpp"

namespace sbp {

struct SearchOptions {
  /// Only enumerate tables with f(0) = 0. Translation by d in H is a bijection
  /// onto the full solution set, so full count = |H| * normalized count.
  bool fixZeroAtZero = true;
  /// Backtrack once some difference value is hit more than twice.
  bool usePruning = true;
  /// For k > 4, backtrack once some partial fiber exceeds k/2.
  bool useFiberLimit = true;
  /// Truncates the reported list only; count and visited cover the full search.
  std::optional<int> maxResults;
  int workers = 1;
  /// Largest order searched without allowLarge.
  int maxOrder = 8;
  bool allowLarge = false;
};

struct SearchResult {
  long long totalCandidatesVisited = 0;  ///< complete tables reached
  long long nodesExpanded = 0;           ///< partial assignments tried, leaves included
  std::vector<FuncTable> found;          ///< lexicographic order
  long long count = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Depth-first assignment of f(0), f(1), ... in index order. Every leaf is
/// checked with isSemiPlanar, so the found set never depends on the pruning flags.
/// Throws InvalidInput when |G| != |H| and SearchBudget when k exceeds the budget.
SearchResult exhaustiveSearch(const Group& G, const Group& H, const SearchOptions& opts = {});

std::vector<std::pair<FuncTable, SplitKind>> searchAndClassify(const Group& G, const Group& H,
                                                               const SearchOptions& opts = {});

struct Z6Report {
  SearchResult normalized;
  SearchResult unnormalized;
  bool holds() const { return normalized.count == 0 && unnormalized.count == 0; }
};

/// Searches Z6 with and without f(0) = 0 under the given pruning flags.
Z6Report verifyZ6NonExistence(bool usePruning, bool useFiberLimit, int workers = 1);
/// Unpruned run: 6^5 and 6^6 candidates, both expected to yield nothing.
bool verifyZ6NonExistence();

/// One lexicographically least representative per orbit under
/// x -> psi(f(phi(x) + c)) + d, returned sorted. G and H must be cyclic.
std::vector<FuncTable> orbitReduce(const std::vector<FuncTable>& results, const Group& G, const Group& H);

}  // namespace sbp
