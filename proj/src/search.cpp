#include "sbp/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "sbp/error.hpp"

namespace sbp {

namespace {

struct ShardOutcome {
  std::vector<std::vector<Element>> found;
  long long visited = 0;
  long long nodes = 0;
};

// Depth-first enumeration below a fixed prefix. Difference counts live in
// counts[a * k + y]; every increment is logged so backtracking can undo it.
class Enumerator {
 public:
  Enumerator(const Group& G, const Group& H, const SearchOptions& opts)
      : G_(G), H_(H), opts_(opts), k_(G.order()), values_(k_, -1), counts_(k_ * k_, 0), fiber_(k_, 0) {
    addTable_.resize(k_ * k_);
    subTableH_.resize(k_ * k_);
    for (Element x = 0; x < k_; ++x)
      for (Element y = 0; y < k_; ++y) {
        addTable_[x * k_ + y] = G_.add(x, y);
        subTableH_[x * k_ + y] = H_.sub(x, y);
      }
    fiberLimit_ = (opts_.useFiberLimit && k_ > 4) ? k_ / 2 : k_;
  }

  ShardOutcome run(const std::vector<Element>& prefix) {
    ShardOutcome out;
    out_ = &out;
    std::vector<std::size_t> marks;
    bool alive = true;
    for (std::size_t x = 0; x < prefix.size() && alive; ++x) {
      ++out.nodes;
      marks.push_back(log_.size());
      alive = assign(static_cast<Element>(x), prefix[x]);
      if (!alive) unassign(static_cast<Element>(x), marks.back());
    }
    if (alive) descend(static_cast<Element>(prefix.size()));
    for (std::size_t x = marks.size(); x-- > 0;)
      if (values_[x] >= 0) unassign(static_cast<Element>(x), marks[x]);
    return out;
  }

 private:
  bool assign(Element x, Element v) {
    values_[x] = v;
    bool ok = ++fiber_[v] <= fiberLimit_;
    if (!opts_.usePruning) return ok;
    for (Element a = 1; a < k_; ++a) {
      const Element forward = addTable_[x * k_ + a];
      if (forward < x) ok &= bump(a, subTableH_[values_[forward] * k_ + v]);
      const Element backward = subG(x, a);
      if (backward < x) ok &= bump(a, subTableH_[v * k_ + values_[backward]]);
    }
    return ok;
  }

  void unassign(Element x, std::size_t mark) {
    while (log_.size() > mark) {
      --counts_[log_.back()];
      log_.pop_back();
    }
    --fiber_[values_[x]];
    values_[x] = -1;
  }

  bool bump(Element a, Element y) {
    const int slot = a * k_ + y;
    log_.push_back(slot);
    return ++counts_[slot] <= 2;
  }

  Element subG(Element x, Element a) const { return addTable_[x * k_ + G_.neg(a)]; }

  void descend(Element x) {
    if (x == k_) {
      ++out_->visited;
      FuncTable f(G_, H_, values_);
      if (isSemiPlanar(f).isSemiPlanar) out_->found.push_back(values_);
      return;
    }
    for (Element v = 0; v < k_; ++v) {
      ++out_->nodes;
      const std::size_t mark = log_.size();
      if (assign(x, v)) descend(x + 1);
      unassign(x, mark);
    }
  }

  const Group& G_;
  const Group& H_;
  const SearchOptions& opts_;
  int k_;
  int fiberLimit_;
  std::vector<Element> values_;
  std::vector<int> counts_;
  std::vector<int> fiber_;
  std::vector<int> log_;
  std::vector<Element> addTable_;
  std::vector<Element> subTableH_;
  ShardOutcome* out_ = nullptr;
};

}  // namespace

SearchResult exhaustiveSearch(const Group& G, const Group& H, const SearchOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  if (G.order() != H.order()) throw Error(ErrorKind::InvalidInput, "search needs |G| = |H|");
  const int k = G.order();
  if (k > opts.maxOrder && !opts.allowLarge)
    throw Error(ErrorKind::SearchBudget, "order " + std::to_string(k) + " exceeds the search budget of " +
                                             std::to_string(opts.maxOrder) + "; pass allowLarge to override");

  // Shards fix f(0) (to 0 when normalized) and f(1), in lexicographic order.
  std::vector<std::vector<Element>> shards;
  const std::vector<Element> firstValues =
      opts.fixZeroAtZero ? std::vector<Element>{0} : [k] {
        std::vector<Element> all(k);
        for (Element v = 0; v < k; ++v) all[v] = v;
        return all;
      }();
  for (Element v0 : firstValues)
    for (Element v1 = 0; v1 < k; ++v1) shards.push_back({v0, v1});

  std::vector<ShardOutcome> outcomes(shards.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    Enumerator enumerator(G, H, opts);
    for (std::size_t i = next++; i < shards.size(); i = next++) outcomes[i] = enumerator.run(shards[i]);
  };
  const int workers = std::clamp(opts.workers, 1, static_cast<int>(shards.size()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  SearchResult result;
  for (auto& outcome : outcomes) {
    result.totalCandidatesVisited += outcome.visited;
    result.nodesExpanded += outcome.nodes;
    result.count += static_cast<long long>(outcome.found.size());
    for (auto& values : outcome.found) {
      if (opts.maxResults && static_cast<int>(result.found.size()) >= *opts.maxResults) break;
      result.found.emplace_back(G, H, std::move(values));
    }
  }
  result.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return result;
}

std::vector<std::pair<FuncTable, SplitKind>> searchAndClassify(const Group& G, const Group& H,
                                                               const SearchOptions& opts) {
  std::vector<std::pair<FuncTable, SplitKind>> out;
  for (const FuncTable& f : exhaustiveSearch(G, H, opts).found) {
    Structure s(f);
    auto partition = components(s);
    out.emplace_back(f, classifySplit(s, partition, f).kind);
  }
  return out;
}

Z6Report verifyZ6NonExistence(bool usePruning, bool useFiberLimit, int workers) {
  const Group z6({6});
  SearchOptions opts;
  opts.usePruning = usePruning;
  opts.useFiberLimit = useFiberLimit;
  opts.workers = workers;
  Z6Report report;
  opts.fixZeroAtZero = true;
  report.normalized = exhaustiveSearch(z6, z6, opts);
  opts.fixZeroAtZero = false;
  report.unnormalized = exhaustiveSearch(z6, z6, opts);
  return report;
}

bool verifyZ6NonExistence() { return verifyZ6NonExistence(false, false).holds(); }

std::vector<FuncTable> orbitReduce(const std::vector<FuncTable>& results, const Group& G, const Group& H) {
  const auto autG = automorphisms(G);
  const auto autH = automorphisms(H);
  std::set<std::vector<Element>> representatives;
  for (const FuncTable& f : results) {
    if (!(f.domain() == G) || !(f.codomain() == H))
      throw Error(ErrorKind::InvalidInput, "orbitReduce input over a different group pair");
    std::vector<Element> least(f.values().begin(), f.values().end());
    std::vector<Element> image(G.order());
    for (const auto& phi : autG)
      for (const auto& psi : autH)
        for (Element c = 0; c < G.order(); ++c)
          for (Element d = 0; d < H.order(); ++d) {
            for (Element x = 0; x < G.order(); ++x) image[x] = H.add(psi[f(G.add(phi[x], c))], d);
            if (image < least) least = image;
          }
    representatives.insert(std::move(least));
  }
  std::vector<FuncTable> out;
  for (const auto& values : representatives) out.emplace_back(G, H, values);
  return out;
}

}  // namespace sbp
