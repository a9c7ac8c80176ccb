#include "sbp/incidence.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <sstream>
#include <thread>

#include "sbp/error.hpp"

namespace sbp {

Structure::Structure(FuncTable f) : f_(std::move(f)) {
  if (f_.domain().order() != f_.codomain().order())
    throw Error(ErrorKind::InvalidInput, "structure needs |G| = |H|");
}

PointId Structure::point(Element x, Element y) const {
  G().check(x);
  H().check(y);
  return PointId{x * H().order() + y};
}

LineId Structure::line(Element a, Element b) const {
  G().check(a);
  H().check(b);
  return LineId{a * H().order() + b};
}

void Structure::check(PointId p) const {
  if (p.value < 0 || p.value >= pointCount())
    throw Error(ErrorKind::InvalidId, "point id " + std::to_string(p.value) + " out of range");
}

void Structure::check(LineId l) const {
  if (l.value < 0 || l.value >= lineCount())
    throw Error(ErrorKind::InvalidId, "line id " + std::to_string(l.value) + " out of range");
}

bool Structure::isIncident(PointId p, LineId l) const {
  check(p);
  check(l);
  return pointY(p) == H().add(f_(G().sub(pointX(p), lineA(l))), lineB(l));
}

std::vector<PointId> Structure::pointsOnLine(LineId l) const {
  check(l);
  const Element a = lineA(l), b = lineB(l);
  std::vector<PointId> out;
  out.reserve(k());
  for (Element x = 0; x < G().order(); ++x) out.push_back(PointId{x * H().order() + H().add(f_(G().sub(x, a)), b)});
  return out;
}

std::vector<LineId> Structure::linesThroughPoint(PointId p) const {
  check(p);
  const Element x = pointX(p), y = pointY(p);
  std::vector<LineId> out;
  out.reserve(k());
  for (Element a = 0; a < G().order(); ++a) out.push_back(LineId{a * H().order() + H().sub(y, f_(G().sub(x, a)))});
  return out;
}

std::vector<LineId> Structure::commonLines(PointId p1, PointId p2) const {
  if (p1 == p2) throw Error(ErrorKind::InvalidPair, "commonLines needs distinct points");
  auto l1 = linesThroughPoint(p1);
  auto l2 = linesThroughPoint(p2);
  std::vector<LineId> out;
  std::set_intersection(l1.begin(), l1.end(), l2.begin(), l2.end(), std::back_inserter(out));
  return out;
}

std::vector<PointId> Structure::commonPoints(LineId l1, LineId l2) const {
  if (l1 == l2) throw Error(ErrorKind::InvalidPair, "commonPoints needs distinct lines");
  auto p1 = pointsOnLine(l1);
  auto p2 = pointsOnLine(l2);
  std::vector<PointId> out;
  std::set_intersection(p1.begin(), p1.end(), p2.begin(), p2.end(), std::back_inserter(out));
  return out;
}

namespace {

struct PairHit {
  int first;
  int second;
  int count;
};

// First pair (i, j), i < j, whose count of shared neighbours is not 0 or 2.
// `neighbours(i)` lists the other side's vertices incident with i and
// `back(n)` lists the vertices incident with n on the original side.
std::optional<PairHit> firstBadPair(int n, int workers, const std::function<std::vector<int>(int)>& neighbours,
                                    const std::function<std::vector<int>(int)>& back) {
  workers = std::max(1, std::min(workers, n));
  std::vector<std::optional<PairHit>> best(workers);
  auto scan = [&](int w) {
    std::vector<int> counts(n, 0);
    const int lo = static_cast<int>(static_cast<long>(n) * w / workers);
    const int hi = static_cast<int>(static_cast<long>(n) * (w + 1) / workers);
    for (int i = lo; i < hi; ++i) {
      std::fill(counts.begin() + i, counts.end(), 0);
      for (int m : neighbours(i))
        for (int j : back(m))
          if (j > i) ++counts[j];
      for (int j = i + 1; j < n; ++j) {
        if (counts[j] != 0 && counts[j] != 2) {
          best[w] = PairHit{i, j, counts[j]};
          return;
        }
      }
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
  }
  // Shards cover increasing ranges of i, so the first hit in shard order is canonical.
  for (auto& hit : best)
    if (hit) return hit;
  return std::nullopt;
}

std::vector<int> ids(const std::vector<PointId>& v) {
  std::vector<int> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](PointId p) { return p.value; });
  return out;
}

std::vector<int> ids(const std::vector<LineId>& v) {
  std::vector<int> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](LineId l) { return l.value; });
  return out;
}

}  // namespace

AxiomReport verifyAxioms(const Structure& s, int workers) {
  AxiomReport report;
  report.v = s.pointCount();
  report.k = s.k();
  auto pointsOn = [&](int l) { return ids(s.pointsOnLine(LineId{l})); };
  auto linesThrough = [&](int p) { return ids(s.linesThroughPoint(PointId{p})); };

  if (auto hit = firstBadPair(s.pointCount(), workers, linesThrough, pointsOn)) {
    report.failure = PairFailure{PairFailure::Kind::Points, hit->first, hit->second, hit->count};
  } else if (auto hit = firstBadPair(s.lineCount(), workers, pointsOn, linesThrough)) {
    report.failure = PairFailure{PairFailure::Kind::Lines, hit->first, hit->second, hit->count};
  }
  report.components = components(s).componentCount;
  report.isSemiBiplane = !report.failure && report.components == 1;
  return report;
}

ComponentPartition components(const Structure& s) {
  ComponentPartition part;
  part.componentOfPoint.assign(s.pointCount(), -1);
  part.componentOfLine.assign(s.lineCount(), -1);
  // Seeding from lines in id order gives labels ordered by smallest line id.
  for (int seed = 0; seed < s.lineCount(); ++seed) {
    if (part.componentOfLine[seed] >= 0) continue;
    const int label = part.componentCount++;
    std::deque<LineId> queue{LineId{seed}};
    part.componentOfLine[seed] = label;
    while (!queue.empty()) {
      LineId l = queue.front();
      queue.pop_front();
      for (PointId p : s.pointsOnLine(l)) {
        if (part.componentOfPoint[p.value] >= 0) continue;
        part.componentOfPoint[p.value] = label;
        for (LineId m : s.linesThroughPoint(p)) {
          if (part.componentOfLine[m.value] >= 0) continue;
          part.componentOfLine[m.value] = label;
          queue.push_back(m);
        }
      }
    }
  }
  return part;
}

long Graph::edgeCount() const {
  long degrees = 0;
  for (const auto& row : adjacency) degrees += static_cast<long>(row.size());
  return degrees / 2;
}

void Graph::addEdge(int u, int v) {
  adjacency[u].push_back(v);
  adjacency[v].push_back(u);
}

ComponentGraph componentGraph(const Structure& s, const ComponentPartition& partition, int label) {
  if (label < 0 || label >= partition.componentCount)
    throw Error(ErrorKind::InvalidLabel, "no component with label " + std::to_string(label));
  ComponentGraph out;
  std::vector<int> pointVertex(s.pointCount(), -1);
  for (int p = 0; p < s.pointCount(); ++p) {
    if (partition.componentOfPoint[p] != label) continue;
    pointVertex[p] = static_cast<int>(out.points.size());
    out.points.push_back(PointId{p});
  }
  for (int l = 0; l < s.lineCount(); ++l)
    if (partition.componentOfLine[l] == label) out.lines.push_back(LineId{l});
  out.graph.adjacency.resize(out.points.size() + out.lines.size());
  const int offset = static_cast<int>(out.points.size());
  for (std::size_t i = 0; i < out.lines.size(); ++i)
    for (PointId p : s.pointsOnLine(out.lines[i])) out.graph.addEdge(offset + static_cast<int>(i), pointVertex[p.value]);
  for (auto& row : out.graph.adjacency) std::sort(row.begin(), row.end());
  return out;
}

Graph hypercubeGraph(int n) {
  Graph g;
  if (n < 0 || n > 20) throw Error(ErrorKind::InvalidParameter, "hypercube dimension out of range");
  g.adjacency.resize(std::size_t{1} << n);
  for (int v = 0; v < (1 << n); ++v)
    for (int bit = 0; bit < n; ++bit) g.adjacency[v].push_back(v ^ (1 << bit));
  for (auto& row : g.adjacency) std::sort(row.begin(), row.end());
  return g;
}

bool isHypercubeGraph(const Graph& graph, int n) {
  if (n < 1 || n > 20) return false;
  const int size = 1 << n;
  if (graph.vertexCount() != size) return false;
  for (const auto& row : graph.adjacency) {
    if (static_cast<int>(row.size()) != n) return false;
    for (int u : row)
      if (u < 0 || u >= size) return false;
  }

  // BFS from vertex 0 gives the visiting order and distances. Q_n is vertex
  // transitive, so 0 may be pinned to the all-zero mask, after which an image
  // must sit at Hamming weight equal to its distance from 0.
  std::vector<int> dist(size, -1), order;
  dist[0] = 0;
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int u : graph.adjacency[order[i]])
      if (dist[u] < 0) {
        dist[u] = dist[order[i]] + 1;
        order.push_back(u);
      }
  if (static_cast<int>(order.size()) != size) return false;

  std::vector<std::vector<char>> adjacent(size, std::vector<char>(size, 0));
  for (int v = 0; v < size; ++v) {
    for (int u : graph.adjacency[v]) {
      if (u == v || adjacent[v][u]) return false;  // loops and parallel edges
      adjacent[v][u] = 1;
    }
  }

  std::vector<int> image(size, -1);
  std::vector<char> used(size, 0);

  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const int v = order[depth];
    // Some already-mapped neighbour exists for every vertex after the root.
    int anchor = -1;
    for (int u : graph.adjacency[v])
      if (image[u] >= 0) {
        anchor = u;
        break;
      }
    std::vector<int> candidates;
    if (anchor < 0) {
      candidates.push_back(0);
    } else {
      for (int bit = 0; bit < n; ++bit) candidates.push_back(image[anchor] ^ (1 << bit));
    }
    for (int c : candidates) {
      if (used[c] || std::popcount(static_cast<unsigned>(c)) != dist[v]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const int w = order[i];
        const bool cubeAdjacent = std::popcount(static_cast<unsigned>(c ^ image[w])) == 1;
        ok = cubeAdjacent == static_cast<bool>(adjacent[v][w]);
      }
      if (!ok) continue;
      image[v] = c;
      used[c] = 1;
      if (extend(depth + 1)) return true;
      image[v] = -1;
      used[c] = 0;
    }
    return false;
  };
  return extend(0);
}

std::string exportDot(const Structure& s, const ComponentPartition* partition) {
  static constexpr const char* kPalette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "cyan", "gray"};
  auto color = [&](int label) { return kPalette[label % (sizeof(kPalette) / sizeof(kPalette[0]))]; };
  std::ostringstream out;
  out << "graph sbp {\n";
  for (int p = 0; p < s.pointCount(); ++p) {
    PointId id{p};
    out << "  p_" << s.pointX(id) << '_' << s.pointY(id) << " [shape=circle";
    if (partition) out << ", color=" << color(partition->componentOfPoint[p]);
    out << "];\n";
  }
  for (int l = 0; l < s.lineCount(); ++l) {
    LineId id{l};
    out << "  L_" << s.lineA(id) << '_' << s.lineB(id) << " [shape=box";
    if (partition) out << ", color=" << color(partition->componentOfLine[l]);
    out << "];\n";
  }
  for (int l = 0; l < s.lineCount(); ++l) {
    LineId id{l};
    for (PointId p : s.pointsOnLine(id))
      out << "  L_" << s.lineA(id) << '_' << s.lineB(id) << " -- p_" << s.pointX(p) << '_' << s.pointY(p) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sbp
