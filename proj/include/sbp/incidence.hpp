#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "sbp/functions.hpp"

namespace sbp {

/// Point (x, y) has id x * |H| + y.
struct PointId {
  int value;
  friend auto operator<=>(const PointId&, const PointId&) = default;
};

/// Line L(a, b) has id a * |H| + b.
struct LineId {
  int value;
  friend auto operator<=>(const LineId&, const LineId&) = default;
};

/// The incidence structure S(G, H; f): (x, y) lies on L(a, b) iff y = f(x - a) + b.
/// Incidence is evaluated on demand from the table.
class Structure {
 public:
  /// Requires |G| = |H|.
  explicit Structure(FuncTable f);

  const FuncTable& function() const noexcept { return f_; }
  const Group& G() const noexcept { return f_.domain(); }
  const Group& H() const noexcept { return f_.codomain(); }
  /// Points per line and lines per point.
  int k() const noexcept { return f_.domain().order(); }
  int pointCount() const noexcept { return f_.domain().order() * f_.codomain().order(); }
  int lineCount() const noexcept { return pointCount(); }

  PointId point(Element x, Element y) const;
  LineId line(Element a, Element b) const;
  Element pointX(PointId p) const { return p.value / H().order(); }
  Element pointY(PointId p) const { return p.value % H().order(); }
  Element lineA(LineId l) const { return l.value / H().order(); }
  Element lineB(LineId l) const { return l.value % H().order(); }

  void check(PointId p) const;
  void check(LineId l) const;

  bool isIncident(PointId p, LineId l) const;
  std::vector<PointId> pointsOnLine(LineId l) const;
  std::vector<LineId> linesThroughPoint(PointId p) const;
  /// Throw InvalidPair for identical arguments.
  std::vector<LineId> commonLines(PointId p1, PointId p2) const;
  std::vector<PointId> commonPoints(LineId l1, LineId l2) const;

 private:
  FuncTable f_;
};

struct PairFailure {
  enum class Kind { Points, Lines };
  Kind kind;
  int first;
  int second;
  int count;
};

struct AxiomReport {
  bool isSemiBiplane = false;
  int v = 0;
  int k = 0;
  int components = 0;
  std::optional<PairFailure> failure;  ///< first pair (points before lines) sharing a count other than 0 or 2
};

/// Both 0-or-2 axioms over all pairs, then connectivity. `workers` shards the
/// point and line pairs; the report does not depend on it.
AxiomReport verifyAxioms(const Structure& s, int workers = 1);

struct ComponentPartition {
  std::vector<int> componentOfPoint;
  std::vector<int> componentOfLine;
  int componentCount = 0;
};

/// Connected components of the incidence graph, labelled in order of their
/// smallest line id, so L(0,0) is always in component 0.
ComponentPartition components(const Structure& s);

/// Undirected simple graph with an adjacency list per vertex.
struct Graph {
  std::vector<std::vector<int>> adjacency;

  int vertexCount() const noexcept { return static_cast<int>(adjacency.size()); }
  long edgeCount() const;
  void addEdge(int u, int v);
};

struct ComponentGraph {
  Graph graph;
  std::vector<PointId> points;  ///< vertices 0..points.size()-1
  std::vector<LineId> lines;    ///< vertices points.size().. in line-id order
};

/// Bipartite incidence graph of one component. Throws InvalidLabel for unknown labels.
ComponentGraph componentGraph(const Structure& s, const ComponentPartition& partition, int label);

/// The n-dimensional hypercube: vertices are n-bit masks joined when they differ in one bit.
Graph hypercubeGraph(int n);
/// Backtracking isomorphism test against Q_n with degree and distance pruning.
bool isHypercubeGraph(const Graph& graph, int n);

/// DOT rendering of the incidence graph; byte-stable for a given input.
std::string exportDot(const Structure& s, const ComponentPartition* partition = nullptr);

}  // namespace sbp
