#include "sbp/splitting.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "sbp/error.hpp"

namespace sbp {

const char* to_string(SplitKind kind) {
  switch (kind) {
    case SplitKind::Connected: return "connected";
    case SplitKind::CaseI: return "case-i";
    case SplitKind::CaseII: return "case-ii";
  }
  return "unknown";
}

namespace {

void requireSplit(const ComponentPartition& partition) {
  if (partition.componentCount != 2)
    throw Error(ErrorKind::NotSplit,
                "structure has " + std::to_string(partition.componentCount) + " component(s), expected 2");
}

bool contains(const ElementSet& set, Element x) { return std::binary_search(set.begin(), set.end(), x); }

ElementSet complement(int order, const ElementSet& set) {
  ElementSet out;
  for (Element x = 0; x < order; ++x)
    if (!contains(set, x)) out.push_back(x);
  return out;
}

[[noreturn]] void violation(const std::string& what) { throw Error(ErrorKind::TheoremViolation, what); }

}  // namespace

LineClasses lineClasses(const FuncTable& f, const ComponentPartition& partition) {
  requireSplit(partition);
  const int k = f.domain().order();
  const int m = f.codomain().order();
  if (static_cast<int>(partition.componentOfLine.size()) != k * m)
    throw Error(ErrorKind::InvalidInput, "partition does not match the function's line count");
  LineClasses classes;
  classes.first.resize(k);
  classes.second.resize(k);
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < m; ++b)
      (partition.componentOfLine[a * m + b] == 0 ? classes.first : classes.second)[a].push_back(b);
  return classes;
}

LineClasses lineClasses(const Structure& s, const ComponentPartition& partition) {
  return lineClasses(s.function(), partition);
}

bool verifyPCharacterization(const FuncTable& f, const ComponentPartition& partition) {
  auto classes = lineClasses(f, partition);
  for (Element a = 1; a < f.domain().order(); ++a) {
    ElementSet two, none;
    for (Element b = 0; b < f.codomain().order(); ++b) {
      const auto size = sSet(f, a, b).size();
      if (size == 2) two.push_back(b);
      if (size == 0) none.push_back(b);
    }
    if (classes.first[a] != two || classes.second[a] != none) return false;
  }
  return true;
}

ElementSet computeT(const FuncTable& f) {
  if (f.domain().order() != f.codomain().order())
    throw Error(ErrorKind::InvalidInput, "computeT needs |G| = |H|");
  ElementSet t;
  for (Element a = 1; a < f.domain().order(); ++a)
    if (sSet(f, a, f.codomain().zero()).size() == 2) t.push_back(a);
  return t;
}

SplitReport classifySplit(const Structure& s, const ComponentPartition& partition, const FuncTable& f) {
  if (!isSemiPlanar(f).isSemiPlanar) throw Error(ErrorKind::InvalidInput, "classification needs a semi-planar function");
  SplitReport report;
  if (partition.componentCount == 1) return report;
  if (partition.componentCount != 2)
    violation("semi-planar structure with " + std::to_string(partition.componentCount) + " components");

  const Group& G = f.domain();
  const Group& H = f.codomain();
  const int k = G.order();
  report.classes = lineClasses(f, partition);
  const auto& P1 = report.classes.first;

  for (Element a = 0; a < k; ++a)
    if (static_cast<int>(P1[a].size()) * 2 != H.order()) violation("|P_a^1| != k/2 at a = " + std::to_string(a));

  report.B = P1[0];
  if (!isSubgroup(H, report.B)) violation("P_0^1 is not a subgroup of H");
  const ElementSet notB = complement(H.order(), report.B);
  report.h = notB.front();
  if (report.classes.second[0] != coset(H, report.B, *report.h)) violation("P_0^2 is not the coset of P_0^1");

  for (Element a = 0; a < k; ++a)
    if (P1[a] == report.B) report.A.push_back(a);
  if (!isSubgroup(G, report.A)) violation("A is not a subgroup of G");
  const int sizeA = static_cast<int>(report.A.size());
  if (sizeA == k) {
    report.kind = SplitKind::CaseI;
  } else if (2 * sizeA == k) {
    report.kind = SplitKind::CaseII;
    report.g = complement(k, report.A).front();
  } else {
    violation("|A| = " + std::to_string(sizeA) + " is neither k/2 nor k");
  }

  const ElementSet cosetA = report.g ? coset(G, report.A, *report.g) : ElementSet{};
  const ElementSet cosetB = coset(H, report.B, *report.h);
  for (Element a = 0; a < k; ++a) {
    for (Element b = 0; b < H.order(); ++b) {
      bool predicted;
      if (report.kind == SplitKind::CaseI) {
        predicted = contains(report.B, b);
      } else {
        predicted = (contains(report.A, a) && contains(report.B, b)) || (contains(cosetA, a) && contains(cosetB, b));
      }
      const bool actual = partition.componentOfLine[s.line(a, b).value] == 0;
      if (predicted != actual)
        violation("line L(" + std::to_string(a) + "," + std::to_string(b) + ") contradicts the " +
                  to_string(report.kind) + " predicate");
    }
  }
  return report;
}

bool verifyDifferenceLemma(const FuncTable& f, const ComponentPartition& partition) {
  auto classes = lineClasses(f, partition);
  const Group& G = f.domain();
  const ElementSet& P01 = classes.first[0];
  auto meets = [](const ElementSet& x, const ElementSet& y) {
    ElementSet both;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
    return !both.empty();
  };
  for (Element a = 0; a < G.order(); ++a) {
    for (Element c = 0; c < G.order(); ++c) {
      const bool hit = meets(classes.first[a], classes.first[c]) || meets(classes.second[a], classes.second[c]);
      if (!hit) continue;
      if (classes.first[G.sub(a, c)] != P01 || classes.first[G.sub(c, a)] != P01) return false;
    }
  }
  return true;
}

DivisibilityReport verifyDivisible(const Structure& s, const ComponentPartition& partition, int label) {
  if (label < 0 || label >= partition.componentCount)
    throw Error(ErrorKind::InvalidLabel, "no component with label " + std::to_string(label));
  std::vector<PointId> points;
  std::vector<int> local(s.pointCount(), -1);
  for (int p = 0; p < s.pointCount(); ++p) {
    if (partition.componentOfPoint[p] != label) continue;
    local[p] = static_cast<int>(points.size());
    points.push_back(PointId{p});
  }
  const int n = static_cast<int>(points.size());

  // common[i][j] = number of lines through both points; computed from pencils.
  std::vector<std::vector<int>> common(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (LineId l : s.linesThroughPoint(points[i]))
      for (PointId q : s.pointsOnLine(l))
        if (local[q.value] >= 0 && local[q.value] != i) ++common[i][local[q.value]];

  // row[i] = bitset of j with "i shares no line with j" (i itself included).
  const int words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> row(n, std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i == j || common[i][j] == 0) row[i][j / 64] |= std::uint64_t{1} << (j % 64);
  auto related = [&](int i, int j) { return (row[i][j / 64] >> (j % 64)) & 1; };

  DivisibilityReport report;
  for (int i = 0; i < n && !report.failure; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (related(i, j)) {
        if (row[i] == row[j]) continue;
        // Transitivity breaks at the first r on which the two rows disagree.
        int r = 0;
        for (int w = 0; w < words; ++w) {
          const std::uint64_t diff = row[i][w] ^ row[j][w];
          if (diff) {
            r = w * 64 + std::countr_zero(diff);
            break;
          }
        }
        const int unrelated = related(i, r) ? j : i;
        report.failure = DivisibilityReport::Failure{points[std::min(unrelated, r)], points[std::max(unrelated, r)],
                                                     common[unrelated][r]};
        break;
      }
      if (common[i][j] != 2) {
        report.failure = DivisibilityReport::Failure{points[i], points[j], common[i][j]};
        break;
      }
    }
  }
  if (report.failure) return report;

  std::vector<int> classOf(n, -1);
  for (int i = 0; i < n; ++i) {
    if (classOf[i] >= 0) continue;
    classOf[i] = static_cast<int>(report.classes.size());
    report.classes.push_back({points[i]});
    for (int j = i + 1; j < n; ++j)
      if (related(i, j)) {
        classOf[j] = classOf[i];
        report.classes.back().push_back(points[j]);
      }
  }
  report.isDivisible = true;
  return report;
}

bool verifyPhiIsomorphism(const Structure& s, const ComponentPartition& partition, Element h) {
  auto classes = lineClasses(s, partition);
  const Group& H = s.H();
  H.check(h);
  if (contains(classes.first[0], h))
    throw Error(ErrorKind::InvalidParameter, "h = " + std::to_string(h) + " lies in B; phi_h must leave B");

  auto mapPoint = [&](PointId p) { return s.point(s.pointX(p), H.add(s.pointY(p), h)); };
  auto mapLine = [&](LineId l) { return s.line(s.lineA(l), H.add(s.lineB(l), h)); };

  std::vector<PointId> points0;
  std::vector<LineId> lines0;
  int points1 = 0, lines1 = 0;
  for (int p = 0; p < s.pointCount(); ++p) {
    if (partition.componentOfPoint[p] == 0) points0.push_back(PointId{p});
    if (partition.componentOfPoint[p] == 1) ++points1;
  }
  for (int l = 0; l < s.lineCount(); ++l) {
    if (partition.componentOfLine[l] == 0) lines0.push_back(LineId{l});
    if (partition.componentOfLine[l] == 1) ++lines1;
  }
  // The map is injective on all of G x H, so landing inside component 1 with
  // matching sizes makes it a bijection between the components.
  if (static_cast<int>(points0.size()) != points1 || static_cast<int>(lines0.size()) != lines1) return false;
  for (PointId p : points0)
    if (partition.componentOfPoint[mapPoint(p).value] != 1) return false;
  for (LineId l : lines0)
    if (partition.componentOfLine[mapLine(l).value] != 1) return false;
  for (PointId p : points0)
    for (LineId l : lines0)
      if (s.isIncident(p, l) != s.isIncident(mapPoint(p), mapLine(l))) return false;
  return true;
}

}  // namespace sbp
