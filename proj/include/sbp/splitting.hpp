#pragma once

#include <optional>
#include <vector>

#include "sbp/incidence.hpp"

namespace sbp {

/// P_a^1 and P_a^2 for every a in G: the values b with L(a, b) in component 0
/// (resp. component 1), each sorted.
struct LineClasses {
  std::vector<ElementSet> first;
  std::vector<ElementSet> second;
};

/// Throws NotSplit unless the partition has exactly two components.
LineClasses lineClasses(const Structure& s, const ComponentPartition& partition);
LineClasses lineClasses(const FuncTable& f, const ComponentPartition& partition);

/// For each nonzero a: P_a^1 = {b : |S(a,b)| = 2} and P_a^2 = {b : |S(a,b)| = 0}.
bool verifyPCharacterization(const FuncTable& f, const ComponentPartition& partition);

/// T = {a != 0 : |S(a, 0)| = 2}.
ElementSet computeT(const FuncTable& f);

enum class SplitKind { Connected, CaseI, CaseII };

const char* to_string(SplitKind kind);

struct SplitReport {
  SplitKind kind = SplitKind::Connected;
  ElementSet B;  ///< P_0^1, a subgroup of H of index 2
  ElementSet A;  ///< {a : P_a^1 = P_0^1}; all of G in case (i), index 2 in case (ii)
  std::optional<Element> g;  ///< least element of G \ A
  std::optional<Element> h;  ///< least element of H \ B
  LineClasses classes;
};

/// Classifies a split structure into case (i) or (ii) and re-checks the case's
/// membership predicate against every line of the partition, plus the subgroup
/// and coset claims behind it. Any mismatch throws TheoremViolation.
/// A connected partition yields kind Connected with empty sets.
SplitReport classifySplit(const Structure& s, const ComponentPartition& partition, const FuncTable& f);
inline SplitReport classifySplit(const Structure& s, const ComponentPartition& partition) {
  return classifySplit(s, partition, s.function());
}

/// Whenever P_a^i and P_c^i meet, P_{a-c}^1 = P_{c-a}^1 = P_0^1.
bool verifyDifferenceLemma(const FuncTable& f, const ComponentPartition& partition);

struct DivisibilityReport {
  bool isDivisible = false;
  std::vector<std::vector<PointId>> classes;
  struct Failure {
    PointId first;
    PointId second;
    int commonLines;
  };
  std::optional<Failure> failure;
};

/// Checks that "shares no line" (plus reflexivity) is an equivalence on the
/// component's points and that points in different classes share exactly two lines.
/// Throws InvalidLabel for an unknown label.
DivisibilityReport verifyDivisible(const Structure& s, const ComponentPartition& partition, int label);

/// (x, y) -> (x, y + h) and L(a, b) -> L(a, b + h) must carry component 0 onto
/// component 1, preserving incidence both ways. Throws InvalidParameter for h in B.
bool verifyPhiIsomorphism(const Structure& s, const ComponentPartition& partition, Element h);

}  // namespace sbp
