#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sbp/algebra.hpp"

namespace sbp {

/// A function f: G -> H stored as its value table <b_0, ..., b_{k-1}>.
class FuncTable {
 public:
  /// Throws InvalidInput on wrong length, InvalidElement on an out-of-range value.
  FuncTable(Group domain, Group codomain, std::vector<Element> values);

  const Group& domain() const noexcept { return domain_; }
  const Group& codomain() const noexcept { return codomain_; }
  std::span<const Element> values() const noexcept { return values_; }
  Element operator()(Element x) const { return values_[x]; }
  Element at(Element x) const {
    domain_.check(x);
    return values_[x];
  }

  friend bool operator==(const FuncTable& lhs, const FuncTable& rhs) {
    return lhs.domain_ == rhs.domain_ && lhs.codomain_ == rhs.codomain_ && lhs.values_ == rhs.values_;
  }

 private:
  Group domain_;
  Group codomain_;
  std::vector<Element> values_;
};

FuncTable identityTable(const Group& g);
FuncTable constantTable(const Group& g, const Group& h, Element value);

struct Witness {
  Element a;
  Element y;
  int count;
};

struct SemiPlanarityVerdict {
  bool isSemiPlanar = false;
  std::optional<Witness> witness;  ///< set iff not semi-planar; count is never 0 or 2
};

/// x -> f(x + a) - f(x).
FuncTable delta(const FuncTable& f, Element a);

/// Every nonzero a and every y: |{x : f(x + a) - f(x) = y}| is 0 or 2.
/// Witness is the first offender by a, then y. Throws InvalidInput when |G| != |H|.
SemiPlanarityVerdict isSemiPlanar(const FuncTable& f);

/// S(a, b) = {t in G : f(t - a) = f(t) + b}.
ElementSet sSet(const FuncTable& f, Element a, Element b);

/// fiberSizes(f)[y] = |f^{-1}(y)|.
std::vector<int> fiberSizes(const FuncTable& f);
/// False when k > 4 and some fiber exceeds k/2, which rules out semi-planarity.
bool limitCheck(const FuncTable& f);

bool isBijection(const FuncTable& f);

/// x -> psi(f(phi(x) + c)) + d. Throws InvalidTransform if phi or psi is not an automorphism.
FuncTable equivalenceTransform(const FuncTable& f, std::span<const Element> phi, std::span<const Element> psi,
                               Element c, Element d);

/// Comma-separated H-indices; whitespace around entries and a trailing newline are ignored.
FuncTable parseTable(std::string_view text, const Group& domain, const Group& codomain);
std::string formatTable(const FuncTable& f);

/// x -> x^(2^alpha + 1) over GF(2^e), as a table on Z_2^e. Requires 1 <= alpha < e.
FuncTable goldTable(int e, int alpha);
/// x -> x^(2^e - 2), the field inverse with 0 -> 0.
FuncTable inverseTable(int e);

}  // namespace sbp
