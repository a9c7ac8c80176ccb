#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace sbp {

/// Group elements and H-values are canonical mixed-radix indices.
using Element = int;
/// Sorted, duplicate-free list of elements.
using ElementSet = std::vector<Element>;
/// permutation[x] is the image of x.
using Permutation = std::vector<Element>;

/// Finite abelian group Z_{n_0} x Z_{n_1} x ... written additively.
///
/// Element index = d_0 + n_0 * (d_1 + n_1 * (d_2 + ...)), so the first factor is
/// the least significant digit. For Z_2^e this makes index addition a bitwise XOR.
class Group {
 public:
  /// Throws ErrorKind::InvalidGroup on an empty factor list or a modulus < 2.
  explicit Group(std::vector<int> factors);

  /// Parses the CLI grammar "6", "2x2", or the report form "Z6", "Z2xZ2".
  static Group parse(const std::string& text);

  int order() const noexcept { return order_; }
  std::span<const int> factors() const noexcept { return factors_; }
  bool is_cyclic() const noexcept { return factors_.size() == 1; }
  /// Report form, e.g. "Z6" or "Z2xZ2".
  std::string name() const;

  std::vector<int> decode(Element x) const;
  Element encode(std::span<const int> digits) const;

  Element zero() const noexcept { return 0; }
  Element add(Element x, Element y) const;
  Element neg(Element x) const;
  Element sub(Element x, Element y) const { return add(x, neg(y)); }
  /// u * x, i.e. x added to itself u times (u may be negative).
  Element scale(long u, Element x) const;

  bool contains(Element x) const noexcept { return x >= 0 && x < order_; }
  /// Throws ErrorKind::InvalidElement when x is out of range.
  void check(Element x) const;

  friend bool operator==(const Group& lhs, const Group& rhs) { return lhs.factors_ == rhs.factors_; }

 private:
  Element add_digits(Element x, Element y) const;

  std::vector<int> factors_;
  int order_ = 0;
  // Cayley table for small groups; empty when order > kCayleyLimit.
  std::shared_ptr<const std::vector<Element>> cayley_;
  std::shared_ptr<const std::vector<Element>> negation_;

  static constexpr int kCayleyLimit = 256;
};

inline Group makeGroup(std::vector<int> factors) { return Group(std::move(factors)); }

/// All subgroups of index 2, each sorted, the list sorted lexicographically.
/// They are the kernels of the nonzero homomorphisms G -> Z_2.
std::vector<ElementSet> index2Subgroups(const Group& g);

/// True iff s contains zero and is closed under addition and negation.
bool isSubgroup(const Group& g, std::span<const Element> s);
/// {s + rep : s in S}, sorted.
ElementSet coset(const Group& g, std::span<const Element> s, Element rep);

/// The maps x -> u x for units u mod k, ordered by u. Cyclic groups only.
std::vector<Permutation> automorphisms(const Group& g);

/// True iff perm is a bijection of g satisfying perm(x + y) = perm(x) + perm(y).
/// Checks every pair up to kFullAutomorphismCheckLimit elements, a fixed
/// pseudo-random sample of pairs beyond that.
bool isAutomorphism(const Group& g, std::span<const Element> perm);
inline constexpr int kFullAutomorphismCheckLimit = 256;

/// GF(2^e) in the polynomial basis: bit i of an element is the coefficient of X^i.
struct Field {
  int degree = 0;
  std::uint32_t modulus = 0;  ///< bit i = coefficient of X^i; degree-e irreducible

  int size() const noexcept { return 1 << degree; }
};

inline constexpr int kMaxFieldDegree = 8;

/// Supports 1 <= e <= 8 using the lexicographically least irreducible polynomial
/// of each degree. Throws ErrorKind::UnsupportedDegree otherwise.
Field makeField(int e);

/// Irreducibility over GF(2) by trial division with every polynomial of degree <= deg/2.
bool isIrreducible(std::uint32_t poly);

std::uint32_t fieldMul(const Field& field, std::uint32_t x, std::uint32_t y);
std::uint32_t fieldPow(const Field& field, std::uint32_t x, std::uint64_t exponent);

/// Z_2^e, the additive group of GF(2^e) under the index = bitmask convention.
Group additiveGroup(const Field& field);

}  // namespace sbp
