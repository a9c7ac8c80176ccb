#include "sbp/algebra.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <numeric>
#include <random>

#include "sbp/error.hpp"

namespace sbp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidGroup: return "invalid-group";
    case ErrorKind::InvalidElement: return "invalid-element";
    case ErrorKind::UnsupportedGroup: return "unsupported-group";
    case ErrorKind::UnsupportedDegree: return "unsupported-degree";
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::InvalidTransform: return "invalid-transform";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::InvalidId: return "invalid-id";
    case ErrorKind::InvalidPair: return "invalid-pair";
    case ErrorKind::InvalidLabel: return "invalid-label";
    case ErrorKind::NotSplit: return "not-split";
    case ErrorKind::TheoremViolation: return "theorem-violation";
    case ErrorKind::SearchBudget: return "search-budget";
  }
  return "error";
}

Group::Group(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorKind::InvalidGroup, "group needs at least one cyclic factor");
  long order = 1;
  for (int n : factors_) {
    if (n < 2) throw Error(ErrorKind::InvalidGroup, "modulus " + std::to_string(n) + " is below 2");
    order *= n;
    if (order > (1L << 24)) throw Error(ErrorKind::InvalidGroup, "group order too large");
  }
  order_ = static_cast<int>(order);

  std::vector<Element> neg(order_);
  for (Element x = 0; x < order_; ++x) {
    auto digits = decode(x);
    for (std::size_t i = 0; i < digits.size(); ++i) digits[i] = (factors_[i] - digits[i]) % factors_[i];
    neg[x] = encode(digits);
  }
  negation_ = std::make_shared<const std::vector<Element>>(std::move(neg));

  if (order_ <= kCayleyLimit) {
    std::vector<Element> table(static_cast<std::size_t>(order_) * order_);
    for (Element x = 0; x < order_; ++x)
      for (Element y = 0; y < order_; ++y) table[x * order_ + y] = add_digits(x, y);
    cayley_ = std::make_shared<const std::vector<Element>>(std::move(table));
  }
}

Group Group::parse(const std::string& text) {
  std::string body = text;
  if (!body.empty() && (body.front() == 'Z' || body.front() == 'z')) body.erase(0, 1);
  std::vector<int> factors;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = body.find('x', pos);
    std::string part = body.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (!part.empty() && (part.front() == 'Z' || part.front() == 'z')) part.erase(0, 1);
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw Error(ErrorKind::InvalidGroup, "cannot parse group '" + text + "'");
    if (part.size() > 7) throw Error(ErrorKind::InvalidGroup, "modulus too large in '" + text + "'");
    factors.push_back(std::stoi(part));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return Group(std::move(factors));
}

std::string Group::name() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += 'x';
    out += 'Z' + std::to_string(factors_[i]);
  }
  return out;
}

std::vector<int> Group::decode(Element x) const {
  check(x);
  std::vector<int> digits(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    digits[i] = x % factors_[i];
    x /= factors_[i];
  }
  return digits;
}

Element Group::encode(std::span<const int> digits) const {
  if (digits.size() != factors_.size())
    throw Error(ErrorKind::InvalidElement, "digit tuple has wrong length");
  Element x = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    if (digits[i] < 0 || digits[i] >= factors_[i])
      throw Error(ErrorKind::InvalidElement, "digit out of range for factor " + std::to_string(i));
    x = x * factors_[i] + digits[i];
  }
  return x;
}

void Group::check(Element x) const {
  if (!contains(x))
    throw Error(ErrorKind::InvalidElement,
                "element " + std::to_string(x) + " outside " + name() + " (order " + std::to_string(order_) + ")");
}

Element Group::add_digits(Element x, Element y) const {
  Element out = 0;
  Element place = 1;
  for (int n : factors_) {
    out += ((x % n + y % n) % n) * place;
    x /= n;
    y /= n;
    place *= n;
  }
  return out;
}

Element Group::add(Element x, Element y) const {
  check(x);
  check(y);
  if (cayley_) return (*cayley_)[x * order_ + y];
  return add_digits(x, y);
}

Element Group::neg(Element x) const {
  check(x);
  return (*negation_)[x];
}

Element Group::scale(long u, Element x) const {
  check(x);
  auto digits = decode(x);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    long n = factors_[i];
    digits[i] = static_cast<int>(((u % n) * digits[i] % n + n) % n);
  }
  return encode(digits);
}

std::vector<ElementSet> index2Subgroups(const Group& g) {
  std::vector<std::size_t> even;
  for (std::size_t i = 0; i < g.factors().size(); ++i)
    if (g.factors()[i] % 2 == 0) even.push_back(i);

  std::vector<ElementSet> out;
  const std::size_t masks = std::size_t{1} << even.size();
  for (std::size_t mask = 1; mask < masks; ++mask) {
    ElementSet kernel;
    for (Element x = 0; x < g.order(); ++x) {
      auto digits = g.decode(x);
      int parity = 0;
      for (std::size_t j = 0; j < even.size(); ++j)
        if (mask >> j & 1) parity ^= digits[even[j]] & 1;
      if (parity == 0) kernel.push_back(x);
    }
    out.push_back(std::move(kernel));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<char> membership(const Group& g, std::span<const Element> s) {
  std::vector<char> in(g.order(), 0);
  for (Element x : s) {
    g.check(x);
    in[x] = 1;
  }
  return in;
}

}  // namespace

bool isSubgroup(const Group& g, std::span<const Element> s) {
  auto in = membership(g, s);
  if (s.empty() || !in[g.zero()]) return false;
  for (Element x : s) {
    if (!in[g.neg(x)]) return false;
    for (Element y : s)
      if (!in[g.add(x, y)]) return false;
  }
  return true;
}

ElementSet coset(const Group& g, std::span<const Element> s, Element rep) {
  g.check(rep);
  ElementSet out;
  out.reserve(s.size());
  for (Element x : s) out.push_back(g.add(x, rep));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Permutation> automorphisms(const Group& g) {
  if (!g.is_cyclic())
    throw Error(ErrorKind::UnsupportedGroup, "automorphism enumeration supports cyclic groups only, got " + g.name());
  const int k = g.order();
  std::vector<Permutation> out;
  for (int u = 1; u < k; ++u) {
    if (std::gcd(u, k) != 1) continue;
    Permutation perm(k);
    for (Element x = 0; x < k; ++x) perm[x] = static_cast<Element>((static_cast<long>(u) * x) % k);
    out.push_back(std::move(perm));
  }
  return out;
}

bool isAutomorphism(const Group& g, std::span<const Element> perm) {
  const int k = g.order();
  if (static_cast<int>(perm.size()) != k) return false;
  std::vector<char> seen(k, 0);
  for (Element y : perm) {
    if (!g.contains(y) || seen[y]) return false;
    seen[y] = 1;
  }
  if (k <= kFullAutomorphismCheckLimit) {
    for (Element x = 0; x < k; ++x)
      for (Element y = 0; y < k; ++y)
        if (perm[g.add(x, y)] != g.add(perm[x], perm[y])) return false;
    return true;
  }
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<Element> pick(0, k - 1);
  for (int i = 0; i < 65536; ++i) {
    Element x = pick(rng), y = pick(rng);
    if (perm[g.add(x, y)] != g.add(perm[x], perm[y])) return false;
  }
  return true;
}

namespace {

int polyDegree(std::uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

std::uint32_t polyMod(std::uint32_t a, std::uint32_t m) {
  const int dm = polyDegree(m);
  for (int d = polyDegree(a); d >= dm; d = polyDegree(a)) a ^= m << (d - dm);
  return a;
}

// Lexicographically least irreducible polynomial of each degree 1..8.
constexpr std::array<std::uint32_t, kMaxFieldDegree + 1> kModuli = {
    0, 0b10, 0b111, 0b1011, 0b10011, 0b100101, 0b1000011, 0b10000011, 0b100011011,
};

const bool kModuliValidated = [] {
  for (int e = 1; e <= kMaxFieldDegree; ++e)
    if (polyDegree(kModuli[e]) != e || !isIrreducible(kModuli[e])) return false;
  return true;
}();

}  // namespace

bool isIrreducible(std::uint32_t poly) {
  const int d = polyDegree(poly);
  if (d < 1) return false;
  for (std::uint32_t q = 2; polyDegree(q) <= d / 2; ++q)
    if (polyMod(poly, q) == 0) return false;
  return true;
}

Field makeField(int e) {
  if (e < 1 || e > kMaxFieldDegree)
    throw Error(ErrorKind::UnsupportedDegree, "GF(2^" + std::to_string(e) + ") not supported (1 <= e <= 8)");
  if (!kModuliValidated) throw Error(ErrorKind::UnsupportedDegree, "built-in modulus table failed validation");
  return Field{e, kModuli[e]};
}

std::uint32_t fieldMul(const Field& field, std::uint32_t x, std::uint32_t y) {
  const std::uint32_t top = 1u << field.degree;
  if (x >= top || y >= top) throw Error(ErrorKind::InvalidElement, "field element out of range");
  std::uint32_t acc = 0;
  while (y) {
    if (y & 1) acc ^= x;
    y >>= 1;
    x <<= 1;
    if (x & top) x ^= field.modulus;
  }
  return acc;
}

std::uint32_t fieldPow(const Field& field, std::uint32_t x, std::uint64_t exponent) {
  std::uint32_t result = 1;
  while (exponent) {
    if (exponent & 1) result = fieldMul(field, result, x);
    x = fieldMul(field, x, x);
    exponent >>= 1;
  }
  return result;
}

Group additiveGroup(const Field& field) { return Group(std::vector<int>(field.degree, 2)); }

}  // namespace sbp
