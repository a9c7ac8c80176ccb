#include "sbp/functions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "sbp/error.hpp"

namespace sbp {

FuncTable::FuncTable(Group domain, Group codomain, std::vector<Element> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != domain_.order())
    throw Error(ErrorKind::InvalidInput, "table has " + std::to_string(values_.size()) + " entries, domain " +
                                             domain_.name() + " needs " + std::to_string(domain_.order()));
  for (Element y : values_) codomain_.check(y);
}

FuncTable identityTable(const Group& g) {
  std::vector<Element> values(g.order());
  for (Element x = 0; x < g.order(); ++x) values[x] = x;
  return FuncTable(g, g, std::move(values));
}

FuncTable constantTable(const Group& g, const Group& h, Element value) {
  return FuncTable(g, h, std::vector<Element>(g.order(), value));
}

FuncTable delta(const FuncTable& f, Element a) {
  const Group& g = f.domain();
  const Group& h = f.codomain();
  g.check(a);
  std::vector<Element> values(g.order());
  for (Element x = 0; x < g.order(); ++x) values[x] = h.sub(f(g.add(x, a)), f(x));
  return FuncTable(g, h, std::move(values));
}

namespace {

void requireEqualOrder(const FuncTable& f) {
  if (f.domain().order() != f.codomain().order())
    throw Error(ErrorKind::InvalidInput, "domain " + f.domain().name() + " and codomain " + f.codomain().name() +
                                             " differ in order");
}

}  // namespace

SemiPlanarityVerdict isSemiPlanar(const FuncTable& f) {
  requireEqualOrder(f);
  const Group& g = f.domain();
  const Group& h = f.codomain();
  std::vector<int> counts(h.order());
  for (Element a = 1; a < g.order(); ++a) {
    std::fill(counts.begin(), counts.end(), 0);
    for (Element x = 0; x < g.order(); ++x) ++counts[h.sub(f(g.add(x, a)), f(x))];
    for (Element y = 0; y < h.order(); ++y)
      if (counts[y] != 0 && counts[y] != 2) return {false, Witness{a, y, counts[y]}};
  }
  return {true, std::nullopt};
}

ElementSet sSet(const FuncTable& f, Element a, Element b) {
  const Group& g = f.domain();
  const Group& h = f.codomain();
  g.check(a);
  h.check(b);
  ElementSet out;
  for (Element t = 0; t < g.order(); ++t)
    if (f(g.sub(t, a)) == h.add(f(t), b)) out.push_back(t);
  return out;
}

std::vector<int> fiberSizes(const FuncTable& f) {
  std::vector<int> sizes(f.codomain().order(), 0);
  for (Element y : f.values()) ++sizes[y];
  return sizes;
}

bool limitCheck(const FuncTable& f) {
  requireEqualOrder(f);
  const int k = f.domain().order();
  if (k <= 4) return true;
  auto sizes = fiberSizes(f);
  return std::all_of(sizes.begin(), sizes.end(), [k](int s) { return 2 * s <= k; });
}

bool isBijection(const FuncTable& f) {
  requireEqualOrder(f);
  auto sizes = fiberSizes(f);
  return std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 1; });
}

FuncTable equivalenceTransform(const FuncTable& f, std::span<const Element> phi, std::span<const Element> psi,
                               Element c, Element d) {
  const Group& g = f.domain();
  const Group& h = f.codomain();
  if (!isAutomorphism(g, phi)) throw Error(ErrorKind::InvalidTransform, "phi is not an automorphism of " + g.name());
  if (!isAutomorphism(h, psi)) throw Error(ErrorKind::InvalidTransform, "psi is not an automorphism of " + h.name());
  g.check(c);
  h.check(d);
  std::vector<Element> values(g.order());
  for (Element x = 0; x < g.order(); ++x) values[x] = h.add(psi[f(g.add(phi[x], c))], d);
  return FuncTable(g, h, std::move(values));
}

FuncTable parseTable(std::string_view text, const Group& domain, const Group& codomain) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::vector<Element> values;
  long position = 0;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    std::string_view item = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw ParseError(position, "entry " + std::to_string(position) + " is not an integer: '" + std::string(item) + "'");
    if (value < 0 || value >= codomain.order())
      throw ParseError(position, "entry " + std::to_string(position) + " = " + std::to_string(value) +
                                     " out of range for " + codomain.name());
    values.push_back(static_cast<Element>(value));
    ++position;
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (static_cast<int>(values.size()) != domain.order())
    throw ParseError(-1, "expected " + std::to_string(domain.order()) + " entries for " + domain.name() + ", got " +
                             std::to_string(values.size()));
  return FuncTable(domain, codomain, std::move(values));
}

std::string formatTable(const FuncTable& f) {
  std::string out;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.values()[i]);
  }
  return out;
}

FuncTable goldTable(int e, int alpha) {
  if (e < 1 || e > kMaxFieldDegree || alpha < 1 || alpha >= e)
    throw Error(ErrorKind::InvalidParameter,
                "gold table needs 1 <= alpha < e <= 8, got e=" + std::to_string(e) + " alpha=" + std::to_string(alpha));
  Field field = makeField(e);
  const std::uint64_t exponent = (std::uint64_t{1} << alpha) + 1;
  std::vector<Element> values(field.size());
  for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(field.size()); ++x)
    values[x] = static_cast<Element>(fieldPow(field, x, exponent));
  Group g = additiveGroup(field);
  return FuncTable(g, g, std::move(values));
}

FuncTable inverseTable(int e) {
  if (e < 1 || e > kMaxFieldDegree)
    throw Error(ErrorKind::InvalidParameter, "inverse table needs 1 <= e <= 8, got e=" + std::to_string(e));
  Field field = makeField(e);
  const std::uint64_t exponent = (std::uint64_t{1} << e) - 2;
  std::vector<Element> values(field.size());
  for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(field.size()); ++x)
    values[x] = x == 0 ? 0 : static_cast<Element>(fieldPow(field, x, exponent));
  Group g = additiveGroup(field);
  return FuncTable(g, g, std::move(values));
}

}  // namespace sbp
