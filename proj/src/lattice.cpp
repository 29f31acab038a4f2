#include "veinott/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "veinott/errors.hpp"

namespace veinott {

namespace {

std::optional<Element> extremum_of(const std::vector<ElementSet>& bounds_of, const ElementSet& candidates) {
  // The greatest element of `candidates` under the order whose down-sets are
  // `bounds_of`: the candidate whose down-set is exactly `candidates`.
  std::optional<Element> found;
  candidates.all_of([&](Element g) {
    if (bounds_of[g] == candidates) {
      found = g;
      return false;
    }
    return true;
  });
  return found;
}

bool distributive_by_triples(std::size_t n, const std::vector<Element>& meet, const std::vector<Element>& join) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        const Element lhs = meet[x * n + join[y * n + z]];
        const Element rhs = join[meet[x * n + y] * n + meet[x * n + z]];
        if (lhs != rhs) return false;
      }
  return true;
}

void check_labels(const std::vector<std::string>& labels, std::size_t max_elements) {
  if (labels.empty()) throw InputError("a lattice needs at least one element");
  if (max_elements > kMaxElements) max_elements = kMaxElements;
  if (labels.size() > max_elements)
    throw InputError("lattice has " + std::to_string(labels.size()) + " elements; limit is " +
                     std::to_string(max_elements));
  std::unordered_map<std::string_view, std::size_t> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw InputError("empty element label");
    auto [it, fresh] = seen.emplace(labels[i], i);
    if (!fresh) throw InputError("duplicate label '" + labels[i] + "'");
  }
}

}  // namespace

Lattice::BuildResult Lattice::from_covers(std::vector<std::string> labels, const std::vector<Cover>& covers,
                                          std::size_t max_elements) {
  check_labels(labels, max_elements);
  const std::size_t n = labels.size();
  std::unordered_map<std::string_view, Element> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(labels[i], static_cast<Element>(i));
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw InputError("cover references unknown element '" + name + "'");
    return it->second;
  };

  std::vector<ElementSet> down(n);
  for (std::size_t x = 0; x < n; ++x) down[x].insert(static_cast<Element>(x));
  for (const auto& [lo, hi] : covers) down[lookup(hi)].insert(lookup(lo));

  // Warshall over bit rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      if (down[x].contains(static_cast<Element>(k))) down[x] |= down[k];

  return from_order(std::move(labels), std::move(down), max_elements);
}

Lattice::BuildResult Lattice::from_order(std::vector<std::string> labels, std::vector<ElementSet> down,
                                         std::size_t max_elements) {
  check_labels(labels, max_elements);
  const std::size_t n = labels.size();
  if (down.size() != n) throw InputError("order relation size does not match label count");
  const ElementSet all = ElementSet::first_n(n);

  auto fail = [&](Element x, Element y, std::string why) {
    return PosetReport{false, std::make_pair(x, y), std::move(why)};
  };

  for (Element x = 0; x < n; ++x) {
    if (!down[x].is_subset_of(all)) throw InputError("order relation references elements out of range");
    if (!down[x].contains(x)) return fail(x, x, "order is not reflexive at " + labels[x]);
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (down[x].contains(y) && down[y].contains(x))
        return fail(x, y, "cycle: " + labels[x] + " and " + labels[y] + " are mutually below each other");
  for (Element x = 0; x < n; ++x) {
    std::optional<PosetReport> bad;
    down[x].all_of([&](Element y) {
      if (!down[y].is_subset_of(down[x])) {
        bad = fail(std::min(x, y), std::max(x, y), "order is not transitive through " + labels[y]);
        return false;
      }
      return true;
    });
    if (bad) return *bad;
  }

  std::vector<ElementSet> up(n);
  for (Element x = 0; x < n; ++x) down[x].for_each([&](Element y) { up[y].insert(x); });

  Lattice l;
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      auto m = extremum_of(down, down[x] & down[y]);
      auto j = extremum_of(up, up[x] & up[y]);
      if (!m) return fail(x, y, labels[x] + " and " + labels[y] + " have no meet");
      if (!j) return fail(x, y, labels[x] + " and " + labels[y] + " have no join");
      l.meet_[x * n + y] = l.meet_[y * n + x] = *m;
      l.join_[x * n + y] = l.join_[y * n + x] = *j;
    }
  }

  for (Element x = 0; x < n; ++x) {
    if (down[x].size() == 1) l.bottom_ = x;
    if (up[x].size() == 1) l.top_ = x;
  }
  l.labels_ = std::move(labels);
  l.down_ = std::move(down);
  l.up_ = std::move(up);
  l.distributive_ = distributive_by_triples(n, l.meet_, l.join_);
  return l;
}

Lattice expect_lattice(Lattice::BuildResult result) {
  if (auto* report = std::get_if<PosetReport>(&result)) throw InputError("not a lattice: " + report->reason);
  return std::get<Lattice>(std::move(result));
}

void Lattice::check(Element x) const {
  if (x >= size()) throw std::out_of_range("element index " + std::to_string(x) + " out of range");
}

const std::string& Lattice::label(Element x) const {
  check(x);
  return labels_[x];
}

std::optional<Element> Lattice::find(std::string_view name) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == name) return static_cast<Element>(i);
  return std::nullopt;
}

Element Lattice::index_of(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw InputError("unknown element '" + std::string(name) + "'");
}

bool Lattice::leq(Element x, Element y) const {
  check(x);
  check(y);
  return down_[y].contains(x);
}

Element Lattice::meet(Element x, Element y) const {
  check(x);
  check(y);
  return meet_[x * size() + y];
}

Element Lattice::join(Element x, Element y) const {
  check(x);
  check(y);
  return join_[x * size() + y];
}

const ElementSet& Lattice::down_set(Element x) const {
  check(x);
  return down_[x];
}

const ElementSet& Lattice::up_set(Element x) const {
  check(x);
  return up_[x];
}

std::vector<std::pair<Element, Element>> Lattice::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < size(); ++x)
    up_[x].for_each([&](Element y) {
      if (y != x && (up_[x] & down_[y]).size() == 2) out.emplace_back(x, y);
    });
  return out;
}

Element meet_set(const Lattice& l, const ElementSet& s) {
  if (s.empty()) throw InputError("meet of an empty set");
  Element acc = s.first();
  s.for_each([&](Element x) { acc = l.meet(acc, x); });
  return acc;
}

Element join_set(const Lattice& l, const ElementSet& s) {
  if (s.empty()) throw InputError("join of an empty set");
  Element acc = s.first();
  s.for_each([&](Element x) { acc = l.join(acc, x); });
  return acc;
}

ElementSet lower_bounds(const Lattice& l, const ElementSet& s) {
  ElementSet out = l.elements();
  s.for_each([&](Element x) { out &= l.down_set(x); });
  return out;
}

ElementSet upper_bounds(const Lattice& l, const ElementSet& s) {
  ElementSet out = l.elements();
  s.for_each([&](Element x) { out &= l.up_set(x); });
  return out;
}

ElementSet moore_closure(const Lattice& l, const ElementSet& s) {
  if (s.empty()) throw InputError("Moore closure of an empty set");
  if (!s.is_subset_of(l.elements())) throw std::out_of_range("set contains elements outside the lattice");
  ElementSet closed = s;
  std::vector<Element> pending = s.to_vector();
  while (!pending.empty()) {
    const Element x = pending.back();
    pending.pop_back();
    closed.for_each([&](Element y) {
      const Element m = l.meet(x, y);
      if (!closed.contains(m)) {
        closed.insert(m);
        pending.push_back(m);
      }
    });
  }
  return closed;
}

bool is_distributive(const Lattice& l) {
  const std::size_t n = l.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = y + 1; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
  return true;
}

std::optional<ForbiddenSublattice> find_forbidden_sublattice(const Lattice& l) {
  const std::size_t n = l.size();
  auto distinct = [](const std::array<Element, 5>& e) {
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j)
        if (e[i] == e[j]) return false;
    return true;
  };

  // Pentagon: side element b against a chain c < d with equal meets and joins.
  for (Element b = 0; b < n; ++b)
    for (Element c = 0; c < n; ++c)
      for (Element d = 0; d < n; ++d) {
        if (c == d || !l.leq(c, d)) continue;
        const Element bot = l.meet(b, d);
        const Element top = l.join(b, c);
        if (l.meet(b, c) != bot || l.join(b, d) != top) continue;
        std::array<Element, 5> e{bot, b, c, d, top};
        if (distinct(e)) return ForbiddenSublattice{ForbiddenKind::N5, e};
      }

  // Diamond: three elements with a common pairwise meet and join.
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      for (Element z = y + 1; z < n; ++z) {
        const Element bot = l.meet(x, y);
        const Element top = l.join(x, y);
        if (l.meet(x, z) != bot || l.meet(y, z) != bot || l.join(x, z) != top || l.join(y, z) != top) continue;
        std::array<Element, 5> e{bot, x, y, z, top};
        if (distinct(e)) return ForbiddenSublattice{ForbiddenKind::M3, e};
      }
  return std::nullopt;
}

ElementSet atoms(const Lattice& l) {
  ElementSet out;
  for (auto [lo, hi] : l.covers())
    if (lo == l.bottom()) out.insert(hi);
  return out;
}

bool is_atomic(const Lattice& l) {
  const ElementSet at = atoms(l);
  for (Element x = 0; x < l.size(); ++x)
    if (x != l.bottom() && !l.down_set(x).intersects(at)) return false;
  return true;
}

Lattice dual(const Lattice& l) {
  std::vector<ElementSet> reversed;
  reversed.reserve(l.size());
  for (Element x = 0; x < l.size(); ++x) reversed.push_back(l.up_set(x));
  return expect_lattice(Lattice::from_order(l.labels(), std::move(reversed)));
}

std::optional<std::vector<Element>> find_isomorphism(const Lattice& l1, const Lattice& l2) {
  const std::size_t n = l1.size();
  if (n != l2.size()) return std::nullopt;
  auto signature = [](const Lattice& l, Element x) {
    return std::make_pair(l.down_set(x).size(), l.up_set(x).size());
  };

  // Assign in a linear extension of l1 so every predecessor is placed first.
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return l1.down_set(a).size() < l1.down_set(b).size(); });

  std::vector<Element> map(n, 0);
  std::vector<bool> placed(n, false);
  std::vector<bool> used(n, false);

  auto consistent = [&](Element x, Element image) {
    for (Element y = 0; y < n; ++y) {
      if (!placed[y]) continue;
      if (l1.leq(y, x) != l2.leq(map[y], image)) return false;
      if (l1.leq(x, y) != l2.leq(image, map[y])) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const Element x = order[depth];
    for (Element cand = 0; cand < n; ++cand) {
      if (used[cand] || signature(l1, x) != signature(l2, cand) || !consistent(x, cand)) continue;
      map[x] = cand;
      placed[x] = used[cand] = true;
      if (self(self, depth + 1)) return true;
      placed[x] = used[cand] = false;
    }
    return false;
  };
  if (search(search, 0)) return map;
  return std::nullopt;
}

std::vector<std::size_t> heights(const Lattice& l) {
  const std::size_t n = l.size();
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return l.down_set(a).size() < l.down_set(b).size(); });
  std::vector<std::size_t> h(n, 0);
  const auto cov = l.covers();
  for (Element x : order)
    for (auto [lo, hi] : cov)
      if (hi == x) h[x] = std::max(h[x], h[lo] + 1);
  return h;
}

}  // namespace veinott
