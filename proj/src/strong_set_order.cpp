#include "veinott/strong_set_order.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "veinott/errors.hpp"

namespace veinott {

namespace {

// Saturates `closed` under meet and join, starting from the elements in
// `pending` (which must already be members).
ElementSet close_from(const Lattice& l, ElementSet closed, std::vector<Element> pending) {
  while (!pending.empty()) {
    const Element x = pending.back();
    pending.pop_back();
    closed.for_each([&](Element y) {
      for (Element z : {l.meet(x, y), l.join(x, y)})
        if (!closed.contains(z)) {
          closed.insert(z);
          pending.push_back(z);
        }
    });
  }
  return closed;
}

}  // namespace

Sublattice::Sublattice(const Lattice& l, ElementSet carrier) : carrier_(carrier) {
  if (!is_sublattice(l, carrier_)) throw InputError("set is not a nonempty sublattice");
}

SublatticeFamily::SublatticeFamily(std::vector<Sublattice> members) : members_(std::move(members)) {
  if (members_.empty()) throw InputError("a sublattice family must be nonempty");
}

ElementSet SublatticeFamily::united() const {
  ElementSet u;
  for (const auto& a : members_) u |= a.carrier();
  return u;
}

bool is_sublattice(const Lattice& l, const ElementSet& s) {
  if (s.empty() || !s.is_subset_of(l.elements())) return false;
  return s.all_of([&](Element x) {
    return s.all_of([&](Element y) { return y < x || (s.contains(l.meet(x, y)) && s.contains(l.join(x, y))); });
  });
}

Sublattice sublattice_closure(const Lattice& l, const ElementSet& s) {
  if (s.empty()) throw InputError("sublattice closure of an empty set");
  if (!s.is_subset_of(l.elements())) throw std::out_of_range("set contains elements outside the lattice");
  return Sublattice(l, close_from(l, s, s.to_vector()));
}

std::vector<Sublattice> enumerate_sl(const Lattice& l, std::size_t cap) {
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::deque<ElementSet> frontier;
  auto add = [&](const ElementSet& s) {
    if (!seen.insert(s).second) return;
    if (seen.size() > cap) throw CapExceeded(cap, seen.size());
    frontier.push_back(s);
  };

  for (Element x = 0; x < l.size(); ++x) add(ElementSet::singleton(x));
  // Every sublattice is the closure of a maximal proper sublattice plus one
  // element, so one-element extensions reach all of SL(C).
  while (!frontier.empty()) {
    const ElementSet s = frontier.front();
    frontier.pop_front();
    for (Element e = 0; e < l.size(); ++e) {
      if (s.contains(e)) continue;
      ElementSet grown = s;
      grown.insert(e);
      add(close_from(l, grown, {e}));
    }
  }

  std::vector<ElementSet> carriers(seen.begin(), seen.end());
  std::sort(carriers.begin(), carriers.end());
  std::vector<Sublattice> out;
  out.reserve(carriers.size());
  for (const auto& c : carriers) out.emplace_back(l, c);
  return out;
}

bool veinott_leq(const Lattice& l, const ElementSet& s, const ElementSet& t) {
  return s.all_of([&](Element x) {
    return t.all_of([&](Element y) { return s.contains(l.meet(x, y)) && t.contains(l.join(x, y)); });
  });
}

// ---------------------------------------------------------------------------
// VeinottPoset

VeinottPoset::VeinottPoset(const Lattice& l, std::size_t cap) : members_(enumerate_sl(l, cap)) { build(l); }

VeinottPoset::VeinottPoset(const Lattice& l, std::vector<Sublattice> universe) : members_(std::move(universe)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  build(l);
}

void VeinottPoset::build(const Lattice& l) {
  const std::size_t m = members_.size();
  below_.assign(m, Row(m));
  above_.assign(m, Row(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (veinott_leq(l, members_[i], members_[j])) {
        below_[j].set(i);
        above_[i].set(j);
      }
}

std::optional<std::size_t> VeinottPoset::index_of(const ElementSet& carrier) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), carrier,
                             [](const Sublattice& s, const ElementSet& c) { return s.carrier() < c; });
  if (it == members_.end() || it->carrier() != carrier) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

std::vector<std::size_t> VeinottPoset::locate(const SublatticeFamily& f) const {
  std::vector<std::size_t> idx;
  for (const auto& a : f.members()) {
    auto i = index_of(a.carrier());
    if (!i) throw InputError("family member is not in the sublattice universe");
    idx.push_back(*i);
  }
  return idx;
}

VeinottPoset::Row VeinottPoset::lower_bounds(std::span<const std::size_t> family) const {
  Row r(size());
  r.set();
  for (auto i : family) r &= below_[i];
  return r;
}

VeinottPoset::Row VeinottPoset::upper_bounds(std::span<const std::size_t> family) const {
  Row r(size());
  r.set();
  for (auto i : family) r &= above_[i];
  return r;
}

std::vector<std::size_t> VeinottPoset::maximal(const Row& subset) const {
  std::vector<std::size_t> out;
  for (auto i = subset.find_first(); i != Row::npos; i = subset.find_next(i))
    if ((above_[i] & subset).count() == 1) out.push_back(i);
  return out;
}

std::vector<std::size_t> VeinottPoset::minimal(const Row& subset) const {
  std::vector<std::size_t> out;
  for (auto i = subset.find_first(); i != Row::npos; i = subset.find_next(i))
    if ((below_[i] & subset).count() == 1) out.push_back(i);
  return out;
}

std::optional<std::size_t> VeinottPoset::glb(std::span<const std::size_t> family) const {
  // The glb g, if any, is the bound with below(g) equal to the whole bound set.
  const Row bounds = lower_bounds(family);
  for (auto i = bounds.find_first(); i != Row::npos; i = bounds.find_next(i))
    if (bounds.is_subset_of(below_[i])) return i;
  return std::nullopt;
}

std::optional<std::size_t> VeinottPoset::lub(std::span<const std::size_t> family) const {
  const Row bounds = upper_bounds(family);
  for (auto i = bounds.find_first(); i != Row::npos; i = bounds.find_next(i))
    if (bounds.is_subset_of(above_[i])) return i;
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> VeinottPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (auto j = above_[i].find_first(); j != Row::npos; j = above_[i].find_next(j))
      if (j != i && (above_[i] & below_[j]).count() == 2) out.emplace_back(i, j);
  return out;
}

// ---------------------------------------------------------------------------
// Bounds

namespace {

VeinottBounds collect(const Lattice& l, const SublatticeFamily& f, const std::vector<Sublattice>& universe,
                      bool lower) {
  VeinottBounds out;
  for (const auto& u : universe) {
    const bool ok = std::all_of(f.members().begin(), f.members().end(), [&](const Sublattice& a) {
      return lower ? veinott_leq(l, u, a) : veinott_leq(l, a, u);
    });
    if (ok) out.bounds.push_back(u);
  }
  for (const auto& u : out.bounds) {
    const bool extremal = std::none_of(out.bounds.begin(), out.bounds.end(), [&](const Sublattice& v) {
      return v != u && (lower ? veinott_leq(l, u, v) : veinott_leq(l, v, u));
    });
    if (extremal) out.extremal.push_back(u);
  }
  return out;
}

std::optional<Sublattice> unique_extremum(const Lattice& l, const VeinottBounds& b, bool lower) {
  if (b.extremal.size() != 1) return std::nullopt;
  const Sublattice& g = b.extremal.front();
  for (const auto& u : b.bounds)
    if (!(lower ? veinott_leq(l, u, g) : veinott_leq(l, g, u))) return std::nullopt;
  return g;
}

void require_distributive(const Lattice& l, const char* what) {
  if (!l.distributive())
    throw PreconditionError(std::string(what) +
                            " requires a distributive lattice; use the brute-force oracle instead");
}

}  // namespace

VeinottBounds veinott_lower_bounds(const Lattice& l, const SublatticeFamily& f,
                                   const std::vector<Sublattice>& universe) {
  return collect(l, f, universe, true);
}

VeinottBounds veinott_upper_bounds(const Lattice& l, const SublatticeFamily& f,
                                   const std::vector<Sublattice>& universe) {
  return collect(l, f, universe, false);
}

std::optional<Sublattice> veinott_glb_bruteforce(const Lattice& l, const SublatticeFamily& f, std::size_t cap) {
  return unique_extremum(l, veinott_lower_bounds(l, f, enumerate_sl(l, cap)), true);
}

std::optional<Sublattice> veinott_lub_bruteforce(const Lattice& l, const SublatticeFamily& f, std::size_t cap) {
  return unique_extremum(l, veinott_upper_bounds(l, f, enumerate_sl(l, cap)), false);
}

Sublattice veinott_glb_formula(const Lattice& l, const SublatticeFamily& f) {
  require_distributive(l, "the closed-form glb");
  const ElementSet u = moore_closure(l, f.united());
  ElementSet g;
  u.for_each([&](Element x) {
    const ElementSet below_x = u & l.down_set(x);
    const bool keep = std::all_of(f.members().begin(), f.members().end(),
                                  [&](const Sublattice& a) { return veinott_leq(l, below_x, a.carrier()); });
    if (keep) g.insert(x);
  });
  return Sublattice(l, g);
}

Sublattice veinott_lub_formula(const Lattice& l, const SublatticeFamily& f) {
  require_distributive(l, "the closed-form lub");
  const Lattice d = dual(l);
  return Sublattice(l, veinott_glb_formula(d, f).carrier());
}

Sublattice bottom_shift(const Lattice& l, const Sublattice& z, const SublatticeFamily& f) {
  require_distributive(l, "the bottom shift");
  for (const auto& a : f.members())
    if (!veinott_leq(l, z, a)) throw PreconditionError("the bottom shift requires Z ≤v A_i for every member");
  Element b = meet_set(l, f[0].carrier());
  for (const auto& a : f.members()) b = l.meet(b, meet_set(l, a.carrier()));
  ElementSet shifted;
  z.carrier().for_each([&](Element x) { shifted.insert(l.join(x, b)); });
  return Sublattice(l, shifted);
}

// ---------------------------------------------------------------------------
// Whole-poset analysis

std::optional<std::pair<Sublattice, Sublattice>> forbidden_pair(const Lattice& l) {
  const auto w = find_forbidden_sublattice(l);
  if (!w) return std::nullopt;
  // Tuples are (bottom, side, low, high, top) and (bottom, x, y, z, top).
  const auto& e = w->elements;
  if (w->kind == ForbiddenKind::N5)
    return std::make_pair(Sublattice(l, {e[4], e[3]}), Sublattice(l, {e[0], e[1], e[2], e[4]}));
  return std::make_pair(Sublattice(l, {e[4], e[1]}), Sublattice(l, {e[4], e[2]}));
}

VeinottVerdict analyze(const Lattice& l, std::size_t cap) { return analyze(l, VeinottPoset(l, cap)); }

VeinottVerdict analyze(const Lattice& l, const VeinottPoset& poset) {
  VeinottVerdict verdict;
  verdict.sl_size = poset.size();

  auto has_bound = [&](MissingBound kind, std::size_t i, std::size_t j) {
    const std::size_t pair[] = {i, j};
    return kind == MissingBound::glb ? poset.glb(pair).has_value() : poset.lub(pair).has_value();
  };

  struct Failing {
    std::size_t i, j;
    MissingBound missing;
  };
  std::optional<Failing> found;
  for (MissingBound kind : {MissingBound::glb, MissingBound::lub}) {
    for (std::size_t i = 0; i < poset.size() && !found; ++i)
      for (std::size_t j = i + 1; j < poset.size() && !found; ++j)
        if (!has_bound(kind, i, j)) found = Failing{i, j, kind};
    if (found) break;
  }
  if (!found) return verdict;

  if (auto fp = forbidden_pair(l)) {
    auto i = poset.index_of(fp->first.carrier());
    auto j = poset.index_of(fp->second.carrier());
    if (i && j && !has_bound(MissingBound::glb, *i, *j)) found = Failing{*i, *j, MissingBound::glb};
  }

  verdict.is_lattice = false;
  const std::size_t pair[] = {found->i, found->j};
  const auto extremal = found->missing == MissingBound::glb ? poset.maximal(poset.lower_bounds(pair))
                                                            : poset.minimal(poset.upper_bounds(pair));
  VeinottFailure failure{found->missing, poset[found->i], poset[found->j], {}};
  for (auto k : extremal) failure.extremal_bounds.push_back(poset[k]);
  verdict.failure = std::move(failure);
  return verdict;
}

}  // namespace veinott
