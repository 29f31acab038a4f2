#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "veinott/element_set.hpp"

namespace veinott {

/// Default element-count limit for lattices built from user input.
inline constexpr std::size_t kDefaultMaxElements = 64;

/// Outcome of validating a Hasse diagram or order relation that is not a
/// lattice. When `is_lattice` is false, `failing_pair` names the first pair in
/// index order that breaks the lattice axioms.
struct PosetReport {
  bool is_lattice = false;
  std::optional<std::pair<Element, Element>> failing_pair;
  std::string reason;
};

/// A finite lattice with precomputed order, meet and join tables.
///
/// Immutable after construction. Element indices are assigned in label input
/// order and stay stable across dual() and serialization.
class Lattice {
 public:
  using Cover = std::pair<std::string, std::string>;
  using BuildResult = std::variant<Lattice, PosetReport>;

  /// Builds from a Hasse diagram; each cover is (lower, upper).
  /// Throws InputError for duplicate labels, unknown cover endpoints or more
  /// than `max_elements` labels.
  static BuildResult from_covers(std::vector<std::string> labels, const std::vector<Cover>& covers,
                                 std::size_t max_elements = kDefaultMaxElements);

  /// Builds from a full order relation given as down-sets:
  /// `down_sets[x]` = { y | y <= x }. The relation is validated, not trusted.
  static BuildResult from_order(std::vector<std::string> labels, std::vector<ElementSet> down_sets,
                                std::size_t max_elements = kMaxElements);

  std::size_t size() const { return labels_.size(); }
  ElementSet elements() const { return ElementSet::first_n(size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element x) const;
  std::optional<Element> find(std::string_view name) const;
  /// Throws InputError on unknown names.
  Element index_of(std::string_view name) const;

  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  bool leq(Element x, Element y) const;
  Element meet(Element x, Element y) const;
  Element join(Element x, Element y) const;
  const ElementSet& down_set(Element x) const;
  const ElementSet& up_set(Element x) const;

  /// Hasse edges (lower, upper), lexicographic by index.
  std::vector<std::pair<Element, Element>> covers() const;

  /// Cached result of the triple check; see is_distributive().
  bool distributive() const { return distributive_; }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.labels_ == b.labels_ && a.down_ == b.down_;
  }

 private:
  Lattice() = default;
  void check(Element x) const;

  std::vector<std::string> labels_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
  bool distributive_ = true;
};

/// Unwraps a BuildResult, throwing InputError with the report's reason.
Lattice expect_lattice(Lattice::BuildResult result);

// Free-function surface.

inline bool leq(const Lattice& l, Element x, Element y) { return l.leq(x, y); }
inline Element meet(const Lattice& l, Element x, Element y) { return l.meet(x, y); }
inline Element join(const Lattice& l, Element x, Element y) { return l.join(x, y); }

/// Fold of the binary table; throws InputError on an empty set.
Element meet_set(const Lattice& l, const ElementSet& s);
Element join_set(const Lattice& l, const ElementSet& s);

inline ElementSet down_set(const Lattice& l, Element x) { return l.down_set(x); }
inline ElementSet up_set(const Lattice& l, Element x) { return l.up_set(x); }

/// Intersection of the members' down-sets. lower_bounds(∅) is every element.
ElementSet lower_bounds(const Lattice& l, const ElementSet& s);
ElementSet upper_bounds(const Lattice& l, const ElementSet& s);

/// Meets of all nonempty subsets of `s`, computed by binary-meet saturation.
/// Throws InputError on an empty set.
ElementSet moore_closure(const Lattice& l, const ElementSet& s);

/// x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) for every triple.
bool is_distributive(const Lattice& l);

enum class ForbiddenKind { N5, M3 };

/// Five distinct elements forming a pentagon or diamond sublattice.
/// For N5 the tuple is (bottom, side, low, high, top) with low < high and the
/// side element incomparable to both; for M3 it is (bottom, x, y, z, top).
struct ForbiddenSublattice {
  ForbiddenKind kind;
  std::array<Element, 5> elements;
};

/// Searches for an N5 first, then an M3. Returns nullopt iff distributive.
std::optional<ForbiddenSublattice> find_forbidden_sublattice(const Lattice& l);

/// Elements covering bottom.
ElementSet atoms(const Lattice& l);
/// Every non-bottom element dominates an atom (vacuous on one element).
bool is_atomic(const Lattice& l);

/// Order dual with the same labels and indices.
Lattice dual(const Lattice& l);

/// Order isomorphism l1 -> l2 as an index map, if one exists.
std::optional<std::vector<Element>> find_isomorphism(const Lattice& l1, const Lattice& l2);

/// Longest chain length from bottom to x (bottom has height 0).
std::vector<std::size_t> heights(const Lattice& l);

}  // namespace veinott
