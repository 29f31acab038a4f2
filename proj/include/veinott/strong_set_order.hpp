#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "veinott/lattice.hpp"

namespace veinott {

/// Default cap on the number of sublattices enumerate_sl() will produce.
inline constexpr std::size_t kDefaultSublatticeCap = 50000;

/// A nonempty subset of a lattice closed under binary meet and join.
/// Construction validates closure against the given lattice.
class Sublattice {
 public:
  Sublattice(const Lattice& l, ElementSet carrier);

  const ElementSet& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }
  bool contains(Element x) const { return carrier_.contains(x); }

  friend bool operator==(const Sublattice&, const Sublattice&) = default;
  friend auto operator<=>(const Sublattice& a, const Sublattice& b) { return a.carrier_ <=> b.carrier_; }

 private:
  ElementSet carrier_;
};

/// An indexed, nonempty family {A_i} of sublattices of one lattice.
class SublatticeFamily {
 public:
  explicit SublatticeFamily(std::vector<Sublattice> members);

  const std::vector<Sublattice>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const Sublattice& operator[](std::size_t i) const { return members_[i]; }
  /// Union of the carriers.
  ElementSet united() const;

 private:
  std::vector<Sublattice> members_;
};

/// Nonempty and closed under binary meet and join.
bool is_sublattice(const Lattice& l, const ElementSet& s);

/// Smallest sublattice containing `s`. Throws InputError when `s` is empty.
Sublattice sublattice_closure(const Lattice& l, const ElementSet& s);

/// Every nonempty sublattice exactly once, sorted by carrier. Throws
/// CapExceeded once more than `cap` sublattices have been found.
std::vector<Sublattice> enumerate_sl(const Lattice& l, std::size_t cap = kDefaultSublatticeCap);

/// S ≤v T  ⟺  ∀s∈S ∀t∈T: s∧t ∈ S and s∨t ∈ T. Defined on arbitrary subsets.
bool veinott_leq(const Lattice& l, const ElementSet& s, const ElementSet& t);
inline bool veinott_leq(const Lattice& l, const Sublattice& s, const Sublattice& t) {
  return veinott_leq(l, s.carrier(), t.carrier());
}

/// The poset ⟨SL(C), ≤v⟩ materialized as bit rows, for repeated bound queries.
/// Members are held in canonical (carrier) order; indices refer to that order.
class VeinottPoset {
 public:
  using Row = boost::dynamic_bitset<>;

  VeinottPoset(const Lattice& l, std::size_t cap = kDefaultSublatticeCap);
  VeinottPoset(const Lattice& l, std::vector<Sublattice> universe);

  std::size_t size() const { return members_.size(); }
  const std::vector<Sublattice>& members() const { return members_; }
  const Sublattice& operator[](std::size_t i) const { return members_[i]; }
  std::optional<std::size_t> index_of(const ElementSet& carrier) const;

  bool leq(std::size_t i, std::size_t j) const { return below_[j].test(i); }
  /// { k | k ≤v i }
  const Row& below(std::size_t i) const { return below_[i]; }
  /// { k | i ≤v k }
  const Row& above(std::size_t i) const { return above_[i]; }

  Row lower_bounds(std::span<const std::size_t> family) const;
  Row upper_bounds(std::span<const std::size_t> family) const;
  /// Maximal (resp. minimal) members of a subset, in index order.
  std::vector<std::size_t> maximal(const Row& subset) const;
  std::vector<std::size_t> minimal(const Row& subset) const;

  std::optional<std::size_t> glb(std::span<const std::size_t> family) const;
  std::optional<std::size_t> lub(std::span<const std::size_t> family) const;

  /// Cover pairs (lower, upper) of ≤v, for diagrams.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// Indices of the family's members; throws InputError if one is missing.
  std::vector<std::size_t> locate(const SublatticeFamily& f) const;

 private:
  void build(const Lattice& l);

  std::vector<Sublattice> members_;
  std::vector<Row> below_;
  std::vector<Row> above_;
};

struct VeinottBounds {
  std::vector<Sublattice> bounds;
  std::vector<Sublattice> extremal;  // maximal lower bounds / minimal upper bounds
};

/// All U in `universe` with U ≤v A_i for every member, plus the maximal ones.
VeinottBounds veinott_lower_bounds(const Lattice& l, const SublatticeFamily& f,
                                   const std::vector<Sublattice>& universe);
/// All U in `universe` with A_i ≤v U for every member, plus the minimal ones.
VeinottBounds veinott_upper_bounds(const Lattice& l, const SublatticeFamily& f,
                                   const std::vector<Sublattice>& universe);

/// glb by enumeration of SL(C); nullopt when no greatest lower bound exists.
std::optional<Sublattice> veinott_glb_bruteforce(const Lattice& l, const SublatticeFamily& f,
                                                 std::size_t cap = kDefaultSublatticeCap);
std::optional<Sublattice> veinott_lub_bruteforce(const Lattice& l, const SublatticeFamily& f,
                                                 std::size_t cap = kDefaultSublatticeCap);

/// Closed-form glb on a distributive lattice:
///   U = M*(⋃A_i),  G = { x ∈ U | ∀k: U ∩ ↓x ≤v A_k }.
/// Throws PreconditionError on a non-distributive lattice.
Sublattice veinott_glb_formula(const Lattice& l, const SublatticeFamily& f);

/// The same construction run on dual(l), which yields the lub in l.
Sublattice veinott_lub_formula(const Lattice& l, const SublatticeFamily& f);

/// Z⊥ = { x ∨ b | x ∈ Z } where b = ⋀_i ⋀A_i. Requires a distributive lattice
/// and Z ≤v A_i for every member; throws PreconditionError otherwise.
Sublattice bottom_shift(const Lattice& l, const Sublattice& z, const SublatticeFamily& f);

enum class MissingBound { glb, lub };

struct VeinottFailure {
  MissingBound missing;
  Sublattice first;
  Sublattice second;
  /// Maximal common lower bounds (glb case) or minimal common upper bounds.
  std::vector<Sublattice> extremal_bounds;
};

struct VeinottVerdict {
  bool is_lattice = true;
  std::size_t sl_size = 0;
  std::optional<VeinottFailure> failure;
};

/// The pair of sublattices built on a forbidden N5 (top-high vs.
/// bottom-side-low-top) or M3 (top-x vs. top-y) whose glb cannot exist.
/// nullopt on a distributive lattice.
std::optional<std::pair<Sublattice, Sublattice>> forbidden_pair(const Lattice& l);

/// Brute-force decision of whether ⟨SL(C), ≤v⟩ is a lattice: every pair is
/// checked for a glb, then for a lub. The reported witness is forbidden_pair()
/// when that pair fails, otherwise the first failing pair in canonical order.
VeinottVerdict analyze(const Lattice& l, std::size_t cap = kDefaultSublatticeCap);
VeinottVerdict analyze(const Lattice& l, const VeinottPoset& poset);

}  // namespace veinott
