#pragma once

#include <optional>

#include "veinott/lattice.hpp"

namespace veinott {

/// An element x and a set Y for which x ∧ (⋁Y) ≠ ⋁{x ∧ y | y ∈ Y}
/// (or the dual law, for a coframe witness).
struct FrameWitness {
  Element x;
  ElementSet ys;
};

struct ResiduationReport {
  bool is_frame = true;
  bool is_coframe = true;
  std::optional<FrameWitness> frame_witness;
  std::optional<FrameWitness> coframe_witness;
};

/// Candidate Heyting implication: the join of { z | x ∧ z ≤ y }.
/// On a non-frame the result can fail x ∧ (x → y) ≤ y; check_residuation()
/// decides validity.
Element implication(const Lattice& l, Element x, Element y);

/// Candidate co-Heyting subtraction: the meet of { z | x ≤ y ∨ z }.
Element subtraction(const Lattice& l, Element x, Element y);

/// Checks the residuation law for meet (frame) and, on the dual, for join
/// (coframe). Witnesses are taken from the first failing (x, y) pair.
ResiduationReport check_residuation(const Lattice& l);

/// Re-checks x ∧ (⋁Y) = ⋁{x ∧ y}. Y must be nonempty.
bool frame_law_holds(const Lattice& l, const FrameWitness& w);
/// Re-checks x ∨ (⋀Y) = ⋀{x ∨ y}. Y must be nonempty.
bool coframe_law_holds(const Lattice& l, const FrameWitness& w);

}  // namespace veinott
