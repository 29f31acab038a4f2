#include "veinott/heyting.hpp"

namespace veinott {

namespace {

ElementSet residual_candidates(const Lattice& l, Element x, Element y) {
  ElementSet zs;
  for (Element z = 0; z < l.size(); ++z)
    if (l.leq(l.meet(x, z), y)) zs.insert(z);
  return zs;
}

std::optional<FrameWitness> first_frame_violation(const Lattice& l) {
  const std::size_t n = l.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const ElementSet zs = residual_candidates(l, x, y);
      const Element r = join_set(l, zs);
      if (!l.leq(l.meet(x, r), y)) return FrameWitness{x, zs};
      // Full residuation: z ≤ r ⟺ x ∧ z ≤ y.
      for (Element z = 0; z < n; ++z)
        if (l.leq(z, r) != zs.contains(z)) return FrameWitness{x, zs};
    }
  return std::nullopt;
}

}  // namespace

Element implication(const Lattice& l, Element x, Element y) {
  return join_set(l, residual_candidates(l, x, y));
}

Element subtraction(const Lattice& l, Element x, Element y) {
  ElementSet zs;
  for (Element z = 0; z < l.size(); ++z)
    if (l.leq(x, l.join(y, z))) zs.insert(z);
  return meet_set(l, zs);
}

ResiduationReport check_residuation(const Lattice& l) {
  ResiduationReport report;
  report.frame_witness = first_frame_violation(l);
  report.coframe_witness = first_frame_violation(dual(l));
  report.is_frame = !report.frame_witness.has_value();
  report.is_coframe = !report.coframe_witness.has_value();
  return report;
}

bool frame_law_holds(const Lattice& l, const FrameWitness& w) {
  Element rhs = l.meet(w.x, w.ys.first());
  w.ys.for_each([&](Element y) { rhs = l.join(rhs, l.meet(w.x, y)); });
  return l.meet(w.x, join_set(l, w.ys)) == rhs;
}

bool coframe_law_holds(const Lattice& l, const FrameWitness& w) {
  Element rhs = l.join(w.x, w.ys.first());
  w.ys.for_each([&](Element y) { rhs = l.meet(rhs, l.join(w.x, y)); });
  return l.join(w.x, meet_set(l, w.ys)) == rhs;
}

}  // namespace veinott
