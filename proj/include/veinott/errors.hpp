#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace veinott {

// Malformed or inconsistent input: unknown labels, bad documents, bad specs.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation refused to run because its mathematical precondition does not
// hold (e.g. the closed-form glb on a non-distributive lattice).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Sublattice enumeration hit its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t cap, std::size_t partial)
      : std::runtime_error("sublattice enumeration exceeded cap of " + std::to_string(cap) +
                           " (found at least " + std::to_string(partial) + ")"),
        cap_(cap),
        partial_(partial) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t partial_count() const noexcept { return partial_; }

 private:
  std::size_t cap_;
  std::size_t partial_;
};

}  // namespace veinott
