#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "veinott/lattice.hpp"
#include "veinott/strong_set_order.hpp"

namespace veinott::catalog {

enum class Kind { n5, m3, chain, boolean, divisor, product, d_lattice, random };

/// A named lattice generator.
///
/// Textual forms: `n5`, `m3`, `chain:N`, `boolean:N`, `divisor:N`, `d:N`,
/// `random:N` or `random:SEED:N`, and `product:A,B` where A and B are specs
/// (A may not itself be a product).
struct Spec {
  Kind kind = Kind::n5;
  std::uint64_t parameter = 0;
  std::uint64_t seed = 0;
  std::vector<Spec> factors;

  friend bool operator==(const Spec&, const Spec&) = default;
};

/// Throws InputError on malformed text. `default_seed` applies to `random:N`.
Spec parse_spec(std::string_view text, std::uint64_t default_seed = 0);
std::string to_string(const Spec& spec);

Lattice build(const Spec& spec);

/// Pentagon with elements a..e: a < b < e, a < c < d < e.
Lattice n5();
/// Diamond with elements a..e: a < b, c, d < e.
Lattice m3();
/// Elements "0" < "1" < ... < "n"; n >= 1.
Lattice chain(std::uint64_t n);
/// Subsets of n atoms named p, q, r, ...; "bot" and "top" for the extremes.
/// Element index equals the subset's bit mask.
Lattice boolean(std::uint64_t n);
/// Divisors of n under divisibility, ascending; 1 <= n <= 10^6.
Lattice divisor(std::uint64_t n);
/// Componentwise order; labels "x:y".
Lattice product(const Lattice& a, const Lattice& b);
/// Elements top, b, a_0..a_n, b_0..b_n, a_w, bot with covers
/// top>a_0, top>b, b>b_0, a_i>a_{i+1}, a_i>b_i, b_i>b_{i+1}, a_n>a_w, b_n>bot, a_w>bot.
Lattice d_lattice(std::uint64_t n);
/// Normal completion of a seeded random poset on n points.
Lattice random_lattice(std::uint64_t seed, std::uint64_t n);

/// X_i = {top, a_0, ..., a_i} for i = 0..n on d_lattice(n).
/// Throws InputError when `l` is not a d_lattice.
SublatticeFamily d_family(const Lattice& l);

/// Every lattice with exactly n elements, one per isomorphism class
/// (1 <= n <= 8).
std::vector<Lattice> all_lattices(std::size_t n);

}  // namespace veinott::catalog
