#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "veinott/lattice.hpp"

namespace veinott::games {

using Rational = boost::rational<std::int64_t>;
/// payoff[x][y] for player-1 strategy x and player-2 strategy y.
using PayoffTable = std::vector<std::vector<Rational>>;

enum class Player { one, two };

struct Profile {
  Element first;
  Element second;
  friend auto operator<=>(const Profile&, const Profile&) = default;
};

/// Two-player game on finite lattice strategy spaces with exact payoffs.
class SupermodularGame {
 public:
  /// Throws InputError when a table does not match |s1| x |s2|.
  SupermodularGame(Lattice s1, Lattice s2, PayoffTable u1, PayoffTable u2);

  const Lattice& strategies(Player p) const { return p == Player::one ? s1_ : s2_; }
  const PayoffTable& payoffs(Player p) const { return p == Player::one ? u1_ : u2_; }
  const Rational& payoff(Player p, Profile at) const {
    return (p == Player::one ? u1_ : u2_)[at.first][at.second];
  }

 private:
  Lattice s1_, s2_;
  PayoffTable u1_, u2_;
};

enum class ViolationKind { own_supermodularity, increasing_differences };

/// A failing quadruple. For own_supermodularity, own_low/own_high are the two
/// strategies x, x' in index order and opponent_low == opponent_high is the
/// fixed opponent strategy. For increasing_differences, own_low ≤ own_high and
/// opponent_low ≤ opponent_high.
struct SupermodularityViolation {
  Player player;
  ViolationKind kind;
  Element own_low, own_high;
  Element opponent_low, opponent_high;
};

struct SupermodularityReport {
  bool holds = true;
  std::optional<SupermodularityViolation> witness;
};

/// u_i(x∨x') + u_i(x∧x') ≥ u_i(x) + u_i(x') for every opponent strategy, and
/// increasing differences in (own, opponent), for both players.
SupermodularityReport check_supermodular(const SupermodularGame& g);

/// Strategies maximizing the player's payoff against a fixed opponent strategy.
ElementSet best_response(const SupermodularGame& g, Player player, Element opponent);

struct EquilibriumReport {
  std::vector<Profile> equilibria;  // sorted
  Profile least{};                  // from least-best-response iteration
  Profile greatest{};               // from greatest-best-response iteration
  bool is_complete_lattice = false;
  std::size_t least_iterations = 0;
  std::size_t greatest_iterations = 0;
};

/// Pure Nash equilibria of a supermodular game: extremal equilibria by
/// monotone best-response iteration, the full set by exhaustive scan.
/// Throws PreconditionError when the game is not supermodular.
EquilibriumReport solve(const SupermodularGame& g);

/// "p/q" or "p"; throws InputError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// Both players on chain:1 ("0" < "1"), payoff 1 when strategies match.
SupermodularGame coordination_game();
/// Player 1 wins on a match, player 2 on a mismatch.
SupermodularGame matching_pennies();
SupermodularGame constant_game(Lattice s1, Lattice s2, Rational value);

/// Seeded random game built from nonnegative combinations of principal-filter
/// indicators (plus signed modular terms on join-irreducibles of distributive
/// strategy lattices), so it is supermodular by construction.
SupermodularGame random_supermodular_game(std::uint64_t seed, Lattice s1, Lattice s2);

}  // namespace veinott::games
