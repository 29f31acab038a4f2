#include "veinott/games.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <stdexcept>

#include "veinott/catalog.hpp"
#include "veinott/errors.hpp"

namespace veinott::games {

namespace {

Player other(Player p) { return p == Player::one ? Player::two : Player::one; }

// Payoff of `player` when it plays `own` and the opponent plays `opp`.
const Rational& utility(const SupermodularGame& g, Player player, Element own, Element opp) {
  return player == Player::one ? g.payoff(player, {own, opp}) : g.payoff(player, {opp, own});
}

std::optional<SupermodularityViolation> check_player(const SupermodularGame& g, Player p) {
  const Lattice& own = g.strategies(p);
  const Lattice& opp = g.strategies(other(p));
  for (Element y = 0; y < opp.size(); ++y)
    for (Element x = 0; x < own.size(); ++x)
      for (Element x2 = x + 1; x2 < own.size(); ++x2) {
        const Rational lhs = utility(g, p, own.join(x, x2), y) + utility(g, p, own.meet(x, x2), y);
        if (lhs < utility(g, p, x, y) + utility(g, p, x2, y))
          return SupermodularityViolation{p, ViolationKind::own_supermodularity, x, x2, y, y};
      }
  for (Element x = 0; x < own.size(); ++x)
    for (Element x2 = 0; x2 < own.size(); ++x2) {
      if (x == x2 || !own.leq(x, x2)) continue;
      for (Element y = 0; y < opp.size(); ++y)
        for (Element y2 = 0; y2 < opp.size(); ++y2) {
          if (y == y2 || !opp.leq(y, y2)) continue;
          const Rational high = utility(g, p, x2, y2) - utility(g, p, x, y2);
          const Rational low = utility(g, p, x2, y) - utility(g, p, x, y);
          if (high < low) return SupermodularityViolation{p, ViolationKind::increasing_differences, x, x2, y, y2};
        }
    }
  return std::nullopt;
}

}  // namespace

SupermodularGame::SupermodularGame(Lattice s1, Lattice s2, PayoffTable u1, PayoffTable u2)
    : s1_(std::move(s1)), s2_(std::move(s2)), u1_(std::move(u1)), u2_(std::move(u2)) {
  for (const PayoffTable* t : {&u1_, &u2_}) {
    if (t->size() != s1_.size()) throw InputError("payoff table needs one row per player-1 strategy");
    for (const auto& row : *t)
      if (row.size() != s2_.size()) throw InputError("payoff table needs one column per player-2 strategy");
  }
}

SupermodularityReport check_supermodular(const SupermodularGame& g) {
  SupermodularityReport r;
  r.witness = check_player(g, Player::one);
  if (!r.witness) r.witness = check_player(g, Player::two);
  r.holds = !r.witness.has_value();
  return r;
}

ElementSet best_response(const SupermodularGame& g, Player player, Element opponent) {
  const Lattice& own = g.strategies(player);
  if (opponent >= g.strategies(other(player)).size()) throw std::out_of_range("opponent strategy out of range");
  ElementSet argmax;
  std::optional<Rational> best;
  for (Element x = 0; x < own.size(); ++x) {
    const Rational& v = utility(g, player, x, opponent);
    if (!best || v > *best) {
      best = v;
      argmax = ElementSet::singleton(x);
    } else if (v == *best) {
      argmax.insert(x);
    }
  }
  return argmax;
}

EquilibriumReport solve(const SupermodularGame& g) {
  if (!check_supermodular(g).holds) throw PreconditionError("solve requires a supermodular game");
  const Lattice& s1 = g.strategies(Player::one);
  const Lattice& s2 = g.strategies(Player::two);
  EquilibriumReport report;

  // Monotone iteration climbs (or descends) a chain of the product lattice,
  // so it must stabilize within |s1| + |s2| steps.
  const std::size_t bound = s1.size() + s2.size();
  auto iterate = [&](Profile start, bool least, std::size_t& steps) {
    Profile cur = start;
    for (steps = 0; steps <= bound; ++steps) {
      const ElementSet br1 = best_response(g, Player::one, cur.second);
      const ElementSet br2 = best_response(g, Player::two, cur.first);
      const Profile next{least ? meet_set(s1, br1) : join_set(s1, br1),
                         least ? meet_set(s2, br2) : join_set(s2, br2)};
      if (!br1.contains(next.first) || !br2.contains(next.second))
        throw std::logic_error("best-response set of a supermodular game is not a sublattice");
      if (next == cur) return cur;
      cur = next;
    }
    throw std::logic_error("best-response iteration did not stabilize");
  };
  report.least = iterate({s1.bottom(), s2.bottom()}, true, report.least_iterations);
  report.greatest = iterate({s1.top(), s2.top()}, false, report.greatest_iterations);

  for (Element x = 0; x < s1.size(); ++x) {
    const ElementSet br2 = best_response(g, Player::two, x);
    br2.for_each([&](Element y) {
      if (best_response(g, Player::one, y).contains(x)) report.equilibria.push_back({x, y});
    });
  }
  std::sort(report.equilibria.begin(), report.equilibria.end());

  auto member = [&](Profile p) { return std::binary_search(report.equilibria.begin(), report.equilibria.end(), p); };
  report.is_complete_lattice = !report.equilibria.empty();
  for (const auto& a : report.equilibria) {
    for (const auto& b : report.equilibria) {
      if (!member({s1.meet(a.first, b.first), s2.meet(a.second, b.second)}) ||
          !member({s1.join(a.first, b.first), s2.join(a.second, b.second)})) {
        report.is_complete_lattice = false;
        break;
      }
    }
    if (!report.is_complete_lattice) break;
  }
  return report;
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    const char* begin = part.data();
    if (!part.empty() && part.front() == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
      throw InputError("malformed rational '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

SupermodularGame coordination_game() {
  PayoffTable u{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  return SupermodularGame(catalog::chain(1), catalog::chain(1), u, u);
}

SupermodularGame matching_pennies() {
  PayoffTable u1{{Rational(1), Rational(-1)}, {Rational(-1), Rational(1)}};
  PayoffTable u2{{Rational(-1), Rational(1)}, {Rational(1), Rational(-1)}};
  return SupermodularGame(catalog::chain(1), catalog::chain(1), u1, u2);
}

SupermodularGame constant_game(Lattice s1, Lattice s2, Rational value) {
  PayoffTable u(s1.size(), std::vector<Rational>(s2.size(), value));
  return SupermodularGame(std::move(s1), std::move(s2), u, u);
}

SupermodularGame random_supermodular_game(std::uint64_t seed, Lattice s1, Lattice s2) {
  std::mt19937_64 rng(seed);
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  auto join_irreducible = [](const Lattice& l, Element m) {
    if (m == l.bottom()) return false;
    const auto cov = l.covers();
    return std::count_if(cov.begin(), cov.end(), [&](const auto& c) { return c.second == m; }) == 1;
  };

  auto make_table = [&](const Lattice& own, const Lattice& opp, bool own_is_row) {
    // Own-strategy part: sum of c_m · [x ≥ m].
    std::vector<std::int64_t> weight(own.size());
    for (Element m = 0; m < own.size(); ++m) {
      const bool signed_ok = own.distributive() && join_irreducible(own, m);
      weight[m] = signed_ok ? draw(-3, 3) : draw(0, 3);
    }
    // Interaction part: sum of w · [x ≥ m][y ≥ m'] with w ≥ 0, sparse.
    std::vector<std::vector<std::int64_t>> inter(own.size(), std::vector<std::int64_t>(opp.size(), 0));
    for (Element m = 0; m < own.size(); ++m)
      for (Element m2 = 0; m2 < opp.size(); ++m2)
        if (draw(0, 3) == 0) inter[m][m2] = draw(1, 2);
    std::vector<std::int64_t> opp_only(opp.size());
    for (auto& v : opp_only) v = draw(-2, 2);
    const std::int64_t den = draw(1, 3);

    PayoffTable t(own_is_row ? own.size() : opp.size(),
                  std::vector<Rational>(own_is_row ? opp.size() : own.size()));
    for (Element x = 0; x < own.size(); ++x)
      for (Element y = 0; y < opp.size(); ++y) {
        std::int64_t v = 0;
        own.down_set(x).for_each([&](Element m) {
          v += weight[m];
          opp.down_set(y).for_each([&](Element m2) { v += inter[m][m2]; });
        });
        opp.down_set(y).for_each([&](Element m2) { v += opp_only[m2]; });
        (own_is_row ? t[x][y] : t[y][x]) = Rational(v, den);
      }
    return t;
  };

  PayoffTable u1 = make_table(s1, s2, true);
  PayoffTable u2 = make_table(s2, s1, false);
  return SupermodularGame(std::move(s1), std::move(s2), std::move(u1), std::move(u2));
}

}  // namespace veinott::games
