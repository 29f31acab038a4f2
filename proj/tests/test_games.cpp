#include "doctest.h"
#include "veinott/catalog.hpp"
#include "veinott/errors.hpp"
#include "veinott/games.hpp"
#include "veinott/strong_set_order.hpp"

using namespace veinott;
using namespace veinott::games;

namespace {

// Pure equilibria straight from the definition.
std::vector<Profile> scan(const SupermodularGame& g) {
  const Lattice& s1 = g.strategies(Player::one);
  const Lattice& s2 = g.strategies(Player::two);
  std::vector<Profile> out;
  for (Element x = 0; x < s1.size(); ++x)
    for (Element y = 0; y < s2.size(); ++y) {
      bool ok = true;
      for (Element a = 0; a < s1.size(); ++a) ok = ok && g.payoff(Player::one, {a, y}) <= g.payoff(Player::one, {x, y});
      for (Element b = 0; b < s2.size(); ++b) ok = ok && g.payoff(Player::two, {x, b}) <= g.payoff(Player::two, {x, y});
      if (ok) out.push_back({x, y});
    }
  return out;
}

}  // namespace

TEST_CASE("coordination game") {
  const auto g = coordination_game();
  CHECK(check_supermodular(g).holds);
  CHECK(best_response(g, Player::one, 1) == ElementSet{1});
  CHECK(best_response(g, Player::two, 0) == ElementSet{0});
  const auto r = solve(g);
  CHECK(r.equilibria == std::vector<Profile>{{0, 0}, {1, 1}});
  CHECK(r.least == Profile{0, 0});
  CHECK(r.greatest == Profile{1, 1});
  CHECK(r.is_complete_lattice);
}

TEST_CASE("matching pennies is not supermodular") {
  const auto g = matching_pennies();
  const auto r = check_supermodular(g);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->kind == ViolationKind::increasing_differences);
  CHECK_THROWS_AS(solve(g), PreconditionError);
}

TEST_CASE("constant games") {
  const auto g = constant_game(catalog::boolean(2), catalog::chain(2), Rational(3, 2));
  CHECK(check_supermodular(g).holds);
  CHECK(best_response(g, Player::one, 0) == catalog::boolean(2).elements());
  const auto r = solve(g);
  CHECK(r.equilibria.size() == 12);
  CHECK(r.is_complete_lattice);

  const auto single = constant_game(catalog::all_lattices(1).front(), catalog::all_lattices(1).front(), Rational(0));
  const auto rs = solve(single);
  CHECK(rs.equilibria == std::vector<Profile>{{0, 0}});
  CHECK(rs.is_complete_lattice);
}

TEST_CASE("payoff tables are validated") {
  PayoffTable bad{{Rational(1)}};
  CHECK_THROWS_AS(SupermodularGame(catalog::chain(1), catalog::chain(1), bad, bad), InputError);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("+2/4") == Rational(1, 2));
  CHECK(to_string(Rational(-1, 2)) == "-1/2");
  CHECK(to_string(Rational(4)) == "4");
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "1/2/3"}) CHECK_THROWS_AS(parse_rational(bad), InputError);
}

TEST_CASE("random supermodular games: equilibrium structure") {
  const std::vector<Lattice> spaces{catalog::chain(1), catalog::chain(2), catalog::chain(3),
                                    catalog::product(catalog::chain(1), catalog::chain(1)), catalog::boolean(3)};
  std::uint64_t seed = 100;
  for (const auto& a : spaces)
    for (const auto& b : spaces) {
      const auto g = random_supermodular_game(seed++, a, b);
      REQUIRE(check_supermodular(g).holds);
      const auto r = solve(g);
      CHECK(r.equilibria == scan(g));
      REQUIRE_FALSE(r.equilibria.empty());
      CHECK(r.is_complete_lattice);
      CHECK(r.least == r.equilibria.front());
      for (const auto& p : r.equilibria) {
        CHECK(a.leq(r.least.first, p.first));
        CHECK(b.leq(r.least.second, p.second));
        CHECK(a.leq(p.first, r.greatest.first));
        CHECK(b.leq(p.second, r.greatest.second));
      }
      for (Element y = 0; y < b.size(); ++y)
        for (Element y2 = 0; y2 < b.size(); ++y2)
          if (b.leq(y, y2)) {
            const auto lo = best_response(g, Player::one, y);
            const auto hi = best_response(g, Player::one, y2);
            CHECK(is_sublattice(a, lo));
            CHECK(veinott_leq(a, lo, hi));
          }
    }
}

TEST_CASE("random games are reproducible") {
  const auto g1 = random_supermodular_game(5, catalog::chain(2), catalog::chain(3));
  const auto g2 = random_supermodular_game(5, catalog::chain(2), catalog::chain(3));
  CHECK(g1.payoffs(Player::one) == g2.payoffs(Player::one));
  CHECK(g1.payoffs(Player::two) == g2.payoffs(Player::two));
}
