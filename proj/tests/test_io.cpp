#include "doctest.h"
#include "oracles.hpp"
#include "veinott/catalog.hpp"
#include "veinott/errors.hpp"
#include "veinott/io.hpp"

using namespace veinott;
using oracle::word;

TEST_CASE("lattice documents round trip") {
  for (const auto& l : {catalog::n5(), catalog::m3(), catalog::boolean(3), catalog::d_lattice(2),
                        catalog::product(catalog::chain(1), catalog::n5())}) {
    const std::string text = io::write_lattice(l);
    CHECK(io::read_lattice(text) == l);
    CHECK(io::write_lattice(io::read_lattice(text)) == text);
  }
}

TEST_CASE("lattice document layout") {
  const auto doc = io::lattice_to_json(catalog::n5());
  CHECK(doc["elements"] == io::json::array({"a", "b", "c", "d", "e"}));
  CHECK(doc["covers"] == io::json::parse(R"([["a","b"],["a","c"],["b","e"],["c","d"],["d","e"]])"));
}

TEST_CASE("malformed lattice documents") {
  CHECK_THROWS_AS(io::read_lattice("{"), InputError);
  CHECK_THROWS_AS(io::read_lattice("[]"), InputError);
  CHECK_THROWS_AS(io::read_lattice(R"({"elements": ["a"]})"), InputError);
  CHECK_THROWS_AS(io::read_lattice(R"({"elements": [1], "covers": []})"), InputError);
  CHECK_THROWS_AS(io::read_lattice(R"({"elements": ["a","b"], "covers": [["a"]]})"), InputError);
  CHECK_THROWS_AS(io::read_lattice(R"({"elements": ["a","b","c"], "covers": [["a","b"],["a","c"]]})"), InputError);
  const auto r = io::read_poset(R"({"elements": ["a","b","c"], "covers": [["a","b"],["a","c"]]})");
  CHECK(std::holds_alternative<PosetReport>(r));
  CHECK_THROWS_AS(io::slurp("/nonexistent/lattice.json"), InputError);
}

TEST_CASE("game documents round trip") {
  const auto g = games::random_supermodular_game(3, catalog::chain(2), catalog::boolean(2));
  const std::string text = io::write_game(g);
  const auto back = io::read_game(text);
  CHECK(back.payoffs(games::Player::one) == g.payoffs(games::Player::one));
  CHECK(back.payoffs(games::Player::two) == g.payoffs(games::Player::two));
  CHECK(back.strategies(games::Player::two) == g.strategies(games::Player::two));
  CHECK(io::write_game(back) == text);
}

TEST_CASE("game documents accept integers and reject bad cells") {
  const std::string chain = R"({"elements": ["0","1"], "covers": [["0","1"]]})";
  const std::string ok = R"({"s1": )" + chain + R"(, "s2": )" + chain +
                         R"(, "u1": [[1, 0], [0, "1/1"]], "u2": [[1, 0], [0, 1]]})";
  const auto g = io::read_game(ok);
  CHECK(g.payoff(games::Player::one, {1, 1}) == games::Rational(1));
  CHECK_THROWS_AS(io::read_game(R"({"s1": )" + chain + R"(, "s2": )" + chain +
                                R"(, "u1": [[1, 0], [0, 1.5]], "u2": [[1, 0], [0, 1]]})"),
                  InputError);
  CHECK_THROWS_AS(io::read_game(R"({"s1": )" + chain + R"(, "s2": )" + chain + R"(, "u1": [[1, 0]], "u2": [[1, 0], [0, 1]]})"),
                  InputError);
  CHECK_THROWS_AS(io::read_game(R"({"s1": )" + chain + "}"), InputError);
}

TEST_CASE("set and family syntax") {
  const Lattice l = catalog::n5();
  CHECK(io::format_set(l, word(l, "eab")) == "{a,b,e}");
  CHECK(io::format_set(l, ElementSet{}) == "{}");
  const auto f = io::parse_family(l, " {a, b} ; {e,d}");
  REQUIRE(f.size() == 2);
  CHECK(f[0] == word(l, "ab"));
  CHECK(f[1] == word(l, "de"));
  for (const char* bad : {"", "{}", "{a,}", "a,b", "{a};", "{a};{z}"}) CHECK_THROWS_AS(io::parse_family(l, bad), InputError);
}

TEST_CASE("DOT exports") {
  const Lattice l = catalog::n5();
  const std::string hasse = io::hasse_dot(l);
  CHECK(hasse.find("\"a\" -> \"b\";") != std::string::npos);
  CHECK(hasse.find("\"d\" -> \"e\";") != std::string::npos);
  CHECK(hasse.find("{ rank=same; \"a\"; }  // height 0") != std::string::npos);
  CHECK(hasse.find("{ rank=same; \"b\"; \"c\"; }  // height 1") != std::string::npos);
  const VeinottPoset p(l);
  const std::string v = io::veinott_dot(l, p);
  CHECK(v.find("digraph veinott") != std::string::npos);
  CHECK(static_cast<std::size_t>(std::count(v.begin(), v.end(), '>')) == p.covers().size());
}

TEST_CASE("verdict and report documents") {
  const Lattice l = catalog::n5();
  const auto doc = io::verdict_to_json(l, analyze(l));
  CHECK(doc["is_lattice"] == false);
  CHECK(doc["sl_size"] == 22);
  CHECK(doc["failure"]["missing"] == "glb");
  CHECK(doc["failure"]["pair"] == io::json::parse(R"([["d","e"],["a","b","c","e"]])"));
  CHECK(doc["failure"]["extremal_bounds"] == io::json::parse(R"([["a","b"],["a","c"]])"));
  CHECK(io::verdict_to_json(catalog::chain(2), analyze(catalog::chain(2)))["failure"].is_null());

  const auto res = io::residuation_to_json(l, check_residuation(l));
  CHECK(res["is_frame"] == false);
  CHECK(res["frame_witness"].is_object());

  const auto g = games::coordination_game();
  const auto eq = io::equilibria_to_json(g, games::solve(g));
  CHECK(eq["equilibria"] == io::json::parse(R"([["0","0"],["1","1"]])"));
  CHECK(eq["least"] == io::json::parse(R"(["0","0"])"));
}
