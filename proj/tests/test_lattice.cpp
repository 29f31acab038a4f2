#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "veinott/catalog.hpp"
#include "veinott/errors.hpp"
#include "veinott/lattice.hpp"

using namespace veinott;
using oracle::named;
using oracle::word;

namespace {

Lattice pentagon() {
  return expect_lattice(
      Lattice::from_covers({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"a", "c"}, {"c", "d"}, {"b", "e"}, {"d", "e"}}));
}

std::vector<Lattice> sample_lattices() {
  std::vector<Lattice> v{catalog::n5(),       catalog::m3(),        catalog::chain(4),
                         catalog::boolean(3), catalog::divisor(60), catalog::d_lattice(2),
                         catalog::product(catalog::n5(), catalog::chain(1))};
  for (std::uint64_t seed = 1; seed <= 6; ++seed) v.push_back(catalog::random_lattice(seed, 7));
  return v;
}

}  // namespace

TEST_CASE("from_covers builds the pentagon") {
  const Lattice l = pentagon();
  CHECK(l.size() == 5);
  CHECK(l.label(l.bottom()) == "a");
  CHECK(l.label(l.top()) == "e");
  CHECK(l == catalog::n5());
}

TEST_CASE("from_covers: one element") {
  const Lattice l = expect_lattice(Lattice::from_covers({"x"}, {}));
  CHECK(l.size() == 1);
  CHECK(l.bottom() == l.top());
}

TEST_CASE("from_covers reports the first pair without a join") {
  auto r = Lattice::from_covers({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
  REQUIRE(std::holds_alternative<PosetReport>(r));
  const auto& report = std::get<PosetReport>(r);
  CHECK_FALSE(report.is_lattice);
  REQUIRE(report.failing_pair);
  CHECK(*report.failing_pair == std::pair<Element, Element>{1, 2});
  CHECK(report.reason == "b and c have no join");
}

TEST_CASE("from_covers rejects cycles, unknown and duplicate labels") {
  CHECK(std::holds_alternative<PosetReport>(Lattice::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}})));
  CHECK_THROWS_AS(Lattice::from_covers({"a", "b"}, {{"a", "z"}}), InputError);
  CHECK_THROWS_AS(Lattice::from_covers({"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(Lattice::from_covers({}, {}), InputError);
  std::vector<std::string> many;
  for (int i = 0; i < 65; ++i) many.push_back("x" + std::to_string(i));
  CHECK_THROWS_AS(Lattice::from_covers(many, {}), InputError);
  CHECK_THROWS_AS(expect_lattice(Lattice::from_covers({"a", "b"}, {})), InputError);
}

TEST_CASE("meet, join and leq on N5") {
  const Lattice l = pentagon();
  auto id = [&](const char* n) { return l.index_of(n); };
  CHECK(l.meet(id("b"), id("c")) == id("a"));
  CHECK(l.join(id("b"), id("c")) == id("e"));
  CHECK(l.meet(id("c"), id("d")) == id("c"));
  CHECK(l.leq(id("c"), id("d")));
  CHECK_FALSE(l.leq(id("b"), id("d")));
  CHECK_THROWS_AS(l.meet(0, 9), std::out_of_range);
  CHECK_THROWS_AS(l.index_of("z"), InputError);
}

TEST_CASE("meet and join tables match the order") {
  for (const auto& l : sample_lattices())
    for (Element x = 0; x < l.size(); ++x) {
      CHECK(l.meet(x, l.top()) == x);
      CHECK(l.join(x, l.bottom()) == x);
      for (Element y = 0; y < l.size(); ++y) {
        CHECK(l.meet(x, y) == oracle::meet(l, x, y));
        CHECK(l.join(x, y) == oracle::join(l, x, y));
      }
    }
}

TEST_CASE("meet_set and join_set") {
  const Lattice l = pentagon();
  CHECK(meet_set(l, word(l, "bcd")) == l.index_of("a"));
  CHECK(meet_set(l, word(l, "c")) == l.index_of("c"));
  CHECK(meet_set(l, l.elements()) == l.bottom());
  CHECK(join_set(l, l.elements()) == l.top());
  CHECK_THROWS_AS(meet_set(l, ElementSet{}), InputError);
}

TEST_CASE("down-sets and lower bounds") {
  const Lattice l = pentagon();
  CHECK(l.down_set(l.index_of("d")) == word(l, "acd"));
  CHECK(l.down_set(l.bottom()) == ElementSet::singleton(l.bottom()));
  CHECK(l.down_set(l.top()) == l.elements());
  CHECK(lower_bounds(l, word(l, "bd")) == word(l, "a"));
  CHECK(lower_bounds(l, word(l, "d")) == l.down_set(l.index_of("d")));
  CHECK(lower_bounds(l, ElementSet{}) == l.elements());
  CHECK(upper_bounds(l, word(l, "bc")) == word(l, "e"));
}

TEST_CASE("moore_closure") {
  const Lattice l = pentagon();
  CHECK(moore_closure(l, word(l, "bc")) == word(l, "abc"));
  CHECK(moore_closure(l, word(l, "d")) == word(l, "d"));
  CHECK(moore_closure(l, word(l, "acd")) == word(l, "acd"));
  CHECK_THROWS_AS(moore_closure(l, ElementSet{}), InputError);

  std::mt19937_64 rng(7);
  for (const auto& lat : sample_lattices())
    for (int i = 0; i < 40; ++i) {
      const ElementSet s = oracle::random_subset(rng, lat.size());
      if (s.size() > 12) continue;
      const ElementSet m = moore_closure(lat, s);
      CHECK(m == oracle::moore(lat, s));
      CHECK(s.is_subset_of(m));
      CHECK(moore_closure(lat, m) == m);
    }
}

TEST_CASE("distributivity and forbidden sublattices") {
  CHECK_FALSE(is_distributive(catalog::n5()));
  CHECK_FALSE(is_distributive(catalog::m3()));
  CHECK(is_distributive(catalog::chain(5)));
  CHECK(is_distributive(catalog::boolean(2)));

  const Lattice l = pentagon();
  auto w = find_forbidden_sublattice(l);
  REQUIRE(w);
  CHECK(w->kind == ForbiddenKind::N5);
  CHECK(w->elements == std::array<Element, 5>{0, 1, 2, 3, 4});
  CHECK_FALSE(find_forbidden_sublattice(catalog::boolean(2)));
  auto m = find_forbidden_sublattice(catalog::m3());
  REQUIRE(m);
  CHECK(m->kind == ForbiddenKind::M3);
}

TEST_CASE("distributive iff no forbidden sublattice iff the triple law, all lattices up to 7") {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& l : catalog::all_lattices(n)) {
      const bool d = oracle::distributive(l);
      CHECK(is_distributive(l) == d);
      CHECK(l.distributive() == d);
      const auto w = find_forbidden_sublattice(l);
      CHECK(w.has_value() != d);
      if (w) {
        ElementSet five;
        for (Element e : w->elements) five.insert(e);
        CHECK(five.size() == 5);
        CHECK(oracle::closed(l, five));
        const auto& e = w->elements;
        if (w->kind == ForbiddenKind::N5) {
          CHECK(l.leq(e[2], e[3]));
          CHECK(l.meet(e[1], e[3]) == e[0]);
          CHECK(l.join(e[1], e[2]) == e[4]);
        } else {
          CHECK(l.meet(e[1], e[2]) == e[0]);
          CHECK(l.join(e[2], e[3]) == e[4]);
          CHECK(l.meet(e[1], e[3]) == e[0]);
        }
      }
    }
}

TEST_CASE("atoms") {
  const Lattice l = pentagon();
  CHECK(atoms(l) == word(l, "bc"));
  CHECK(is_atomic(l));
  const Lattice c = catalog::chain(3);
  CHECK(atoms(c) == named(c, {"1"}));
  CHECK(is_atomic(c));
  CHECK(is_atomic(catalog::d_lattice(2)));
  const Lattice one = catalog::all_lattices(1).front();
  CHECK(atoms(one).empty());
  CHECK(is_atomic(one));
}

TEST_CASE("dual") {
  const Lattice c = catalog::chain(2);
  const Lattice d = dual(c);
  CHECK(d.label(d.bottom()) == "2");
  CHECK(d.label(d.top()) == "0");
  CHECK(find_isomorphism(c, d));
  CHECK(find_isomorphism(catalog::n5(), dual(catalog::n5())));
  CHECK(find_isomorphism(catalog::boolean(2), dual(catalog::boolean(2))));
  CHECK_FALSE(find_isomorphism(catalog::n5(), catalog::m3()));
  for (const auto& l : sample_lattices()) {
    CHECK(dual(dual(l)) == l);
    const Lattice dl = dual(l);
    for (Element x = 0; x < l.size(); ++x)
      for (Element y = 0; y < l.size(); ++y) {
        CHECK(dl.leq(x, y) == l.leq(y, x));
        CHECK(dl.meet(x, y) == l.join(x, y));
      }
  }
}

TEST_CASE("isomorphism maps preserve order") {
  const Lattice a = catalog::product(catalog::chain(1), catalog::chain(2));
  const Lattice b = catalog::product(catalog::chain(2), catalog::chain(1));
  auto f = find_isomorphism(a, b);
  REQUIRE(f);
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) CHECK(a.leq(x, y) == b.leq((*f)[x], (*f)[y]));
}

TEST_CASE("covers and heights") {
  const Lattice l = pentagon();
  CHECK(l.covers().size() == 5);
  const auto h = heights(l);
  CHECK(h == std::vector<std::size_t>{0, 1, 1, 2, 3});
}

TEST_CASE("element sets") {
  ElementSet s{3, 200};
  CHECK(s.size() == 2);
  CHECK(s.first() == 3);
  CHECK(s.next_from(4) == 200);
  CHECK_THROWS_AS(s.insert(kMaxElements), std::out_of_range);
  CHECK(ElementSet{0} < ElementSet{1});
  CHECK(ElementSet{0, 1} > ElementSet{1});
  CHECK((ElementSet{1, 2} & ElementSet{2, 3}) == ElementSet{2});
  CHECK((ElementSet{1, 2} - ElementSet{2}) == ElementSet{1});
}
