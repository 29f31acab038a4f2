#include "veinott/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <set>

#include "veinott/errors.hpp"

namespace veinott::catalog {

namespace {

std::uint64_t parse_number(std::string_view text, std::string_view whole) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InputError("bad number '" + std::string(text) + "' in catalog spec '" + std::string(whole) + "'");
  return value;
}

void require_positive(std::uint64_t v, const char* what) {
  if (v == 0) throw InputError(std::string(what) + " parameter must be positive");
}

Lattice from_down_sets(std::vector<std::string> labels, std::vector<ElementSet> down) {
  return expect_lattice(Lattice::from_order(std::move(labels), std::move(down), kMaxElements));
}

}  // namespace

Spec parse_spec(std::string_view text, std::uint64_t default_seed) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto no_args = [&](Kind k) {
    if (!rest.empty()) throw InputError("catalog spec '" + std::string(text) + "' takes no parameter");
    return Spec{k, 0, 0, {}};
  };
  auto one_arg = [&](Kind k) {
    if (rest.empty()) throw InputError("catalog spec '" + std::string(text) + "' needs a parameter");
    return Spec{k, parse_number(rest, text), 0, {}};
  };

  if (head == "n5") return no_args(Kind::n5);
  if (head == "m3") return no_args(Kind::m3);
  if (head == "chain") return one_arg(Kind::chain);
  if (head == "boolean") return one_arg(Kind::boolean);
  if (head == "divisor") return one_arg(Kind::divisor);
  if (head == "d" || head == "d_lattice") return one_arg(Kind::d_lattice);
  if (head == "random") {
    const auto sep = rest.find(':');
    if (sep == std::string_view::npos) return Spec{Kind::random, parse_number(rest, text), default_seed, {}};
    return Spec{Kind::random, parse_number(rest.substr(sep + 1), text), parse_number(rest.substr(0, sep), text), {}};
  }
  if (head == "product") {
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw InputError("product spec needs two factors: product:A,B");
    Spec s{Kind::product, 0, 0, {}};
    s.factors.push_back(parse_spec(rest.substr(0, comma), default_seed));
    s.factors.push_back(parse_spec(rest.substr(comma + 1), default_seed));
    return s;
  }
  throw InputError("unknown catalog lattice '" + std::string(text) + "'");
}

std::string to_string(const Spec& s) {
  switch (s.kind) {
    case Kind::n5: return "n5";
    case Kind::m3: return "m3";
    case Kind::chain: return "chain:" + std::to_string(s.parameter);
    case Kind::boolean: return "boolean:" + std::to_string(s.parameter);
    case Kind::divisor: return "divisor:" + std::to_string(s.parameter);
    case Kind::d_lattice: return "d:" + std::to_string(s.parameter);
    case Kind::random: return "random:" + std::to_string(s.seed) + ":" + std::to_string(s.parameter);
    case Kind::product: return "product:" + to_string(s.factors.at(0)) + "," + to_string(s.factors.at(1));
  }
  return "?";
}

Lattice build(const Spec& s) {
  switch (s.kind) {
    case Kind::n5: return n5();
    case Kind::m3: return m3();
    case Kind::chain: return chain(s.parameter);
    case Kind::boolean: return boolean(s.parameter);
    case Kind::divisor: return divisor(s.parameter);
    case Kind::d_lattice: return d_lattice(s.parameter);
    case Kind::random: return random_lattice(s.seed, s.parameter);
    case Kind::product:
      if (s.factors.size() != 2) throw InputError("product spec needs exactly two factors");
      return product(build(s.factors[0]), build(s.factors[1]));
  }
  throw InputError("unknown catalog kind");
}

Lattice n5() {
  return expect_lattice(Lattice::from_covers({"a", "b", "c", "d", "e"},
                                             {{"a", "b"}, {"a", "c"}, {"c", "d"}, {"b", "e"}, {"d", "e"}}));
}

Lattice m3() {
  return expect_lattice(Lattice::from_covers(
      {"a", "b", "c", "d", "e"}, {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "e"}, {"c", "e"}, {"d", "e"}}));
}

Lattice chain(std::uint64_t n) {
  require_positive(n, "chain");
  if (n + 1 > kMaxElements) throw InputError("chain too long");
  std::vector<std::string> labels;
  std::vector<ElementSet> down;
  for (std::uint64_t i = 0; i <= n; ++i) {
    labels.push_back(std::to_string(i));
    down.push_back(ElementSet::first_n(i + 1));
  }
  return from_down_sets(std::move(labels), std::move(down));
}

Lattice boolean(std::uint64_t n) {
  require_positive(n, "boolean");
  if (n > 8) throw InputError("boolean lattice limited to 8 atoms");
  const std::uint32_t full = (1U << n) - 1;
  std::vector<std::string> labels;
  std::vector<ElementSet> down;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    std::string name;
    if (mask == 0) {
      name = "bot";
    } else if (mask == full) {
      name = "top";
    } else {
      for (std::uint32_t a = 0; a < n; ++a)
        if (mask & (1U << a)) name += static_cast<char>('p' + a);
    }
    labels.push_back(std::move(name));
    ElementSet d;
    for (std::uint32_t sub = 0; sub <= full; ++sub)
      if ((sub & ~mask) == 0) d.insert(sub);
    down.push_back(d);
  }
  return from_down_sets(std::move(labels), std::move(down));
}

Lattice divisor(std::uint64_t n) {
  require_positive(n, "divisor");
  if (n > 1000000) throw InputError("divisor lattice limited to n <= 10^6");
  std::vector<std::uint64_t> divs;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  if (divs.size() > kMaxElements) throw InputError("too many divisors");
  std::vector<std::string> labels;
  std::vector<ElementSet> down(divs.size());
  for (std::size_t i = 0; i < divs.size(); ++i) {
    labels.push_back(std::to_string(divs[i]));
    for (std::size_t j = 0; j <= i; ++j)
      if (divs[i] % divs[j] == 0) down[i].insert(static_cast<Element>(j));
  }
  return from_down_sets(std::move(labels), std::move(down));
}

Lattice product(const Lattice& a, const Lattice& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (na * nb > kMaxElements) throw InputError("product lattice too large");
  std::vector<std::string> labels;
  std::vector<ElementSet> down(na * nb);
  for (Element x = 0; x < na; ++x)
    for (Element y = 0; y < nb; ++y) {
      labels.push_back(a.label(x) + ":" + b.label(y));
      for (Element x2 = 0; x2 < na; ++x2)
        for (Element y2 = 0; y2 < nb; ++y2)
          if (a.leq(x2, x) && b.leq(y2, y)) down[x * nb + y].insert(static_cast<Element>(x2 * nb + y2));
    }
  return from_down_sets(std::move(labels), std::move(down));
}

Lattice d_lattice(std::uint64_t n) {
  require_positive(n, "d_lattice");
  if (2 * n + 6 > kMaxElements) throw InputError("d_lattice too large");
  auto a = [](std::uint64_t i) { return "a_" + std::to_string(i); };
  auto b = [](std::uint64_t i) { return "b_" + std::to_string(i); };
  std::vector<std::string> labels{"top", "b"};
  for (std::uint64_t i = 0; i <= n; ++i) labels.push_back(a(i));
  for (std::uint64_t i = 0; i <= n; ++i) labels.push_back(b(i));
  labels.push_back("a_w");
  labels.push_back("bot");

  std::vector<Lattice::Cover> covers{{"a_0", "top"}, {"b", "top"}, {"b_0", "b"}};
  for (std::uint64_t i = 0; i <= n; ++i) {
    covers.emplace_back(b(i), a(i));
    if (i < n) {
      covers.emplace_back(a(i + 1), a(i));
      covers.emplace_back(b(i + 1), b(i));
    }
  }
  covers.emplace_back("a_w", a(n));
  covers.emplace_back("bot", b(n));
  covers.emplace_back("bot", "a_w");
  return expect_lattice(Lattice::from_covers(std::move(labels), covers, kMaxElements));
}

Lattice random_lattice(std::uint64_t seed, std::uint64_t n) {
  require_positive(n, "random");
  if (n > 16) throw InputError("random lattice limited to 16 generating points");
  std::mt19937_64 rng(seed);

  // Random strict order compatible with index order, then its down-sets.
  std::vector<ElementSet> principal(n);
  for (Element i = 0; i < n; ++i) {
    principal[i].insert(i);
    for (Element j = 0; j < i; ++j)
      if (rng() % 100 < 35) principal[i] |= principal[j];
  }

  // Closure system generated by the principal down-sets and the whole set.
  const ElementSet whole = ElementSet::first_n(n);
  std::set<ElementSet> family(principal.begin(), principal.end());
  family.insert(whole);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<ElementSet> snapshot(family.begin(), family.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j)
        if (family.insert(snapshot[i] & snapshot[j]).second) grew = true;
    if (family.size() > kMaxElements) throw InputError("random lattice completion too large");
  }

  std::vector<ElementSet> members(family.begin(), family.end());
  std::stable_sort(members.begin(), members.end(),
                   [](const ElementSet& x, const ElementSet& y) { return x.size() < y.size(); });
  std::vector<std::string> labels;
  std::size_t extra = 0;
  for (const auto& m : members) {
    auto it = std::find(principal.begin(), principal.end(), m);
    if (it != principal.end())
      labels.push_back("p" + std::to_string(it - principal.begin()));
    else if (m.empty())
      labels.push_back("bot");
    else if (m == whole)
      labels.push_back("top");
    else
      labels.push_back("c" + std::to_string(extra++));
  }
  std::vector<ElementSet> down(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if (members[j].is_subset_of(members[i])) down[i].insert(static_cast<Element>(j));
  return from_down_sets(std::move(labels), std::move(down));
}

SublatticeFamily d_family(const Lattice& l) {
  if (l.size() < 8 || l.size() % 2 != 0) throw InputError("not a d_lattice");
  const std::uint64_t n = (l.size() - 6) / 2;
  if (!(l == d_lattice(n))) throw InputError("not a d_lattice");
  std::vector<Sublattice> members;
  ElementSet x{l.index_of("top")};
  for (std::uint64_t i = 0; i <= n; ++i) {
    x.insert(l.index_of("a_" + std::to_string(i)));
    members.emplace_back(l, x);
  }
  return SublatticeFamily(std::move(members));
}

std::vector<Lattice> all_lattices(std::size_t n) {
  if (n == 0 || n > 8) throw InputError("all_lattices supports 1 <= n <= 8");
  if (n == 1) return {expect_lattice(Lattice::from_order({"0"}, {ElementSet{0}}))};

  // Inner elements 1..k sit between bottom 0 and top k+1. Every poset has a
  // linear extension, so strict orders using only pairs i < j cover all
  // isomorphism classes.
  const std::size_t k = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) slots.emplace_back(i, j);

  std::vector<std::size_t> perm(k);
  std::set<std::uint64_t> seen;
  std::vector<Lattice> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    // less[i] bit j  ⟺  i < j
    std::vector<std::uint32_t> less(k, 0);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (bits >> s & 1U) less[slots[s].first] |= 1U << slots[s].second;
    bool transitive = true;
    for (std::size_t i = 0; i < k && transitive; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if ((less[i] >> j & 1U) && (less[j] & ~less[i]) != 0) {
          transitive = false;
          break;
        }
    if (!transitive) continue;

    std::uint64_t key = ~std::uint64_t{0};
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      std::uint64_t code = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          if (less[i] >> j & 1U) code |= std::uint64_t{1} << (perm[i] * k + perm[j]);
      key = std::min(key, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.count(key)) continue;

    std::vector<std::string> labels{"bot"};
    for (std::size_t i = 1; i <= k; ++i) labels.push_back("x" + std::to_string(i));
    labels.push_back("top");
    std::vector<ElementSet> down(n);
    for (Element x = 0; x < n; ++x) {
      down[x].insert(0);
      down[x].insert(x);
    }
    down[n - 1] = ElementSet::first_n(n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (less[i] >> j & 1U) down[j + 1].insert(static_cast<Element>(i + 1));

    auto built = Lattice::from_order(std::move(labels), std::move(down));
    if (auto* l = std::get_if<Lattice>(&built)) {
      seen.insert(key);
      out.push_back(std::move(*l));
    }
  }
  return out;
}

}  // namespace veinott::catalog
