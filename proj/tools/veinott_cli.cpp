// veinott: command-line front end for the lattice library.
//
//   veinott check SOURCE            lattice report
//   veinott sl SOURCE               size of SL(C) and whether (SL(C), ≤v) is a lattice
//   veinott glb SOURCE --family F   closed-form glb, checked against brute force
//   veinott lub SOURCE --family F
//   veinott counterexample          reproduces the N5 and M3 facts, nonzero on mismatch
//   veinott game SOURCE             equilibria of a supermodular game
//   veinott export SOURCE           Hasse diagram (or --veinott) as DOT
//
// SOURCE is a file path or a catalog spec (n5, m3, chain:3, boolean:2, ...).
// Game sources are a file path, `coordination`, `matching-pennies` or `random`.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "veinott/catalog.hpp"
#include "veinott/errors.hpp"
#include "veinott/games.hpp"
#include "veinott/heyting.hpp"
#include "veinott/io.hpp"
#include "veinott/lattice.hpp"
#include "veinott/strong_set_order.hpp"

namespace {

using namespace veinott;
using io::json;

constexpr int kOk = 0;
constexpr int kRefused = 1;
constexpr int kBadInput = 2;

struct Options {
  std::string verb;
  std::string source;
  std::string family;
  std::string format = "text";
  std::string out;
  std::string s1 = "chain:2";
  std::string s2 = "chain:2";
  std::size_t cap = kDefaultSublatticeCap;
  std::uint64_t seed = 0;
  bool veinott_poset = false;
};

std::size_t default_cap() {
  const char* env = std::getenv("VEINOTT_CAP");
  if (env == nullptr || *env == '\0') return kDefaultSublatticeCap;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw InputError(std::string("VEINOTT_CAP must be a positive integer, got '") + env + "'");
}

Lattice::BuildResult load_poset(const Options& o) {
  if (std::filesystem::is_regular_file(o.source)) return io::read_poset(io::slurp(o.source));
  return catalog::build(catalog::parse_spec(o.source, o.seed));
}

Lattice load_lattice(const Options& o) {
  auto r = load_poset(o);
  if (auto* report = std::get_if<PosetReport>(&r)) throw InputError("not a lattice: " + report->reason);
  return std::get<Lattice>(std::move(r));
}

games::SupermodularGame load_game(const Options& o) {
  if (o.source == "coordination") return games::coordination_game();
  if (o.source == "matching-pennies") return games::matching_pennies();
  if (o.source == "random")
    return games::random_supermodular_game(o.seed, catalog::build(catalog::parse_spec(o.s1, o.seed)),
                                           catalog::build(catalog::parse_spec(o.s2, o.seed)));
  if (!std::filesystem::is_regular_file(o.source)) throw InputError("no such game or file '" + o.source + "'");
  return io::read_game(io::slurp(o.source));
}

std::string names(const Lattice& l, const ElementSet& s) {
  std::string out;
  s.for_each([&](Element e) { out += (out.empty() ? "" : ", ") + l.label(e); });
  return out.empty() ? "(none)" : out;
}

std::string sets(const Lattice& l, const std::vector<Sublattice>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + io::format_set(l, s.carrier());
  return out;
}

// --------------------------------------------------------------------------

int run_check(const Options& o, std::ostream& out) {
  auto r = load_poset(o);
  if (auto* report = std::get_if<PosetReport>(&r)) {
    if (o.format == "machine") {
      json doc{{"is_lattice", false}, {"reason", report->reason}};
      out << doc.dump(2) << "\n";
    } else {
      out << "not a lattice: " << report->reason << "\n";
    }
    return kOk;
  }
  const Lattice& l = std::get<Lattice>(r);
  const auto forbidden = find_forbidden_sublattice(l);
  const auto residuation = check_residuation(l);
  const ElementSet at = atoms(l);

  if (o.format == "machine") {
    json doc{{"is_lattice", true}, {"size", l.size()}, {"distributive", l.distributive()}};
    if (forbidden) {
      json tuple = json::array();
      for (Element e : forbidden->elements) tuple.push_back(l.label(e));
      doc["forbidden"] = {{"kind", forbidden->kind == ForbiddenKind::N5 ? "N5" : "M3"}, {"elements", tuple}};
    } else {
      doc["forbidden"] = nullptr;
    }
    doc["residuation"] = io::residuation_to_json(l, residuation);
    json a = json::array();
    at.for_each([&](Element e) { a.push_back(l.label(e)); });
    doc["atoms"] = a;
    doc["atomic"] = is_atomic(l);
    out << doc.dump(2) << "\n";
    return kOk;
  }

  out << "lattice with " << l.size() << " elements, bottom " << l.label(l.bottom()) << ", top "
      << l.label(l.top()) << "\n";
  if (forbidden) {
    out << "not distributive: " << (forbidden->kind == ForbiddenKind::N5 ? "N5" : "M3") << " on";
    for (Element e : forbidden->elements) out << ' ' << l.label(e);
    out << "\n";
  } else {
    out << "distributive\n";
  }
  auto law = [&](const char* name, bool holds, const std::optional<FrameWitness>& w) {
    out << (holds ? "" : "not ") << "a " << name;
    if (w) out << ": x = " << l.label(w->x) << ", Y = " << io::format_set(l, w->ys);
    out << "\n";
  };
  law("frame", residuation.is_frame, residuation.frame_witness);
  law("coframe", residuation.is_coframe, residuation.coframe_witness);
  out << "atoms: " << names(l, at) << (is_atomic(l) ? " (atomic)" : " (not atomic)") << "\n";
  return kOk;
}

int run_sl(const Options& o, std::ostream& out) {
  const Lattice l = load_lattice(o);
  const VeinottVerdict v = analyze(l, o.cap);
  if (o.format == "machine") {
    out << io::verdict_to_json(l, v).dump(2) << "\n";
    return kOk;
  }
  out << "|SL| = " << v.sl_size << "\n";
  if (!v.failure) {
    out << "SL is a lattice under the Veinott order\n";
    return kOk;
  }
  const auto& f = *v.failure;
  const bool glb = f.missing == MissingBound::glb;
  out << "SL not a lattice; witness pair " << io::format_set(l, f.first.carrier()) << " / "
      << io::format_set(l, f.second.carrier()) << " has no " << (glb ? "glb" : "lub") << "\n";
  out << (glb ? "maximal lower bounds: " : "minimal upper bounds: ") << sets(l, f.extremal_bounds) << "\n";
  return kOk;
}

int run_bound(const Options& o, std::ostream& out, bool lower) {
  const Lattice l = load_lattice(o);
  if (o.family.empty()) throw InputError("--family is required");
  std::vector<Sublattice> members;
  for (const auto& s : io::parse_family(l, o.family)) members.emplace_back(l, s);
  const SublatticeFamily f(std::move(members));
  if (!l.distributive())
    throw PreconditionError(std::string("the closed-form ") + (lower ? "glb" : "lub") +
                            " requires a distributive lattice; see `veinott sl` for the brute-force analysis");

  const Sublattice result = lower ? veinott_glb_formula(l, f) : veinott_lub_formula(l, f);
  std::string oracle = "skipped (cap exceeded)";
  bool agrees = true;
  try {
    const auto brute = lower ? veinott_glb_bruteforce(l, f, o.cap) : veinott_lub_bruteforce(l, f, o.cap);
    agrees = brute && *brute == result;
    oracle = agrees ? "agrees" : "disagrees";
  } catch (const CapExceeded&) {
  }

  if (o.format == "machine") {
    json set = json::array();
    result.carrier().for_each([&](Element e) { set.push_back(l.label(e)); });
    out << json{{lower ? "glb" : "lub", set}, {"oracle", oracle}}.dump(2) << "\n";
  } else {
    out << (lower ? "glb = " : "lub = ") << io::format_set(l, result.carrier()) << "\n";
    out << "brute-force oracle: " << oracle << "\n";
  }
  return agrees ? kOk : kRefused;
}

int run_counterexample(const Options& o, std::ostream& out) {
  bool all = true;
  json results = json::array();
  auto report = [&](const std::string& what, bool ok) {
    all = all && ok;
    results.push_back({{"fact", what}, {"ok", ok}});
    if (o.format != "machine") out << (ok ? "ok      " : "FAILED  ") << what << "\n";
  };
  auto parse = [](const Lattice& l, const std::string& word) {
    ElementSet s;
    for (char c : word) s.insert(l.index_of(std::string(1, c)));
    return s;
  };
  auto parse_all = [&](const Lattice& l, std::initializer_list<const char*> words) {
    std::vector<ElementSet> v;
    for (const char* w : words) v.push_back(parse(l, w));
    std::sort(v.begin(), v.end());
    return v;
  };

  {
    const Lattice l = catalog::n5();
    const VeinottPoset p(l, o.cap);
    const auto ed = *p.index_of(parse(l, "ed"));
    const auto abce = *p.index_of(parse(l, "abce"));
    auto carriers = [&](const VeinottPoset::Row& row) {
      std::vector<ElementSet> v;
      for (auto i = row.find_first(); i != VeinottPoset::Row::npos; i = row.find_next(i))
        v.push_back(p[i].carrier());
      return v;
    };
    report("N5: down-set of ed has the 14 listed members",
           carriers(p.below(ed)) == parse_all(l, {"a", "c", "d", "ab", "ac", "ad", "cd", "ed", "acd", "ade", "cde",
                                                  "abde", "acde", "abcde"}));
    report("N5: down-set of abce is {a, ab, ac, abce}", carriers(p.below(abce)) == parse_all(l, {"a", "ab", "ac", "abce"}));
    const std::size_t pair[] = {ed, abce};
    const auto lb = p.lower_bounds(pair);
    report("N5: common lower bounds of ed, abce are {a, ab, ac}", carriers(lb) == parse_all(l, {"a", "ab", "ac"}));
    std::vector<ElementSet> maximal;
    for (auto i : p.maximal(lb)) maximal.push_back(p[i].carrier());
    report("N5: maximal common lower bounds are ab and ac", maximal == parse_all(l, {"ab", "ac"}));
    const auto v = analyze(l, p);
    report("N5: SL is not a lattice, witness ed / abce",
           !v.is_lattice && v.failure && v.failure->first.carrier() == parse(l, "ed") &&
               v.failure->second.carrier() == parse(l, "abce"));
  }
  {
    const Lattice l = catalog::m3();
    const VeinottPoset p(l, o.cap);
    const std::size_t pair[] = {*p.index_of(parse(l, "eb")), *p.index_of(parse(l, "ec"))};
    const auto lb = p.lower_bounds(pair);
    const auto abce = *p.index_of(parse(l, "abce"));
    const auto abcde = *p.index_of(parse(l, "abcde"));
    report("M3: abce and abcde are lower bounds of eb, ec", lb.test(abce) && lb.test(abcde));
    report("M3: abce and abcde are incomparable", !p.leq(abce, abcde) && !p.leq(abcde, abce));
    report("M3: eb, ec have no glb", !p.glb(pair).has_value());
  }

  if (o.format == "machine") out << json{{"all_ok", all}, {"facts", results}}.dump(2) << "\n";
  return all ? kOk : kRefused;
}

int run_game(const Options& o, std::ostream& out) {
  const auto g = load_game(o);
  const auto sm = games::check_supermodular(g);
  if (!sm.holds) {
    const auto& w = *sm.witness;
    const Lattice& own = g.strategies(w.player);
    const Lattice& opp = g.strategies(w.player == games::Player::one ? games::Player::two : games::Player::one);
    std::ostringstream msg;
    msg << "game is not supermodular: player " << (w.player == games::Player::one ? 1 : 2) << " fails "
        << (w.kind == games::ViolationKind::own_supermodularity ? "supermodularity" : "increasing differences")
        << " at own " << own.label(w.own_low) << "/" << own.label(w.own_high) << ", opponent "
        << opp.label(w.opponent_low) << "/" << opp.label(w.opponent_high);
    throw PreconditionError(msg.str());
  }
  const auto r = games::solve(g);
  if (o.format == "machine") {
    out << io::equilibria_to_json(g, r).dump(2) << "\n";
    return kOk;
  }
  const Lattice& s1 = g.strategies(games::Player::one);
  const Lattice& s2 = g.strategies(games::Player::two);
  auto profile = [&](games::Profile p) { return "(" + s1.label(p.first) + ", " + s2.label(p.second) + ")"; };
  out << "pure equilibria (" << r.equilibria.size() << "):";
  for (const auto& p : r.equilibria) out << ' ' << profile(p);
  out << "\n";
  out << "least " << profile(r.least) << " after " << r.least_iterations << " rounds\n";
  out << "greatest " << profile(r.greatest) << " after " << r.greatest_iterations << " rounds\n";
  out << "equilibrium set " << (r.is_complete_lattice ? "is" : "is not") << " a complete lattice\n";
  return kOk;
}

int run_export(const Options& o, std::ostream& out) {
  const Lattice l = load_lattice(o);
  if (o.format == "machine") {
    out << io::write_lattice(l);
    return kOk;
  }
  if (o.veinott_poset)
    out << io::veinott_dot(l, VeinottPoset(l, o.cap));
  else
    out << io::hasse_dot(l);
  return kOk;
}

int dispatch(const Options& o, std::ostream& out) {
  if (o.format == "dot" && o.verb != "export") throw InputError("--format dot applies to export only");
  if (o.verb == "check") return run_check(o, out);
  if (o.verb == "sl") return run_sl(o, out);
  if (o.verb == "glb") return run_bound(o, out, true);
  if (o.verb == "lub") return run_bound(o, out, false);
  if (o.verb == "counterexample") return run_counterexample(o, out);
  if (o.verb == "game") return run_game(o, out);
  return run_export(o, out);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Finite lattices, the Veinott order on sublattices, and supermodular games"};
  app.require_subcommand(1, 1);

  try {
    o.cap = default_cap();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }

  auto common = [&](CLI::App* sub, bool source) {
    if (source) sub->add_option("source", o.source, "File path or catalog spec")->required();
    sub->add_option("--cap", o.cap, "SL enumeration cap (default 50000 or $VEINOTT_CAP)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Seed for random catalog entries and games");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "machine", "dot"}));
    sub->add_option("--out", o.out, "Write output to this path");
  };
  common(app.add_subcommand("check", "Lattice, distributivity, frame and atom report"), true);
  common(app.add_subcommand("sl", "Size of SL(C) and lattice verdict under the Veinott order"), true);
  for (const char* verb : {"glb", "lub"}) {
    auto* sub = app.add_subcommand(verb, std::string("Closed-form Veinott ") + verb + " of a family");
    common(sub, true);
    sub->add_option("--family", o.family, "Family such as '{a,b};{c}'")->required();
  }
  common(app.add_subcommand("counterexample", "Self-test on the N5 and M3 examples"), false);
  auto* game = app.add_subcommand("game", "Pure equilibria of a supermodular game");
  common(game, true);
  game->add_option("--s1", o.s1, "Player 1 strategy lattice for `random`");
  game->add_option("--s2", o.s2, "Player 2 strategy lattice for `random`");
  auto* exp = app.add_subcommand("export", "DOT of the Hasse diagram or the Veinott poset");
  common(exp, true);
  exp->add_flag("--veinott", o.veinott_poset, "Export the Veinott poset of SL(C)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }
  o.verb = app.get_subcommands().front()->get_name();

  std::ostringstream buffer;
  int status = kOk;
  try {
    status = dispatch(o, buffer);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const CapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const PreconditionError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  }

  if (o.out.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write '" << o.out << "'\n";
      return kBadInput;
    }
    file << buffer.str();
  }
  return status;
}
