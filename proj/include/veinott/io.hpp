#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "veinott/games.hpp"
#include "veinott/heyting.hpp"
#include "veinott/lattice.hpp"
#include "veinott/strong_set_order.hpp"

namespace veinott::io {

using json = nlohmann::json;

// Lattice documents: {"elements": [names...], "covers": [[lower, upper], ...]}.
// Elements keep index order; covers are sorted lexicographically by name.
json lattice_to_json(const Lattice& l);
/// Keeps the PosetReport when the document is a poset but not a lattice.
Lattice::BuildResult poset_from_json(const json& doc, std::size_t max_elements = kDefaultMaxElements);
Lattice::BuildResult read_poset(std::string_view text, std::size_t max_elements = kDefaultMaxElements);
Lattice lattice_from_json(const json& doc, std::size_t max_elements = kDefaultMaxElements);
std::string write_lattice(const Lattice& l);
Lattice read_lattice(std::string_view text, std::size_t max_elements = kDefaultMaxElements);

// Game documents: {"s1": lattice, "s2": lattice, "u1": matrix, "u2": matrix}
// with matrix rows indexed by player-1 strategy and entries "p/q".
json game_to_json(const games::SupermodularGame& g);
games::SupermodularGame game_from_json(const json& doc);
std::string write_game(const games::SupermodularGame& g);
games::SupermodularGame read_game(std::string_view text);

/// Whole file contents; throws InputError when unreadable.
std::string slurp(const std::filesystem::path& path);

/// "{a,b,c}" with names in index order.
std::string format_set(const Lattice& l, const ElementSet& s);
/// Parses "{a,b};{c}" into element sets. Throws InputError on bad syntax or
/// unknown names.
std::vector<ElementSet> parse_family(const Lattice& l, std::string_view text);

/// Hasse diagram, edges from lower to upper, ranks by height.
std::string hasse_dot(const Lattice& l);
/// Cover graph of ⟨SL(C), ≤v⟩.
std::string veinott_dot(const Lattice& l, const VeinottPoset& poset);

json verdict_to_json(const Lattice& l, const VeinottVerdict& v);
json residuation_to_json(const Lattice& l, const ResiduationReport& r);
json equilibria_to_json(const games::SupermodularGame& g, const games::EquilibriumReport& r);

}  // namespace veinott::io
