#include "veinott/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "veinott/errors.hpp"

namespace veinott::io {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
}

json set_to_json(const Lattice& l, const ElementSet& s) {
  json out = json::array();
  s.for_each([&](Element e) { out.push_back(l.label(e)); });
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

games::PayoffTable matrix_from_json(const json& m, const char* key) {
  if (!m.is_array()) throw InputError(std::string("'") + key + "' must be a matrix");
  games::PayoffTable t;
  for (const auto& row : m) {
    if (!row.is_array()) throw InputError(std::string("'") + key + "' rows must be arrays");
    auto& out = t.emplace_back();
    for (const auto& cell : row) {
      if (cell.is_string())
        out.push_back(games::parse_rational(cell.get<std::string>()));
      else if (cell.is_number_integer())
        out.push_back(games::Rational(cell.get<std::int64_t>()));
      else
        throw InputError(std::string("'") + key + "' entries must be \"p/q\" strings or integers");
    }
  }
  return t;
}

}  // namespace

json lattice_to_json(const Lattice& l) {
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [lo, hi] : l.covers()) covers.emplace_back(l.label(lo), l.label(hi));
  std::sort(covers.begin(), covers.end());
  json doc;
  doc["elements"] = l.labels();
  doc["covers"] = json::array();
  for (const auto& [lo, hi] : covers) doc["covers"].push_back({lo, hi});
  return doc;
}

Lattice::BuildResult poset_from_json(const json& doc, std::size_t max_elements) {
  if (!doc.is_object() || !doc.contains("elements") || !doc.contains("covers"))
    throw InputError("lattice document needs 'elements' and 'covers'");
  const json& elements = doc.at("elements");
  const json& covers = doc.at("covers");
  if (!elements.is_array() || !covers.is_array()) throw InputError("'elements' and 'covers' must be lists");
  std::vector<std::string> labels;
  for (const auto& e : elements) {
    if (!e.is_string()) throw InputError("element names must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<Lattice::Cover> pairs;
  for (const auto& c : covers) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw InputError("each cover must be a list of two element names");
    pairs.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return Lattice::from_covers(std::move(labels), pairs, max_elements);
}

Lattice::BuildResult read_poset(std::string_view text, std::size_t max_elements) {
  return poset_from_json(parse_json(text), max_elements);
}

Lattice lattice_from_json(const json& doc, std::size_t max_elements) {
  return expect_lattice(poset_from_json(doc, max_elements));
}

std::string write_lattice(const Lattice& l) { return lattice_to_json(l).dump(2) + "\n"; }

Lattice read_lattice(std::string_view text, std::size_t max_elements) {
  return lattice_from_json(parse_json(text), max_elements);
}

json game_to_json(const games::SupermodularGame& g) {
  auto table = [](const games::PayoffTable& t) {
    json m = json::array();
    for (const auto& row : t) {
      json r = json::array();
      for (const auto& v : row) r.push_back(games::to_string(v));
      m.push_back(std::move(r));
    }
    return m;
  };
  json doc;
  doc["s1"] = lattice_to_json(g.strategies(games::Player::one));
  doc["s2"] = lattice_to_json(g.strategies(games::Player::two));
  doc["u1"] = table(g.payoffs(games::Player::one));
  doc["u2"] = table(g.payoffs(games::Player::two));
  return doc;
}

games::SupermodularGame game_from_json(const json& doc) {
  for (const char* key : {"s1", "s2", "u1", "u2"})
    if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("game document needs '") + key + "'");
  return games::SupermodularGame(lattice_from_json(doc.at("s1")), lattice_from_json(doc.at("s2")),
                                 matrix_from_json(doc.at("u1"), "u1"), matrix_from_json(doc.at("u2"), "u2"));
}

std::string write_game(const games::SupermodularGame& g) { return game_to_json(g).dump(2) + "\n"; }

games::SupermodularGame read_game(std::string_view text) { return game_from_json(parse_json(text)); }

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_set(const Lattice& l, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element e) {
    if (!first) out += ',';
    out += l.label(e);
    first = false;
  });
  return out + "}";
}

std::vector<ElementSet> parse_family(const Lattice& l, std::string_view text) {
  std::vector<ElementSet> family;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto semi = std::min(text.find(';', pos), text.size());
    std::string part = trim(text.substr(pos, semi - pos));
    pos = semi + 1;
    if (part.size() < 2 || part.front() != '{' || part.back() != '}')
      throw InputError("family members must look like {a,b,...}: '" + part + "'");
    ElementSet s;
    std::string_view body(part);
    body = body.substr(1, body.size() - 2);
    std::size_t p = 0;
    while (p <= body.size()) {
      const auto comma = std::min(body.find(',', p), body.size());
      const std::string name = trim(body.substr(p, comma - p));
      p = comma + 1;
      if (name.empty()) throw InputError("empty element name in family '" + std::string(text) + "'");
      s.insert(l.index_of(name));
    }
    family.push_back(s);
  }
  return family;
}

std::string hasse_dot(const Lattice& l) {
  const auto h = heights(l);
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  std::map<std::size_t, std::vector<Element>> ranks;
  for (Element x = 0; x < l.size(); ++x) ranks[h[x]].push_back(x);
  for (const auto& [rank, xs] : ranks) {
    out << "  { rank=same;";
    for (Element x : xs) out << ' ' << dot_quote(l.label(x)) << ';';
    out << " }  // height " << rank << "\n";
  }
  for (auto [lo, hi] : l.covers()) out << "  " << dot_quote(l.label(lo)) << " -> " << dot_quote(l.label(hi)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string veinott_dot(const Lattice& l, const VeinottPoset& poset) {
  // Height in the Veinott poset = longest chain below, via the cover graph.
  const auto covers = poset.covers();
  std::vector<std::size_t> order(poset.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return poset.below(a).count() < poset.below(b).count(); });
  std::vector<std::size_t> h(poset.size(), 0);
  for (auto i : order)
    for (auto [lo, hi] : covers)
      if (hi == i) h[i] = std::max(h[i], h[lo] + 1);

  std::ostringstream out;
  out << "digraph veinott {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  std::map<std::size_t, std::vector<std::size_t>> ranks;
  for (std::size_t i = 0; i < poset.size(); ++i) ranks[h[i]].push_back(i);
  for (const auto& [rank, xs] : ranks) {
    out << "  { rank=same;";
    for (auto i : xs) out << ' ' << dot_quote(format_set(l, poset[i].carrier())) << ';';
    out << " }\n";
  }
  for (auto [lo, hi] : covers)
    out << "  " << dot_quote(format_set(l, poset[lo].carrier())) << " -> "
        << dot_quote(format_set(l, poset[hi].carrier())) << ";\n";
  out << "}\n";
  return out.str();
}

json verdict_to_json(const Lattice& l, const VeinottVerdict& v) {
  json doc;
  doc["is_lattice"] = v.is_lattice;
  doc["sl_size"] = v.sl_size;
  if (v.failure) {
    json f;
    f["missing"] = v.failure->missing == MissingBound::glb ? "glb" : "lub";
    f["pair"] = {set_to_json(l, v.failure->first.carrier()), set_to_json(l, v.failure->second.carrier())};
    f["extremal_bounds"] = json::array();
    for (const auto& s : v.failure->extremal_bounds) f["extremal_bounds"].push_back(set_to_json(l, s.carrier()));
    doc["failure"] = std::move(f);
  } else {
    doc["failure"] = nullptr;
  }
  return doc;
}

json residuation_to_json(const Lattice& l, const ResiduationReport& r) {
  auto witness = [&](const std::optional<FrameWitness>& w) -> json {
    if (!w) return nullptr;
    return json{{"x", l.label(w->x)}, {"Y", set_to_json(l, w->ys)}};
  };
  return json{{"is_frame", r.is_frame},
              {"is_coframe", r.is_coframe},
              {"frame_witness", witness(r.frame_witness)},
              {"coframe_witness", witness(r.coframe_witness)}};
}

json equilibria_to_json(const games::SupermodularGame& g, const games::EquilibriumReport& r) {
  const Lattice& s1 = g.strategies(games::Player::one);
  const Lattice& s2 = g.strategies(games::Player::two);
  auto profile = [&](games::Profile p) { return json::array({s1.label(p.first), s2.label(p.second)}); };
  json eq = json::array();
  for (const auto& p : r.equilibria) eq.push_back(profile(p));
  return json{{"equilibria", eq},
              {"least", profile(r.least)},
              {"greatest", profile(r.greatest)},
              {"is_complete_lattice", r.is_complete_lattice}};
}

}  // namespace veinott::io
