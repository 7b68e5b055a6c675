#include "scg/game_io.hpp"

#include <fstream>
#include <sstream>

#include "scg/errors.hpp"

namespace scg {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

int line_of_offset(std::string_view text, std::size_t offset) {
  int line = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') ++line;
  }
  return line;
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"", where + key);
  return *it;
}

int as_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) throw ParseError("expected an integer", field);
  return v.get<int>();
}

ResourceSet parse_action(const json& v, const std::string& field) {
  // Singleton actions may be written as bare integers.
  if (v.is_number_integer()) return {v.get<int>()};
  if (!v.is_array()) throw ParseError("expected an array of resource indices", field);
  ResourceSet a;
  for (std::size_t k = 0; k < v.size(); ++k) a.push_back(as_int(v[k], field + "[" + std::to_string(k) + "]"));
  return a;
}

std::vector<ResourceSet> parse_actions(const json& v, const std::string& field) {
  if (!v.is_array()) throw ParseError("expected an array of actions", field);
  std::vector<ResourceSet> out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(parse_action(v[k], field + "[" + std::to_string(k) + "]"));
  return out;
}

std::vector<std::vector<Rational>> parse_cost_rows(const json& v, const std::string& field) {
  if (!v.is_array()) throw ParseError("expected an array of cost rows", field);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string row_field = field + "[" + std::to_string(i) + "]";
    if (!v[i].is_array()) throw ParseError("expected an array of costs", row_field);
    std::vector<Rational> row;
    for (std::size_t x = 0; x < v[i].size(); ++x) {
      row.push_back(rational_from_json(v[i][x], row_field + "[" + std::to_string(x) + "]"));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json actions_to_json(const std::vector<ResourceSet>& actions) {
  ordered_json arr = ordered_json::array();
  for (const auto& a : actions) arr.push_back(a);
  return arr;
}

ordered_json costs_to_json(const CostTable& t) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.rows()) {
    ordered_json r = ordered_json::array();
    for (const auto& c : row) r.push_back(rational_to_json(c));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

ordered_json rational_to_json(const Rational& value) {
  if (is_integer(value)) {
    const auto& num = boost::multiprecision::numerator(value);
    if (num >= std::numeric_limits<long long>::min() && num <= std::numeric_limits<long long>::max()) {
      return num.convert_to<long long>();
    }
  }
  return to_string(value);
}

Rational rational_from_json(const json& v, const std::string& field) {
  try {
    if (v.is_number_integer()) {
      if (v.is_number_unsigned()) return Rational(v.get<unsigned long long>());
      return Rational(v.get<long long>());
    }
    if (v.is_number_float()) {
      // dump() yields the shortest round-trip decimal, which we read exactly.
      return parse_rational(v.dump());
    }
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(e.what(), field);
  }
  throw ParseError("expected a number or a \"p/q\" string", field);
}

Game load_game(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), {}, line_of_offset(text, e.byte));
  }
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");

  Game g;
  const auto& kind = require(doc, "kind", "");
  if (!kind.is_string()) throw ParseError("expected a string", "kind");
  g.kind = parse_game_kind(kind.get<std::string>());
  g.resources = as_int(require(doc, "resources", ""), "resources");
  g.leader_actions = parse_actions(require(doc, "leader_actions", ""), "leader_actions");

  if (g.kind == GameKind::tclass_sscg) {
    const auto& classes = require(doc, "classes", "");
    if (!classes.is_array()) throw ParseError("expected an array", "classes");
    for (std::size_t t = 0; t < classes.size(); ++t) {
      const std::string where = "classes[" + std::to_string(t) + "].";
      FollowerClass c;
      c.count = as_int(require(classes[t], "n", where), where + "n");
      c.actions = parse_actions(require(classes[t], "actions", where), where + "actions");
      g.classes.push_back(std::move(c));
    }
  } else {
    const auto& followers = require(doc, "followers", "");
    if (!followers.is_array()) throw ParseError("expected an array", "followers");
    for (std::size_t p = 0; p < followers.size(); ++p) {
      const std::string where = "followers[" + std::to_string(p) + "].";
      g.followers.push_back(FollowerSpec{parse_actions(require(followers[p], "actions", where), where + "actions")});
    }
  }

  bool monotone = false;
  if (auto it = doc.find("monotone"); it != doc.end()) {
    if (!it->is_boolean()) throw ParseError("expected a boolean", "monotone");
    monotone = it->get<bool>();
  }
  g.follower_costs = CostTable(parse_cost_rows(require(doc, "follower_costs", ""), "follower_costs"), monotone);
  g.leader_costs = CostTable(parse_cost_rows(require(doc, "leader_costs", ""), "leader_costs"), monotone);
  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) throw ParseError("expected an object", "metadata");
    g.metadata = *it;
  }
  return g;
}

std::string save_game(const Game& g) {
  ordered_json doc;
  doc["kind"] = to_string(g.kind);
  doc["resources"] = g.resources;
  doc["monotone"] = g.follower_costs.monotone();
  doc["leader_actions"] = actions_to_json(g.leader_actions);
  if (g.kind == GameKind::tclass_sscg) {
    ordered_json classes = ordered_json::array();
    for (const auto& c : g.classes) {
      ordered_json jc;
      jc["n"] = c.count;
      jc["actions"] = actions_to_json(c.actions);
      classes.push_back(std::move(jc));
    }
    doc["classes"] = std::move(classes);
  } else {
    ordered_json followers = ordered_json::array();
    for (const auto& f : g.followers) {
      ordered_json jf;
      jf["actions"] = actions_to_json(f.actions);
      followers.push_back(std::move(jf));
    }
    doc["followers"] = std::move(followers);
  }
  doc["follower_costs"] = costs_to_json(g.follower_costs);
  doc["leader_costs"] = costs_to_json(g.leader_costs);
  if (!g.metadata.empty()) doc["metadata"] = ordered_json::parse(g.metadata.dump());
  return doc.dump(1) + "\n";
}

ordered_json outcome_to_json(const FollowersOutcome& outcome) {
  ordered_json j;
  if (const auto* p = std::get_if<Profile>(&outcome)) {
    j["profile"] = p->actions;
  } else {
    j["configurations"] = std::get<Configurations>(outcome).counts;
  }
  return j;
}

FollowersOutcome outcome_from_json(const json& v, const std::string& field) {
  if (!v.is_object()) throw ParseError("expected an outcome object", field);
  try {
    if (auto it = v.find("profile"); it != v.end()) {
      return Profile{it->get<std::vector<int>>()};
    }
    if (auto it = v.find("configurations"); it != v.end()) {
      return Configurations{it->get<std::vector<std::vector<int>>>()};
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad outcome: ") + e.what(), field);
  }
  throw ParseError("outcome needs a \"profile\" or \"configurations\" field", field);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

Game load_game_file(const std::filesystem::path& path) { return load_game(read_text_file(path)); }

void save_game_file(const Game& game, const std::filesystem::path& path) {
  write_text_file(path, save_game(game));
}

}  // namespace scg
