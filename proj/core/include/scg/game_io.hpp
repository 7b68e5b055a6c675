#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

#include "scg/game.hpp"

namespace scg {

/// Parses the JSON instance format. Throws ParseError with the offending
/// field path (and line, for syntax errors). Does not run validate().
Game load_game(std::string_view text);

/// Serializes to the JSON instance format; load_game(save_game(g)) == g.
std::string save_game(const Game& game);

Game load_game_file(const std::filesystem::path& path);
void save_game_file(const Game& game, const std::filesystem::path& path);

/// Integers become JSON numbers, everything else a "p/q" string.
nlohmann::ordered_json rational_to_json(const Rational& value);
/// Accepts JSON numbers (parsed exactly from their decimal text) or
/// "p/q"/decimal strings. `field` is used in diagnostics.
Rational rational_from_json(const nlohmann::json& value, const std::string& field);

nlohmann::ordered_json outcome_to_json(const FollowersOutcome& outcome);
FollowersOutcome outcome_from_json(const nlohmann::json& value, const std::string& field);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace scg
