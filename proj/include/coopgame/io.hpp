#ifndef COOPGAME_IO_HPP
#define COOPGAME_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coopgame/af.hpp"
#include "coopgame/game.hpp"

namespace coopgame {

// Game files are JSON: {"players": m, "values": {"1,3": "p/q", ...}} with
// comma-sorted 1-indexed member lists as keys. The empty coalition may be
// omitted (implied 0); every other coalition must be present. Values are
// "p/q" / integer strings or plain JSON integers; floats are rejected.
Game parse_game_json(const std::string& text);
std::string write_game_json(const Game& g);

// Line-oriented framework format: "p af <n_args>" then one "att <i> <j>"
// per attack, 1-indexed. Blank lines and lines starting with '#' are skipped.
Framework parse_framework_text(const std::string& text);
std::string write_framework_text(const Framework& f);

// DOT export; node_labels (when given) must have one entry per argument.
std::string write_framework_dot(const Framework& f,
                                const std::vector<std::string>& node_labels = {});

// FNV-1a 64-bit content digest, as "fnv1a64:<hex>"; identifies report inputs.
std::string content_digest(std::string_view bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace coopgame

#endif
