#include "coopgame/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coopgame/errors.hpp"

namespace coopgame {

namespace {

std::vector<int> parse_coalition_key(const std::string& key, int m) {
    std::vector<int> players;
    if (key.empty()) return players;
    std::size_t start = 0;
    while (start <= key.size()) {
        std::size_t comma = key.find(',', start);
        std::string piece = comma == std::string::npos ? key.substr(start)
                                                       : key.substr(start, comma - start);
        if (piece.empty() || piece.size() > 2 ||
            !std::all_of(piece.begin(), piece.end(),
                         [](unsigned char ch) { return std::isdigit(ch); }))
            throw ParseError("bad coalition key '" + key + "'");
        int player = std::stoi(piece);
        if (player < 1 || player > m)
            throw ParseError("player " + piece + " out of range in key '" + key + "'");
        if (!players.empty() && players.back() >= player)
            throw ParseError("coalition key '" + key + "' must be strictly increasing");
        players.push_back(player);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return players;
}

Rational rational_from_json(const nlohmann::json& j, const std::string& key) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_unsigned()) return Rational(j.get<unsigned long long>());
    throw ParseError("value for '" + key + "' must be a \"p/q\" or integer string; "
                     "floating-point literals are not accepted");
}

std::string coalition_key(Coalition c) {
    std::string key;
    for (int p : c.members()) {
        if (!key.empty()) key += ',';
        key += std::to_string(p);
    }
    return key;
}

} // namespace

Game parse_game_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("players") || !doc.contains("values"))
        throw ParseError("game file must be an object with 'players' and 'values'");
    if (!doc["players"].is_number_integer())
        throw ParseError("'players' must be an integer");
    const int m = doc["players"].get<int>();
    if (m < 1 || m > kMaxPlayers)
        throw ParseError("'players' must be in 1.." + std::to_string(kMaxPlayers));
    if (!doc["values"].is_object()) throw ParseError("'values' must be an object");

    std::vector<Rational> values(std::size_t{1} << m, Rational(0));
    std::vector<bool> seen(std::size_t{1} << m, false);
    for (const auto& [key, value] : doc["values"].items()) {
        const Coalition c = Coalition::from_members(parse_coalition_key(key, m));
        if (seen[c.bits]) throw ParseError("duplicate coalition key '" + key + "'");
        seen[c.bits] = true;
        values[c.bits] = rational_from_json(value, key);
    }
    if (seen[0] && values[0] != 0)
        throw ParseError("the empty coalition must have value 0");
    // Missing entries are an error, not an implicit 0.
    for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << m); ++bits)
        if (!seen[bits])
            throw ParseError("missing value for coalition '" + coalition_key(Coalition(bits)) +
                             "'");
    return Game(m, std::move(values));
}

std::string write_game_json(const Game& g) {
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    // Size-then-members order reads naturally and is deterministic.
    std::vector<Coalition> order;
    for (std::uint32_t bits = 1; bits < g.coalition_count(); ++bits)
        order.push_back(Coalition(bits));
    std::sort(order.begin(), order.end(), [](Coalition a, Coalition b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members() < b.members();
    });
    for (Coalition c : order) values[coalition_key(c)] = to_string(g.value(c));
    nlohmann::ordered_json doc;
    doc["players"] = g.player_count();
    doc["values"] = std::move(values);
    return doc.dump(2) + "\n";
}

Framework parse_framework_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n_args = -1;
    std::vector<std::pair<int, int>> attacks;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "p") {
            std::string kind;
            int n = -1;
            fields >> kind >> n;
            if (fields.fail() || kind != "af" || n < 0)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'p af <n_args>'");
            if (n_args >= 0)
                throw ParseError("line " + std::to_string(line_no) + ": duplicate header");
            n_args = n;
        } else if (tag == "att") {
            if (n_args < 0)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": 'att' before 'p af' header");
            int from = 0, to = 0;
            fields >> from >> to;
            if (fields.fail() || from < 1 || from > n_args || to < 1 || to > n_args)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'att <i> <j>' with 1-indexed arguments");
            attacks.emplace_back(from - 1, to - 1);
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown directive '" +
                             tag + "'");
        }
    }
    if (n_args < 0) throw ParseError("missing 'p af <n_args>' header");
    return Framework(n_args, std::move(attacks));
}

std::string write_framework_text(const Framework& f) {
    std::string out = "p af " + std::to_string(f.n_args()) + "\n";
    for (auto [from, to] : f.attacks())
        out += "att " + std::to_string(from + 1) + " " + std::to_string(to + 1) + "\n";
    return out;
}

std::string write_framework_dot(const Framework& f,
                                const std::vector<std::string>& node_labels) {
    if (!node_labels.empty() && node_labels.size() != static_cast<std::size_t>(f.n_args()))
        throw PreconditionError("node label count does not match argument count");
    std::string out = "digraph af {\n";
    for (int a = 0; a < f.n_args(); ++a) {
        out += "  a" + std::to_string(a + 1);
        if (!node_labels.empty()) out += " [label=\"" + node_labels[a] + "\"]";
        out += ";\n";
    }
    for (auto [from, to] : f.attacks())
        out += "  a" + std::to_string(from + 1) + " -> a" + std::to_string(to + 1) + ";\n";
    out += "}\n";
    return out;
}

std::string content_digest(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char ch : bytes) {
        hash ^= ch;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return std::string("fnv1a64:") + buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

} // namespace coopgame
