#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dynparity/game.hpp"

namespace dynparity {

// "game n C kappa", "init sigma", "v id owner color", "maxedge u v",
// "edge u v"; '#' starts a comment.
struct GameFile {
    ParityGame game;
    int kappa_hint = 2;
    friend bool operator==(const GameFile&, const GameFile&) = default;
};

GameFile parse_game(std::istream& in);
GameFile read_game_file(const std::string& path);
std::string print_game(const GameFile& file);

struct ScriptCommand {
    enum class Kind { update, query, strategy, region, uniform, dump };
    Kind kind = Kind::query;
    UpdateOp op; // update only
    int line = 0;
    friend bool operator==(const ScriptCommand& a, const ScriptCommand& b)
    {
        return a.kind == b.kind && (a.kind != Kind::update || a.op == b.op);
    }
};

std::vector<ScriptCommand> parse_script(std::istream& in);
std::vector<ScriptCommand> read_script_file(const std::string& path);
std::string print_script(const std::vector<ScriptCommand>& script);

std::string format_update(const UpdateOp& op);
// "s -> t" per defined vertex, or "NONE" when nothing is defined.
std::string format_selector(const Selector& g);
// Space-separated, sorted.
std::string format_vertices(const VertexSet& vs);

} // namespace dynparity
