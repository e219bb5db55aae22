#include "dynparity/text_format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace dynparity {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> words;
};

std::vector<Line> tokenize(std::istream& in)
{
    std::vector<Line> out;
    std::string raw;
    for (int number = 1; std::getline(in, raw); ++number) {
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream words(raw);
        Line line{number, {}};
        for (std::string w; words >> w;)
            line.words.push_back(w);
        if (!line.words.empty())
            out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void parse_error(const Line& line, const std::string& what)
{
    fail(ErrorKind::parse, "line " + std::to_string(line.number) + ": " + what);
}

int to_int(const Line& line, std::size_t i)
{
    const std::string& w = line.words.at(i);
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(w, &used);
    } catch (const std::exception&) {
        parse_error(line, "expected an integer, got '" + w + "'");
    }
    if (used != w.size())
        parse_error(line, "expected an integer, got '" + w + "'");
    return v;
}

void expect_arity(const Line& line, std::size_t args)
{
    if (line.words.size() != args + 1)
        parse_error(line, "'" + line.words[0] + "' takes " + std::to_string(args) + " arguments");
}

std::ifstream open(const std::string& path)
{
    std::ifstream in(path);
    require(in.good(), ErrorKind::parse, "cannot open " + path);
    return in;
}

} // namespace

GameFile parse_game(std::istream& in)
{
    auto lines = tokenize(in);
    require(!lines.empty(), ErrorKind::parse, "empty game file");
    const Line& head = lines.front();
    if (head.words[0] != "game")
        parse_error(head, "expected 'game n C kappa'");
    expect_arity(head, 3);
    const int n = to_int(head, 1), colors = to_int(head, 2);
    GameFile file;
    file.kappa_hint = to_int(head, 3);
    if (n < 1 || colors < 1 || file.kappa_hint < 1)
        parse_error(head, "n, C and kappa must be positive");
    file.game = ParityGame(n, colors, 0);
    ParityGame& g = file.game;

    std::vector<bool> declared(n, false);
    bool has_init = false;
    std::vector<Edge> edges;
    auto vertex = [&](const Line& line, std::size_t i) {
        int v = to_int(line, i);
        if (!g.valid_vertex(v))
            parse_error(line, "vertex " + std::to_string(v) + " out of range");
        return v;
    };
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        const std::string& op = line.words[0];
        if (op == "init") {
            expect_arity(line, 1);
            if (has_init)
                parse_error(line, "duplicate init");
            g.set_sigma(vertex(line, 1));
            has_init = true;
        } else if (op == "v") {
            expect_arity(line, 3);
            int v = vertex(line, 1), owner = to_int(line, 2), color = to_int(line, 3);
            if (declared[v])
                parse_error(line, "vertex declared twice");
            if (owner != 0 && owner != 1)
                parse_error(line, "owner must be 0 or 1");
            if (color < 1 || color > colors)
                parse_error(line, "color out of range");
            g.set_owner(v, static_cast<Player>(owner));
            g.set_color(v, color);
            declared[v] = true;
        } else if (op == "maxedge") {
            expect_arity(line, 2);
            g.add_max_edge(vertex(line, 1), vertex(line, 2));
        } else if (op == "edge") {
            expect_arity(line, 2);
            int u = vertex(line, 1), v = vertex(line, 2);
            edges.push_back({u, v});
        } else if (op == "game") {
            parse_error(line, "duplicate header");
        } else {
            parse_error(line, "unknown directive '" + op + "'");
        }
    }
    require(has_init, ErrorKind::parse, "missing init line");
    for (Vertex v = 0; v < n; ++v)
        require(declared[v], ErrorKind::parse, "vertex " + std::to_string(v) + " has no 'v' line");
    for (auto [u, v] : edges) {
        require(g.has_max_edge(u, v), ErrorKind::parse,
                "edge " + std::to_string(u) + " " + std::to_string(v) + " is not a maxedge");
        g.add_edge(u, v);
    }
    return file;
}

GameFile read_game_file(const std::string& path)
{
    auto in = open(path);
    return parse_game(in);
}

std::string print_game(const GameFile& file)
{
    const ParityGame& g = file.game;
    std::ostringstream out;
    out << "game " << g.size() << ' ' << g.max_color() << ' ' << file.kappa_hint << '\n';
    out << "init " << g.sigma() << '\n';
    for (Vertex v = 0; v < g.size(); ++v)
        out << "v " << v << ' ' << index_of(g.owner(v)) << ' ' << g.color(v) << '\n';
    for (auto [u, v] : g.max_edges())
        out << "maxedge " << u << ' ' << v << '\n';
    for (auto [u, v] : g.edges())
        out << "edge " << u << ' ' << v << '\n';
    return out.str();
}

std::vector<ScriptCommand> parse_script(std::istream& in)
{
    using K = ScriptCommand::Kind;
    std::vector<ScriptCommand> out;
    for (const Line& line : tokenize(in)) {
        const std::string& op = line.words[0];
        ScriptCommand cmd;
        cmd.line = line.number;
        if (op == "ins" || op == "del") {
            expect_arity(line, 2);
            cmd.kind = K::update;
            cmd.op = op == "ins" ? UpdateOp::ins(to_int(line, 1), to_int(line, 2))
                                 : UpdateOp::del(to_int(line, 1), to_int(line, 2));
        } else if (op == "owner") {
            expect_arity(line, 2);
            cmd.kind = K::update;
            cmd.op = UpdateOp{UpdateOp::Kind::owner, to_int(line, 1), to_int(line, 2)};
        } else if (op == "color") {
            expect_arity(line, 2);
            cmd.kind = K::update;
            cmd.op = UpdateOp::set_color(to_int(line, 1), to_int(line, 2));
        } else {
            static const std::pair<const char*, K> queries[] = {{"query", K::query},
                                                                {"strategy", K::strategy},
                                                                {"region", K::region},
                                                                {"uniform", K::uniform},
                                                                {"dump", K::dump}};
            auto it = std::find_if(std::begin(queries), std::end(queries),
                                   [&](const auto& q) { return op == q.first; });
            if (it == std::end(queries))
                parse_error(line, "unknown command '" + op + "'");
            expect_arity(line, 0);
            cmd.kind = it->second;
        }
        out.push_back(cmd);
    }
    return out;
}

std::vector<ScriptCommand> read_script_file(const std::string& path)
{
    auto in = open(path);
    return parse_script(in);
}

std::string format_update(const UpdateOp& op)
{
    static const char* names[] = {"ins", "del", "owner", "color"};
    return std::string(names[static_cast<int>(op.kind)]) + ' ' + std::to_string(op.a) + ' ' + std::to_string(op.b);
}

std::string print_script(const std::vector<ScriptCommand>& script)
{
    static const char* names[] = {"", "query", "strategy", "region", "uniform", "dump"};
    std::string out;
    for (const auto& cmd : script)
        out += (cmd.kind == ScriptCommand::Kind::update ? format_update(cmd.op) : names[static_cast<int>(cmd.kind)]) +
               std::string("\n");
    return out;
}

std::string format_selector(const Selector& g)
{
    std::string out;
    for (Vertex v = 0; v < g.size(); ++v)
        if (g.defined(v))
            out += std::to_string(v) + " -> " + std::to_string(g.at(v)) + '\n';
    return out.empty() ? "NONE\n" : out;
}

std::string format_vertices(const VertexSet& vs)
{
    std::string out;
    for (Vertex v : vs)
        out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

} // namespace dynparity
