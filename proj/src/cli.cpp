#include "dynparity/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "dynparity/random.hpp"
#include "dynparity/text_format.hpp"

namespace dynparity::cli {

namespace {

struct Mismatch {
    std::string what;
};

void check(bool ok, const ScriptCommand& cmd, const std::string& what)
{
    if (!ok)
        throw Mismatch{"line " + std::to_string(cmd.line) + ": " + what};
}

template <class F>
int guarded(std::ostream& err, F&& body)
{
    try {
        return body();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const Mismatch& m) {
        err << "verify: " << m.what << '\n';
        return exit_mismatch;
    }
}

using clock = std::chrono::steady_clock;

double micros_since(clock::time_point start)
{
    return std::chrono::duration<double, std::micro>(clock::now() - start).count();
}

} // namespace

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::invalid_argument: return exit_parse;
    case ErrorKind::width_exceeded:
    case ErrorKind::materialization_overflow: return exit_capacity;
    default: return exit_failure;
    }
}

std::optional<int> vertex_cap_from_env()
{
    const char* raw = std::getenv("DYNPARITY_VERTEX_CAP");
    if (!raw || !*raw)
        return std::nullopt;
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    require(*end == '\0' && v > 0 && v < (1 << 20), ErrorKind::invalid_argument,
            std::string("bad DYNPARITY_VERTEX_CAP: ") + raw);
    return static_cast<int>(v);
}

std::string format_uniform(int n, const VertexSet& w0, const Selector& strategy)
{
    VertexSet w1;
    for (Vertex v = 0; v < n; ++v)
        if (!w0.count(v))
            w1.insert(v);
    auto line = [](const char* tag, const VertexSet& vs) {
        return std::string(tag) + (vs.empty() ? "" : " " + format_vertices(vs)) + "\n";
    };
    std::string out = line("W0:", w0) + line("W1:", w1);
    for (Vertex v = 0; v < strategy.size(); ++v)
        if (strategy.defined(v))
            out += std::to_string(v) + " -> " + std::to_string(strategy.at(v)) + '\n';
    return out;
}

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        GameFile file = read_game_file(options.game_path);
        auto script = read_script_file(options.script_path);
        EngineOptions eo;
        eo.variant = options.variant;
        eo.mode = options.mode;
        eo.owner_policy = options.owner_policy;
        eo.kappa_hint = file.kappa_hint;
        if (options.vertex_cap)
            eo.vertex_cap = *options.vertex_cap;
        Engine engine(file.game, eo);

        using K = ScriptCommand::Kind;
        for (const auto& cmd : script) {
            const ParityGame& g = engine.game();
            switch (cmd.kind) {
            case K::update:
                engine.apply(cmd.op);
                break;
            case K::query: {
                bool win = engine.winner_at_sigma();
                out << (win ? "WIN" : "LOSE") << '\n';
                if (options.verify)
                    check(win == solve_static(g).wins(Player::p0, g.sigma()), cmd, "winner differs from the static solver");
                break;
            }
            case K::strategy: {
                auto sel = engine.winning_selector();
                out << (sel ? format_selector(*sel) : "NONE\n");
                if (options.verify) {
                    check(sel.has_value() == solve_static(g).wins(Player::p0, g.sigma()), cmd,
                          "strategy presence differs from the static solver");
                    if (sel)
                        check(strategy_wins_from(g, *sel, Player::p0, g.sigma()), cmd, "strategy loses against some P1 play");
                }
                break;
            }
            case K::region: {
                auto region = engine.accessible_set();
                out << (region ? "region: " + format_vertices(*region) : std::string("NONE")) << '\n';
                if (options.verify && region)
                    check(*region == reachable_under(g, *engine.winning_selector(), Player::p0, g.sigma()), cmd,
                          "region differs from brute-force reachability");
                break;
            }
            case K::uniform: {
                auto u = engine.uniform_solve();
                out << format_uniform(g.size(), u.w0, u.strategy);
                if (options.verify) {
                    check(u.w0 == solve_static(g).region(Player::p0), cmd, "W0 differs from the static solver");
                    for (Vertex s : u.w0)
                        check(strategy_wins_from(g, u.strategy, Player::p0, s), cmd,
                              "uniform strategy loses from " + std::to_string(s));
                }
                break;
            }
            case K::dump:
                out << engine.dump();
                break;
            }
        }
        return exit_ok;
    });
}

int cmd_oracle(const std::string& game_path, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        GameFile file = read_game_file(game_path);
        auto sol = solve_static(file.game);
        VertexSet w0 = sol.region(Player::p0);
        Selector strategy(file.game.size());
        for (Vertex v : w0)
            if (sol.strategy0.defined(v))
                strategy.set(v, sol.strategy0.at(v));
        out << format_uniform(file.game.size(), w0, strategy);
        return exit_ok;
    });
}

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        std::mt19937_64 rng(options.seed);
        out << "n\tstep\top\twinner\tdelta\tdyn_us\tstatic_us\n";
        auto time_cell = [&](double us) {
            std::ostringstream cell;
            if (options.times)
                cell << std::fixed << std::setprecision(1) << us;
            else
                cell << '-';
            return cell.str();
        };
        for (int n : options.sizes) {
            require(n >= 2, ErrorKind::invalid_argument, "bench sizes must be at least 2");
            RandomGameSpec spec;
            spec.n = n;
            auto game = random_game(spec, rng);
            auto ops = random_updates(game, options.seq_len, rng);
            EngineOptions eo;
            eo.variant = options.variant;
            eo.mode = options.mode;
            eo.kappa_hint = spec.kappa;
            if (options.vertex_cap)
                eo.vertex_cap = *options.vertex_cap;
            Engine engine(game, eo);
            std::size_t max_delta = 0;
            double dyn_total = 0, static_total = 0;
            for (std::size_t step = 0; step < ops.size(); ++step) {
                auto start = clock::now();
                engine.apply(ops[step]);
                bool win = engine.winner_at_sigma();
                double dyn = micros_since(start);
                start = clock::now();
                bool expected = solve_static(engine.game()).wins(Player::p0, engine.game().sigma());
                double stat = micros_since(start);
                require(win == expected, ErrorKind::internal, "bench verdict differs from the static solver");
                max_delta = std::max(max_delta, engine.last_delta());
                dyn_total += dyn;
                static_total += stat;
                out << n << '\t' << step + 1 << '\t' << format_update(ops[step]) << '\t' << (win ? "WIN" : "LOSE")
                    << '\t' << engine.last_delta() << '\t' << time_cell(dyn) << '\t' << time_cell(stat) << '\n';
            }
            const double steps = std::max<std::size_t>(ops.size(), 1);
            out << "# n=" << n << " mode=" << to_string(engine.effective_mode()) << " max_delta=" << max_delta
                << " mean_dyn_us=" << time_cell(dyn_total / steps) << " mean_static_us=" << time_cell(static_total / steps)
                << '\n';
        }
        return exit_ok;
    });
}

int cmd_dyck(const std::string& script_path, std::optional<int> vertex_cap, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        std::ifstream in(script_path);
        require(in.good(), ErrorKind::parse, "cannot open " + script_path);
        replay_dyck_script(in, out, vertex_cap.value_or(DyckState::default_vertex_cap));
        return exit_ok;
    });
}

} // namespace dynparity::cli
