#include <iostream>

#include <CLI11.hpp>

#include <dynparity/cli.hpp>

using namespace dynparity;

int main(int argc, char** argv)
{
    CLI::App app{"Dynamic parity game solver for bounded tree-width arenas"};
    app.require_subcommand(1);

    const std::map<std::string, GammaVariant> variants{{"simple", GammaVariant::simple},
                                                       {"refined", GammaVariant::refined}};
    const std::map<std::string, Materialization> modes{{"full", Materialization::full},
                                                       {"lazy", Materialization::lazy}};
    const std::map<std::string, OwnerPolicy> policies{{"gadget", OwnerPolicy::gadget},
                                                      {"rebuild", OwnerPolicy::rebuild}};

    cli::RunOptions run;
    auto* run_cmd = app.add_subcommand("run", "replay an update script against a game");
    run_cmd->add_option("--game", run.game_path, "game file")->required();
    run_cmd->add_option("--script", run.script_path, "update script")->required();
    run_cmd->add_option("--variant", run.variant, "simple|refined")
        ->transform(CLI::CheckedTransformer(variants, CLI::ignore_case));
    run_cmd->add_option("--mode", run.mode, "full|lazy")->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    run_cmd->add_option("--owner-policy", run.owner_policy, "gadget|rebuild")
        ->transform(CLI::CheckedTransformer(policies, CLI::ignore_case));
    run_cmd->add_flag("--verify", run.verify, "cross-check every query against the static solver");

    std::string oracle_game;
    auto* oracle_cmd = app.add_subcommand("oracle", "solve a game statically");
    oracle_cmd->add_option("--game", oracle_game, "game file")->required();

    cli::BenchOptions bench;
    bool no_times = false;
    auto* bench_cmd = app.add_subcommand("bench", "dynamic updates against static re-solving");
    bench_cmd->add_option("--sizes", bench.sizes, "comma-separated vertex counts")->delimiter(',');
    bench_cmd->add_option("--seq-len", bench.seq_len, "updates per game")->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--seed", bench.seed, "random seed");
    bench_cmd->add_option("--variant", bench.variant, "simple|refined")
        ->transform(CLI::CheckedTransformer(variants, CLI::ignore_case));
    bench_cmd->add_option("--mode", bench.mode, "full|lazy")->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    bench_cmd->add_flag("--no-times", no_times, "print '-' instead of wall times");

    std::string dyck_script;
    auto* dyck_cmd = app.add_subcommand("dyck", "replay a labelled-graph script through the dynamic Dyck state");
    dyck_cmd->add_option("--script", dyck_script, "ins/del/query script")->required();

    CLI11_PARSE(app, argc, argv);

    std::optional<int> cap;
    try {
        cap = cli::vertex_cap_from_env();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::exit_parse;
    }
    if (*run_cmd) {
        run.vertex_cap = cap;
        return cli::cmd_run(run, std::cout, std::cerr);
    }
    if (*oracle_cmd)
        return cli::cmd_oracle(oracle_game, std::cout, std::cerr);
    if (*bench_cmd) {
        bench.times = !no_times;
        bench.vertex_cap = cap;
        return cli::cmd_bench(bench, std::cout, std::cerr);
    }
    return cli::cmd_dyck(dyck_script, cap, std::cout, std::cerr);
}
