#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dynparity/engine.hpp"

namespace dynparity::cli {

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_parse = 2;
inline constexpr int exit_capacity = 3; // width or materialization limits
inline constexpr int exit_mismatch = 4;

int exit_code_for(ErrorKind kind);

// DYNPARITY_VERTEX_CAP, if set.
std::optional<int> vertex_cap_from_env();

struct RunOptions {
    std::string game_path;
    std::string script_path;
    GammaVariant variant = GammaVariant::refined;
    Materialization mode = Materialization::lazy;
    OwnerPolicy owner_policy = OwnerPolicy::gadget;
    bool verify = false;
    std::optional<int> vertex_cap;
};

struct BenchOptions {
    std::vector<int> sizes{4, 6, 8};
    int seq_len = 30;
    std::uint64_t seed = 1;
    GammaVariant variant = GammaVariant::refined;
    Materialization mode = Materialization::lazy;
    bool times = true; // off: time columns print '-' so reports diff cleanly
    std::optional<int> vertex_cap;
};

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err);
int cmd_oracle(const std::string& game_path, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);
int cmd_dyck(const std::string& script_path, std::optional<int> vertex_cap, std::ostream& out, std::ostream& err);

// "W0: ..", "W1: .." and one "s -> t" line per selector entry.
std::string format_uniform(int n, const VertexSet& w0, const Selector& strategy);

} // namespace dynparity::cli
