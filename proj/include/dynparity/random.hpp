#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dynparity/game.hpp"

namespace dynparity {

struct RandomGameSpec {
    int n = 6;
    int kappa = 2;
    int max_color = 3;
    double edge_density = 0.7; // chance that an undirected skeleton edge yields max edges
    double self_loop = 0.2;
    double initial_edges = 0.5; // chance that a max edge starts present
};

// Random game whose max edge graph is a partial k-tree (tree-width <= kappa).
ParityGame random_game(const RandomGameSpec& spec, std::mt19937_64& rng);

// Random ins/del sequence over the max edges; mostly toggles, sometimes redundant.
std::vector<UpdateOp> random_updates(const ParityGame& game, int length, std::mt19937_64& rng);

} // namespace dynparity
