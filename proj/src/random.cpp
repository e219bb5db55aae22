#include "dynparity/random.hpp"

#include <algorithm>
#include <iterator>

namespace dynparity {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

} // namespace

ParityGame random_game(const RandomGameSpec& spec, std::mt19937_64& rng)
{
    const int n = spec.n;
    ParityGame game(n, spec.max_color, pick(rng, 0, n - 1));
    for (Vertex v = 0; v < n; ++v) {
        game.set_owner(v, coin(rng, 0.5) ? Player::p1 : Player::p0);
        game.set_color(v, pick(rng, 1, spec.max_color));
    }

    // Partial k-tree: each new vertex joins a random clique of size <= kappa.
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v)
        order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::vector<Vertex>> cliques{{order[0]}};
    std::vector<Edge> skeleton;
    for (int k = 1; k < n; ++k) {
        Vertex v = order[k];
        auto base = cliques[pick(rng, 0, static_cast<int>(cliques.size()) - 1)];
        std::shuffle(base.begin(), base.end(), rng);
        int keep = pick(rng, 1, std::min<int>(spec.kappa, static_cast<int>(base.size())));
        base.resize(keep);
        for (Vertex u : base)
            skeleton.emplace_back(u, v);
        base.push_back(v);
        cliques.push_back(base);
    }
    for (auto [u, v] : skeleton) {
        if (!coin(rng, spec.edge_density))
            continue;
        int dir = pick(rng, 0, 2);
        if (dir != 1)
            game.add_max_edge(u, v);
        if (dir != 0)
            game.add_max_edge(v, u);
    }
    for (Vertex v = 0; v < n; ++v)
        if (coin(rng, spec.self_loop))
            game.add_max_edge(v, v);
    for (auto [u, v] : std::set<Edge>(game.max_edges()))
        if (coin(rng, spec.initial_edges))
            game.add_edge(u, v);
    return game;
}

std::vector<UpdateOp> random_updates(const ParityGame& game, int length, std::mt19937_64& rng)
{
    std::vector<UpdateOp> ops;
    if (game.max_edges().empty())
        return ops;
    std::vector<Edge> pairs(game.max_edges().begin(), game.max_edges().end());
    std::set<Edge> present = game.edges();
    for (int k = 0; k < length; ++k) {
        Edge e = pairs[pick(rng, 0, static_cast<int>(pairs.size()) - 1)];
        bool is_present = present.count(e) != 0;
        bool insert = coin(rng, 0.1) ? is_present : !is_present;
        if (insert) {
            ops.push_back(UpdateOp::ins(e.first, e.second));
            present.insert(e);
        } else {
            ops.push_back(UpdateOp::del(e.first, e.second));
            present.erase(e);
        }
    }
    return ops;
}

} // namespace dynparity
