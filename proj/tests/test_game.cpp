#include <doctest.h>

#include <dynparity/game.hpp>
#include <dynparity/random.hpp>

#include "fixtures.hpp"

using namespace dynparity;
using fixtures::small_game;

TEST_CASE("updates follow set semantics")
{
    auto g = small_game();
    auto g1 = apply_update(g, UpdateOp::ins(0, 1));
    CHECK(g1.edges() == std::set<Edge>{{0, 1}});
    auto g2 = apply_update(g1, UpdateOp::del(0, 1));
    CHECK(g2.edges().empty());
    CHECK(apply_update(g1, UpdateOp::ins(0, 1)) == g1);
    CHECK(apply_update(g, UpdateOp::del(0, 1)) == g);
    CHECK_THROWS_AS(apply_update(g, UpdateOp::ins(1, 1)), Error);
    CHECK_THROWS_AS(apply_update(g, UpdateOp::set_color(0, 0)), Error);
    CHECK_THROWS_AS(apply_update(g, UpdateOp::set_color(0, 3)), Error);
    CHECK_THROWS_AS(apply_update(g, UpdateOp::ins(0, 5)), Error);
    auto g3 = apply_update(g, UpdateOp::set_owner(1, Player::p0));
    CHECK(g3.owner(1) == Player::p0);
    CHECK(g3.edges() == g.edges());
}

TEST_CASE("outcomes of selectors")
{
    auto g = small_game({{0, 1}, {1, 0}});
    Selector f(2);
    f.set(0, 1);
    f.set(1, 0);
    auto o = outcome_of_selector(g, f, 0);
    CHECK(o.lasso);
    CHECK(o.cycle_max_color == 2);
    CHECK(o.winner == Player::p0);

    auto loop = small_game({{0, 0}});
    Selector h(2);
    h.set(0, 0);
    auto o2 = outcome_of_selector(loop, h, 0);
    CHECK(o2.lasso);
    CHECK(o2.cycle_max_color == 1);
    CHECK(o2.winner == Player::p1);

    auto o3 = outcome_of_selector(small_game(), Selector(2), 0);
    CHECK_FALSE(o3.lasso);
    CHECK(o3.last == 0);
    CHECK(o3.winner == Player::p1);
}

TEST_CASE("static solver on the two-vertex game")
{
    CHECK(solve_static(small_game({{0, 1}, {1, 0}})).region(Player::p0) == VertexSet{0, 1});
    auto empty = solve_static(small_game());
    CHECK(empty.region(Player::p0) == VertexSet{1});
    CHECK(empty.region(Player::p1) == VertexSet{0});

    ParityGame even_loop(1, 2, 0);
    even_loop.set_color(0, 2);
    even_loop.add_max_edge(0, 0);
    even_loop.add_edge(0, 0);
    CHECK(solve_static(even_loop).wins(Player::p0, 0));
}

namespace {

// Winner by enumeration: p wins from s iff some p-selector beats every total counter-selector.
bool brute_wins(const ParityGame& g, Player p, Vertex s)
{
    bool found = false;
    for_each_selector(g, p, [&](const Selector& f) {
        if (strategy_wins_from(g, f, p, s)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

} // namespace

TEST_CASE("static solver agrees with enumeration and its strategies win")
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 300; ++round) {
        RandomGameSpec spec;
        spec.n = 2 + round % 5;
        spec.kappa = 1 + round % 2;
        spec.max_color = 1 + round % 4;
        auto g = random_game(spec, rng);
        auto sol = solve_static(g);
        for (Vertex s = 0; s < g.size(); ++s) {
            Player w = sol.winner[s];
            CHECK(brute_wins(g, w, s));
            CHECK_FALSE(brute_wins(g, opponent(w), s));
            const Selector& strat = w == Player::p0 ? sol.strategy0 : sol.strategy1;
            CHECK(strat.consistent_with(g));
            CHECK(strategy_wins_from(g, strat, w, s));
        }
    }
}

TEST_CASE("insert and delete are mutual inverses")
{
    std::mt19937_64 rng(11);
    for (int round = 0; round < 50; ++round) {
        auto g = random_game({}, rng);
        for (auto [u, v] : g.max_edges()) {
            if (g.has_edge(u, v))
                CHECK(apply_update(apply_update(g, UpdateOp::del(u, v)), UpdateOp::ins(u, v)) == g);
            else
                CHECK(apply_update(apply_update(g, UpdateOp::ins(u, v)), UpdateOp::del(u, v)) == g);
        }
    }
}
