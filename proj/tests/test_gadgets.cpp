#include <doctest.h>

#include <dynparity/gadgets.hpp>
#include <dynparity/random.hpp>

using namespace dynparity;

namespace {

ParityGame random_small(std::mt19937_64& rng, int n, int colors)
{
    RandomGameSpec spec;
    spec.n = n;
    spec.kappa = 1 + n % 2;
    spec.max_color = colors;
    return random_game(spec, rng);
}

} // namespace

TEST_CASE("ownership gadget shape")
{
    std::mt19937_64 rng(5);
    auto g = random_small(rng, 4, 3);
    auto r = reduce_ownership(g);
    CHECK(r.size() == 3 * g.size());
    auto gd = gadget_for(GadgetKind::ownership, g);
    CHECK(r.sigma() == gd.entry(g.sigma()));
    for (Vertex s = 0; s < g.size(); ++s) {
        CHECK(r.owner(gd.copy(s, 0)) == Player::p0);
        CHECK(r.owner(gd.copy(s, 1)) == Player::p1);
        CHECK(r.owner(gd.copy(s, 2)) == Player::p1);
        CHECK(r.successors(gd.copy(s, 2)) == std::vector<Vertex>{gd.copy(s, index_of(g.owner(s)))});
        for (int i = 0; i < 3; ++i)
            CHECK(gd.base(gd.copy(s, i)) == s);
    }
}

TEST_CASE("color gadget shape")
{
    std::mt19937_64 rng(6);
    auto g = random_small(rng, 3, 4);
    auto r = reduce_colors(g);
    auto gd = gadget_for(GadgetKind::color, g);
    CHECK(r.size() == g.size() * (g.max_color() + 2));
    for (Vertex s = 0; s < g.size(); ++s)
        for (int i = -1; i <= g.max_color(); ++i) {
            CHECK(r.color(gd.copy(s, i)) == std::max(i, 1));
            CHECK(r.owner(gd.copy(s, i)) == g.owner(s));
            CHECK(gd.base(gd.copy(s, i)) == s);
            bool back = r.has_edge(gd.copy(s, i), gd.copy(s, 0));
            CHECK(back == (i == g.color(s)));
        }
}

TEST_CASE("reductions preserve winners at entry copies")
{
    std::mt19937_64 rng(8);
    for (int round = 0; round < 120; ++round) {
        auto g = random_small(rng, 2 + round % 5, 1 + round % 4);
        auto sol = solve_static(g);
        for (auto kind : {GadgetKind::ownership, GadgetKind::color}) {
            auto gd = gadget_for(kind, g);
            auto r = reduce(gd, g);
            auto rsol = solve_static(r);
            for (Vertex s = 0; s < g.size(); ++s)
                CHECK(rsol.winner[gd.entry(s)] == sol.winner[s]);
            // winning reduced strategies lift to winning strategies
            auto lifted = lift_selector(gd, g, rsol.strategy0);
            for (Vertex s = 0; s < g.size(); ++s)
                if (sol.wins(Player::p0, s))
                    CHECK(strategy_wins_from(g, lifted, Player::p0, s));
        }
    }
}

TEST_CASE("translated updates keep the reduction in sync")
{
    std::mt19937_64 rng(13);
    for (int round = 0; round < 60; ++round) {
        auto g = random_small(rng, 2 + round % 4, 2 + round % 3);
        for (auto kind : {GadgetKind::ownership, GadgetKind::color}) {
            auto gd = gadget_for(kind, g);
            ParityGame above = g;
            ParityGame below = reduce(gd, g);
            std::uniform_int_distribution<int> pick(0, g.size() - 1);
            for (int step = 0; step < 10; ++step) {
                UpdateOp op;
                if (step % 2 == 0) {
                    op = UpdateOp::set_owner(pick(rng), rng() % 2 ? Player::p0 : Player::p1);
                } else {
                    op = UpdateOp::set_color(pick(rng), 1 + static_cast<int>(rng() % g.max_color()));
                }
                auto ops = translate(gd, above, op);
                bool edges_only = true;
                for (const auto& o : ops) {
                    apply_update_in_place(below, o);
                    edges_only = edges_only && o.is_edge_op();
                }
                apply_update_in_place(above, op);
                bool owned_here = (kind == GadgetKind::ownership) == (op.kind == UpdateOp::Kind::owner);
                if (owned_here) {
                    CHECK(edges_only);
                    CHECK(ops.size() <= 2);
                }
                CHECK(below == reduce(gd, above));
            }
            for (const auto& op : random_updates(above, 6, rng)) {
                auto ops = translate(gd, above, op);
                CHECK(ops.size() == (kind == GadgetKind::ownership ? 2u : 1u));
                for (const auto& o : ops)
                    apply_update_in_place(below, o);
                apply_update_in_place(above, op);
                CHECK(below == reduce(gd, above));
            }
        }
    }
}

TEST_CASE("induced decompositions stay valid within the width bounds")
{
    std::mt19937_64 rng(21);
    for (int round = 0; round < 60; ++round) {
        auto g = random_small(rng, 2 + round % 6, 1 + round % 3);
        auto td = build_tree_decomposition(g.size(), g.max_edges(), 2);
        const int k = td.width();
        for (auto kind : {GadgetKind::ownership, GadgetKind::color}) {
            auto gd = gadget_for(kind, g);
            auto r = reduce(gd, g);
            auto rtd = induced_decomposition(gd, td);
            std::string why;
            CHECK_MESSAGE(is_valid_decomposition(rtd, r.size(), r.max_edges(), &why), why);
            if (kind == GadgetKind::ownership)
                CHECK(rtd.width() <= 3 * k + 2);
            else
                CHECK(rtd.width() <= (g.max_color() + 2) * (k + 1) - 1);
        }
    }
}
