#include <doctest.h>

#include <dynparity/random.hpp>
#include <dynparity/views.hpp>

#include "fixtures.hpp"

using namespace dynparity;
using fixtures::for_each_full_selector;

namespace {

NiceTraversal traversal_for(const ParityGame& g, int kappa)
{
    return make_traversal(g, kappa);
}

} // namespace

TEST_CASE("figure views")
{
    auto g = fixtures::figure_game();
    auto trav = fixtures::figure_traversal();
    auto f = fixtures::figure_selector();
    CHECK(view_bruteforce(g, trav, f, 8, 0) == View{cell::unknown});
    // bag of b is {s1, s4}
    View b = view_bruteforce(g, trav, f, 8, 1);
    CHECK(b == View{cell::exit(0, 2), cell::exit(0, 3)});
    auto sweep = view_sweep(g, trav, f);
    CHECK(sweep[8][0] == View{cell::unknown});
    CHECK(sweep[8][1] == b);
    for (int i = 1; i <= trav.length(); ++i)
        CHECK(sweep[i] == views_bruteforce(g, trav, f, i));
}

TEST_CASE("cell codes")
{
    CHECK(cell::target(cell::exit(5, 3)) == 5);
    CHECK(cell::color(cell::exit(5, 3)) == 3);
    CHECK(cell::to_string(cell::exit(5, 3)) == "(5,3)");
    CHECK_FALSE(cell::is_exit(cell::top));
}

TEST_CASE("critical closing resolves self references by parity")
{
    TreeDecomposition td;
    td.bags = {{0, 1}};
    ParityGame g(2, 3, 0);
    g.set_color(1, 2);
    NiceTraversal trav(make_nice(td, 2, 0), 2, 0);
    // index 2 introduces vertex 1; bag {0,1}
    View star{cell::unknown, cell::exit(1, 2)};
    CHECK(close_critical(g, trav, 2, star, {})[1] == cell::top);
    g.set_color(1, 3);
    View odd{cell::unknown, cell::exit(1, 3)};
    CHECK(close_critical(g, trav, 2, odd, {})[1] == cell::bottom);
    // inconsistent loop links are rejected
    CHECK_THROWS_AS(close_critical(g, trav, 2, star, Links{std::nullopt, {1}}), Error);
}

TEST_CASE("compatibility")
{
    auto trav = fixtures::figure_traversal();
    // nodes e {s3} and f {s4} share nothing
    CHECK(is_compatible(trav, {{4, {cell::top}}, {5, {cell::bottom}}}));
    // nodes d {s3,s4} and f {s4}
    CHECK_FALSE(is_compatible(trav, {{3, {cell::unknown, cell::top}}, {5, {cell::bottom}}}));
    CHECK(is_compatible(trav, {{3, {cell::unknown, cell::unknown}}, {5, {cell::exit(2, 2)}}}));
}

TEST_CASE("choice sets")
{
    auto g = fixtures::small_game({{0, 1}, {1, 0}});
    CHECK(choice(g, 0, 0) == std::vector<ChoiceSet>{choice_bot});
    CHECK(choice(g, 0, 1) == std::vector<ChoiceSet>{choice_bot, choice_top});
    CHECK(choice(g, 1, 0) == std::vector<ChoiceSet>{choice_both});
}

TEST_CASE("two-vertex game: sweeps, omega and access")
{
    auto g = fixtures::small_game({{0, 1}, {1, 0}});
    auto trav = traversal_for(g, 1);
    Selector f(2);
    f.set(0, 1);
    f.set(1, 0);
    auto sweep = view_sweep(g, trav, f);
    for (int i = 1; i <= trav.length(); ++i)
        CHECK(sweep[i] == views_bruteforce(g, trav, f, i));
    CHECK(sweep[1][0] == View{cell::top});

    Selector gsel(2);
    gsel.set(0, 1);
    CHECK(count_extensions(g, gsel) == 2);
    auto omega = omega_sweep(g, trav, gsel);
    CHECK(omega[1] == ViewVector{{View{cell::top}}});
    CHECK(omega[1] == omega_bruteforce(g, trav, gsel, 1));
    auto alpha = access_sweep(g, trav, gsel);
    CHECK(alpha[1] == VertexSet{0});
    CHECK(alpha[2] == VertexSet{0, 1});

    auto loop = fixtures::small_game({{0, 0}});
    auto lt = traversal_for(loop, 1);
    auto lomega = omega_sweep(loop, lt, Selector(2));
    CHECK(lomega[1] != ViewVector{{View{cell::top}}});

    auto empty = fixtures::small_game();
    auto et = traversal_for(empty, 1);
    auto ealpha = access_sweep(empty, et, Selector(2));
    for (int i = 1; i <= et.length(); ++i) {
        VertexSet expect;
        if (et.psi(i).count(0))
            expect.insert(0);
        CHECK(ealpha[i] == expect);
    }
}

TEST_CASE("recursions agree with the literal definitions on small games")
{
    std::mt19937_64 rng(21);
    int games = 0;
    for (int round = 0; round < 120; ++round) {
        RandomGameSpec spec;
        spec.n = 2 + round % 4;
        spec.kappa = 1 + round % 2;
        spec.max_color = 1 + round % 3;
        auto g = random_game(spec, rng);
        auto trav = traversal_for(g, spec.kappa);
        auto sol = solve_static(g);
        ++games;

        for_each_full_selector(g, [&](const Selector& f) {
            auto sweep = view_sweep(g, trav, f);
            for (int i = 1; i <= trav.length(); ++i) {
                REQUIRE(sweep[i] == views_bruteforce(g, trav, f, i));
                std::vector<std::pair<NodeId, View>> tuple;
                for (std::size_t k = 0; k < sweep[i].size(); ++k)
                    tuple.emplace_back(trav.thetas(i)[k], sweep[i][k]);
                CHECK(is_compatible(trav, tuple));
            }
            CellCode root = sweep[1][0][0];
            REQUIRE(cell::is_final(root));
            CHECK((root == cell::top) == (outcome_of_selector(g, f, g.sigma()).winner == Player::p0));
        });

        bool some_winner = false;
        for_each_selector(g, Player::p0, [&](const Selector& gs) {
            auto omega = omega_sweep(g, trav, gs);
            for (int i = 1; i <= trav.length(); ++i)
                REQUIRE(omega[i] == omega_bruteforce(g, trav, gs, i));
            if (omega[1] == ViewVector{{View{cell::top}}})
                some_winner = true;
            auto alpha = access_sweep(g, trav, gs);
            VertexSet reach = access_bruteforce(g, gs);
            VertexSet all;
            for (int i = 1; i <= trav.length(); ++i) {
                VertexSet expect;
                for (Vertex s : trav.psi(i))
                    if (reach.count(s))
                        expect.insert(s);
                CHECK(alpha[i] == expect);
                all.insert(alpha[i].begin(), alpha[i].end());
            }
            CHECK(all == reach);
            return true;
        });
        CHECK(some_winner == sol.wins(Player::p0, g.sigma()));
    }
    CHECK(games == 120);
}

TEST_CASE("compatible tuples of omega components are jointly realizable")
{
    std::mt19937_64 rng(5);
    for (int round = 0; round < 40; ++round) {
        RandomGameSpec spec;
        spec.n = 3 + round % 3;
        spec.kappa = 1 + round % 2;
        auto g = random_game(spec, rng);
        auto trav = traversal_for(g, spec.kappa);
        for_each_selector(g, Player::p0, [&](const Selector& gs) {
            for (int i = 1; i <= trav.length(); ++i) {
                auto omega = omega_bruteforce(g, trav, gs, i);
                const auto& chain = trav.thetas(i);
                if (chain.size() < 2)
                    continue;
                // pairs of nodes on the chain
                std::size_t a = chain.size() - 2, b = chain.size() - 1;
                for (const View& va : omega[a])
                    for (const View& vb : omega[b]) {
                        if (!compatible_pair(trav, chain[a], va, chain[b], vb))
                            continue;
                        bool realized = false;
                        for_each_extension(g, gs, [&](const Selector& f) {
                            if (realized)
                                return;
                            if (view_bruteforce(g, trav, f, i, chain[a]) == va &&
                                view_bruteforce(g, trav, f, i, chain[b]) == vb)
                                realized = true;
                        });
                        CHECK(realized);
                    }
            }
            return true;
        });
    }
}
