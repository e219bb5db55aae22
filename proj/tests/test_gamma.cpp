#include <doctest.h>

#include <map>
#include <queue>

#include <dynparity/gamma.hpp>
#include <dynparity/random.hpp>

#include "fixtures.hpp"

using namespace dynparity;

namespace {

bool acyclic(const GammaGraph& g)
{
    std::vector<int> indeg(g.vertex_count());
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (const auto& e : g.edges()) {
        adj[e.src].push_back(e.dst);
        ++indeg[e.dst];
    }
    std::queue<int> q;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (indeg[v] == 0)
            q.push(v);
    int seen = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        ++seen;
        for (int w : adj[v])
            if (--indeg[w] == 0)
                q.push(w);
    }
    return seen == g.vertex_count();
}

std::string selector_key(const Selector& s)
{
    std::string out;
    for (Vertex v = 0; v < s.size(); ++v)
        out += s.defined(v) ? std::to_string(s.at(v)) + "," : "-,";
    return out;
}

// Paths of the graph against the literal semantics of every V0-selector.
void check_bijection(const ParityGame& game, const NiceTraversal& trav, GammaVariant variant, Materialization mode)
{
    GammaGraph graph(game, trav, variant, mode);
    REQUIRE(acyclic(graph));
    auto paths = enumerate_generic_paths(graph, 1u << 24);
    std::map<std::string, Decoded> by_selector;
    for (const auto& p : paths) {
        Decoded d = graph.decode(p);
        CHECK(d.selector.consistent_with(game));
        bool fresh = by_selector.emplace(selector_key(d.selector), d).second;
        CHECK(fresh);
    }
    CHECK(paths.size() == count_selectors(game, Player::p0));
    for_each_selector(game, Player::p0, [&](const Selector& g) {
        auto it = by_selector.find(selector_key(g));
        REQUIRE(it != by_selector.end());
        auto omega = omega_sweep(game, trav, g);
        CHECK(it->second.z == omega[1]);
        if (variant == GammaVariant::refined)
            CHECK(it->second.accessible == access_bruteforce(game, g));
        return true;
    });
}

} // namespace

TEST_CASE("edgeless layers have a single all-bottom option")
{
    auto g = fixtures::small_game();
    auto trav = make_traversal(g, 1);
    for (int i : trav.critical_indices()) {
        auto opts = layer_options(g, trav, i, false);
        REQUIRE(opts.size() == 1);
        for (auto c : opts[0].out)
            CHECK(c == choice_bot);
        for (auto c : opts[0].in)
            CHECK(c == choice_bot);
    }
}

TEST_CASE("two-vertex game: two generic paths, decoded selectors")
{
    auto g = fixtures::small_game({{0, 1}, {1, 0}});
    auto trav = make_traversal(g, 1);
    for (auto variant : {GammaVariant::simple, GammaVariant::refined})
        for (auto mode : {Materialization::full, Materialization::lazy}) {
            CAPTURE(to_string(variant));
            CAPTURE(to_string(mode));
            GammaGraph graph(g, trav, variant, mode);
            auto paths = enumerate_generic_paths(graph);
            REQUIRE(paths.size() == 2);
            bool saw_move = false, saw_empty = false;
            for (const auto& p : paths) {
                auto d = graph.decode(p);
                if (d.edges == std::set<Edge>{{0, 1}}) {
                    saw_move = true;
                    CHECK(d.z == winning_omega());
                    if (variant == GammaVariant::refined)
                        CHECK(d.accessible == VertexSet{0, 1});
                } else {
                    saw_empty = d.edges.empty();
                    if (variant == GammaVariant::refined)
                        CHECK(d.accessible == VertexSet{0});
                }
            }
            CHECK(saw_move);
            CHECK(saw_empty);
            REQUIRE(graph.winning_sink());
        }
    // nominal simple path: open (i,Z), open (i,B), close, close
    GammaGraph simple(g, trav, GammaVariant::simple, Materialization::lazy);
    for (const auto& p : enumerate_generic_paths(simple)) {
        int opens = 0;
        for (const auto& e : p.edges)
            opens += simple.labels().is_open(e.label);
        CHECK(opens == 2 * static_cast<int>(trav.critical_indices().size()));
    }
}

TEST_CASE("edgeless game decodes to the empty selector")
{
    auto g = fixtures::small_game();
    auto trav = make_traversal(g, 1);
    GammaGraph graph(g, trav, GammaVariant::refined, Materialization::lazy);
    auto paths = enumerate_generic_paths(graph);
    REQUIRE(paths.size() == 1);
    auto d = graph.decode(paths[0]);
    CHECK(d.edges.empty());
    CHECK(d.accessible == VertexSet{0});
    CHECK(d.z != winning_omega());
}

TEST_CASE("strict sub-paths are rejected by decode")
{
    auto g = fixtures::small_game({{0, 1}, {1, 0}});
    auto trav = make_traversal(g, 1);
    GammaGraph graph(g, trav, GammaVariant::simple, Materialization::lazy);
    auto paths = enumerate_generic_paths(graph);
    REQUIRE(!paths.empty());
    DyckPath part = paths[0];
    part.edges.pop_back();
    CHECK_THROWS_AS(graph.decode(part), Error);
}

TEST_CASE("generic paths biject with V0-selectors")
{
    std::mt19937_64 rng(77);
    for (int round = 0; round < 100; ++round) {
        RandomGameSpec spec;
        spec.n = 2 + round % 5;
        spec.kappa = 1 + round % 2;
        spec.max_color = 1 + round % 3;
        auto game = random_game(spec, rng);
        auto trav = make_traversal(game, spec.kappa);
        CAPTURE(round);
        for (auto variant : {GammaVariant::simple, GammaVariant::refined})
            for (auto mode : {Materialization::full, Materialization::lazy})
                check_bijection(game, trav, variant, mode);
    }
}

TEST_CASE("refined deltas touch at most two labelled edges and match rebuilds")
{
    std::mt19937_64 rng(91);
    for (int round = 0; round < 40; ++round) {
        RandomGameSpec spec;
        spec.n = 2 + round % 4;
        spec.kappa = 1 + round % 2;
        auto game = random_game(spec, rng);
        auto trav = make_traversal(game, spec.kappa);
        auto ops = random_updates(game, 8, rng);
        for (auto variant : {GammaVariant::simple, GammaVariant::refined}) {
            ParityGame cur = game;
            GammaGraph graph(cur, trav, variant, Materialization::full);
            std::size_t first_size = 0;
            for (const auto& op : ops) {
                auto d = graph.delta(cur, op);
                if (variant == GammaVariant::refined) {
                    CHECK(d.removed.size() <= 1);
                    CHECK(d.added.size() <= 1);
                }
                // all delta edges share one source vertex in the simple graph
                if (variant == GammaVariant::simple && d.size() > 0) {
                    std::set<int> srcs;
                    for (const auto& e : d.removed)
                        srcs.insert(e.src);
                    for (const auto& e : d.added)
                        srcs.insert(e.src);
                    CHECK(srcs.size() == 1);
                }
                graph.apply(d);
                apply_update_in_place(cur, op);
                GammaGraph fresh(cur, trav, variant, Materialization::full);
                CHECK(graph.dump() == fresh.dump());
                if (first_size == 0)
                    first_size = fresh.vertex_count();
                CHECK(fresh.vertex_count() == static_cast<int>(first_size));
            }
        }
    }
}

TEST_CASE("refined delta shapes")
{
    auto g = fixtures::small_game();
    auto trav = make_traversal(g, 1);
    GammaGraph graph(g, trav, GammaVariant::refined, Materialization::full);
    // vertex 1 belongs to P1
    auto d = graph.delta(g, UpdateOp::ins(1, 0));
    REQUIRE(d.removed.size() == 1);
    REQUIRE(d.added.size() == 1);
    CHECK(graph.label_name(d.removed.begin()->label) == "c1>0.0");
    CHECK(graph.label_name(d.added.begin()->label) == "c1>0.*");
    // vertex 0 belongs to P0
    auto d0 = graph.delta(g, UpdateOp::ins(0, 1));
    CHECK(d0.removed.empty());
    REQUIRE(d0.added.size() == 1);
    CHECK(graph.label_name(d0.added.begin()->label) == "c0>1.1");
    auto g1 = apply_update(g, UpdateOp::ins(0, 1));
    auto back = graph.delta(g1, UpdateOp::del(0, 1));
    CHECK(back.removed == d0.added);
    CHECK(back.added == d0.removed);
    CHECK_THROWS_AS(graph.delta(g, UpdateOp::set_owner(0, Player::p1)), Error);
}

TEST_CASE("dump is canonical")
{
    auto g = fixtures::small_game({{0, 1}});
    auto trav = make_traversal(g, 1);
    GammaGraph a(g, trav, GammaVariant::refined, Materialization::full);
    GammaGraph b(g, trav, GammaVariant::refined, Materialization::full);
    CHECK(a.dump() == b.dump());
    CHECK(a.dump().find("src . n") != std::string::npos);
}
