#include <doctest.h>

#include <dynparity/random.hpp>
#include <dynparity/treedec.hpp>

#include <sstream>

#include "fixtures.hpp"

using namespace dynparity;

namespace {

std::set<Edge> both_ways(std::initializer_list<Edge> es)
{
    std::set<Edge> out;
    for (auto [u, v] : es) {
        out.insert({u, v});
        out.insert({v, u});
    }
    return out;
}

} // namespace

TEST_CASE("exact decompositions of small graphs")
{
    auto path = both_ways({{0, 1}, {1, 2}});
    auto td = build_tree_decomposition(3, path, 1);
    CHECK(td.width() == 1);
    CHECK(is_valid_decomposition(td, 3, path));
    std::set<Bag> bags(td.bags.begin(), td.bags.end());
    CHECK(bags == std::set<Bag>{{0, 1}, {1, 2}});

    auto triangle = both_ways({{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_AS(build_tree_decomposition(3, triangle, 1), Error);
    try {
        build_tree_decomposition(3, triangle, 1);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::width_exceeded);
    }
    auto tri = build_tree_decomposition(3, triangle, 2);
    CHECK(tri.width() == 2);
    REQUIRE(tri.node_count() == 1);
    CHECK(tri.bags[0] == Bag{0, 1, 2});
}

TEST_CASE("make_nice on a single bag")
{
    TreeDecomposition td;
    td.bags = {{0, 1}};
    auto ntd = make_nice(td, 2, 0);
    REQUIRE(ntd.node_count() == 3);
    CHECK(ntd.bags[ntd.root] == Bag{0});
    NodeId mid = ntd.children[ntd.root].at(0);
    CHECK(ntd.bags[mid] == Bag{0, 1});
    CHECK(ntd.bags[ntd.children[mid].at(0)] == Bag{1});

    NiceTraversal trav(ntd, 2, 0);
    CHECK(trav.length() == 5);
    CHECK(trav.node(1) == trav.node(5));
    CHECK(trav.node(2) == trav.node(4));
    CHECK(trav.critical_indices() == std::vector<int>{1, 2});
    CHECK(trav.theta(1) == 0);
    CHECK(trav.theta(2) == 1);
    CHECK(trav.thetas(1) == std::vector<NodeId>{trav.node(1)});
    CHECK(trav.psi(1) == VertexSet{0});
    CHECK(trav.region(2, trav.node(2)) == VertexSet{1});
    CHECK(trav.psi_after(trav.length()).empty());
}

TEST_CASE("make_nice keeps nice inputs")
{
    auto fig = fixtures::figure_traversal();
    auto again = make_nice(fig.decomposition().as_decomposition(), 4, 0);
    CHECK(again.node_count() == fig.decomposition().node_count());
    std::multiset<Bag> a(again.bags.begin(), again.bags.end());
    std::multiset<Bag> b(fig.decomposition().bags.begin(), fig.decomposition().bags.end());
    CHECK(a == b);
}

TEST_CASE("path rooted in the middle")
{
    auto path = both_ways({{0, 1}, {1, 2}});
    TreeDecomposition td;
    td.bags = {{0, 1}, {1, 2}};
    td.tree_edges = {{0, 1}};
    auto ntd = make_nice(td, 3, 1);
    CHECK(ntd.bags[ntd.root] == Bag{1});
    CHECK(ntd.is_nice(3, 1));
    CHECK(is_valid_decomposition(ntd.as_decomposition(), 3, path));
}

TEST_CASE("figure traversal sets")
{
    auto trav = fixtures::figure_traversal();
    // a b c d e d c b g ...
    std::vector<NodeId> expect{0, 1, 2, 3, 4, 3, 2, 1, 6};
    for (int i = 1; i <= 9; ++i)
        CHECK(trav.node(i) == expect[i - 1]);
    CHECK(trav.thetas(8) == std::vector<NodeId>{0, 1});
    CHECK(trav.region(8, 0).empty());
    CHECK(trav.region_nodes(8, 0).empty());
    CHECK(trav.region(8, 1) == VertexSet{1});
    CHECK(trav.length() == 2 * 9 - 1);
}

TEST_CASE("decomposition text round trip")
{
    auto trav = fixtures::figure_traversal();
    std::ostringstream out;
    write_decomposition(out, trav.decomposition());
    std::istringstream in("# comment\n" + out.str());
    auto back = read_decomposition(in);
    CHECK(back.bags == trav.decomposition().bags);
    CHECK(back.parent == trav.decomposition().parent);
    std::istringstream bad("0 root 0\n1 7 1\n");
    CHECK_THROWS_AS(read_decomposition(bad), Error);
}

TEST_CASE("random decompositions: validity, niceness, walk length, critical indices, separators")
{
    std::mt19937_64 rng(3);
    for (int round = 0; round < 1000; ++round) {
        RandomGameSpec spec;
        spec.n = 2 + round % 9;
        spec.kappa = 1 + round % 3;
        auto g = random_game(spec, rng);
        auto td = build_tree_decomposition(g.size(), g.max_edges(), spec.kappa);
        REQUIRE(is_valid_decomposition(td, g.size(), g.max_edges()));
        CHECK(td.width() <= spec.kappa);
        auto ntd = make_nice(td, g.size(), g.sigma());
        std::string why;
        CHECK_MESSAGE(ntd.is_nice(g.size(), g.sigma(), &why), why);
        CHECK(is_valid_decomposition(ntd.as_decomposition(), g.size(), g.max_edges()));
        CHECK(ntd.width() <= td.width());
        NiceTraversal trav(ntd, g.size(), g.sigma());
        CHECK(trav.length() == 2 * ntd.node_count() - 1);
        CHECK(trav.psi_upto(1) == VertexSet{g.sigma()});
        CHECK_FALSE(trav.critical(trav.length()));
        std::vector<int> introduced(g.size(), 0);
        for (int i = 1; i <= trav.length(); ++i) {
            VertexSet before = trav.psi_after(i - 1), after = trav.psi_after(i);
            VertexSet diff;
            for (Vertex s : before)
                if (!after.count(s))
                    diff.insert(s);
            if (trav.critical(i)) {
                CHECK(diff == VertexSet{trav.theta(i)});
                ++introduced[trav.theta(i)];
            } else {
                CHECK(diff.empty());
            }
            // Separator property of the regions.
            for (NodeId v : trav.thetas(i)) {
                VertexSet reg = trav.region(i, v);
                const Bag& bag = trav.bag(v);
                for (auto [x, y] : g.max_edges()) {
                    bool xin = reg.count(x), yin = reg.count(y);
                    if (xin && !yin)
                        CHECK((std::binary_search(bag.begin(), bag.end(), y)));
                    if (yin && !xin)
                        CHECK((std::binary_search(bag.begin(), bag.end(), x)));
                }
            }
            // Regions partition the uncovered vertices.
            int total = 0;
            for (NodeId v : trav.thetas(i))
                total += static_cast<int>(trav.region(i, v).size());
            CHECK(total == static_cast<int>(trav.psi_after(i - 1).size()));
        }
        for (int c : introduced)
            CHECK(c == 1);
    }
}
