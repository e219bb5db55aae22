#pragma once

#include <dynparity/game.hpp>
#include <dynparity/treedec.hpp>

#include <functional>

namespace fixtures {

using namespace dynparity;

// Two vertices: 0 owned by P0 with color 1, 1 owned by P1 with color 2.
inline ParityGame small_game(std::initializer_list<Edge> edges = {})
{
    ParityGame g(2, 2, 0);
    g.set_owner(0, Player::p0);
    g.set_color(0, 1);
    g.set_owner(1, Player::p1);
    g.set_color(1, 2);
    g.add_max_edge(0, 1);
    g.add_max_edge(1, 0);
    g.add_max_edge(0, 0);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

// The four-vertex instance drawn with nodes a..i; vertices s1..s4 are 0..3.
inline ParityGame figure_game()
{
    ParityGame g(4, 3, 0);
    const int colors[] = {1, 2, 1, 3};
    for (Vertex v = 0; v < 4; ++v) {
        g.set_color(v, colors[v]);
        g.set_owner(v, Player::p0);
    }
    for (auto [u, v] : std::initializer_list<Edge>{{0, 1}, {1, 0}, {2, 0}, {0, 3}, {3, 1}, {1, 3}, {3, 2}, {2, 2}})
        g.add_max_edge(u, v);
    for (auto [u, v] : std::initializer_list<Edge>{{0, 1}, {1, 0}, {3, 1}, {2, 2}})
        g.add_edge(u, v);
    return g;
}

inline Selector figure_selector()
{
    Selector f(4);
    f.set(0, 1);
    f.set(1, 0);
    f.set(3, 1);
    f.set(2, 2);
    return f;
}

// Nodes a..i as ids 0..8.
inline NiceTraversal figure_traversal()
{
    std::vector<Bag> bags{{0}, {0, 3}, {0, 2, 3}, {2, 3}, {2}, {3}, {0, 1, 3}, {0, 1}, {1}};
    std::vector<NodeId> parent{-1, 0, 1, 2, 3, 1, 1, 6, 7};
    return NiceTraversal(NiceDecomposition::from_parents(bags, parent), 4, 0);
}

// Every V-selector, partial ones included.
inline void for_each_full_selector(const ParityGame& g, const std::function<void(const Selector&)>& visit)
{
    for_each_selector(g, Player::p0, [&](const Selector& f0) {
        for_each_selector(g, Player::p1, [&](const Selector& f1) {
            Selector f = f0;
            for (Vertex v = 0; v < g.size(); ++v)
                if (f1.defined(v))
                    f.set(v, f1.at(v));
            visit(f);
            return true;
        });
        return true;
    });
}

} // namespace fixtures
