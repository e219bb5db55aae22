#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dynparity/error.hpp"

namespace dynparity {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::set<Vertex>;

enum class Player : std::uint8_t { p0 = 0, p1 = 1 };

constexpr Player opponent(Player p) { return p == Player::p0 ? Player::p1 : Player::p0; }
constexpr int index_of(Player p) { return static_cast<int>(p); }

class ParityGame {
public:
    ParityGame() = default;
    ParityGame(int n, int max_color, Vertex sigma = 0);

    int size() const { return static_cast<int>(owner_.size()); }
    int max_color() const { return max_color_; }
    Vertex sigma() const { return sigma_; }
    Player owner(Vertex v) const { return owner_.at(v); }
    int color(Vertex v) const { return color_.at(v); }

    void set_sigma(Vertex v);
    void set_owner(Vertex v, Player p);
    void set_color(Vertex v, int c);

    void add_max_edge(Vertex u, Vertex v);
    // Requires (u,v) to be a max edge.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    bool has_edge(Vertex u, Vertex v) const { return edges_.count({u, v}) != 0; }
    bool has_max_edge(Vertex u, Vertex v) const { return max_edges_.count({u, v}) != 0; }
    const std::set<Edge>& edges() const { return edges_; }
    const std::set<Edge>& max_edges() const { return max_edges_; }
    std::vector<Vertex> successors(Vertex v) const;

    bool valid_vertex(Vertex v) const { return v >= 0 && v < size(); }

    friend bool operator==(const ParityGame&, const ParityGame&) = default;

private:
    int max_color_ = 1;
    Vertex sigma_ = 0;
    std::vector<Player> owner_;
    std::vector<int> color_;
    std::set<Edge> edges_;
    std::set<Edge> max_edges_;
};

struct UpdateOp {
    enum class Kind { ins, del, owner, color };
    Kind kind = Kind::ins;
    Vertex a = 0;
    int b = 0; // target vertex, player index or color

    static UpdateOp ins(Vertex x, Vertex y) { return {Kind::ins, x, y}; }
    static UpdateOp del(Vertex x, Vertex y) { return {Kind::del, x, y}; }
    static UpdateOp set_owner(Vertex s, Player p) { return {Kind::owner, s, index_of(p)}; }
    static UpdateOp set_color(Vertex s, int c) { return {Kind::color, s, c}; }

    bool is_edge_op() const { return kind == Kind::ins || kind == Kind::del; }
    friend bool operator==(const UpdateOp&, const UpdateOp&) = default;
};

void validate_update(const ParityGame& game, const UpdateOp& op);
void apply_update_in_place(ParityGame& game, const UpdateOp& op);
ParityGame apply_update(ParityGame game, const UpdateOp& op);

// Partial map V -> V; an empty slot means the vertex is outside the domain.
class Selector {
public:
    Selector() = default;
    explicit Selector(int n) : next_(n) {}

    int size() const { return static_cast<int>(next_.size()); }
    bool defined(Vertex v) const { return next_.at(v).has_value(); }
    Vertex at(Vertex v) const { return *next_.at(v); }
    const std::optional<Vertex>& operator[](Vertex v) const { return next_.at(v); }
    void set(Vertex v, Vertex w) { next_.at(v) = w; }
    void clear(Vertex v) { next_.at(v).reset(); }
    std::vector<Edge> pairs() const;
    bool consistent_with(const ParityGame& game) const;

    friend bool operator==(const Selector&, const Selector&) = default;
    friend auto operator<=>(const Selector&, const Selector&) = default;

private:
    std::vector<std::optional<Vertex>> next_;
};

struct Outcome {
    Player winner = Player::p0;
    bool lasso = false;
    Vertex last = 0;         // finite plays
    int prefix_length = 0;   // lassos: steps before the cycle is entered
    int cycle_max_color = 0; // lassos
};

Outcome outcome_of_selector(const ParityGame& game, const Selector& f, Vertex s);

struct StaticSolution {
    std::vector<Player> winner; // per vertex
    Selector strategy0;
    Selector strategy1;

    VertexSet region(Player p) const;
    bool wins(Player p, Vertex v) const { return winner.at(v) == p; }
};

StaticSolution solve_static(const ParityGame& game);

// Calls visit for every selector over the vertices of `player` that is total on
// vertices with a successor (the opponent of a fixed strategy must keep moving).
void for_each_total_selector(const ParityGame& game, Player player,
                             const std::function<bool(const Selector&)>& visit);

// Every V_p-selector including partial ones (dead choices allowed).
void for_each_selector(const ParityGame& game, Player player,
                       const std::function<bool(const Selector&)>& visit);

std::uint64_t count_selectors(const ParityGame& game, Player player);

// Exhaustive check: every maximal play from `from` compatible with strategy
// (a selector of player p) is won by p.
bool strategy_wins_from(const ParityGame& game, const Selector& strategy, Player p, Vertex from);

// Vertices reachable from `from` when `p` follows strategy and the opponent plays freely.
VertexSet reachable_under(const ParityGame& game, const Selector& strategy, Player p, Vertex from);

} // namespace dynparity
