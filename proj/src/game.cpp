#include "dynparity/game.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace dynparity {

ParityGame::ParityGame(int n, int max_color, Vertex sigma)
    : max_color_(max_color), owner_(n, Player::p0), color_(n, 1)
{
    require(n >= 1, ErrorKind::invalid_argument, "game needs at least one vertex");
    require(max_color >= 1, ErrorKind::invalid_argument, "max color must be at least 1");
    set_sigma(sigma);
}

void ParityGame::set_sigma(Vertex v)
{
    require(valid_vertex(v), ErrorKind::invalid_argument, "sigma out of range: " + std::to_string(v));
    sigma_ = v;
}

void ParityGame::set_owner(Vertex v, Player p)
{
    require(valid_vertex(v), ErrorKind::invalid_argument, "vertex out of range: " + std::to_string(v));
    owner_[v] = p;
}

void ParityGame::set_color(Vertex v, int c)
{
    require(valid_vertex(v), ErrorKind::invalid_argument, "vertex out of range: " + std::to_string(v));
    require(c >= 1 && c <= max_color_, ErrorKind::invalid_argument, "color out of range: " + std::to_string(c));
    color_[v] = c;
}

void ParityGame::add_max_edge(Vertex u, Vertex v)
{
    require(valid_vertex(u) && valid_vertex(v), ErrorKind::invalid_argument, "max edge endpoint out of range");
    max_edges_.insert({u, v});
}

void ParityGame::add_edge(Vertex u, Vertex v)
{
    require(has_max_edge(u, v), ErrorKind::invalid_argument,
            "edge " + std::to_string(u) + "->" + std::to_string(v) + " is not a max edge");
    edges_.insert({u, v});
}

void ParityGame::remove_edge(Vertex u, Vertex v)
{
    require(has_max_edge(u, v), ErrorKind::invalid_argument,
            "edge " + std::to_string(u) + "->" + std::to_string(v) + " is not a max edge");
    edges_.erase({u, v});
}

std::vector<Vertex> ParityGame::successors(Vertex v) const
{
    std::vector<Vertex> out;
    for (auto it = edges_.lower_bound({v, 0}); it != edges_.end() && it->first == v; ++it)
        out.push_back(it->second);
    return out;
}

void validate_update(const ParityGame& game, const UpdateOp& op)
{
    require(game.valid_vertex(op.a), ErrorKind::invalid_argument, "update vertex out of range");
    switch (op.kind) {
    case UpdateOp::Kind::ins:
    case UpdateOp::Kind::del:
        require(game.valid_vertex(op.b), ErrorKind::invalid_argument, "update vertex out of range");
        require(game.has_max_edge(op.a, op.b), ErrorKind::invalid_argument,
                "update on a pair outside the max edge set");
        break;
    case UpdateOp::Kind::owner:
        require(op.b == 0 || op.b == 1, ErrorKind::invalid_argument, "owner must be 0 or 1");
        break;
    case UpdateOp::Kind::color:
        require(op.b >= 1 && op.b <= game.max_color(), ErrorKind::invalid_argument, "color out of range");
        break;
    }
}

void apply_update_in_place(ParityGame& game, const UpdateOp& op)
{
    validate_update(game, op);
    switch (op.kind) {
    case UpdateOp::Kind::ins: game.add_edge(op.a, op.b); break;
    case UpdateOp::Kind::del: game.remove_edge(op.a, op.b); break;
    case UpdateOp::Kind::owner: game.set_owner(op.a, static_cast<Player>(op.b)); break;
    case UpdateOp::Kind::color: game.set_color(op.a, op.b); break;
    }
}

ParityGame apply_update(ParityGame game, const UpdateOp& op)
{
    apply_update_in_place(game, op);
    return game;
}

std::vector<Edge> Selector::pairs() const
{
    std::vector<Edge> out;
    for (Vertex v = 0; v < size(); ++v)
        if (next_[v])
            out.emplace_back(v, *next_[v]);
    return out;
}

bool Selector::consistent_with(const ParityGame& game) const
{
    if (size() != game.size())
        return false;
    for (auto [v, w] : pairs())
        if (!game.has_edge(v, w))
            return false;
    return true;
}

Outcome outcome_of_selector(const ParityGame& game, const Selector& f, Vertex s)
{
    std::vector<int> seen_at(game.size(), -1);
    std::vector<Vertex> path;
    Vertex cur = s;
    while (true) {
        if (seen_at[cur] >= 0) {
            Outcome out;
            out.lasso = true;
            out.prefix_length = seen_at[cur];
            int best = 0;
            for (std::size_t j = seen_at[cur]; j < path.size(); ++j)
                best = std::max(best, game.color(path[j]));
            out.cycle_max_color = best;
            out.winner = best % 2 == 0 ? Player::p0 : Player::p1;
            out.last = path.back();
            return out;
        }
        seen_at[cur] = static_cast<int>(path.size());
        path.push_back(cur);
        if (!f.defined(cur)) {
            Outcome out;
            out.last = cur;
            out.winner = opponent(game.owner(cur));
            return out;
        }
        cur = f.at(cur);
    }
}

VertexSet StaticSolution::region(Player p) const
{
    VertexSet out;
    for (Vertex v = 0; v < static_cast<Vertex>(winner.size()); ++v)
        if (winner[v] == p)
            out.insert(v);
    return out;
}

namespace {

// Zielonka's recursion on subgames given as membership masks. A dead end
// inside the current subgame loses for its owner; the attractor treats an
// opponent vertex with no successor in the subgame as attracted, which
// matches that rule.
class Zielonka {
public:
    explicit Zielonka(const ParityGame& game) : game_(game), n_(game.size()), succ_(n_), pred_(n_)
    {
        for (auto [u, v] : game.edges()) {
            succ_[u].push_back(v);
            pred_[v].push_back(u);
        }
    }

    StaticSolution run()
    {
        std::vector<char> all(n_, 1);
        StaticSolution sol;
        sol.winner.assign(n_, Player::p0);
        sol.strategy0 = Selector(n_);
        sol.strategy1 = Selector(n_);
        Result r = solve(all);
        for (Vertex v = 0; v < n_; ++v) {
            sol.winner[v] = r.win1[v] ? Player::p1 : Player::p0;
            if (game_.owner(v) == Player::p0 && r.move[v] >= 0 && !r.win1[v])
                sol.strategy0.set(v, r.move[v]);
            if (game_.owner(v) == Player::p1 && r.move[v] >= 0 && r.win1[v])
                sol.strategy1.set(v, r.move[v]);
        }
        return sol;
    }

private:
    struct Result {
        std::vector<char> win1; // membership of W1 inside the subgame
        std::vector<int> move;  // winning move of the owner, -1 if none needed
    };

    // Attractor of `target` for player p inside `in`; records attractor moves.
    std::vector<char> attract(const std::vector<char>& in, const std::vector<char>& target, Player p,
                              std::vector<int>& move) const
    {
        std::vector<char> attr(n_, 0);
        std::vector<int> remaining(n_, 0);
        std::deque<Vertex> queue;
        for (Vertex v = 0; v < n_; ++v) {
            if (!in[v])
                continue;
            for (Vertex w : succ_[v])
                remaining[v] += in[w] ? 1 : 0;
            if (target[v]) {
                attr[v] = 1;
                queue.push_back(v);
            }
        }
        for (Vertex v = 0; v < n_; ++v) {
            if (in[v] && !attr[v] && game_.owner(v) != p && remaining[v] == 0) {
                attr[v] = 1;
                queue.push_back(v);
            }
        }
        while (!queue.empty()) {
            Vertex w = queue.front();
            queue.pop_front();
            for (Vertex u : pred_[w]) {
                if (!in[u] || attr[u])
                    continue;
                if (game_.owner(u) == p) {
                    attr[u] = 1;
                    move[u] = w;
                    queue.push_back(u);
                } else if (--remaining[u] == 0) {
                    attr[u] = 1;
                    queue.push_back(u);
                }
            }
        }
        return attr;
    }

    static std::vector<char> minus(const std::vector<char>& a, const std::vector<char>& b)
    {
        std::vector<char> out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            out[i] = a[i] && !b[i];
        return out;
    }

    Result solve(const std::vector<char>& in)
    {
        Result res;
        res.win1.assign(n_, 0);
        res.move.assign(n_, -1);
        bool empty = std::none_of(in.begin(), in.end(), [](char c) { return c != 0; });
        if (empty)
            return res;

        // Dead ends first: the stuck owner loses.
        std::vector<char> stuck_p0(n_, 0), stuck_p1(n_, 0);
        bool any_stuck = false;
        for (Vertex v = 0; v < n_; ++v) {
            if (!in[v])
                continue;
            bool has = std::any_of(succ_[v].begin(), succ_[v].end(), [&](Vertex w) { return in[w] != 0; });
            if (!has) {
                (game_.owner(v) == Player::p0 ? stuck_p0 : stuck_p1)[v] = 1;
                any_stuck = true;
            }
        }
        if (any_stuck) {
            bool p1_stuck = std::any_of(stuck_p1.begin(), stuck_p1.end(), [](char c) { return c != 0; });
            Player p = p1_stuck ? Player::p0 : Player::p1;
            const auto& target = p1_stuck ? stuck_p1 : stuck_p0;
            std::vector<int> attr_move(n_, -1);
            auto attr = attract(in, target, p, attr_move);
            Result sub = solve(minus(in, attr));
            for (Vertex v = 0; v < n_; ++v) {
                if (attr[v]) {
                    res.win1[v] = p == Player::p1;
                    res.move[v] = attr_move[v];
                } else if (in[v]) {
                    res.win1[v] = sub.win1[v];
                    res.move[v] = sub.move[v];
                }
            }
            return res;
        }

        int top = 0;
        for (Vertex v = 0; v < n_; ++v)
            if (in[v])
                top = std::max(top, game_.color(v));
        Player p = top % 2 == 0 ? Player::p0 : Player::p1;
        std::vector<char> top_set(n_, 0);
        for (Vertex v = 0; v < n_; ++v)
            top_set[v] = in[v] && game_.color(v) == top;
        std::vector<int> attr_move(n_, -1);
        auto attr = attract(in, top_set, p, attr_move);
        Result sub = solve(minus(in, attr));

        auto won_by = [](const Result& r, Vertex v, Player q) { return (r.win1[v] != 0) == (q == Player::p1); };
        bool opponent_empty = true;
        for (Vertex v = 0; v < n_; ++v)
            if (in[v] && !attr[v] && won_by(sub, v, opponent(p)))
                opponent_empty = false;

        if (opponent_empty) {
            for (Vertex v = 0; v < n_; ++v) {
                if (!in[v])
                    continue;
                res.win1[v] = p == Player::p1;
                if (game_.owner(v) != p)
                    continue;
                if (!attr[v]) {
                    res.move[v] = sub.move[v];
                } else if (top_set[v]) {
                    for (Vertex w : succ_[v])
                        if (in[w]) {
                            res.move[v] = w;
                            break;
                        }
                } else {
                    res.move[v] = attr_move[v];
                }
            }
            return res;
        }

        std::vector<char> lost(n_, 0);
        for (Vertex v = 0; v < n_; ++v)
            lost[v] = in[v] && !attr[v] && won_by(sub, v, opponent(p));
        std::vector<int> back_move(n_, -1);
        auto back = attract(in, lost, opponent(p), back_move);
        Result rest = solve(minus(in, back));
        for (Vertex v = 0; v < n_; ++v) {
            if (!in[v])
                continue;
            if (back[v]) {
                res.win1[v] = opponent(p) == Player::p1;
                res.move[v] = lost[v] ? sub.move[v] : back_move[v];
            } else {
                res.win1[v] = rest.win1[v];
                res.move[v] = rest.move[v];
            }
        }
        return res;
    }

    const ParityGame& game_;
    int n_;
    std::vector<std::vector<Vertex>> succ_;
    std::vector<std::vector<Vertex>> pred_;
};

void enumerate(const ParityGame& game, Player player, bool allow_stop,
               const std::function<bool(const Selector&)>& visit)
{
    std::vector<Vertex> mine;
    std::vector<std::vector<Vertex>> options;
    for (Vertex v = 0; v < game.size(); ++v) {
        if (game.owner(v) != player)
            continue;
        auto succ = game.successors(v);
        if (succ.empty())
            continue;
        mine.push_back(v);
        if (allow_stop)
            succ.insert(succ.begin(), -1);
        options.push_back(std::move(succ));
    }
    Selector f(game.size());
    std::vector<std::size_t> pick(mine.size(), 0);
    while (true) {
        for (std::size_t k = 0; k < mine.size(); ++k) {
            Vertex w = options[k][pick[k]];
            if (w < 0)
                f.clear(mine[k]);
            else
                f.set(mine[k], w);
        }
        if (!visit(f))
            return;
        std::size_t k = 0;
        while (k < mine.size() && ++pick[k] == options[k].size())
            pick[k++] = 0;
        if (k == mine.size())
            return;
    }
}

} // namespace

StaticSolution solve_static(const ParityGame& game) { return Zielonka(game).run(); }

void for_each_total_selector(const ParityGame& game, Player player,
                             const std::function<bool(const Selector&)>& visit)
{
    enumerate(game, player, false, visit);
}

void for_each_selector(const ParityGame& game, Player player, const std::function<bool(const Selector&)>& visit)
{
    enumerate(game, player, true, visit);
}

std::uint64_t count_selectors(const ParityGame& game, Player player)
{
    std::uint64_t count = 1;
    for (Vertex v = 0; v < game.size(); ++v)
        if (game.owner(v) == player)
            count *= game.successors(v).size() + 1;
    return count;
}

bool strategy_wins_from(const ParityGame& game, const Selector& strategy, Player p, Vertex from)
{
    bool ok = true;
    for_each_total_selector(game, opponent(p), [&](const Selector& counter) {
        Selector both = counter;
        for (Vertex v = 0; v < game.size(); ++v)
            if (game.owner(v) == p && strategy.defined(v))
                both.set(v, strategy.at(v));
        if (outcome_of_selector(game, both, from).winner != p) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

VertexSet reachable_under(const ParityGame& game, const Selector& strategy, Player p, Vertex from)
{
    VertexSet seen{from};
    std::vector<Vertex> stack{from};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        std::vector<Vertex> next;
        if (game.owner(v) == p) {
            if (strategy.defined(v))
                next.push_back(strategy.at(v));
        } else {
            next = game.successors(v);
        }
        for (Vertex w : next)
            if (seen.insert(w).second)
                stack.push_back(w);
    }
    return seen;
}

} // namespace dynparity
