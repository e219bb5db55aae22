#include "dynparity/views.hpp"

#include <algorithm>
#include <sstream>

namespace dynparity {

std::string cell::to_string(CellCode c)
{
    if (c == unknown)
        return "?";
    if (c == top)
        return "T";
    if (c == bottom)
        return "F";
    return "(" + std::to_string(target(c)) + "," + std::to_string(color(c)) + ")";
}

void canonicalize(ViewSet& set)
{
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
}

std::string to_string(const View& view)
{
    std::string out = "[";
    for (std::size_t k = 0; k < view.size(); ++k) {
        if (k)
            out += ' ';
        out += cell::to_string(view[k]);
    }
    return out + "]";
}

std::string to_string(const ViewSet& set)
{
    std::string out = "{";
    for (std::size_t k = 0; k < set.size(); ++k) {
        if (k)
            out += ',';
        out += to_string(set[k]);
    }
    return out + "}";
}

View unknown_view(const NiceTraversal& trav, NodeId v) { return View(trav.bag(v).size(), cell::unknown); }

int slot_of(const NiceTraversal& trav, NodeId v, Vertex s)
{
    const Bag& bag = trav.bag(v);
    auto it = std::lower_bound(bag.begin(), bag.end(), s);
    return it != bag.end() && *it == s ? static_cast<int>(it - bag.begin()) : -1;
}

namespace {

CellCode verdict_of_stuck(const ParityGame& game, Vertex s)
{
    return game.owner(s) == Player::p1 ? cell::top : cell::bottom;
}

CellCode verdict_of_color(int c) { return c % 2 == 0 ? cell::top : cell::bottom; }

CellCode simulate(const ParityGame& game, const NiceTraversal& trav, const Selector& f, int i, NodeId v, Vertex s)
{
    auto inside = [&](Vertex x) { return trav.region_owner(i, x) == v; };
    if (!f.defined(s))
        return inside(s) ? verdict_of_stuck(game, s) : cell::unknown;
    Vertex cur = f.at(s);
    if (!inside(cur))
        return cell::unknown;
    std::vector<int> seen_at(game.size(), -1);
    std::vector<Vertex> path{s};
    seen_at[s] = 0;
    int top_color = game.color(s);
    while (true) {
        if (seen_at[cur] >= 0) {
            int best = 0;
            for (std::size_t j = seen_at[cur]; j < path.size(); ++j)
                best = std::max(best, game.color(path[j]));
            return verdict_of_color(best);
        }
        seen_at[cur] = static_cast<int>(path.size());
        path.push_back(cur);
        top_color = std::max(top_color, game.color(cur));
        if (!f.defined(cur))
            return verdict_of_stuck(game, cur);
        Vertex next = f.at(cur);
        if (!inside(next))
            return cell::exit(next, top_color);
        cur = next;
    }
}

// Calls fn(links) for every (S, T) making (phi, S, T) adapted to b at step i.
template <class Fn>
void for_each_adapted(const NiceTraversal& trav, int i, const View& phi, const ChoiceVectors& b, Fn&& fn)
{
    const Bag& bag = trav.bag(trav.node(i));
    const Vertex theta = trav.theta(i);
    const int kt = slot_of(trav, trav.node(i), theta);
    const std::size_t k_max = bag.size();

    std::vector<std::optional<Vertex>> outs;
    bool all_bot = std::all_of(b.out.begin(), b.out.end(), [](ChoiceSet c) { return (c & choice_bot) != 0; });
    if (all_bot)
        outs.emplace_back();
    if (phi[kt] == cell::unknown) {
        for (std::size_t k = 0; k < k_max; ++k) {
            if (!(b.out[k] & choice_top))
                continue;
            bool rest = true;
            for (std::size_t j = 0; j < k_max; ++j)
                if (j != k && !(b.out[j] & choice_bot))
                    rest = false;
            if (rest)
                outs.emplace_back(bag[k]);
        }
    }
    if (outs.empty())
        return;

    std::vector<char> can_in(k_max), can_out(k_max);
    for (std::size_t k = 0; k < k_max; ++k) {
        can_in[k] = (b.in[k] & choice_top) && phi[k] == cell::unknown;
        can_out[k] = (b.in[k] & choice_bot) != 0;
        if (!can_in[k] && !can_out[k])
            return;
    }
    Links links;
    for (const auto& out : outs) {
        links.out = out;
        bool theta_loop = out && *out == theta;
        // Enumerate T over the slots that admit both options.
        std::vector<std::size_t> free;
        links.in.clear();
        bool ok = true;
        for (std::size_t k = 0; k < k_max; ++k) {
            bool in_forced = static_cast<int>(k) == kt ? theta_loop : false;
            bool out_forced = static_cast<int>(k) == kt ? !theta_loop : false;
            if (static_cast<int>(k) == kt) {
                if ((in_forced && !can_in[k]) || (out_forced && !can_out[k]))
                    ok = false;
                if (in_forced)
                    links.in.push_back(bag[k]);
                continue;
            }
            if (can_in[k] && can_out[k])
                free.push_back(k);
            else if (can_in[k])
                links.in.push_back(bag[k]);
        }
        if (!ok)
            continue;
        const std::vector<Vertex> fixed = links.in;
        for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
            links.in = fixed;
            for (std::size_t j = 0; j < free.size(); ++j)
                if (mask >> j & 1)
                    links.in.push_back(bag[free[j]]);
            std::sort(links.in.begin(), links.in.end());
            if (fn(static_cast<const Links&>(links)))
                return;
        }
    }
}

} // namespace

View view_bruteforce(const ParityGame& game, const NiceTraversal& trav, const Selector& f, int i, NodeId v)
{
    const Bag& bag = trav.bag(v);
    View out(bag.size());
    for (std::size_t k = 0; k < bag.size(); ++k)
        out[k] = simulate(game, trav, f, i, v, bag[k]);
    return out;
}

ViewTuple views_bruteforce(const ParityGame& game, const NiceTraversal& trav, const Selector& f, int i)
{
    ViewTuple out;
    for (NodeId v : trav.thetas(i))
        out.push_back(view_bruteforce(game, trav, f, i, v));
    return out;
}

Links links_at(const NiceTraversal& trav, const Selector& f, int i)
{
    Links links;
    NodeId v = trav.node(i);
    Vertex theta = trav.theta(i);
    if (f.defined(theta) && slot_of(trav, v, f.at(theta)) >= 0)
        links.out = f.at(theta);
    for (Vertex s : trav.bag(v))
        if (f.defined(s) && f.at(s) == theta)
            links.in.push_back(s);
    return links;
}

ViewTuple initial_views(const NiceTraversal& trav)
{
    ViewTuple out;
    for (NodeId v : trav.thetas(trav.length()))
        out.push_back(unknown_view(trav, v));
    return out;
}

View merge_child(const NiceTraversal& trav, int i, const View& parent_view, const View& child_view)
{
    NodeId v = trav.node(i), c = trav.node(i + 1);
    const Bag& bag = trav.bag(v);
    View out = parent_view;
    for (std::size_t k = 0; k < bag.size(); ++k) {
        int j = slot_of(trav, c, bag[k]);
        if (j >= 0 && child_view[j] != cell::unknown)
            out[k] = child_view[j];
    }
    return out;
}

View close_critical(const ParityGame& game, const NiceTraversal& trav, int i, const View& star, const Links& links)
{
    NodeId v = trav.node(i);
    const Bag& bag = trav.bag(v);
    const Vertex theta = trav.theta(i);
    const int kt = slot_of(trav, v, theta);
    require(links.in.empty() || std::is_sorted(links.in.begin(), links.in.end()), ErrorKind::invalid_argument,
            "links must be sorted");
    bool loop_out = links.out && *links.out == theta;
    bool loop_in = std::binary_search(links.in.begin(), links.in.end(), theta);
    require(loop_out == loop_in, ErrorKind::invalid_argument, "inconsistent self-loop links");

    View phi = star;
    if (links.out)
        phi[kt] = cell::exit(*links.out, game.color(theta));
    for (Vertex s : links.in) {
        int k = slot_of(trav, v, s);
        require(k >= 0, ErrorKind::invalid_argument, "link outside the bag");
        phi[k] = cell::exit(theta, game.color(s));
    }

    CellCode at = phi[kt];
    CellCode resolved;
    if (at == cell::unknown)
        resolved = verdict_of_stuck(game, theta);
    else if (cell::is_exit(at) && cell::target(at) == theta)
        resolved = verdict_of_color(cell::color(at));
    else
        resolved = at;

    View out = phi;
    for (std::size_t k = 0; k < bag.size(); ++k) {
        if (static_cast<int>(k) == kt) {
            out[k] = resolved;
        } else if (cell::is_exit(phi[k]) && cell::target(phi[k]) == theta) {
            if (cell::is_final(resolved))
                out[k] = resolved;
            else
                out[k] = cell::exit(cell::target(resolved), std::max(cell::color(phi[k]), cell::color(resolved)));
        }
    }
    // theta leaves the region on its first step: nothing to report there.
    if (links.out && *links.out != theta)
        out[kt] = cell::unknown;
    return out;
}

ViewTuple view_step(const ParityGame& game, const NiceTraversal& trav, const ViewTuple& next, int i,
                    const Links& links)
{
    ViewTuple star;
    if (trav.moves_up(i)) {
        star = next;
        star.push_back(unknown_view(trav, trav.node(i)));
    } else {
        star.assign(next.begin(), next.end() - 1);
        star.back() = merge_child(trav, i, next[next.size() - 2], next.back());
    }
    if (trav.critical(i))
        star.back() = close_critical(game, trav, i, star.back(), links);
    return star;
}

std::vector<ViewTuple> view_sweep(const ParityGame& game, const NiceTraversal& trav, const Selector& f)
{
    int len = trav.length();
    std::vector<ViewTuple> out(len + 1);
    out[len] = initial_views(trav);
    for (int i = len - 1; i >= 1; --i)
        out[i] = view_step(game, trav, out[i + 1], i, trav.critical(i) ? links_at(trav, f, i) : Links{});
    return out;
}

bool compatible_pair(const NiceTraversal& trav, NodeId a, const View& va, NodeId b, const View& vb)
{
    const Bag& ba = trav.bag(a);
    const Bag& bb = trav.bag(b);
    std::size_t x = 0, y = 0;
    while (x < ba.size() && y < bb.size()) {
        if (ba[x] < bb[y]) {
            ++x;
        } else if (bb[y] < ba[x]) {
            ++y;
        } else {
            if (va[x] != cell::unknown && vb[y] != cell::unknown)
                return false;
            ++x;
            ++y;
        }
    }
    return true;
}

bool is_compatible(const NiceTraversal& trav, const std::vector<std::pair<NodeId, View>>& views)
{
    for (std::size_t a = 0; a < views.size(); ++a)
        for (std::size_t b = a + 1; b < views.size(); ++b)
            if (!compatible_pair(trav, views[a].first, views[a].second, views[b].first, views[b].second))
                return false;
    return true;
}

std::string choice_name(ChoiceSet c)
{
    switch (c) {
    case choice_bot: return "F";
    case choice_top: return "T";
    case choice_both: return "FT";
    default: return "!";
    }
}

std::vector<ChoiceSet> choice(const ParityGame& game, Vertex x, Vertex y)
{
    if (!game.has_edge(x, y))
        return {choice_bot};
    if (game.owner(x) == Player::p0)
        return {choice_bot, choice_top};
    return {choice_both};
}

std::vector<ChoiceSet> max_choice(const ParityGame& game, Vertex x, Vertex y)
{
    if (!game.has_max_edge(x, y))
        return {choice_bot};
    if (game.owner(x) == Player::p0)
        return {choice_bot, choice_top};
    return {choice_bot, choice_both};
}

std::string to_string(const ChoiceVectors& b)
{
    std::string out;
    for (auto c : b.out)
        out += choice_name(c) + ".";
    out += "|";
    for (auto c : b.in)
        out += choice_name(c) + ".";
    return out;
}

ChoiceVectors choice_vectors_of(const ParityGame& game, const NiceTraversal& trav, const Selector& g, int i)
{
    auto entry = [&](Vertex x, Vertex y) -> ChoiceSet {
        if (!game.has_edge(x, y))
            return choice_bot;
        if (game.owner(x) == Player::p1)
            return choice_both;
        return g.defined(x) && g.at(x) == y ? choice_top : choice_bot;
    };
    ChoiceVectors b;
    Vertex theta = trav.theta(i);
    for (Vertex s : trav.bag(trav.node(i))) {
        b.out.push_back(entry(theta, s));
        b.in.push_back(entry(s, theta));
    }
    return b;
}

bool choice_vectors_allowed(const ParityGame& game, const NiceTraversal& trav, int i, const ChoiceVectors& b,
                            bool use_max_edges)
{
    const Bag& bag = trav.bag(trav.node(i));
    Vertex theta = trav.theta(i);
    if (b.out.size() != bag.size() || b.in.size() != bag.size())
        return false;
    auto options = [&](Vertex x, Vertex y) { return use_max_edges ? max_choice(game, x, y) : choice(game, x, y); };
    for (std::size_t k = 0; k < bag.size(); ++k) {
        auto o = options(theta, bag[k]);
        auto p = options(bag[k], theta);
        if (std::find(o.begin(), o.end(), b.out[k]) == o.end() || std::find(p.begin(), p.end(), b.in[k]) == p.end())
            return false;
        if (bag[k] == theta && b.out[k] != b.in[k])
            return false;
    }
    return true;
}

ViewVector initial_omega(const NiceTraversal& trav)
{
    ViewVector out;
    for (NodeId v : trav.thetas(trav.length()))
        out.push_back({unknown_view(trav, v)});
    return out;
}

ViewSet omega_star(const NiceTraversal& trav, const ViewVector& next, int i)
{
    NodeId v = trav.node(i);
    if (trav.moves_up(i))
        return {unknown_view(trav, v)};
    NodeId c = trav.node(i + 1);
    const ViewSet& mine = next[next.size() - 2];
    const ViewSet& kid = next.back();
    ViewSet out;
    for (const View& a : mine)
        for (const View& b : kid)
            if (compatible_pair(trav, v, a, c, b))
                out.push_back(merge_child(trav, i, a, b));
    canonicalize(out);
    return out;
}

ViewSet omega_critical(const ParityGame& game, const NiceTraversal& trav, int i, const ViewSet& star,
                       const ChoiceVectors& b)
{
    ViewSet out;
    for (const View& phi : star)
        for_each_adapted(trav, i, phi, b, [&](const Links& links) {
            out.push_back(close_critical(game, trav, i, phi, links));
            return false;
        });
    canonicalize(out);
    return out;
}

ViewVector omega_step(const ParityGame& game, const NiceTraversal& trav, const ViewVector& next, int i,
                      const ChoiceVectors* b)
{
    ViewVector z;
    ViewSet star = omega_star(trav, next, i);
    if (trav.moves_up(i)) {
        z = next;
        z.push_back(std::move(star));
    } else {
        z.assign(next.begin(), next.end() - 1);
        z.back() = std::move(star);
    }
    if (trav.critical(i)) {
        require(b != nullptr, ErrorKind::invalid_argument, "critical step needs choice vectors");
        z.back() = omega_critical(game, trav, i, z.back(), *b);
    }
    return z;
}

std::vector<ViewVector> omega_sweep(const ParityGame& game, const NiceTraversal& trav, const Selector& g)
{
    int len = trav.length();
    std::vector<ViewVector> out(len + 1);
    out[len] = initial_omega(trav);
    for (int i = len - 1; i >= 1; --i) {
        if (trav.critical(i)) {
            ChoiceVectors b = choice_vectors_of(game, trav, g, i);
            out[i] = omega_step(game, trav, out[i + 1], i, &b);
        } else {
            out[i] = omega_step(game, trav, out[i + 1], i, nullptr);
        }
    }
    return out;
}

std::uint64_t count_extensions(const ParityGame& game, const Selector& g)
{
    std::uint64_t count = 1;
    for (Vertex v = 0; v < game.size(); ++v)
        if (game.owner(v) == Player::p1)
            count *= game.successors(v).size() + 1;
    (void)g;
    return count;
}

void for_each_extension(const ParityGame& game, const Selector& g, const std::function<void(const Selector&)>& visit)
{
    Selector base(game.size());
    for (Vertex v = 0; v < game.size(); ++v)
        if (game.owner(v) == Player::p0 && g.defined(v))
            base.set(v, g.at(v));
    for_each_selector(game, Player::p1, [&](const Selector& h) {
        Selector f = base;
        for (Vertex v = 0; v < game.size(); ++v)
            if (game.owner(v) == Player::p1 && h.defined(v))
                f.set(v, h.at(v));
        visit(f);
        return true;
    });
}

ViewVector omega_bruteforce(const ParityGame& game, const NiceTraversal& trav, const Selector& g, int i,
                            std::uint64_t cap)
{
    if (count_extensions(game, g) > cap)
        fail(ErrorKind::extension_explosion, "too many extensions to enumerate");
    ViewVector out(trav.thetas(i).size());
    for_each_extension(game, g, [&](const Selector& f) {
        ViewTuple views = views_bruteforce(game, trav, f, i);
        for (std::size_t k = 0; k < views.size(); ++k)
            out[k].push_back(std::move(views[k]));
    });
    for (auto& set : out)
        canonicalize(set);
    return out;
}

bool access_joins(const ParityGame& game, const NiceTraversal& trav, int i, const ViewSet& star,
                  const ChoiceVectors& b, const VertexSet& previous)
{
    (void)game;
    NodeId v = trav.node(i);
    const Bag& bag = trav.bag(v);
    const Vertex theta = trav.theta(i);
    for (const View& phi : star)
        for (std::size_t k = 0; k < bag.size(); ++k)
            if (previous.count(bag[k]) && cell::is_exit(phi[k]) && cell::target(phi[k]) == theta)
                return true;
    bool found = false;
    for (const View& phi : star) {
        for_each_adapted(trav, i, phi, b, [&](const Links& links) {
            for (Vertex s : links.in)
                if (previous.count(s))
                    found = true;
            return found;
        });
        if (found)
            return true;
    }
    return false;
}

VertexSet access_step(const ParityGame& game, const NiceTraversal& trav, int i, const VertexSet& previous,
                      const ViewSet* star, const ChoiceVectors* b)
{
    if (i == 1)
        return {trav.sigma()};
    if (!trav.critical(i)) {
        VertexSet psi = trav.psi(i), out;
        for (Vertex s : previous)
            if (psi.count(s))
                out.insert(s);
        return out;
    }
    require(star && b, ErrorKind::invalid_argument, "critical access step needs views and choices");
    VertexSet out = previous;
    if (access_joins(game, trav, i, *star, *b, previous))
        out.insert(trav.theta(i));
    return out;
}

std::vector<VertexSet> access_sweep(const ParityGame& game, const NiceTraversal& trav, const Selector& g)
{
    int len = trav.length();
    auto omega = omega_sweep(game, trav, g);
    std::vector<VertexSet> out(len + 1);
    for (int i = 1; i <= len; ++i) {
        if (i > 1 && trav.critical(i)) {
            ViewSet star = omega_star(trav, omega[i + 1], i);
            ChoiceVectors b = choice_vectors_of(game, trav, g, i);
            out[i] = access_step(game, trav, i, out[i - 1], &star, &b);
        } else {
            out[i] = access_step(game, trav, i, i > 1 ? out[i - 1] : VertexSet{}, nullptr, nullptr);
        }
    }
    return out;
}

VertexSet access_bruteforce(const ParityGame& game, const Selector& g)
{
    return reachable_under(game, g, Player::p0, game.sigma());
}

std::string dump_views(const NiceTraversal& trav, int i, const ViewVector& z)
{
    std::ostringstream out;
    const auto& chain = trav.thetas(i);
    for (std::size_t k = 0; k < chain.size(); ++k) {
        out << "node " << chain[k] << " bag";
        for (Vertex s : trav.bag(chain[k]))
            out << ' ' << s;
        out << " : " << to_string(z[k]) << '\n';
    }
    return out.str();
}

} // namespace dynparity
