#include "dynparity/treedec.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace dynparity {

namespace {

std::vector<std::vector<char>> undirected(int n, const std::set<Edge>& edges)
{
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : edges)
        if (u != v)
            adj[u][v] = adj[v][u] = 1;
    return adj;
}

bool is_subset(const Bag& a, const Bag& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

int min_vertex(const Bag& b) { return b.empty() ? INT_MAX : b.front(); }

// Builds bags from an elimination order: each vertex's bag is itself plus its
// not-yet-eliminated neighbours in the fill graph.
TreeDecomposition from_elimination(int n, std::vector<std::vector<char>> adj, const std::vector<Vertex>& order)
{
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k)
        pos[order[k]] = k;
    TreeDecomposition td;
    td.bags.resize(n);
    std::vector<int> node_of(n);
    for (int k = 0; k < n; ++k)
        node_of[order[k]] = k;
    for (int k = 0; k < n; ++k) {
        Vertex v = order[k];
        Bag bag{v};
        for (Vertex w = 0; w < n; ++w)
            if (adj[v][w] && pos[w] > k)
                bag.push_back(w);
        for (std::size_t a = 1; a < bag.size(); ++a)
            for (std::size_t b = a + 1; b < bag.size(); ++b)
                adj[bag[a]][bag[b]] = adj[bag[b]][bag[a]] = 1;
        int next = n;
        for (std::size_t a = 1; a < bag.size(); ++a)
            next = std::min(next, pos[bag[a]]);
        if (next == n && k + 1 < n)
            next = k + 1; // separate component: hang it anywhere
        if (next < n)
            td.tree_edges.emplace_back(k, next);
        std::sort(bag.begin(), bag.end());
        td.bags[k] = std::move(bag);
    }
    return td;
}

// Contracts every node whose bag is contained in a neighbour's bag.
void contract_subsets(TreeDecomposition& td)
{
    bool changed = true;
    while (changed && td.node_count() > 1) {
        changed = false;
        auto adj = td.adjacency();
        for (NodeId v = 0; v < td.node_count() && !changed; ++v) {
            for (NodeId w : adj[v]) {
                if (!is_subset(td.bags[v], td.bags[w]))
                    continue;
                // Reattach v's other neighbours to w and drop v.
                std::vector<std::pair<NodeId, NodeId>> edges;
                for (auto [a, b] : td.tree_edges) {
                    if ((a == v && b == w) || (a == w && b == v))
                        continue;
                    if (a == v)
                        a = w;
                    if (b == v)
                        b = w;
                    edges.emplace_back(a, b);
                }
                std::vector<Bag> bags;
                for (NodeId x = 0; x < td.node_count(); ++x)
                    if (x != v)
                        bags.push_back(td.bags[x]);
                for (auto& [a, b] : edges) {
                    a -= a > v ? 1 : 0;
                    b -= b > v ? 1 : 0;
                }
                td.bags = std::move(bags);
                td.tree_edges = std::move(edges);
                changed = true;
                break;
            }
        }
    }
}

std::vector<Vertex> min_fill_order(int n, std::vector<std::vector<char>> adj)
{
    std::vector<char> gone(n, 0);
    std::vector<Vertex> order;
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        long best_fill = LONG_MAX;
        int best_deg = INT_MAX;
        for (Vertex v = 0; v < n; ++v) {
            if (gone[v])
                continue;
            std::vector<Vertex> nb;
            for (Vertex w = 0; w < n; ++w)
                if (!gone[w] && adj[v][w])
                    nb.push_back(w);
            long fill = 0;
            for (std::size_t a = 0; a < nb.size(); ++a)
                for (std::size_t b = a + 1; b < nb.size(); ++b)
                    fill += adj[nb[a]][nb[b]] ? 0 : 1;
            int deg = static_cast<int>(nb.size());
            if (fill < best_fill || (fill == best_fill && deg < best_deg)) {
                best = v;
                best_fill = fill;
                best_deg = deg;
            }
        }
        std::vector<Vertex> nb;
        for (Vertex w = 0; w < n; ++w)
            if (!gone[w] && adj[best][w])
                nb.push_back(w);
        for (Vertex a : nb)
            for (Vertex b : nb)
                if (a != b)
                    adj[a][b] = 1;
        gone[best] = 1;
        order.push_back(best);
    }
    return order;
}

// Subset dynamic program: tw(S) = min over v in S of max(tw(S - v), |Q(S - v, v)|)
// where Q(S, v) are the vertices outside S + v reachable from v through S.
std::pair<int, std::vector<Vertex>> exact_order(int n, const std::vector<std::vector<char>>& adj)
{
    std::vector<std::uint32_t> nbr(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w = 0; w < n; ++w)
            if (adj[v][w])
                nbr[v] |= 1u << w;
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    auto q_size = [&](std::uint32_t s, Vertex v) {
        std::uint32_t seen = 1u << v, frontier = 1u << v, outside = 0;
        while (frontier) {
            Vertex x = __builtin_ctz(frontier);
            frontier &= frontier - 1;
            std::uint32_t nb = nbr[x] & ~seen;
            seen |= nb;
            outside |= nb & ~s;
            frontier |= nb & s;
        }
        return __builtin_popcount(outside);
    };
    std::vector<signed char> tw(std::size_t(1) << n, 0);
    std::vector<signed char> last(std::size_t(1) << n, -1);
    tw[0] = -1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        int best = INT_MAX;
        for (std::uint32_t rest = s; rest; rest &= rest - 1) {
            Vertex v = __builtin_ctz(rest);
            std::uint32_t prev = s & ~(1u << v);
            int val = std::max<int>(tw[prev], q_size(prev, v));
            if (val < best) {
                best = val;
                last[s] = static_cast<signed char>(v);
            }
        }
        tw[s] = static_cast<signed char>(best);
    }
    std::vector<Vertex> order(n);
    std::uint32_t s = full;
    for (int k = n - 1; k >= 0; --k) {
        order[k] = last[s];
        s &= ~(1u << last[s]);
    }
    return {tw[full], order};
}

} // namespace

int TreeDecomposition::width() const
{
    int w = -1;
    for (const auto& b : bags)
        w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

std::vector<std::vector<NodeId>> TreeDecomposition::adjacency() const
{
    std::vector<std::vector<NodeId>> adj(bags.size());
    for (auto [a, b] : tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

bool is_valid_decomposition(const TreeDecomposition& td, int n, const std::set<Edge>& edges, std::string* why)
{
    auto bad = [&](const std::string& msg) {
        if (why)
            *why = msg;
        return false;
    };
    int m = td.node_count();
    if (m == 0)
        return bad("no nodes");
    if (static_cast<int>(td.tree_edges.size()) != m - 1)
        return bad("edge count is not nodes - 1");
    auto adj = td.adjacency();
    std::vector<char> seen(m, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (NodeId w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != m)
        return bad("node graph is not connected");
    for (const auto& b : td.bags)
        for (Vertex v : b)
            if (v < 0 || v >= n)
                return bad("bag vertex out of range");
    for (auto [u, v] : edges) {
        bool covered = std::any_of(td.bags.begin(), td.bags.end(), [&](const Bag& b) {
            return std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v);
        });
        if (!covered)
            return bad("edge " + std::to_string(u) + "-" + std::to_string(v) + " not covered");
    }
    for (Vertex s = 0; s < n; ++s) {
        std::vector<char> has(m, 0);
        NodeId start = -1;
        int count = 0;
        for (NodeId v = 0; v < m; ++v)
            if (std::binary_search(td.bags[v].begin(), td.bags[v].end(), s)) {
                has[v] = 1;
                start = v;
                ++count;
            }
        if (count == 0)
            return bad("vertex " + std::to_string(s) + " in no bag");
        std::vector<char> mark(m, 0);
        std::vector<NodeId> st{start};
        mark[start] = 1;
        int got = 1;
        while (!st.empty()) {
            NodeId v = st.back();
            st.pop_back();
            for (NodeId w : adj[v])
                if (has[w] && !mark[w]) {
                    mark[w] = 1;
                    ++got;
                    st.push_back(w);
                }
        }
        if (got != count)
            return bad("occurrences of vertex " + std::to_string(s) + " are disconnected");
    }
    return true;
}

int exact_treewidth(int n, const std::set<Edge>& edges)
{
    require(n <= exact_limit, ErrorKind::invalid_argument, "exact tree-width limited to small graphs");
    return exact_order(n, undirected(n, edges)).first;
}

TreeDecomposition build_tree_decomposition(int n, const std::set<Edge>& edges, int kappa_hint,
                                           DecompositionMethod method)
{
    require(n >= 1, ErrorKind::invalid_argument, "empty graph");
    auto adj = undirected(n, edges);
    bool exact = method == DecompositionMethod::exact || (method == DecompositionMethod::automatic && n <= exact_limit);
    std::vector<Vertex> order;
    if (exact) {
        require(n <= exact_limit, ErrorKind::invalid_argument, "exact decomposition limited to small graphs");
        auto [tw, ord] = exact_order(n, adj);
        if (tw > kappa_hint)
            fail(ErrorKind::width_exceeded,
                 "tree-width " + std::to_string(tw) + " exceeds " + std::to_string(kappa_hint));
        order = std::move(ord);
    } else {
        order = min_fill_order(n, adj);
    }
    auto td = from_elimination(n, adj, order);
    contract_subsets(td);
    return td;
}

int NiceDecomposition::width() const
{
    int w = -1;
    for (const auto& b : bags)
        w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

TreeDecomposition NiceDecomposition::as_decomposition() const
{
    TreeDecomposition td;
    td.bags = bags;
    for (NodeId v = 0; v < node_count(); ++v)
        if (parent[v] >= 0)
            td.tree_edges.emplace_back(parent[v], v);
    return td;
}

NiceDecomposition NiceDecomposition::from_parents(std::vector<Bag> bags, std::vector<NodeId> parent)
{
    require(bags.size() == parent.size() && !bags.empty(), ErrorKind::invalid_argument, "malformed rooted tree");
    NiceDecomposition ntd;
    for (auto& b : bags) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    ntd.bags = std::move(bags);
    ntd.parent = std::move(parent);
    ntd.children.assign(ntd.bags.size(), {});
    int roots = 0;
    for (NodeId v = 0; v < ntd.node_count(); ++v) {
        if (ntd.parent[v] < 0) {
            ntd.root = v;
            ++roots;
        } else {
            require(ntd.parent[v] < ntd.node_count(), ErrorKind::invalid_argument, "parent out of range");
            ntd.children[ntd.parent[v]].push_back(v);
        }
    }
    require(roots == 1, ErrorKind::invalid_argument, "rooted tree needs exactly one root");
    for (auto& ch : ntd.children)
        std::sort(ch.begin(), ch.end(), [&](NodeId a, NodeId b) {
            return std::pair(min_vertex(ntd.bags[a]), a) < std::pair(min_vertex(ntd.bags[b]), b);
        });
    // Reject parent cycles.
    std::vector<char> seen(ntd.bags.size(), 0);
    std::vector<NodeId> stack{ntd.root};
    int reached = 0;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        if (seen[v]++)
            continue;
        ++reached;
        for (NodeId c : ntd.children[v])
            stack.push_back(c);
    }
    require(reached == ntd.node_count(), ErrorKind::invalid_argument, "parent links do not form a tree");
    return ntd;
}

bool NiceDecomposition::is_nice(int n, Vertex sigma, std::string* why) const
{
    auto bad = [&](const std::string& msg) {
        if (why)
            *why = msg;
        return false;
    };
    if (bags[root] != Bag{sigma})
        return bad("root bag is not {sigma}");
    for (NodeId v = 0; v < node_count(); ++v) {
        if (parent[v] < 0)
            continue;
        const Bag& a = bags[v];
        const Bag& b = bags[parent[v]];
        Bag sym;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(sym));
        if (sym.size() != 1)
            return bad("tree edge changes the bag by " + std::to_string(sym.size()) + " elements");
    }
    for (Vertex s = 0; s < n; ++s) {
        bool ok = s == sigma;
        for (NodeId v = 0; v < node_count() && !ok; ++v)
            ok = children[v].empty() && bags[v] == Bag{s};
        if (!ok)
            return bad("vertex " + std::to_string(s) + " has no singleton leaf");
    }
    return true;
}

namespace {

// Roots the tree at root and renumbers in preorder, children ordered by (min vertex, id).
NiceDecomposition rooted_preorder(const std::vector<Bag>& bags, const std::vector<std::set<NodeId>>& adj, NodeId root)
{
    // Renumber in preorder with the canonical child order.
    std::vector<NodeId> new_id(bags.size(), -1);
    std::vector<Bag> out_bags;
    std::vector<NodeId> out_parent;
    std::vector<std::pair<NodeId, NodeId>> stack{{root, -1}};
    while (!stack.empty()) {
        auto [v, from] = stack.back();
        stack.pop_back();
        new_id[v] = static_cast<NodeId>(out_bags.size());
        out_bags.push_back(bags[v]);
        out_parent.push_back(from < 0 ? -1 : new_id[from]);
        std::vector<NodeId> kids;
        for (NodeId w : adj[v])
            if (w != from)
                kids.push_back(w);
        std::sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) {
            return std::pair(min_vertex(bags[a]), a) < std::pair(min_vertex(bags[b]), b);
        });
        for (auto it = kids.rbegin(); it != kids.rend(); ++it)
            stack.emplace_back(*it, v);
    }
    return NiceDecomposition::from_parents(std::move(out_bags), std::move(out_parent));
}

} // namespace

NiceDecomposition make_nice(const TreeDecomposition& input, int n, Vertex sigma)
{
    // Already nice when rooted at some {sigma} bag: only renumber.
    if (input.node_count() > 0 && static_cast<int>(input.tree_edges.size()) == input.node_count() - 1) {
        std::vector<std::set<NodeId>> adj(input.bags.size());
        for (auto [a, b] : input.tree_edges) {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        for (NodeId r = 0; r < input.node_count(); ++r) {
            if (input.bags[r] != Bag{sigma})
                continue;
            auto candidate = rooted_preorder(input.bags, adj, r);
            if (candidate.node_count() == input.node_count() && candidate.is_nice(n, sigma))
                return candidate;
        }
    }

    TreeDecomposition td = input;
    contract_subsets(td);

    // Working forest as adjacency sets with per-node "singleton of s" marks.
    std::vector<Bag> bags = td.bags;
    std::vector<std::set<NodeId>> adj(bags.size());
    for (auto [a, b] : td.tree_edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::vector<Vertex> mark(bags.size(), -1);
    std::vector<char> alive(bags.size(), 1);

    auto add_node = [&](Bag bag) {
        bags.push_back(std::move(bag));
        adj.emplace_back();
        mark.push_back(-1);
        alive.push_back(1);
        return static_cast<NodeId>(bags.size() - 1);
    };
    auto link = [&](NodeId a, NodeId b) {
        adj[a].insert(b);
        adj[b].insert(a);
    };
    auto unlink = [&](NodeId a, NodeId b) {
        adj[a].erase(b);
        adj[b].erase(a);
    };

    // One singleton leaf per vertex, attached to a node holding it.
    NodeId original = static_cast<NodeId>(bags.size());
    for (Vertex s = 0; s < n; ++s) {
        NodeId host = -1;
        for (NodeId v = 0; v < original; ++v) {
            if (!std::binary_search(bags[v].begin(), bags[v].end(), s))
                continue;
            if (host < 0 || bags[v].size() < bags[host].size())
                host = v;
        }
        require(host >= 0, ErrorKind::invalid_argument, "vertex missing from decomposition");
        // An inner {s} bag holds the only copy of s (neighbours would have absorbed it); empty it
        // so the singleton leaf stays a leaf.
        if (s != sigma && bags[host] == Bag{s} && !adj[host].empty())
            bags[host].clear();
        NodeId leaf = add_node({s});
        mark[leaf] = s;
        link(leaf, host);
    }

    auto merge_equal = [&]() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (NodeId v = 0; v < static_cast<NodeId>(bags.size()) && !changed; ++v) {
                if (!alive[v])
                    continue;
                for (NodeId w : adj[v]) {
                    if (bags[w] != bags[v])
                        continue;
                    NodeId keep = mark[w] >= 0 ? w : v;
                    NodeId gone = keep == w ? v : w;
                    for (NodeId x : std::set<NodeId>(adj[gone])) {
                        unlink(gone, x);
                        if (x != keep)
                            link(keep, x);
                    }
                    alive[gone] = 0;
                    changed = true;
                    break;
                }
            }
        }
    };
    merge_equal();

    // Chains between adjacent bags: drop the private vertices of one side one
    // at a time, then add those of the other side.
    std::vector<std::pair<NodeId, NodeId>> pending;
    for (NodeId v = 0; v < static_cast<NodeId>(bags.size()); ++v)
        if (alive[v])
            for (NodeId w : adj[v])
                if (v < w)
                    pending.emplace_back(v, w);
    for (auto [v, w] : pending) {
        Bag shared;
        std::set_intersection(bags[v].begin(), bags[v].end(), bags[w].begin(), bags[w].end(),
                              std::back_inserter(shared));
        Bag current = bags[v];
        std::vector<Bag> steps;
        for (auto it = bags[v].rbegin(); it != bags[v].rend(); ++it) {
            if (std::binary_search(shared.begin(), shared.end(), *it))
                continue;
            current.erase(std::find(current.begin(), current.end(), *it));
            steps.push_back(current);
        }
        for (Vertex x : bags[w]) {
            if (std::binary_search(shared.begin(), shared.end(), x))
                continue;
            current.insert(std::upper_bound(current.begin(), current.end(), x), x);
            steps.push_back(current);
        }
        steps.pop_back(); // the last step is bags[w] itself
        if (steps.empty())
            continue;
        unlink(v, w);
        NodeId prev = v;
        for (auto& bag : steps) {
            NodeId node = add_node(std::move(bag));
            link(prev, node);
            prev = node;
        }
        link(prev, w);
    }

    // Prune leaves that are not singleton leaves.
    bool pruned = true;
    while (pruned) {
        pruned = false;
        for (NodeId v = 0; v < static_cast<NodeId>(bags.size()); ++v) {
            if (alive[v] && mark[v] < 0 && adj[v].size() <= 1) {
                for (NodeId x : std::set<NodeId>(adj[v]))
                    unlink(v, x);
                alive[v] = 0;
                pruned = true;
            }
        }
    }
    merge_equal();

    NodeId root = -1;
    for (NodeId v = 0; v < static_cast<NodeId>(bags.size()); ++v)
        if (alive[v] && mark[v] == sigma)
            root = v;
    require(root >= 0, ErrorKind::internal, "lost the root singleton");

    return rooted_preorder(bags, adj, root);
}

NiceTraversal::NiceTraversal(NiceDecomposition ntd, int n, Vertex sigma)
    : ntd_(std::move(ntd)), n_(n), sigma_(sigma)
{
    require(n >= 2, ErrorKind::invalid_argument, "traversal needs at least two vertices");
    require(ntd_.node_count() >= 2, ErrorKind::invalid_argument, "traversal needs at least two nodes");
    std::string why;
    require(ntd_.is_nice(n, sigma, &why), ErrorKind::invalid_argument, "decomposition is not nice: " + why);

    // Closed walk.
    std::vector<std::pair<NodeId, std::size_t>> stack{{ntd_.root, 0}};
    order_.push_back(ntd_.root);
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < ntd_.children[v].size()) {
            NodeId c = ntd_.children[v][next++];
            order_.push_back(c);
            stack.emplace_back(c, 0);
        } else {
            stack.pop_back();
            if (!stack.empty())
                order_.push_back(stack.back().first);
        }
    }

    int len = length();
    first_visit_.assign(ntd_.node_count(), -1);
    for (int i = 1; i <= len; ++i)
        if (first_visit_[node(i)] < 0)
            first_visit_[node(i)] = i;

    root_of_.assign(n, -1);
    for (int i = 1; i <= len; ++i)
        for (Vertex s : bag(node(i)))
            if (root_of_[s] < 0)
                root_of_[s] = node(i);

    theta_.assign(len, -1);
    intro_.assign(n, -1);
    theta_[0] = sigma;
    intro_[sigma] = 1;
    for (int i = 2; i <= len; ++i) {
        NodeId v = node(i), prev = node(i - 1);
        if (ntd_.parent[v] != prev)
            continue;
        for (Vertex s : bag(v))
            if (root_of_[s] == v) {
                theta_[i - 1] = s;
                intro_[s] = i;
            }
    }

    chain_.resize(len);
    for (int i = 1; i <= len; ++i) {
        std::vector<NodeId> up;
        for (NodeId v = node(i); v >= 0; v = ntd_.parent[v])
            up.push_back(v);
        chain_[i - 1].assign(up.rbegin(), up.rend());
    }

    region_owner_.assign(len, std::vector<NodeId>(n, -1));
    for (int i = 1; i <= len; ++i)
        for (Vertex s = 0; s < n; ++s)
            if (first_visit_[root_of_[s]] >= i)
                region_owner_[i - 1][s] = lowest_ancestor(i, root_of_[s]);
}

std::vector<int> NiceTraversal::critical_indices() const
{
    std::vector<int> out;
    for (int i = 1; i <= length(); ++i)
        if (critical(i))
            out.push_back(i);
    return out;
}

bool NiceTraversal::moves_up(int i) const
{
    require(i >= 1 && i < length(), ErrorKind::invalid_argument, "index out of range");
    return ntd_.parent[node(i)] == node(i + 1);
}

int NiceTraversal::chain_position(int i, NodeId v) const
{
    const auto& c = thetas(i);
    auto it = std::find(c.begin(), c.end(), v);
    return it == c.end() ? -1 : static_cast<int>(it - c.begin());
}

VertexSet NiceTraversal::psi(int i) const
{
    VertexSet out;
    for (NodeId v : thetas(i))
        out.insert(bag(v).begin(), bag(v).end());
    return out;
}

VertexSet NiceTraversal::psi_upto(int i) const
{
    VertexSet out;
    for (int j = 1; j <= i; ++j)
        out.insert(bag(node(j)).begin(), bag(node(j)).end());
    return out;
}

VertexSet NiceTraversal::psi_after(int i) const
{
    VertexSet upto = psi_upto(i), out;
    for (Vertex s = 0; s < n_; ++s)
        if (!upto.count(s))
            out.insert(s);
    return out;
}

std::vector<NodeId> NiceTraversal::theta_upto(int i) const
{
    std::vector<NodeId> out;
    for (NodeId v = 0; v < ntd_.node_count(); ++v)
        if (first_visit_[v] <= i)
            out.push_back(v);
    return out;
}

std::vector<NodeId> NiceTraversal::theta_after(int i) const
{
    std::vector<NodeId> out;
    for (NodeId v = 0; v < ntd_.node_count(); ++v)
        if (first_visit_[v] > i)
            out.push_back(v);
    return out;
}

NodeId NiceTraversal::lowest_ancestor(int i, NodeId w) const
{
    while (w >= 0 && first_visit_[w] > i)
        w = ntd_.parent[w];
    return w;
}

VertexSet NiceTraversal::region(int i, NodeId v) const
{
    VertexSet out;
    for (Vertex s = 0; s < n_; ++s)
        if (region_owner(i, s) == v)
            out.insert(s);
    return out;
}

std::vector<NodeId> NiceTraversal::region_nodes(int i, NodeId v) const
{
    std::vector<NodeId> out;
    for (NodeId w : theta_after(i - 1))
        if (lowest_ancestor(i, w) == v)
            out.push_back(w);
    return out;
}

NiceTraversal make_traversal(const ParityGame& game, int kappa_hint, DecompositionMethod method)
{
    auto td = build_tree_decomposition(game.size(), game.max_edges(), kappa_hint, method);
    return NiceTraversal(make_nice(td, game.size(), game.sigma()), game.size(), game.sigma());
}

NiceDecomposition read_decomposition(std::istream& in)
{
    std::map<long, std::pair<std::string, Bag>> raw;
    std::vector<long> ids;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        long id;
        std::string parent;
        if (!(ls >> id))
            continue;
        if (!(ls >> parent))
            fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": missing parent");
        Bag bag;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size() || v < 0)
                    throw std::invalid_argument(tok);
                bag.push_back(v);
            } catch (const std::exception&) {
                fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": bad vertex '" + tok + "'");
            }
        }
        if (!raw.emplace(id, std::pair(parent, bag)).second)
            fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": duplicate node id");
        ids.push_back(id);
    }
    std::map<long, NodeId> index;
    for (long id : ids)
        index.emplace(id, static_cast<NodeId>(index.size()));
    std::vector<Bag> bags;
    std::vector<NodeId> parent;
    for (long id : ids) {
        auto& [p, bag] = raw.at(id);
        bags.push_back(bag);
        if (p == "root") {
            parent.push_back(-1);
        } else {
            long pid;
            try {
                pid = std::stol(p);
            } catch (const std::exception&) {
                fail(ErrorKind::parse, "bad parent '" + p + "'");
            }
            auto it = index.find(pid);
            if (it == index.end())
                fail(ErrorKind::parse, "unknown parent " + p);
            parent.push_back(it->second);
        }
    }
    try {
        return NiceDecomposition::from_parents(std::move(bags), std::move(parent));
    } catch (const Error& e) {
        fail(ErrorKind::parse, e.what());
    }
}

void write_decomposition(std::ostream& out, const NiceDecomposition& ntd)
{
    for (NodeId v = 0; v < ntd.node_count(); ++v) {
        out << v << ' ';
        if (ntd.parent[v] < 0)
            out << "root";
        else
            out << ntd.parent[v];
        for (Vertex s : ntd.bags[v])
            out << ' ' << s;
        out << '\n';
    }
}

} // namespace dynparity
