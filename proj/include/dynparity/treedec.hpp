#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dynparity/game.hpp"

namespace dynparity {

using NodeId = int;
using Bag = std::vector<Vertex>; // sorted ascending

struct TreeDecomposition {
    std::vector<Bag> bags;
    std::vector<std::pair<NodeId, NodeId>> tree_edges;

    int node_count() const { return static_cast<int>(bags.size()); }
    int width() const;
    std::vector<std::vector<NodeId>> adjacency() const;
};

// Checks edge coverage, connectivity of every occurrence set and that the
// node graph is a tree. `why` receives the first violation found.
bool is_valid_decomposition(const TreeDecomposition& td, int n, const std::set<Edge>& edges,
                            std::string* why = nullptr);

enum class DecompositionMethod { automatic, exact, heuristic };

// Exact mode runs the subset dynamic program (n <= exact_limit); automatic
// mode falls back to min-fill elimination on larger graphs.
constexpr int exact_limit = 16;

TreeDecomposition build_tree_decomposition(int n, const std::set<Edge>& edges, int kappa_hint,
                                           DecompositionMethod method = DecompositionMethod::automatic);

int exact_treewidth(int n, const std::set<Edge>& edges);

struct NiceDecomposition {
    std::vector<Bag> bags;
    std::vector<NodeId> parent; // -1 at the root
    std::vector<std::vector<NodeId>> children;
    NodeId root = 0;

    int node_count() const { return static_cast<int>(bags.size()); }
    int width() const;
    TreeDecomposition as_decomposition() const;

    // Builds the rooted form from explicit parents; children get the canonical order.
    static NiceDecomposition from_parents(std::vector<Bag> bags, std::vector<NodeId> parent);
    bool is_nice(int n, Vertex sigma, std::string* why = nullptr) const;
};

NiceDecomposition make_nice(const TreeDecomposition& td, int n, Vertex sigma);

// Per-index data of the closed depth-first walk over a nice decomposition.
// Indices are 1-based, ranging over [1, length()].
class NiceTraversal {
public:
    NiceTraversal(NiceDecomposition ntd, int n, Vertex sigma);

    int length() const { return static_cast<int>(order_.size()); }
    int vertex_count() const { return n_; }
    Vertex sigma() const { return sigma_; }
    const NiceDecomposition& decomposition() const { return ntd_; }
    const Bag& bag(NodeId v) const { return ntd_.bags.at(v); }

    NodeId node(int i) const { return order_.at(i - 1); }
    bool critical(int i) const { return theta_.at(i - 1) >= 0; }
    Vertex theta(int i) const { return theta_.at(i - 1); }
    std::vector<int> critical_indices() const;
    // Critical index introducing s.
    int critical_index_of(Vertex s) const { return intro_.at(s); }
    NodeId root_of(Vertex s) const { return root_of_.at(s); }

    // v_{i+1} is the parent of v_i (otherwise it is a child). Requires i < length().
    bool moves_up(int i) const;

    // Ancestors of v_i from the root down to v_i.
    const std::vector<NodeId>& thetas(int i) const { return chain_.at(i - 1); }
    // Position of node v in thetas(i), -1 if absent.
    int chain_position(int i, NodeId v) const;

    VertexSet psi(int i) const;       // union of bags over thetas(i)
    VertexSet psi_upto(int i) const;  // bags of v_1..v_i
    VertexSet psi_after(int i) const; // complement of psi_upto(i)
    std::vector<NodeId> theta_upto(int i) const;
    std::vector<NodeId> theta_after(int i) const;

    // Lowest ancestor of w lying in {v_1..v_i}.
    NodeId lowest_ancestor(int i, NodeId w) const;
    // The node v of thetas(i) with s in the region of v at step i, -1 if s
    // is already covered by v_1..v_{i-1}.
    NodeId region_owner(int i, Vertex s) const { return region_owner_.at(i - 1).at(s); }
    VertexSet region(int i, NodeId v) const;
    std::vector<NodeId> region_nodes(int i, NodeId v) const;

private:
    NiceDecomposition ntd_;
    int n_;
    Vertex sigma_;
    std::vector<NodeId> order_;
    std::vector<Vertex> theta_;
    std::vector<int> first_visit_;
    std::vector<NodeId> root_of_;
    std::vector<int> intro_;
    std::vector<std::vector<NodeId>> chain_;
    std::vector<std::vector<NodeId>> region_owner_;
};

NiceTraversal make_traversal(const ParityGame& game, int kappa_hint,
                             DecompositionMethod method = DecompositionMethod::automatic);

// "id parent|root v1 v2 ..." per line; '#' starts a comment.
NiceDecomposition read_decomposition(std::istream& in);
void write_decomposition(std::ostream& out, const NiceDecomposition& ntd);

} // namespace dynparity
