#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace dynparity {

using LabelId = int;

// Labels come in bar pairs (open/close) or are neutral (self-barred).
class LabelAlphabet {
public:
    // Returns the id of name; the bar of an open label gets the next id.
    LabelId add_pair(const std::string& name);
    LabelId add_neutral(const std::string& name);

    int size() const { return static_cast<int>(bar_.size()); }
    LabelId bar(LabelId l) const { return bar_.at(l); }
    bool is_neutral(LabelId l) const { return bar_.at(l) == l; }
    bool is_open(LabelId l) const { return open_.at(l) != 0; }
    const std::string& name(LabelId l) const { return names_.at(l); }
    std::optional<LabelId> find(const std::string& name) const;

private:
    std::vector<LabelId> bar_;
    std::vector<char> open_;
    std::vector<std::string> names_;
    std::map<std::string, LabelId> by_name_;
};

struct LabeledEdge {
    int src = 0;
    LabelId label = 0;
    int dst = 0;
    auto operator<=>(const LabeledEdge&) const = default;
};

struct DyckPath {
    int source = 0;
    std::vector<LabeledEdge> edges;

    int sink() const { return edges.empty() ? source : edges.back().dst; }
    std::vector<LabelId> word() const;
    // Appends other, whose source must be this path's sink.
    void append(const DyckPath& other);
};

// Free reduction: drops neutral labels and cancels adjacent bar pairs.
std::vector<LabelId> reduce_word(const LabelAlphabet& labels, const std::vector<LabelId>& word);
bool is_dyck(const LabelAlphabet& labels, const std::vector<LabelId>& word);

// True when every edge of path is in edges and consecutive edges chain.
bool path_in(const DyckPath& path, const std::set<LabeledEdge>& edges);

// Dynamic Dyck reachability with witnesses on an acyclic labelled graph.
//
// Internally works on the augmented graph: base vertices 0..n-1, one vertex
// per label (id n + label), and a sink vertex (id n + |L|), with an edge
// (label, label, sink) for every label.
class DyckState {
public:
    static constexpr int default_vertex_cap = 128;

    DyckState(int vertex_count, LabelAlphabet labels, int vertex_cap = default_vertex_cap);

    int vertex_count() const { return n_; }
    int augmented_size() const { return size_; }
    int label_vertex(LabelId l) const { return n_ + l; }
    int bullet() const { return n_ + labels_.size(); }
    const LabelAlphabet& labels() const { return labels_; }

    // Edges between base vertices. Redundant inserts are no-ops.
    void insert_edge(const LabeledEdge& e);
    void delete_edge(const LabeledEdge& e);
    bool has_edge(const LabeledEdge& e) const { return edges_.count(e) != 0; }
    const std::set<LabeledEdge>& edges() const { return edges_; }
    // Base edges plus the augmentation edges.
    std::set<LabeledEdge> augmented_edges() const;

    // Queries over augmented ids.
    bool reaches(int u, int v) const { return bit(reach_, u * words_ + (v >> 6), v); }
    bool pi2(int u1, int v1, int u2, int v2) const;
    // Witness paths for a true pi2 tuple.
    std::pair<DyckPath, DyckPath> rho2(int u1, int v1, int u2, int v2) const;
    bool pi_k(const std::vector<int>& tuple) const;
    std::optional<std::vector<DyckPath>> rho_k(const std::vector<int>& tuple) const;

    std::optional<DyckPath> query(int s, int t) const;

    // Position in the maintained linear order, or -1 outside its domain.
    int order_rank(int element) const { return rank_.at(element); }
    std::vector<int> order() const;

    // Stable digests of the reachability and pi2 tables.
    std::uint64_t reach_digest() const;
    std::uint64_t pi2_digest() const;

private:
    friend class PiEvaluator;

    static bool bit(const std::vector<std::uint64_t>& v, std::size_t word, int b)
    {
        return (v[word] >> (b & 63)) & 1U;
    }
    std::size_t tuple_index(int u1, int v1, int u2, int v2) const
    {
        return ((static_cast<std::size_t>(u1) * size_ + v1) * size_ + u2) * size_ + v2;
    }
    bool pi2_bit(std::size_t idx) const { return (pi2_[idx >> 6] >> (idx & 63)) & 1U; }
    void set_pi2(std::size_t idx, bool on);
    void set_reach(int u, int v);
    void check_edge(const LabeledEdge& e) const;
    void extend_order(int element);

    int n_;
    LabelAlphabet labels_;
    int size_;
    int words_;
    std::set<LabeledEdge> edges_;
    std::vector<std::uint64_t> reach_;      // row-major, words_ per row
    std::vector<std::uint64_t> reach_rev_;  // transposed
    std::vector<std::uint64_t> pi2_;
    std::unordered_map<std::size_t, std::pair<DyckPath, DyckPath>> rho2_;
    std::vector<int> rank_;
    int next_rank_ = 0;
};

// Searches all paths from s to t for a Dyck-labelled one (test oracle).
std::optional<DyckPath> dyck_bruteforce(const LabelAlphabet& labels, int vertex_count,
                                        const std::set<LabeledEdge>& edges, int s, int t,
                                        std::size_t path_cap = 1'000'000);

// Replays "ins s l t" / "del s l t" / "query s t" lines; prints YES <path> or NO per query.
// Label tokens: "a" opens, "a'" closes, "." or ".x" is neutral.
void replay_dyck_script(std::istream& in, std::ostream& out, int vertex_cap = DyckState::default_vertex_cap);

} // namespace dynparity
