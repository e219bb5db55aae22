#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dynparity/dyck.hpp"
#include "dynparity/game.hpp"
#include "dynparity/treedec.hpp"
#include "dynparity/views.hpp"

namespace dynparity {

enum class GammaVariant { simple, refined };
enum class Materialization { full, lazy };

std::string to_string(GammaVariant v);
std::string to_string(Materialization m);

inline constexpr std::size_t max_layer_options = std::size_t{1} << 16;

// Choice vectors a critical layer may use: every product of per-pair options
// (current edges, or every edge set below the max edges) that respects the
// self-loop tie. Throws materialization_overflow past max_layer_options.
std::vector<ChoiceVectors> layer_options(const ParityGame& game, const NiceTraversal& trav, int i,
                                         bool use_max_edges);

// Edges (s, t) that P0 commits to when layer i uses b.
std::vector<Edge> committed_pairs(const ParityGame& game, const NiceTraversal& trav, int i, const ChoiceVectors& b);

// The critical index handling the pair (x, y): the later introduced endpoint.
int layer_of_pair(const NiceTraversal& trav, Vertex x, Vertex y);

// Pairs of a critical layer in chain order: (theta, s) then (s, theta) for
// each bag vertex s, skipping the second copy of a self-loop.
std::vector<Edge> layer_pairs(const NiceTraversal& trav, int i);

// Distinct omega values per level (level j holds candidates for omega_j) and
// the hops between consecutive levels. Vectors with an empty component
// cannot come from a selector and are dropped.
struct OmegaHop {
    int from = 0;   // index at level i + 1
    int option = -1; // index into options(i), -1 at non-critical layers
    int to = 0;     // index at level i
};

class OmegaLayers {
public:
    static constexpr std::size_t default_cap = 200000;

    OmegaLayers(const ParityGame& game, const NiceTraversal& trav, bool use_max_edges,
                std::size_t cap = default_cap);

    // Recomputes levels i..1 after the options of layer i changed.
    void recompute_from(const ParityGame& game, int i);

    int length() const { return length_; }
    bool uses_max_edges() const { return use_max_; }
    const std::vector<ViewVector>& level(int j) const { return levels_.at(j); }
    const std::vector<OmegaHop>& hops(int i) const { return hops_.at(i); }
    const std::vector<ChoiceVectors>& options(int i) const { return options_.at(i); }
    // -1 when absent.
    int find(int j, const ViewVector& z) const;
    std::size_t total_size() const;

private:
    const NiceTraversal* trav_;
    bool use_max_;
    std::size_t cap_;
    int length_;
    std::vector<std::vector<ViewVector>> levels_;
    std::vector<std::map<ViewVector, int>> index_;
    std::vector<std::vector<OmegaHop>> hops_;
    std::vector<std::vector<ChoiceVectors>> options_;
};

// The omega vector of a won game: {sigma -> top}.
ViewVector winning_omega();

struct GammaDelta {
    std::set<LabeledEdge> removed;
    std::set<LabeledEdge> added;
    std::size_t size() const { return removed.size() + added.size(); }
};

struct Decoded {
    ViewVector z;
    std::set<Edge> edges; // E(pi)
    VertexSet accessible; // V(pi), refined only
    Selector selector;
};

class GammaGraph {
public:
    static constexpr std::size_t default_vertex_cap = 500000;

    GammaGraph(const ParityGame& game, const NiceTraversal& trav, GammaVariant variant, Materialization mode,
               std::size_t vertex_cap = default_vertex_cap);

    GammaVariant variant() const { return variant_; }
    Materialization mode() const { return mode_; }
    const LabelAlphabet& labels() const { return labels_; }
    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::string& vertex_name(int v) const { return names_.at(v); }
    std::optional<int> find_vertex(const std::string& name) const;
    std::string label_name(LabelId l) const;

    const std::set<LabeledEdge>& static_edges() const { return static_edges_; }
    const std::set<LabeledEdge>& choice_edges() const { return choice_edges_; }
    std::set<LabeledEdge> edges() const;

    // Nominal sources (level l); the refined graph also has a super source.
    const std::vector<int>& sources() const { return sources_; }
    std::optional<int> super_source() const { return super_source_; }
    // The vertex queries start from.
    int query_source() const { return super_source_ ? *super_source_ : sources_.front(); }
    const std::map<int, ViewVector>& sinks() const { return sinks_; }
    std::optional<int> winning_sink() const;

    // Choice edges that change when op is applied to game (the game before op).
    GammaDelta delta(const ParityGame& game, const UpdateOp& op) const;
    void apply(const GammaDelta& d);

    // Reads Z, E and V off a path from a source (or the super source) to a sink.
    Decoded decode(const DyckPath& path) const;

    // One "src label dst" line per edge, sorted.
    std::string dump() const;

private:
    int vertex(const std::string& name);
    LabelId pair_label(const std::string& name);
    void add_static(const std::string& src, LabelId l, const std::string& dst);
    void build_simple(const ParityGame& game, const OmegaLayers& layers);
    void build_refined(const ParityGame& game, const OmegaLayers& layers);
    std::set<LabeledEdge> choice_edges_for(const ParityGame& game, int i, const Edge* only) const;
    std::string option_code(const ChoiceVectors& b) const;
    std::vector<Edge> committed_edges(int i, const ChoiceVectors& b) const;

    const NiceTraversal* trav_;
    GammaVariant variant_;
    Materialization mode_;
    std::size_t vertex_cap_;
    std::vector<Player> owners_;
    LabelAlphabet labels_;
    LabelId bullet_ = 0;
    std::vector<std::string> names_;
    std::map<std::string, int> ids_;
    std::set<LabeledEdge> static_edges_;
    std::set<LabeledEdge> choice_edges_;
    std::vector<int> sources_;
    std::optional<int> super_source_;
    std::map<int, ViewVector> sinks_;
    // Per critical layer: options in the materialized graph.
    std::map<int, std::vector<ChoiceVectors>> options_;
    // Vertex marking a layer decision: (layer, option index).
    std::map<int, std::pair<int, int>> decisions_;
    std::map<int, VertexSet> access_;
};

// Every Dyck path from a source to a sink (test oracle; a close label must
// match the innermost open one).
std::vector<DyckPath> enumerate_generic_paths(const GammaGraph& graph, std::size_t cap = 1u << 20);

} // namespace dynparity
