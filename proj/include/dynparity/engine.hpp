#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dynparity/dyck.hpp"
#include "dynparity/gadgets.hpp"
#include "dynparity/gamma.hpp"
#include "dynparity/treedec.hpp"

namespace dynparity {

enum class OwnerPolicy { gadget, rebuild };

struct EngineOptions {
    GammaVariant variant = GammaVariant::refined;
    Materialization mode = Materialization::lazy;
    OwnerPolicy owner_policy = OwnerPolicy::gadget;
    int kappa_hint = 2;
    int vertex_cap = 64;
    // Full mode falls back to lazy when gamma does not fit the Dyck state.
    // Dyck updates cost about size^4, so the default cap stays small.
    bool allow_fallback = true;
};

// Solver for one distinguished vertex: either the layered omega tables
// (lazy) or gamma with a dynamic Dyck state (full).
class SigmaCore {
public:
    SigmaCore(ParityGame game, NiceTraversal trav, GammaVariant variant, Materialization mode, int vertex_cap);

    // Applies an edge update; returns the number of labelled edges of gamma it changes.
    std::size_t apply_edge(const UpdateOp& op);

    bool winner() const;
    std::optional<Selector> selector() const;
    std::optional<VertexSet> accessible() const;

    const ParityGame& game() const { return game_; }
    const NiceTraversal& traversal() const { return *trav_; }
    Materialization mode() const { return mode_; }
    GammaVariant variant() const { return variant_; }
    const GammaGraph* graph() const { return graph_.get(); }
    const DyckState* dyck() const { return dyck_.get(); }
    const OmegaLayers* layers() const { return layers_.get(); }

private:
    struct Walk {
        std::vector<int> z;      // omega index per level, entry 0 unused
        std::vector<int> option; // option per critical index
    };
    std::optional<Walk> winning_walk() const;
    std::optional<Decoded> winning_decoded() const;

    ParityGame game_;
    std::unique_ptr<NiceTraversal> trav_; // gamma and the tables point into it
    GammaVariant variant_;
    Materialization mode_;
    std::unique_ptr<OmegaLayers> layers_;
    std::unique_ptr<GammaGraph> graph_;
    std::unique_ptr<DyckState> dyck_;
};

struct UniformResult {
    VertexSet w0;
    Selector strategy;
};

class Engine {
public:
    explicit Engine(ParityGame game, EngineOptions options = {});
    ~Engine();
    Engine(Engine&&) noexcept;
    Engine& operator=(Engine&&) noexcept;

    void apply(const UpdateOp& op);

    bool winner_at_sigma() const;
    std::optional<Selector> winning_selector() const;
    // Vertices reachable under the decoded selector; refined variant only.
    std::optional<VertexSet> accessible_set() const;
    // Winning region and one selector winning from all of it; refined only.
    UniformResult uniform_solve();

    const ParityGame& game() const { return levels_.front(); }
    const ParityGame& working_game() const { return levels_.back(); }
    const EngineOptions& options() const { return options_; }
    Materialization effective_mode() const { return core_->mode(); }
    const std::vector<Gadget>& gadgets() const { return gadgets_; }
    const SigmaCore& core() const { return *core_; }
    // Labelled gamma edges changed by the last update (summed over its edge ops).
    std::size_t last_delta() const { return last_delta_; }
    // Hub edges of the merged uniform graph changed by the last update.
    std::size_t last_hub_delta() const { return last_hub_delta_; }
    std::string dump() const;

private:
    struct Uniform;

    void rebuild();
    std::unique_ptr<SigmaCore> make_core(Vertex root) const;
    Selector lift(Selector working) const;
    Vertex entry(Vertex s) const;
    Vertex project(Vertex v) const;

    EngineOptions options_;
    std::vector<Gadget> gadgets_;
    std::vector<ParityGame> levels_;        // user game first, working game last
    std::vector<TreeDecomposition> decomps_; // one per level
    std::unique_ptr<SigmaCore> core_;
    std::unique_ptr<Uniform> uniform_;
    std::size_t last_delta_ = 0;
    std::size_t last_hub_delta_ = 0;
};

// Per-sigma refined graphs glued at the chain hubs (s, t, 0) -> (s, t, 1).
class MergedGamma {
public:
    MergedGamma(const ParityGame& game, const TreeDecomposition& td);

    GammaDelta delta(const ParityGame& game, const UpdateOp& op) const;
    void apply(const GammaDelta& d);
    const std::set<LabeledEdge>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(names_.size()); }
    const LabelAlphabet& labels() const { return labels_; }
    // Sorted "src label dst" lines.
    std::string dump() const;

private:
    int merged_vertex(Vertex sigma, const std::string& name);
    LabelId merged_label(Vertex sigma, const GammaGraph& g, LabelId l);

    std::vector<std::unique_ptr<NiceTraversal>> travs_;
    std::vector<std::unique_ptr<GammaGraph>> graphs_;
    std::vector<std::string> names_;
    std::map<std::string, int> ids_;
    LabelAlphabet labels_;
    std::set<LabeledEdge> edges_;
};

// Roots the decomposition at sigma.
NiceTraversal traversal_rooted_at(const TreeDecomposition& td, int n, Vertex sigma);

} // namespace dynparity
