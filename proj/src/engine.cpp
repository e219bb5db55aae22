#include "dynparity/engine.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace dynparity {

namespace {

template <class T>
std::size_t symmetric_difference_size(std::vector<T> a, std::vector<T> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<T> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out.size();
}

// Labelled-edge changes of gamma for op, read off the choice sets alone.
std::size_t choice_delta(const ParityGame& before, const ParityGame& after, const NiceTraversal& trav,
                         GammaVariant variant, const UpdateOp& op)
{
    if (variant == GammaVariant::refined)
        return symmetric_difference_size(choice(before, op.a, op.b), choice(after, op.a, op.b));
    const int i = layer_of_pair(trav, op.a, op.b);
    std::vector<std::string> a, b;
    for (const auto& o : layer_options(before, trav, i, false))
        a.push_back(to_string(o));
    for (const auto& o : layer_options(after, trav, i, false))
        b.push_back(to_string(o));
    return symmetric_difference_size(a, b);
}

} // namespace

NiceTraversal traversal_rooted_at(const TreeDecomposition& td, int n, Vertex sigma)
{
    return NiceTraversal(make_nice(td, n, sigma), n, sigma);
}

// ---------------------------------------------------------------- SigmaCore

SigmaCore::SigmaCore(ParityGame game, NiceTraversal trav, GammaVariant variant, Materialization mode, int vertex_cap)
    : game_(std::move(game)),
      trav_(std::make_unique<NiceTraversal>(std::move(trav))),
      variant_(variant),
      mode_(mode)
{
    require(game_.sigma() == trav_->sigma(), ErrorKind::invalid_argument, "traversal rooted at another vertex");
    if (mode_ == Materialization::lazy) {
        layers_ = std::make_unique<OmegaLayers>(game_, *trav_, false);
        return;
    }
    // a Dyck state never holds more than vertex_cap vertices
    graph_ = std::make_unique<GammaGraph>(game_, *trav_, variant_, mode_, vertex_cap);
    // E-independent edges first, then the current choice edges
    dyck_ = std::make_unique<DyckState>(graph_->vertex_count(), graph_->labels(), vertex_cap);
    for (const auto& e : graph_->static_edges())
        dyck_->insert_edge(e);
    for (const auto& e : graph_->choice_edges())
        dyck_->insert_edge(e);
}

std::size_t SigmaCore::apply_edge(const UpdateOp& op)
{
    require(op.is_edge_op(), ErrorKind::invalid_argument, "sigma cores take edge updates only");
    validate_update(game_, op);
    if (mode_ == Materialization::full) {
        GammaDelta d = graph_->delta(game_, op);
        for (const auto& e : d.removed)
            dyck_->delete_edge(e);
        for (const auto& e : d.added)
            dyck_->insert_edge(e);
        graph_->apply(d);
        apply_update_in_place(game_, op);
        return d.size();
    }
    ParityGame before = game_;
    apply_update_in_place(game_, op);
    layers_->recompute_from(game_, layer_of_pair(*trav_, op.a, op.b));
    return choice_delta(before, game_, *trav_, variant_, op);
}

std::optional<SigmaCore::Walk> SigmaCore::winning_walk() const
{
    const int len = trav_->length();
    if (len < 2)
        return std::nullopt;
    int target = layers_->find(1, winning_omega());
    if (target < 0)
        return std::nullopt;
    Walk w;
    w.z.assign(len + 1, 0);
    w.option.assign(len + 1, -1);
    w.z[1] = target;
    for (int i = 1; i < len; ++i) {
        const auto& hops = layers_->hops(i);
        auto it = std::find_if(hops.begin(), hops.end(), [&](const OmegaHop& h) { return h.to == w.z[i]; });
        require(it != hops.end(), ErrorKind::internal, "omega entry without a predecessor");
        w.option[i] = it->option;
        w.z[i + 1] = it->from;
    }
    return w;
}

std::optional<Decoded> SigmaCore::winning_decoded() const
{
    auto sink = graph_->winning_sink();
    if (!sink)
        return std::nullopt;
    auto path = dyck_->query(graph_->query_source(), *sink);
    if (!path)
        return std::nullopt;
    return graph_->decode(*path);
}

bool SigmaCore::winner() const
{
    if (mode_ == Materialization::lazy)
        return layers_->find(1, winning_omega()) >= 0;
    auto sink = graph_->winning_sink();
    return sink && dyck_->query(graph_->query_source(), *sink).has_value();
}

std::optional<Selector> SigmaCore::selector() const
{
    if (mode_ == Materialization::full) {
        auto d = winning_decoded();
        if (!d)
            return std::nullopt;
        return d->selector;
    }
    auto w = winning_walk();
    if (!w)
        return std::nullopt;
    Selector g(game_.size());
    for (int i : trav_->critical_indices()) {
        if (i >= trav_->length())
            continue;
        for (auto [s, t] : committed_pairs(game_, *trav_, i, layers_->options(i).at(w->option[i]))) {
            require(!g.defined(s), ErrorKind::internal, "walk commits a vertex twice");
            g.set(s, t);
        }
    }
    return g;
}

std::optional<VertexSet> SigmaCore::accessible() const
{
    require(variant_ == GammaVariant::refined, ErrorKind::variant_unsupported,
            "accessible sets need the refined variant");
    if (mode_ == Materialization::full) {
        auto d = winning_decoded();
        if (!d)
            return std::nullopt;
        return d->accessible;
    }
    auto w = winning_walk();
    if (!w)
        return std::nullopt;
    // alpha grows upward from level 1
    VertexSet alpha, out;
    for (int i = 1; i < trav_->length(); ++i) {
        if (trav_->critical(i) && i > 1) {
            ViewSet star = omega_star(*trav_, layers_->level(i + 1).at(w->z[i + 1]), i);
            alpha = access_step(game_, *trav_, i, alpha, &star, &layers_->options(i).at(w->option[i]));
        } else {
            alpha = access_step(game_, *trav_, i, alpha, nullptr, nullptr);
        }
        out.insert(alpha.begin(), alpha.end());
    }
    return out;
}

// ------------------------------------------------------------------- Engine

struct Engine::Uniform {
    std::vector<std::unique_ptr<SigmaCore>> cores; // per vertex of the user game
    std::map<Edge, std::vector<ChoiceSet>> hubs;   // current label set per working pair
};

Engine::Engine(ParityGame game, EngineOptions options) : options_(options)
{
    require(game.size() >= 2, ErrorKind::invalid_argument, "games need at least two vertices");
    levels_.push_back(std::move(game));
    decomps_.push_back(build_tree_decomposition(levels_[0].size(), levels_[0].max_edges(), options_.kappa_hint));
    rebuild();
}

Engine::~Engine() = default;
Engine::Engine(Engine&&) noexcept = default;
Engine& Engine::operator=(Engine&&) noexcept = default;

void Engine::rebuild()
{
    levels_.resize(1);
    decomps_.resize(1);
    for (auto& gd : gadgets_) {
        gd = gadget_for(gd.kind, levels_.back());
        levels_.push_back(reduce(gd, levels_.back()));
        decomps_.push_back(induced_decomposition(gd, decomps_.back()));
    }
    core_ = make_core(levels_.back().sigma());
    uniform_.reset();
}

std::unique_ptr<SigmaCore> Engine::make_core(Vertex root) const
{
    ParityGame g = levels_.back();
    g.set_sigma(root);
    auto trav = traversal_rooted_at(decomps_.back(), g.size(), root);
    if (options_.mode == Materialization::full) {
        try {
            return std::make_unique<SigmaCore>(g, trav, options_.variant, Materialization::full, options_.vertex_cap);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::materialization_overflow || !options_.allow_fallback)
                throw;
        }
    }
    return std::make_unique<SigmaCore>(std::move(g), std::move(trav), options_.variant, Materialization::lazy,
                                       options_.vertex_cap);
}

Vertex Engine::entry(Vertex s) const
{
    for (const auto& gd : gadgets_)
        s = gd.entry(s);
    return s;
}

Vertex Engine::project(Vertex v) const
{
    for (auto it = gadgets_.rbegin(); it != gadgets_.rend(); ++it)
        v = it->base(v);
    return v;
}

Selector Engine::lift(Selector working) const
{
    for (std::size_t k = gadgets_.size(); k-- > 0;)
        working = lift_selector(gadgets_[k], levels_[k], working);
    return working;
}

void Engine::apply(const UpdateOp& op)
{
    validate_update(levels_[0], op);
    last_delta_ = 0;
    last_hub_delta_ = 0;
    if (!op.is_edge_op()) {
        if (options_.owner_policy == OwnerPolicy::rebuild) {
            apply_update_in_place(levels_[0], op);
            rebuild();
            return;
        }
        const GadgetKind needed = op.kind == UpdateOp::Kind::owner ? GadgetKind::ownership : GadgetKind::color;
        auto has = [&](GadgetKind k) {
            return std::any_of(gadgets_.begin(), gadgets_.end(), [&](const Gadget& g) { return g.kind == k; });
        };
        if (!has(needed)) {
            // migrate: ownership stage always comes first
            gadgets_.push_back(Gadget{needed, 0, 1});
            std::sort(gadgets_.begin(), gadgets_.end(),
                      [](const Gadget& a, const Gadget& b) { return a.kind < b.kind; });
            rebuild();
        }
    }
    std::vector<UpdateOp> ops{op};
    for (std::size_t k = 0; k < gadgets_.size(); ++k) {
        std::vector<UpdateOp> next;
        for (const auto& o : ops) {
            auto t = translate(gadgets_[k], levels_[k], o);
            apply_update_in_place(levels_[k], o);
            next.insert(next.end(), t.begin(), t.end());
        }
        ops = std::move(next);
    }
    ParityGame& working = levels_.back();
    for (const auto& o : ops) {
        require(o.is_edge_op(), ErrorKind::internal, "working game received a non-edge update");
        if (uniform_) {
            auto before = choice(working, o.a, o.b);
            for (auto& core : uniform_->cores)
                if (core)
                    core->apply_edge(o);
            auto after = choice(apply_update(working, o), o.a, o.b);
            last_hub_delta_ += symmetric_difference_size(before, after);
            uniform_->hubs[{o.a, o.b}] = after;
        }
        last_delta_ += core_->apply_edge(o);
        apply_update_in_place(working, o);
    }
}

bool Engine::winner_at_sigma() const { return core_->winner(); }

std::optional<Selector> Engine::winning_selector() const
{
    auto g = core_->selector();
    if (!g)
        return std::nullopt;
    return lift(std::move(*g));
}

std::optional<VertexSet> Engine::accessible_set() const
{
    auto a = core_->accessible();
    if (!a)
        return std::nullopt;
    VertexSet out;
    for (Vertex v : *a)
        out.insert(project(v));
    return out;
}

UniformResult Engine::uniform_solve()
{
    require(options_.variant == GammaVariant::refined, ErrorKind::variant_unsupported,
            "uniform solving needs the refined variant");
    const ParityGame& user = levels_[0];
    const ParityGame& working = levels_.back();
    if (!uniform_) {
        uniform_ = std::make_unique<Uniform>();
        for (Vertex s = 0; s < user.size(); ++s)
            uniform_->cores.push_back(entry(s) == working.sigma() ? nullptr : make_core(entry(s)));
        for (auto [x, y] : working.max_edges())
            uniform_->hubs[{x, y}] = choice(working, x, y);
    }
    UniformResult out;
    Selector combined(working.size());
    std::vector<bool> covered(working.size(), false);
    for (Vertex s = 0; s < user.size(); ++s) {
        const SigmaCore& core = uniform_->cores[s] ? *uniform_->cores[s] : *core_;
        if (!core.winner())
            continue;
        out.w0.insert(s);
        // least sigma first: later roots only fill vertices nobody claimed
        auto g = core.selector();
        auto reach = core.accessible();
        require(g && reach, ErrorKind::internal, "winning core without a witness");
        for (Vertex v : *reach) {
            if (covered[v])
                continue;
            covered[v] = true;
            if (g->defined(v))
                combined.set(v, g->at(v));
        }
    }
    out.strategy = lift(std::move(combined));
    return out;
}

std::string Engine::dump() const
{
    std::ostringstream out;
    const SigmaCore& core = *core_;
    std::unique_ptr<GammaGraph> lazy;
    const GammaGraph* graph = core.graph();
    if (!graph) {
        lazy = std::make_unique<GammaGraph>(core.game(), core.traversal(), core.variant(), Materialization::lazy);
        graph = lazy.get();
    }
    auto edges = graph->edges();
    out << "# gamma " << to_string(core.variant()) << ' ' << to_string(core.mode()) << " vertices "
        << graph->vertex_count() << " labels " << graph->labels().size() << " edges " << edges.size() << '\n';
    out << graph->dump();
    out << std::hex << std::setfill('0');
    if (const DyckState* d = core.dyck()) {
        out << "# reach " << std::setw(16) << d->reach_digest() << '\n';
        out << "# pi2 " << std::setw(16) << d->pi2_digest() << '\n';
    } else {
        std::uint64_t h = 1469598103934665603ull;
        for (int j = 1; j <= core.layers()->length(); ++j)
            for (const auto& z : core.layers()->level(j))
                for (char c : dump_views(core.traversal(), j, z))
                    h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
        out << "# omega " << std::setw(16) << h << '\n';
    }
    return out.str();
}

// -------------------------------------------------------------- MergedGamma

MergedGamma::MergedGamma(const ParityGame& game, const TreeDecomposition& td)
{
    for (Vertex s = 0; s < game.size(); ++s) {
        ParityGame g = game;
        g.set_sigma(s);
        travs_.push_back(std::make_unique<NiceTraversal>(traversal_rooted_at(td, g.size(), s)));
        graphs_.push_back(std::make_unique<GammaGraph>(g, *travs_.back(), GammaVariant::refined, Materialization::full));
    }
    for (Vertex s = 0; s < game.size(); ++s) {
        const GammaGraph& g = *graphs_[s];
        for (const auto& e : g.edges())
            edges_.insert({merged_vertex(s, g.vertex_name(e.src)), merged_label(s, g, e.label),
                           merged_vertex(s, g.vertex_name(e.dst))});
    }
}

int MergedGamma::merged_vertex(Vertex sigma, const std::string& name)
{
    // chain slots are the hubs shared by every sigma
    std::string key = name.front() == 'p' ? name : "s" + std::to_string(sigma) + ":" + name;
    auto [it, fresh] = ids_.emplace(key, static_cast<int>(names_.size()));
    if (fresh)
        names_.push_back(key);
    return it->second;
}

LabelId MergedGamma::merged_label(Vertex sigma, const GammaGraph& g, LabelId l)
{
    const LabelAlphabet& src = g.labels();
    if (src.is_neutral(l)) {
        if (auto id = labels_.find(src.name(l)))
            return *id;
        return labels_.add_neutral(src.name(l));
    }
    const bool open = src.is_open(l);
    const LabelId base = open ? l : src.bar(l);
    std::string name = src.name(base);
    if (name.front() != 'c')
        name = "s" + std::to_string(sigma) + ":" + name;
    LabelId id;
    if (auto found = labels_.find(name))
        id = *found;
    else
        id = labels_.add_pair(name);
    return open ? id : labels_.bar(id);
}

GammaDelta MergedGamma::delta(const ParityGame& game, const UpdateOp& op) const
{
    GammaDelta out;
    auto map_edge = [&](Vertex s, const LabeledEdge& e) {
        const GammaGraph& g = *graphs_[s];
        auto vid = [&](const std::string& n) {
            return ids_.at(n.front() == 'p' ? n : "s" + std::to_string(s) + ":" + n);
        };
        const LabelAlphabet& src = g.labels();
        const bool open = src.is_open(e.label);
        std::string name = src.name(open ? e.label : src.bar(e.label));
        if (name.front() != 'c')
            name = "s" + std::to_string(s) + ":" + name;
        LabelId id = *labels_.find(name);
        return LabeledEdge{vid(g.vertex_name(e.src)), open ? id : labels_.bar(id), vid(g.vertex_name(e.dst))};
    };
    for (Vertex s = 0; s < static_cast<Vertex>(graphs_.size()); ++s) {
        ParityGame g = game;
        g.set_sigma(s);
        GammaDelta d = graphs_[s]->delta(g, op);
        for (const auto& e : d.removed)
            out.removed.insert(map_edge(s, e));
        for (const auto& e : d.added)
            out.added.insert(map_edge(s, e));
    }
    return out;
}

std::string MergedGamma::dump() const
{
    std::vector<std::string> lines;
    for (const auto& e : edges_)
        lines.push_back(names_[e.src] + " " + labels_.name(e.label) + " " + names_[e.dst]);
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines)
        out += l + '\n';
    return out;
}

void MergedGamma::apply(const GammaDelta& d)
{
    for (const auto& e : d.removed)
        edges_.erase(e);
    edges_.insert(d.added.begin(), d.added.end());
    // per-sigma deltas are read off the game, so the member graphs may stay stale
}

} // namespace dynparity
