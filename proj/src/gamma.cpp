#include "dynparity/gamma.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace dynparity {

std::string to_string(GammaVariant v) { return v == GammaVariant::simple ? "simple" : "refined"; }
std::string to_string(Materialization m) { return m == Materialization::full ? "full" : "lazy"; }

namespace {

char choice_char(ChoiceSet c)
{
    switch (c) {
    case choice_bot: return '0';
    case choice_top: return '1';
    default: return '*';
    }
}

std::string pair_name(Edge p) { return std::to_string(p.first) + ">" + std::to_string(p.second); }

std::string set_code(const VertexSet& a)
{
    std::string out = "a";
    bool first = true;
    for (Vertex s : a) {
        if (!first)
            out += ',';
        out += std::to_string(s);
        first = false;
    }
    return a.empty() ? "a-" : out;
}

bool has_empty_component(const ViewVector& z)
{
    return std::any_of(z.begin(), z.end(), [](const ViewSet& c) { return c.empty(); });
}

// Option entry guarding pair p of layer i.
ChoiceSet entry_for(const NiceTraversal& trav, int i, const ChoiceVectors& b, Edge p)
{
    const Bag& bag = trav.bag(trav.node(i));
    const Vertex theta = trav.theta(i);
    if (p.first == theta) {
        auto k = std::lower_bound(bag.begin(), bag.end(), p.second) - bag.begin();
        return b.out.at(k);
    }
    auto k = std::lower_bound(bag.begin(), bag.end(), p.first) - bag.begin();
    return b.in.at(k);
}

} // namespace

std::vector<ChoiceVectors> layer_options(const ParityGame& game, const NiceTraversal& trav, int i,
                                         bool use_max_edges)
{
    const Bag& bag = trav.bag(trav.node(i));
    const Vertex theta = trav.theta(i);
    auto options = [&](Vertex x, Vertex y) { return use_max_edges ? max_choice(game, x, y) : choice(game, x, y); };
    std::vector<std::vector<ChoiceSet>> outs, ins;
    for (Vertex s : bag) {
        outs.push_back(options(theta, s));
        ins.push_back(options(s, theta));
    }
    std::size_t count = 1;
    for (std::size_t k = 0; k < bag.size(); ++k) {
        count *= outs[k].size() * (bag[k] == theta ? 1 : ins[k].size());
        require(count <= max_layer_options, ErrorKind::materialization_overflow,
                "layer " + std::to_string(i) + " has too many choice vectors");
    }
    std::vector<ChoiceVectors> result;
    result.reserve(count);
    ChoiceVectors cur;
    cur.out.resize(bag.size());
    cur.in.resize(bag.size());
    // Slots 0..2k-1 alternate out/in per bag position.
    std::function<void(std::size_t)> rec = [&](std::size_t slot) {
        if (slot == 2 * bag.size()) {
            result.push_back(cur);
            return;
        }
        std::size_t k = slot / 2;
        if (slot % 2 == 0) {
            for (ChoiceSet c : outs[k]) {
                cur.out[k] = c;
                rec(slot + 1);
            }
        } else if (bag[k] == theta) {
            cur.in[k] = cur.out[k];
            rec(slot + 1);
        } else {
            for (ChoiceSet c : ins[k]) {
                cur.in[k] = c;
                rec(slot + 1);
            }
        }
    };
    rec(0);
    return result;
}

std::vector<Edge> committed_pairs(const ParityGame& game, const NiceTraversal& trav, int i, const ChoiceVectors& b)
{
    const Bag& bag = trav.bag(trav.node(i));
    const Vertex theta = trav.theta(i);
    std::vector<Edge> out;
    for (std::size_t k = 0; k < bag.size(); ++k) {
        if (b.out[k] == choice_top && game.owner(theta) == Player::p0)
            out.emplace_back(theta, bag[k]);
        if (bag[k] != theta && b.in[k] == choice_top && game.owner(bag[k]) == Player::p0)
            out.emplace_back(bag[k], theta);
    }
    return out;
}

int layer_of_pair(const NiceTraversal& trav, Vertex x, Vertex y)
{
    int i = std::max(trav.critical_index_of(x), trav.critical_index_of(y));
    const Bag& bag = trav.bag(trav.node(i));
    require(std::binary_search(bag.begin(), bag.end(), x) && std::binary_search(bag.begin(), bag.end(), y),
            ErrorKind::internal, "pair " + pair_name({x, y}) + " is not covered by its critical layer");
    return i;
}

std::vector<Edge> layer_pairs(const NiceTraversal& trav, int i)
{
    const Vertex theta = trav.theta(i);
    std::vector<Edge> out;
    for (Vertex s : trav.bag(trav.node(i))) {
        out.emplace_back(theta, s);
        if (s != theta)
            out.emplace_back(s, theta);
    }
    return out;
}

ViewVector winning_omega() { return ViewVector{ViewSet{View{cell::top}}}; }

// ---------------------------------------------------------------------------

OmegaLayers::OmegaLayers(const ParityGame& game, const NiceTraversal& trav, bool use_max_edges, std::size_t cap)
    : trav_(&trav), use_max_(use_max_edges), cap_(cap), length_(trav.length())
{
    levels_.resize(length_ + 1);
    index_.resize(length_ + 1);
    hops_.resize(length_ + 1);
    options_.resize(length_ + 1);
    levels_[length_] = {initial_omega(trav)};
    index_[length_][levels_[length_][0]] = 0;
    if (length_ > 1)
        recompute_from(game, length_ - 1);
}

void OmegaLayers::recompute_from(const ParityGame& game, int i)
{
    const NiceTraversal& trav = *trav_;
    for (int t = i; t >= 1; --t) {
        const bool crit = trav.critical(t);
        options_[t] = crit ? layer_options(game, trav, t, use_max_) : std::vector<ChoiceVectors>{};
        std::vector<std::pair<OmegaHop, ViewVector>> raw;
        const auto& above = levels_[t + 1];
        for (int from = 0; from < static_cast<int>(above.size()); ++from) {
            if (!crit) {
                raw.push_back({{from, -1, 0}, omega_step(game, trav, above[from], t, nullptr)});
                continue;
            }
            for (int o = 0; o < static_cast<int>(options_[t].size()); ++o) {
                ViewVector z = omega_step(game, trav, above[from], t, &options_[t][o]);
                if (!has_empty_component(z))
                    raw.push_back({{from, o, 0}, std::move(z)});
                require(raw.size() <= cap_, ErrorKind::materialization_overflow,
                        "omega hops exceed " + std::to_string(cap_) + " entries");
            }
        }
        std::map<ViewVector, int> index;
        for (auto& [hop, z] : raw)
            index.emplace(z, 0);
        std::vector<ViewVector> level;
        level.reserve(index.size());
        for (auto& [z, id] : index) {
            id = static_cast<int>(level.size());
            level.push_back(z);
        }
        std::vector<OmegaHop> hops;
        hops.reserve(raw.size());
        for (auto& [hop, z] : raw)
            hops.push_back({hop.from, hop.option, index.at(z)});
        levels_[t] = std::move(level);
        index_[t] = std::move(index);
        hops_[t] = std::move(hops);
        require(total_size() <= cap_, ErrorKind::materialization_overflow,
                "omega tables exceed " + std::to_string(cap_) + " entries");
    }
}

int OmegaLayers::find(int j, const ViewVector& z) const
{
    auto it = index_.at(j).find(z);
    return it == index_.at(j).end() ? -1 : it->second;
}

std::size_t OmegaLayers::total_size() const
{
    std::size_t total = 0;
    for (const auto& l : levels_)
        total += l.size();
    return total;
}

// ---------------------------------------------------------------------------

GammaGraph::GammaGraph(const ParityGame& game, const NiceTraversal& trav, GammaVariant variant, Materialization mode,
                       std::size_t vertex_cap)
    : trav_(&trav), variant_(variant), mode_(mode), vertex_cap_(vertex_cap)
{
    for (Vertex v = 0; v < game.size(); ++v)
        owners_.push_back(game.owner(v));
    bullet_ = labels_.add_neutral(".");
    OmegaLayers layers(game, trav, mode == Materialization::full);
    if (variant == GammaVariant::simple)
        build_simple(game, layers);
    else
        build_refined(game, layers);
}

int GammaGraph::vertex(const std::string& name)
{
    auto [it, fresh] = ids_.emplace(name, static_cast<int>(names_.size()));
    if (fresh) {
        names_.push_back(name);
        require(names_.size() <= vertex_cap_, ErrorKind::materialization_overflow,
                "gamma graph exceeds " + std::to_string(vertex_cap_) + " vertices");
    }
    return it->second;
}

std::optional<int> GammaGraph::find_vertex(const std::string& name) const
{
    auto it = ids_.find(name);
    if (it == ids_.end())
        return std::nullopt;
    return it->second;
}

LabelId GammaGraph::pair_label(const std::string& name)
{
    if (auto l = labels_.find(name))
        return *l;
    return labels_.add_pair(name);
}

std::string GammaGraph::label_name(LabelId l) const { return labels_.name(l); }

void GammaGraph::add_static(const std::string& src, LabelId l, const std::string& dst)
{
    int s = vertex(src);
    int t = vertex(dst);
    static_edges_.insert({s, l, t});
}

std::string GammaGraph::option_code(const ChoiceVectors& b) const
{
    std::string out;
    for (ChoiceSet c : b.out)
        out += choice_char(c);
    out += '/';
    for (ChoiceSet c : b.in)
        out += choice_char(c);
    return out;
}

std::vector<Edge> GammaGraph::committed_edges(int i, const ChoiceVectors& b) const
{
    const Bag& bag = trav_->bag(trav_->node(i));
    const Vertex theta = trav_->theta(i);
    std::vector<Edge> out;
    for (std::size_t k = 0; k < bag.size(); ++k) {
        if (b.out[k] == choice_top && owners_[theta] == Player::p0)
            out.emplace_back(theta, bag[k]);
        if (bag[k] != theta && b.in[k] == choice_top && owners_[bag[k]] == Player::p0)
            out.emplace_back(bag[k], theta);
    }
    return out;
}

std::set<LabeledEdge> GammaGraph::edges() const
{
    std::set<LabeledEdge> out = static_edges_;
    out.insert(choice_edges_.begin(), choice_edges_.end());
    return out;
}

std::optional<int> GammaGraph::winning_sink() const
{
    const ViewVector win = winning_omega();
    for (const auto& [v, z] : sinks_)
        if (z == win)
            return v;
    return std::nullopt;
}

void GammaGraph::build_simple(const ParityGame& game, const OmegaLayers& layers)
{
    const NiceTraversal& trav = *trav_;
    const int len = trav.length();
    auto nominal = [](int j, int z) { return "n" + std::to_string(j) + "." + std::to_string(z); };
    for (int j = len; j >= 1; --j)
        for (int z = 0; z < static_cast<int>(layers.level(j).size()); ++z)
            vertex(nominal(j, z));
    sources_.push_back(*find_vertex(nominal(len, 0)));
    for (int z = 0; z < static_cast<int>(layers.level(1).size()); ++z)
        sinks_[*find_vertex(nominal(1, z))] = layers.level(1)[z];

    for (int i = len - 1; i >= 1; --i) {
        if (!trav.critical(i)) {
            for (const auto& h : layers.hops(i))
                add_static(nominal(i + 1, h.from), bullet_, nominal(i, h.to));
            continue;
        }
        const std::string tag = std::to_string(i);
        const std::string g0 = "g" + tag + ".0", g1 = "g" + tag + ".1";
        options_[i] = layers.options(i);
        for (int from = 0; from < static_cast<int>(layers.level(i + 1).size()); ++from)
            add_static(nominal(i + 1, from), pair_label("z" + tag + "." + std::to_string(from)), g0);
        for (int o = 0; o < static_cast<int>(options_[i].size()); ++o) {
            const std::string code = option_code(options_[i][o]);
            LabelId b = pair_label("b" + tag + "." + code);
            const std::string k = "k" + tag + "." + code;
            add_static(g1, labels_.bar(b), k);
            decisions_[*find_vertex(k)] = {i, o};
        }
        for (const auto& h : layers.hops(i)) {
            LabelId z = *labels_.find("z" + tag + "." + std::to_string(h.from));
            add_static("k" + tag + "." + option_code(options_[i][h.option]), labels_.bar(z), nominal(i, h.to));
        }
        auto ce = choice_edges_for(game, i, nullptr);
        choice_edges_.insert(ce.begin(), ce.end());
    }
}

void GammaGraph::build_refined(const ParityGame& game, const OmegaLayers& layers)
{
    const NiceTraversal& trav = *trav_;
    const int len = trav.length();
    auto nominal = [](int j, int z, const VertexSet& a) {
        return "n" + std::to_string(j) + "." + std::to_string(z) + "." + set_code(a);
    };

    // Accessibility components are computed upward from the sinks.
    std::vector<std::set<std::pair<int, VertexSet>>> present(len + 1);
    for (int z = 0; z < static_cast<int>(layers.level(1).size()); ++z)
        present[1].insert({z, VertexSet{}});
    struct Link {
        int from;
        VertexSet a;
        int option;
        int to;
        VertexSet lower;
    };
    std::vector<std::vector<Link>> links(len + 1);
    std::size_t link_count = 0;
    for (int i = 1; i < len; ++i) {
        std::map<int, std::vector<const OmegaHop*>> by_target;
        for (const auto& h : layers.hops(i))
            by_target[h.to].push_back(&h);
        std::map<int, ViewSet> stars;
        for (const auto& [to, lower] : present[i]) {
            for (const OmegaHop* h : by_target[to]) {
                VertexSet a;
                if (trav.critical(i) && i > 1) {
                    auto it = stars.find(h->from);
                    if (it == stars.end())
                        it = stars.emplace(h->from, omega_star(trav, layers.level(i + 1)[h->from], i)).first;
                    a = access_step(game, trav, i, lower, &it->second, &layers.options(i)[h->option]);
                } else {
                    a = access_step(game, trav, i, lower, nullptr, nullptr);
                }
                present[i + 1].insert({h->from, a});
                links[i].push_back({h->from, std::move(a), h->option, to, lower});
                // every link becomes an open label, every present pair a vertex
                require(++link_count <= vertex_cap_ && present[i + 1].size() <= vertex_cap_,
                        ErrorKind::materialization_overflow,
                        "gamma graph exceeds " + std::to_string(vertex_cap_) + " vertices");
            }
        }
    }

    for (int j = len; j >= 1; --j)
        for (const auto& [z, a] : present[j])
            access_[vertex(nominal(j, z, a))] = a;
    for (const auto& [z, a] : present[len])
        sources_.push_back(*find_vertex(nominal(len, z, a)));
    for (const auto& [z, a] : present[1])
        sinks_[*find_vertex(nominal(1, z, a))] = layers.level(1)[z];
    for (int src : sources_) {
        const std::string name = names_[src];
        add_static("src", bullet_, name);
    }
    super_source_ = *find_vertex("src");

    for (int i = len - 1; i >= 1; --i) {
        if (!trav.critical(i)) {
            for (const auto& l : links[i])
                add_static(nominal(i + 1, l.from, l.a), bullet_, nominal(i, l.to, l.lower));
            continue;
        }
        const std::string tag = std::to_string(i);
        options_[i] = layers.options(i);
        const auto pairs = layer_pairs(trav, i);
        const std::string end = "e" + tag;
        auto slot = [&](std::size_t j, int bit) { return "p" + pair_name(pairs[j]) + "." + std::to_string(bit); };
        auto next_slot = [&](std::size_t j) { return j + 1 < pairs.size() ? slot(j + 1, 0) : end; };
        for (Edge p : pairs)
            for (char c : std::string("01*"))
                pair_label("c" + pair_name(p) + "." + c);
        for (int o = 0; o < static_cast<int>(options_[i].size()); ++o) {
            const ChoiceVectors& b = options_[i][o];
            const std::string code = option_code(b);
            for (std::size_t j = 0; j < pairs.size(); ++j)
                add_static(slot(j, 1), pair_label("h" + pair_name(pairs[j]) + "." + code), next_slot(j));
            const std::string closed_end = end + "." + code;
            add_static(end, bullet_, closed_end);
            decisions_[*find_vertex(closed_end)] = {i, o};
            std::string cur = closed_end;
            for (std::size_t j = pairs.size(); j-- > 0;) {
                const std::string q = "q" + pair_name(pairs[j]) + "." + code;
                LabelId hop = *labels_.find("h" + pair_name(pairs[j]) + "." + code);
                LabelId pick = *labels_.find("c" + pair_name(pairs[j]) + "." + choice_char(entry_for(trav, i, b, pairs[j])));
                add_static(cur, labels_.bar(hop), q + ".1");
                add_static(q + ".1", labels_.bar(pick), q + ".0");
                cur = q + ".0";
            }
        }
        for (const auto& l : links[i]) {
            const std::string code = option_code(options_[i][l.option]);
            LabelId open = pair_label("o" + tag + "." + std::to_string(l.from) + "." + set_code(l.a) + "." + code);
            add_static(nominal(i + 1, l.from, l.a), open, slot(0, 0));
            add_static("q" + pair_name(pairs[0]) + "." + code + ".0", labels_.bar(open), nominal(i, l.to, l.lower));
        }
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            vertex(slot(j, 0));
            vertex(slot(j, 1));
        }
        auto ce = choice_edges_for(game, i, nullptr);
        choice_edges_.insert(ce.begin(), ce.end());
    }
}

std::set<LabeledEdge> GammaGraph::choice_edges_for(const ParityGame& game, int i, const Edge* only) const
{
    const NiceTraversal& trav = *trav_;
    const std::string tag = std::to_string(i);
    std::set<LabeledEdge> out;
    if (variant_ == GammaVariant::simple) {
        int g0 = *find_vertex("g" + tag + ".0"), g1 = *find_vertex("g" + tag + ".1");
        for (const auto& b : options_.at(i))
            if (choice_vectors_allowed(game, trav, i, b, false))
                out.insert({g0, *labels_.find("b" + tag + "." + option_code(b)), g1});
        return out;
    }
    for (Edge p : layer_pairs(trav, i)) {
        if (only && p != *only)
            continue;
        int p0 = *find_vertex("p" + pair_name(p) + ".0"), p1 = *find_vertex("p" + pair_name(p) + ".1");
        for (ChoiceSet beta : choice(game, p.first, p.second))
            out.insert({p0, *labels_.find("c" + pair_name(p) + "." + choice_char(beta)), p1});
    }
    return out;
}

GammaDelta GammaGraph::delta(const ParityGame& game, const UpdateOp& op) const
{
    require(op.is_edge_op(), ErrorKind::invalid_argument, "only edge updates change gamma");
    require(mode_ == Materialization::full, ErrorKind::invalid_argument, "deltas need a fully materialized graph");
    validate_update(game, op);
    const Edge p{op.a, op.b};
    const int i = layer_of_pair(*trav_, p.first, p.second);
    // A self-loop is represented by its out copy.
    const auto before = choice_edges_for(game, i, &p);
    const auto after = choice_edges_for(apply_update(game, op), i, &p);
    GammaDelta d;
    std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                        std::inserter(d.removed, d.removed.end()));
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                        std::inserter(d.added, d.added.end()));
    return d;
}

void GammaGraph::apply(const GammaDelta& d)
{
    for (const auto& e : d.removed)
        choice_edges_.erase(e);
    choice_edges_.insert(d.added.begin(), d.added.end());
}

Decoded GammaGraph::decode(const DyckPath& path) const
{
    const bool from_source = std::find(sources_.begin(), sources_.end(), path.source) != sources_.end() ||
                             (super_source_ && path.source == *super_source_);
    auto sink = sinks_.find(path.sink());
    require(from_source && sink != sinks_.end(), ErrorKind::not_generic, "path does not run from a source to a sink");
    require(is_dyck(labels_, path.word()), ErrorKind::not_generic, "path label is not a Dyck word");

    Decoded out;
    out.z = sink->second;
    out.selector = Selector(trav_->vertex_count());
    auto visit = [&](int v) {
        if (auto it = decisions_.find(v); it != decisions_.end()) {
            auto [i, o] = it->second;
            for (Edge e : committed_edges(i, options_.at(i).at(o)))
                out.edges.insert(e);
        }
        if (auto it = access_.find(v); it != access_.end())
            out.accessible.insert(it->second.begin(), it->second.end());
    };
    visit(path.source);
    for (const auto& e : path.edges)
        visit(e.dst);
    for (auto [s, t] : out.edges) {
        require(!out.selector.defined(s), ErrorKind::not_generic, "path commits a vertex twice");
        out.selector.set(s, t);
    }
    return out;
}

std::string GammaGraph::dump() const
{
    std::vector<std::string> lines;
    for (const auto& e : edges())
        lines.push_back(names_[e.src] + " " + label_name(e.label) + " " + names_[e.dst]);
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines)
        out += l + '\n';
    return out;
}

std::vector<DyckPath> enumerate_generic_paths(const GammaGraph& graph, std::size_t cap)
{
    const int n = graph.vertex_count();
    const LabelAlphabet& labels = graph.labels();
    std::vector<std::vector<LabeledEdge>> adj(n);
    std::vector<int> indeg(n);
    for (const auto& e : graph.edges()) {
        adj[e.src].push_back(e);
        ++indeg[e.dst];
    }
    std::vector<int> topo;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0)
            topo.push_back(v);
    for (std::size_t k = 0; k < topo.size(); ++k)
        for (const auto& e : adj[topo[k]])
            if (--indeg[e.dst] == 0)
                topo.push_back(e.dst);
    require(static_cast<int>(topo.size()) == n, ErrorKind::cycle_created, "gamma graph has a cycle");

    // matched[u][v]: some Dyck path runs from u to v, where every close label
    // matches the innermost open one.
    std::vector<std::vector<char>> matched(n, std::vector<char>(n));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        const int u = *it;
        auto& row = matched[u];
        row[u] = 1;
        for (const auto& e : adj[u]) {
            if (labels.is_neutral(e.label)) {
                for (int v = 0; v < n; ++v)
                    row[v] |= matched[e.dst][v];
            } else if (labels.is_open(e.label)) {
                const LabelId close = labels.bar(e.label);
                for (int x = 0; x < n; ++x) {
                    if (!matched[e.dst][x])
                        continue;
                    for (const auto& f : adj[x])
                        if (f.label == close)
                            for (int v = 0; v < n; ++v)
                                row[v] |= matched[f.dst][v];
                }
            }
        }
    }

    std::size_t produced = 0;
    // All Dyck paths from u to v, split along P = e | . P | l P l' P.
    std::function<std::vector<std::vector<LabeledEdge>>(int, int)> paths = [&](int u, int v) {
        std::vector<std::vector<LabeledEdge>> out;
        if (u == v)
            out.emplace_back();
        for (const auto& e : adj[u]) {
            if (labels.is_neutral(e.label)) {
                if (!matched[e.dst][v])
                    continue;
                for (auto& rest : paths(e.dst, v)) {
                    rest.insert(rest.begin(), e);
                    out.push_back(std::move(rest));
                }
            } else if (labels.is_open(e.label)) {
                const LabelId close = labels.bar(e.label);
                for (int x = 0; x < n; ++x) {
                    if (!matched[e.dst][x])
                        continue;
                    for (const auto& f : adj[x]) {
                        if (f.label != close || !matched[f.dst][v])
                            continue;
                        auto inner = paths(e.dst, x);
                        auto outer = paths(f.dst, v);
                        for (const auto& a : inner)
                            for (const auto& b : outer) {
                                std::vector<LabeledEdge> p{e};
                                p.insert(p.end(), a.begin(), a.end());
                                p.push_back(f);
                                p.insert(p.end(), b.begin(), b.end());
                                out.push_back(std::move(p));
                            }
                    }
                }
            }
            require((produced += out.size()) <= cap, ErrorKind::path_explosion, "too many Dyck paths");
        }
        return out;
    };

    std::vector<DyckPath> found;
    for (int s : graph.sources())
        for (const auto& [t, z] : graph.sinks())
            if (matched[s][t])
                for (auto& p : paths(s, t))
                    found.push_back(DyckPath{s, std::move(p)});
    return found;
}

} // namespace dynparity
