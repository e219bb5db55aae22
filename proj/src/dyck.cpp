#include "dynparity/dyck.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "dynparity/error.hpp"

namespace dynparity {

LabelId LabelAlphabet::add_pair(const std::string& name)
{
    require(!by_name_.count(name) && !by_name_.count(name + "'"), ErrorKind::invalid_argument,
            "duplicate label " + name);
    LabelId open = size();
    bar_.push_back(open + 1);
    bar_.push_back(open);
    open_.push_back(1);
    open_.push_back(0);
    names_.push_back(name);
    names_.push_back(name + "'");
    by_name_[name] = open;
    by_name_[name + "'"] = open + 1;
    return open;
}

LabelId LabelAlphabet::add_neutral(const std::string& name)
{
    require(!by_name_.count(name), ErrorKind::invalid_argument, "duplicate label " + name);
    LabelId id = size();
    bar_.push_back(id);
    open_.push_back(0);
    names_.push_back(name);
    by_name_[name] = id;
    return id;
}

std::optional<LabelId> LabelAlphabet::find(const std::string& name) const
{
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

std::vector<LabelId> DyckPath::word() const
{
    std::vector<LabelId> w;
    w.reserve(edges.size());
    for (const auto& e : edges)
        w.push_back(e.label);
    return w;
}

void DyckPath::append(const DyckPath& other)
{
    require(other.source == sink(), ErrorKind::internal, "path concatenation mismatch");
    edges.insert(edges.end(), other.edges.begin(), other.edges.end());
}

std::vector<LabelId> reduce_word(const LabelAlphabet& labels, const std::vector<LabelId>& word)
{
    std::vector<LabelId> stack;
    for (LabelId l : word) {
        if (labels.is_neutral(l))
            continue;
        if (!stack.empty() && stack.back() == labels.bar(l))
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return stack;
}

bool is_dyck(const LabelAlphabet& labels, const std::vector<LabelId>& word)
{
    return reduce_word(labels, word).empty();
}

bool path_in(const DyckPath& path, const std::set<LabeledEdge>& edges)
{
    int at = path.source;
    for (const auto& e : path.edges) {
        if (e.src != at || !edges.count(e))
            return false;
        at = e.dst;
    }
    return true;
}

namespace {

DyckPath empty_path(int v) { return DyckPath{v, {}}; }

DyckPath joined(DyckPath a, const DyckPath& b)
{
    a.append(b);
    return a;
}

DyckPath through(const DyckPath& before, const LabeledEdge& e, const DyckPath& after)
{
    DyckPath p = before;
    p.append(DyckPath{e.src, {e}});
    p.append(after);
    return p;
}

struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept
    {
        std::size_t h = 1469598103934665603ULL;
        for (int x : v)
            h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
        return h;
    }
};

std::uint64_t fnv(const std::vector<std::uint64_t>& words)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : words)
        for (int b = 0; b < 8; ++b)
            h = (h ^ ((w >> (8 * b)) & 0xff)) * 1099511628211ULL;
    return h;
}

} // namespace

// Evaluates pi_k / rho_k on a fixed state by the split recursion, memoised per instance.
class PiEvaluator {
public:
    explicit PiEvaluator(const DyckState& st) : st_(st) {}

    bool holds(const std::vector<int>& t)
    {
        std::size_t k = t.size() / 2;
        if (k == 1)
            return st_.pi2(t[0], t[1], t[1], t[1]);
        if (k == 2)
            return st_.pi2(t[0], t[1], t[2], t[3]);
        return split(t).has_value();
    }

    std::vector<DyckPath> witness(const std::vector<int>& t)
    {
        std::size_t k = t.size() / 2;
        if (k == 1)
            return {st_.rho2(t[0], t[1], t[1], t[1]).first};
        if (k == 2) {
            auto [a, b] = st_.rho2(t[0], t[1], t[2], t[3]);
            return {a, b};
        }
        auto sp = split(t);
        require(sp.has_value(), ErrorKind::internal, "witness requested for a false tuple");
        auto [x, y, z, i] = *sp;
        auto inner = witness({x, t[1], t[2], z});
        auto outer = witness(outer_tuple(t, x, y, i));
        auto middle = witness(middle_tuple(t, y, z, i));
        std::vector<DyckPath> out(k);
        out[0] = joined(outer[0], inner[0]);
        out[1] = joined(inner[1], middle[0]);
        for (int j = 3; j < i; ++j)
            out[j - 1] = middle[j - 2];
        out[i - 1] = joined(middle[i - 2], outer[1]);
        for (int j = i + 1; j <= static_cast<int>(k); ++j)
            out[j - 1] = outer[j - i + 1];
        return out;
    }

private:
    struct Split {
        int x, y, z, i;
    };

    // Pairs are 1-based: u_j = t[2j-2], v_j = t[2j-1].
    static std::vector<int> outer_tuple(const std::vector<int>& t, int x, int y, int i)
    {
        std::vector<int> o{t[0], x, y, t[2 * i - 1]};
        o.insert(o.end(), t.begin() + 2 * i, t.end());
        return o;
    }
    static std::vector<int> middle_tuple(const std::vector<int>& t, int y, int z, int i)
    {
        std::vector<int> m{z, t[3]};
        m.insert(m.end(), t.begin() + 4, t.begin() + 2 * i - 1);
        m.push_back(y);
        return m;
    }

    std::vector<int> between(int u, int v) const
    {
        std::vector<int> out;
        for (int x = 0; x < st_.size_; ++x)
            if (st_.reaches(u, x) && st_.reaches(x, v))
                out.push_back(x);
        return out;
    }

    std::optional<Split> split(const std::vector<int>& t)
    {
        if (auto it = memo_.find(t); it != memo_.end())
            return it->second;
        std::optional<Split> found = search(t);
        memo_.emplace(t, found);
        return found;
    }

    std::optional<Split> search(const std::vector<int>& t)
    {
        const int k = static_cast<int>(t.size() / 2);
        for (int j = 0; j < k; ++j)
            if (!st_.reaches(t[2 * j], t[2 * j + 1]))
                return std::nullopt;

        // Order extended by the tuple elements, v_k first and u_1 last.
        std::unordered_map<int, long> extra;
        long next = st_.next_rank_;
        for (int j = static_cast<int>(t.size()) - 1; j >= 0; --j)
            if (st_.rank_[t[j]] < 0 && !extra.count(t[j]))
                extra[t[j]] = next++;
        auto key = [&](int e) -> long {
            if (st_.rank_[e] >= 0)
                return st_.rank_[e];
            auto it = extra.find(e);
            return it != extra.end() ? it->second : (1L << 40) + e;
        };
        auto by_key = [&](std::vector<int> v) {
            std::sort(v.begin(), v.end(), [&](int a, int b) { return key(a) < key(b); });
            return v;
        };

        const int u1 = t[0], v1 = t[1], u2 = t[2];
        auto xs = by_key(between(u1, v1));
        auto zs = by_key(between(t[2], t[3]));
        std::vector<int> ys;
        for (int i = 3; i <= k; ++i)
            for (int y : between(t[2 * i - 2], t[2 * i - 1]))
                ys.push_back(y);
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        ys = by_key(std::move(ys));

        for (int x : xs) {
            std::vector<int> z_ok;
            for (int z : zs)
                if (st_.pi2(x, v1, u2, z))
                    z_ok.push_back(z);
            if (z_ok.empty())
                continue;
            for (int y : ys)
                for (int z : z_ok)
                    for (int i = 3; i <= k; ++i) {
                        if (!st_.reaches(t[2 * i - 2], y) || !st_.reaches(y, t[2 * i - 1]))
                            continue;
                        if (holds(outer_tuple(t, x, y, i)) && holds(middle_tuple(t, y, z, i)))
                            return Split{x, y, z, i};
                    }
        }
        return std::nullopt;
    }

    const DyckState& st_;
    std::unordered_map<std::vector<int>, std::optional<Split>, VectorHash> memo_;
};

DyckState::DyckState(int vertex_count, LabelAlphabet labels, int vertex_cap)
    : n_(vertex_count), labels_(std::move(labels))
{
    require(n_ >= 0, ErrorKind::invalid_argument, "negative vertex count");
    size_ = n_ + labels_.size() + 1;
    require(size_ <= vertex_cap, ErrorKind::materialization_overflow,
            "augmented graph has " + std::to_string(size_) + " vertices, cap is " + std::to_string(vertex_cap));
    words_ = (size_ + 63) / 64;
    reach_.assign(static_cast<std::size_t>(size_) * words_, 0);
    reach_rev_.assign(static_cast<std::size_t>(size_) * words_, 0);
    std::size_t cells = static_cast<std::size_t>(size_) * size_ * size_ * size_;
    pi2_.assign((cells + 63) / 64, 0);
    rank_.assign(size_, -1);

    const int dot = bullet();
    for (int u = 0; u < size_; ++u)
        set_reach(u, u);
    for (LabelId l = 0; l < labels_.size(); ++l)
        set_reach(label_vertex(l), dot);

    // Without base edges, paths are empty or a single augmentation edge.
    std::vector<std::pair<int, int>> nonempty;
    for (int u = 0; u < size_; ++u)
        nonempty.emplace_back(u, u);
    for (LabelId l = 0; l < labels_.size(); ++l)
        nonempty.emplace_back(label_vertex(l), dot);
    auto only_path = [&](int u, int v) {
        if (u == v)
            return empty_path(u);
        LabelId l = u - n_;
        return DyckPath{u, {LabeledEdge{u, l, v}}};
    };
    for (auto [u1, v1] : nonempty)
        for (auto [u2, v2] : nonempty) {
            DyckPath p1 = only_path(u1, v1), p2 = only_path(u2, v2);
            auto w = p1.word();
            auto w2 = p2.word();
            w.insert(w.end(), w2.begin(), w2.end());
            if (!is_dyck(labels_, w))
                continue;
            std::size_t idx = tuple_index(u1, v1, u2, v2);
            set_pi2(idx, true);
            rho2_[idx] = {p1, p2};
        }
    rank_[dot] = next_rank_++;
}

void DyckState::set_pi2(std::size_t idx, bool on)
{
    if (on)
        pi2_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
    else
        pi2_[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63));
}

void DyckState::set_reach(int u, int v)
{
    reach_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    reach_rev_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void DyckState::check_edge(const LabeledEdge& e) const
{
    require(e.src >= 0 && e.src < n_ && e.dst >= 0 && e.dst < n_, ErrorKind::invalid_argument,
            "edge endpoint out of range");
    require(e.label >= 0 && e.label < labels_.size(), ErrorKind::invalid_argument, "unknown label");
}

void DyckState::extend_order(int element)
{
    if (rank_[element] < 0)
        rank_[element] = next_rank_++;
}

std::set<LabeledEdge> DyckState::augmented_edges() const
{
    std::set<LabeledEdge> all = edges_;
    for (LabelId l = 0; l < labels_.size(); ++l)
        all.insert(LabeledEdge{label_vertex(l), l, bullet()});
    return all;
}

bool DyckState::pi2(int u1, int v1, int u2, int v2) const { return pi2_bit(tuple_index(u1, v1, u2, v2)); }

std::pair<DyckPath, DyckPath> DyckState::rho2(int u1, int v1, int u2, int v2) const
{
    auto it = rho2_.find(tuple_index(u1, v1, u2, v2));
    require(it != rho2_.end(), ErrorKind::internal, "no witness for a false pi2 tuple");
    return it->second;
}

bool DyckState::pi_k(const std::vector<int>& tuple) const
{
    require(tuple.size() >= 2 && tuple.size() % 2 == 0, ErrorKind::invalid_argument, "pi_k needs 2k vertices");
    for (int v : tuple)
        require(v >= 0 && v < size_, ErrorKind::invalid_argument, "vertex out of range");
    PiEvaluator ev(*this);
    return ev.holds(tuple);
}

std::optional<std::vector<DyckPath>> DyckState::rho_k(const std::vector<int>& tuple) const
{
    if (!pi_k(tuple))
        return std::nullopt;
    PiEvaluator ev(*this);
    return ev.witness(tuple);
}

std::optional<DyckPath> DyckState::query(int s, int t) const
{
    require(s >= 0 && s < size_ && t >= 0 && t < size_, ErrorKind::invalid_argument, "vertex out of range");
    if (!pi2(s, t, t, t))
        return std::nullopt;
    return rho2(s, t, t, t).first;
}

std::vector<int> DyckState::order() const
{
    std::vector<int> out;
    for (int e = 0; e < size_; ++e)
        if (rank_[e] >= 0)
            out.push_back(e);
    std::sort(out.begin(), out.end(), [&](int a, int b) { return rank_[a] < rank_[b]; });
    return out;
}

std::uint64_t DyckState::reach_digest() const { return fnv(reach_); }
std::uint64_t DyckState::pi2_digest() const { return fnv(pi2_); }

void DyckState::insert_edge(const LabeledEdge& e)
{
    check_edge(e);
    if (has_edge(e))
        return;
    const int s = e.src, t = e.dst, lam = label_vertex(e.label), dot = bullet();
    require(!reaches(t, s), ErrorKind::cycle_created, "edge would close a cycle");

    std::vector<char> pre(size_), post(size_);
    for (int u = 0; u < size_; ++u) {
        pre[u] = reaches(u, s);
        post[u] = reaches(t, u);
    }
    auto reaches_after = [&](int u, int v) { return reaches(u, v) || (pre[u] && post[v]); };

    PiEvaluator ev(*this);
    std::vector<std::pair<std::size_t, std::pair<DyckPath, DyckPath>>> gained;
    auto consider = [&](int u1, int v1, int u2, int v2) {
        std::size_t idx = tuple_index(u1, v1, u2, v2);
        if (pi2_bit(idx) || !reaches_after(u1, v1) || !reaches_after(u2, v2))
            return;
        const bool through1 = pre[u1] && post[v1], through2 = pre[u2] && post[v2];
        if (through1) {
            std::vector<int> tup{u1, s, lam, dot, t, v1, u2, v2};
            if (ev.holds(tup)) {
                auto w = ev.witness(tup);
                gained.push_back({idx, {through(w[0], e, w[2]), w[3]}});
                return;
            }
        }
        if (through2) {
            std::vector<int> tup{u1, v1, u2, s, lam, dot, t, v2};
            if (ev.holds(tup)) {
                auto w = ev.witness(tup);
                gained.push_back({idx, {w[0], through(w[1], e, w[3])}});
                return;
            }
        }
        if (through1 && through2) {
            std::vector<int> tup{u1, s, lam, dot, t, v1, u2, s, lam, dot, t, v2};
            if (ev.holds(tup)) {
                auto w = ev.witness(tup);
                gained.push_back({idx, {through(w[0], e, w[2]), through(w[3], e, w[5])}});
            }
        }
    };
    for (int u1 = 0; u1 < size_; ++u1)
        for (int v1 = 0; v1 < size_; ++v1) {
            bool through1 = pre[u1] && post[v1];
            for (int u2 = 0; u2 < size_; ++u2) {
                if (!through1 && !pre[u2])
                    continue;
                for (int v2 = 0; v2 < size_; ++v2)
                    if (through1 || post[v2])
                        consider(u1, v1, u2, v2);
            }
        }

    for (int u = 0; u < size_; ++u) {
        if (!pre[u])
            continue;
        for (int v = 0; v < size_; ++v)
            if (post[v])
                set_reach(u, v);
    }
    for (auto& [idx, w] : gained) {
        set_pi2(idx, true);
        rho2_[idx] = std::move(w);
    }
    extend_order(label_vertex(labels_.bar(e.label)));
    extend_order(lam);
    extend_order(t);
    extend_order(s);
    edges_.insert(e);
}

void DyckState::delete_edge(const LabeledEdge& e)
{
    check_edge(e);
    require(has_edge(e), ErrorKind::edge_absent, "edge is not present");
    const int s = e.src, dot = bullet();

    std::vector<char> inside(size_);
    for (int u = 0; u < size_; ++u)
        inside[u] = reaches(u, s);
    auto broken = [&](int u, int v) { return inside[u] && !inside[v]; }; // negation of T1(u,v,s)

    // Edges leaving {z | T(z,s)} other than e, in lexicographic order of ranks.
    std::vector<LabeledEdge> exits;
    for (const auto& x : edges_)
        if (x != e && inside[x.src] && !inside[x.dst])
            exits.push_back(x);
    std::sort(exits.begin(), exits.end(), [&](const LabeledEdge& a, const LabeledEdge& b) {
        return std::tuple(rank_[a.src], rank_[label_vertex(a.label)], rank_[a.dst]) <
               std::tuple(rank_[b.src], rank_[label_vertex(b.label)], rank_[b.dst]);
    });
    auto exit_ok = [&](const LabeledEdge& x, int u, int v) { return reaches(u, x.src) && reaches(x.dst, v); };

    PiEvaluator ev(*this);
    std::vector<std::pair<std::size_t, std::optional<std::pair<DyckPath, DyckPath>>>> changed;
    auto consider = [&](int u1, int v1, int u2, int v2) {
        std::size_t idx = tuple_index(u1, v1, u2, v2);
        if (!pi2_bit(idx))
            return;
        const bool b1 = broken(u1, v1), b2 = broken(u2, v2);
        if (!b1 && !b2)
            return;
        std::optional<std::pair<DyckPath, DyckPath>> w;
        if (b1 && !b2) {
            for (const auto& a : exits) {
                if (!exit_ok(a, u1, v1))
                    continue;
                std::vector<int> tup{u1, a.src, label_vertex(a.label), dot, a.dst, v1, u2, v2};
                if (ev.holds(tup)) {
                    auto p = ev.witness(tup);
                    w = {through(p[0], a, p[2]), p[3]};
                    break;
                }
            }
        } else if (!b1 && b2) {
            for (const auto& c : exits) {
                if (!exit_ok(c, u2, v2))
                    continue;
                std::vector<int> tup{u1, v1, u2, c.src, label_vertex(c.label), dot, c.dst, v2};
                if (ev.holds(tup)) {
                    auto p = ev.witness(tup);
                    w = {p[0], through(p[1], c, p[3])};
                    break;
                }
            }
        } else {
            for (const auto& a : exits) {
                if (!exit_ok(a, u1, v1))
                    continue;
                for (const auto& c : exits) {
                    if (!exit_ok(c, u2, v2))
                        continue;
                    std::vector<int> tup{u1, a.src, label_vertex(a.label), dot, a.dst, v1,
                                         u2, c.src, label_vertex(c.label), dot, c.dst, v2};
                    if (ev.holds(tup)) {
                        auto p = ev.witness(tup);
                        w = {through(p[0], a, p[2]), through(p[3], c, p[5])};
                        break;
                    }
                }
                if (w)
                    break;
            }
        }
        changed.push_back({idx, std::move(w)});
    };
    for (int u1 = 0; u1 < size_; ++u1)
        for (int v1 = 0; v1 < size_; ++v1) {
            bool b1 = broken(u1, v1);
            for (int u2 = 0; u2 < size_; ++u2) {
                if (!b1 && !inside[u2])
                    continue;
                for (int v2 = 0; v2 < size_; ++v2)
                    if (b1 || broken(u2, v2))
                        consider(u1, v1, u2, v2);
            }
        }

    // T'(u,v) = T(u,v) and (T1 or some other exit edge is used).
    std::vector<std::uint64_t> reach = reach_;
    for (int u = 0; u < size_; ++u) {
        if (!inside[u])
            continue;
        std::vector<std::uint64_t> row(words_, 0);
        for (int v = 0; v < size_; ++v)
            if (inside[v] && reaches(u, v))
                row[v >> 6] |= std::uint64_t{1} << (v & 63);
        for (const auto& x : exits)
            if (reaches(u, x.src))
                for (int w = 0; w < words_; ++w)
                    row[w] |= reach_[static_cast<std::size_t>(x.dst) * words_ + w];
        std::copy(row.begin(), row.end(), reach.begin() + static_cast<std::ptrdiff_t>(u) * words_);
    }
    reach_ = std::move(reach);
    std::fill(reach_rev_.begin(), reach_rev_.end(), 0);
    for (int u = 0; u < size_; ++u)
        for (int v = 0; v < size_; ++v)
            if (reaches(u, v))
                reach_rev_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);

    for (auto& [idx, w] : changed) {
        if (w) {
            rho2_[idx] = std::move(*w);
        } else {
            set_pi2(idx, false);
            rho2_.erase(idx);
        }
    }
    edges_.erase(e);
}

std::optional<DyckPath> dyck_bruteforce(const LabelAlphabet& labels, int vertex_count,
                                        const std::set<LabeledEdge>& edges, int s, int t, std::size_t path_cap)
{
    std::vector<std::vector<LabeledEdge>> out(vertex_count);
    for (const auto& e : edges)
        out.at(e.src).push_back(e);
    std::size_t explored = 0;
    DyckPath path{s, {}};
    std::vector<LabelId> stack;
    std::optional<DyckPath> found;

    auto dfs = [&](auto&& self, int at) -> void {
        if (found)
            return;
        require(++explored <= path_cap, ErrorKind::path_explosion, "too many paths to enumerate");
        if (at == t && stack.empty()) {
            found = path;
            return;
        }
        for (const auto& e : out[at]) {
            // Push the label onto the reduction stack, remembering how to undo it.
            bool popped = false;
            LabelId undo = -1;
            if (!labels.is_neutral(e.label)) {
                if (!stack.empty() && stack.back() == labels.bar(e.label)) {
                    undo = stack.back();
                    stack.pop_back();
                    popped = true;
                } else {
                    stack.push_back(e.label);
                }
            }
            path.edges.push_back(e);
            self(self, e.dst);
            path.edges.pop_back();
            if (!labels.is_neutral(e.label)) {
                if (popped)
                    stack.push_back(undo);
                else
                    stack.pop_back();
            }
            if (found)
                return;
        }
    };
    dfs(dfs, s);
    return found;
}

namespace {

struct ReplayLine {
    std::string op;
    std::vector<std::string> args;
    int line_no;
};

// Base name and kind of a label token.
std::pair<std::string, char> parse_label(const std::string& tok)
{
    if (tok.front() == '.')
        return {tok, 'n'};
    if (tok.size() > 1 && tok.back() == '\'')
        return {tok.substr(0, tok.size() - 1), 'c'};
    return {tok, 'o'};
}

} // namespace

void replay_dyck_script(std::istream& in, std::ostream& out, int vertex_cap)
{
    std::vector<ReplayLine> lines;
    std::map<std::string, int> vertex_ids;
    std::vector<std::string> vertex_names;
    std::vector<std::pair<std::string, char>> label_order;
    std::set<std::string> label_seen;
    auto vertex = [&](const std::string& name) {
        auto [it, fresh] = vertex_ids.emplace(name, static_cast<int>(vertex_names.size()));
        if (fresh)
            vertex_names.push_back(name);
        return it->second;
    };

    std::string text;
    int line_no = 0;
    while (std::getline(in, text)) {
        ++line_no;
        if (auto hash = text.find('#'); hash != std::string::npos)
            text.erase(hash);
        std::istringstream ls(text);
        ReplayLine line{{}, {}, line_no};
        if (!(ls >> line.op))
            continue;
        std::string tok;
        while (ls >> tok)
            line.args.push_back(tok);
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (line.op == "ins" || line.op == "del") {
            require(line.args.size() == 3, ErrorKind::parse, where + "expected: " + line.op + " s label t");
            vertex(line.args[0]);
            vertex(line.args[2]);
            auto [base, kind] = parse_label(line.args[1]);
            if (label_seen.insert(base).second)
                label_order.emplace_back(base, kind == 'n' ? 'n' : 'p');
            else
                require((kind == 'n') == (std::find(label_order.begin(), label_order.end(),
                                                    std::pair<std::string, char>(base, 'n')) != label_order.end()),
                        ErrorKind::parse, where + "label used both as neutral and paired");
        } else if (line.op == "query") {
            require(line.args.size() == 2, ErrorKind::parse, where + "expected: query s t");
            vertex(line.args[0]);
            vertex(line.args[1]);
        } else {
            fail(ErrorKind::parse, where + "unknown directive '" + line.op + "'");
        }
        lines.push_back(std::move(line));
    }

    LabelAlphabet labels;
    for (auto& [base, kind] : label_order) {
        if (kind == 'n')
            labels.add_neutral(base);
        else
            labels.add_pair(base);
    }
    DyckState state(static_cast<int>(vertex_names.size()), labels, vertex_cap);
    for (const auto& line : lines) {
        if (line.op == "query") {
            auto path = state.query(vertex_ids[line.args[0]], vertex_ids[line.args[1]]);
            if (!path) {
                out << "NO\n";
                continue;
            }
            out << "YES " << vertex_names[path->source];
            for (const auto& e : path->edges)
                out << ' ' << labels.name(e.label) << ' ' << vertex_names[e.dst];
            out << '\n';
            continue;
        }
        LabeledEdge e{vertex_ids[line.args[0]], *labels.find(line.args[1]), vertex_ids[line.args[2]]};
        if (line.op == "ins")
            state.insert_edge(e);
        else
            state.delete_edge(e);
    }
}

} // namespace dynparity
