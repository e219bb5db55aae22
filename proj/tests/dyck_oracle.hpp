#pragma once

#include <dynparity/dyck.hpp>

#include <set>
#include <vector>

namespace dyck_oracle {

using namespace dynparity;

using Word = std::vector<LabelId>;

// Independent oracle: reduced label words of every path, per vertex pair, by explicit enumeration.
struct PathOracle {
    int size;
    std::vector<std::set<Word>> reduced; // index u * size + v
    std::vector<char> reach;

    PathOracle(const LabelAlphabet& labels, int size, const std::set<LabeledEdge>& edges)
        : size(size), reduced(static_cast<std::size_t>(size) * size), reach(static_cast<std::size_t>(size) * size)
    {
        std::vector<std::vector<LabeledEdge>> out(size);
        for (const auto& e : edges)
            out[e.src].push_back(e);
        for (int u = 0; u < size; ++u) {
            Word word;
            auto walk = [&](auto&& self, int at) -> void {
                reach[u * size + at] = 1;
                Word stack;
                for (LabelId l : word) {
                    if (labels.is_neutral(l))
                        continue;
                    if (!stack.empty() && stack.back() == labels.bar(l))
                        stack.pop_back();
                    else
                        stack.push_back(l);
                }
                reduced[u * size + at].insert(stack);
                for (const auto& e : out[at]) {
                    word.push_back(e.label);
                    self(self, e.dst);
                    word.pop_back();
                }
            };
            walk(walk, u);
        }
    }

    // Concatenation of one word from each pair reduces to the empty word.
    bool pi(const LabelAlphabet& labels, const std::vector<int>& tuple) const
    {
        std::vector<const std::set<Word>*> sets;
        for (std::size_t j = 0; j < tuple.size(); j += 2) {
            sets.push_back(&reduced[tuple[j] * size + tuple[j + 1]]);
            if (sets.back()->empty())
                return false;
        }
        Word acc;
        auto rec = [&](auto&& self, std::size_t j) -> bool {
            if (j == sets.size())
                return is_dyck(labels, acc);
            for (const auto& w : *sets[j]) {
                std::size_t old = acc.size();
                acc.insert(acc.end(), w.begin(), w.end());
                bool ok = self(self, j + 1);
                acc.resize(old);
                if (ok)
                    return true;
            }
            return false;
        };
        return rec(rec, 0);
    }
};

inline bool witness_ok(const DyckState& st, const std::set<LabeledEdge>& aug, const std::vector<int>& tuple,
                const std::vector<DyckPath>& paths)
{
    if (paths.size() * 2 != tuple.size())
        return false;
    Word all;
    for (std::size_t j = 0; j < paths.size(); ++j) {
        if (paths[j].source != tuple[2 * j] || paths[j].sink() != tuple[2 * j + 1] || !path_in(paths[j], aug))
            return false;
        auto w = paths[j].word();
        all.insert(all.end(), w.begin(), w.end());
    }
    return is_dyck(st.labels(), all);
}

struct TableReport {
    int reach_mismatches = 0;
    int pi2_mismatches = 0;
    int bad_witnesses = 0;
    bool clean() const { return reach_mismatches == 0 && pi2_mismatches == 0 && bad_witnesses == 0; }
};

// Full extensional comparison of the maintained tables with the oracle.
inline TableReport compare_tables(const DyckState& st)
{
    TableReport rep;
    auto aug = st.augmented_edges();
    const int size = st.augmented_size();
    PathOracle oracle(st.labels(), size, aug);
    for (int u = 0; u < size; ++u)
        for (int v = 0; v < size; ++v)
            if (st.reaches(u, v) != static_cast<bool>(oracle.reach[u * size + v]))
                ++rep.reach_mismatches;

    // pi2 via inverse lookup of reduced words.
    auto inverse = [&](const Word& w) {
        Word inv;
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            inv.push_back(st.labels().bar(*it));
        return inv;
    };
    for (int u1 = 0; u1 < size; ++u1)
        for (int v1 = 0; v1 < size; ++v1) {
            const auto& r1 = oracle.reduced[u1 * size + v1];
            for (int u2 = 0; u2 < size; ++u2)
                for (int v2 = 0; v2 < size; ++v2) {
                    const auto& r2 = oracle.reduced[u2 * size + v2];
                    bool expect = false;
                    for (const auto& w : r1)
                        if (r2.count(inverse(w))) {
                            expect = true;
                            break;
                        }
                    bool got = st.pi2(u1, v1, u2, v2);
                    if (got != expect)
                        ++rep.pi2_mismatches;
                    if (got) {
                        auto [p1, p2] = st.rho2(u1, v1, u2, v2);
                        if (!witness_ok(st, aug, {u1, v1, u2, v2}, {p1, p2}))
                            ++rep.bad_witnesses;
                    }
                }
        }
    return rep;
}

} // namespace dyck_oracle
