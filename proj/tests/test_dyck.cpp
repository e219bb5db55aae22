#include <doctest.h>

#include <dynparity/dyck.hpp>
#include <dynparity/error.hpp>

#include "dyck_oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

using namespace dynparity;
using namespace dyck_oracle;

namespace {

// a=0, a'=1, b=2, b'=3, .=4
LabelAlphabet small_alphabet()
{
    LabelAlphabet l;
    l.add_pair("a");
    l.add_pair("b");
    l.add_neutral(".");
    return l;
}

void check_state(const DyckState& st)
{
    auto rep = dyck_oracle::compare_tables(st);
    REQUIRE(rep.reach_mismatches == 0);
    CHECK(rep.pi2_mismatches == 0);
    CHECK(rep.bad_witnesses == 0);

    // Order domain covers the activated elements.
    CHECK(st.order_rank(st.bullet()) >= 0);
    for (const auto& e : st.edges()) {
        CHECK(st.order_rank(e.src) >= 0);
        CHECK(st.order_rank(e.dst) >= 0);
        CHECK(st.order_rank(st.label_vertex(e.label)) >= 0);
        CHECK(st.order_rank(st.label_vertex(st.labels().bar(e.label))) >= 0);
    }
    auto order = st.order();
    std::set<int> ranks;
    for (int x : order)
        ranks.insert(st.order_rank(x));
    CHECK(ranks.size() == order.size());
}

} // namespace

TEST_CASE("Dyck words")
{
    auto l = small_alphabet();
    CHECK(is_dyck(l, {}));
    CHECK(is_dyck(l, {0, 1}));
    CHECK_FALSE(is_dyck(l, {0, 3}));
    CHECK(is_dyck(l, {0, 4, 1}));
    CHECK(is_dyck(l, {1, 0}));
    CHECK(is_dyck(l, {0, 2, 3, 1, 4}));
    CHECK_FALSE(is_dyck(l, {0, 2, 1, 3}));
    CHECK_FALSE(is_dyck(l, {0}));
}

TEST_CASE("initial state")
{
    DyckState st(3, small_alphabet());
    for (LabelId l = 0; l < 5; ++l)
        CHECK(st.reaches(st.label_vertex(l), st.bullet()));
    for (int u = 0; u < st.augmented_size(); ++u)
        for (int v = 0; v < st.augmented_size(); ++v)
            CHECK(st.pi2(u, u, v, v));
    CHECK(st.pi2(st.label_vertex(0), st.bullet(), st.label_vertex(1), st.bullet()));
    CHECK_FALSE(st.pi2(st.label_vertex(0), st.bullet(), st.label_vertex(3), st.bullet()));
    CHECK(st.order() == std::vector<int>{st.bullet()});
    check_state(st);
}

TEST_CASE("single edges and queries")
{
    DyckState st(4, small_alphabet());
    st.insert_edge({0, 0, 1});
    CHECK(st.reaches(0, 1));
    CHECK(st.pi2(0, 1, st.label_vertex(1), st.bullet()));
    CHECK_FALSE(st.query(0, 1));
    auto digest = st.reach_digest();
    st.insert_edge({0, 2, 1});
    CHECK(st.reach_digest() == digest);

    CHECK(st.query(2, 2)->edges.empty());
    CHECK_FALSE(st.query(st.label_vertex(0), st.bullet()));
    auto neutral = st.query(st.label_vertex(4), st.bullet());
    REQUIRE(neutral);
    CHECK(neutral->edges.size() == 1);

    st.insert_edge({1, 4, 2});
    st.insert_edge({2, 1, 3});
    auto w = st.query(0, 3);
    REQUIRE(w);
    CHECK(w->source == 0);
    CHECK(w->sink() == 3);
    CHECK(is_dyck(st.labels(), w->word()));
    CHECK(path_in(*w, st.edges()));
    CHECK_THROWS_AS(st.insert_edge({3, 0, 0}), Error);
    CHECK_THROWS_AS(st.delete_edge({3, 0, 2}), Error);
    check_state(st);

    st.delete_edge({1, 4, 2});
    CHECK_FALSE(st.query(0, 3));
    check_state(st);
}

TEST_CASE("insert then delete restores the tables")
{
    std::mt19937_64 rng(17);
    for (int round = 0; round < 30; ++round) {
        DyckState st(6, small_alphabet());
        for (int k = 0; k < 6; ++k) {
            int a = std::uniform_int_distribution<int>(0, 4)(rng);
            int b = std::uniform_int_distribution<int>(a + 1, 5)(rng);
            st.insert_edge({a, std::uniform_int_distribution<int>(0, 4)(rng), b});
        }
        auto r = st.reach_digest(), p = st.pi2_digest();
        LabeledEdge extra{0, 1, 5};
        if (st.has_edge(extra))
            continue;
        st.insert_edge(extra);
        st.delete_edge(extra);
        CHECK(st.reach_digest() == r);
        CHECK(st.pi2_digest() == p);
    }
}

TEST_CASE("random update scripts agree with path enumeration")
{
    std::mt19937_64 rng(2024);
    int scripts = 0;
    for (int round = 0; round < 200; ++round) {
        const int n = 4 + round % 7;
        LabelAlphabet labels;
        int pairs = 1 + round % 3;
        for (int p = 0; p < pairs; ++p)
            labels.add_pair(std::string(1, static_cast<char>('a' + p)));
        for (int q = 0; q < 6 - 2 * pairs; ++q)
            labels.add_neutral("." + std::to_string(q));
        DyckState st(n, labels);
        std::vector<int> topo(n);
        for (int v = 0; v < n; ++v)
            topo[v] = v;
        std::shuffle(topo.begin(), topo.end(), rng);
        std::set<LabeledEdge> present;
        for (int step = 0; step < 24; ++step) {
            bool remove = !present.empty() && (present.size() >= 14 || std::bernoulli_distribution(0.3)(rng));
            if (remove) {
                auto it = present.begin();
                std::advance(it, std::uniform_int_distribution<int>(0, static_cast<int>(present.size()) - 1)(rng));
                LabeledEdge e = *it;
                present.erase(it);
                st.delete_edge(e);
            } else {
                int a = std::uniform_int_distribution<int>(0, n - 2)(rng);
                int b = std::uniform_int_distribution<int>(a + 1, n - 1)(rng);
                LabeledEdge e{topo[a], std::uniform_int_distribution<int>(0, labels.size() - 1)(rng), topo[b]};
                present.insert(e);
                st.insert_edge(e);
            }
            REQUIRE(st.edges() == present);
            check_state(st);
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    auto got = st.query(s, t);
                    auto brute = dyck_bruteforce(labels, n, present, s, t);
                    CHECK(got.has_value() == brute.has_value());
                    if (got) {
                        CHECK(got->source == s);
                        CHECK(got->sink() == t);
                        CHECK(path_in(*got, present));
                        CHECK(is_dyck(labels, got->word()));
                    }
                }
        }
        ++scripts;
    }
    CHECK(scripts == 200);
}

TEST_CASE("pi_k recursion matches enumeration for k up to 4")
{
    std::mt19937_64 rng(99);
    for (int round = 0; round < 25; ++round) {
        const int n = 5;
        DyckState st(n, small_alphabet());
        for (int k = 0; k < 7; ++k) {
            int a = std::uniform_int_distribution<int>(0, n - 2)(rng);
            int b = std::uniform_int_distribution<int>(a + 1, n - 1)(rng);
            st.insert_edge({a, std::uniform_int_distribution<int>(0, 4)(rng), b});
        }
        auto aug = st.augmented_edges();
        PathOracle oracle(st.labels(), st.augmented_size(), aug);
        std::uniform_int_distribution<int> pick(0, st.augmented_size() - 1);
        std::uniform_int_distribution<int> base(0, n - 1);
        for (int q = 0; q < 150; ++q) {
            int k = 1 + q % 4;
            std::vector<int> tuple;
            for (int j = 0; j < k; ++j) {
                // Mostly reachable pairs, so that true tuples occur.
                int u = q % 5 == 0 ? pick(rng) : base(rng);
                int v = u;
                for (int tries = 0; tries < 4; ++tries) {
                    int c = q % 5 == 0 ? pick(rng) : base(rng);
                    if (st.reaches(u, c))
                        v = c;
                }
                tuple.push_back(u);
                tuple.push_back(v);
            }
            bool expect = oracle.pi(st.labels(), tuple);
            CHECK(st.pi_k(tuple) == expect);
            auto w = st.rho_k(tuple);
            CHECK(w.has_value() == expect);
            if (w)
                CHECK(witness_ok(st, aug, tuple, *w));
        }
        // Two disjoint matched paths.
        DyckState two(4, small_alphabet());
        two.insert_edge({0, 0, 1});
        two.insert_edge({2, 1, 3});
        CHECK(two.pi_k({0, 1, 2, 3, 3, 3, 1, 1}));
    }
}

TEST_CASE("replay format")
{
    std::istringstream in("ins x a y\nins y . z\nquery x z\nins z a' w\nquery x w\ndel y . z\nquery x w\nquery w w\n");
    std::ostringstream out;
    replay_dyck_script(in, out);
    CHECK(out.str() == "NO\nYES x a y . z a' w\nNO\nYES w\n");
    std::istringstream bad("ins x a\n");
    CHECK_THROWS_AS(replay_dyck_script(bad, out), Error);
}

TEST_CASE("vertex cap")
{
    CHECK_THROWS_AS(DyckState(200, small_alphabet()), Error);
}
