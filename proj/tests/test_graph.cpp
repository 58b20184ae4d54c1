#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace subtyper;
using testing::diamond;
using testing::graph_of;
using testing::seed_chain;

namespace {

// Independent search used to double-check reaches.
bool naive_reaches(const DirectedGraph& g, const Label& u, const Label& v,
                   std::set<Label> seen = {}) {
    if (u == v) return true;
    seen.insert(u);
    for (const Label& s : g.successors(u))
        if (!seen.count(s) && naive_reaches(g, s, v, seen)) return true;
    return false;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("reaches follows directed paths on the seed chain") {
    DirectedGraph g = seed_chain();
    CHECK(reaches(g, "N", "O"));
    CHECK_FALSE(reaches(g, "O", "N"));
    for (const Label& u : g.vertices()) {
        CHECK(reaches(g, u, u));  // trivial zero-length path
        for (const Label& v : g.vertices())
            CHECK(reaches(g, u, v) == naive_reaches(g, u, v));
    }
}

TEST_CASE("reaches rejects unknown vertices") {
    DirectedGraph g = seed_chain();
    CHECK_THROWS_AS(reaches(g, "N", "missing"), UnknownVertexError);
    CHECK_THROWS_AS(reaches(g, "missing", "N"), UnknownVertexError);
}

TEST_CASE("vertices and edges iterate deterministically") {
    DirectedGraph g = graph_of({"z", "a"}, {{"z", "m"}, {"a", "m"}});
    CHECK(g.vertices() == std::vector<Label>{"a", "m", "z"});
    CHECK(g.edges() == std::vector<Edge>{{"a", "m"}, {"z", "m"}});
    g.add_edge("a", "m");  // duplicate is a no-op
    CHECK(g.edge_count() == 2);
}

TEST_CASE("labels must be trimmed and non-empty, self-loops rejected") {
    DirectedGraph g;
    CHECK_THROWS_AS(g.add_vertex(""), Error);
    CHECK_THROWS_AS(g.add_vertex(" x"), Error);
    CHECK_THROWS_AS(g.add_vertex("x "), Error);
    CHECK_THROWS_AS(g.add_edge("x", "x"), Error);
    g.add_vertex("inner space ok");
    CHECK(g.has_vertex("inner space ok"));
}

TEST_CASE("transitive closure of a 3-chain") {
    DirectedGraph g = graph_of({}, {{"a", "b"}, {"b", "c"}});
    DirectedGraph tc = transitive_closure(g);
    CHECK(tc.edges() == std::vector<Edge>{{"a", "b"}, {"a", "c"}, {"b", "c"}});
}

TEST_CASE("transitive closure of an edgeless graph is edgeless") {
    DirectedGraph g = graph_of({"a", "b"}, {});
    CHECK(transitive_closure(g).edge_count() == 0);
    CHECK(transitive_closure(g).vertices() == g.vertices());
}

TEST_CASE("transitive closure of the seed chain has three edges") {
    DirectedGraph tc = transitive_closure(seed_chain());
    CHECK(tc.edge_count() == 3);
    for (const Label& u : tc.vertices())
        for (const Label& v : tc.vertices())
            CHECK(tc.has_edge(u, v) == (u != v && reaches(seed_chain(), u, v)));
}

TEST_CASE("transitive closure handles cycles") {
    DirectedGraph g = graph_of({}, {{"a", "b"}, {"b", "a"}, {"b", "c"}});
    DirectedGraph tc = transitive_closure(g);
    CHECK(tc.edges() == std::vector<Edge>{{"a", "b"},
                                          {"a", "c"},
                                          {"b", "a"},
                                          {"b", "c"}});  // no self-loops stored
}

TEST_CASE("transitive reduction drops the shortcut edge") {
    DirectedGraph g = graph_of({}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(transitive_reduction(g).edges() == std::vector<Edge>{{"a", "b"}, {"b", "c"}});
}

TEST_CASE("transitive reduction is idempotent on an already-reduced chain") {
    DirectedGraph g = graph_of({}, {{"a", "b"}, {"b", "c"}});
    CHECK(transitive_reduction(g) == g);
}

TEST_CASE("transitive reduction of a complete DAG is the Hamiltonian chain") {
    DirectedGraph g;
    std::vector<Label> vs{"a", "b", "c", "d"};
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);

    DirectedGraph reduced = transitive_reduction(g);
    CHECK(reduced.edges() == std::vector<Edge>{{"a", "b"}, {"b", "c"}, {"c", "d"}});

    // Brute-force minimal-edge search over all closure-edge subsets.
    auto same_reachability = [&](const DirectedGraph& h) {
        for (const Label& u : vs)
            for (const Label& v : vs)
                if (reaches(g, u, v) != reaches(h, u, v)) return false;
        return true;
    };
    std::vector<Edge> pool = g.edges();
    std::size_t best = pool.size();
    for (std::size_t mask = 0; mask < (1u << pool.size()); ++mask) {
        DirectedGraph h;
        for (const Label& v : vs) h.add_vertex(v);
        for (std::size_t b = 0; b < pool.size(); ++b)
            if (mask & (1u << b)) h.add_edge(pool[b].first, pool[b].second);
        if (same_reachability(h))
            best = std::min<std::size_t>(best, h.edge_count());
    }
    CHECK(reduced.edge_count() == best);
}

TEST_CASE("transitive reduction refuses cyclic graphs") {
    DirectedGraph g = graph_of({}, {{"a", "b"}, {"b", "a"}});
    CHECK_THROWS_AS(transitive_reduction(g), CyclicGraphError);
}

TEST_CASE("all simple paths of a 3-chain, trivial included") {
    DirectedGraph g = graph_of({}, {{"a", "b"}, {"b", "c"}});
    std::vector<Path> expected{{"a"}, {"b"}, {"c"}, {"a", "b"}, {"b", "c"},
                               {"a", "b", "c"}};
    CHECK(all_simple_paths(g, true) == expected);
}

TEST_CASE("a single vertex has no non-trivial paths") {
    DirectedGraph g = graph_of({"v"}, {});
    CHECK(all_simple_paths(g, false).empty());
    CHECK(all_simple_paths(g, true) == std::vector<Path>{{"v"}});
}

TEST_CASE("the diamond has ten simple paths with trivial ones") {
    // 4 trivial + 4 single edges + the two 2-edge walks a,b,d and a,c,d
    CHECK(all_simple_paths(diamond(), true).size() == 10);
    auto naive = oracle::enumerate_paths(diamond(), true);
    CHECK(all_simple_paths(diamond(), true).size() == naive.size());
}

TEST_CASE("all simple paths enforces the path budget") {
    CHECK_THROWS_AS(all_simple_paths(diamond(), true, 4), BudgetExceededError);
}

TEST_CASE("all simple paths refuses cyclic graphs") {
    DirectedGraph g = graph_of({}, {{"a", "b"}, {"b", "a"}});
    CHECK_THROWS_AS(all_simple_paths(g, true), CyclicGraphError);
}

TEST_CASE("is_dag") {
    CHECK(is_dag(graph_of({}, {{"a", "b"}, {"b", "c"}})));
    CHECK_FALSE(is_dag(graph_of({}, {{"a", "b"}, {"b", "a"}})));
    CHECK(is_dag(DirectedGraph{}));
}

TEST_CASE("closure and reduction preserve reachability on random DAGs") {
    for (std::uint32_t s = 0; s < 30; ++s) {
        DirectedGraph g = oracle::random_dag({7, 0.35, s});
        DirectedGraph tc = transitive_closure(g);
        DirectedGraph tr = transitive_reduction(g);
        CHECK(is_dag(g));
        for (const Label& u : g.vertices())
            for (const Label& v : g.vertices()) {
                bool direct = reaches(g, u, v);
                CHECK(direct == reaches(tc, u, v));
                CHECK(direct == reaches(tr, u, v));
            }
        CHECK(transitive_reduction(tr) == tr);
        CHECK(transitive_closure(tc) == tc);
        for (const Label& u : g.vertices())
            for (const Label& v : g.vertices())
                for (const Label& w : g.vertices())
                    if (reaches(g, u, v) && reaches(g, v, w))
                        CHECK(reaches(g, u, w));  // reaches is transitive
    }
}

TEST_CASE("path enumeration matches the naive recursive enumerator") {
    for (std::uint32_t s = 0; s < 20; ++s) {
        DirectedGraph g = oracle::random_dag({8, 0.3, s});
        for (bool trivial : {false, true}) {
            auto mine = all_simple_paths(g, trivial);
            auto naive = oracle::enumerate_paths(g, trivial);
            std::sort(naive.begin(), naive.end());
            std::vector<Path> sorted = mine;
            std::sort(sorted.begin(), sorted.end());
            CHECK(sorted == naive);
            CHECK(std::is_sorted(mine.begin(), mine.end(),
                                 [](const Path& a, const Path& b) {
                                     return a.size() != b.size() ? a.size() < b.size()
                                                                 : a < b;
                                 }));
        }
    }
}

}  // TEST_SUITE("graph")
