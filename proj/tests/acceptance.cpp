// Acceptance suite: one criterion per entry, one pass/fail line each.
// Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "subtyper/emit.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

using namespace subtyper;
using testing::subclassing_of;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double time_limit_seconds;  // 0: no stated limit
    std::function<void(Check&)> run;
};

IterationOutcome run(const char* source, int k, ArgMode mode = ArgMode::interval) {
    ConstructionConfig cfg;
    cfg.iterations = k;
    cfg.mode = mode;
    return iterate(subclassing_of(source), cfg);
}

std::size_t reachable_pairs(const DirectedGraph& g) {
    std::size_t count = 0;
    for (const Label& u : g.vertices())
        for (const Label& v : g.vertices())
            if (reaches(g, u, v)) ++count;
    return count;
}

void criterion_example1_shapes(Check& c) {
    IterationOutcome s1 = run(testing::example1_source, 1);
    c.expect(s1.graph == testing::seed_chain(), "S_1 is not the chain N -> C<?> -> O");

    IterationOutcome s2 = run(testing::example1_source, 2);
    std::vector<Label> expected{"C<? <: C<?>>", "C<?>", "C<C<?> <: ?>", "C<C<?>>",
                                "C<N>",         "C<O>", "N",            "O"};
    c.expect(s2.graph.vertices() == expected,
             "S_2 is not O, N, and the six C-instantiations");
}

void criterion_expressiveness_gap(Check& c) {
    IterationOutcome full = run(testing::example1_source, 3, ArgMode::interval);
    IterationOutcome wild = run(testing::example1_source, 3, ArgMode::wildcard);
    c.expect(full.stages[0] == wild.stages[0], "modes differ at k=1");
    c.expect(full.stages[1] == wild.stages[1], "modes differ at k=2");
    c.expect(full.graph.vertex_count() == 32,
             "interval mode S_3 has " + std::to_string(full.graph.vertex_count()) +
                 " vertices, expected 32");
    c.expect(wild.graph.vertex_count() == 23,
             "wildcard mode S_3 has " + std::to_string(wild.graph.vertex_count()) +
                 " vertices, expected 23");
    c.expect(wild.graph.vertex_count() < full.graph.vertex_count(),
             "no strict inequality at k=3");

    // Re-derive both counts from the brute-force quotient of S_2.
    auto quotient = oracle::intervals_by_quotient(full.stages[1]);
    std::size_t expressible = 0;
    for (const Interval& i : quotient)
        if (wildcard_expressible(i, NamingConfig{})) ++expressible;
    c.expect(full.graph.vertex_count() == 2 + quotient.size(),
             "interval count disagrees with the quotient oracle");
    c.expect(wild.graph.vertex_count() == 2 + expressible,
             "wildcard count disagrees with the filtered quotient oracle");
}

void criterion_example23_counts(Check& c) {
    IterationOutcome e2 = run(testing::example2_source, 2);
    c.expect(e2.stages[0].vertex_count() == 4, "example 2 S_1 vertex count");
    c.expect(intervals_of(e2.stages[0]).size() == 9, "example 2 |I(S_1)|");
    c.expect(oracle::intervals_by_quotient(e2.stages[0]).size() == 9,
             "example 2 quotient oracle");
    c.expect(e2.graph.vertex_count() == 20, "example 2 S_2 vertex count");

    IterationOutcome e3 = run(testing::example3_source, 2);
    DirectedGraph chain4 = testing::graph_of(
        {}, {{"N", "E<?>"}, {"E<?>", "C<?>"}, {"C<?>", "O"}});
    c.expect(e3.stages[0] == chain4, "example 3 S_1 is not the 4-chain");
    c.expect(intervals_of(e3.stages[0]).size() == 10, "example 3 |I(S_1)|");
    c.expect(oracle::intervals_by_quotient(e3.stages[0]).size() == 10,
             "example 3 quotient oracle");
    c.expect(e3.graph.vertex_count() == 22, "example 3 S_2 vertex count");
}

void criterion_interval_rtc_correspondence(Check& c) {
    for (std::uint32_t s = 0; s < 200; ++s) {
        oracle::RandomDagSpec spec{2 + s % 7, 0.15 + 0.1 * (s % 8), s};
        DirectedGraph g = oracle::random_dag(spec);
        auto fast = intervals_of(g);
        auto slow = oracle::intervals_by_quotient(g);
        c.expect(fast == slow, "interval sets differ at seed " + std::to_string(s));
        c.expect(fast.size() == reachable_pairs(g),
                 "interval count is not the reachable-pair count at seed " +
                     std::to_string(s));
        if (!c.ok) return;
    }
}

void criterion_containment_equivalence(Check& c) {
    for (std::uint32_t s = 0; s < 200; ++s) {
        oracle::RandomDagSpec spec{2 + s % 5, 0.2 + 0.12 * (s % 6), s + 1000};
        DirectedGraph g = oracle::random_dag(spec);
        auto intervals = intervals_of(g);
        std::vector<Interval> all(intervals.begin(), intervals.end());
        for (const Interval& inner : all)
            for (const Interval& outer : all)
                c.expect(contains(g, inner, outer) ==
                             oracle::contains_by_witness_pairs(g, inner, outer),
                         "containment routes disagree at seed " + std::to_string(s));
        for (const Interval& x : all) {
            c.expect(contains(g, x, x), "containment not reflexive");
            for (const Interval& y : all) {
                if (contains(g, x, y) && contains(g, y, x))
                    c.expect(x == y, "containment not antisymmetric");
                for (const Interval& z : all)
                    if (contains(g, x, y) && contains(g, y, z))
                        c.expect(contains(g, x, z), "containment not transitive");
            }
        }
        if (!c.ok) return;
    }
}

void criterion_reduction_invariance(Check& c) {
    std::vector<DirectedGraph> graphs;
    for (const char* source :
         {testing::example1_source, testing::example2_source, testing::example3_source,
          testing::example4_source}) {
        IterationOutcome out = run(source, 2);
        graphs.push_back(subclassing_of(source).graph);
        graphs.push_back(out.stages[0]);
        graphs.push_back(out.stages[1]);
    }
    for (std::uint32_t s = 0; s < 50; ++s)
        graphs.push_back(oracle::random_dag({2 + s % 7, 0.3 + 0.08 * (s % 7), s + 500}));
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto base = intervals_of(graphs[i]);
        c.expect(base == intervals_of(transitive_reduction(graphs[i])),
                 "reduction changed the intervals of graph " + std::to_string(i));
        c.expect(base == intervals_of(transitive_closure(graphs[i])),
                 "closure changed the intervals of graph " + std::to_string(i));
    }
}

void criterion_self_similarity(Check& c) {
    for (const char* source :
         {testing::example1_source, testing::example2_source, testing::example3_source,
          testing::example4_source})
        for (ArgMode mode : {ArgMode::interval, ArgMode::wildcard}) {
            IterationOutcome out = run(source, 3, mode);
            for (std::size_t i = 0; i + 1 < out.stages.size(); ++i) {
                const DirectedGraph& small = out.stages[i];
                const DirectedGraph& big = out.stages[i + 1];
                for (const Label& v : small.vertices())
                    c.expect(big.has_vertex(v),
                             "vertex '" + v + "' vanished between iterations");
                for (const Label& u : small.vertices())
                    for (const Label& v : small.vertices())
                        if (reaches(small, u, v))
                            c.expect(reaches(big, u, v), "reachability " + u + " -> " +
                                                             v + " was lost");
                if (!c.ok) return;
            }
        }
}

void criterion_covariant_transfer(Check& c) {
    IterationOutcome out = run(testing::example1_source, 3);
    const DirectedGraph& s2 = out.stages[1];
    const DirectedGraph& s3 = out.stages[2];
    ContainmentGraph args = containment_graph(s2, NamingConfig{}, ArgMode::interval);
    c.expect(args.index.size() == 30, "S_2 should carry 30 interval arguments");
    for (const auto& [name1, i1] : args.index)
        for (const auto& [name2, i2] : args.index) {
            Label t1 = "C<" + name1 + ">";
            Label t2 = "C<" + name2 + ">";
            SubtypeAnswer got = query_subtype(s3, t1, t2);
            SubtypeAnswer want = contains(s2, i1, i2) ? SubtypeAnswer::yes
                                                      : SubtypeAnswer::no;
            c.expect(got == want,
                     "query(" + t1 + " <: " + t2 + ") disagrees with containment");
        }
}

void criterion_scope_boundary(Check& c) {
    try {
        parse_decls(testing::motivating_source);
        c.expect(false, "the motivating hierarchy was accepted");
    } catch (const UnsupportedInstantiationError& e) {
        c.expect(e.line() == 2, "error does not point at the offending declaration");
    } catch (const std::exception& e) {
        c.expect(false, std::string("wrong error type: ") + e.what());
    }
}

void criterion_serialization(Check& c) {
    for (const char* source :
         {testing::example1_source, testing::example2_source, testing::example3_source,
          testing::example4_source}) {
        IterationOutcome first = run(source, 2);
        GraphDocument doc = make_document(first.graph, first.report,
                                          ArgMode::interval, 2);
        c.expect(from_json(to_json(doc)) == doc, "JSON round trip is not the identity");

        IterationOutcome second = run(source, 2);
        for (EmitFormat format :
             {EmitFormat::json, EmitFormat::dot, EmitFormat::graphml})
            c.expect(emit(first.graph, first.report, ArgMode::interval, 2, format) ==
                         emit(second.graph, second.report, ArgMode::interval, 2,
                              format),
                     "repeated builds are not byte-identical");
    }
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "example 1: S_1 chain and the eight vertices of S_2", 1.0,
         criterion_example1_shapes},
        {2, "expressiveness gap at k=3 (32 interval vs 23 wildcard)", 5.0,
         criterion_expressiveness_gap},
        {3, "examples 2 and 3: vertex and interval counts", 5.0,
         criterion_example23_counts},
        {4, "interval/RTC correspondence over 200 random DAGs", 30.0,
         criterion_interval_rtc_correspondence},
        {5, "containment equivalence and order laws over 200 random DAGs", 60.0,
         criterion_containment_equivalence},
        {6, "interval invariance under reduction and closure", 0.0,
         criterion_reduction_invariance},
        {7, "self-similarity of successive approximations", 0.0,
         criterion_self_similarity},
        {8, "covariant transfer between containment and subtyping", 0.0,
         criterion_covariant_transfer},
        {9, "scope boundary: nested superclass instantiations rejected", 0.0,
         criterion_scope_boundary},
        {10, "serialization round trip and byte-identical rebuilds", 0.0,
         criterion_serialization},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("unexpected exception: ") + e.what());
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (criterion.time_limit_seconds > 0 && elapsed > criterion.time_limit_seconds)
            check.expect(false, "exceeded the " +
                                    std::to_string(criterion.time_limit_seconds) +
                                    " s limit");
        std::printf("[%s] criterion %2d: %s (%.1f ms)%s%s\n",
                    check.ok ? "PASS" : "FAIL", criterion.id, criterion.title.c_str(),
                    elapsed * 1000.0, check.ok ? "" : " -- ",
                    check.ok ? "" : check.detail.c_str());
        if (!check.ok) ++failures;
    }
    if (failures) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
