#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "subtyper/product.hpp"

namespace subtyper {

struct ConstructionConfig {
    int iterations = 1;  // number of product applications; S_1 is the seed
    ArgMode mode = ArgMode::interval;
    NamingConfig naming;
    std::size_t vertex_budget = default_vertex_budget;
    // Cap for simple-path enumeration (witness queries over the result);
    // the pipeline itself decides containment by reachability and never
    // enumerates paths.
    std::size_t path_budget = default_path_budget;
};

/// Statistics for one constructed approximation S_i, taken on the
/// transitively reduced graph.
struct IterationRow {
    int iteration = 0;
    ArgMode mode = ArgMode::interval;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::size_t interval_count = 0;              // |I(S_i)|
    std::size_t wildcard_expressible_count = 0;  // always <= interval_count

    bool operator==(const IterationRow&) const = default;
};

struct IterationReport {
    std::vector<IterationRow> rows;

    bool operator==(const IterationReport&) const = default;
};

struct IterationOutcome {
    DirectedGraph graph;                // the final S_k
    IterationReport report;             // one row per constructed S_i
    std::vector<DirectedGraph> stages;  // S_1 .. S_k
};

/// Budget abort that keeps the rows completed so far, so callers can
/// degrade gracefully.
class IterationBudgetError : public BudgetExceededError {
public:
    IterationBudgetError(const std::string& message, int iteration,
                         IterationReport partial)
        : BudgetExceededError(message + " (iteration " + std::to_string(iteration) + ")"),
          iteration_(iteration),
          partial_(std::move(partial)) {}

    int iteration() const { return iteration_; }
    const IterationReport& partial_report() const { return partial_; }

private:
    int iteration_;
    IterationReport partial_;
};

/// S_1: the subclassing graph with every generic class instantiated at
/// the default argument and non-generic classes untouched.
DirectedGraph seed(const SubclassingGraph& c, const NamingConfig& cfg);

/// Runs the iterative construction: S_1 = seed, then k-1 rounds of
/// containment-graph extraction followed by the partial product.
/// iterations == 0 yields an empty outcome.
IterationOutcome iterate(const SubclassingGraph& c, const ConstructionConfig& cfg);

/// Canonical vertex label for a ground type expression; whitespace
/// around delimiters is normalized and alias names resolved. Idempotent
/// on rendered labels. Throws ParseError with a position.
Label parse_type_expr(std::string_view text, const NamingConfig& cfg);

/// Splits a query of the form "T1 <: T2" into canonical labels.
std::pair<Label, Label> parse_subtype_query(std::string_view text,
                                            const NamingConfig& cfg);

enum class SubtypeAnswer { yes, no, unknown };

std::string to_string(SubtypeAnswer answer);

/// Reachability query over a constructed approximation. `unknown` when
/// either type has not materialized at this depth; absence is a result,
/// not an error.
SubtypeAnswer query_subtype(const DirectedGraph& s, const Label& t1, const Label& t2);

}  // namespace subtyper
