#include "subtyper/construction.hpp"

#include "arg_parser.hpp"

namespace subtyper {

namespace {

IterationRow make_row(const DirectedGraph& s, int iteration, ArgMode mode,
                      const NamingConfig& naming) {
    IterationRow row;
    row.iteration = iteration;
    row.mode = mode;
    row.vertex_count = s.vertex_count();
    row.edge_count = s.edge_count();
    for (const Interval& i : intervals_of(s)) {
        ++row.interval_count;
        if (wildcard_expressible(i, naming)) ++row.wildcard_expressible_count;
    }
    return row;
}

}  // namespace

DirectedGraph seed(const SubclassingGraph& c, const NamingConfig& cfg) {
    ContainmentGraph start;
    Label wild = render_interval({cfg.bottom, cfg.top}, cfg);
    start.graph.add_vertex(wild);
    start.index.emplace(wild, Interval{cfg.bottom, cfg.top});
    return partial_product(c, start, cfg);
}

IterationOutcome iterate(const SubclassingGraph& c, const ConstructionConfig& cfg) {
    IterationOutcome out;
    if (cfg.iterations <= 0) return out;

    auto admit = [&](const DirectedGraph& s, int iteration) {
        if (s.vertex_count() > cfg.vertex_budget)
            throw IterationBudgetError("subtyping graph has " +
                                           std::to_string(s.vertex_count()) +
                                           " vertices, exceeding the budget of " +
                                           std::to_string(cfg.vertex_budget),
                                       iteration, out.report);
        out.report.rows.push_back(make_row(s, iteration, cfg.mode, cfg.naming));
        out.stages.push_back(s);
    };

    admit(seed(c, cfg.naming), 1);
    for (int i = 2; i <= cfg.iterations; ++i) {
        try {
            ContainmentGraph args = containment_graph(out.stages.back(), cfg.naming,
                                                      cfg.mode, cfg.vertex_budget);
            admit(partial_product(c, args, cfg.naming), i);
        } catch (const IterationBudgetError&) {
            throw;
        } catch (const BudgetExceededError& e) {
            throw IterationBudgetError(e.what(), i, out.report);
        }
    }
    out.graph = out.stages.back();
    return out;
}

Label parse_type_expr(std::string_view text, const NamingConfig& cfg) {
    detail::Cursor c{text};
    Label label = detail::parse_type_prefix(c, cfg);
    detail::expect_end(c);
    return label;
}

std::pair<Label, Label> parse_subtype_query(std::string_view text,
                                            const NamingConfig& cfg) {
    detail::Cursor c{text};
    Label lhs = detail::parse_type_prefix(c, cfg);
    if (!detail::match_token(c, "<:"))
        detail::fail(c, "expected '<:' between the two types");
    Label rhs = detail::parse_type_prefix(c, cfg);
    detail::expect_end(c);
    return {lhs, rhs};
}

std::string to_string(SubtypeAnswer answer) {
    switch (answer) {
        case SubtypeAnswer::yes: return "true";
        case SubtypeAnswer::no: return "false";
        case SubtypeAnswer::unknown: return "unknown";
    }
    return "unknown";
}

SubtypeAnswer query_subtype(const DirectedGraph& s, const Label& t1, const Label& t2) {
    if (!s.has_vertex(t1) || !s.has_vertex(t2)) return SubtypeAnswer::unknown;
    return reaches(s, t1, t2) ? SubtypeAnswer::yes : SubtypeAnswer::no;
}

}  // namespace subtyper
