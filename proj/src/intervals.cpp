#include "subtyper/intervals.hpp"

#include <algorithm>
#include <deque>

#include "arg_parser.hpp"
#include "bitmatrix.hpp"

namespace subtyper {

namespace {

void require_interval(const DirectedGraph& g, const Interval& i) {
    if (!g.has_vertex(i.lo) || !g.has_vertex(i.hi) || !reaches(g, i.lo, i.hi))
        throw InvalidIntervalError("[" + i.lo + " - " + i.hi +
                                   "] is not an interval of the graph");
}

}  // namespace

std::string to_string(ArgMode mode) {
    return mode == ArgMode::interval ? "interval" : "wildcard";
}

ArgMode arg_mode_from_string(std::string_view text) {
    if (text == "interval") return ArgMode::interval;
    if (text == "wildcard") return ArgMode::wildcard;
    throw Error("unknown argument mode: '" + std::string(text) + "'");
}

std::set<Interval> intervals_of(const DirectedGraph& g) {
    if (!is_dag(g))
        throw CyclicGraphError("interval extraction requires an acyclic graph");
    std::set<Interval> out;
    for (const Label& v : g.vertices()) out.insert({v, v});
    for (const Edge& e : transitive_closure(g).edges()) out.insert({e.first, e.second});
    return out;
}

std::vector<Path> witnesses(const DirectedGraph& g, const Interval& i,
                            std::size_t max_paths) {
    if (!is_dag(g))
        throw CyclicGraphError("witness enumeration requires an acyclic graph");
    require_interval(g, i);
    if (i.lo == i.hi) return {Path{i.lo}};
    // Restrict the search to vertices that can still reach the target.
    std::set<Label> useful{i.hi};
    std::deque<Label> frontier{i.hi};
    std::map<Label, std::set<Label>> preds;
    for (const Edge& e : g.edges()) preds[e.second].insert(e.first);
    while (!frontier.empty()) {
        Label v = frontier.front();
        frontier.pop_front();
        for (const Label& p : preds[v])
            if (useful.insert(p).second) frontier.push_back(p);
    }
    std::vector<Path> paths;
    Path current;
    auto extend = [&](auto&& self, const Label& v) -> void {
        current.push_back(v);
        if (v == i.hi) {
            if (paths.size() >= max_paths)
                throw BudgetExceededError("witness budget of " +
                                          std::to_string(max_paths) + " paths exceeded");
            paths.push_back(current);
        } else {
            for (const Label& s : g.successors(v))
                if (useful.count(s)) self(self, s);
        }
        current.pop_back();
    };
    extend(extend, i.lo);
    std::sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return paths;
}

bool is_subpath(const Path& inner, const Path& outer) {
    if (inner.empty()) return true;
    return std::search(outer.begin(), outer.end(), inner.begin(), inner.end()) !=
           outer.end();
}

bool contains(const DirectedGraph& g, const Interval& inner, const Interval& outer) {
    require_interval(g, inner);
    require_interval(g, outer);
    return reaches(g, outer.lo, inner.lo) && reaches(g, inner.hi, outer.hi);
}

bool precedes(const DirectedGraph& g, const Interval& first, const Interval& second) {
    require_interval(g, first);
    require_interval(g, second);
    return reaches(g, first.hi, second.lo);
}

bool wildcard_expressible(const Interval& i, const NamingConfig& cfg) {
    return i.lo == cfg.bottom || i.hi == cfg.top || i.lo == i.hi;
}

std::string render_interval(const Interval& i, const NamingConfig& cfg) {
    if (i.lo == cfg.bottom && i.hi == cfg.top) return cfg.wildcard;
    if (i.lo == i.hi) return i.lo;
    if (i.lo == cfg.bottom) return cfg.lower_bounded_prefix + i.hi;
    if (i.hi == cfg.top) return i.lo + cfg.upper_bounded_suffix;
    return i.lo + cfg.interval_separator + i.hi;
}

Interval parse_interval_arg(std::string_view text, const NamingConfig& cfg) {
    detail::Cursor c{text};
    Interval arg = detail::parse_arg_prefix(c, cfg);
    detail::expect_end(c);
    return arg;
}

ContainmentGraph containment_graph(const DirectedGraph& g, const NamingConfig& cfg,
                                   ArgMode mode, std::size_t max_vertices) {
    std::vector<Interval> kept;
    for (const Interval& i : intervals_of(g))
        if (mode == ArgMode::interval || wildcard_expressible(i, cfg))
            kept.push_back(i);
    if (kept.size() > max_vertices)
        throw BudgetExceededError("containment graph would have " +
                                  std::to_string(kept.size()) +
                                  " vertices, exceeding the budget of " +
                                  std::to_string(max_vertices));

    ContainmentGraph out;
    std::vector<Label> names(kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) {
        names[k] = render_interval(kept[k], cfg);
        if (!out.index.emplace(names[k], kept[k]).second)
            throw Error("interval rendering is not injective: '" + names[k] + "'");
        out.graph.add_vertex(names[k]);
    }

    // Strict containment is a partial order, hence already transitive;
    // reduce it directly over the kept intervals.
    const DirectedGraph closed = transitive_closure(g);
    auto reach = [&](const Label& a, const Label& b) {
        return a == b || closed.has_edge(a, b);
    };
    const std::size_t n = kept.size();
    detail::BitMatrix rel(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && reach(kept[b].lo, kept[a].lo) && reach(kept[a].hi, kept[b].hi))
                rel.set(a, b);
    auto into = rel.transposed();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (rel.get(a, b) && !rel.rows_intersect(a, into, b))
                out.graph.add_edge(names[a], names[b]);
    return out;
}

}  // namespace subtyper
