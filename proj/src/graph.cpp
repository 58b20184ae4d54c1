#include "subtyper/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

#include "bitmatrix.hpp"

namespace subtyper {

namespace {

bool valid_label(const Label& v) {
    if (v.empty()) return false;
    return !std::isspace(static_cast<unsigned char>(v.front())) &&
           !std::isspace(static_cast<unsigned char>(v.back()));
}

// Index-based view of a graph for the closure/reduction algorithms.
struct Indexed {
    std::vector<Label> labels;                  // index -> label, sorted
    std::map<Label, std::size_t> index;
    std::vector<std::vector<std::size_t>> out;  // successors by index

    explicit Indexed(const DirectedGraph& g) : labels(g.vertices()) {
        for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
        out.resize(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (const Label& s : g.successors(labels[i]))
                out[i].push_back(index.at(s));
    }

    // Topological order, or empty if the graph has a cycle.
    std::vector<std::size_t> topo_order() const {
        std::vector<std::size_t> indegree(labels.size(), 0);
        for (const auto& succs : out)
            for (std::size_t s : succs) ++indegree[s];
        std::deque<std::size_t> ready;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (indegree[i] == 0) ready.push_back(i);
        std::vector<std::size_t> order;
        order.reserve(labels.size());
        while (!ready.empty()) {
            std::size_t v = ready.front();
            ready.pop_front();
            order.push_back(v);
            for (std::size_t s : out[v])
                if (--indegree[s] == 0) ready.push_back(s);
        }
        if (order.size() != labels.size()) order.clear();
        return order;
    }

    // Strict reachability rows (no reflexive bits). Requires a DAG.
    detail::BitMatrix closure(const std::vector<std::size_t>& topo) const {
        detail::BitMatrix reach(labels.size());
        for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
            for (std::size_t s : out[*it]) {
                reach.set(*it, s);
                reach.merge_row(*it, s);
            }
        }
        return reach;
    }
};

}  // namespace

void DirectedGraph::add_vertex(const Label& v) {
    if (!valid_label(v))
        throw Error("invalid vertex label: '" + v + "'");
    adjacency_.try_emplace(v);
}

void DirectedGraph::add_edge(const Label& from, const Label& to) {
    if (from == to)
        throw Error("self-loop rejected on vertex '" + from + "'");
    add_vertex(from);
    add_vertex(to);
    if (adjacency_[from].insert(to).second) ++edge_count_;
}

bool DirectedGraph::has_vertex(const Label& v) const {
    return adjacency_.count(v) != 0;
}

bool DirectedGraph::has_edge(const Label& from, const Label& to) const {
    auto it = adjacency_.find(from);
    return it != adjacency_.end() && it->second.count(to) != 0;
}

std::vector<Label> DirectedGraph::vertices() const {
    std::vector<Label> out;
    out.reserve(adjacency_.size());
    for (const auto& [v, _] : adjacency_) out.push_back(v);
    return out;
}

std::vector<Edge> DirectedGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (const auto& [v, succs] : adjacency_)
        for (const Label& s : succs) out.emplace_back(v, s);
    return out;
}

const std::set<Label>& DirectedGraph::successors(const Label& v) const {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end()) throw UnknownVertexError(v);
    return it->second;
}

bool reaches(const DirectedGraph& g, const Label& from, const Label& to) {
    if (!g.has_vertex(from)) throw UnknownVertexError(from);
    if (!g.has_vertex(to)) throw UnknownVertexError(to);
    if (from == to) return true;
    std::set<Label> seen{from};
    std::deque<Label> frontier{from};
    while (!frontier.empty()) {
        Label v = frontier.front();
        frontier.pop_front();
        for (const Label& s : g.successors(v)) {
            if (s == to) return true;
            if (seen.insert(s).second) frontier.push_back(s);
        }
    }
    return false;
}

bool is_dag(const DirectedGraph& g) {
    if (g.empty()) return true;
    return !Indexed(g).topo_order().empty();
}

DirectedGraph transitive_closure(const DirectedGraph& g) {
    Indexed ix(g);
    DirectedGraph out;
    for (const Label& v : ix.labels) out.add_vertex(v);
    auto topo = ix.topo_order();
    if (!topo.empty() || g.empty()) {
        auto reach = ix.closure(topo);
        for (std::size_t i = 0; i < ix.labels.size(); ++i)
            for (std::size_t j = 0; j < ix.labels.size(); ++j)
                if (reach.get(i, j)) out.add_edge(ix.labels[i], ix.labels[j]);
        return out;
    }
    // Cyclic input: per-vertex search instead of the DAG recurrence.
    for (const Label& u : ix.labels)
        for (const Label& v : ix.labels)
            if (u != v && reaches(g, u, v)) out.add_edge(u, v);
    return out;
}

DirectedGraph transitive_reduction(const DirectedGraph& g) {
    Indexed ix(g);
    auto topo = ix.topo_order();
    if (topo.empty() && !g.empty())
        throw CyclicGraphError("transitive reduction requires an acyclic graph");
    auto reach = ix.closure(topo);
    auto into = reach.transposed();
    DirectedGraph out;
    for (const Label& v : ix.labels) out.add_vertex(v);
    const std::size_t n = ix.labels.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // (i, j) is a cover edge iff j is reachable and no witness w
            // sits strictly between them.
            if (reach.get(i, j) && !reach.rows_intersect(i, into, j))
                out.add_edge(ix.labels[i], ix.labels[j]);
        }
    }
    return out;
}

std::vector<Path> all_simple_paths(const DirectedGraph& g, bool include_trivial,
                                   std::size_t max_paths) {
    if (!is_dag(g))
        throw CyclicGraphError("simple path enumeration requires an acyclic graph");
    std::vector<Path> paths;
    auto note = [&](const Path& p) {
        if (paths.size() >= max_paths)
            throw BudgetExceededError("simple path budget of " +
                                      std::to_string(max_paths) + " paths exceeded");
        paths.push_back(p);
    };
    Path current;
    auto extend = [&](auto&& self, const Label& v) -> void {
        current.push_back(v);
        if (current.size() > 1 || include_trivial) note(current);
        for (const Label& s : g.successors(v)) self(self, s);
        current.pop_back();
    };
    for (const Label& v : g.vertices()) extend(extend, v);
    std::sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return paths;
}

}  // namespace subtyper
