#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "subtyper/errors.hpp"

namespace subtyper {

/// Canonical type-name string. Non-empty, no leading or trailing
/// whitespace; two labels are equal iff their bytes are.
using Label = std::string;

/// Sequence of vertices visited by a path; a single vertex is the
/// trivial, zero-length path.
using Path = std::vector<Label>;

using Edge = std::pair<Label, Label>;

inline constexpr std::size_t default_path_budget = 1'000'000;
inline constexpr std::size_t default_vertex_budget = 50'000;

/// Finite directed graph over string labels.
///
/// Vertices iterate in lexicographic label order and edges in (from, to)
/// order, so counts and exports are reproducible across runs. Self-loops
/// are rejected; reflexivity lives in `reaches`, never in stored edges.
class DirectedGraph {
public:
    DirectedGraph() = default;

    /// Inserts a vertex; no-op if present. Throws Error on labels that
    /// are empty or carry leading/trailing whitespace.
    void add_vertex(const Label& v);

    /// Inserts an edge, adding missing endpoints. Throws Error on
    /// self-loops. No-op if the edge is already present.
    void add_edge(const Label& from, const Label& to);

    bool has_vertex(const Label& v) const;
    bool has_edge(const Label& from, const Label& to) const;

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return adjacency_.empty(); }

    std::vector<Label> vertices() const;
    std::vector<Edge> edges() const;

    /// Throws UnknownVertexError if v is absent.
    const std::set<Label>& successors(const Label& v) const;

    bool operator==(const DirectedGraph&) const = default;

private:
    std::map<Label, std::set<Label>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// True iff to == from or a directed path from -> to exists.
/// Throws UnknownVertexError if either endpoint is absent.
bool reaches(const DirectedGraph& g, const Label& from, const Label& to);

bool is_dag(const DirectedGraph& g);

/// Same vertices; edge (u, v) present iff u != v and reaches(g, u, v).
DirectedGraph transitive_closure(const DirectedGraph& g);

/// The unique minimal graph with the same reachability relation.
/// Throws CyclicGraphError unless g is a DAG.
DirectedGraph transitive_reduction(const DirectedGraph& g);

/// Every simple path of a DAG exactly once, ordered by length then
/// lexicographically by vertex sequence. Trivial single-vertex paths are
/// included iff `include_trivial`. Throws CyclicGraphError on cycles and
/// BudgetExceededError once more than `max_paths` paths are produced.
std::vector<Path> all_simple_paths(const DirectedGraph& g, bool include_trivial,
                                   std::size_t max_paths = default_path_budget);

}  // namespace subtyper
