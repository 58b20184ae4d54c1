#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "subtyper/construction.hpp"

namespace subtyper {

enum class EmitFormat { dot, graphml, json };

EmitFormat emit_format_from_string(std::string_view text);

/// Stable on-disk shape of a constructed graph: sorted vertices, edges
/// sorted by (from, to), every endpoint present among the vertices.
struct GraphDocument {
    int format_version = 1;
    std::string mode;  // "interval" or "wildcard"
    int iteration = 0;
    std::vector<Label> vertices;
    std::vector<Edge> edges;
    IterationReport stats;

    bool operator==(const GraphDocument&) const = default;
};

GraphDocument make_document(const DirectedGraph& g, const IterationReport& report,
                            ArgMode mode, int iteration);

std::string to_json(const GraphDocument& doc);

/// Parses and validates a document produced by to_json. Throws Error on
/// malformed input, unknown versions, or edges over missing vertices.
GraphDocument from_json(std::string_view text);

/// DOT digraph, every label quoted. When `previous_vertices` is given,
/// edges whose both endpoints already existed in the previous iteration
/// are colored to expose the self-similar subgraph.
std::string to_dot(const GraphDocument& doc,
                   const std::optional<std::set<Label>>& previous_vertices = std::nullopt);

std::string to_graphml(const GraphDocument& doc);

std::string emit(const DirectedGraph& g, const IterationReport& report, ArgMode mode,
                 int iteration, EmitFormat format);

}  // namespace subtyper
