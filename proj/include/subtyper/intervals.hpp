#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "subtyper/graph.hpp"

namespace subtyper {

/// Ordered endpoint pair [lo - hi] of a graph interval. Valid only
/// relative to a host graph in which hi is reachable from lo.
struct Interval {
    Label lo;
    Label hi;
    auto operator<=>(const Interval&) const = default;
};

/// Rendering constants for interval argument strings and instantiation
/// brackets. Delimiters must stay non-empty and mutually distinguishable
/// so rendering is injective over the intervals of any one graph.
struct NamingConfig {
    std::string wildcard = "?";
    std::string lower_bounded_prefix = "? <: ";
    std::string upper_bounded_suffix = " <: ?";
    std::string interval_separator = " - ";
    std::string open_bracket = "<";
    std::string close_bracket = ">";
    Label top = "O";
    Label bottom = "N";
};

/// Which interval arguments a constructed graph may use.
enum class ArgMode { interval, wildcard };

std::string to_string(ArgMode mode);
ArgMode arg_mode_from_string(std::string_view text);

/// Graph of the containment relation over rendered interval arguments.
/// `graph` is a transitively reduced DAG; an edge a1 -> a2 means the
/// interval behind a1 is strictly contained in the one behind a2.
struct ContainmentGraph {
    DirectedGraph graph;
    std::map<Label, Interval> index;  // rendered argument -> interval
};

/// Exactly { [u - v] : reaches(g, u, v) }, trivial [v - v] included.
/// Throws CyclicGraphError on cycles.
std::set<Interval> intervals_of(const DirectedGraph& g);

/// All simple paths of g from i.lo to i.hi, ordered by length then
/// lexicographically. Throws InvalidIntervalError when the endpoint pair
/// defines no interval of g (disconnected vertices).
std::vector<Path> witnesses(const DirectedGraph& g, const Interval& i,
                            std::size_t max_paths = default_path_budget);

/// True iff inner occurs as a contiguous block inside outer, in order.
/// The empty list is a subpath of everything.
bool is_subpath(const Path& inner, const Path& outer);

/// Containment order on intervals of an acyclic g: inner fits inside
/// outer iff outer.lo reaches inner.lo and inner.hi reaches outer.hi.
bool contains(const DirectedGraph& g, const Interval& inner, const Interval& outer);

/// True iff first.hi reaches second.lo. Exposed for completeness; the
/// construction pipeline does not consume it.
bool precedes(const DirectedGraph& g, const Interval& first, const Interval& second);

/// The forms `?`, `? <: T`, `T <: ?` and exact T: lower endpoint at
/// bottom, upper endpoint at top, or equal endpoints.
bool wildcard_expressible(const Interval& i, const NamingConfig& cfg);

std::string render_interval(const Interval& i, const NamingConfig& cfg);

/// Inverse of render_interval over intervals of the current graph (also
/// accepts whitespace-normalized spellings). Throws ParseError with a
/// position on malformed input.
Interval parse_interval_arg(std::string_view text, const NamingConfig& cfg);

/// Builds the containment graph over the interval arguments of g. In
/// wildcard mode only wildcard-expressible intervals are kept; edges are
/// the transitive reduction of strict containment on the kept set.
ContainmentGraph containment_graph(const DirectedGraph& g, const NamingConfig& cfg,
                                   ArgMode mode,
                                   std::size_t max_vertices = default_vertex_budget);

}  // namespace subtyper
