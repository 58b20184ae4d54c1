#pragma once

#include <set>

#include "subtyper/intervals.hpp"

namespace subtyper {

/// The subclassing relation: a transitively reduced DAG over class
/// names with the top class above every class and the bottom class
/// below, plus the subset of names declared generic.
struct SubclassingGraph {
    DirectedGraph graph;
    std::set<Label> generics;

    bool operator==(const SubclassingGraph&) const = default;
};

/// Throws Error when c violates a SubclassingGraph invariant (missing
/// top/bottom, not reduced, stray generic names, ...).
void validate_subclassing(const SubclassingGraph& c, const NamingConfig& cfg);

/// Partial Cartesian graph product: every generic class is paired with
/// each argument-graph vertex, non-generic classes pass through, and
/// argument containment transfers covariantly to same-class
/// instantiations. The result is transitively reduced.
///
/// Throws NameCollisionError if a rendered instantiation collides with
/// another vertex and Error if args is empty.
DirectedGraph partial_product(const SubclassingGraph& c, const ContainmentGraph& args,
                              const NamingConfig& cfg);

}  // namespace subtyper
