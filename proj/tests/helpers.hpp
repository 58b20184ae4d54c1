#pragma once

#include <initializer_list>

#include "subtyper/construction.hpp"
#include "subtyper/decls.hpp"

namespace subtyper::testing {

inline DirectedGraph graph_of(std::initializer_list<Label> vertices,
                              std::initializer_list<Edge> edges) {
    DirectedGraph g;
    for (const Label& v : vertices) g.add_vertex(v);
    for (const Edge& e : edges) g.add_edge(e.first, e.second);
    return g;
}

// The seed chain of the single-class hierarchy: N -> C<?> -> O.
inline DirectedGraph seed_chain() {
    return graph_of({}, {{"N", "C<?>"}, {"C<?>", "O"}});
}

inline DirectedGraph diamond() {
    return graph_of({}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

inline constexpr const char* example1_source = "class C<T> {}\n";
inline constexpr const char* example2_source = "class C<T> {}\nclass D<T> {}\n";
inline constexpr const char* example3_source =
    "class C<T> {}\nclass E<T> extends C<T> {}\n";
inline constexpr const char* example4_source =
    "class C {}\nclass E extends C {}\nclass D {}\nclass F<T> extends D {}\n";
inline constexpr const char* motivating_source =
    "class E<T> {}\nclass C<T> extends E<E<T>> {}\nclass D<T> extends C<D<T>> {}\n";

inline SubclassingGraph subclassing_of(const char* source,
                                       const NamingConfig& cfg = {}) {
    return build_subclassing(parse_decls(source), cfg);
}

}  // namespace subtyper::testing
