#include "subtyper/product.hpp"

namespace subtyper {

void validate_subclassing(const SubclassingGraph& c, const NamingConfig& cfg) {
    if (!c.graph.has_vertex(cfg.top) || !c.graph.has_vertex(cfg.bottom))
        throw Error("subclassing graph must contain '" + cfg.top + "' and '" +
                    cfg.bottom + "'");
    if (!c.graph.successors(cfg.top).empty())
        throw Error("top class '" + cfg.top + "' must have no superclasses");
    for (const Edge& e : c.graph.edges())
        if (e.second == cfg.bottom)
            throw Error("bottom class '" + cfg.bottom + "' must have no subclasses");
    if (transitive_reduction(c.graph) != c.graph)
        throw Error("subclassing graph must be transitively reduced");
    for (const Label& g : c.generics)
        if (!c.graph.has_vertex(g))
            throw Error("generic class '" + g + "' is not a vertex");
    if (c.generics.count(cfg.top) || c.generics.count(cfg.bottom))
        throw Error("top and bottom classes cannot be generic");
}

DirectedGraph partial_product(const SubclassingGraph& c, const ContainmentGraph& args,
                              const NamingConfig& cfg) {
    if (args.graph.empty())
        throw Error("partial product requires a non-empty argument graph");

    auto instantiate = [&](const Label& cls, const Label& arg) {
        return cls + cfg.open_bracket + arg + cfg.close_bracket;
    };
    auto generic = [&](const Label& cls) { return c.generics.count(cls) != 0; };

    const std::vector<Label> arg_names = args.graph.vertices();

    DirectedGraph out;
    std::set<Label> taken;
    for (const Label& cls : c.graph.vertices())
        if (!generic(cls)) {
            out.add_vertex(cls);
            taken.insert(cls);
        }
    for (const Label& cls : c.graph.vertices())
        if (generic(cls))
            for (const Label& arg : arg_names) {
                Label inst = instantiate(cls, arg);
                if (!taken.insert(inst).second)
                    throw NameCollisionError("instantiation '" + inst +
                                             "' collides with an existing vertex");
                out.add_vertex(inst);
            }

    // Subclassing edges, instantiated per argument; generic-to-generic
    // edges pair the same argument on both sides.
    for (const Edge& e : c.graph.edges()) {
        const auto& [sub, sup] = e;
        if (!generic(sub) && !generic(sup)) {
            out.add_edge(sub, sup);
        } else if (generic(sub) && !generic(sup)) {
            for (const Label& a : arg_names) out.add_edge(instantiate(sub, a), sup);
        } else if (!generic(sub) && generic(sup)) {
            for (const Label& a : arg_names) out.add_edge(sub, instantiate(sup, a));
        } else {
            for (const Label& a : arg_names)
                out.add_edge(instantiate(sub, a), instantiate(sup, a));
        }
    }
    // Argument containment transfers covariantly within each generic class.
    for (const Edge& e : args.graph.edges())
        for (const Label& cls : c.generics)
            out.add_edge(instantiate(cls, e.first), instantiate(cls, e.second));

    return transitive_reduction(out);
}

}  // namespace subtyper
