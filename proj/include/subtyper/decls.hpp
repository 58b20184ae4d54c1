#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "subtyper/product.hpp"

namespace subtyper {

/// One `class Name<P> extends Super<P> {}` declaration. A present
/// super_arg always equals type_param: the only supported instantiation
/// form passes the class's own variable straight through.
struct ClassDecl {
    Label name;
    std::optional<std::string> type_param;
    std::optional<Label> super_name;  // nullopt: extends the top class
    std::optional<std::string> super_arg;

    bool operator==(const ClassDecl&) const = default;
};

struct ClassTable {
    std::vector<ClassDecl> decls;  // declaration order preserved
    std::set<Label> names;

    bool operator==(const ClassTable&) const = default;
};

/// Parses the restricted class-declaration language:
///
///   decl := "class" Ident ("<" Ident ">")?
///           ("extends" Ident ("<" Ident ">")?)? "{}"
///
/// `//` comments and whitespace are ignored. Classes may be referenced
/// before their declaration; `Object`/`Null` are accepted as aliases
/// for the canonical `O`/`N`. Throws ParseError (or a subclass) with
/// line/column on syntax errors, duplicate or reserved names, unknown
/// superclasses, and unsupported superclass instantiations.
ClassTable parse_decls(std::string_view source);

/// Canonical source text; parse_decls(to_source(t)) == t.
std::string to_source(const ClassTable& table);

/// Vertices are the declared classes plus top and bottom; edges are the
/// declared extends edges, classes without one under top, bottom under
/// everything, transitively reduced.
SubclassingGraph build_subclassing(const ClassTable& table, const NamingConfig& cfg);

}  // namespace subtyper
