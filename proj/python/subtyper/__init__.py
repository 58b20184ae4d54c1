"""Generic subtyping graphs with interval type arguments."""

from ._core import (
    ArgMode,
    BudgetExceededError,
    ClassDecl,
    ClassTable,
    ConstructionConfig,
    ContainmentGraph,
    DirectedGraph,
    EmitFormat,
    Interval,
    IterationOutcome,
    IterationReport,
    IterationRow,
    NamingConfig,
    ParseError,
    SubclassingGraph,
    SubtypeAnswer,
    SubtyperError,
    all_simple_paths,
    build_subclassing,
    containment_graph,
    contains,
    emit,
    intervals_of,
    is_dag,
    is_subpath,
    iterate,
    parse_decls,
    parse_interval_arg,
    parse_subtype_query,
    parse_type_expr,
    partial_product,
    precedes,
    query_subtype,
    reaches,
    render_interval,
    seed,
    to_source,
    transitive_closure,
    transitive_reduction,
    witnesses,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
