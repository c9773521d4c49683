"""Neural-symbolic design patterns: check, refine, combine and render."""

from ._core import (
    Combination,
    Library,
    NesyError,
    Network,
    Pattern,
    Refinement,
    Taxonomy,
    check_refinement,
    combine,
    default_taxonomy,
    emit_abox,
    emit_dot,
    emit_dsl,
    emit_json,
    find_homomorphisms,
    infer_refinement,
    isomorphic,
    load_library,
    parse_taxonomy,
    run_cli,
)

__all__ = [
    "Combination",
    "Library",
    "NesyError",
    "Network",
    "Pattern",
    "Refinement",
    "Taxonomy",
    "check_refinement",
    "combine",
    "default_taxonomy",
    "emit_abox",
    "emit_dot",
    "emit_dsl",
    "emit_json",
    "find_homomorphisms",
    "infer_refinement",
    "isomorphic",
    "load_library",
    "parse_taxonomy",
    "run_cli",
]
