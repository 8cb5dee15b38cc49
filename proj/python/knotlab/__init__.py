"""Knot diagrams, invariants, constructions and branched-surface certificates."""

from ._core import (
    DomainError,
    InconsistencyError,
    KnotlabError,
    ParseError,
    PlanarDiagram,
    alexander,
    bf_certificate,
    cable2,
    determinant,
    gauss_code,
    identify,
    invariants,
    is_alternating,
    mirror,
    model_certificate,
    paper_family,
    paper_list,
    parse_pd,
    rational_knot,
    reidemeister_perturb,
    run_cli,
    seifert,
    serialize_pd,
    signature,
    torus_2n,
    twist_knot,
    unknot_kink,
    validate,
    whitehead_double,
    writhe,
)

__all__ = [name for name in dir() if not name.startswith("_")]
