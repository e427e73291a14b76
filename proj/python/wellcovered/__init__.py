"""Well-covered weightings, dimensions and simplicial clique sums of graphs."""

import json

from ._core import (
    DisconnectedGraphError,
    Graph,
    ParseError,
    PreconditionError,
    ResourceLimitError,
    ScsValidationError,
    VertexRangeError,
    WellCoveredError,
    corpus_names,
    count_mis,
    enumerate_mis,
    generate,
    is_chordal,
    is_sccg,
    is_well_covered,
    parse_edge_list,
    read_edge_list,
    scs_compose,
    scs_split,
    wcdim,
    write_edge_list,
)
from . import _core


def well_covered_space(g, field="q", cap=1_000_000):
    """Basis and dimension report as a dict; scalars are strings over Q."""
    return json.loads(_core._well_covered_space_json(g, field, cap))


def simplicial_report(g):
    return json.loads(_core._simplicial_report_json(g))


def sccg_mis_count_formula(g, simplicial_only=False):
    return json.loads(_core._sccg_formula_json(g, simplicial_only))


def run_suite(suite="default", seed=0, threads=1):
    return json.loads(_core._run_suite_json(suite, seed, threads))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
