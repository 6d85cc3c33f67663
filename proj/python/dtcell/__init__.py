"""Donaldson-Thomas transformations of double Bruhat cells of GL_n."""

import json

from ._dtcell import (
    DTCellError,
    Seed,
    amalgamate,
    dt_pullback,
    face_labels,
    greedy_pair_word,
    is_reduced,
    quiver_arrows,
    reduced_words,
    tropical_dt_matrix,
)
from . import _dtcell

__all__ = [
    "DTCellError",
    "Seed",
    "amalgamate",
    "closed_form",
    "dt_pullback",
    "dt_report",
    "dt_sequence",
    "face_labels",
    "graph",
    "greedy_pair_word",
    "is_reduced",
    "quiver_arrows",
    "reduced_words",
    "tropical_dt_matrix",
]


def graph(n, letters):
    """Faces, vertices, edges and strands of the bipartite graph of a word."""
    return json.loads(_dtcell.graph_json(n, list(letters)))


def dt_report(n, letters, seed=2024, specializations=3):
    """Verification report with degree matrix, plan and check verdicts."""
    return json.loads(_dtcell.dt_report_json(n, list(letters), seed, specializations))


def dt_sequence(n, letters):
    """Mutation plan realizing DT on the quiver of the word."""
    return json.loads(_dtcell.dt_sequence_json(n, list(letters)))


def closed_form(n, letters):
    """Closed-form DT of the symbolic amalgamation and its H x H check."""
    return json.loads(_dtcell.closed_form_json(n, list(letters)))
