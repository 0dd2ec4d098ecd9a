"""The 20-curve desk corpus.

Mostly semistable curves whose squarefree discriminants make their minimal
models and conductors self-certifying, plus three additive-reduction
classics with long-published invariants, plus two deliberately
non-minimal rescalings that exercise the minimization logic.  Labels
follow the usual conductor-based naming for the known curves and carry a
"u2" suffix for rescaled models.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CorpusCurve:
    label: str
    ainvs: tuple


DESK_CORPUS = (
    CorpusCurve("11a3", (0, -1, 1, 0, 0)),
    CorpusCurve("11a1", (0, -1, 1, -10, -20)),
    CorpusCurve("14-type", (1, 0, 1, -1, 0)),
    CorpusCurve("15a8", (1, 1, 1, 0, 0)),
    CorpusCurve("26-type", (1, 0, 1, 0, 0)),
    CorpusCurve("37a1", (0, 0, 1, -1, 0)),
    CorpusCurve("39-type", (1, 1, 0, 1, 0)),
    CorpusCurve("43a1", (0, 1, 1, 0, 0)),
    CorpusCurve("53a1", (1, -1, 1, 0, 0)),
    CorpusCurve("61a1", (1, 0, 0, -2, 1)),
    CorpusCurve("65-type", (1, 0, 0, -1, 0)),
    CorpusCurve("83-type", (1, 1, 1, 1, 0)),
    CorpusCurve("91-type", (0, 0, 1, 1, 0)),
    CorpusCurve("389a1", (0, 1, 1, -2, 0)),
    CorpusCurve("5077a1", (0, 0, 1, -7, 6)),
    CorpusCurve("27a3", (0, 0, 1, 0, 0)),
    CorpusCurve("32a1", (0, 0, 0, -1, 0)),
    CorpusCurve("36a1", (0, 0, 0, 0, 1)),
    CorpusCurve("37a1u2", (0, 0, 8, -16, 0)),
    CorpusCurve("27a3u2", (0, 0, 8, 0, 0)),
)
