"""Hom-dimension checks of AR flags and Hom supports."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .k0 import MissingData
from .model import CategoryPresentation, single_index

CONFIRMED = "confirmed"
REFUTED = "refuted"
SKIPPED = "skipped"


@dataclass
class Verdict:
    conflation: int
    status: str
    # for refutations: the indecomposable A where the criterion fails and the defect there
    at: Optional[int] = None
    defect: Optional[int] = None
    reason: str = ""


@dataclass
class ARReport:
    verdicts: list[Verdict] = field(default_factory=list)
    support_out: Optional[list[int]] = None  # |SuppHom(A, -)|
    support_in: Optional[list[int]] = None  # |SuppHom(-, A)|

    @property
    def all_confirmed(self) -> bool:
        return all(v.status == CONFIRMED for v in self.verdicts)


def hom_pairing(hom, a: int, v: Sequence[int]) -> int:
    """dim Hom(ind_a, V) for an object vector V."""
    return sum(k * hom[a][j] for j, k in enumerate(v) if k)


def defect(p: CategoryPresentation, a: int, conf) -> int:
    return (hom_pairing(p.hom, a, conf.a) + hom_pairing(p.hom, a, conf.c)
            - hom_pairing(p.hom, a, conf.b))


def verify_ar_homdim(p: CategoryPresentation) -> ARReport:
    """Test each AR-flagged triangle X -> Y -> Z against the Hom defect criterion.

    For an AR triangle, [A,X] + [A,Z] - [A,Y] is nonzero exactly when A is Z or
    Z[-1]. Needs the Hom matrix and the shift; otherwise every verdict is
    skipped.
    """
    report = ARReport()
    if p.hom is not None:
        report.support_out, report.support_in = _support_sizes(p)
    for k, conf in p.ar_conflations():
        if p.hom is None or p.shift is None:
            missing = [f for f in ("hom", "shift") if getattr(p, f) is None]
            report.verdicts.append(Verdict(k, SKIPPED, reason="missing " + ", ".join(missing)))
            continue
        z = single_index(conf.c)
        if z is None:
            report.verdicts.append(Verdict(k, SKIPPED, reason="end term is not indecomposable"))
            continue
        exceptions = {z, p.shift_inverse(z)}
        verdict = Verdict(k, CONFIRMED)
        for a in range(p.n):
            d = defect(p, a, conf)
            if (d != 0) != (a in exceptions):
                verdict = Verdict(k, REFUTED, a, d,
                                  f"defect {d} at {p.indecomposables[a]}")
                break
        report.verdicts.append(verdict)
    return report


def _support_sizes(p):
    n = p.n
    out = [sum(1 for j in range(n) if p.hom[i][j]) for i in range(n)]
    inn = [sum(1 for i in range(n) if p.hom[i][j]) for j in range(n)]
    return out, inn


def supports(p: CategoryPresentation) -> ARReport:
    """Sizes of SuppHom(A, -) and SuppHom(-, A) for every indecomposable A."""
    if p.hom is None:
        raise MissingData(["hom"], "supports")
    out, inn = _support_sizes(p)
    return ARReport(support_out=out, support_in=inn)
