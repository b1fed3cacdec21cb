"""Grothendieck groups of a presented category and the relation-lattice checks.

K0(C, 0) is the free group on the indecomposables. Quotienting by the span
of all conflation relations gives K0(C); the span of the AR-flagged ones and
of the rel_t-flagged ones give the sublattices that the generation theorems
compare against.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .lattice import AbelianGroup, IntLattice, quotient
from .model import (CategoryPresentation, Conflation, RelationVector, ValidationReport,
                    relation_vector, single_index, validate)


class InvalidPresentation(ValueError):
    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__("invalid presentation: " + "; ".join(report.violations))


class MissingData(ValueError):
    """A check needs an optional field (hom, shift, tau, ...) that is absent."""

    def __init__(self, fields: Sequence[str], what: str = ""):
        self.fields = tuple(fields)
        msg = "missing " + ", ".join(self.fields)
        super().__init__(f"{what}: {msg}" if what else msg)


@dataclass(frozen=True)
class K0Context:
    presentation: CategoryPresentation
    relations: tuple[RelationVector, ...]
    ar_indices: tuple[int, ...]
    rel_indices: tuple[int, ...]
    lattice_all: IntLattice
    lattice_ar: IntLattice
    lattice_rel: IntLattice
    group_k0: AbelianGroup
    group_rel: AbelianGroup

    @property
    def n(self) -> int:
        return self.presentation.n


@dataclass
class CheckResult:
    holds: bool
    witness: Optional[RelationVector] = None
    # index of the conflation the witness comes from, when it comes from one
    witness_conflation: Optional[int] = None
    notes: list[str] = field(default_factory=list)


def build_context(p: CategoryPresentation) -> K0Context:
    report = validate(p)
    if not report.ok:
        raise InvalidPresentation(report)
    n = p.n
    rels = tuple(relation_vector(c) for c in p.conflations)
    ar_idx = tuple(k for k, c in enumerate(p.conflations) if c.ar)
    rel_idx = tuple(k for k, c in enumerate(p.conflations) if c.rel_t)
    lat_all = IntLattice(n, rels)
    lat_ar = IntLattice(n, [rels[k] for k in ar_idx])
    lat_rel = IntLattice(n, [rels[k] for k in rel_idx])
    return K0Context(p, rels, ar_idx, rel_idx, lat_all, lat_ar, lat_rel,
                     quotient(n, lat_all), quotient(n, lat_rel))


def psi(ctx: K0Context, v: Sequence[int]) -> tuple[int, ...]:
    """Image of v in K0(C), in (torsion, free) coordinates."""
    return ctx.group_k0.project(v)


def check_ar_generation(ctx: K0Context) -> CheckResult:
    """Does the span of AR relations equal the span of all relations?"""
    for k, r in enumerate(ctx.relations):
        if r not in ctx.lattice_ar:
            return CheckResult(False, r, k)
    return CheckResult(True)


def decompose_into_ar(ctx: K0Context, conf: Conflation) -> Optional[list[int]]:
    """Integer coefficients over the AR conflations (in file order) whose
    relations sum to the relation of ``conf``; None if impossible."""
    return ctx.lattice_ar.solve(relation_vector(conf))


def _require(p: CategoryPresentation, names: Sequence[str], what: str):
    missing = [f for f in names if getattr(p, f) is None]
    if missing:
        raise MissingData(missing, what)


def l_vector(ctx: K0Context, x: int) -> RelationVector:
    """[x] + [tau^-1 x] - [middle] for the AR conflation starting at x."""
    p = ctx.presentation
    _require(p, ["tau"], "l_vector")
    if x in p.injectives:
        raise ValueError(f"{p.indecomposables[x]} is injective; no AR conflation starts at it")
    for k in ctx.ar_indices:
        if single_index(p.conflations[k].a) == x:
            return ctx.relations[k]
    raise ValueError(f"no AR conflation starts at {p.indecomposables[x]}")


def l_lattice(ctx: K0Context) -> IntLattice:
    """Span of l_X over non-injective X outside T[1]."""
    p = ctx.presentation
    _require(p, ["cluster_tilting", "shift", "tau"], "relative generation")
    t1 = p.shifted_cluster_tilting()
    gens = [l_vector(ctx, x) for x in range(p.n) if x not in t1 and x not in p.injectives]
    return IntLattice(p.n, gens)


def check_relative_generation(ctx: K0Context) -> CheckResult:
    """Is the rel_t-flagged relation lattice spanned by the l_X, X not in T[1]?"""
    lx = l_lattice(ctx)
    for k in ctx.rel_indices:
        r = ctx.relations[k]
        if r not in lx:
            return CheckResult(False, r, k)
    for b in lx.generators:
        if b not in ctx.lattice_rel:
            return CheckResult(False, b, None,
                               ["an l_X relation is not implied by the rel_t-flagged conflations"])
    return CheckResult(True)


def check_flag_consistency(ctx: K0Context) -> ValidationReport:
    """rel_t flags against what the flagged triangle forces.

    An AR triangle starting at x has connecting map factoring through T[1]
    exactly when x is not in T[1]. A triangle A -> 0 -> C has an isomorphism
    as connecting map, which factors through T[1] exactly when C lies in
    add T[1].
    """
    p = ctx.presentation
    _require(p, ["cluster_tilting", "shift"], "flag consistency")
    t1 = p.shifted_cluster_tilting()
    report = ValidationReport()
    for k, conf in enumerate(p.conflations):
        if conf.ar:
            x = single_index(conf.a)
            expected = x not in t1
            reason = f"start {p.indecomposables[x]} is {'not ' if expected else ''}in T[1]"
        elif not any(conf.b):
            expected = all(i in t1 for i, m in enumerate(conf.c) if m)
            reason = f"end {p.describe(conf.c)} is {'' if expected else 'not '}in add T[1]"
        else:
            continue
        if conf.rel_t != expected:
            report.violations.append(
                f"conflation {k}: rel_t={str(conf.rel_t).lower()} but {reason}")
    return report


@dataclass
class CorollaryResult:
    relative: CheckResult
    ar: CheckResult
    # None when the presentation is a truncation of an infinite category
    locally_finite: Optional[bool]

    @property
    def statements(self) -> tuple[bool, bool, Optional[bool]]:
        return (self.relative.holds, self.ar.holds, self.locally_finite)

    @property
    def holds(self) -> bool:
        return self.relative.holds and self.ar.holds and self.locally_finite is not False


def check_corollary(ctx: K0Context) -> CorollaryResult:
    """Relative generation, AR generation and local finiteness together.

    A finite presentation is locally finite, so both generation statements
    are expected to hold. On a truncation only the first two are computed.
    """
    rel = check_relative_generation(ctx)
    ar = check_ar_generation(ctx)
    return CorollaryResult(rel, ar, None if ctx.presentation.is_truncation else True)
