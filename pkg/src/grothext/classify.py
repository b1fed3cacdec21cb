"""Dense G-(co)resolving subcategories versus subgroups of K0 containing im(G).

A subgroup H of K0(C) is handled through its preimage in K0(C, 0) = Z^n,
which is a lattice containing every conflation relation. The subcategory
g(H) = {A : [A] in H} is then a membership test in that lattice, and f(X)
is the span of the classes of members of X.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence, Union

from .k0 import K0Context, MissingData, build_context
from .lattice import (DEFAULT_MAX_ORDER, AbelianGroup, IntLattice, UnsupportedSize,
                      enumerate_subgroups, quotient, vecmat)
from .model import CategoryPresentation, opposite, single_index, support, unit, vadd


class PreconditionError(ValueError):
    pass


class SaturationError(ValueError):
    """A coset representative needed by f_map lies outside the sampling box."""


@dataclass
class GeneratorCertificate:
    holds: bool
    # indecomposable -> index of the witnessing conflation, None for members of G
    witnesses: dict[int, Optional[int]]
    uncovered: list[int]


def _generator_set(p: CategoryPresentation, generator) -> frozenset[int]:
    if generator is not None:
        return frozenset(generator)
    if p.generator is None:
        raise MissingData(["generator"], "generator check")
    return p.generator


def is_generator(p: CategoryPresentation, generator: Optional[Iterable[int]] = None
                 ) -> GeneratorCertificate:
    """Check that every indecomposable A has a conflation A1 -> G -> A with G in add(G).

    Members of G witness themselves through 0 -> A -> A. Otherwise a
    conflation whose middle is supported on G must end exactly at A, or at a
    sum containing A whose other summands are already witnessed.
    """
    gen = _generator_set(p, generator)
    witnesses: dict[int, Optional[int]] = {g: None for g in sorted(gen)}
    usable = [(k, c) for k, c in enumerate(p.conflations)
              if all(i in gen for i in support(c.b))]
    for k, c in usable:
        a = single_index(c.c)
        if a is not None and a not in witnesses:
            witnesses[a] = k
    changed = True
    while changed:
        changed = False
        for k, c in usable:
            rest = [i for i in support(c.c) if i not in witnesses]
            if len(rest) == 1:
                witnesses[rest[0]] = k
                changed = True
    uncovered = [i for i in range(p.n) if i not in witnesses]
    return GeneratorCertificate(not uncovered, dict(sorted(witnesses.items())), uncovered)


def is_cogenerator(p: CategoryPresentation, generator=None) -> GeneratorCertificate:
    return is_generator(opposite(p), generator)


@dataclass(frozen=True)
class SubcategorySpec:
    """A subcategory given by a membership test on object vectors.

    ``lattice``, when set, is the preimage in Z^n of the subgroup H with
    X = {A : [A] in H}.
    """

    predicate: Callable[[Sequence[int]], bool]
    lattice: Optional[IntLattice] = None

    def __contains__(self, v) -> bool:
        return bool(self.predicate(tuple(v)))


def generator_lattice(ctx: K0Context, generator=None) -> IntLattice:
    """Preimage in Z^n of im(G): the relations plus the generator unit vectors."""
    gen = _generator_set(ctx.presentation, generator)
    return ctx.lattice_all + IntLattice(ctx.n, [unit(ctx.n, g) for g in sorted(gen)])


def admissible_quotient(ctx: K0Context, generator=None) -> AbelianGroup:
    """K0(C) / im(G)."""
    return quotient(ctx.n, generator_lattice(ctx, generator))


def admissible_subgroups(ctx: K0Context, generator=None,
                         max_order: int = DEFAULT_MAX_ORDER) -> list[IntLattice]:
    """Preimages of all subgroups H with im(G) <= H <= K0(C)."""
    base = generator_lattice(ctx, generator)
    q = quotient(ctx.n, base)
    if not q.is_finite:
        raise UnsupportedSize(
            f"K0/im(G) = {q.describe()} is infinite; use membership queries instead")
    out = []
    for sub in enumerate_subgroups(q, max_order):
        lifted = [vecmat(row, q.lift, ctx.n) for row in sub.basis]
        out.append(base + IntLattice(ctx.n, lifted))
    return out


def subgroup_structure(ctx: K0Context, preimage: IntLattice) -> AbelianGroup:
    """Isomorphism type of H = preimage / relations."""
    coords = [preimage._coords(r) for r in ctx.lattice_all.basis]
    return quotient(preimage.rank, IntLattice(preimage.rank, coords))


def g_map(ctx: K0Context, h: IntLattice, generator=None) -> SubcategorySpec:
    """X = {A : [A] in H}, where H is the image of ``h`` in K0(C)."""
    pre = h + ctx.lattice_all
    gen = _generator_set(ctx.presentation, generator)
    missing = [g for g in sorted(gen) if unit(ctx.n, g) not in pre]
    if missing:
        names = ", ".join(ctx.presentation.indecomposables[g] for g in missing)
        raise PreconditionError(f"H does not contain the class of generator member(s) {names}")
    return SubcategorySpec(pre.__contains__, pre)


def saturation_bound(ctx: K0Context, generator=None) -> int:
    """Box size for f_map: max invariant factor of K0/im(G) times the largest
    multiplicity in a generator witness, plus n."""
    p = ctx.presentation
    q = admissible_quotient(ctx, generator)
    top = max(q.torsion, default=1)
    cert = is_generator(p, generator)
    coord = 1
    for k in cert.witnesses.values():
        if k is not None:
            c = p.conflations[k]
            coord = max(coord, *c.a, *c.b, *c.c)
    return top * coord + ctx.n


def coset_representatives(ctx: K0Context, generator=None) -> list[tuple[int, ...]]:
    """One non-negative vector per element of K0/im(G), entries below its exponent."""
    q = admissible_quotient(ctx, generator)
    if not q.is_finite:
        raise UnsupportedSize(f"K0/im(G) = {q.describe()} is infinite")
    e = max(q.torsion, default=1)
    return [tuple(x % e for x in vecmat(el, q.lift, ctx.n)) for el in q.elements()]


def f_map(ctx: K0Context, x: Union[SubcategorySpec, Iterable[Sequence[int]]],
          bound: Optional[int] = None, generator=None) -> IntLattice:
    """Preimage of the subgroup generated by the classes of members of X and of G.

    An explicit vector list is used as given. For a predicate, members are
    searched among non-negative vectors with entries at most ``bound``: one
    representative per coset of im(G) plus the multiples e * e_i for the
    exponent e of K0/im(G). Membership of a vector only depends on its coset,
    so this spans the same group as the whole box.
    """
    base = generator_lattice(ctx, generator)
    n = ctx.n
    if not isinstance(x, SubcategorySpec):
        return base + IntLattice(n, [tuple(v) for v in x])
    if bound is None:
        bound = saturation_bound(ctx, generator)
    q = quotient(n, base)
    if q.is_finite:
        e = max(q.torsion, default=1)
        if e > bound:
            raise SaturationError(f"exponent {e} of K0/im(G) exceeds the bound {bound}")
        cands = coset_representatives(ctx, generator) + [unit(n, i, e) for i in range(n)]
    else:
        if (bound + 1) ** n > 10**6:
            raise UnsupportedSize(f"box [0, {bound}]^{n} is too large to enumerate")
        cands = list(itertools.product(range(bound + 1), repeat=n))
    return base + IntLattice(n, [v for v in cands if v in x])


@dataclass
class SubgroupEntry:
    preimage: IntLattice
    structure: AbelianGroup  # H itself
    index: int  # [K0 : H]
    verified: bool


@dataclass
class BijectionReport:
    quotient: AbelianGroup
    generator: GeneratorCertificate
    bound: int
    entries: list[SubgroupEntry] = field(default_factory=list)
    distinct: bool = True
    failures: list[str] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return (self.generator.holds and self.distinct and not self.failures
                and all(e.verified for e in self.entries))


def verify_bijection(ctx: K0Context, bound: Optional[int] = None, generator=None,
                     max_order: int = DEFAULT_MAX_ORDER,
                     coresolving: bool = False) -> BijectionReport:
    """Check f(g(H)) = H for every H between im(G) and K0, and that distinct
    H give distinct subcategories.

    With ``coresolving`` the same is done on the opposite presentation, with
    G as a cogenerator.
    """
    if coresolving:
        ctx = build_context(opposite(ctx.presentation))
    cert = is_generator(ctx.presentation, generator)
    q = admissible_quotient(ctx, generator)
    subgroups = admissible_subgroups(ctx, generator, max_order)
    if bound is None:
        bound = saturation_bound(ctx, generator)
    report = BijectionReport(q, cert, bound)
    if not cert.holds:
        names = ", ".join(ctx.presentation.indecomposables[i] for i in cert.uncovered)
        report.failures.append(f"G is not a generator: no witness for {names}")
    reps = coset_representatives(ctx, generator)
    if any(max(r, default=0) > bound for r in reps):
        report.failures.append(f"a coset representative exceeds the bound {bound}")
    signatures = set()
    order = q.order
    for pre in subgroups:
        x = g_map(ctx, pre, generator)
        try:
            ok = f_map(ctx, x, bound, generator) == pre
        except SaturationError as e:
            report.failures.append(str(e))
            ok = False
        signatures.add(tuple(r in x for r in reps))
        members = sum(1 for r in reps if r in x)
        report.entries.append(SubgroupEntry(pre, subgroup_structure(ctx, pre),
                                            order // members, ok))
    report.distinct = len(signatures) == len(subgroups)
    if not report.distinct:
        report.failures.append("two subgroups define the same subcategory")
    return report


@dataclass
class ClosureViolation:
    kind: str  # "extension", "cocone" or "cone"
    conflation: Optional[int]  # None for a padded split conflation
    terms: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]


@dataclass
class ClosureReport:
    violations: list[ClosureViolation] = field(default_factory=list)
    # indecomposable -> a member vector containing it, None if none was found
    density: dict[int, Optional[tuple[int, ...]]] = field(default_factory=dict)

    @property
    def dense(self) -> bool:
        return all(v is not None for v in self.density.values())

    def of_kind(self, kind: str) -> list[ClosureViolation]:
        return [v for v in self.violations if v.kind == kind]

    @property
    def ok(self) -> bool:
        return not self.violations and self.dense


def _small_vectors(n: int, total: int) -> list[tuple[int, ...]]:
    """Non-negative vectors with entry sum at most ``total``."""
    out = [(0,) * n]
    frontier = [(0,) * n]
    for _ in range(total):
        nxt = set()
        for v in frontier:
            for i in range(n):
                nxt.add(vadd(v, unit(n, i)))
        frontier = sorted(nxt)
        out.extend(frontier)
    return out


def check_closure(ctx: K0Context, x: SubcategorySpec, sample_bound: int = 1,
                  generator=None) -> ClosureReport:
    """Sample closure under extensions, CoCones of deflations and Cones of inflations.

    Every conflation A -> B -> C (and the zero conflation) is padded with
    split summands P, R of entry sum at most ``sample_bound`` to
    A+P -> B+P+R -> C+R; whenever two terms are in X the third must be too.
    Density asks for a member containing each indecomposable, tried first as
    A + A1 from a generator witness A1 -> G -> A.
    """
    p = ctx.presentation
    n = p.n
    report = ClosureReport()
    pads = _small_vectors(n, sample_bound)
    base = [(None, (0,) * n, (0,) * n, (0,) * n)]
    base += [(k, c.a, c.b, c.c) for k, c in enumerate(p.conflations)]
    for k, a0, b0, c0 in base:
        for pa in pads:
            a = vadd(a0, pa)
            in_a = a in x
            for pc in pads:
                b, c = vadd(vadd(b0, pa), pc), vadd(c0, pc)
                in_b, in_c = b in x, c in x
                kind = None
                if in_a and in_c and not in_b:
                    kind = "extension"
                elif in_b and in_c and not in_a:
                    kind = "cocone"
                elif in_a and in_b and not in_c:
                    kind = "cone"
                if kind:
                    report.violations.append(ClosureViolation(kind, k, (a, b, c)))

    cert = None
    if generator is not None or p.generator is not None:
        cert = is_generator(p, generator)
    for i in range(n):
        found = None
        if cert is not None and i in cert.witnesses:
            k = cert.witnesses[i]
            cand = unit(n, i) if k is None else vadd(p.conflations[k].c, p.conflations[k].a)
            if cand in x:
                found = cand
        if found is None:
            found = next((v for v in (vadd(unit(n, i), pad) for pad in pads) if v in x), None)
        report.density[i] = found
    return report
