"""Finite presentations of Krull-Schmidt extriangulated categories.

A presentation lists the indecomposables and the conflations (E-triangles)
A -> B -> C known to exist, with objects recorded as multiplicity vectors
over the indecomposables. No morphisms are stored: everything downstream
depends only on the terms of each conflation and its flags.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

ObjectVector = tuple[int, ...]
RelationVector = tuple[int, ...]


def zero(n: int) -> ObjectVector:
    return (0,) * n


def unit(n: int, i: int, k: int = 1) -> ObjectVector:
    return tuple(k if j == i else 0 for j in range(n))


def vadd(x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    return tuple(a - b for a, b in zip(x, y))


def vmin(x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    return tuple(min(a, b) for a, b in zip(x, y))


def support(v: Sequence[int]) -> list[int]:
    return [i for i, x in enumerate(v) if x]


def single_index(v: Sequence[int]) -> Optional[int]:
    """Index i if v is exactly one copy of the i-th indecomposable."""
    s = support(v)
    if len(s) == 1 and v[s[0]] == 1:
        return s[0]
    return None


@dataclass(frozen=True)
class Conflation:
    """An E-triangle a -> b -> c, with its Auslander-Reiten and relative flags."""

    a: ObjectVector
    b: ObjectVector
    c: ObjectVector
    ar: bool = False
    rel_t: bool = False

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        object.__setattr__(self, "c", tuple(self.c))

    @property
    def is_trivial(self) -> bool:
        return not (any(self.a) or any(self.b) or any(self.c))


@dataclass(frozen=True)
class CategoryPresentation:
    name: str
    indecomposables: tuple[str, ...]
    conflations: tuple[Conflation, ...] = ()
    projectives: frozenset[int] = frozenset()
    injectives: frozenset[int] = frozenset()
    hom: Optional[tuple[tuple[int, ...], ...]] = None
    ext: Optional[tuple[tuple[int, ...], ...]] = None
    shift: Optional[tuple[int, ...]] = None
    # tau[i] is the index of tau(ind_i), or None where undefined (projectives)
    tau: Optional[tuple[Optional[int], ...]] = None
    generator: Optional[frozenset[int]] = None
    cluster_tilting: Optional[frozenset[int]] = None
    is_truncation: bool = False

    def __post_init__(self):
        object.__setattr__(self, "indecomposables", tuple(self.indecomposables))
        object.__setattr__(self, "conflations", tuple(self.conflations))
        object.__setattr__(self, "projectives", frozenset(self.projectives))
        object.__setattr__(self, "injectives", frozenset(self.injectives))
        for key in ("hom", "ext"):
            m = getattr(self, key)
            if m is not None:
                object.__setattr__(self, key, tuple(tuple(r) for r in m))
        for key in ("shift", "tau"):
            m = getattr(self, key)
            if m is not None:
                object.__setattr__(self, key, tuple(m))
        for key in ("generator", "cluster_tilting"):
            m = getattr(self, key)
            if m is not None:
                object.__setattr__(self, key, frozenset(m))

    @property
    def n(self) -> int:
        return len(self.indecomposables)

    def index(self, name: str) -> int:
        return self.indecomposables.index(name)

    def vector(self, **mult: int) -> ObjectVector:
        """Object vector from name=multiplicity keywords, e.g. ``p.vector(S1=2)``."""
        v = [0] * self.n
        for name, k in mult.items():
            v[self.index(name)] += k
        return tuple(v)

    def unit(self, i: int) -> ObjectVector:
        return unit(self.n, i)

    def shift_inverse(self, i: int) -> int:
        return self.shift.index(i)

    def shifted_cluster_tilting(self) -> frozenset[int]:
        """Indices of T[1]."""
        return frozenset(self.shift[t] for t in self.cluster_tilting)

    def ar_conflations(self) -> list[tuple[int, Conflation]]:
        return [(k, c) for k, c in enumerate(self.conflations) if c.ar]

    def with_conflations(self, conflations) -> CategoryPresentation:
        return replace(self, conflations=tuple(conflations))

    def describe(self, v: Sequence[int]) -> str:
        """Human-readable direct sum, e.g. ``2*S1 + P1``; ``0`` for the zero object."""
        parts = [name if k == 1 else f"{k}*{name}"
                 for name, k in zip(self.indecomposables, v) if k]
        return " + ".join(parts) if parts else "0"

    def describe_relation(self, r: Sequence[int]) -> str:
        out = ""
        for name, k in zip(self.indecomposables, r):
            if not k:
                continue
            sign = "-" if k < 0 else "+"
            term = name if abs(k) == 1 else f"{abs(k)}*{name}"
            out = f"{'-' if k < 0 else ''}{term}" if not out else f"{out} {sign} {term}"
        return out or "0"


@dataclass
class ValidationReport:
    """Violated invariants (in deterministic order) plus notices about skipped checks."""

    violations: list[str] = field(default_factory=list)
    notices: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def relation_vector(conf: Conflation) -> RelationVector:
    """[A] + [C] - [B] in the free group on the indecomposables."""
    return tuple(a + c - b for a, b, c in zip(conf.a, conf.b, conf.c))


def split_conflation(x: Sequence[int], y: Sequence[int]) -> Conflation:
    """The split E-triangle x -> x + y -> y."""
    return Conflation(tuple(x), vadd(x, y), tuple(y), ar=False, rel_t=True)


def direct_sum(left: Conflation, right: Conflation) -> Conflation:
    # the connecting map of a sum factors through T[1] iff both summands' do
    return Conflation(vadd(left.a, right.a), vadd(left.b, right.b), vadd(left.c, right.c),
                      ar=False, rel_t=left.rel_t and right.rel_t)


def cancel_split_summands(conf: Conflation) -> Conflation:
    """Strip identity triangles 0 -> X -> X and X -> X -> 0 off a conflation.

    Common summands of the middle and end term are removed first, then common
    summands of the start and the (reduced) middle. The relation vector does
    not change.
    """
    m = vmin(conf.b, conf.c)
    b, c = vsub(conf.b, m), vsub(conf.c, m)
    m = vmin(b, conf.a)
    return replace(conf, a=vsub(conf.a, m), b=vsub(b, m), c=c)


def opposite(p: CategoryPresentation) -> CategoryPresentation:
    """The opposite presentation: conflations reversed, projectives and
    injectives swapped, Hom and E transposed, tau and shift inverted."""
    n = p.n
    tau = None
    if p.tau is not None:
        inv: list[Optional[int]] = [None] * n
        for i, t in enumerate(p.tau):
            if t is not None and 0 <= t < n:
                inv[t] = i
        tau = tuple(inv)
    shift = None
    if p.shift is not None:
        inv_s = [0] * n
        for i, s in enumerate(p.shift):
            inv_s[s] = i
        shift = tuple(inv_s)

    def transpose(m):
        return None if m is None else tuple(zip(*m))

    confs = tuple(replace(c, a=c.c, c=c.a) for c in p.conflations)
    return replace(p, name=f"{p.name}^op", conflations=confs,
                   projectives=p.injectives, injectives=p.projectives,
                   hom=transpose(p.hom), ext=transpose(p.ext), shift=shift, tau=tau)


def validate(p: CategoryPresentation) -> ValidationReport:
    report = ValidationReport()
    bad = report.violations.append
    n = p.n
    names = p.indecomposables

    for name, k in sorted(Counter(names).items()):
        if k > 1:
            bad(f"duplicate indecomposable name {name!r}")

    def in_range(i):
        return isinstance(i, int) and 0 <= i < n

    for label in ("projectives", "injectives", "generator", "cluster_tilting"):
        s = getattr(p, label)
        if s is None:
            continue
        for i in sorted(s, key=repr):
            if not in_range(i):
                bad(f"{label} refers to index {i} out of range")

    for label in ("hom", "ext"):
        m = getattr(p, label)
        if m is None:
            report.notices.append(f"{label} matrix absent; checks that need it are skipped")
            continue
        if len(m) != n or any(len(r) != n for r in m):
            bad(f"{label} matrix is not {n}x{n}")
            continue
        for i, row in enumerate(m):
            for j, x in enumerate(row):
                if x < 0:
                    bad(f"{label}[{i}][{j}] = {x} is negative")

    if p.shift is not None:
        if len(p.shift) != n or sorted(p.shift) != list(range(n)):
            bad("shift is not a permutation of the indecomposables")

    tau_ok = False
    if p.tau is not None:
        if len(p.tau) != n:
            bad(f"tau has length {len(p.tau)}, expected {n}")
        else:
            tau_ok = True
            for i, t in enumerate(p.tau):
                if t is not None and not in_range(t):
                    bad(f"tau({names[i]}) refers to index {t} out of range")
                    tau_ok = False
            domain = {i for i, t in enumerate(p.tau) if t is not None}
            non_proj = set(range(n)) - set(p.projectives)
            if domain != non_proj:
                for i in sorted(domain - non_proj):
                    bad(f"tau is defined on projective {names[i]}")
                for i in sorted(non_proj - domain):
                    bad(f"tau is undefined on non-projective {names[i]}")
            image = [t for t in p.tau if t is not None]
            for t, k in sorted(Counter(image).items(), key=lambda kv: repr(kv[0])):
                if k > 1 and in_range(t):
                    bad(f"tau is not injective: {k} indecomposables map to {names[t]}")
            non_inj = set(range(n)) - set(p.injectives)
            image_set = {t for t in image if in_range(t)}
            if image_set != non_inj:
                for i in sorted(image_set - non_inj):
                    bad(f"tau takes the injective value {names[i]}")
                for i in sorted(non_inj - image_set):
                    bad(f"non-injective {names[i]} is not in the image of tau")
    else:
        report.notices.append("tau absent; tau checks are skipped")

    ends: dict[int, list[int]] = {}
    starts: dict[int, list[int]] = {}
    for k, conf in enumerate(p.conflations):
        shape_ok = True
        for label in ("a", "b", "c"):
            v = getattr(conf, label)
            if len(v) != n:
                bad(f"conflation {k}: term {label} has length {len(v)}, expected {n}")
                shape_ok = False
            elif any(x < 0 for x in v):
                bad(f"conflation {k}: term {label} has a negative multiplicity")
                shape_ok = False
        if not shape_ok:
            continue
        if conf.is_trivial:
            bad(f"conflation {k}: trivial conflation 0 -> 0 -> 0")
            continue
        if not conf.ar:
            continue
        c = single_index(conf.c)
        a = single_index(conf.a)
        if c is None:
            bad(f"conflation {k}: AR conflation end {p.describe(conf.c)} is not a single indecomposable")
        elif c in p.projectives:
            bad(f"conflation {k}: AR conflation ends at projective {names[c]}")
        else:
            ends.setdefault(c, []).append(k)
        if a is None:
            bad(f"conflation {k}: AR conflation start {p.describe(conf.a)} is not a single indecomposable")
        elif a in p.injectives:
            bad(f"conflation {k}: AR conflation starts at injective {names[a]}")
        else:
            starts.setdefault(a, []).append(k)
        if tau_ok and a is not None and c is not None and p.tau[c] != a:
            bad(f"conflation {k}: AR conflation starts at {names[a]} but tau({names[c]}) "
                f"is {names[p.tau[c]] if p.tau[c] is not None else 'undefined'}")

    for i in range(n):
        if i not in p.projectives:
            hits = ends.get(i, [])
            if not hits:
                bad(f"non-projective {names[i]} has no AR conflation ending at it")
            elif len(hits) > 1:
                bad(f"non-projective {names[i]} has {len(hits)} AR conflations ending at it: {hits}")
        if i not in p.injectives:
            hits = starts.get(i, [])
            if not hits:
                bad(f"non-injective {names[i]} has no AR conflation starting at it")
            elif len(hits) > 1:
                bad(f"non-injective {names[i]} has {len(hits)} AR conflations starting at it: {hits}")

    if p.ext is not None and len(p.ext) == n and all(len(r) == n for r in p.ext):
        for q in sorted(p.projectives):
            if in_range(q) and any(p.ext[i][q] for i in range(n)):
                bad(f"projective {names[q]} has nonzero extensions E({names[q]}, -)")
        for q in sorted(p.injectives):
            if in_range(q) and any(p.ext[q]):
                bad(f"injective {names[q]} has nonzero extensions E(-, {names[q]})")
    return report
