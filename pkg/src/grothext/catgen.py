"""Example presentations.

* ``gen_mod_dynkin``: mod kQ for a Dynkin quiver Q, knitted from the
  projectives with the mesh rule.
* ``gen_cluster_A``: the cluster category of type A_n as diagonals of an
  (n+3)-gon.
"""
from __future__ import annotations

from typing import Optional, Sequence

from .model import CategoryPresentation, Conflation, unit, vadd

POSITIVE_ROOTS = {"E": {6: 36, 7: 63, 8: 120}}


class InvalidDynkinDatum(ValueError):
    pass


def positive_root_count(kind: str, n: int) -> int:
    if kind == "A":
        return n * (n + 1) // 2
    if kind == "D":
        return n * (n - 1)
    return POSITIVE_ROOTS["E"][n]


def dynkin_edges(kind: str, n: int) -> list[tuple[int, int]]:
    """Edges of the Dynkin diagram on vertices 1..n."""
    if kind == "A" and n >= 1:
        return [(i, i + 1) for i in range(1, n)]
    if kind == "D" and n >= 4:
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    if kind == "E" and n in (6, 7, 8):
        return [(i, i + 1) for i in range(1, n - 1)] + [(3, n)]
    raise InvalidDynkinDatum(f"no Dynkin diagram {kind}_{n}")


def orient(kind: str, n: int, orientation: str = "linear") -> list[tuple[int, int]]:
    """Arrows (source, target) of the quiver.

    ``orientation`` is ``linear`` (every edge (u, v) as u -> v),
    ``alternating`` (every vertex a sink or a source), or one character per
    edge in :func:`dynkin_edges` order: ``>`` keeps u -> v, ``<`` flips it.
    """
    edges = dynkin_edges(kind, n)
    if orientation == "linear":
        return list(edges)
    if orientation == "alternating":
        parity = {1: 0}
        changed = True
        while changed:
            changed = False
            for u, v in edges:
                if u in parity and v not in parity:
                    parity[v] = 1 - parity[u]
                    changed = True
                elif v in parity and u not in parity:
                    parity[u] = 1 - parity[v]
                    changed = True
        return [(u, v) if parity[u] == 0 else (v, u) for u, v in edges]
    if len(orientation) != len(edges) or set(orientation) - set("<>"):
        raise InvalidDynkinDatum(
            f"orientation {orientation!r}: expected 'linear', 'alternating' or "
            f"{len(edges)} characters from '<>'")
    return [(u, v) if ch == ">" else (v, u) for (u, v), ch in zip(edges, orientation)]


def _reach(arrows, n, reverse=False) -> list[tuple[int, ...]]:
    """Row i: indicator of vertices reachable from i by a path (to i if reverse)."""
    succ = {i: [] for i in range(1, n + 1)}
    for s, t in arrows:
        if reverse:
            succ[t].append(s)
        else:
            succ[s].append(t)
    out = []
    for i in range(1, n + 1):
        seen, stack = {i}, [i]
        while stack:
            for w in succ[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.append(tuple(int(j in seen) for j in range(1, n + 1)))
    return out


def _sort_key(dim):
    return (sum(dim), tuple(-x for x in dim))


def knit(arrows: Sequence[tuple[int, int]], n: int):
    """Knit the AR quiver of mod kQ starting from the projectives.

    P_i = kQ e_i has a basis of the paths starting at i. The irreducible maps
    between projectives are P_j -> P_i for each arrow i -> j; each module
    tau^-k P_i then has the mesh successors tau^-k P_i' (arrows i' -> i) and
    tau^-(k+1) P_j (arrows i -> j). An orbit stops at an injective.

    Returns (modules, meshes): modules maps (i, k) to the dimension vector of
    tau^-k P_i; each mesh is ((i, k), successors, (i, k + 1)).
    """
    proj = _reach(arrows, n)
    inj = set(_reach(arrows, n, reverse=True))
    into = {i: [s for s, t in arrows if t == i] for i in range(1, n + 1)}
    out_of = {i: [t for s, t in arrows if s == i] for i in range(1, n + 1)}
    # targets of arrows first, so tau^-(k+1) P_j exists before tau^-(k+1) P_i needs it
    order: list[int] = []
    remaining = set(range(1, n + 1))
    while remaining:
        ready = sorted(i for i in remaining if all(t in order for t in out_of[i]))
        if not ready:
            raise InvalidDynkinDatum("quiver has an oriented cycle")
        order.extend(ready)
        remaining -= set(ready)

    modules = {(i, 0): proj[i - 1] for i in range(1, n + 1)}
    meshes = []
    alive = [i for i in range(1, n + 1)]
    k = 0
    limit = 4 * n * n + 8
    while alive:
        nxt = []
        for i in order:
            if i not in alive or modules[(i, k)] in inj:
                continue
            succ = [(s, k) for s in into[i] if (s, k) in modules]
            succ += [(j, k + 1) for j in out_of[i] if (j, k + 1) in modules]
            mid = (0,) * n
            for m in succ:
                mid = vadd(mid, modules[m])
            dim = tuple(x - y for x, y in zip(mid, modules[(i, k)]))
            if any(x < 0 for x in dim) or not any(dim):
                raise InvalidDynkinDatum(
                    f"mesh at tau^-{k} P_{i} produced dimension vector {dim}; "
                    "the quiver is not of finite representation type")
            modules[(i, k + 1)] = dim
            meshes.append(((i, k), succ, (i, k + 1)))
            nxt.append(i)
        alive = nxt
        k += 1
        if k > limit:
            raise InvalidDynkinDatum("knitting did not terminate")
    return modules, meshes


def _module_names(dims, proj, inj, n):
    names = {}
    for d in dims:
        if sum(d) == 1:
            names[d] = f"S{d.index(1) + 1}"
        elif d in proj:
            names[d] = f"P{proj.index(d) + 1}"
        elif d in inj:
            names[d] = f"I{inj.index(d) + 1}"
        else:
            names[d] = "M" + "".join(str(x) for x in d)
    return names


def gen_hom_intervals(n: int) -> list[list[int]]:
    """Hom dimensions for linear A_n, indexed like ``gen_mod_dynkin("A", n)``.

    M[a, b] has top at a and socle at b; Hom(M[a,b], M[c,d]) is one-dimensional
    iff c <= a <= d <= b.
    """
    ivs = interval_order(n)
    return [[int(c <= a <= d <= b) for (c, d) in ivs] for (a, b) in ivs]


def interval_order(n: int) -> list[tuple[int, int]]:
    """Intervals [a, b] of linear A_n in the canonical indecomposable order."""
    ivs = [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
    return sorted(ivs, key=lambda ab: _sort_key(_interval_dim(ab, n)))


def _interval_dim(ab, n):
    a, b = ab
    return tuple(int(a <= j <= b) for j in range(1, n + 1))


def gen_mod_dynkin(kind: str, n: int, orientation: str = "linear") -> CategoryPresentation:
    """mod kQ for the Dynkin quiver of type ``kind``_``n`` with the given orientation.

    For linear type A the Hom matrix and the non-AR short exact sequences
    0 -> M[c,d] -> M[a,d] + M[c,b] -> M[a,b] -> 0 (a < c <= b+1 <= d) are
    included as well.
    """
    kind = kind.upper()
    arrows = orient(kind, n, orientation)
    modules, meshes = knit(arrows, n)
    proj = _reach(arrows, n)
    inj = _reach(arrows, n, reverse=True)
    dims = sorted(set(modules.values()), key=_sort_key)
    if len(dims) != len(modules):
        raise InvalidDynkinDatum("knitting produced a module twice")
    expected = positive_root_count(kind, n)
    if len(dims) != expected:
        raise InvalidDynkinDatum(f"knitting produced {len(dims)} modules, expected {expected}")
    pos = {d: i for i, d in enumerate(dims)}
    names = _module_names(dims, proj, inj, n)
    size = len(dims)

    def vec(*keys):
        v = (0,) * size
        for key in keys:
            v = vadd(v, unit(size, pos[modules[key]]))
        return v

    tau: list[Optional[int]] = [None] * size
    confs = []
    for start, succ, end in meshes:
        confs.append(Conflation(vec(start), vec(*succ), vec(end), ar=True))
        tau[pos[modules[end]]] = pos[modules[start]]

    hom = None
    if kind == "A" and orientation == "linear":
        hom = gen_hom_intervals(n)
        ivpos = {ab: pos[_interval_dim(ab, n)] for ab in interval_order(n)}
        for (a, b) in interval_order(n):
            for c in range(a + 1, b + 2):
                for d in range(max(c, b + 1), n + 1):
                    if c == a + 1 and d == b + 1:
                        continue  # the AR sequence ending at M[a, b]
                    mid = unit(size, ivpos[(a, d)])
                    if c <= b:
                        mid = vadd(mid, unit(size, ivpos[(c, b)]))
                    confs.append(Conflation(unit(size, ivpos[(c, d)]), mid,
                                            unit(size, ivpos[(a, b)])))

    label = f"modk{kind}{n}" if orientation == "linear" else f"modk{kind}{n}_{orientation}"
    projectives = frozenset(pos[d] for d in proj)
    return CategoryPresentation(
        name=label,
        indecomposables=tuple(names[d] for d in dims),
        conflations=tuple(confs),
        projectives=projectives,
        injectives=frozenset(pos[d] for d in inj),
        hom=hom,
        tau=tuple(tau),
        generator=projectives,
    )


def polygon_diagonals(n: int) -> list[tuple[int, int]]:
    """Diagonals (i, j), i < j, of the (n+3)-gon with vertices 0..n+2."""
    size = n + 3
    return [(i, j) for i in range(size) for j in range(i + 2, size)
            if not (i == 0 and j == size - 1)]


def crosses(d1: tuple[int, int], d2: tuple[int, int]) -> bool:
    (i, j), (k, l) = d1, d2
    return i < k < j < l or k < i < l < j


def gen_cluster_A(n: int) -> CategoryPresentation:
    """Cluster category of type A_n.

    Indecomposables are the diagonals of the (n+3)-gon. tau = [1] rotates a
    diagonal by one step backwards; the AR triangle starting at (i, j) is
    (i, j) -> (i+1, j) + (i, j+1) -> (i+1, j+1), dropping boundary edges.
    Ext^1 is one-dimensional exactly between crossing diagonals, hence
    Hom(X, Y) = Ext^1(X, tau^-1 Y). The cluster-tilting object is the fan at
    vertex 0. Every diagonal A also gets the triangle A[-1] -> 0 -> A so the
    zero object is a generator.
    """
    if n < 1:
        raise InvalidDynkinDatum(f"cluster category of type A_{n} needs n >= 1")
    size = n + 3
    diags = polygon_diagonals(n)
    pos = {d: k for k, d in enumerate(diags)}
    m = len(diags)

    def norm(i, j):
        i, j = i % size, j % size
        return (min(i, j), max(i, j))

    def is_diag(i, j):
        return 2 <= (j - i) % size <= size - 2

    def rot(d, s):
        return norm(d[0] + s, d[1] + s)

    shift = tuple(pos[rot(d, -1)] for d in diags)
    inv = [0] * m
    for k, s in enumerate(shift):
        inv[s] = k
    ext = [[int(crosses(x, y)) for y in diags] for x in diags]
    hom = [[int(crosses(x, rot(y, 1))) for y in diags] for x in diags]
    fan = frozenset(pos[(0, j)] for j in range(2, size - 1))
    t1 = frozenset(shift[t] for t in fan)

    confs = []
    for (i, j) in diags:
        mid = (0,) * m
        for a, b in ((i + 1, j), (i, j + 1)):
            if is_diag(a, b):
                mid = vadd(mid, unit(m, pos[norm(a, b)]))
        x = pos[(i, j)]
        confs.append(Conflation(unit(m, x), mid, unit(m, pos[rot((i, j), 1)]),
                                ar=True, rel_t=x not in t1))
    for k in range(m):
        confs.append(Conflation(unit(m, inv[k]), (0,) * m, unit(m, k), rel_t=k in t1))

    return CategoryPresentation(
        name=f"clusterA{n}",
        indecomposables=tuple(f"D{i}_{j}" for i, j in diags),
        conflations=tuple(confs),
        hom=hom,
        ext=ext,
        shift=shift,
        tau=shift,
        generator=frozenset(),
        cluster_tilting=fan,
    )
