"""Brute-force oracles used by the tests.

Nothing here calls into grothext: every routine recomputes its answer from
first principles so it can check the library independently.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


def determinantal_divisors(m):
    """Invariant factors from gcds of k x k minors."""
    rows, cols = len(m), len(m[0]) if m else 0
    divs = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for r in itertools.combinations(range(rows), k):
            for c in itertools.combinations(range(cols), k):
                g = gcd(g, leibniz_det([[m[i][j] for j in c] for i in r]))
        if g == 0:
            break
        divs.append(g)
    return [divs[k] // divs[k - 1] for k in range(1, len(divs))]


def rational_rank(rows):
    a = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(a[0]) if a else 0
    for j in range(cols):
        piv = next((i for i in range(rank, len(a)) if a[i][j] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][j] != 0:
                f = a[i][j] / a[rank][j]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def _rational_solve(rows, v):
    """Unique rational x with x @ rows = v for independent rows, or None."""
    r = len(rows)
    n = len(v)
    # augmented system: columns are the equations
    a = [[Fraction(rows[i][j]) for i in range(r)] + [Fraction(v[j])] for j in range(n)]
    row = 0
    for c in range(r):
        p = next((i for i in range(row, n) if a[i][c] != 0), None)
        if p is None:
            return None
        a[row], a[p] = a[p], a[row]
        for i in range(n):
            if i != row and a[i][c] != 0:
                f = a[i][c] / a[row][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[row])]
        row += 1
    if any(a[i][r] != 0 for i in range(row, n)):
        return None
    return [a[i][r] / a[i][i] for i in range(r)]


def brute_member(gens, v):
    """Is v an integer combination of gens?

    Pick a maximal independent subset R. Every other generator g has
    Delta * g in span_Z(R), Delta = a nonzero maximal minor of R, so v is a
    member iff v - sum k_g g lies in span_Z(R) for some k_g in [0, |Delta|).
    """
    gens = [list(g) for g in gens]
    if not any(any(g) for g in gens):
        return not any(v)
    basis = []
    for g in gens:
        if rational_rank(basis + [g]) > len(basis):
            basis.append(g)
    others = [g for g in gens if g not in basis]
    r = len(basis)
    n = len(v)
    delta = 0
    for c in itertools.combinations(range(n), r):
        delta = leibniz_det([[b[j] for j in c] for b in basis])
        if delta:
            break
    delta = abs(delta)
    for ks in itertools.product(range(delta), repeat=len(others)):
        w = list(v)
        for k, g in zip(ks, others):
            w = [x - k * y for x, y in zip(w, g)]
        x = _rational_solve(basis, w)
        if x is not None and all(c.denominator == 1 for c in x):
            return True
    return False


def brute_member_grid(gens, v, bound):
    """Search integer coefficients in [-bound, bound] directly."""
    for cs in itertools.product(range(-bound, bound + 1), repeat=len(gens)):
        if all(sum(c * g[j] for c, g in zip(cs, gens)) == v[j] for j in range(len(v))):
            return list(cs)
    return None


def invariant_factor_lists(max_order):
    """All chains d1 | d2 | ... with d_i >= 2 and product <= max_order, trivial group included."""
    out = []

    def extend(chain, size):
        out.append(chain)
        last = chain[-1] if chain else None
        cands = range(2, max_order + 1) if last is None else range(last, max_order + 1, last)
        for d in cands:
            if size * d > max_order:
                break
            extend(chain + (d,), size * d)

    extend((), 1)
    return sorted(out)


def closure_subgroups(torsion):
    """All subgroups of Z/d1 + ... + Z/dk, grown one cyclic summand at a time."""
    def add(x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, torsion))

    elements = list(itertools.product(*(range(d) for d in torsion)))
    zero = tuple(0 for _ in torsion)
    start = frozenset([zero])
    seen = {start}
    queue = [start]
    while queue:
        s = queue.pop()
        covered = set(s)
        for g in elements:
            if g in covered:
                continue
            cyc = [zero]
            x = g
            while x != zero:
                cyc.append(x)
                x = add(x, g)
            bigger = frozenset(add(a, b) for a in s for b in cyc)
            covered |= {add(g, a) for a in s}
            if bigger not in seen:
                seen.add(bigger)
                queue.append(bigger)
    return seen


def interval_hom_dim(ab, cd, n):
    """dim Hom(M[a,b], M[c,d]) for linear A_n (arrows i -> i+1), by solving
    the commutativity equations f_{i+1} M(alpha_i) = N(alpha_i) f_i."""
    (a, b), (c, d) = ab, cd
    src = [int(a <= i <= b) for i in range(1, n + 1)]
    tgt = [int(c <= i <= d) for i in range(1, n + 1)]
    # one unknown per vertex where both spaces are K
    unknowns = [i for i in range(n) if src[i] and tgt[i]]
    pos = {i: k for k, i in enumerate(unknowns)}
    eqs = []
    for i in range(n - 1):
        # map at arrow i -> i+1 is the identity when both ends are K, else 0
        m_src = src[i] and src[i + 1]
        m_tgt = tgt[i] and tgt[i + 1]
        row = [0] * len(unknowns)
        if m_src and (i + 1) in pos:
            row[pos[i + 1]] += 1
        if m_tgt and i in pos:
            row[pos[i]] -= 1
        # unknowns absent on one side are forced zero maps; the equation
        # only involves the present ones
        if any(row):
            eqs.append(row)
    if not unknowns:
        return 0
    return len(unknowns) - (rational_rank(eqs) if eqs else 0)


def minor_gcd(rows, k):
    g = 0
    cols = len(rows[0]) if rows else 0
    for r in itertools.combinations(range(len(rows)), k):
        for c in itertools.combinations(range(cols), k):
            g = gcd(g, leibniz_det([[rows[i][j] for j in c] for i in r]))
    return g


def minor_member(gens, v):
    """Membership by determinantal divisors: adding v to the generators keeps
    the rank and the gcd of maximal minors exactly when v is already in the span
    (that gcd is the covolume, and it divides by the index [L + Zv : L])."""
    gens = [list(g) for g in gens if any(g)]
    if not any(v):
        return True
    if not gens:
        return False
    r = rational_rank(gens)
    if rational_rank(gens + [list(v)]) > r:
        return False
    return minor_gcd(gens, r) == minor_gcd(gens + [list(v)], r)
