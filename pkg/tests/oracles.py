"""Brute-force reference computations.

These work on index strings and plain loops and share no code with the
package, so they can check it independently.
"""

import itertools
import math
from fractions import Fraction

import sympy


def strings(m):
    return ["".join(bits) for bits in itertools.product("01", repeat=m)]


def swap(x, y, positions):
    """Exchange digits of ``x`` and ``y`` at 1-based positions counted from the right."""
    x, y = list(x), list(y)
    for s in positions:
        j = len(x) - s
        x[j], y[j] = y[j], x[j]
    return "".join(x), "".join(y)


def canon(k, l, k2, l2):
    p, q = tuple(sorted((k, l))), tuple(sorted((k2, l2)))
    return (p, q) if p <= q else (q, p)


def minors(m):
    """Every (x, y, s) triple, swapped at s, canonicalized; trivial ones dropped."""
    out = set()
    for x in strings(m):
        for y in strings(m):
            for s in range(1, m + 1):
                x2, y2 = swap(x, y, [s])
                if sorted((x, y)) != sorted((x2, y2)):
                    out.add(canon(x, y, x2, y2))
    return out


def toric(m):
    """All pairs of vertex pairs with equal exponent sums."""
    verts = list(itertools.product((-1, 1), repeat=m))
    label = {v: "".join(str((1 + e) // 2) for e in v) for v in verts}
    pairs = list(itertools.combinations(verts, 2))
    out = set()
    for (u, v), (u2, v2) in itertools.product(pairs, repeat=2):
        if {u, v} == {u2, v2}:
            continue
        if all(a + b == c + d for a, b, c, d in zip(u, v, u2, v2)):
            out.add(canon(label[u], label[v], label[u2], label[v2]))
    return out


def measure(amps, m, norm_const=1.0, minors_only=False):
    """Swap-binomial measure by direct enumeration.

    ``amps`` maps index strings to complex amplitudes.  Ordered pairs are
    visited, and every subset of positions is tried; a subset counts when
    it is nonempty, only touches positions where the pair differs, and is
    not all of them.  Ordered pairs see each unordered pair twice, hence
    the final halving.
    """
    total = 0.0
    for k in strings(m):
        for l in strings(m):
            diff = {s for s in range(1, m + 1) if k[m - s] != l[m - s]}
            for r in range(1, m + 1):
                for subset in itertools.combinations(range(1, m + 1), r):
                    S = set(subset)
                    if not S <= diff or S == diff:
                        continue
                    if minors_only and len(S) != 1:
                        continue
                    k2, l2 = swap(k, l, S)
                    total += abs(amps[k] * amps[l] - amps[k2] * amps[l2]) ** 2
    return math.sqrt(norm_const * total / 2)


def positive_dependency(gens):
    """A nonzero lambda >= 0 with sum lambda_i g_i = 0, searched over minimal supports.

    A minimal positive dependency has a one-dimensional kernel on its
    support, so trying every subset and its kernel vector is exhaustive.
    """
    for r in range(1, len(gens) + 1):
        for idx in itertools.combinations(range(len(gens)), r):
            M = sympy.Matrix([list(gens[i]) for i in idx]).T
            ns = M.nullspace()
            if len(ns) != 1:
                continue
            v = list(ns[0])
            if all(x > 0 for x in v) or all(x < 0 for x in v):
                return {idx[j]: abs(Fraction(int(sympy.numer(x)), int(sympy.denom(x)))) for j, x in enumerate(v)}
    return None


def gordan_certificate(gens, bound):
    """An integer u in the box with <u, g> > 0 for every generator."""
    n = len(gens[0])
    for u in itertools.product(range(-bound, bound + 1), repeat=n):
        if all(sum(a * b for a, b in zip(u, g)) > 0 for g in gens):
            return u
    return None


def conic_combination(gens, v):
    """Caratheodory search: solve on every linearly independent subset."""
    n = len(v)
    if not any(v):
        return True
    for r in range(1, n + 1):
        for idx in itertools.combinations(range(len(gens)), r):
            M = sympy.Matrix([list(gens[i]) for i in idx]).T
            if M.rank() != r:
                continue
            sol, params = M.gauss_jordan_solve(sympy.Matrix(v)) if _consistent(M, v) else (None, None)
            if sol is not None and all(x >= 0 for x in sol):
                return True
    return False


def _consistent(M, v):
    return M.rank() == M.row_join(sympy.Matrix(v)).rank()
