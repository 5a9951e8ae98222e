"""Exact integer linear algebra: Smith normal form and independent rank checks.

Matrices enter either dense (a list of integer rows) or sparse (a list of
``{column: value}`` dicts, one per row). Everything runs on Python ints, so
there is no overflow.
"""

from __future__ import annotations

from fractions import Fraction


def _to_sparse(matrix) -> list[dict[int, int]]:
    if matrix and isinstance(matrix[0], dict):
        return [{c: int(v) for c, v in row.items() if v} for row in matrix]
    return [{c: int(v) for c, v in enumerate(row) if v} for row in matrix]


def _eliminate_units(rows: dict[int, dict[int, int]]) -> int:
    """Pivot away every +-1 entry; returns how many unit factors were split off.

    A unit pivot clears its column with row operations; clearing its row
    afterwards needs only column operations that touch nothing else, so the
    pivot row and column are simply dropped.
    """
    cols: dict[int, set[int]] = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)
    units = 0
    progress = True
    while progress:
        progress = False
        for r in sorted(rows, key=lambda r: len(rows[r])):
            row = rows.get(r)
            if row is None:
                continue
            best = None
            for c, val in row.items():
                if val in (1, -1) and (best is None or len(cols[c]) < len(cols[best])):
                    best = c
            if best is None:
                continue
            c = best
            p = row[c]
            for r2 in list(cols[c]):
                if r2 == r:
                    continue
                target = rows[r2]
                factor = target[c] * p
                for cc, val in row.items():
                    nv = target.get(cc, 0) - factor * val
                    if nv:
                        if cc not in target:
                            cols[cc].add(r2)
                        target[cc] = nv
                    else:
                        target.pop(cc, None)
                        cols[cc].discard(r2)
                if not target:
                    del rows[r2]
            for cc in row:
                cols[cc].discard(r)
            del cols[c]
            del rows[r]
            units += 1
            progress = True
    return units


def _dense_smith_diagonal(a: list[list[int]]) -> list[int]:
    """Diagonalize in place with minimum-|entry| pivoting; returns the
    divisibility chain of non-zero invariant factors."""
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                v = a[i][j]
                if v and (pivot is None or abs(v) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            done = True
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, n):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for row in a[t:]:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        done = False
            if not done:
                # a smaller remainder appeared: move it to the pivot and repeat
                best = (t, t)
                for i in range(t, m):
                    if a[i][t] and abs(a[i][t]) < abs(a[best[0]][best[1]]):
                        best = (i, t)
                for j in range(t, n):
                    if a[t][j] and abs(a[t][j]) < abs(a[best[0]][best[1]]):
                        best = (t, j)
                i, j = best
                a[t], a[i] = a[i], a[t]
                for row in a:
                    row[t], row[j] = row[j], row[t]
                continue
            p = a[t][t]
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            for j in range(t, n):
                a[t][j] += a[bad][j]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def invariant_factors(matrix) -> list[int]:
    """Non-zero invariant factors d_1 | d_2 | ... of an integer matrix."""
    rows = {i: r for i, r in enumerate(_to_sparse(matrix)) if r}
    units = _eliminate_units(rows)
    if not rows:
        return [1] * units
    cols = sorted(set().union(*rows.values()))
    pos = {c: k for k, c in enumerate(cols)}
    dense = []
    for r in rows.values():
        line = [0] * len(cols)
        for c, v in r.items():
            line[pos[c]] = v
        dense.append(line)
    return [1] * units + _dense_smith_diagonal(dense)


def smith_normal_form(matrix) -> list[list[int]]:
    """Dense Smith normal form with the same shape as ``matrix``."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    out = [[0] * n for _ in range(m)]
    for k, d in enumerate(invariant_factors(matrix)):
        out[k][k] = d
    return out


def rank_smith(matrix) -> int:
    return len(invariant_factors(matrix))


def rank_rational(matrix) -> int:
    """Rank over Q by fraction-exact Gaussian elimination."""
    rows = [[Fraction(v) for v in row] for row in _dense(matrix)]
    return _gauss_rank(rows, lambda x: 1 / x)


def rank_mod_p(matrix, p: int) -> int:
    """Rank over GF(p) for a prime ``p``."""
    rows = [[v % p for v in row] for row in _dense(matrix)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        prow = [v * inv % p for v in rows[rank]]
        rows[rank] = prow
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
        rank += 1
    return rank


def _gauss_rank(rows, inverse) -> int:
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = inverse(rows[rank][c])
        for i in range(rank + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _dense(matrix) -> list[list[int]]:
    if matrix and isinstance(matrix[0], dict):
        ncols = 1 + max((c for row in matrix for c in row), default=-1)
        return [[row.get(c, 0) for c in range(ncols)] for row in matrix]
    return [list(row) for row in matrix]

