"""Dense exact linear algebra over a prime field.

Matrices are lists of row lists with int entries in [0, p).  Everything is
deterministic: pivots are chosen leftmost-first, scanning rows top-down.
"""

from __future__ import annotations


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 is not invertible mod p")
    return pow(a, p - 2, p)


def rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (reduced nonzero rows, pivot columns)."""
    work = [[a % p for a in row] for row in rows]
    ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    out: list[list[int]] = []
    for col in range(ncols):
        piv = None
        for i, row in enumerate(work):
            if row[col] % p != 0:
                piv = i
                break
        if piv is None:
            continue
        row = work.pop(piv)
        inv = inv_mod(row[col], p)
        row = [(a * inv) % p for a in row]
        for other in work:
            c = other[col]
            if c:
                for j in range(col, ncols):
                    other[j] = (other[j] - c * row[j]) % p
        for other in out:
            c = other[col]
            if c:
                for j in range(col, ncols):
                    other[j] = (other[j] - c * row[j]) % p
        out.append(row)
        pivots.append(col)
        work = [r for r in work if any(a % p for a in r)]
        if not work:
            break
    return out, pivots


def rank(rows: list[list[int]], p: int) -> int:
    return len(rref(rows, p)[1])


def solve(a: list[list[int]], b: list[int], p: int) -> tuple[list[int] | None, bool]:
    """One solution of A x = b, free variables set to 0.

    Returns (solution, unique); solution is None when the system is
    inconsistent.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    aug = [list(a[i]) + [b[i] % p] for i in range(m)]
    red, pivots = rref(aug, p)
    if n in pivots:
        return None, False
    x = [0] * n
    for row, col in zip(red, pivots):
        x[col] = row[n]
    unique = len(pivots) == n
    return x, unique


def nullspace(a: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the right kernel, one vector per free column."""
    m = len(a)
    n = len(a[0]) if m else 0
    red, pivots = rref(a, p) if m else ([], [])
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for j in free:
        v = [0] * n
        v[j] = 1
        for row, col in zip(red, pivots):
            v[col] = (-row[j]) % p
        basis.append(v)
    return basis


def mat_mul(a: list[list[int]], b: list[list[int]], p: int) -> list[list[int]]:
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    n = len(b)
    out = []
    for row in a:
        acc = [0] * len(b[0])
        for k in range(n):
            c = row[k]
            if c:
                bk = b[k]
                for j, v in enumerate(bk):
                    if v:
                        acc[j] = (acc[j] + c * v) % p
        out.append(acc)
    return out


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def invert(a: list[list[int]], p: int) -> list[list[int]] | None:
    """Inverse of a square matrix, or None when singular."""
    n = len(a)
    aug = [list(a[i]) + identity(n)[i] for i in range(n)]
    red, pivots = rref(aug, p)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in red]
