"""Minimal free resolutions over a graded complete intersection A = Q/(f).

Matrices over A are stored through their canonical normal-form
representatives in Q, so reduction against the relation ideal is explicit
everywhere.  Resolutions are built stepwise: syzygies of the last
differential, pruned to a minimal generating set by graded Nakayama, then a
unit-entry sweep over the whole complex as a safety net.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import HomogeneityError, RegularSequenceError, ShapeError
from .groebner import (
    GroebnerBasis,
    groebner_basis,
    is_regular_sequence,
    regular_sequence_defect,
    ring_groebner,
    syzygies,
)
from .linalg import rref, solve as linalg_solve
from .matrices import GradedMatrix, _det
from .polyring import Poly, PolyRing, mono_divides


class CIPresentation:
    """Ambient ring Q, homogeneous regular sequence f with degrees s1 >= ... >= sc."""

    def __init__(self, ring: PolyRing, f):
        self.ring = ring
        self.f = tuple(f)
        degrees = []
        for q in self.f:
            if not isinstance(q, Poly) or q.ring != ring:
                raise ShapeError("relations must be polynomials in the ambient ring")
            if not q or not q.is_homogeneous():
                raise HomogeneityError(f"relation {q} must be nonzero homogeneous")
            if q.degree() < 2:
                raise RegularSequenceError(
                    f"relation {q} has degree {q.degree()}; relations must sit in the square of the irrelevant ideal"
                )
            degrees.append(q.degree())
        if any(degrees[i] < degrees[i + 1] for i in range(len(degrees) - 1)):
            raise RegularSequenceError("relation degrees must be sorted descending")
        self.degrees = tuple(degrees)
        if not is_regular_sequence(self.f):
            got, want = regular_sequence_defect(self.f)
            raise RegularSequenceError(
                f"not a regular sequence: Hilbert numerator {list(got)} != expected {list(want)}"
            )
        self._std_cache: dict[int, list] = {}

    @property
    def codim(self) -> int:
        return len(self.f)

    @cached_property
    def gb(self) -> GroebnerBasis:
        return ring_groebner(self.ring, self.f, track=True)

    def nf(self, p: Poly) -> Poly:
        """Canonical normal-form representative of the class of p in A."""
        if not self.f:
            return p
        return self.gb.reduce_poly(p)[0]

    def nf_matrix(self, m: GradedMatrix) -> GradedMatrix:
        if not self.f:
            return m
        return m.map_entries(self.nf)

    def cofactors(self, p: Poly):
        """Write p = sum q_j f_j + remainder with the division fixed by the basis order."""
        if not self.f:
            return (), p
        rem, cofs = self.gb.reduce_poly(p)
        transform = self.gb.transform
        qs = [self.ring.zero() for _ in self.f]
        for k, c in enumerate(cofs):
            if not c:
                continue
            row = transform[k]
            for j in range(len(self.f)):
                if row[j]:
                    qs[j] = qs[j] + c * row[j]
        return tuple(qs), rem

    def lead_monomials(self):
        order = self.gb.order
        return [g.lead_term(order)[0][1] for g in self.gb.generators]

    def standard_monomials(self, d: int) -> list:
        """Monomial basis of A in degree d (normal-form monomials)."""
        if d < 0:
            return []
        cached = self._std_cache.get(d)
        if cached is None:
            leads = self.lead_monomials() if self.f else []
            cached = [
                m
                for m in self.ring.monomials_of_degree(d)
                if not any(mono_divides(l, m) for l in leads)
            ]
            self._std_cache[d] = cached
        return cached

    def __eq__(self, other):
        if not isinstance(other, CIPresentation):
            return NotImplemented
        return self.ring == other.ring and self.f == other.f

    def __hash__(self):
        return hash((self.ring, self.f))

    def __repr__(self):
        rels = ", ".join(str(q) for q in self.f)
        return f"CIPresentation(F_{self.ring.characteristic}[{', '.join(self.ring.variables)}] / ({rels}))"


# -- minimalization -----------------------------------------------------------


def minimalize(complex_list, ci: CIPresentation | None = None):
    """Split off unit pivots until no entry of any matrix has order zero.

    The pivot rule is the first unit entry in column-major scan, matrices
    first to last.  Homology is unchanged; consecutive matrices must compose
    to zero over the working ring (exactly, or modulo ci when given).
    """
    mats = [[list(row) for row in m.entries] for m in complex_list]
    rowtw = [list(m.row_twists) for m in complex_list]
    coltw = [list(m.col_twists) for m in complex_list]
    ring = complex_list[0].ring if complex_list else None
    nf = ci.nf if ci is not None else (lambda e: e)

    def find_unit():
        for k in range(len(mats)):
            mat = mats[k]
            for j in range(len(coltw[k])):
                for i in range(len(rowtw[k])):
                    if coltw[k][j] == rowtw[k][i] and mat[i][j]:
                        return k, i, j
        return None

    while True:
        hit = find_unit()
        if hit is None:
            break
        k, i, j = hit
        mat = mats[k]
        u = mat[i][j].constant_term()
        uinv = pow(u, ring.characteristic - 2, ring.characteristic)
        # clear row i with column operations; mirror on the next matrix
        for jj in range(len(coltw[k])):
            if jj == j or not mat[i][jj]:
                continue
            factor = mat[i][jj].scale(uinv)
            for r in range(len(rowtw[k])):
                if mat[r][j]:
                    mat[r][jj] = nf(mat[r][jj] - factor * mat[r][j])
            if k + 1 < len(mats):
                nxt = mats[k + 1]
                for c in range(len(coltw[k + 1])):
                    if nxt[jj][c]:
                        nxt[j][c] = nf(nxt[j][c] + factor * nxt[jj][c])
        # clear column j with row operations; mirror on the previous matrix
        for ii in range(len(rowtw[k])):
            if ii == i or not mat[ii][j]:
                continue
            factor = mat[ii][j].scale(uinv)
            for c in range(len(coltw[k])):
                if mat[i][c]:
                    mat[ii][c] = nf(mat[ii][c] - factor * mat[i][c])
            if k - 1 >= 0:
                prv = mats[k - 1]
                for r in range(len(rowtw[k - 1])):
                    if prv[r][ii]:
                        prv[r][i] = nf(prv[r][i] + factor * prv[r][ii])
        # drop the split summand
        for row in mat:
            del row[j]
        del mat[i]
        del coltw[k][j]
        del rowtw[k][i]
        if k + 1 < len(mats):
            dropped_row = mats[k + 1].pop(j)
            if any(nf(e) for e in dropped_row):
                raise ShapeError("minimalize: matrices do not compose to zero")
            del rowtw[k + 1][j]
        if k - 1 >= 0:
            for row in mats[k - 1]:
                dropped = row.pop(i)
                if nf(dropped):
                    raise ShapeError("minimalize: matrices do not compose to zero")
            del coltw[k - 1][i]

    out = []
    for k in range(len(mats)):
        entries = [[nf(e) for e in row] for row in mats[k]]
        out.append(GradedMatrix(ring, entries, rowtw[k], coltw[k], check=False))
    return out


# -- graded linear algebra over A ----------------------------------------------


def _vector_coords(polys, twists, degree, ci):
    """Coordinates of a homogeneous vector over the standard-monomial basis."""
    coords = []
    for i, q in enumerate(polys):
        std = ci.standard_monomials(degree - twists[i])
        pos = {m: k for k, m in enumerate(std)}
        block = [0] * len(std)
        for mono, c in q.terms.items():
            block[pos[mono]] = c
        coords.extend(block)
    return coords


def minimal_generator_columns(m: GradedMatrix, ci: CIPresentation) -> GradedMatrix:
    """Prune columns to a minimal generating set of the same A-submodule.

    Graded Nakayama: a column of degree d is kept iff it is independent of
    x_i * (earlier multiples) and the already-kept degree-d columns.
    """
    if m.ncols == 0:
        return m
    p = m.ring.characteristic
    cols = [(m.col_twists[j], j) for j in range(m.ncols)]
    degrees = sorted({d for d, _ in cols})
    keep: list[int] = []
    for d in degrees:
        spanning = []
        for dj, j in cols:
            gap = d - dj
            if gap <= 0:
                continue
            column = m.column(j)
            for u in m.ring.monomials_of_degree(gap):
                mono = m.ring.monomial(u)
                vec = [ci.nf(mono * e) for e in column]
                if any(vec):
                    spanning.append(_vector_coords(vec, m.row_twists, d, ci))
        basis_rows, pivots = rref(spanning, p) if spanning else ([], [])
        for dj, j in cols:
            if dj != d:
                continue
            vec = _vector_coords(m.column(j), m.row_twists, d, ci)
            stacked = basis_rows + [vec]
            new_rank = len(rref(stacked, p)[1])
            if new_rank > len(basis_rows):
                keep.append(j)
                basis_rows = rref(stacked, p)[0]
    keep.sort()
    entries = [[m.entries[i][j] for j in keep] for i in range(m.nrows)]
    return GradedMatrix(m.ring, entries, m.row_twists, [m.col_twists[j] for j in keep], check=False)


def solve_graded(ci: CIPresentation, mat: GradedMatrix, rhs: GradedMatrix):
    """Solve mat @ X = rhs over A = Q/(f) with X homogeneous.

    Returns (X, unique) or (None, False) when inconsistent.  The unknown X
    has row twists mat.col_twists and column twists rhs.col_twists.
    """
    if mat.row_twists != rhs.row_twists:
        raise ShapeError("row twists of the system and the right-hand side differ")
    ring = mat.ring
    p = ring.characteristic
    z = ring.zero()
    x_entries = [[z] * rhs.ncols for _ in range(mat.ncols)]
    unique = True
    for a in range(rhs.ncols):
        target_deg = rhs.col_twists[a]
        unknowns = []  # (source index b, monomial)
        for b in range(mat.ncols):
            for u in ci.standard_monomials(target_deg - mat.col_twists[b]):
                unknowns.append((b, u))
        rows = []
        rhs_vec = []
        for r in range(mat.nrows):
            deg = target_deg - mat.row_twists[r]
            std = ci.standard_monomials(deg)
            pos = {mono: k for k, mono in enumerate(std)}
            block = [[0] * len(unknowns) for _ in std]
            for col, (b, u) in enumerate(unknowns):
                e = mat.entries[r][b]
                if not e:
                    continue
                prod = ci.nf(e * ring.monomial(u))
                for mono, c in prod.terms.items():
                    block[pos[mono]][col] = c
            rows.extend(block)
            tgt = [0] * len(std)
            for mono, c in rhs.entries[r][a].terms.items():
                tgt[pos[mono]] = c
            rhs_vec.extend(tgt)
        if not unknowns:
            if any(rhs_vec):
                return None, False
            continue
        if not rows:
            sol, uniq = [0] * len(unknowns), False
        else:
            sol, uniq = linalg_solve(rows, rhs_vec, p)
        if sol is None:
            return None, False
        unique = unique and uniq
        for col, (b, u) in enumerate(unknowns):
            if sol[col]:
                x_entries[b][a] = x_entries[b][a] + ring.monomial(u, sol[col])
    X = GradedMatrix(ring, x_entries, mat.col_twists, rhs.col_twists, check=False)
    return X, unique


# -- resolutions ----------------------------------------------------------------


@dataclass(frozen=True)
class MinimalResolution:
    """Chain of graded free modules with minimal differentials over A."""

    ci: CIPresentation
    diffs: tuple[GradedMatrix, ...]
    betti: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.diffs)

    def differential(self, i: int) -> GradedMatrix:
        """The i-th differential F_i -> F_(i-1), 1-indexed."""
        if not 1 <= i <= len(self.diffs):
            raise IndexError(f"differential index {i} out of range")
        return self.diffs[i - 1]

    def free_twists(self, i: int):
        """Generator degrees of F_i."""
        if i == 0:
            return self.diffs[0].row_twists if self.diffs else ()
        return self.differential(i).col_twists

    def syzygy_presentation(self, n: int) -> GradedMatrix:
        """Presentation matrix of the n-th syzygy module (the (n+1)-st differential)."""
        return self.differential(n + 1)

    def ord_profile(self):
        return [ord_matrix(d, self.ci) for d in self.diffs]


def minimal_resolution(presentation: GradedMatrix, ci: CIPresentation, length: int) -> MinimalResolution:
    """Minimal graded free resolution of coker(presentation) to the given length."""
    if length < 1:
        raise ValueError("length must be at least 1")
    pres = ci.nf_matrix(presentation)
    diffs = minimalize([pres], ci)
    while len(diffs) < length:
        last = diffs[-1]
        if last.ncols == 0:
            diffs.append(GradedMatrix.zero(last.ring, last.col_twists, []))
            continue
        syz = syzygies(last, modulus=ci.f)
        syz = minimal_generator_columns(syz, ci)
        diffs.append(syz)
        diffs = minimalize(diffs, ci)
    betti = [diffs[0].nrows] + [d.ncols for d in diffs]
    for i in range(1, len(diffs)):
        if diffs[i].nrows != diffs[i - 1].ncols or diffs[i].row_twists != diffs[i - 1].col_twists:
            raise ShapeError("resolution steps do not chain")
    return MinimalResolution(ci, tuple(diffs), tuple(betti))


def ord_matrix(m: GradedMatrix, ci: CIPresentation | None = None):
    """Minimum degree of a nonzero normal-form entry; +inf for the zero matrix."""
    best = math.inf
    for row in m.entries:
        for e in row:
            if ci is not None:
                e = ci.nf(e)
            if e:
                best = min(best, e.degree())
    return best


@dataclass(frozen=True)
class MinorIdealChain:
    """Ideals of r x r minors of consecutive differentials, GB-normalized in A."""

    r: int
    start: int
    ideals: tuple[GroebnerBasis, ...]
    stabilization: int | None

    def ideal(self, i: int) -> GroebnerBasis:
        return self.ideals[i - self.start]


def minor_ideal(m: GradedMatrix, r: int, ci: CIPresentation) -> GroebnerBasis:
    """Ideal of all r x r minors of m, as a canonical basis including the relations."""
    if r < 1 or r > min(m.nrows, m.ncols):
        raise ValueError(f"minor size {r} out of range for a {m.nrows}x{m.ncols} matrix")
    minors = []
    for rows in combinations(range(m.nrows), r):
        for cols in combinations(range(m.ncols), r):
            d = _det(m.entries, list(rows), list(cols), m.ring)
            d = ci.nf(d)
            if d:
                minors.append(d)
    return groebner_basis(minors, modulus=ci.f, track=False)


def complexity_estimate(betti, window: int = 6) -> int:
    """Polynomial growth order of the Betti tail plus one; 0 for a zero tail.

    Growth is read off by iterated finite differences of the even- and
    odd-index subsequences of the last `window` entries.
    """
    betti = list(betti)
    if len(betti) < 8:
        raise ValueError("need at least 8 Betti numbers")
    if window < 4:
        raise ValueError("window must be at least 4")
    tail = betti[-window:]

    def growth_degree(seq):
        count = 0
        cur = list(seq)
        while any(cur):
            if len(cur) == 1:
                return count
            cur = [cur[i + 1] - cur[i] for i in range(len(cur) - 1)]
            count += 1
        return count - 1

    return 1 + max(growth_degree(tail[0::2]), growth_degree(tail[1::2]))
