"""Homogeneous matrices between twisted graded free modules.

Twists are generator degrees: the free module with twists (t_1..t_r) is
+A(-t_1) ... (-t_r), and entry (i, j) of a map must be zero or homogeneous
of degree col_twists[j] - row_twists[i].
"""

from __future__ import annotations

from .errors import HomogeneityError, RingMismatchError, ShapeError
from .polyring import Poly, PolyRing, parse_poly


class GradedMatrix:
    __slots__ = ("ring", "entries", "row_twists", "col_twists")

    def __init__(self, ring: PolyRing, entries, row_twists, col_twists, check: bool = True):
        self.ring = ring
        self.entries = tuple(tuple(row) for row in entries)
        self.row_twists = tuple(int(t) for t in row_twists)
        self.col_twists = tuple(int(t) for t in col_twists)
        if len(self.entries) != len(self.row_twists):
            raise ShapeError("row count does not match row twists")
        for row in self.entries:
            if len(row) != len(self.col_twists):
                raise ShapeError("column count does not match col twists")
        if check:
            self._validate()

    def _validate(self):
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                if e.ring != self.ring:
                    raise RingMismatchError("entry from a different ring")
                if not e:
                    continue
                want = self.col_twists[j] - self.row_twists[i]
                if not e.is_homogeneous() or e.degree() != want:
                    raise HomogeneityError(
                        f"entry ({i},{j}) = {e} must be homogeneous of degree {want}"
                    )

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_strings(cls, ring: PolyRing, rows, row_twists=None, col_twists=None) -> "GradedMatrix":
        """Parse a matrix of polynomial strings, inferring column twists.

        A zero column gets twist 0 unless col_twists says otherwise.
        """
        entries = [[parse_poly(s, ring) if isinstance(s, str) else s for s in row] for row in rows]
        nrows = len(entries)
        ncols = len(entries[0]) if nrows else 0
        for row in entries:
            if len(row) != ncols:
                raise ShapeError("ragged matrix")
        if row_twists is None:
            row_twists = [0] * nrows
        if col_twists is None:
            col_twists = []
            for j in range(ncols):
                twist = None
                for i in range(nrows):
                    e = entries[i][j]
                    if e:
                        if not e.is_homogeneous():
                            raise HomogeneityError(f"entry ({i},{j}) = {e} is not homogeneous")
                        t = e.degree() + row_twists[i]
                        if twist is None:
                            twist = t
                        elif twist != t:
                            raise HomogeneityError(f"column {j} has inconsistent degrees")
                col_twists.append(0 if twist is None else twist)
        return cls(ring, entries, row_twists, col_twists)

    @classmethod
    def zero(cls, ring: PolyRing, row_twists, col_twists) -> "GradedMatrix":
        z = ring.zero()
        entries = [[z] * len(col_twists) for _ in row_twists]
        return cls(ring, entries, row_twists, col_twists, check=False)

    @classmethod
    def identity(cls, ring: PolyRing, twists) -> "GradedMatrix":
        z, one = ring.zero(), ring.one()
        n = len(twists)
        entries = [[one if i == j else z for j in range(n)] for i in range(n)]
        return cls(ring, entries, twists, twists, check=False)

    # -- shape ----------------------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.row_twists)

    @property
    def ncols(self) -> int:
        return len(self.col_twists)

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    def column(self, j: int) -> list[Poly]:
        return [row[j] for row in self.entries]

    # -- arithmetic -----------------------------------------------------------

    def compose(self, other: "GradedMatrix") -> "GradedMatrix":
        """Matrix product self @ other (apply other first)."""
        if self.col_twists != other.row_twists:
            raise ShapeError("twist mismatch in composition")
        z = self.ring.zero()
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = z
                for k in range(self.ncols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return GradedMatrix(self.ring, out, self.row_twists, other.col_twists, check=False)

    def __matmul__(self, other):
        return self.compose(other)

    def add(self, other: "GradedMatrix") -> "GradedMatrix":
        if self.row_twists != other.row_twists or self.col_twists != other.col_twists:
            raise ShapeError("twist mismatch in sum")
        entries = [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)
        ]
        return GradedMatrix(self.ring, entries, self.row_twists, self.col_twists, check=False)

    def sub(self, other: "GradedMatrix") -> "GradedMatrix":
        return self.add(other.scale(-1))

    def scale(self, c: int) -> "GradedMatrix":
        entries = [[e.scale(c) for e in row] for row in self.entries]
        return GradedMatrix(self.ring, entries, self.row_twists, self.col_twists, check=False)

    def map_entries(self, fn) -> "GradedMatrix":
        entries = [[fn(e) for e in row] for row in self.entries]
        return GradedMatrix(self.ring, entries, self.row_twists, self.col_twists, check=False)

    def shift_twists(self, d: int) -> "GradedMatrix":
        """Same map viewed with every twist raised by d."""
        return GradedMatrix(
            self.ring,
            self.entries,
            [t + d for t in self.row_twists],
            [t + d for t in self.col_twists],
            check=False,
        )

    def scalar_part(self) -> list[list[int]]:
        """Constant coefficients of the degree-0 slots (the matrix mod the irrelevant ideal)."""
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(self.ncols):
                if self.col_twists[j] == self.row_twists[i]:
                    row.append(self.entries[i][j].constant_term())
                else:
                    row.append(0)
            out.append(row)
        return out

    def to_strings(self) -> list[list[str]]:
        return [[str(e) for e in row] for row in self.entries]

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.entries == other.entries
            and self.row_twists == other.row_twists
            and self.col_twists == other.col_twists
        )

    def __hash__(self):
        return hash((self.ring, self.entries, self.row_twists, self.col_twists))

    def __repr__(self):
        rows = "; ".join(", ".join(str(e) for e in row) for row in self.entries)
        return f"GradedMatrix[{self.nrows}x{self.ncols}]({rows})"


def determinant(m: GradedMatrix) -> Poly:
    """Determinant by cofactor expansion; m must be square."""
    if m.nrows != m.ncols:
        raise ShapeError("determinant of a non-square matrix")
    return _det(m.entries, list(range(m.nrows)), list(range(m.ncols)), m.ring)


def _det(entries, rows, cols, ring) -> Poly:
    if not rows:
        return ring.one()
    if len(rows) == 1:
        return entries[rows[0]][cols[0]]
    acc = ring.zero()
    r0 = rows[0]
    rest = rows[1:]
    for k, c in enumerate(cols):
        e = entries[r0][c]
        if not e:
            continue
        sub = _det(entries, rest, cols[:k] + cols[k + 1 :], ring)
        term = e * sub
        acc = acc + (term if k % 2 == 0 else -term)
    return acc


def adjugate(m: GradedMatrix) -> GradedMatrix:
    """Classical adjugate: adj(m) @ m = m @ adj(m) = det(m) * I."""
    if m.nrows != m.ncols:
        raise ShapeError("adjugate of a non-square matrix")
    n = m.nrows
    d = determinant(m)
    deg_det = d.degree() if d else sum(m.col_twists) - sum(m.row_twists)
    rows = list(range(n))
    cols = list(range(n))
    entries = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = _det(
                m.entries,
                [r for r in rows if r != j],
                [c for c in cols if c != i],
                m.ring,
            )
            entries[i][j] = sub if (i + j) % 2 == 0 else -sub
    # adj has entry (i, j) of degree deg_det - col_twist(i) + row_twist(j),
    # so m @ adj = adj-first composition lands back in m's target shifted by deg_det.
    return GradedMatrix(
        m.ring,
        entries,
        m.col_twists,
        [t + deg_det for t in m.row_twists],
    )
