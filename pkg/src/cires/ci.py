"""Degree -2 cohomology operators of a resolution over A = Q/(f).

The operators are extracted the classical way: lift the differentials to Q,
square, and divide every entry of the square against the relation ideal with
cofactor tracking.  The division order is fixed by the canonical basis of
(f), so the operator matrices are deterministic.  Everything downstream
(action on Ext, basis change, the complexity-reduction construction) works
with those matrices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    FilterRegularSearchError,
    HomogeneityError,
    OperatorExtractionError,
    SectionError,
    ShapeError,
)
from .groebner import ideal_equal
from .linalg import identity as k_identity, invert, mat_mul, rank as k_rank, rref
from .matrices import GradedMatrix, _det
from .polyring import Poly
from .resolution import CIPresentation, MinimalResolution, ord_matrix, solve_graded


@dataclass(frozen=True)
class OperatorFamily:
    """Lifted differentials and operator matrices t_j: F_i -> F_(i-2)."""

    ci: CIPresentation
    betti: tuple[int, ...]
    lifted: tuple[GradedMatrix, ...]
    operators: tuple[tuple[GradedMatrix, ...], ...]
    source: MinimalResolution | None = None

    @property
    def length(self) -> int:
        return len(self.lifted)

    @property
    def count(self) -> int:
        return len(self.operators)

    def operator(self, j: int, i: int) -> GradedMatrix:
        """Matrix of t_j at homological degree i (a map F_i -> F_(i-2)), i >= 2."""
        return self.operators[j][i - 2]

    def to_jsonable(self) -> dict:
        out: dict = {"relations": [str(f) for f in self.ci.f], "degrees": {}}
        for i in range(2, self.length + 1):
            out["degrees"][str(i)] = {
                f"t{j + 1}": self.operator(j, i).to_strings() for j in range(self.count)
            }
        return out


def lift_resolution(res: MinimalResolution) -> list[GradedMatrix]:
    """Canonical lifts of the differentials to Q (normal-form representatives)."""
    return [res.ci.nf_matrix(d) for d in res.diffs]


def eisenbud_operators(lifted, ci: CIPresentation, source: MinimalResolution | None = None) -> OperatorFamily:
    """Extract operators t_j from the squares of the lifted differentials.

    Every entry of each square must reduce to zero against (f); the cofactors
    of that reduction are the operator entries, so the defining identity
    square = sum_j f_j * t_j holds exactly by construction.
    """
    lifted = tuple(lifted)
    if not lifted:
        raise ShapeError("need at least one lifted differential")
    c = ci.codim
    operators: list[list[GradedMatrix]] = [[] for _ in range(c)]
    for i in range(2, len(lifted) + 1):
        upper = lifted[i - 2]
        lower = lifted[i - 1]
        square = upper.compose(lower)
        rows, cols = square.nrows, square.ncols
        per_j = [[[None] * cols for _ in range(rows)] for _ in range(c)]
        for a in range(rows):
            for b in range(cols):
                qs, rem = ci.cofactors(square.entries[a][b])
                if rem:
                    raise OperatorExtractionError(
                        f"square of the lift at degree {i} entry ({a},{b}) does not lie in the relation ideal: remainder {rem}"
                    )
                for j in range(c):
                    per_j[j][a][b] = qs[j]
        for j in range(c):
            operators[j].append(
                GradedMatrix(
                    ci.ring,
                    per_j[j],
                    [t + ci.degrees[j] for t in square.row_twists],
                    square.col_twists,
                )
            )
    betti = (lifted[0].nrows,) + tuple(m.ncols for m in lifted)
    return OperatorFamily(ci, betti, lifted, tuple(tuple(col) for col in operators), source)


def operators_for(res: MinimalResolution, ci: CIPresentation | None = None) -> OperatorFamily:
    """Lift a resolution and extract the operators in one step."""
    if ci is None:
        ci = res.ci
    return eisenbud_operators(lift_resolution(res), ci, source=res)


# -- action on Ext --------------------------------------------------------------


@dataclass(frozen=True)
class ExtAction:
    """Matrices over k of each operator acting Ext^n(M,k) -> Ext^(n+2)(M,k)."""

    p: int
    betti: tuple[int, ...]
    maps: tuple[tuple[tuple[tuple[int, ...], ...], ...], ...]

    @property
    def count(self) -> int:
        return len(self.maps)

    @property
    def window(self) -> range:
        return range(0, len(self.betti) - 2)

    def map(self, j: int, n: int) -> list[list[int]]:
        return [list(row) for row in self.maps[j][n]]

    def combined(self, coeffs, n: int) -> list[list[int]]:
        rows, cols = self.betti[n + 2], self.betti[n]
        out = [[0] * cols for _ in range(rows)]
        for j, a in enumerate(coeffs):
            if a % self.p == 0:
                continue
            mj = self.maps[j][n]
            for r in range(rows):
                row = mj[r]
                for cidx in range(cols):
                    out[r][cidx] = (out[r][cidx] + a * row[cidx]) % self.p
        return out

    def commutes(self, i: int, j: int) -> bool:
        for n in range(len(self.betti) - 4):
            left = mat_mul(self.map(i, n + 2), self.map(j, n), self.p)
            right = mat_mul(self.map(j, n + 2), self.map(i, n), self.p)
            if left != right:
                return False
        return True


def ext_action(ops: OperatorFamily) -> ExtAction:
    """Reduce each operator mod the irrelevant ideal and transpose onto Ext."""
    p = ops.ci.ring.characteristic
    maps = []
    for j in range(ops.count):
        per_degree = []
        for n in range(len(ops.betti) - 2):
            scalar = ops.operator(j, n + 2).scalar_part()
            rows, cols = ops.betti[n], ops.betti[n + 2]
            transposed = tuple(
                tuple(scalar[r][cidx] for r in range(rows)) for cidx in range(cols)
            )
            per_degree.append(transposed)
        maps.append(tuple(per_degree))
    return ExtAction(p, ops.betti, tuple(maps))


# -- basis change ----------------------------------------------------------------


def _as_const_matrix(ci: CIPresentation, alpha):
    ring = ci.ring
    out = []
    for row in alpha:
        cells = []
        for e in row:
            if isinstance(e, Poly):
                cells.append(e)
            else:
                cells.append(ring.constant(int(e)))
        out.append(cells)
    return out


def operators_change_basis(ops: OperatorFamily, alpha) -> OperatorFamily:
    """Operators for the regular sequence g = alpha^(-1) f, via t' = alpha^T t.

    alpha must be invertible with unit constant determinant, and its nonzero
    entries must be homogeneous of the degree that keeps g homogeneous.
    """
    ci = ops.ci
    ring = ci.ring
    c = ci.codim
    alpha = _as_const_matrix(ci, alpha)
    if len(alpha) != c or any(len(row) != c for row in alpha):
        raise ShapeError(f"alpha must be {c}x{c}")
    det = _det(alpha, list(range(c)), list(range(c)), ring)
    if not det or det.degree() != 0:
        raise ShapeError("alpha must have unit constant determinant")
    det_inv = pow(det.constant_term(), ring.characteristic - 2, ring.characteristic)
    # classical adjugate of alpha, so inverse = adjugate / det
    inverse = []
    for i in range(c):
        row = []
        for j in range(c):
            sub = _det(
                alpha,
                [r for r in range(c) if r != j],
                [cc for cc in range(c) if cc != i],
                ring,
            )
            if (i + j) % 2:
                sub = -sub
            row.append(sub.scale(det_inv))
        inverse.append(row)
    g = []
    for j in range(c):
        gj = ring.zero()
        for i in range(c):
            if inverse[j][i] and ci.f[i]:
                gj = gj + inverse[j][i] * ci.f[i]
        if not gj or not gj.is_homogeneous():
            raise HomogeneityError(
                f"g_{j + 1} = {gj} is not nonzero homogeneous; alpha mixes incompatible degrees"
            )
        g.append(gj)
    # exactness of the inverse: f = alpha * g
    for i in range(c):
        acc = ring.zero()
        for j in range(c):
            acc = acc + alpha[i][j] * g[j]
        if acc != ci.f[i]:
            raise ShapeError("alpha inverse verification failed")
    ci_g = CIPresentation(ring, g)
    new_ops: list[list[GradedMatrix]] = [[] for _ in range(c)]
    for idx in range(2, ops.length + 1):
        base = [ops.operator(i, idx) for i in range(c)]
        target_twists = ops.lifted[idx - 2].row_twists  # generator degrees of F_(idx-2)
        source_twists = base[0].col_twists
        for j in range(c):
            acc = [[ring.zero()] * len(source_twists) for _ in target_twists]
            for i in range(c):
                coeff = alpha[i][j]
                if not coeff:
                    continue
                mat = base[i].entries
                for a in range(len(target_twists)):
                    for b in range(len(source_twists)):
                        if mat[a][b]:
                            acc[a][b] = acc[a][b] + coeff * mat[a][b]
            new_ops[j].append(
                GradedMatrix(
                    ring,
                    acc,
                    [t + ci_g.degrees[j] for t in target_twists],
                    source_twists,
                )
            )
    return OperatorFamily(
        ci_g, ops.betti, ops.lifted, tuple(tuple(col) for col in new_ops), ops.source
    )


def realize_cohomology_element(ops: OperatorFamily, beta) -> tuple[list[Poly], OperatorFamily]:
    """Regular sequence g with (g) = (f) whose operators act on Ext as the
    prescribed combinations xi_j = sum_i beta[j][i] t_i."""
    ci = ops.ci
    p = ci.ring.characteristic
    c = ci.codim
    rows = [[int(e) % p for e in row] for row in beta]
    if len(rows) != c or any(len(r) != c for r in rows):
        raise ShapeError(f"beta must be {c}x{c}")
    if invert(rows, p) is None:
        raise ShapeError("beta is singular over k")
    alpha = [[rows[j][i] for j in range(c)] for i in range(c)]  # transpose
    new_ops = operators_change_basis(ops, alpha)
    g = list(new_ops.ci.f)
    if not ideal_equal(list(ci.f), g, ci):
        raise ShapeError("basis change produced a different ideal")
    return g, new_ops


# -- filter-regular search and the complexity-reduction construction -------------


def filter_regular_search(ext: ExtAction, window, attempts: int = 32, seed: int = 0):
    """Random degree-2 combination xi = sum a_j t_j injective on Ext over the window.

    Zero source spaces count as injective.  Deterministic for a fixed seed;
    raises with the failing ranks when the budget is exhausted.
    """
    indices = list(window)
    if not ext.maps:
        raise FilterRegularSearchError("no operators to combine")
    if indices and max(indices) > len(ext.betti) - 3:
        raise ShapeError("window exceeds the computed Ext range")
    rng = random.Random(seed)
    p = ext.p
    failures = []
    for _ in range(attempts):
        coeffs = tuple(rng.randrange(p) for _ in range(ext.count))
        while all(a == 0 for a in coeffs):
            coeffs = tuple(rng.randrange(p) for _ in range(ext.count))
        bad = None
        for n in indices:
            source_dim = ext.betti[n]
            if source_dim == 0:
                continue
            r = k_rank(ext.combined(coeffs, n), p)
            if r < source_dim:
                bad = (n, r, source_dim)
                break
        if bad is None:
            return coeffs
        failures.append((coeffs, bad))
    detail = "; ".join(
        f"xi={list(cf)} fails at n={n} (rank {r} < {d})" for cf, (n, r, d) in failures[:4]
    )
    raise FilterRegularSearchError(
        f"no filter-regular element found in {attempts} attempts: {detail}"
    )


def _hstack(left: GradedMatrix, right: GradedMatrix) -> GradedMatrix:
    if left.row_twists != right.row_twists:
        raise ShapeError("hstack needs equal row twists")
    entries = [list(lr) + list(rr) for lr, rr in zip(left.entries, right.entries)]
    return GradedMatrix(
        left.ring, entries, left.row_twists, list(left.col_twists) + list(right.col_twists), check=False
    )


def _block_upper(tl: GradedMatrix, tr: GradedMatrix, br: GradedMatrix) -> GradedMatrix:
    """[[tl, tr], [0, br]] with the zero block inferred."""
    ring = tl.ring
    z = ring.zero()
    row_twists = list(tl.row_twists) + list(br.row_twists)
    col_twists = list(tl.col_twists) + list(br.col_twists)
    entries = []
    for i in range(tl.nrows):
        entries.append(list(tl.entries[i]) + list(tr.entries[i]))
    for i in range(br.nrows):
        entries.append([z] * tl.ncols + list(br.entries[i]))
    return GradedMatrix(ring, entries, row_twists, col_twists, check=False)


@dataclass(frozen=True)
class SectionData:
    """Output of the complexity-reduction construction.

    For n >= n0 the operator xi induces surjections F_(n+2) -> F_n with free
    kernels G_n; kernel_diffs are the differentials of the kernel complex,
    which resolves L_(n0) minimally, and blocks records the upper-right block
    of each differential in the adapted bases.
    """

    xi: tuple[int, ...]
    shift: int
    n0: int
    last: int
    betti: tuple[int, ...]
    xi_maps: dict
    kernels: dict
    splittings: dict
    kernel_diffs: dict
    blocks: dict
    basis_changes: dict
    resolution: MinimalResolution

    def kernel_rank(self, n: int) -> int:
        return self.kernels[n].ncols

    def l_betti(self) -> list[int]:
        return [self.kernel_rank(n) for n in range(self.n0, self.last + 1)]

    def l_presentation(self, n: int) -> GradedMatrix:
        """Presentation of L_n = ker(M_(n+2) -> M_n), for n0 <= n < last."""
        return self.kernel_diffs[n + 1]

    def block_matrix(self, n: int) -> GradedMatrix:
        """[[delta_n, U_n], [0, d_n]] in the adapted bases, n0 < n <= last."""
        return _block_upper(
            self.kernel_diffs[n], self.blocks[n], self.resolution.differential(n).shift_twists(self.shift)
        )

    def verify_block_identity(self, n: int) -> bool:
        """Entry-wise check d_(n+2) @ P_n = P_(n-1) @ block(n) over A."""
        ci = self.resolution.ci
        lhs = ci.nf_matrix(self.resolution.differential(n + 2).compose(self.basis_changes[n]))
        rhs = ci.nf_matrix(self.basis_changes[n - 1].compose(self.block_matrix(n)))
        return lhs.entries == rhs.entries


def section_construction(res: MinimalResolution, ops: OperatorFamily, xi, window) -> SectionData:
    """Split the tail of a resolution along a filter-regular operator.

    Checks surjectivity of F_(n+2) (x) k -> F_n (x) k over the window to find
    n0, constructs a splitting and a free kernel basis for each n, and
    verifies the upper-triangular block identity for the differentials in the
    adapted bases.
    """
    ci = res.ci
    ring = ci.ring
    p = ring.characteristic
    xi = tuple(int(a) % p for a in xi)
    if len(xi) != ci.codim or not any(xi):
        raise ShapeError("xi must be a nonzero coefficient vector, one entry per relation")
    shifts = {ci.degrees[j] for j, a in enumerate(xi) if a}
    if len(shifts) != 1:
        raise SectionError(
            "xi mixes operators of different internal degrees; such a combination is not a graded map"
        )
    shift = shifts.pop()
    indices = sorted(window)
    if not indices:
        raise ShapeError("empty window")
    last = indices[-1]
    if last > res.length - 2:
        raise ShapeError("window exceeds the resolution length")

    xi_maps = {}
    for n in range(0, res.length - 1):
        target = [t + shift for t in res.free_twists(n)]
        source = res.free_twists(n + 2)
        acc = [[ring.zero()] * len(source) for _ in target]
        for j, a in enumerate(xi):
            if not a:
                continue
            mat = ops.operator(j, n + 2).entries
            for r in range(len(target)):
                for cidx in range(len(source)):
                    if mat[r][cidx]:
                        acc[r][cidx] = acc[r][cidx] + mat[r][cidx].scale(a)
        xi_maps[n] = ci.nf_matrix(GradedMatrix(ring, acc, target, source, check=False))

    def surjective(n: int) -> bool:
        if res.betti[n] == 0:
            return True
        return k_rank(xi_maps[n].scalar_part(), p) == res.betti[n]

    n0 = None
    for cand in indices:
        if all(surjective(m) for m in indices if m >= cand):
            n0 = cand
            break
    if n0 is None:
        ranks = {n: k_rank(xi_maps[n].scalar_part(), p) for n in indices}
        raise SectionError(f"no surjectivity threshold inside the window; ranks {ranks}")

    kernels: dict = {}
    splittings: dict = {}
    basis_changes: dict = {}
    for n in range(n0, last + 1):
        xi_n = xi_maps[n]
        ident = GradedMatrix.identity(ring, xi_n.row_twists)
        v, _ = solve_graded(ci, xi_n, ident)
        if v is None:
            raise SectionError(f"no splitting at n={n} despite scalar surjectivity")
        proj = GradedMatrix.identity(ring, xi_n.col_twists).sub(v.compose(xi_n))
        proj = ci.nf_matrix(proj)
        expected = res.betti[n + 2] - res.betti[n]
        scalar = proj.scalar_part()
        chosen: list[int] = []
        basis_rows: list[list[int]] = []
        for j in range(proj.ncols):
            col = [scalar[i][j] for i in range(proj.nrows)]
            if not any(col):
                continue
            stacked = basis_rows + [col]
            red, piv = rref(stacked, p)
            if len(piv) > len(basis_rows):
                chosen.append(j)
                basis_rows = red
            if len(chosen) == expected:
                break
        if len(chosen) != expected:
            raise SectionError(f"kernel of the reduced map at n={n} has unexpected rank")
        kern = GradedMatrix(
            ring,
            [[proj.entries[i][j] for j in chosen] for i in range(proj.nrows)],
            proj.row_twists,
            [proj.col_twists[j] for j in chosen],
            check=False,
        )
        kernels[n] = kern
        splittings[n] = v
        basis_changes[n] = _hstack(kern, v)
        if k_rank(basis_changes[n].scalar_part(), p) != res.betti[n + 2]:
            raise SectionError(f"adapted basis at n={n} is not invertible")

    kernel_diffs: dict = {}
    blocks: dict = {}
    for n in range(n0 + 1, last + 1):
        image = ci.nf_matrix(res.differential(n + 2).compose(kernels[n]))
        delta, unique = solve_graded(ci, kernels[n - 1], image)
        if delta is None:
            raise SectionError(f"kernel complex does not close at n={n}")
        kernel_diffs[n] = ci.nf_matrix(delta)
        vn = splittings[n]
        prev_proj = ci.nf_matrix(
            GradedMatrix.identity(ring, xi_maps[n - 1].col_twists).sub(
                splittings[n - 1].compose(xi_maps[n - 1])
            )
        )
        rhs = ci.nf_matrix(prev_proj.compose(ci.nf_matrix(res.differential(n + 2).compose(vn))))
        u, _ = solve_graded(ci, kernels[n - 1], rhs)
        if u is None:
            raise SectionError(f"upper block does not resolve at n={n}")
        blocks[n] = ci.nf_matrix(u)

    data = SectionData(
        xi=xi,
        shift=shift,
        n0=n0,
        last=last,
        betti=res.betti,
        xi_maps=xi_maps,
        kernels=kernels,
        splittings=splittings,
        kernel_diffs=kernel_diffs,
        blocks=blocks,
        basis_changes=basis_changes,
        resolution=res,
    )
    for n in range(n0 + 1, last + 1):
        if not data.verify_block_identity(n):
            raise SectionError(f"block identity fails at n={n}")
        if ord_matrix(kernel_diffs[n], ci) < 1:
            raise SectionError(f"kernel complex is not minimal at n={n}")
    for n in range(n0 + 2, last + 1):
        prod = ci.nf_matrix(kernel_diffs[n - 1].compose(kernel_diffs[n]))
        if not prod.is_zero():
            raise SectionError(f"kernel complex differentials do not compose to zero at n={n}")
    return data
