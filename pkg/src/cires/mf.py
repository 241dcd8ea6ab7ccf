"""Matrix factorizations of a hypersurface element and their 2-periodic resolutions.

A pair (phi, psi) factors f when both products are f times the identity; the
twist bookkeeping treats psi as a map from the target of phi shifted by
deg f, so the alternating complex ... -> phi -> psi -> phi -> coker(phi) is
graded.  Products are compared after reduction against an optional base
ideal, which is how factorizations over Q/(f_2..f_c) are represented.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ShapeError
from .matrices import GradedMatrix, adjugate, determinant
from .polyring import Poly
from .resolution import CIPresentation, MinimalResolution, minimalize, ord_matrix, solve_graded


@dataclass(frozen=True)
class MatrixFactorization:
    phi: GradedMatrix
    psi: GradedMatrix
    f: Poly
    base: tuple[Poly, ...] = field(default_factory=tuple)

    @property
    def size(self) -> int:
        return self.phi.nrows

    def validate(self) -> bool:
        return mf_validate(self.phi, self.psi, self.f, self.base)


def _base_nf(ring, base):
    if not base:
        return lambda e: e
    ctx = CIPresentation(ring, base)
    return ctx.nf


def mf_validate(phi: GradedMatrix, psi: GradedMatrix, f: Poly, base=()) -> bool:
    """True iff phi @ psi and psi @ phi both equal f times the identity."""
    if phi.nrows != phi.ncols or psi.nrows != psi.ncols:
        raise ShapeError("matrix factorization needs square matrices")
    if phi.nrows != psi.nrows:
        raise ShapeError("phi and psi must have equal size")
    d = f.degree()
    if phi.col_twists != psi.row_twists:
        raise ShapeError("psi must map out of the source of phi")
    if psi.col_twists != tuple(t + d for t in phi.row_twists):
        raise ShapeError("psi must land in the target of phi shifted by deg f")
    nf = _base_nf(phi.ring, tuple(base))
    first = phi.compose(psi)
    second = psi.compose(phi.shift_twists(d))
    for product in (first, second):
        n = product.nrows
        for i in range(n):
            for j in range(n):
                want = f if i == j else phi.ring.zero()
                if nf(product.entries[i][j] - want):
                    return False
    return True


def mf_periodic_resolution(mf: MatrixFactorization, ci: CIPresentation, length: int) -> MinimalResolution:
    """The 2-periodic minimal resolution of coker(phi) over A = Q/(f).

    Requires f (and the base ideal) to lie in (ci.f) and both reduced
    matrices to be minimal; a unit entry means coker(phi) has a free summand
    and the alternating complex would not be minimal.
    """
    if length < 1:
        raise ValueError("length must be at least 1")
    if not mf.validate():
        raise ShapeError("not a matrix factorization")
    if ci.nf(mf.f):
        raise ShapeError(f"{mf.f} does not lie in the relation ideal")
    for b in mf.base:
        if ci.nf(b):
            raise ShapeError(f"base relation {b} does not lie in the relation ideal")
    phi = ci.nf_matrix(mf.phi)
    psi = ci.nf_matrix(mf.psi)
    for name, m in (("phi", phi), ("psi", psi)):
        if ord_matrix(m) < 1:
            raise ShapeError(f"{name} has a unit entry after reduction; the resolution would not be minimal")
    d = mf.f.degree()
    diffs = []
    for i in range(length):
        step = phi if i % 2 == 0 else psi
        diffs.append(step.shift_twists((i // 2) * d))
    betti = [diffs[0].nrows] + [m.ncols for m in diffs]
    return MinimalResolution(ci, tuple(diffs), tuple(betti))


def mf_from_projdim1(pres: GradedMatrix, f: Poly, base=()) -> MatrixFactorization:
    """Recover psi from a square presentation with f annihilating the cokernel.

    The entries of psi solve phi @ psi = f * I degree by degree; no solution,
    or a non-unique one, signals that the cokernel is not of the right kind.
    """
    base = tuple(base)
    ring = pres.ring
    ctx = CIPresentation(ring, base)
    phi = minimalize([ctx.nf_matrix(pres)], ctx if base else None)[0]
    if phi.nrows != phi.ncols:
        raise ShapeError(
            f"presentation minimalizes to {phi.nrows}x{phi.ncols}; a square matrix is required"
        )
    d = f.degree()
    rhs_twists = [t + d for t in phi.row_twists]
    z = ring.zero()
    rhs = GradedMatrix(
        ring,
        [[f if i == j else z for j in range(phi.nrows)] for i in range(phi.nrows)],
        phi.row_twists,
        rhs_twists,
        check=False,
    )
    psi, unique = solve_graded(ctx, phi, rhs)
    if psi is None:
        raise ShapeError("no factorization: f does not annihilate the cokernel or its projective dimension exceeds 1")
    if not unique:
        raise ShapeError("factorization is not unique: the presentation is not injective")
    mf = MatrixFactorization(phi, ctx.nf_matrix(psi), f, base)
    if not mf.validate():
        raise ShapeError("recovered psi fails the factorization identities")
    return mf


def ulrich_example(ci: CIPresentation, kind: str, factors=None, matrix=None) -> MatrixFactorization:
    """Constructive factorizations of f_1 with ord(phi) = deg(f_1) - 1.

    kind 'product-of-linear-forms': f_1 = l_1 * ... * l_d, phi is the product
    of the first d-1 factors and psi the last.  kind 'determinantal':
    f_1 = det(L) for a square matrix of linear forms, phi the adjugate and
    psi the matrix itself.
    """
    ring = ci.ring
    f1 = ci.f[0]
    d = f1.degree()
    if kind == "product-of-linear-forms":
        if not factors:
            raise ShapeError("a list of linear factors is required")
        polys = [ring.poly(s) if isinstance(s, str) else s for s in factors]
        for l in polys:
            if not l or not l.is_homogeneous() or l.degree() != 1:
                raise ShapeError(f"factor {l} is not a linear form")
        prod = ring.one()
        for l in polys:
            prod = prod * l
        if prod != f1:
            raise ShapeError(f"product of the factors is {prod}, not f_1 = {f1}")
        phi_poly = ring.one()
        for l in polys[:-1]:
            phi_poly = phi_poly * l
        phi = GradedMatrix(ring, [[phi_poly]], [0], [d - 1])
        psi = GradedMatrix(ring, [[polys[-1]]], [d - 1], [d])
        mf = MatrixFactorization(phi, psi, f1)
    elif kind == "determinantal":
        if matrix is None:
            raise ShapeError("a square matrix of linear forms is required")
        rows = [[ring.poly(s) if isinstance(s, str) else s for s in row] for row in matrix]
        size = len(rows)
        lmat = GradedMatrix(ring, rows, [0] * size, [1] * size)
        det = determinant(lmat)
        if not det:
            raise ShapeError("zero determinant")
        if det != f1:
            raise ShapeError(f"det(L) = {det}, not f_1 = {f1}")
        if size != d:
            raise ShapeError("matrix size must equal deg f_1 for a linear determinantal form")
        phi = adjugate(lmat)
        psi = lmat.shift_twists(d)
        mf = MatrixFactorization(phi, psi, f1)
    else:
        raise ShapeError(f"unknown kind {kind!r}")
    if not mf.validate():
        raise ShapeError("constructed pair fails the factorization identities")
    if ord_matrix(mf.phi) != d - 1 or ord_matrix(mf.psi) != 1:
        raise ShapeError("constructed pair misses the extremal order profile")
    return mf
