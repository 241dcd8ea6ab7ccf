"""Groebner bases for submodules of graded free modules over F_p[x_1..x_n].

The engine is plain Buchberger with the normal selection strategy, full tail
reduction and canonical auto-reduction, so bases are unique for a fixed
generator order.  Every basis element carries its expression in terms of the
input generators, and S-pair reductions that hit zero are recorded; by
Schreyer's observation those records generate the syzygy module of the
inputs, which is how kernels are computed.

Module terms are pairs (component, monomial).  The module order compares
twisted degree first, then degrevlex on the monomial, then position, which
is degree-compatible for the ambient twists and multiplicative.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations

from .errors import HomogeneityError, RegularSequenceError, RingMismatchError, ShapeError
from .linalg import inv_mod
from .matrices import GradedMatrix
from .polyring import (
    Poly,
    PolyRing,
    drl_key,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


@dataclass(frozen=True)
class MonomialOrder:
    """Total order on module terms: (kind, ambient twists) fixes the tie-break."""

    kind: str = "degrevlex"
    twists: tuple[int, ...] = (0,)

    def key(self, term):
        comp, mono = term
        return (sum(mono) + self.twists[comp], drl_key(mono), -comp)


class FreeModuleElement:
    """Element of a twisted graded free module, one Poly per component."""

    __slots__ = ("ring", "twists", "terms")

    def __init__(self, ring: PolyRing, twists, terms: dict):
        self.ring = ring
        self.twists = tuple(twists)
        self.terms = terms

    @classmethod
    def from_components(cls, components: list[Poly], twists=None) -> "FreeModuleElement":
        if not components:
            raise ShapeError("a module element needs at least one component")
        ring = components[0].ring
        if twists is None:
            twists = (0,) * len(components)
        terms: dict = {}
        for i, c in enumerate(components):
            if c.ring != ring:
                raise RingMismatchError("components from different rings")
            for mono, coeff in c.terms.items():
                terms[(i, mono)] = coeff
        return cls(ring, twists, terms)

    @property
    def rank(self) -> int:
        return len(self.twists)

    @property
    def components(self) -> tuple[Poly, ...]:
        polys = [dict() for _ in self.twists]
        for (comp, mono), coeff in self.terms.items():
            polys[comp][mono] = coeff
        return tuple(Poly(self.ring, t) for t in polys)

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        degs = {sum(mono) + self.twists[comp] for comp, mono in self.terms}
        return len(degs) <= 1

    def degree(self) -> int:
        """Twisted degree of a homogeneous element; -1 for zero."""
        if not self.terms:
            return -1
        degs = {sum(mono) + self.twists[comp] for comp, mono in self.terms}
        if len(degs) != 1:
            raise HomogeneityError("element is not homogeneous")
        return degs.pop()

    def lead_term(self, order: MonomialOrder):
        t = max(self.terms, key=order.key)
        return t, self.terms[t]

    def __eq__(self, other):
        if not isinstance(other, FreeModuleElement):
            return NotImplemented
        return (
            self.ring == other.ring and self.twists == other.twists and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.twists, frozenset(self.terms.items())))

    def __repr__(self):
        return "FreeModuleElement(" + ", ".join(str(c) for c in self.components) + ")"


# -- raw-dict kernel ----------------------------------------------------------


def _vec_monic(v: dict, key, p: int):
    lead = max(v, key=key)
    inv = inv_mod(v[lead], p)
    if inv == 1:
        return dict(v), lead
    return {t: (c * inv) % p for t, c in v.items()}, lead


def _vec_sub_shifted(dst: dict, src: dict, mono, coeff: int, p: int):
    """dst -= coeff * x^mono * src, in place."""
    for (comp, m), c in src.items():
        t = (comp, mono_mul(m, mono))
        v = (dst.get(t, 0) - coeff * c) % p
        if v:
            dst[t] = v
        else:
            dst.pop(t, None)


def _reduce_full(v: dict, basis: list[dict], leads: list, key, p: int, track: bool):
    """Full division: v = sum_k cof_k * basis_k + remainder.

    Basis elements are monic.  The remainder has no term divisible by any
    lead term.  Cofactors are poly dicts {monomial: coeff} when track is set.
    """
    work = dict(v)
    rem: dict = {}
    cofs: list[dict] = [{} for _ in basis] if track else []
    while work:
        t = max(work, key=key)
        coeff = work.pop(t)
        comp, mono = t
        hit = -1
        for k, (lc, lm) in enumerate(leads):
            if lc == comp and mono_divides(lm, mono):
                hit = k
                break
        if hit < 0:
            rem[t] = coeff
            continue
        q = mono_div(mono, leads[hit][1])
        g = basis[hit]
        for (gc, gm), gcoeff in g.items():
            if (gc, gm) == leads[hit]:
                continue
            tt = (gc, mono_mul(gm, q))
            val = (work.get(tt, 0) - coeff * gcoeff) % p
            if val:
                work[tt] = val
            else:
                work.pop(tt, None)
        if track:
            cof = cofs[hit]
            cof[q] = (cof.get(q, 0) + coeff) % p
    return rem, cofs


def _track_combine(base: dict, cofs, tracks, p: int) -> dict:
    """base - sum_k cofs[k] * tracks[k], all dicts over (input index, monomial)."""
    out = dict(base)
    for k, cof in enumerate(cofs):
        if not cof:
            continue
        src = tracks[k]
        for q, c in cof.items():
            _vec_sub_shifted(out, src, q, c, p)
    return out


def _buchberger(inputs: list[dict], order: MonomialOrder, p: int, nvars: int, want_syzygies: bool, track: bool):
    """Returns (basis dicts, lead terms, tracking dicts, syzygy dicts).

    Inputs stay in the working basis untouched while pairs are processed, so
    the recorded zero-reductions generate the full syzygy module of the
    inputs.  No pair is skipped: the coprime criterion is unsound for module
    components and the chain criterion would complicate the syzygy argument.
    """
    key = order.key
    track = track or want_syzygies
    basis: list[dict] = []
    leads: list = []
    tracks: list[dict] = []
    syzygies: list[dict] = []
    zero_mono = (0,) * nvars

    for i, g in enumerate(inputs):
        if not g:
            if want_syzygies:
                syzygies.append({(i, zero_mono): 1})
            continue
        monic, lead = _vec_monic(g, key, p)
        inv = inv_mod(g[lead], p)
        basis.append(monic)
        leads.append(lead)
        if track:
            tracks.append({(i, zero_mono): inv})

    pairs: list = []
    for a, b in combinations(range(len(basis)), 2):
        if leads[a][0] == leads[b][0]:
            lcm = mono_lcm(leads[a][1], leads[b][1])
            deg = sum(lcm) + order.twists[leads[a][0]]
            heapq.heappush(pairs, (deg, a, b))

    while pairs:
        _, a, b = heapq.heappop(pairs)
        comp = leads[a][0]
        lcm = mono_lcm(leads[a][1], leads[b][1])
        qa = mono_div(lcm, leads[a][1])
        qb = mono_div(lcm, leads[b][1])
        s: dict = {}
        _vec_sub_shifted(s, basis[a], qa, p - 1, p)
        _vec_sub_shifted(s, basis[b], qb, 1, p)
        rem, cofs = _reduce_full(s, basis, leads, key, p, track)
        if track:
            u = {}
            _vec_sub_shifted(u, tracks[a], qa, p - 1, p)
            _vec_sub_shifted(u, tracks[b], qb, 1, p)
            u = _track_combine(u, cofs, tracks, p)
        if not rem:
            if want_syzygies and u:
                syzygies.append(u)
            continue
        lead = max(rem, key=key)
        inv = inv_mod(rem[lead], p)
        monic = {t: (c * inv) % p for t, c in rem.items()} if inv != 1 else rem
        new = len(basis)
        basis.append(monic)
        leads.append(lead)
        if track:
            tracks.append({t: (c * inv) % p for t, c in u.items()})
        for k in range(new):
            if leads[k][0] == lead[0]:
                lcm = mono_lcm(leads[k][1], lead[1])
                deg = sum(lcm) + order.twists[lead[0]]
                heapq.heappush(pairs, (deg, k, new))
    return basis, leads, tracks, syzygies


def _interreduce(basis, leads, tracks, order: MonomialOrder, p: int):
    """Canonical reduced basis: minimal lead set, fully tail-reduced, sorted."""
    key = order.key
    by_lead = sorted(range(len(basis)), key=lambda k: key(leads[k]))
    kept: list[int] = []
    for k in by_lead:
        comp, mono = leads[k]
        if any(
            leads[j][0] == comp and mono_divides(leads[j][1], mono) for j in kept
        ):
            continue
        kept.append(k)
    out_basis = [basis[k] for k in kept]
    out_leads = [leads[k] for k in kept]
    out_tracks = [tracks[k] for k in kept] if tracks else []
    for idx in range(len(out_basis)):
        others = [j for j in range(len(out_basis)) if j != idx]
        rem, cofs = _reduce_full(
            out_basis[idx],
            [out_basis[j] for j in others],
            [out_leads[j] for j in others],
            key,
            p,
            bool(out_tracks),
        )
        out_basis[idx] = rem
        if out_tracks:
            u = dict(out_tracks[idx])
            for pos, j in enumerate(others):
                cof = cofs[pos]
                for q, c in cof.items():
                    _vec_sub_shifted(u, out_tracks[j], q, c, p)
            out_tracks[idx] = u
    return out_basis, out_leads, out_tracks


class GroebnerBasis:
    """Auto-reduced monic basis; optionally carries input cofactors."""

    __slots__ = ("ring", "twists", "order", "modulus", "generators", "transform", "input_count")

    def __init__(self, ring, twists, order, modulus, generators, transform, input_count):
        self.ring = ring
        self.twists = tuple(twists)
        self.order = order
        self.modulus = tuple(modulus)
        self.generators = tuple(generators)
        self.transform = transform
        self.input_count = input_count

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.twists == other.twists
            and [g.terms for g in self.generators] == [g.terms for g in other.generators]
        )

    def __hash__(self):
        return hash((self.ring, self.twists, tuple(frozenset(g.terms.items()) for g in self.generators)))

    def _dicts(self):
        key = self.order.key
        basis = [g.terms for g in self.generators]
        leads = [max(t, key=key) for t in basis]
        return basis, leads

    def reduce(self, v: FreeModuleElement):
        """Normal form plus cofactors on the basis generators."""
        basis, leads = self._dicts()
        p = self.ring.characteristic
        rem, cofs = _reduce_full(v.terms, basis, leads, self.order.key, p, True)
        remainder = FreeModuleElement(self.ring, self.twists, rem)
        cofactors = tuple(Poly(self.ring, dict(c)) for c in cofs)
        return remainder, cofactors

    def reduce_poly(self, f: Poly):
        """Ring-level normal form, for rank-1 bases."""
        if len(self.twists) != 1:
            raise ShapeError("reduce_poly needs a rank-1 basis")
        v = FreeModuleElement.from_components([f], self.twists)
        rem, cofs = self.reduce(v)
        return rem.components[0], cofs

    def contains(self, v) -> bool:
        if isinstance(v, Poly):
            return not self.reduce_poly(v)[0]
        return self.reduce(v)[0].is_zero()


def _as_vectors(gens, modulus, rank, twists, ring):
    vectors = []
    for g in gens:
        if isinstance(g, Poly):
            g = FreeModuleElement.from_components([g], twists)
        if g.ring != ring:
            raise RingMismatchError("generators from different rings")
        if g.twists != twists:
            raise ShapeError("generators live in different ambient modules")
        vectors.append(dict(g.terms))
    for f in modulus:
        if f.ring != ring:
            raise RingMismatchError("modulus from a different ring")
        for k in range(rank):
            vectors.append({(k, mono): c for mono, c in f.terms.items()})
    return vectors


def groebner_basis(gens, order: MonomialOrder | None = None, modulus=None, track: bool = True) -> GroebnerBasis:
    """Buchberger-complete auto-reduced basis of the module the generators span.

    `modulus` ring elements are adjoined on every ambient basis vector, which
    is how submodules of free modules over the quotient ring are handled.
    Deterministic: the normal selection strategy breaks ties by input index.
    """
    gens = list(gens)
    modulus = tuple(modulus or ())
    if not gens and not modulus:
        return GroebnerBasis(None, (0,), order or MonomialOrder(), (), (), (), 0)
    if gens:
        first = gens[0]
        ring = first.ring
        twists = first.twists if isinstance(first, FreeModuleElement) else (0,)
    else:
        ring = modulus[0].ring
        twists = (0,)
    rank = len(twists)
    if order is None:
        order = MonomialOrder("degrevlex" if rank == 1 else "module-induced", twists)
    vectors = _as_vectors(gens, modulus, rank, twists, ring)
    p = ring.characteristic
    basis, leads, tracks, _ = _buchberger(
        vectors, order, p, ring.nvars, want_syzygies=False, track=track
    )
    basis, leads, tracks = _interreduce(basis, leads, tracks, order, p)
    generators = [FreeModuleElement(ring, twists, dict(b)) for b in basis]
    transform = None
    if track:
        n_inputs = len(vectors)
        transform = []
        for u in tracks:
            row = [dict() for _ in range(n_inputs)]
            for (i, mono), c in u.items():
                row[i][mono] = c
            transform.append(tuple(Poly(ring, d) for d in row))
        transform = tuple(transform)
    return GroebnerBasis(ring, twists, order, modulus, generators, transform, len(gens))


def normal_form(v, gb: GroebnerBasis):
    """Remainder and cofactors of v against gb: v = sum cof_i * gen_i + rem."""
    if isinstance(v, Poly):
        rem, cofs = gb.reduce_poly(v)
        return rem, cofs
    return gb.reduce(v)


_RING_GB_CACHE: dict = {}


def ring_groebner(ring: PolyRing, polys, track: bool = True) -> GroebnerBasis:
    """Cached rank-1 Groebner basis of an ideal, with input cofactors."""
    key = (ring, tuple(polys), track)
    gb = _RING_GB_CACHE.get(key)
    if gb is None:
        gb = groebner_basis(list(polys), MonomialOrder("degrevlex", (0,)), track=track)
        _RING_GB_CACHE[key] = gb
    return gb


def ideal_equal(i_gens, j_gens, ci) -> bool:
    """Equality of the two ideals as ideals of A = Q/(f), via canonical bases."""
    gi = groebner_basis(list(i_gens), modulus=ci.f, track=False)
    gj = groebner_basis(list(j_gens), modulus=ci.f, track=False)
    return [g.terms for g in gi.generators] == [g.terms for g in gj.generators]


def ideal_contains(i_gens, j_gens, ci) -> bool:
    """True when every generator of J reduces to zero against (I, f)."""
    gi = groebner_basis(list(i_gens), modulus=ci.f, track=False)
    return all(not gi.reduce_poly(g)[0] for g in j_gens)


def syzygies(m: GradedMatrix, modulus=None) -> GradedMatrix:
    """Generators of the kernel of m, over Q or over A = Q/(modulus).

    Columns of the result are homogeneous with induced twists; entries are
    normal forms against the modulus ideal.  Trivial columns are dropped and
    the rest sorted by (degree, lead term), so the output is deterministic.
    """
    ring = m.ring
    p = ring.characteristic
    modulus = tuple(modulus or ())
    ncols = m.ncols
    if m.nrows == 0:
        # kernel of the map out of A^ncols into the zero module is everything
        return GradedMatrix.identity(ring, m.col_twists)
    order = MonomialOrder("module-induced", m.row_twists)
    columns = []
    for j in range(ncols):
        col = {}
        for i in range(m.nrows):
            e = m.entries[i][j]
            for mono, c in e.terms.items():
                col[(i, mono)] = c
        columns.append(col)
    input_twists = list(m.col_twists)
    vectors = list(columns)
    for f in modulus:
        fdeg = f.degree()
        for k in range(m.nrows):
            vectors.append({(k, mono): c for mono, c in f.terms.items()})
            input_twists.append(fdeg + m.row_twists[k])
    _, _, _, syz = _buchberger(vectors, order, p, ring.nvars, want_syzygies=True, track=True)

    gb_mod = ring_groebner(ring, modulus, track=False) if modulus else None
    cols_out = []
    for u in syz:
        comp_polys = [dict() for _ in range(ncols)]
        degree = None
        for (i, mono), c in u.items():
            if i >= ncols:
                continue
            comp_polys[i][mono] = c
            d = sum(mono) + input_twists[i]
            degree = d if degree is None else degree
            if d != degree:
                raise HomogeneityError("inhomogeneous syzygy; inputs were not homogeneous")
        polys = [Poly(ring, t) for t in comp_polys]
        if gb_mod is not None:
            polys = [gb_mod.reduce_poly(q)[0] for q in polys]
        if not any(polys):
            continue
        if degree is None:
            degree = 0
        cols_out.append((degree, polys))

    out_key = MonomialOrder("module-induced", m.col_twists).key

    def col_key(item):
        degree, polys = item
        terms = {}
        for i, q in enumerate(polys):
            for mono, c in q.terms.items():
                terms[(i, mono)] = c
        return (degree, out_key(max(terms, key=out_key)), sorted(terms.items()))

    cols_out.sort(key=col_key)
    deduped = []
    for item in cols_out:
        if deduped and deduped[-1][1] == item[1]:
            continue
        deduped.append(item)
    col_twists = [d for d, _ in deduped]
    z = ring.zero()
    entries = [[z] * len(deduped) for _ in range(ncols)]
    for jj, (_, polys) in enumerate(deduped):
        for i in range(ncols):
            entries[i][jj] = polys[i]
    return GradedMatrix(ring, entries, m.col_twists, col_twists)


# -- Hilbert series -----------------------------------------------------------


@dataclass(frozen=True)
class HilbertData:
    """h-polynomial (ascending coefficients), Krull dimension, optional length."""

    numerator: tuple[int, ...]
    dim: int
    length: int | None

    def numerator_at_one(self) -> int:
        return sum(self.numerator)


def _zpoly_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def zpoly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _zpoly_trim(out)


def zpoly_div_one_minus_z(a) -> tuple[int, ...]:
    """Exact division by (1 - z); raises when it does not divide."""
    if not a:
        return ()
    q = [0] * len(a)
    prev = 0
    for k, c in enumerate(a):
        q[k] = c + prev
        prev = q[k]
    if q[-1] != 0:
        raise ArithmeticError("(1 - z) does not divide the numerator")
    q.pop()
    return _zpoly_trim(q)


def geometric_sum(s: int) -> tuple[int, ...]:
    """1 + z + ... + z^(s-1)."""
    return (1,) * s


def koszul_numerator(degrees) -> tuple[int, ...]:
    out: tuple[int, ...] = (1,)
    for s in degrees:
        factor = [0] * (s + 1)
        factor[0] = 1
        factor[s] = -1
        out = zpoly_mul(out, factor)
    return out


def _minimal_mono_gens(gens):
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    out = []
    for g in gens:
        if not any(mono_divides(h, g) for h in out):
            out.append(g)
    return tuple(out)


_MONO_NUM_CACHE: dict = {}


def _mono_ideal_numerator(gens: tuple) -> tuple[int, ...]:
    """Numerator of Hilb(Q/L) over (1-z)^n for a monomial ideal L."""
    gens = _minimal_mono_gens(gens)
    cached = _MONO_NUM_CACHE.get(gens)
    if cached is not None:
        return cached
    if not gens:
        result: tuple[int, ...] = (1,)
    elif any(sum(g) == 0 for g in gens):
        result = ()
    else:
        supports = [tuple(i for i, e in enumerate(g) if e) for g in gens]
        if all(len(s) == 1 for s in supports):
            result = koszul_numerator(sum(g) for g in gens)
        else:
            counts: dict[int, int] = {}
            for s in supports:
                if len(s) > 1:
                    for i in s:
                        counts[i] = counts.get(i, 0) + 1
            pivot = max(counts, key=lambda i: (counts[i], -i))
            n = len(gens[0])
            pvec = tuple(1 if i == pivot else 0 for i in range(n))
            plus = _mono_ideal_numerator(gens + (pvec,))
            colon = _mono_ideal_numerator(
                tuple(tuple(e - 1 if i == pivot and e else e for i, e in enumerate(g)) for g in gens)
            )
            shifted = (0,) + colon
            width = max(len(plus), len(shifted))
            result = _zpoly_trim([
                (plus[i] if i < len(plus) else 0) + (shifted[i] if i < len(shifted) else 0)
                for i in range(width)
            ])
    _MONO_NUM_CACHE[gens] = result
    return result


def _mono_ideal_dim(gens: tuple, nvars: int) -> int:
    """Krull dimension of Q/L by variable-subset search; -1 for the unit ideal."""
    gens = _minimal_mono_gens(gens)
    if not gens:
        return nvars
    if any(sum(g) == 0 for g in gens):
        return -1
    supports = [set(i for i, e in enumerate(g) if e) for g in gens]
    for size in range(nvars, -1, -1):
        for subset in combinations(range(nvars), size):
            s = set(subset)
            if all(not supp <= s for supp in supports):
                return size
    return -1


def hilbert_series(pres: GradedMatrix, ci=None) -> HilbertData:
    """Exact Hilbert data of coker(pres) via lead-term monomial counting."""
    ring = pres.ring
    n = ring.nvars
    matrix = pres
    if ci is not None:
        extra_entries = []
        extra_twists = []
        for f in ci.f:
            fdeg = f.degree()
            for k in range(pres.nrows):
                extra_twists.append(fdeg + pres.row_twists[k])
        z = ring.zero()
        rows = []
        for i in range(pres.nrows):
            row = list(pres.entries[i])
            for f in ci.f:
                for k in range(pres.nrows):
                    row.append(f if k == i else z)
            rows.append(row)
        matrix = GradedMatrix(
            ring, rows, pres.row_twists, list(pres.col_twists) + extra_twists, check=False
        )
    gens = [
        FreeModuleElement.from_components(matrix.column(j), matrix.row_twists)
        for j in range(matrix.ncols)
        if any(matrix.column(j))
    ]
    order = MonomialOrder("module-induced", matrix.row_twists)
    gb = groebner_basis(gens, order, track=False) if gens else None
    lead_monos: list[list[tuple]] = [[] for _ in range(matrix.nrows)]
    if gb is not None:
        for g in gb.generators:
            (comp, mono), _ = g.lead_term(order)
            lead_monos[comp].append(mono)
    total: list[int] = []
    dim = -1
    for i in range(matrix.nrows):
        gens_i = tuple(lead_monos[i])
        num = _mono_ideal_numerator(gens_i)
        dim = max(dim, _mono_ideal_dim(gens_i, n))
        shifted = (0,) * matrix.row_twists[i] + num
        width = max(len(total), len(shifted))
        total = [
            (total[k] if k < len(total) else 0) + (shifted[k] if k < len(shifted) else 0)
            for k in range(width)
        ]
    numerator = _zpoly_trim(total)
    if not numerator:
        return HilbertData((), -1, 0)
    h = numerator
    for _ in range(n - dim):
        h = zpoly_div_one_minus_z(h)
    length = sum(h) if dim == 0 else None
    return HilbertData(h, dim, length)


def is_regular_sequence(f) -> bool:
    """Exact Hilbert-series test for a homogeneous regular sequence."""
    f = list(f)
    if not f:
        return True
    ring = f[0].ring
    degrees = []
    for q in f:
        if not q.is_homogeneous() or not q:
            raise HomogeneityError(f"{q} must be nonzero homogeneous")
        if q.degree() == 0:
            raise HomogeneityError("constants are not allowed in a regular sequence")
        degrees.append(q.degree())
    if len(f) > ring.nvars:
        return False
    gb = ring_groebner(ring, tuple(f), track=False)
    order = gb.order
    lead = tuple(g.lead_term(order)[0][1] for g in gb.generators)
    numerator = _mono_ideal_numerator(lead)
    return numerator == koszul_numerator(degrees)


def regular_sequence_defect(f) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(computed numerator, expected Koszul numerator) for diagnostics."""
    f = list(f)
    ring = f[0].ring
    gb = ring_groebner(ring, tuple(f), track=False)
    lead = tuple(g.lead_term(gb.order)[0][1] for g in gb.generators)
    return _mono_ideal_numerator(lead), koszul_numerator([q.degree() for q in f])
