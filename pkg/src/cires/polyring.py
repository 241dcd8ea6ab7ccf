"""Exact multivariate polynomial arithmetic over a prime field.

Monomials are exponent tuples, the grading is standard (every variable has
degree 1) and the term order is degrevlex throughout.  Polynomials are
immutable once built; the zero polynomial is the empty term map.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import HomogeneityError, ParseError, RingMismatchError

DEFAULT_CHARACTERISTIC = 32003
MAX_EXPONENT = 2**20


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeFieldElement:
    """Residue in [0, p); arithmetic is closed and exact."""

    value: int
    p: int = DEFAULT_CHARACTERISTIC

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise RingMismatchError("mixed characteristics")
            return other.value
        return int(other)

    def __add__(self, other):
        return PrimeFieldElement(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return PrimeFieldElement(self.value - self._coerce(other), self.p)

    def __mul__(self, other):
        return PrimeFieldElement(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def inverse(self) -> "PrimeFieldElement":
        if self.value == 0:
            raise ZeroDivisionError("0 is not invertible")
        return PrimeFieldElement(pow(self.value, self.p - 2, self.p), self.p)

    def __int__(self):
        return self.value


def mono_degree(m: tuple[int, ...]) -> int:
    return sum(m)

def mono_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))

def mono_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """True when a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))

def mono_div(b: tuple[int, ...], a: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(y - x for x, y in zip(a, b))

def mono_lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))

def drl_key(m: tuple[int, ...]):
    """Sort key realizing degrevlex: max() over keys is the lead monomial."""
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class PolyRing:
    """Handle for F_p[x_1..x_n] with the standard grading."""

    characteristic: int = DEFAULT_CHARACTERISTIC
    variables: tuple[str, ...] = ("x", "y")

    def __post_init__(self):
        if not _is_prime(self.characteristic):
            raise ValueError(f"characteristic {self.characteristic} is not prime")
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.constant(1)

    def constant(self, c: int) -> "Poly":
        c %= self.characteristic
        if c == 0:
            return Poly(self, {})
        return Poly(self, {(0,) * self.nvars: c})

    def variable(self, name: str) -> "Poly":
        i = self.variables.index(name)
        expo = [0] * self.nvars
        expo[i] = 1
        return Poly(self, {tuple(expo): 1})

    def monomial(self, exponents, coeff: int = 1) -> "Poly":
        c = coeff % self.characteristic
        if c == 0:
            return Poly(self, {})
        expo = tuple(int(e) for e in exponents)
        if len(expo) != self.nvars or any(e < 0 for e in expo):
            raise ValueError(f"bad exponent vector {exponents}")
        return Poly(self, {expo: c})

    def poly(self, text: str) -> "Poly":
        return parse_poly(text, self)

    def monomials_of_degree(self, d: int) -> list[tuple[int, ...]]:
        """All degree-d monomials, descending degrevlex."""
        out: list[tuple[int, ...]] = []

        def rec(prefix, remaining, slot):
            if slot == self.nvars - 1:
                out.append(tuple(prefix + [remaining]))
                return
            for e in range(remaining, -1, -1):
                rec(prefix + [e], remaining - e, slot + 1)

        if d < 0:
            return []
        rec([], d, 0)
        out.sort(key=drl_key, reverse=True)
        return out


class Poly:
    """Sparse polynomial: map from exponent tuple to nonzero residue."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    def _check(self, other: "Poly"):
        if self.ring != other.ring:
            raise RingMismatchError("polynomials from different rings")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        p = self.ring.characteristic
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = (terms.get(m, 0) + c) % p
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Poly(self.ring, terms)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        p = self.ring.characteristic
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = (terms.get(m, 0) - c) % p
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Poly(self.ring, terms)

    def __neg__(self) -> "Poly":
        p = self.ring.characteristic
        return Poly(self.ring, {m: (-c) % p for m, c in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        p = self.ring.characteristic
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = (acc.get(m, 0) + c1 * c2) % p
                if v:
                    acc[m] = v
                else:
                    acc.pop(m, None)
        return Poly(self.ring, acc)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale(self, c: int) -> "Poly":
        p = self.ring.characteristic
        c %= p
        if c == 0:
            return self.ring.zero()
        return Poly(self.ring, {m: (c * v) % p for m, v in self.terms.items()})

    def degree(self) -> int:
        """Maximum total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def order(self):
        """Minimum total degree of a nonzero term; +inf for zero."""
        if not self.terms:
            return math.inf
        return min(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_component(self, d: int) -> "Poly":
        return Poly(self.ring, {m: c for m, c in self.terms.items() if sum(m) == d})

    def lead_term(self) -> tuple[tuple[int, ...], int]:
        """(monomial, coefficient) of the degrevlex-largest term."""
        if not self.terms:
            raise ValueError("zero polynomial has no lead term")
        m = max(self.terms, key=drl_key)
        return m, self.terms[m]

    def coefficient(self, mono: tuple[int, ...]) -> int:
        return self.terms.get(tuple(mono), 0)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.ring.nvars, 0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return [(m, self.terms[m]) for m in sorted(self.terms, key=drl_key, reverse=True)]

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.variables
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return "+".join(parts)

    def __repr__(self):
        return f"Poly({self})"


def ord_poly(p: Poly):
    """Minimum degree among nonzero terms; +inf for the zero polynomial."""
    return p.order()


def initial_form(p: Poly) -> Poly:
    """Lowest-degree homogeneous component; rejects the zero polynomial."""
    if not p:
        raise ValueError("initial form of zero is undefined")
    return p.homogeneous_component(int(p.order()))


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


_TOKEN = re.compile(r"(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^])|(?P<bad>\S)")


def _tokenize(text: str):
    tokens = []
    for match in _TOKEN.finditer(text):
        if match.lastgroup == "bad":
            raise ParseError(f"unexpected character {match.group()!r}", match.start())
        tokens.append((match.lastgroup, match.group(), match.start()))
    return tokens


def parse_poly(text: str, ring: PolyRing) -> Poly:
    """Parse the polynomial grammar; coefficients are reduced mod p.

    poly    := ['-'] term (('+'|'-') term)*
    term    := coeff | coeff '*' factors | factors
    factors := varpow ('*' varpow)*
    varpow  := ident ('^' uint)?
    coeff   := uint
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial", 0)
    p = ring.characteristic
    n = ring.nvars
    pos = 0
    terms: dict = {}

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None, len(text))

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def parse_varpow(expo):
        kind, value, at = take()
        if kind != "ident":
            raise ParseError("expected a variable name", at)
        try:
            idx = ring.variables.index(value)
        except ValueError:
            raise ParseError(f"unknown variable {value!r}", at) from None
        e = 1
        if peek()[0] == "op" and peek()[1] == "^":
            take()
            kind, value, at = take()
            if kind != "int":
                raise ParseError("expected an exponent", at)
            e = int(value)
            if e > MAX_EXPONENT:
                raise ParseError("exponent overflow", at)
        expo[idx] += e
        if expo[idx] > MAX_EXPONENT:
            raise ParseError("exponent overflow", at)

    def parse_term(sign):
        coeff = 1
        expo = [0] * n
        kind, value, at = peek()
        if kind == "int":
            take()
            coeff = int(value) % p
            if peek()[0] == "op" and peek()[1] == "*":
                take()
                parse_varpow(expo)
            else:
                _accumulate(tuple(expo), sign * coeff)
                return
        else:
            parse_varpow(expo)
        while peek()[0] == "op" and peek()[1] == "*":
            take()
            parse_varpow(expo)
        _accumulate(tuple(expo), sign * coeff)

    def _accumulate(mono, c):
        v = (terms.get(mono, 0) + c) % p
        if v:
            terms[mono] = v
        else:
            terms.pop(mono, None)

    sign = 1
    if peek()[0] == "op" and peek()[1] == "-":
        take()
        sign = -1
    parse_term(sign)
    while pos < len(tokens):
        kind, value, at = take()
        if kind != "op" or value not in "+-":
            raise ParseError("expected '+' or '-'", at)
        parse_term(1 if value == "+" else -1)
    return Poly(ring, terms)


def require_homogeneous(p: Poly, degree: int | None = None) -> int:
    """Degree of a homogeneous polynomial, checking against `degree` if given."""
    if not p.is_homogeneous():
        raise HomogeneityError(f"{p} is not homogeneous")
    d = p.degree()
    if degree is not None and p and d != degree:
        raise HomogeneityError(f"{p} has degree {d}, expected {degree}")
    return d
