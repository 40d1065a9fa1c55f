"""Exact sparse multivariate polynomials over the rationals.

Germs are represented by polynomial representatives with :class:`fractions.Fraction`
coefficients.  Every invariant computed by this package (Milnor and Tjurina
numbers, multiplicity, Newton number) is a dimension or a rank of a linear map
defined over Q.  Gaussian elimination performed over Q gives the same rank as
over any extension field, in particular over C, so working over Q loses nothing
for germs with rational coefficients.

Two monomial orderings are supported:

``LOCAL_DEGREVLEX``
    Lower total degree is larger, so 1 is the largest monomial (Singular's
    ``ds``).  Ties in total degree are broken by the reverse lexicographic
    rule: the monomial whose exponent is smaller in the last variable where
    the two differ is the larger one.  With this rule ``x1 > x2 > ... > xn``.

``GLOBAL_DEGREVLEX``
    Higher total degree is larger, same tie-break (Singular's ``dp``).

Terms of a polynomial iterate in descending ``GLOBAL_DEGREVLEX`` order, which
is also the order used for printing.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

Exponent = tuple  # tuple[int, ...] of length n
Rational = Union[int, Fraction]

INFINITY = math.inf


class DimensionMismatch(ValueError):
    pass


def _tiebreak(e: Exponent) -> tuple:
    return tuple(-a for a in reversed(e))


class MonomialOrder(enum.Enum):
    LOCAL_DEGREVLEX = "ds"
    GLOBAL_DEGREVLEX = "dp"

    def key(self, e: Exponent) -> tuple:
        """Sort key: ``key(a) > key(b)`` iff ``x^a > x^b`` in this ordering."""
        d = sum(e)
        if self is MonomialOrder.LOCAL_DEGREVLEX:
            return (-d, _tiebreak(e))
        return (d, _tiebreak(e))

    @property
    def is_local(self) -> bool:
        return self is MonomialOrder.LOCAL_DEGREVLEX


LOCAL = MonomialOrder.LOCAL_DEGREVLEX
GLOBAL = MonomialOrder.GLOBAL_DEGREVLEX


class Term(NamedTuple):
    coeff: Fraction
    exp: Exponent


def monomial_divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_mul(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def monomial_quotient(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial in ``n`` variables with rational coefficients."""

    __slots__ = ("_terms", "n", "_hash")

    def __init__(self, terms: Mapping[Exponent, Rational] | Iterable = (), n: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for e, c in items:
            e = tuple(int(a) for a in e)
            if n is None:
                n = len(e)
            elif len(e) != n:
                raise DimensionMismatch(f"exponent {e} has length {len(e)}, expected {n}")
            if any(a < 0 for a in e):
                raise ValueError(f"negative exponent {e}")
            acc[e] = acc.get(e, 0) + Fraction(c)
        if n is None:
            raise ValueError("ring dimension n is required for the zero polynomial")
        ordered = sorted((e for e, c in acc.items() if c != 0), key=GLOBAL.key, reverse=True)
        self._terms = {e: acc[e] for e in ordered}
        self.n = n
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, n: int) -> "Polynomial":
        # terms already canonical: no zeros, Fraction values
        p = cls.__new__(cls)
        ordered = sorted(terms, key=GLOBAL.key, reverse=True)
        p._terms = {e: terms[e] for e in ordered}
        p.n = n
        p._hash = None
        return p

    # construction helpers
    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls({}, n)

    @classmethod
    def constant(cls, c: Rational, n: int) -> "Polynomial":
        return cls({(0,) * n: c}, n)

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls.constant(1, n)

    @classmethod
    def monomial(cls, e: Exponent, c: Rational = 1) -> "Polynomial":
        return cls({tuple(e): c}, len(e))

    @classmethod
    def variable(cls, i: int, n: int) -> "Polynomial":
        """The coordinate ``x_i`` (0-based index)."""
        e = [0] * n
        e[i] = 1
        return cls({tuple(e): 1}, n)

    # container protocol
    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def __iter__(self) -> Iterator[Term]:
        return (Term(c, e) for e, c in self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, e: Exponent) -> Fraction:
        return self._terms.get(tuple(e), Fraction(0))

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def constant_term(self) -> Fraction:
        return self.coeff((0,) * self.n)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.n)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        from germlab.parsing import format_poly

        return f"Polynomial({format_poly(self)!r}, n={self.n})"

    # arithmetic
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise DimensionMismatch(f"ring dimensions differ: {self.n} vs {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.n)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return Polynomial._raw(acc, self.n)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self.n)

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial.zero(self.n)
            return Polynomial._raw({e: c * other for e, c in self._terms.items()}, self.n)
        other = self._coerce(other)
        acc: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return Polynomial._raw({e: c for e, c in acc.items() if c}, self.n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.one(self.n)
        for _ in range(k):
            result = result * self
        return result

    def mul_term(self, c: Rational, e: Exponent) -> "Polynomial":
        return Polynomial._raw(
            {monomial_mul(e, e2): c * c2 for e2, c2 in self._terms.items()}, self.n
        ) if c else Polynomial.zero(self.n)

    # calculus and measurements
    def partial(self, i: int) -> "Polynomial":
        """Formal derivative with respect to ``x_i`` (0-based index)."""
        if not 0 <= i < self.n:
            raise IndexError(f"variable index {i} out of range for n={self.n}")
        acc = {}
        for e, c in self._terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                acc[tuple(d)] = c * e[i]
        return Polynomial._raw(acc, self.n)

    def gradient(self) -> list:
        return [self.partial(i) for i in range(self.n)]

    def order(self):
        """Minimal total degree of the support (the multiplicity); ``inf`` for 0."""
        if not self._terms:
            return INFINITY
        return min(sum(e) for e in self._terms)

    def degree(self):
        """Maximal total degree; ``-inf`` for 0."""
        if not self._terms:
            return -INFINITY
        return max(sum(e) for e in self._terms)

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw({e: c for e, c in self._terms.items() if sum(e) == d}, self.n)

    def truncate(self, d: int) -> "Polynomial":
        """Drop all terms of total degree ``>= d``."""
        return Polynomial._raw({e: c for e, c in self._terms.items() if sum(e) < d}, self.n)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def leading_term(self, order: MonomialOrder = LOCAL) -> Term:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=order.key)
        return Term(self._terms[e], e)

    def leading_monomial(self, order: MonomialOrder = LOCAL) -> Exponent:
        return self.leading_term(order).exp

    def substitute(self, images: list) -> "Polynomial":
        """Compose with ``x_j -> images[j]``; images share a common ring."""
        if len(images) != self.n:
            raise DimensionMismatch("need one image per variable")
        m = images[0].n
        powers: list = [[Polynomial.one(m)] for _ in range(self.n)]
        result = Polynomial.zero(m)
        for e, c in self._terms.items():
            t = Polynomial.constant(c, m)
            for j, a in enumerate(e):
                while len(powers[j]) <= a:
                    powers[j].append(powers[j][-1] * images[j])
                if a:
                    t = t * powers[j][a]
            result = result + t
        return result

    def permute(self, perm) -> "Polynomial":
        """Relabel variables: new exponent position ``perm[j]`` receives old ``j``."""
        acc = {}
        for e, c in self._terms.items():
            new = [0] * self.n
            for j, a in enumerate(e):
                new[perm[j]] = a
            acc[tuple(new)] = c
        return Polynomial._raw(acc, self.n)

    def primitive_integer_terms(self) -> dict:
        """Integer coefficients of the primitive multiple of ``self`` with positive leading
        coefficient under the local order."""
        return primitive_part({e: c for e, c in self._terms.items()})


def order(p: Polynomial):
    return p.order()


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def partial(p: Polynomial, i: int) -> Polynomial:
    return p.partial(i)


def leading_term(p: Polynomial, order: MonomialOrder = LOCAL) -> Term:
    return p.leading_term(order)


def primitive_part(terms: Mapping[Exponent, Rational], order: MonomialOrder = LOCAL) -> dict:
    """Scale to coprime integers with positive leading coefficient under ``order``."""
    if not terms:
        return {}
    den = 1
    for c in terms.values():
        if isinstance(c, Fraction):
            den = den * c.denominator // math.gcd(den, c.denominator)
    ints = {e: int(c * den) for e, c in terms.items()}
    g = 0
    for c in ints.values():
        g = math.gcd(g, c)
        if g == 1:
            break
    lead = max(ints, key=order.key)
    if ints[lead] < 0:
        g = -g
    return {e: c // g for e, c in ints.items()}
