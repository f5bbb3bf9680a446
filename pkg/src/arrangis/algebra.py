"""Exact arithmetic used throughout the package.

Rationals are :class:`fractions.Fraction`.  Roots of unity are kept additively,
as an exponent in Q/Z, so character values never force a choice of field.
Only when a matrix has to be built do we embed them in a cyclotomic field
Q(zeta_N), represented in the power basis 1, zeta, ..., zeta^(phi(N)-1).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from mpmath import iv

Rational = Fraction
Scalar = Union[int, Fraction]


class OrderMismatchError(ValueError):
    """A root of unity does not live in the requested cyclotomic field."""


def parse_rational(text: str | int | Fraction) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"expected a rational, got {text!r}")
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------------------
# polynomials (coefficient lists, lowest degree first)


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(num: Sequence, den: Sequence) -> tuple[list, list]:
    num = _trim(list(num))
    den = _trim(list(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [0] * max(len(num) - len(den) + 1, 0)
    lead = den[-1]
    while len(num) >= len(den) and num:
        shift = len(num) - len(den)
        factor = num[-1] if lead == 1 else Fraction(num[-1]) / lead
        quot[shift] = factor
        for i, c in enumerate(den):
            num[shift + i] -= factor * c
        num.pop()
        _trim(num)
    return quot, num


def _poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.

    Computed as (x^n - 1) divided by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    num: list = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not rem
    return tuple(int(c) for c in num)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce(coeffs: Sequence, order: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(order)
    deg = len(phi) - 1
    work = [Fraction(c) for c in coeffs]
    # Phi_N is monic, so x^deg = -(phi_0 + ... + phi_{deg-1} x^{deg-1})
    for top in range(len(work) - 1, deg - 1, -1):
        c = work[top]
        if c:
            shift = top - deg
            for i in range(deg):
                work[shift + i] -= c * phi[i]
        work[top] = Fraction(0)
    work = work[:deg] + [Fraction(0)] * (deg - len(work))
    return tuple(work)


# ---------------------------------------------------------------------------
# roots of unity


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """exp(2*pi*i*exponent), with the exponent reduced into [0, 1)."""

    exponent: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        e = Fraction(self.exponent)
        object.__setattr__(self, "exponent", e - math.floor(e))

    @classmethod
    def parse(cls, text: str | int | Fraction) -> "RootOfUnity":
        return cls(parse_rational(text))

    @property
    def order(self) -> int:
        return self.exponent.denominator

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return RootOfUnity(self.exponent + other.exponent)

    def __truediv__(self, other: "RootOfUnity") -> "RootOfUnity":
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return RootOfUnity(self.exponent - other.exponent)

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.exponent * k)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(-self.exponent)

    def is_one(self) -> bool:
        return self.exponent == 0

    def to_complex(self) -> complex:
        angle = 2 * math.pi * float(self.exponent)
        return complex(math.cos(angle), math.sin(angle))

    def __str__(self) -> str:
        return format_rational(self.exponent)


ONE = RootOfUnity(Fraction(0))


# ---------------------------------------------------------------------------
# cyclotomic numbers


_IV_LOCK = threading.Lock()


class CyclotomicNumber:
    """Element of Q(zeta_N) in the power basis reduced modulo Phi_N."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs: Iterable[Scalar] = ()) -> None:
        self.order = int(order)
        self.coeffs = _reduce(list(coeffs), self.order)
        self._hash = None

    # -- constructors
    @classmethod
    def constant(cls, value: Scalar, order: int = 1) -> "CyclotomicNumber":
        return cls(order, [value])

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CyclotomicNumber":
        power %= order
        return cls(order, [0] * power + [1])

    # -- coercion helpers
    def _coerce(self, other) -> tuple["CyclotomicNumber", "CyclotomicNumber"] | None:
        if isinstance(other, CyclotomicNumber):
            if other.order == self.order:
                return self, other
            m = math.lcm(self.order, other.order)
            return self.lift(m), other.lift(m)
        if isinstance(other, (int, Fraction)):
            return self, CyclotomicNumber(self.order, [other])
        return None

    def lift(self, order: int) -> "CyclotomicNumber":
        """Same number viewed in Q(zeta_order); requires self.order | order."""
        if order == self.order:
            return self
        if order % self.order:
            raise OrderMismatchError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        step = order // self.order
        out = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for k, c in enumerate(self.coeffs):
            out[k * step] += c
        return CyclotomicNumber(order, out)

    # -- arithmetic
    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicNumber(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicNumber(a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.order, [c * other for c in self.coeffs])
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicNumber(a.order, _poly_mul(a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        # extended Euclid: find u with u * self = 1 mod Phi_N
        r0, r1 = [Fraction(c) for c in cyclotomic_polynomial(self.order)], _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        c = r1[0]
        return CyclotomicNumber(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.order, [c / other for c in self.coeffs])
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int) -> "CyclotomicNumber":
        if k < 0:
            return self.inverse() ** (-k)
        out = CyclotomicNumber(self.order, [1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "CyclotomicNumber":
        """Complex conjugate: zeta -> zeta^-1."""
        n = self.order
        out = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            out[(-k) % n] += c
        return CyclotomicNumber(n, out)

    # -- predicates
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_real(self) -> bool:
        return self == self.conjugate()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            # rationals hash like Fraction; other values are only comparable within one order
            c = self.coeffs
            self._hash = hash(c[0]) if self.is_rational() else hash((self.order, c))
        return self._hash

    # -- numerics
    def to_complex(self) -> complex:
        n = self.order
        return sum(
            (complex(float(c)) * complex(math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n))
             for k, c in enumerate(self.coeffs) if c),
            0j,
        )

    def _enclosure(self, prec: int):
        with _IV_LOCK:
            saved = iv.prec
            iv.prec = prec
            try:
                re = iv.mpf(0)
                im = iv.mpf(0)
                for k, c in enumerate(self.coeffs):
                    if not c:
                        continue
                    coef = iv.mpf(c.numerator) / c.denominator
                    angle = 2 * iv.pi * k / self.order
                    re += coef * iv.cos(angle)
                    im += coef * iv.sin(angle)
                return (re.a > 0) - (re.b < 0), (im.a > 0) - (im.b < 0), re, im
            finally:
                iv.prec = saved

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                z = "z" if k == 1 else f"z^{k}"
                terms.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]


_MAX_PREC = 1 << 16


def _sign(value: CyclotomicNumber, part: int) -> int:
    # exact zero test first, then refine the interval until it excludes 0
    if part == 0:
        doubled = value + value.conjugate()
        if doubled.is_zero():
            return 0
        if doubled.is_rational():
            c = doubled.coeffs[0]
            return (c > 0) - (c < 0)
    else:
        doubled = value - value.conjugate()
        if doubled.is_zero():
            return 0
    prec = 64
    while prec <= _MAX_PREC:
        s = doubled._enclosure(prec)[part]
        if s:
            return s
        prec *= 2
    raise ArithmeticError("sign determination did not converge")  # pragma: no cover


def sign_re(value: CyclotomicNumber) -> int:
    """Exact sign of the real part."""
    return _sign(value, 0)


def sign_im(value: CyclotomicNumber) -> int:
    """Exact sign of the imaginary part."""
    return _sign(value, 1)


def real_part(value: CyclotomicNumber) -> CyclotomicNumber:
    """Re(value), as an element of the maximal real subfield."""
    return (value + value.conjugate()) / 2


def embed_root(root: RootOfUnity, order: int) -> CyclotomicNumber:
    """zeta_order^k for root = exp(2*pi*i*k/order)."""
    scaled = root.exponent * order
    if scaled.denominator != 1:
        raise OrderMismatchError(f"root of order {root.order} does not lie in Q(zeta_{order})")
    return CyclotomicNumber.zeta(order, int(scaled))


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class CyclotomicMatrix:
    order: int
    labels: tuple[str, ...]
    entries: tuple[tuple[CyclotomicNumber, ...], ...]

    def __post_init__(self) -> None:
        m = len(self.labels)
        if len(self.entries) != m or any(len(row) != m for row in self.entries):
            raise ValueError("cyclotomic matrix must be square and match its labels")
        object.__setattr__(
            self,
            "entries",
            tuple(tuple(_as_cyclotomic(x, self.order) for x in row) for row in self.entries),
        )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], order: int = 1,
                  labels: Sequence[str] | None = None) -> "CyclotomicMatrix":
        if labels is None:
            labels = [str(i) for i in range(len(rows))]
        return cls(order, tuple(labels), tuple(tuple(r) for r in rows))

    @property
    def size(self) -> int:
        return len(self.labels)

    def __getitem__(self, key: tuple[int, int]) -> CyclotomicNumber:
        i, j = key
        return self.entries[i][j]

    def conjugate_transpose(self) -> "CyclotomicMatrix":
        m = self.size
        return CyclotomicMatrix(
            self.order, self.labels,
            tuple(tuple(self.entries[j][i].conjugate() for j in range(m)) for i in range(m)),
        )

    def is_hermitian(self) -> bool:
        return self.conjugate_transpose().entries == self.entries

    def rank(self) -> int:
        rows = [list(r) for r in self.entries]
        m = self.size
        rank = 0
        for col in range(m):
            pivot = next((r for r in range(rank, m) if not rows[r][col].is_zero()), None)
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            inv = rows[rank][col].inverse()
            for r in range(rank + 1, m):
                if rows[r][col].is_zero():
                    continue
                f = rows[r][col] * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
            rank += 1
        return rank

    def corank(self) -> int:
        return self.size - self.rank()

    def to_complex(self) -> list[list[complex]]:
        return [[x.to_complex() for x in row] for row in self.entries]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "labels": list(self.labels),
            "entries": [[x.to_json() for x in row] for row in self.entries],
        }


def _as_cyclotomic(x, order: int) -> CyclotomicNumber:
    if isinstance(x, CyclotomicNumber):
        return x.lift(order)
    return CyclotomicNumber(order, [x])


def corank(matrix: CyclotomicMatrix) -> int:
    return matrix.corank()
