"""Exact scalar arithmetic over Q, prime fields F_p, and cyclotomic fields Q(zeta_n).

Every scalar is stored in a unique canonical form, so equality is plain
coefficientwise comparison:

* rationals: a reduced ``fractions.Fraction``;
* prime fields: an ``int`` residue in ``[0, p)``;
* cyclotomics: a tuple of ``Fraction`` coefficients of length ``deg Phi_n``,
  lowest degree first, reduced modulo the n-th cyclotomic polynomial.

Division by zero raises ``ZeroDivisionError``; arithmetic never silently
leaves the field and never touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import FieldMismatch, InvalidInput


def is_prime(p: int) -> bool:
    """Trial-division primality check; fine at the sizes this library handles."""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_mul_int(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _poly_divmod_int(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Exact Euclidean division of integer polynomials (lowest degree first).

    Requires the divisor to be monic; used for quotients known to be exact.
    """
    num = list(num)
    d = len(den) - 1
    assert den[-1] == 1, "divisor must be monic"
    if len(num) - 1 < d:
        return [0], num
    quot = [0] * (len(num) - d)
    for k in range(len(num) - 1, d - 1, -1):
        c = num[k]
        quot[k - d] = c
        if c:
            for j in range(d + 1):
                num[k - d + j] -= c * den[j]
    rem = num[:d] if d > 0 else [0]
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return quot, rem


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    Computed by the recursive quotient Phi_n(x) = (x^n - 1) / prod_{d|n, d<n} Phi_d(x);
    every division is exact, which is asserted.
    """
    if n < 1:
        raise InvalidInput("cyclotomic index must be >= 1")
    cache: dict[int, tuple[int, ...]] = {1: (-1, 1)}

    def phi(m: int) -> tuple[int, ...]:
        if m in cache:
            return cache[m]
        num = [0] * (m + 1)
        num[0] = -1
        num[m] = 1
        den = [1]
        for d in range(1, m):
            if m % d == 0:
                den = _poly_mul_int(den, phi(d))
        quot, rem = _poly_divmod_int(num, den)
        assert rem == [0], f"nonzero remainder computing Phi_{m}"
        cache[m] = tuple(quot)
        return cache[m]

    return phi(n)


_FracVec = tuple # tuple[Fraction, ...]
_Value = Union[Fraction, int, tuple]


class FieldDescriptor:
    """One of Q, F_p (p prime), or Q(zeta_n).

    Instances are immutable; all scalar arithmetic is dispatched through the
    descriptor so a ``Scalar`` carries no behaviour of its own.
    """

    __slots__ = ("kind", "p", "n", "modulus", "_deg", "_powtab", "_hash")

    def __init__(self, kind: str, p: int | None = None, n: int | None = None):
        self.kind = kind
        self.p = p
        self.n = n
        if kind == "Q":
            self.modulus = None
            self._deg = 0
            self._powtab = None
        elif kind == "Fp":
            if p is None or not is_prime(p):
                raise InvalidInput(f"{p!r} is not a prime")
            self.modulus = None
            self._deg = 0
            self._powtab = None
        elif kind == "cyclo":
            if n is None or n < 1:
                raise InvalidInput("cyclotomic index must be a positive integer")
            self.modulus = cyclotomic_polynomial(n)
            d = len(self.modulus) - 1
            self._deg = d
            # x^d reduced mod Phi_n; higher powers fold down one degree at a time.
            self._powtab = tuple(-c for c in self.modulus[:d])
        else:
            raise InvalidInput(f"unknown field kind {kind!r}")
        self._hash = hash((kind, p, n))

    @classmethod
    def rationals(cls) -> "FieldDescriptor":
        return cls("Q")

    @classmethod
    def prime_field(cls, p: int) -> "FieldDescriptor":
        return cls("Fp", p=p)

    @classmethod
    def cyclotomic(cls, n: int) -> "FieldDescriptor":
        return cls("cyclo", n=n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldDescriptor)
            and self.kind == other.kind
            and self.p == other.p
            and self.n == other.n
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if self.kind == "Q":
            return "Q"
        if self.kind == "Fp":
            return f"F{self.p}"
        return f"Q(zeta_{self.n})"

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "Fp" else 0

    @property
    def degree(self) -> int:
        """Degree over Q for cyclotomic fields; 1 for Q and F_p."""
        return self._deg if self.kind == "cyclo" else 1

    # -- canonical values --------------------------------------------------

    def zero(self) -> "Scalar":
        return self.from_int(0)

    def one(self) -> "Scalar":
        return self.from_int(1)

    def from_int(self, k: int) -> "Scalar":
        return self.from_fraction(Fraction(k))

    def from_fraction(self, q: Fraction) -> "Scalar":
        if self.kind == "Q":
            return Scalar(self, q)
        if self.kind == "Fp":
            num = q.numerator % self.p
            den = q.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return Scalar(self, (num * pow(den, self.p - 2, self.p)) % self.p)
        vec = [Fraction(0)] * self._deg
        vec[0] = q
        return Scalar(self, tuple(vec))

    def from_coeffs(self, coeffs: Iterable[Fraction]) -> "Scalar":
        """Cyclotomic element from rational coefficients, lowest degree first."""
        if self.kind != "cyclo":
            raise InvalidInput("coefficient lists only describe cyclotomic scalars")
        cs = [Fraction(c) for c in coeffs]
        return Scalar(self, self._reduce(cs))

    def zeta(self) -> "Scalar":
        """The distinguished primitive n-th root of unity."""
        if self.kind != "cyclo":
            raise InvalidInput("zeta only exists in cyclotomic fields")
        if self._deg == 1:
            # Phi_1 = x - 1 gives zeta = 1; Phi_2 = x + 1 gives zeta = -1.
            return self.from_int(1 if self.n == 1 else -1)
        vec = [Fraction(0)] * self._deg
        vec[1] = Fraction(1)
        return Scalar(self, tuple(vec))

    # -- raw arithmetic on canonical values --------------------------------

    def _reduce(self, coeffs: Sequence[Fraction]) -> tuple:
        d = self._deg
        res = list(coeffs) + [Fraction(0)] * max(0, d - len(coeffs))
        top = self._powtab  # x^d mod Phi_n
        for m in range(len(res) - 1, d - 1, -1):
            c = res[m]
            if c:
                res[m] = Fraction(0)
                for i in range(d):
                    if top[i]:
                        res[m - d + i] += c * top[i]
        return tuple(res[:d])

    def _add(self, a: _Value, b: _Value) -> _Value:
        if self.kind == "Q":
            return a + b
        if self.kind == "Fp":
            return (a + b) % self.p
        return tuple(x + y for x, y in zip(a, b))

    def _sub(self, a: _Value, b: _Value) -> _Value:
        if self.kind == "Q":
            return a - b
        if self.kind == "Fp":
            return (a - b) % self.p
        return tuple(x - y for x, y in zip(a, b))

    def _neg(self, a: _Value) -> _Value:
        if self.kind == "Q":
            return -a
        if self.kind == "Fp":
            return (-a) % self.p
        return tuple(-x for x in a)

    def _mul(self, a: _Value, b: _Value) -> _Value:
        if self.kind == "Q":
            return a * b
        if self.kind == "Fp":
            return (a * b) % self.p
        d = self._deg
        conv = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return self._reduce(conv)

    def _inv(self, a: _Value) -> _Value:
        if self.kind == "Q":
            if a == 0:
                raise ZeroDivisionError("division by zero")
            return 1 / a
        if self.kind == "Fp":
            if a == 0:
                raise ZeroDivisionError("division by zero")
            return pow(a, self.p - 2, self.p)
        if not any(a):
            raise ZeroDivisionError("division by zero")
        # Extended Euclid in Q[x] against Phi_n (irreducible over Q).
        r0 = [Fraction(c) for c in self.modulus]
        r1 = list(a)
        while len(r1) > 1 and r1[-1] == 0:
            r1.pop()
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while not (len(r1) == 1 and r1[0] == 0):
            q, r = _poly_divmod_frac(r0, r1)
            s = _poly_sub_frac(s0, _poly_mul_frac(q, s1))
            r0, r1 = r1, r
            s0, s1 = s1, s
        # r0 is a nonzero constant gcd; scale s0 by its inverse.
        c = r0[0]
        inv = [x / c for x in s0]
        return self._reduce(inv)

    def _is_zero(self, a: _Value) -> bool:
        if self.kind == "cyclo":
            return not any(a)
        return a == 0


def _poly_mul_frac(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_sub_frac(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _poly_divmod_frac(num: Sequence[Fraction], den: Sequence[Fraction]):
    num = list(num)
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    d = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < d:
        return [Fraction(0)], num
    quot = [Fraction(0)] * (len(num) - d)
    for k in range(len(num) - 1, d - 1, -1):
        c = num[k] / lead
        quot[k - d] = c
        if c:
            for j in range(d + 1):
                num[k - d + j] -= c * den[j]
    rem = num[:d] if d > 0 else [Fraction(0)]
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return quot, rem


class Scalar:
    """An element of a fixed exact field, in canonical form."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldDescriptor, value: _Value):
        self.field = field
        self.value = value

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        if isinstance(other, Fraction):
            return self.field.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field._add(self.value, o.value))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field._sub(self.value, o.value))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field._sub(o.value, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field._mul(self.value, o.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field._mul(self.value, self.field._inv(o.value)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field._mul(o.value, self.field._inv(self.value)))

    def __neg__(self):
        return Scalar(self.field, self.field._neg(self.value))

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field._inv(self.value))

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self == self.field.from_fraction(Fraction(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __bool__(self) -> bool:
        return not self.field._is_zero(self.value)

    def is_zero(self) -> bool:
        return self.field._is_zero(self.value)

    def is_one(self) -> bool:
        return self == self.field.one()

    def as_fraction(self) -> Fraction:
        """The value as a rational number; fails if it is not one."""
        if self.field.kind == "Q":
            return self.value
        if self.field.kind == "Fp":
            raise InvalidInput("prime-field residues are not rationals")
        if any(self.value[1:]):
            raise InvalidInput(f"{self!r} is not rational")
        return self.value[0]

    def as_int(self) -> int:
        """The value as a rational integer; fails if it is not one."""
        if self.field.kind == "Fp":
            return self.value
        q = self.as_fraction()
        if q.denominator != 1:
            raise InvalidInput(f"{self!r} is not an integer")
        return q.numerator

    def is_rational_integer(self) -> bool:
        if self.field.kind == "Fp":
            return True
        try:
            return self.as_fraction().denominator == 1
        except InvalidInput:
            return False

    def __repr__(self) -> str:
        text = scalar_to_text(self)
        return text if isinstance(text, str) else "[" + ", ".join(text) + "]"


def scalar_to_text(s: Scalar) -> "str | list[str]":
    """Serialize: rationals ``p/q`` (``/q`` omitted when 1), residues as
    decimal, cyclotomics as coefficient lists of rationals, low degree first."""
    if s.field.kind == "Q":
        q = s.value
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    if s.field.kind == "Fp":
        return str(s.value)
    return [str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            for c in s.value]


def scalar_from_text(field: FieldDescriptor, text) -> Scalar:
    try:
        if isinstance(text, list):
            return field.from_coeffs([Fraction(t) for t in text])
        if isinstance(text, int):
            return field.from_int(text)
        return field.from_fraction(Fraction(str(text).strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"cannot parse scalar {text!r} over {field}: {exc}") from exc
