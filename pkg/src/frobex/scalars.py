"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A scalar is stored as an integer coefficient vector over the power basis
1, z, ..., z^(phi(N)-1) together with a positive common denominator, kept
in lowest terms after every operation. Fields are cached per conductor so
identity comparison of fields is cheap.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, List, Sequence, Tuple, Union

from .errors import CapacityError, FieldMismatchError, FrobexParseError

DEFAULT_CONDUCTOR_CAP = 120

Rational = Fraction
Number = Union[int, Fraction, "CycScalar"]


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divexact(a: List[int], b: Sequence[int]) -> List[int]:
    # b is monic; coefficients ascending
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> Tuple[int, ...]:
    """Integer coefficients (ascending) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("conductor must be positive")
    p = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        p = _poly_divexact(p, cyclotomic_poly(d))
    return tuple(p)


def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


class CycField:
    """The cyclotomic field Q(zeta_N); obtain instances through field_make."""

    __slots__ = ("conductor", "modulus", "degree", "_reduce", "_powers", "_zero", "_one")

    def __init__(self, conductor: int):
        self.conductor = conductor
        self.modulus = cyclotomic_poly(conductor)
        self.degree = len(self.modulus) - 1
        deg = self.degree
        # sparse reductions of z^k for deg <= k <= 2*deg - 2
        self._reduce: Dict[int, List[Tuple[int, int]]] = {}
        cur: List[int] = []
        vec = [-c for c in self.modulus[:deg]]  # z^deg
        for k in range(deg, 2 * deg - 1):
            if k == deg:
                cur = vec[:]
            else:
                top = cur[deg - 1]
                cur = [0] + cur[:-1]
                if top:
                    cur = [c + top * v for c, v in zip(cur, vec)]
            self._reduce[k] = [(t, c) for t, c in enumerate(cur) if c]
        self._powers = None
        self._zero = CycScalar._raw(self, (0,) * deg, 1)
        self._one = CycScalar._raw(self, (1,) + (0,) * (deg - 1), 1)

    def __repr__(self):
        return f"Q(zeta_{self.conductor})"

    def __reduce__(self):
        return (field_make, (self.conductor, self.conductor))

    def zero(self) -> "CycScalar":
        return self._zero

    def one(self) -> "CycScalar":
        return self._one

    def __call__(self, value: Number) -> "CycScalar":
        return self.coerce(value)

    def coerce(self, value: Number) -> "CycScalar":
        if isinstance(value, CycScalar):
            if value.field is not self:
                raise FieldMismatchError(f"{value.field} vs {self}")
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return CycScalar._raw(self, (value,) + (0,) * (self.degree - 1), 1)
        if isinstance(value, Fraction):
            return CycScalar._raw(
                self, (value.numerator,) + (0,) * (self.degree - 1), value.denominator
            )
        if isinstance(value, str):
            return parse_poly(value, self)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    def from_coeffs(self, coeffs: Sequence[Union[int, Fraction]]) -> "CycScalar":
        """Build z-polynomial sum c_k z^k, reducing modulo the cyclotomic polynomial."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in fr]
        return CycScalar._from_long(self, ints, den)

    def power_of_z(self, j: int) -> "CycScalar":
        """zeta_N ** j."""
        if self._powers is None:
            pw = []
            cur = [0] * self.degree
            cur[0] = 1
            pw.append(tuple(cur))
            z = CycScalar._from_long(self, [0, 1], 1)
            s = self._one
            for _ in range(1, self.conductor):
                s = s * z
                pw.append(s.num)
            self._powers = pw
        return CycScalar._raw(self, self._powers[j % self.conductor], 1)

    def z(self) -> "CycScalar":
        return self.power_of_z(1)


_FIELDS: Dict[int, CycField] = {}


def field_make(conductor: int, cap: int = DEFAULT_CONDUCTOR_CAP) -> CycField:
    """Return the (cached) field Q(zeta_N). Raises CapacityError above cap."""
    if not isinstance(conductor, int) or conductor < 1:
        raise ValueError(f"conductor must be a positive integer, got {conductor!r}")
    if conductor > cap:
        raise CapacityError(f"conductor {conductor} exceeds cap {cap}")
    f = _FIELDS.get(conductor)
    if f is None:
        f = CycField(conductor)
        _FIELDS[conductor] = f
    return f


def _normalize(num, den):
    if den == 1:
        return tuple(num), 1
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class CycScalar:
    """Immutable element of a cyclotomic field."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: CycField, coeffs: Sequence[Union[int, Fraction]]):
        s = field.from_coeffs(coeffs)
        self.field, self.num, self.den, self._hash = s.field, s.num, s.den, None

    @classmethod
    def _raw(cls, field, num, den):
        obj = object.__new__(cls)
        obj.field = field
        obj.num = tuple(num)
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def _from_long(cls, field, ints, den):
        deg = field.degree
        mod = field.modulus
        res = list(ints)
        for k in range(len(res) - 1, deg - 1, -1):
            c = res[k]
            if c:
                res[k] = 0
                for t in range(deg):
                    res[k - deg + t] -= c * mod[t]
        res = res[:deg] + [0] * max(0, deg - len(res))
        num, den = _normalize(res, den)
        return cls._raw(field, num, den)

    # -- basic properties -------------------------------------------------

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    @property
    def conductor(self) -> int:
        return self.field.conductor

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def sort_key(self) -> Tuple[Fraction, ...]:
        return self.coeffs

    def __bool__(self):
        return any(self.num)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.conductor, self.num, self.den))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, CycScalar):
            return self.field is other.field and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            o = Fraction(other)
            return self.is_rational() and Fraction(self.num[0], self.den) == o
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def _co(self, other):
        if other.__class__ is CycScalar:
            if other.field is not self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, CycScalar):
            if other.field is not self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.coerce(other)
        return None

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return CycScalar._raw(self.field, tuple(-c for c in self.num), self.den)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        if o.den == self.den:
            num = [a + b for a, b in zip(self.num, o.num)]
            if self.den == 1:
                return CycScalar._raw(self.field, num, 1)
            num, den = _normalize(num, self.den)
        else:
            d1, d2 = self.den, o.den
            num = [a * d2 + b * d1 for a, b in zip(self.num, o.num)]
            num, den = _normalize(num, d1 * d2)
        return CycScalar._raw(self.field, num, den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        a, b = self.num, o.num
        f = self.field
        if not any(a[1:]):
            num, den = _normalize([a[0] * c for c in b], self.den * o.den)
            return CycScalar._raw(f, num, den)
        if not any(b[1:]):
            num, den = _normalize([b[0] * c for c in a], self.den * o.den)
            return CycScalar._raw(f, num, den)
        deg = f.degree
        prod = [0] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        res = prod[:deg]
        red = f._reduce
        for k in range(deg, 2 * deg - 1):
            c = prod[k]
            if c:
                for t, r in red[k]:
                    res[t] += c * r
        num, den = _normalize(res, self.den * o.den)
        return CycScalar._raw(f, num, den)

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        """Multiplicative inverse by the extended Euclidean algorithm against Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return self.field.coerce(Fraction(self.den, self.num[0]))
        a = _ptrim([Fraction(c, self.den) for c in self.num])
        m = [Fraction(c) for c in self.field.modulus]
        # invariant: s_i * a == r_i (mod m)
        r0, r1 = m, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] == 0:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        c = r1[0]
        inv = [x / c for x in s1]
        return self.field.from_coeffs(inv)

    def __truediv__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- text -------------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"CycScalar({format_scalar(self)})"


def _ptrim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _psub(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _ptrim([x - y for x, y in zip(a, b)])


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(out)


def _pdivmod(a, b):
    a = list(a)
    b = _ptrim(b)
    if len(a) < len(b):
        return [Fraction(0)], _ptrim(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    rem = _ptrim(a[: len(b) - 1] or [Fraction(0)])
    return _ptrim(q), rem


# -- field maps and special elements ---------------------------------------


def embed(s: CycScalar, target: CycField) -> CycScalar:
    """Image of s under zeta_N -> zeta_M^(M/N); requires N | M."""
    n, m = s.field.conductor, target.conductor
    if m % n:
        raise FieldMismatchError(f"cannot embed {s.field} into {target}: {n} does not divide {m}")
    if s.field is target:
        return s
    step = m // n
    acc = [0] * target.degree
    for k, c in enumerate(s.num):
        if c:
            pw = target.power_of_z(k * step).num
            for t, v in enumerate(pw):
                if v:
                    acc[t] += c * v
    num, den = _normalize(acc, s.den)
    return CycScalar._raw(target, num, den)


def root_of_unity(field: CycField, n: int, k: int = 1) -> CycScalar:
    """The n-th root of unity zeta_n^k inside field (zeta_n = zeta_N^(N/n))."""
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return field.one()
    if n == 2:
        return field.one() if k % 2 == 0 else -field.one()
    N = field.conductor
    if N % n == 0:
        return field.power_of_z((k * (N // n)) % N)
    if N % 2 and (2 * N) % n == 0:
        # odd N: zeta_2N = -zeta_N^((N+1)/2)
        z2 = -field.power_of_z((N + 1) // 2)
        return z2 ** ((k * (2 * N // n)) % (2 * N))
    raise FieldMismatchError(f"{field} has no primitive {n}-th root of unity")


def _factor(n: int) -> Dict[int, int]:
    out: Dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def sqrt_conductor(n: Union[int, Fraction]) -> int:
    """Smallest conductor whose field contains sqrt(n) by the construction used here."""
    q = Fraction(n)
    if q <= 0:
        raise ValueError("square roots are provided for positive rationals only")
    N = 1
    for p, e in _factor(q.numerator * q.denominator).items():
        if e % 2 == 0:
            continue
        if p == 2:
            N = _lcm(N, 8)
        elif p % 4 == 1:
            N = _lcm(N, p)
        else:
            N = _lcm(N, 4 * p)
    return N


def _sqrt_prime(field: CycField, p: int) -> CycScalar:
    N = field.conductor
    if p == 2:
        if N % 8:
            raise FieldMismatchError(f"sqrt(2) needs 8 | conductor, got {field}")
        return root_of_unity(field, 8, 1) + root_of_unity(field, 8, 7)
    need = p if p % 4 == 1 else 4 * p
    if N % need:
        raise FieldMismatchError(f"sqrt({p}) needs {need} | conductor, got {field}")
    g = field.zero()
    for a in range(1, p):
        chi = 1 if pow(a, (p - 1) // 2, p) == 1 else -1
        w = root_of_unity(field, p, a)
        g = g + w if chi == 1 else g - w
    if p % 4 == 3:
        # g = i * sqrt(p)
        g = g * (-root_of_unity(field, 4, 1))
    return g


def sqrt_rational(field: CycField, n: Union[int, Fraction]) -> CycScalar:
    """Positive square root of a positive rational, built from Gauss sums.

    The returned element is the positive real root under zeta_N = exp(2 pi i / N).
    """
    q = Fraction(n)
    if q <= 0:
        raise ValueError("square roots are provided for positive rationals only")
    N = sqrt_conductor(q)
    if field.conductor % N:
        raise FieldMismatchError(f"sqrt({q}) needs conductor divisible by {N}, got {field}")
    # sqrt(a/b) = sqrt(a*b) / b
    radicand = q.numerator * q.denominator
    outside = 1
    result = field.one()
    for p, e in _factor(radicand).items():
        outside *= p ** (e // 2)
        if e % 2:
            result = result * _sqrt_prime(field, p)
    result = result * Fraction(outside, q.denominator)
    if result * result != field.coerce(q):
        raise ArithmeticError(f"square root check failed for {q}")
    return result


# -- text format ------------------------------------------------------------


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(s: CycScalar) -> str:
    """Canonical polynomial text in z, highest power first, e.g. '1/2*z^3 - 2'."""
    parts = []
    for k in range(len(s.num) - 1, -1, -1):
        c = Fraction(s.num[k], s.den)
        if c == 0:
            continue
        neg = c < 0
        a = -c if neg else c
        if k == 0:
            body = _fmt_coeff(a)
        else:
            mono = "z" if k == 1 else f"z^{k}"
            body = mono if a == 1 else f"{_fmt_coeff(a)}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) if parts else "0"


def format_scalar(s: CycScalar) -> str:
    """Self-describing text: 'Q(zeta_N): <poly>'."""
    return f"Q(zeta_{s.field.conductor}): {format_poly(s)}"


class _Lexer:
    def __init__(self, text: str, base: int = 0):
        self.text = text
        self.i = 0
        self.base = base

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self):
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def error(self, msg):
        raise FrobexParseError(msg, self.text, self.base + self.i)

    def integer(self):
        self.skip()
        j = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if j == self.i:
            self.error("expected integer")
        return int(self.text[j:self.i])


def parse_poly(text: str, field: CycField, _base: int = 0) -> CycScalar:
    """Parse a polynomial in z (unreduced input allowed) into field."""
    lx = _Lexer(text, _base)
    acc: Dict[int, Fraction] = {}
    first = True
    if lx.peek() == "":
        lx.error("empty scalar")
    while lx.peek() != "":
        ch = lx.peek()
        sign = 1
        if ch in "+-":
            sign = -1 if ch == "-" else 1
            lx.i += 1
        elif not first:
            lx.error("expected '+' or '-'")
        first = False
        ch = lx.peek()
        coeff = Fraction(1)
        power = 0
        if ch.isdigit():
            num = lx.integer()
            den = 1
            if lx.peek() == "/":
                lx.i += 1
                den = lx.integer()
                if den == 0:
                    lx.error("zero denominator")
            coeff = Fraction(num, den)
            if lx.peek() == "*":
                lx.i += 1
                if lx.peek() != "z":
                    lx.error("expected 'z'")
        if lx.peek() == "z":
            lx.i += 1
            power = 1
            if lx.peek() == "^":
                lx.i += 1
                power = lx.integer()
        elif not ch.isdigit():
            lx.error("expected coefficient or 'z'")
        acc[power] = acc.get(power, Fraction(0)) + sign * coeff
    top = max(acc) if acc else 0
    coeffs = [acc.get(k, Fraction(0)) for k in range(top + 1)]
    # reduce powers modulo N first, z^N = 1
    N = field.conductor
    folded = [Fraction(0)] * min(len(coeffs), N)
    for k, c in enumerate(coeffs):
        folded[k % N] += c
    return field.from_coeffs(folded)


def parse_scalar(text: str, field: CycField = None) -> CycScalar:
    """Parse 'Q(zeta_N): <poly>' or, given field, a bare polynomial."""
    stripped = text.lstrip()
    offset = len(text) - len(stripped)
    if stripped.startswith("Q(zeta_"):
        close = stripped.find(")")
        if close < 0:
            raise FrobexParseError("unterminated field prefix", text, offset)
        try:
            N = int(stripped[len("Q(zeta_"):close])
        except ValueError:
            raise FrobexParseError("bad conductor", text, offset + len("Q(zeta_")) from None
        rest = stripped[close + 1:]
        if not rest.lstrip().startswith(":"):
            raise FrobexParseError("expected ':'", text, offset + close + 1)
        colon = close + 1 + (len(rest) - len(rest.lstrip()))
        F = field_make(N)
        if field is not None and field is not F:
            raise FieldMismatchError(f"text names {F}, expected {field}")
        return parse_poly(stripped[colon + 1:], F, offset + colon + 1)
    if field is None:
        raise FrobexParseError("missing 'Q(zeta_N):' prefix", text, offset)
    return parse_poly(text, field)
