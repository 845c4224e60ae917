"""Exact arithmetic in real cyclotomic fields Q(cos(pi/N)).

Elements are stored in the power basis of ``c = 2 cos(pi/N)``: an integer
numerator vector and a positive common denominator, reduced so that the
representation is unique.  Zero testing is therefore purely symbolic.
Signs of nonzero elements are decided numerically, first with a float
filter and then with interval arithmetic at increasing precision.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

import mpmath
from sympy import Poly, cyclotomic_poly, symbols

__all__ = [
    "ConductorError",
    "CycField",
    "CycReal",
    "conductor_for",
    "field_for",
]


class ConductorError(ValueError):
    """Raised when a value is not representable in the chosen field."""


def conductor_for(entries) -> int:
    """Smallest convenient conductor for a collection of Coxeter labels.

    ``cos(pi/2)`` and ``cos(pi/3)`` are rational, so labels 2 and 3 do not
    contribute.  Infinite labels (given as ``math.inf``) are skipped.
    """
    N = 1
    for m in entries:
        if m == math.inf or m in (1, 2, 3):
            continue
        N = math.lcm(N, int(m))
    return max(N, 2)


def _dickson(k: int) -> list[int]:
    """Coefficients of D_k with D_k(x + 1/x) = x^k + x^-k (D_0 = 2)."""
    a, b = [2], [0, 1]
    if k == 0:
        return a
    for _ in range(k - 1):
        nxt = [0] + b
        for i, v in enumerate(a):
            nxt[i] -= v
        a, b = b, nxt
    return b


class CycField:
    """The field Q(2cos(pi/N)), one shared instance per conductor."""

    _cache: dict[int, CycField] = {}

    def __new__(cls, N: int):
        if N < 2:
            raise ValueError("conductor must be at least 2")
        F = cls._cache.get(N)
        if F is None:
            F = super().__new__(cls)
            F._setup(N)
            cls._cache[N] = F
        return F

    def __reduce__(self):
        return (CycField, (self.N,))

    def _setup(self, N: int) -> None:
        self.N = N
        x = symbols("x")
        phi = Poly(cyclotomic_poly(2 * N, x), x).all_coeffs()[::-1]
        d = (len(phi) - 1) // 2
        # palindromic polynomial of degree 2d -> polynomial of degree d in x + 1/x
        psi = [0] * (d + 1)
        psi[0] += int(phi[d])
        for k in range(1, d + 1):
            for i, v in enumerate(_dickson(k)):
                psi[i] += int(phi[d + k]) * v
        assert psi[d] == 1
        self.degree = d
        self.minpoly = tuple(psi)
        # c^k for d <= k <= 2d - 2 expressed in the basis 1, c, ..., c^(d-1)
        table = []
        cur = [-v for v in psi[:d]]
        for _ in range(max(d - 1, 0)):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(d):
                    cur[i] -= top * psi[i]
        self._power_table = table
        self.c_float = 2.0 * math.cos(math.pi / N)
        self._zero = CycReal._raw(self, (0,) * d, 1)
        self._one = CycReal._raw(self, (1,) + (0,) * (d - 1), 1)
        self._cos_pi_cache: dict[int, CycReal] = {}

    def __repr__(self) -> str:
        return f"CycField({self.N})"

    # constructors -------------------------------------------------------

    def zero(self) -> CycReal:
        return self._zero

    def one(self) -> CycReal:
        return self._one

    def __call__(self, value) -> CycReal:
        if isinstance(value, CycReal):
            if value.field is self:
                return value
            if value.is_rational():
                return self.rational(value.to_fraction())
            raise ConductorError(f"{value!r} does not live in {self!r}")
        return self.rational(Fraction(value))

    def rational(self, q) -> CycReal:
        q = Fraction(q)
        return CycReal(self, (q.numerator,) + (0,) * (self.degree - 1), q.denominator)

    def gen(self) -> CycReal:
        """The generator 2cos(pi/N)."""
        return self._reduce_poly([0, 1], 1)

    def _reduce_poly(self, coeffs, den) -> CycReal:
        d = self.degree
        out = list(coeffs[:d]) + [0] * max(0, d - len(coeffs))
        for k in range(d, len(coeffs)):
            ck = coeffs[k]
            if ck:
                row = self._power_table[k - d] if k - d < len(self._power_table) else None
                if row is None:
                    return self._reduce_poly_slow(coeffs, den)
                for i in range(d):
                    out[i] += ck * row[i]
        return CycReal(self, tuple(out), den)

    def _reduce_poly_slow(self, coeffs, den) -> CycReal:
        d, psi = self.degree, self.minpoly
        c = list(coeffs)
        for k in range(len(c) - 1, d - 1, -1):
            top = c[k]
            if top:
                for i in range(d + 1):
                    c[k - d + i] -= top * psi[i]
        return CycReal(self, tuple(c[:d]) + (0,) * max(0, d - len(c)), den)

    def two_cos(self, k: int) -> CycReal:
        """Exact value of 2cos(k*pi/N) for any integer k."""
        return self._reduce_poly(_dickson(abs(k)), 1)

    def cos_k(self, k: int) -> CycReal:
        """Exact value of cos(k*pi/N)."""
        v = self.two_cos(k)
        return CycReal(self, v.num, v.den * 2)

    def contains_cos_pi_over(self, m) -> bool:
        return m == math.inf or m in (2, 3) or (isinstance(m, int) and m >= 2 and self.N % m == 0)

    def cos_pi_over(self, m) -> CycReal:
        """Exact cos(pi/m); m = inf gives 1."""
        if m == math.inf:
            return self._one
        m = int(m)
        hit = self._cos_pi_cache.get(m)
        if hit is not None:
            return hit
        if m == 2:
            val = self._zero
        elif m == 3:
            val = self.rational(Fraction(1, 2))
        elif m >= 2 and self.N % m == 0:
            val = self.cos_k(self.N // m)
        else:
            raise ConductorError(f"cos(pi/{m}) is not in {self!r}")
        self._cos_pi_cache[m] = val
        return val

    def cos_candidates(self) -> list[int]:
        """Every m >= 2 whose cos(pi/m) lies in this field, increasing."""
        return sorted({m for m in range(2, self.N + 1) if self.N % m == 0} | {2, 3})

    def recognize_cos(self, x: CycReal):
        """Return m if x == cos(pi/m) exactly, else None."""
        x = self(x)
        if x.sign() < 0:
            return None
        for m in self.cos_candidates():
            if self.cos_pi_over(m) == x:
                return m
        return None

    def in_cos_set(self, x: CycReal) -> bool:
        """Membership in {cos(pi/m) : m >= 2} together with [1, inf)."""
        x = self(x)
        return self.recognize_cos(x) is not None or (x - 1).sign() >= 0


def field_for(entries) -> CycField:
    return CycField(conductor_for(entries))


def _as_other(F: CycField, other):
    if isinstance(other, CycReal):
        if other.field is F:
            return other
        return F(other)
    if isinstance(other, (int, Fraction)):
        return F.rational(other)
    return NotImplemented


class CycReal:
    """An element of Q(2cos(pi/N)) in reduced power-basis form.

    ``num`` holds integer coefficients of ``1, c, ..., c^(d-1)`` with
    ``c = 2cos(pi/N)``, all divided by the positive integer ``den``.
    """

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: CycField, num, den: int = 1):
        if den < 0:
            num = tuple(-v for v in num)
            den = -den
        g = reduce(math.gcd, num, den)
        if g > 1:
            num = tuple(v // g for v in num)
            den //= g
        elif not isinstance(num, tuple):
            num = tuple(num)
        if not any(num):
            den = 1
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, field, num, den):
        obj = cls.__new__(cls)
        obj.field, obj.num, obj.den, obj._hash = field, num, den, None
        return obj

    # predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is irrational")
        return Fraction(self.num[0], self.den)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _as_other(self.field, other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return CycReal(self.field, tuple(a + b for a, b in zip(self.num, other.num)), self.den)
        return CycReal(
            self.field,
            tuple(a * other.den + b * self.den for a, b in zip(self.num, other.num)),
            self.den * other.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return CycReal._raw(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        other = _as_other(self.field, other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.field._zero
            return CycReal(self.field, tuple(a * other for a in self.num), self.den)
        other = _as_other(self.field, other)
        if other is NotImplemented:
            return other
        d = self.field.degree
        if d == 1:
            return CycReal(self.field, (self.num[0] * other.num[0],), self.den * other.den)
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(self.num):
            if a:
                for j, b in enumerate(other.num):
                    if b:
                        prod[i + j] += a * b
        return self.field._reduce_poly(prod, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> CycReal:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        F, d = self.field, self.field.degree
        if self.is_rational():
            return F.rational(1 / self.to_fraction())
        # columns: self * c^j in the power basis; solve M v = e_0
        cols = []
        basis = CycReal(F, self.num, 1)
        c = F.gen()
        for _ in range(d):
            cols.append(basis.num)
            basis = basis * c
        rows = [[Fraction(cols[j][i]) for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        for col in range(d):
            piv = next(r for r in range(col, d) if rows[r][col] != 0)
            rows[col], rows[piv] = rows[piv], rows[col]
            p = rows[col][col]
            rows[col] = [v / p for v in rows[col]]
            for r in range(d):
                if r != col and rows[r][col] != 0:
                    f = rows[r][col]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
        sol = [rows[i][d] * self.den for i in range(d)]
        den = math.lcm(*(q.denominator for q in sol))
        return CycReal(F, tuple(int(q * den) for q in sol), den)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycReal(self.field, tuple(a * q.denominator for a in self.num), self.den * q.numerator)
        other = _as_other(self.field, other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = self.field._one, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycReal):
            if other.field is not self.field:
                if self.is_rational() and other.is_rational():
                    return self.to_fraction() == other.to_fraction()
                return False
            return self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def sign(self) -> int:
        if not any(self.num):
            return 0
        if self.is_rational():
            return 1 if self.num[0] > 0 else -1
        s = self._float_sign()
        if s is not None:
            return s
        return self._interval_sign()

    def _float_sign(self):
        c = self.field.c_float
        try:
            total, scale, p = 0.0, 0.0, 1.0
            for a in self.num:
                fa = float(a)
                total += fa * p
                scale += abs(fa) * p
                p *= c
        except OverflowError:
            return None
        # float evaluation error is a tiny multiple of scale; be generous
        if abs(total) > 1e-9 * scale:
            return 1 if total > 0 else -1
        return None

    def _interval_sign(self) -> int:
        iv = mpmath.iv
        saved, prec = iv.prec, 128
        try:
            while True:
                iv.prec = prec
                c = 2 * iv.cos(iv.pi / self.field.N)
                acc = iv.mpf(0)
                for a in reversed(self.num):
                    acc = acc * c + a
                if acc.a > 0:
                    return 1
                if acc.b < 0:
                    return -1
                prec *= 2
        finally:
            iv.prec = saved

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        with mpmath.workprec(256):
            c = 2 * mpmath.cos(mpmath.pi / self.field.N)
            acc = mpmath.mpf(0)
            for a in reversed(self.num):
                acc = acc * c + a
            return float(acc / self.den)

    def __bool__(self):
        return any(self.num)

    # cosine coordinates -------------------------------------------------

    def cos_coords(self) -> dict[int, Fraction]:
        """Coordinates over cos(k*pi/N), 0 <= k < degree.

        Uses c^j = sum_i binom(j, i) x^(j-2i) with x + 1/x = c.
        """
        out: dict[int, Fraction] = {}
        for j, a in enumerate(self.num):
            if not a:
                continue
            for i in range(j // 2 + 1):
                r = j - 2 * i
                w = math.comb(j, i) * (1 if r == 0 else 2)
                out[r] = out.get(r, Fraction(0)) + Fraction(a * w, self.den)
        return {k: v for k, v in sorted(out.items()) if v}

    @classmethod
    def from_cos_coords(cls, field: CycField, coords) -> CycReal:
        acc = field.zero()
        for k, q in coords.items():
            acc = acc + field.cos_k(k) * Fraction(q)
        return acc

    def __repr__(self):
        if self.is_rational():
            return f"CycReal({self.to_fraction()})"
        terms = " + ".join(f"{q}*cos({k}pi/{self.field.N})" for k, q in self.cos_coords().items())
        return f"CycReal({terms})"

    def __str__(self):
        if self.is_rational():
            return str(self.to_fraction())
        parts = []
        for k, q in self.cos_coords().items():
            parts.append(str(q) if k == 0 else f"{q}*cos({k}pi/{self.field.N})")
        return " + ".join(parts)
