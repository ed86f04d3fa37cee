"""Exact scalar kernels for step-1 difference calculus on the integers.

Everything here is computed in integer / rational / Gaussian-integer
arithmetic; floats appear only in the deformed (h != 1) variants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class DomainError(ValueError):
    """Input outside the domain of an operation."""


#: Marker returned by :func:`tan_discrete` where cos vanishes.
INFINITY = math.inf


@dataclass(frozen=True)
class GaussianInteger:
    """Gaussian integer a + bi with arbitrary-precision components."""

    re: int
    im: int

    def __add__(self, other: "GaussianInteger") -> "GaussianInteger":
        return GaussianInteger(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInteger") -> "GaussianInteger":
        return GaussianInteger(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianInteger") -> "GaussianInteger":
        return GaussianInteger(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def scale(self, c: int) -> "GaussianInteger":
        return GaussianInteger(c * self.re, c * self.im)

    def conjugate(self) -> "GaussianInteger":
        return GaussianInteger(self.re, -self.im)

    def norm_sq(self) -> int:
        return self.re * self.re + self.im * self.im

    def __pow__(self, n: int) -> "GaussianInteger":
        if n < 0:
            raise DomainError("negative power of a GaussianInteger is not integral")
        result = GaussianInteger(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


@dataclass(frozen=True)
class GaussianRational:
    """Gaussian number with exact rational components (for negative powers)."""

    re: Fraction
    im: Fraction

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )


@dataclass(frozen=True)
class Sequence:
    """Tabulated values of an integer-indexed function on a window.

    ``values[i - base]`` is the function value at integer index ``i``.
    """

    base: int
    values: tuple

    def __post_init__(self):
        if len(self.values) == 0:
            raise DomainError("Sequence must be non-empty")
        object.__setattr__(self, "values", tuple(self.values))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index: int):
        if not self.base <= index < self.base + len(self.values):
            raise IndexError(f"index {index} outside window [{self.base}, {self.base + len(self.values)})")
        return self.values[index - self.base]

    @property
    def last_index(self) -> int:
        return self.base + len(self.values) - 1


def diff(f: Sequence) -> Sequence:
    """Forward difference: result[i] = f[i+1] - f[i], one entry shorter."""
    if len(f) < 2:
        raise DomainError("diff needs at least 2 values")
    vals = f.values
    return Sequence(f.base, tuple(vals[i + 1] - vals[i] for i in range(len(vals) - 1)))


def sum_prefix(f: Sequence) -> Sequence:
    """Prefix sums anchored at 0: result[x] = sum of f[0..x-1], result[0] = 0.

    Requires the window to start at 0.  Result is one entry longer, so that
    ``diff(sum_prefix(f)) == f`` and ``sum_prefix(diff(f))[x] == f[x] - f[0]``.
    """
    if f.base != 0:
        raise DomainError("sum_prefix requires a window anchored at 0")
    out = [0]
    acc = 0
    for v in f.values:
        acc = acc + v
        out.append(acc)
    return Sequence(0, tuple(out))


def sum_range(f: Sequence, lo: int, hi: int):
    """Signed sum over [lo, hi): sum of f[k] for lo <= k < hi.

    For lo > hi this is the negated sum over [hi, lo), which extends the
    fundamental theorem to windows anywhere on the integers.
    """
    if lo > hi:
        return -sum_range(f, hi, lo)
    acc = 0
    for k in range(lo, hi):
        acc = acc + f[k]
    return acc


def falling_power(x: int, n: int) -> int:
    """x (x-1) ... (x-n+1); the empty product for n = 0."""
    if n < 0:
        raise DomainError("falling_power needs n >= 0; see falling_power_negative")
    result = 1
    for j in range(n):
        result *= x - j
    return result


def falling_power_negative(x: float, n: int) -> float:
    """Float-valued [x]^(-n) via the recursion [x]^(-n) = D[x]^(1-n)/(1-n)."""
    if n < 1:
        raise DomainError("falling_power_negative needs n >= 1")
    if n == 1:
        return reciprocal(x)
    return (falling_power_negative(x + 1, n - 1) - falling_power_negative(x, n - 1)) / (1 - n)


def binomial_exact(x: int, k: int) -> Fraction:
    """Generalized binomial [x]^k / k! as an exact rational."""
    return Fraction(falling_power(x, k), math.factorial(k))


def exp_trig_exact(a: int, x: int) -> GaussianInteger:
    """(1 + ia)^x for x >= 0; cos(a.x) is the real part, sin(a.x) the imaginary."""
    if x < 0:
        raise DomainError("exp_trig_exact needs x >= 0; use exp_trig_rational")
    return GaussianInteger(1, a) ** x

def exp_trig_rational(a: int, x: int) -> GaussianRational:
    """(1 + ia)^x for any integer x, with exact rational components."""
    if x >= 0:
        z = exp_trig_exact(a, x)
        return GaussianRational(Fraction(z.re), Fraction(z.im))
    z = exp_trig_exact(a, -x)
    n = z.norm_sq()
    return GaussianRational(Fraction(z.re, n), Fraction(-z.im, n))


def cos_exact(a: int, x: int) -> int:
    return exp_trig_exact(a, x).re


def sin_exact(a: int, x: int) -> int:
    return exp_trig_exact(a, x).im


def exp_exact(a: int, x: int):
    """(1 + a)^x exactly; integer for x >= 0, Fraction for x < 0."""
    if x >= 0:
        return (1 + a) ** x
    if 1 + a == 0:
        raise DomainError("exp base 0 has no negative powers")
    return Fraction(1, (1 + a) ** (-x))


def exp_h(a: float, h: float, x: float) -> float:
    """Deformed exponential (1 + a h)^(x/h); approaches e^(ax) as h -> 0."""
    base = 1 + a * h
    if base == 0:
        if (x / h) == int(x / h):
            return 0.0 ** (x / h)
        raise DomainError("1 + a h = 0 with non-integer x/h")
    return base ** (x / h)


def exp_h_complex(a: float, h: float, x: float) -> complex:
    """Deformed complex exponential (1 + i a h)^(x/h)."""
    base = 1 + 1j * a * h
    return base ** (x / h)


def sin_h(a: float, h: float, x: float) -> float:
    return exp_h_complex(a, h, x).imag


def cos_h(a: float, h: float, x: float) -> float:
    return exp_h_complex(a, h, x).real


def tan_discrete(x: int):
    """sin(x)/cos(x) as an exact Fraction, or INFINITY where cos vanishes.

    4-periodic on the non-negative integers: 0, 1, inf, -1, 0, ...
    """
    if x < 0:
        raise DomainError("tan_discrete needs x >= 0")
    z = exp_trig_exact(1, x)
    if z.re == 0:
        return INFINITY
    return Fraction(z.im, z.re)


def log_discrete(x: float) -> float:
    """Base-2 logarithm: the inverse of exp(1 . x) = 2^x."""
    if x <= 0:
        raise DomainError("log_discrete needs x > 0")
    return math.log2(x)


def reciprocal(x: float) -> float:
    """The deformed 1/x: D log(x) = Log(1 + 1/x)/Log(2)."""
    if x <= 0:
        raise DomainError("reciprocal needs x > 0")
    return log_discrete(x + 1) - log_discrete(x)


def solve_harmonic(a: int, f0, f1):
    """Coefficients (c_cos, c_sin) with f = c_cos cos(a.x) + c_sin sin(a.x),
    f(0) = f0 and f(1) = f1.

    Since cos(a.1) = 1 and sin(a.1) = a, the solution is c_cos = f0 and
    c_sin = (f1 - f0)/a.  The returned pair determines a solution of the
    oscillator recurrence f(x+2) = 2 f(x+1) - (1 + a^2) f(x).
    """
    if a == 0:
        raise DomainError("solve_harmonic needs a != 0")
    c_cos = Fraction(f0)
    c_sin = Fraction(f1 - f0, a)
    return c_cos, c_sin


def harmonic_eval(a: int, c_cos, c_sin, x: int):
    """Evaluate c_cos cos(a.x) + c_sin sin(a.x) exactly at integer x >= 0."""
    z = exp_trig_exact(a, x)
    value = Fraction(c_cos) * z.re + Fraction(c_sin) * z.im
    if value.denominator == 1:
        return value.numerator
    return value
