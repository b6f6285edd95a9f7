"""Dense univariate polynomials with exact integer coefficients.

``IntPoly`` stores coefficients low degree first with no trailing zeros; the
zero polynomial has an empty coefficient tuple.  Python ints are
arbitrary precision, which is what the counting code needs: coefficients of
total domination polynomials reach C(n, n/2).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import NumericFailure, ParameterError, UndefinedError

DEFAULT_TOL = 1e-9
MAX_ITER = 1000


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        return cls([0] * degree + [coeff])

    @classmethod
    def x_plus(cls, c: int) -> "IntPoly":
        return cls([c, 1])

    @classmethod
    def one(cls) -> "IntPoly":
        return cls([1])

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls()

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        """Exponent of the largest power of x dividing p (0 for the zero polynomial)."""
        for i, a in enumerate(self.coeffs):
            if a:
                return i
        return 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly([-a for a in self.coeffs])

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        return self + -_lift(other)

    def __rsub__(self, other: int) -> "IntPoly":
        return _lift(other) - self

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "IntPoly":
        if m < 0:
            raise ParameterError("negative exponent")
        result = IntPoly.one()
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        return IntPoly([0] * k + list(self.coeffs)) if self.coeffs else IntPoly()

    def deflate_x(self) -> tuple[int, "IntPoly"]:
        """Split p = x^v * q with q(0) != 0."""
        v = self.valuation
        return v, IntPoly(self.coeffs[v:])

    def divide_linear(self, r: int) -> tuple["IntPoly", int]:
        """Synthetic division by (x - r): quotient and remainder."""
        c = self.coeffs
        if not c:
            return IntPoly(), 0
        q = [0] * (len(c) - 1)
        acc = 0
        for i in range(len(c) - 1, 0, -1):
            acc = acc * r + c[i]
            q[i - 1] = acc
        rem = acc * r + c[0]
        return IntPoly(q), rem

    def __call__(self, t: int) -> int:
        return evaluate(self, t)

    # -- presentation ------------------------------------------------------

    def to_json(self) -> list[str]:
        return [str(a) for a in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str] | str) -> "IntPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(a) for a in data)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if not a:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if i == 0:
                body = str(mag)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                body = xs if mag == 1 else f"{mag}*{xs}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


def _lift(p: "IntPoly | int") -> IntPoly:
    return p if isinstance(p, IntPoly) else IntPoly([p])


X = IntPoly.monomial(1)


def evaluate(p: IntPoly, t: int) -> int:
    """Exact Horner evaluation."""
    acc = 0
    for a in reversed(p.coeffs):
        acc = acc * t + a
    return acc


# -- integer roots ---------------------------------------------------------


def _root_magnitude_bound(p: IntPoly) -> int:
    """Integer upper bound on |z| over complex roots of p (Fujiwara), for p with p(0) != 0."""
    c = p.coeffs
    d = len(c) - 1
    lead = abs(c[-1])
    best = 0.0
    for i in range(1, d + 1):
        a = abs(c[d - i])
        if not a:
            continue
        # the constant-term ratio is halved in Fujiwara's bound
        best = max(best, (a / (lead * (2 if i == d else 1))) ** (1.0 / i))
    return int(math.ceil(2 * best)) + 1


def integer_roots(p: IntPoly) -> dict[int, int]:
    """All integer roots of p with their exact multiplicities.

    The power of x is factored out first; every remaining integer root divides
    the new constant term, and only divisors within the root-magnitude bound
    need testing.
    """
    if p.is_zero():
        raise UndefinedError("integer roots of the zero polynomial")
    v, q = p.deflate_x()
    roots: dict[int, int] = {}
    if v:
        roots[0] = v
    if q.degree <= 0:
        return roots
    c0 = abs(q[0])
    bound = min(c0, _root_magnitude_bound(q))
    for d in range(1, bound + 1):
        if c0 % d:
            continue
        for r in (d, -d):
            m = 0
            while q.degree >= 1:
                quo, rem = q.divide_linear(r)
                if rem:
                    break
                q = quo
                m += 1
            if m:
                roots[r] = m
        if q.degree <= 0:
            break
        c0 = abs(q[0])
    return dict(sorted(roots.items(), key=lambda kv: (-kv[0])))


def match_two_root_form(p: IntPoly) -> tuple[int, int, int] | None:
    """Return (alpha, c, beta) when p == x^alpha (x + c)^beta with alpha, beta, c >= 1."""
    if p.is_zero():
        return None
    alpha, q = p.deflate_x()
    beta = q.degree
    if alpha < 1 or beta < 1 or q[beta] != 1:
        return None
    c, r = divmod(q[beta - 1], beta)
    if r or c < 1:
        return None
    # necessary binomial check on the constant term before expanding
    if q[0] != c ** beta:
        return None
    if IntPoly.x_plus(c) ** beta != q:
        return None
    return alpha, c, beta


def reconstruct_two_root_form(alpha: int, c: int, beta: int) -> IntPoly:
    return (IntPoly.x_plus(c) ** beta).shift(alpha)


# -- numeric roots ---------------------------------------------------------


def _simultaneous_roots(coeffs: Sequence[int], tol: float, max_iter: int) -> list[complex]:
    """Aberth-Ehrlich simultaneous iteration on a polynomial with nonzero constant term."""
    d = len(coeffs) - 1
    lead = coeffs[-1]
    a = np.array([x / lead for x in coeffs], dtype=float)
    # monic, highest degree first for numpy.polyval
    hi = a[::-1].astype(complex)
    dhi = np.polyder(hi)
    absc = np.abs(hi)
    radius = 1.0 + float(np.max(np.abs(a[:-1])))
    angle = 0.4 + 2 * math.pi * np.arange(d) / d
    z = radius * np.exp(1j * angle)
    for _ in range(max_iter):
        pz = np.polyval(hi, z)
        scale = np.polyval(absc, np.abs(z))
        resid = np.abs(pz) / np.where(scale > 0, scale, 1.0)
        if np.all(resid < tol):
            return [complex(w) for w in z]
        dz = np.polyval(dhi, z)
        ratio = pz / np.where(dz == 0, 1e-300, dz)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        denom = 1.0 - ratio * s
        step = ratio / np.where(denom == 0, 1e-300, denom)
        z = np.where(resid < tol * 0.01, z, z - step)
        if not np.all(np.isfinite(z)):
            break
    raise NumericFailure(f"root iteration did not converge for {IntPoly(coeffs)}")


def numeric_roots(p: IntPoly, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER,
                  exact_integer_roots: bool = True) -> list[complex]:
    """All complex roots of p, with multiplicity.

    Powers of x come out as exact zeros.  With ``exact_integer_roots`` the
    integer roots are also divided out exactly and reported as exact values,
    so only the remaining cofactor goes through floating-point iteration.
    """
    if p.degree < 1:
        raise ParameterError("numeric roots need degree >= 1")
    if tol <= 0:
        raise ParameterError("tol must be positive")
    v, q = p.deflate_x()
    out: list[complex] = [0j] * v
    if exact_integer_roots and q.degree >= 1:
        for r, m in integer_roots(q).items():
            for _ in range(m):
                q, _rem = q.divide_linear(r)
            out += [complex(r)] * m
    if q.degree >= 1:
        out += _simultaneous_roots(q.coeffs, tol, max_iter)
    return sorted(out, key=lambda z: (round(z.real, 9), round(z.imag, 9)))


def root_bound_radius(n: int, delta: int) -> float:
    """(2^n - 1)^(1/delta)."""
    if delta < 1:
        raise UndefinedError("minimum degree 0: the graph has an isolated vertex")
    if n < 1:
        raise ParameterError("order must be >= 1")
    return math.exp(math.log(2 ** n - 1) / delta) if n > 1 else 1.0


@dataclass
class RootSummary:
    integer_roots: dict[int, int]
    numeric_roots: list[complex]
    distinct_set: frozenset
    two_root_form: tuple[int, int, int] | None = None
    degree: int = 0
    valuation: int = 0
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "integer_roots": [[str(r), m] for r, m in self.integer_roots.items()],
            "numeric_roots": [[z.real, z.imag] for z in self.numeric_roots],
            "two_root_form": None if self.two_root_form is None else
            dict(zip(("alpha", "c", "beta"), self.two_root_form)),
        }


def summarize_roots(p: IntPoly, tol: float = DEFAULT_TOL) -> RootSummary:
    """Exact integer roots, numeric roots, distinct root set and two-root form."""
    ints = integer_roots(p)
    nums = numeric_roots(p, tol) if p.degree >= 1 else []
    distinct: set = set(ints)
    for z in nums:
        if any(abs(z - r) <= 10 * tol * max(1.0, abs(r)) for r in ints):
            continue
        if not any(abs(z - w) <= 1e-6 * max(1.0, abs(w)) for w in distinct if isinstance(w, complex)):
            distinct.add(complex(round(z.real, 12), round(z.imag, 12)))
    return RootSummary(
        integer_roots=ints,
        numeric_roots=nums,
        distinct_set=frozenset(distinct),
        two_root_form=match_two_root_form(p),
        degree=p.degree,
        valuation=p.valuation,
    )

