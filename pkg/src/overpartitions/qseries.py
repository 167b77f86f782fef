"""Truncated formal power series with exact coefficients, and the series
sides of the overpartition identities.

Coefficients are Python ints until a rational enters (the convention
``(-q;q)_{-1} = 1/2``), after which they are :class:`fractions.Fraction`.
Nothing is ever rounded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .core import ClassParams, DomainError

Coeff = Union[int, Fraction]


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _fmt(c: Coeff) -> str:
    return str(_norm(c))


class TruncatedSeries:
    """Power series in q modulo q^(N+1)."""

    __slots__ = ("N", "c")

    def __init__(self, N: int, coeffs=None):
        if N < 0:
            raise ValueError("truncation order must be nonnegative")
        self.N = N
        c = [0] * (N + 1)
        if coeffs is not None:
            items = coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs)
            for d, v in items:
                if 0 <= d <= N:
                    c[d] += v
        self.c = c

    @classmethod
    def one(cls, N: int) -> "TruncatedSeries":
        return cls(N, {0: 1})

    @classmethod
    def monomial(cls, N: int, degree: int, coeff: Coeff = 1) -> "TruncatedSeries":
        return cls(N, {degree: coeff})

    def copy(self) -> "TruncatedSeries":
        s = TruncatedSeries.__new__(TruncatedSeries)
        s.N, s.c = self.N, list(self.c)
        return s

    def __getitem__(self, d: int) -> Coeff:
        return _norm(self.c[d]) if 0 <= d <= self.N else 0

    def coefficients(self) -> list[Coeff]:
        return [_norm(v) for v in self.c]

    def _check(self, other: "TruncatedSeries") -> None:
        if other.N != self.N:
            raise ValueError(f"truncation mismatch: {self.N} vs {other.N}")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries(self.N, {0: other})
        self._check(other)
        s = self.copy()
        for d, v in enumerate(other.c):
            s.c[d] += v
        return s

    __radd__ = __add__

    def __neg__(self):
        s = self.copy()
        s.c = [-v for v in s.c]
        return s

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            s = self.copy()
            s.c = [v * other for v in s.c]
            return s
        self._check(other)
        N = self.N
        out = [0] * (N + 1)
        nz = [(d, v) for d, v in enumerate(other.c) if v]
        for a, u in enumerate(self.c):
            if not u:
                continue
            for b, v in nz:
                if a + b > N:
                    break
                out[a + b] += u * v
        s = TruncatedSeries.__new__(TruncatedSeries)
        s.N, s.c = N, out
        return s

    __rmul__ = __mul__

    def shift(self, e: int) -> "TruncatedSeries":
        """Multiply by q^e (e >= 0)."""
        if e < 0:
            raise ValueError("negative shift")
        s = TruncatedSeries(self.N)
        for d in range(self.N - e + 1):
            s.c[d + e] = self.c[d]
        return s

    def mul_binomial(self, coeff: Coeff, e: int) -> "TruncatedSeries":
        """Multiply by (1 - coeff*q^e)."""
        s = self.copy()
        if e == 0:
            return s * (1 - coeff)
        for d in range(self.N, e - 1, -1):
            s.c[d] -= coeff * s.c[d - e]
        return s

    def div_binomial(self, coeff: Coeff, e: int) -> "TruncatedSeries":
        """Divide by (1 - coeff*q^e), e >= 1."""
        if e < 1:
            raise DomainError("cannot divide by a binomial with a constant q-term here")
        s = self.copy()
        for d in range(e, self.N + 1):
            s.c[d] += coeff * s.c[d - e]
        return s

    def inverse(self) -> "TruncatedSeries":
        c0 = self.c[0]
        if not c0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv = [0] * (self.N + 1)
        inv[0] = Fraction(1) / c0
        for d in range(1, self.N + 1):
            acc = sum(self.c[j] * inv[d - j] for j in range(1, d + 1))
            inv[d] = -acc * inv[0]
        s = TruncatedSeries.__new__(TruncatedSeries)
        s.N, s.c = self.N, [_norm(v) for v in inv]
        return s

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return self * (Fraction(1) / other)

    def truncate(self, N: int) -> "TruncatedSeries":
        return TruncatedSeries(N, self.c[: N + 1])

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.N == other.N and all(a == b for a, b in zip(self.c, other.c))

    def first_difference(self, other: "TruncatedSeries") -> int | None:
        self._check(other)
        for d, (a, b) in enumerate(zip(self.c, other.c)):
            if a != b:
                return d
        return None

    def is_integral(self) -> bool:
        return all(_norm(v) == int(v) and not isinstance(_norm(v), Fraction) for v in self.c)

    def to_json(self) -> dict:
        return {"truncation": self.N, "coeffs": {str(d): _fmt(v) for d, v in enumerate(self.c) if v}}

    def to_tsv(self) -> str:
        return "\n".join(f"{d}\t{_fmt(v)}" for d, v in enumerate(self.c))

    def __repr__(self) -> str:
        terms = [f"{_fmt(v)}*q^{d}" for d, v in enumerate(self.c) if v]
        return f"TruncatedSeries(N={self.N}: {' + '.join(terms) or '0'})"


class BivariateSeries:
    """Power series in x and q modulo x^(M+1) and q^(N+1)."""

    __slots__ = ("M", "N", "c")

    def __init__(self, M: int, N: int):
        if M < 0 or N < 0:
            raise ValueError("truncation orders must be nonnegative")
        self.M, self.N = M, N
        self.c = [[0] * (N + 1) for _ in range(M + 1)]

    @classmethod
    def one(cls, M: int, N: int) -> "BivariateSeries":
        s = cls(M, N)
        s.c[0][0] = 1
        return s

    def copy(self) -> "BivariateSeries":
        s = BivariateSeries.__new__(BivariateSeries)
        s.M, s.N, s.c = self.M, self.N, [list(r) for r in self.c]
        return s

    def __getitem__(self, mn: tuple[int, int]) -> Coeff:
        m, n = mn
        if 0 <= m <= self.M and 0 <= n <= self.N:
            return _norm(self.c[m][n])
        return 0

    def add_row(self, m: int, series: TruncatedSeries, scale: Coeff = 1) -> None:
        """In place: add x^m * series."""
        if not 0 <= m <= self.M:
            return
        row = self.c[m]
        for d in range(min(self.N, series.N) + 1):
            if series.c[d]:
                row[d] += scale * series.c[d]

    def _check(self, other: "BivariateSeries") -> None:
        if (other.M, other.N) != (self.M, self.N):
            raise ValueError("truncation mismatch")

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._check(other)
        s = self.copy()
        for m in range(self.M + 1):
            for n in range(self.N + 1):
                s.c[m][n] += other.c[m][n]
        return s

    def __neg__(self):
        s = self.copy()
        s.c = [[-v for v in r] for r in s.c]
        return s

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: Coeff) -> "BivariateSeries":
        s = self.copy()
        s.c = [[v * k for v in r] for r in s.c]
        return s

    def mul_monomial(self, coeff: Coeff, a: int, b: int) -> "BivariateSeries":
        """Multiply by coeff * x^a * q^b (a, b >= 0)."""
        s = BivariateSeries(self.M, self.N)
        for m in range(self.M - a + 1):
            src, dst = self.c[m], s.c[m + a]
            for n in range(self.N - b + 1):
                if src[n]:
                    dst[n + b] = coeff * src[n]
        return s

    def mul_binomial(self, coeff: Coeff, a: int, b: int) -> "BivariateSeries":
        """Multiply by (1 - coeff * x^a * q^b)."""
        if a == 0 and b == 0:
            return self.scale(1 - coeff)
        s = self.copy()
        for m in range(self.M, a - 1, -1):
            for n in range(self.N, b - 1, -1):
                v = s.c[m - a][n - b]
                if v:
                    s.c[m][n] -= coeff * v
        return s

    def div_binomial(self, coeff: Coeff, a: int, b: int) -> "BivariateSeries":
        """Divide by (1 - coeff * x^a * q^b); (a, b) != (0, 0)."""
        if a == 0 and b == 0:
            raise DomainError("cannot divide by a constant binomial")
        s = self.copy()
        for m in range(a, self.M + 1):
            for n in range(b, self.N + 1):
                v = s.c[m - a][n - b]
                if v:
                    s.c[m][n] += coeff * v
        return s

    def __mul__(self, other):
        if not isinstance(other, BivariateSeries):
            return self.scale(other)
        self._check(other)
        out = BivariateSeries(self.M, self.N)
        for m1 in range(self.M + 1):
            for n1 in range(self.N + 1):
                u = self.c[m1][n1]
                if not u:
                    continue
                for m2 in range(self.M - m1 + 1):
                    row, dst = other.c[m2], out.c[m1 + m2]
                    for n2 in range(self.N - n1 + 1):
                        if row[n2]:
                            dst[n1 + n2] += u * row[n2]
        return out

    def at_x_equals_one(self) -> TruncatedSeries:
        """Sum over the x-degree.  Only complete when every x carries at
        least one q, and M >= N."""
        s = TruncatedSeries(self.N)
        for r in self.c:
            for n, v in enumerate(r):
                s.c[n] += v
        return s

    def row(self, m: int) -> TruncatedSeries:
        return TruncatedSeries(self.N, self.c[m])

    def __eq__(self, other):
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return (self.M, self.N) == (other.M, other.N) and all(
            a == b for ra, rb in zip(self.c, other.c) for a, b in zip(ra, rb)
        )

    def first_difference(self, other: "BivariateSeries") -> tuple[int, int] | None:
        """Smallest (m, n) in (n, m) order where the coefficients differ."""
        self._check(other)
        for n in range(self.N + 1):
            for m in range(self.M + 1):
                if self.c[m][n] != other.c[m][n]:
                    return (m, n)
        return None

    def items(self) -> Iterator[tuple[int, int, Coeff]]:
        for m, r in enumerate(self.c):
            for n, v in enumerate(r):
                if v:
                    yield m, n, _norm(v)

    def to_json(self) -> dict:
        return {
            "x_truncation": self.M,
            "truncation": self.N,
            "coeffs": {f"{m},{n}": _fmt(v) for m, n, v in self.items()},
        }

    def to_tsv(self) -> str:
        return "\n".join(f"{m}\t{n}\t{_fmt(v)}" for m, n, v in self.items())

    def __repr__(self) -> str:
        return f"BivariateSeries(M={self.M}, N={self.N}, nonzero={sum(1 for _ in self.items())})"


@dataclass(frozen=True)
class MonomialParam:
    """sign * x^x_exp * q^q_exp; ``sign == 0`` encodes the parameter 0."""

    sign: int
    q_exp: int = 0
    x_exp: int = 0

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise DomainError("sign must be -1, 0 or +1")

    @classmethod
    def zero(cls) -> "MonomialParam":
        return cls(0)

    @property
    def is_zero(self) -> bool:
        return self.sign == 0


# -- Pochhammer symbols ---------------------------------------------------------

def poch_finite(c: MonomialParam, n: int, N_q: int) -> TruncatedSeries:
    """(c; q)_n = prod_{j<n} (1 - c q^j) for a q-only monomial c.

    n = -1 is accepted only for c = -q, where (-q; q)_{-1} = 1/2 follows
    from (a; q)_n = (a; q)_inf / (a q^n; q)_inf.
    """
    if c.x_exp:
        raise DomainError("poch_finite takes a monomial in q only")
    if n < -1:
        raise DomainError("n must be at least -1")
    if n == -1:
        if (c.sign, c.q_exp) != (-1, 1):
            raise DomainError("(c;q)_{-1} is only defined here for c = -q")
        return TruncatedSeries(N_q, {0: Fraction(1, 2)})
    s = TruncatedSeries.one(N_q)
    for j in range(n):
        e = c.q_exp + j
        if e < 0:
            raise DomainError("negative q-exponent in a Pochhammer factor")
        s = s.mul_binomial(c.sign, e)
    return s


def poch_infinite(sign: int, e: int, b: int, N_q: int) -> TruncatedSeries:
    """prod_{j>=0} (1 - sign * q^(e + j b)), truncated at q^N_q."""
    if e < 1 or b < 1:
        raise DomainError("start exponent and step must be positive")
    s = TruncatedSeries.one(N_q)
    for d in range(e, N_q + 1, b):
        s = s.mul_binomial(sign, d)
    return s


def q_poch(n: int, N_q: int) -> TruncatedSeries:
    """(q; q)_n."""
    return poch_finite(MonomialParam(1, 1), n, N_q)


def _div_q_poch(s: TruncatedSeries, n: int) -> TruncatedSeries:
    for j in range(1, n + 1):
        s = s.div_binomial(1, j)
    return s


def overpartition_series(N_q: int) -> TruncatedSeries:
    """(-q)_inf / (q)_inf, the generating function of all overpartitions."""
    s = poch_infinite(-1, 1, 1, N_q)
    for j in range(1, N_q + 1):
        s = s.div_binomial(1, j)
    return s


def product_side_C(p: ClassParams, N_q: int) -> TruncatedSeries:
    """(-q)_inf (q^i, q^{2k-i}, q^{2k}; q^{2k})_inf / (q)_inf."""
    k, i = p.k, p.i
    s = overpartition_series(N_q)
    for e in (i, 2 * k - i, 2 * k):
        s = s * poch_infinite(1, e, 2 * k, N_q)
    return s


def jacobi_bilateral(p: ClassParams, N_q: int) -> TruncatedSeries:
    """sum over all integers n of (-1)^n q^{k n^2 + k n - i n}."""
    k, i = p.k, p.i
    s = TruncatedSeries(N_q)
    for direction in (1, -1):
        n = 0 if direction == 1 else -1
        while True:
            e = k * n * n + k * n - i * n
            if e > N_q:
                break
            s.c[e] += -1 if n % 2 else 1
            n += direction
    return s


def jacobi_specialization(p: ClassParams, N_q: int) -> bool:
    """The bilateral sum equals (q^i, q^{2k-i}, q^{2k}; q^{2k})_inf."""
    prod = TruncatedSeries.one(N_q)
    for e in (p.i, 2 * p.k - p.i, 2 * p.k):
        prod = prod * poch_infinite(1, e, 2 * p.k, N_q)
    return jacobi_bilateral(p, N_q) == prod


# -- Andrews' H function -------------------------------------------------------

A_MINUS_ONE_OVER_Q = MonomialParam(-1, -1)
A_MINUS_ONE = MonomialParam(-1, 0)


def H_series(p: ClassParams | tuple[int, int], a: MonomialParam, x: MonomialParam,
             M_x: int, N_q: int) -> BivariateSeries:
    """Expand H_{k,i}(a; x; q) term by term.

    ``a`` is one of 0, -1, -1/q; ``x`` is ``x^e1 q^e2`` with e1 in {0, 1}
    and, when e1 = 0, e2 >= 1 so that 1/(x)_inf is defined.  The index i may
    be 0 (the sum then vanishes identically).
    """
    k, i = (p.k, p.i) if isinstance(p, ClassParams) else p
    if a.x_exp or (not a.is_zero and (a.sign, a.q_exp) not in ((-1, -1), (-1, 0))):
        raise DomainError("H_series supports a in {0, -1, -1/q} only")
    if x.sign != 1 or x.x_exp not in (0, 1) or x.q_exp < 0 or (x.x_exp == 0 and x.q_exp < 1):
        raise DomainError("H_series supports x = x^e1 q^e2 with e1 in {0,1} and x != 1")
    xe, xq = x.x_exp, x.q_exp
    total = BivariateSeries(M_x, N_q)
    n = 0
    while True:
        pre_q = k * n * n + n - i * n + k * n * xq
        pre_x = k * n * xe
        if a.is_zero:
            pre_q += n * (n - 1) // 2
            sign = -1 if n % 2 else 1
        else:
            pre_q += n * a.q_exp
            sign = a.sign ** n
        if n > 0 and (pre_q > N_q or pre_x > M_x):
            # every later term starts higher still
            break
        if pre_q < 0:
            raise DomainError("negative q-power in H expansion")
        term = BivariateSeries(M_x, N_q)
        if pre_q <= N_q and pre_x <= M_x:
            term.c[pre_x][pre_q] = sign
        # (1 - x^i q^{2ni})
        term = term.mul_binomial(1, i * xe, i * xq + 2 * n * i)
        if not a.is_zero:
            # (a x q^{n+1})_inf
            base = a.q_exp + xq + n + 1
            if xe == 0 and base < 1:
                raise DomainError("divergent product in H expansion")
            j = 0
            while base + j <= N_q:
                term = term.mul_binomial(a.sign, xe, base + j)
                j += 1
            # (1/a)_n with 1/a = a.sign * q^{-a.q_exp}
            for j in range(n):
                term = term.mul_binomial(a.sign, 0, j - a.q_exp)
        for j in range(1, n + 1):
            term = term.div_binomial(1, 0, j)
        # 1/(x q^n)_inf
        j = 0
        while xq + n + j <= N_q:
            term = term.div_binomial(1, xe, xq + n + j)
            j += 1
        total = total + term
        n += 1
    return total


def W_series(p: ClassParams | tuple[int, int], M_x: int, N_q: int, x_q_shift: int = 1) -> BivariateSeries:
    """W_{k,i}(x q^{s-1}; q) = H_{k,i}(-1/q; x q^s; q); s = 1 gives W(x; q)."""
    return H_series(p, A_MINUS_ONE_OVER_Q, MonomialParam(1, x_q_shift, 1), M_x, N_q)


def check_H_recurrence(p: ClassParams, N_q: int, M_x: int | None = None) -> bool:
    """W_i(x) - W_{i-1}(x) = (xq)^i W_{k-i}(xq) + (xq)^{i-1} W_{k-i+1}(xq)."""
    k, i = p.k, p.i
    M = N_q if M_x is None else M_x
    lhs = W_series((k, i), M, N_q) - W_series((k, i - 1), M, N_q)
    rhs = (W_series((k, k - i), M, N_q, 2).mul_monomial(1, i, i)
           + W_series((k, k - i + 1), M, N_q, 2).mul_monomial(1, i - 1, i - 1))
    return lhs == rhs


def check_H_recurrence_general(p: ClassParams, a: MonomialParam, N_q: int, M_x: int | None = None) -> bool:
    """H_i - H_{i-1} = x^{i-1} H_{k-i+1}(a; xq) - a x^i q H_{k-i}(a; xq), formal x."""
    k, i = p.k, p.i
    M = N_q if M_x is None else M_x
    X, XQ = MonomialParam(1, 0, 1), MonomialParam(1, 1, 1)
    lhs = H_series((k, i), a, X, M, N_q) - H_series((k, i - 1), a, X, M, N_q)
    rhs = H_series((k, k - i + 1), a, XQ, M, N_q).mul_monomial(1, i - 1, 0)
    if not a.is_zero:
        # - a x^i q H_{k,k-i}(a; xq; q), with a = sign * q^{q_exp}
        shifted = H_series((k, k - i), a, XQ, M, N_q)
        rhs = rhs + _times_q_power(shifted, -a.sign, i, 1 + a.q_exp)
    return lhs == rhs


def _times_q_power(s: BivariateSeries, coeff: Coeff, a: int, b: int) -> BivariateSeries:
    if b < 0:
        raise DomainError("negative q-power")
    return s.mul_monomial(coeff, a, b)


def J_series(k: int, i: int, a: MonomialParam, x: MonomialParam, M_x: int, N_q: int) -> BivariateSeries:
    """J_{k,i}(a; x; q) = H_{k,i}(a; xq; q) - a x q H_{k,i-1}(a; xq; q)."""
    xq = MonomialParam(x.sign, x.q_exp + 1, x.x_exp)
    first = H_series((k, i), a, xq, M_x, N_q)
    if a.is_zero:
        return first
    second = H_series((k, i - 1), a, xq, M_x, N_q)
    return first - _times_q_power(second, a.sign, x.x_exp, x.q_exp + 1 + a.q_exp)


def check_J_relations(N_q: int, ks=(2, 3, 4)) -> bool:
    """J_{k,k}(-1; 1; q) = H_{k,k}(-1/q; q; q) and J_{k,1}(a; x; q) =
    H_{k,1}(a; xq; q) for a in {-1, -1/q} and x formal or x = 1."""
    X, ONE = MonomialParam(1, 0, 1), MonomialParam(1, 0, 0)
    for k in ks:
        lhs = J_series(k, k, A_MINUS_ONE, ONE, 0, N_q)
        rhs = H_series((k, k), A_MINUS_ONE_OVER_Q, MonomialParam(1, 1, 0), 0, N_q)
        if lhs != rhs:
            return False
        for a in (A_MINUS_ONE, A_MINUS_ONE_OVER_Q):
            for x, M in ((X, N_q), (ONE, 0)):
                xq = MonomialParam(1, x.q_exp + 1, x.x_exp)
                if J_series(k, 1, a, x, M, N_q) != H_series((k, 1), a, xq, M, N_q):
                    return False
    return True


# -- multi-sums over profiles ---------------------------------------------------

def profiles(k: int, max_weight: int, quad=lambda N: N[0] * (N[0] + 1) // 2 + sum(v * v for v in N[1:])) -> Iterator[tuple[int, ...]]:
    """All N_1 >= ... >= N_{k-1} >= 0 whose quadratic exponent is <= max_weight."""
    length = k - 1
    n1_max = (math.isqrt(8 * max_weight + 1) - 1) // 2

    def rec(prefix: list[int], used: int):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        top = prefix[-1] if prefix else n1_max
        for v in range(top + 1):
            cost = v * (v + 1) // 2 if not prefix else v * v
            if used + cost > max_weight:
                break
            prefix.append(v)
            yield from rec(prefix, used + cost)
            prefix.pop()

    for N in rec([], 0):
        if quad(N) <= max_weight:
            yield N


def _linear(N: tuple[int, ...], start: int) -> int:
    """N_start + ... + N_{k-1} (1-based start; empty beyond k-1)."""
    return sum(N[start - 1:])


def _denominator(s: TruncatedSeries, N: tuple[int, ...], include_last: bool = True) -> TruncatedSeries:
    for j in range(len(N) - 1):
        s = _div_q_poch(s, N[j] - N[j + 1])
    if include_last and N:
        s = _div_q_poch(s, N[-1])
    return s


def _overpartition_term(p: ClassParams, N: tuple[int, ...], N_q: int, extra_start: int,
                        plus_q_Ni: bool) -> TruncatedSeries | None:
    k, i = p.k, p.i
    e = N[0] * (N[0] + 1) // 2 + sum(v * v for v in N[1:]) + _linear(N, extra_start)
    if e > N_q:
        return None
    s = TruncatedSeries.monomial(N_q, e)
    s = s * poch_finite(MonomialParam(-1, 1), N[0] - 1, N_q)
    if plus_q_Ni:
        Ni = N[i - 1] if i <= k - 1 else 0
        s = s + s.shift(Ni)
    return _denominator(s, N)


def _profile_sum(p: ClassParams, M_x: int, N_q: int, extra_start: int, plus_q_Ni: bool) -> BivariateSeries:
    out = BivariateSeries(M_x, N_q)
    for N in profiles(p.k, N_q):
        m = sum(N)
        if m > M_x:
            continue
        term = _overpartition_term(p, N, N_q, extra_start, plus_q_Ni)
        if term is not None:
            out.add_row(m, term)
    return out


def sum_side_main(p: ClassParams, M_x: int, N_q: int) -> BivariateSeries:
    """sum_N q^{N_1(N_1+1)/2 + N_2^2 + ... + N_{i+1} + ...} (-q)_{N_1-1} (1 + q^{N_i}) x^{|N|} / denominators."""
    return _profile_sum(p, M_x, N_q, p.i + 1, True)


def sum_side_F(p: ClassParams, M_x: int, N_q: int) -> BivariateSeries:
    return _profile_sum(p, M_x, N_q, p.i + 1, False)


def sum_side_G(p: ClassParams, M_x: int, N_q: int) -> BivariateSeries:
    return _profile_sum(p, M_x, N_q, p.i, False)


def sum_side_Q(N: tuple[int, ...], p: ClassParams, N_q: int) -> TruncatedSeries:
    """q^{N_1(N_1+1)/2 + N_2^2 + ... + N_{i+1} + ... + N_{k-1}} / ((q)_{N_1-N_2} ... (q)_{N_{k-2}-N_{k-1}})."""
    N = tuple(N)
    if len(N) != p.k - 1 or any(a < b for a, b in zip(N, N[1:])) or (N and N[-1] < 0):
        raise DomainError(f"{N} is not a profile for k={p.k}")
    e = N[0] * (N[0] + 1) // 2 + sum(v * v for v in N[1:]) + _linear(N, p.i + 1)
    s = TruncatedSeries.monomial(N_q, e) if e <= N_q else TruncatedSeries(N_q)
    return _denominator(s, N, include_last=False)


def andrews_sum_side(p: ClassParams, M_x: int, N_q: int) -> BivariateSeries:
    """sum_N q^{N_1^2 + ... + N_{k-1}^2 + N_i + ... + N_{k-1}} x^{|N|} / denominators."""
    out = BivariateSeries(M_x, N_q)
    square = lambda N: sum(v * v for v in N)
    for N in profiles(p.k, N_q, quad=square):
        m = sum(N)
        e = square(N) + _linear(N, p.i)
        if m > M_x or e > N_q:
            continue
        out.add_row(m, _denominator(TruncatedSeries.monomial(N_q, e), N))
    return out


def andrews_product_side(p: ClassParams, N_q: int) -> TruncatedSeries:
    """(q^i, q^{2k+1-i}, q^{2k+1}; q^{2k+1})_inf / (q)_inf."""
    k, i = p.k, p.i
    s = TruncatedSeries.one(N_q)
    for e in (i, 2 * k + 1 - i, 2 * k + 1):
        s = s * poch_infinite(1, e, 2 * k + 1, N_q)
    for j in range(1, N_q + 1):
        s = s.div_binomial(1, j)
    return s


def rogers_ramanujan(which: int, N_q: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """(sum side, product side) of the first (which=1: q^{n^2+n}) or second
    (which=2: q^{n^2}) Rogers-Ramanujan identity."""
    lin = 1 if which == 1 else 0
    lhs = TruncatedSeries(N_q)
    n = 0
    while n * n + lin * n <= N_q:
        lhs = lhs + _div_q_poch(TruncatedSeries.monomial(N_q, n * n + lin * n), n)
        n += 1
    residues = (2, 3) if which == 1 else (1, 4)
    rhs = TruncatedSeries.one(N_q)
    for r in residues:
        for d in range(r, N_q + 1, 5):
            rhs = rhs.div_binomial(1, d)
    return lhs, rhs
