"""Self-contained special-function kernel.

Everything here terminates or is elementary: finite hypergeometric sums,
Hermite polynomials by recurrence, log-Gamma, Wigner small-d matrices and
Clebsch-Gordan coefficients through log-space factorial sums.  All angular
momentum arguments may be integers or half-integers (floats holding exact
halves are accepted).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidParameterError, InvalidQuantumNumbersError

__all__ = [
    "HalfInt",
    "as_twice",
    "kummer_terminating",
    "kummer_terminating_deriv",
    "gauss2f1_terminating",
    "gauss2f1_terminating_deriv",
    "hermite",
    "log_gamma",
    "wigner_small_d",
    "clebsch_gordan",
]


@dataclass(frozen=True, order=True)
class HalfInt:
    """Exact half-integer: stores 2j so arithmetic never rounds."""

    twice: int

    @classmethod
    def of(cls, value) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        return cls(as_twice(value))

    @property
    def value(self) -> float:
        return self.twice / 2.0

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __add__(self, other):
        return HalfInt(self.twice + HalfInt.of(other).twice)

    def __sub__(self, other):
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __float__(self):
        return self.value

    def __repr__(self):
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"


def as_twice(value) -> int:
    """Return 2*value as an exact int; reject anything off the half-grid."""
    if isinstance(value, HalfInt):
        return value.twice
    doubled = 2.0 * float(value)
    if doubled != round(doubled):
        raise InvalidQuantumNumbersError(f"{value!r} is not an integer or half-integer")
    return int(round(doubled))


def _check_nonneg_int(n, name="n") -> int:
    if not float(n).is_integer() or n < 0:
        raise InvalidParameterError(f"{name} must be a nonnegative integer, got {n!r}")
    return int(n)


def kummer_terminating(n, c, z):
    """Terminating confluent hypergeometric series F(-n, c, z).

    Evaluates the exact finite sum sum_{k<=n} (-n)_k z^k / ((c)_k k!) by
    forward recurrence on the term ratio.  `z` may be a scalar or ndarray.

    Raises InvalidParameterError when c is a nonpositive integer >= -n,
    where a Pochhammer factor in the denominator vanishes.
    """
    n = _check_nonneg_int(n)
    if float(c).is_integer() and c <= 0 and c >= -n:
        raise InvalidParameterError(f"c={c} is a nonpositive integer >= -{n}; series undefined")
    z = np.asarray(z, dtype=float)
    total = np.ones_like(z)
    term = np.ones_like(z)
    for k in range(n):
        term = term * ((-n + k) / ((c + k) * (k + 1.0))) * z
        total = total + term
    if total.ndim == 0:
        return float(total)
    return total


def kummer_terminating_deriv(n, c, z, order=1):
    """order-th z-derivative of F(-n, c, z), again a terminating series."""
    coeff = 1.0
    for i in range(order):
        if n - i == 0:
            return np.zeros_like(np.asarray(z, dtype=float)) if np.ndim(z) else 0.0
        coeff *= (-(n - i)) / (c + i)
    return coeff * kummer_terminating(n - order, c + order, z)


def gauss2f1_terminating(n, b, c, y):
    """Terminating Gauss series F(-n, b; c; y) = sum_{k<=n} (-n)_k (b)_k y^k / ((c)_k k!)."""
    n = _check_nonneg_int(n)
    if float(c).is_integer() and c <= 0 and c >= -n:
        raise InvalidParameterError(f"c={c} is a nonpositive integer >= -{n}; series undefined")
    y = np.asarray(y, dtype=float)
    total = np.ones_like(y)
    term = np.ones_like(y)
    for k in range(n):
        term = term * ((-n + k) * (b + k) / ((c + k) * (k + 1.0))) * y
        total = total + term
    if total.ndim == 0:
        return float(total)
    return total


def gauss2f1_terminating_deriv(n, b, c, y, order=1):
    """order-th y-derivative of F(-n, b; c; y)."""
    coeff = 1.0
    for i in range(order):
        if n - i == 0:
            return np.zeros_like(np.asarray(y, dtype=float)) if np.ndim(y) else 0.0
        coeff *= (-(n - i)) * (b + i) / (c + i)
    return coeff * gauss2f1_terminating(n - order, b + order, c + order, y)


def hermite(N, z):
    """Physicists' Hermite polynomial H_N(z) via H_{k+1} = 2 z H_k - 2 k H_{k-1}."""
    N = _check_nonneg_int(N, "N")
    z = np.asarray(z, dtype=float)
    h_prev = np.ones_like(z)
    if N == 0:
        return float(h_prev) if h_prev.ndim == 0 else h_prev
    h = 2.0 * z
    for k in range(1, N):
        h_prev, h = h, 2.0 * z * h - 2.0 * k * h_prev
    if h.ndim == 0:
        return float(h)
    return h


def log_gamma(x) -> float:
    """ln Gamma(x) for x > 0; thin validated wrapper over the C library lgamma."""
    if x <= 0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def _lf(a) -> float:
    # ln(a!) for nonnegative (half-integers never reach here: callers pass ints)
    return math.lgamma(a + 1.0)


def wigner_small_d(j, m, s, beta) -> float:
    """Wigner small-d matrix element d^j_{ms}(beta).

    Convention fixed by d^j_{ms}(0) = delta_{ms}; at j=1/2 the matrix is
    [[cos(b/2), -sin(b/2)], [sin(b/2), cos(b/2)]] for (m,s) ordered (1/2,-1/2).
    The factorial sum runs in log space with explicit sign tracking so that
    j up to ~50 stays finite.
    """
    tj, tm, ts = as_twice(j), as_twice(m), as_twice(s)
    if tj < 0 or abs(tm) > tj or abs(ts) > tj:
        raise InvalidQuantumNumbersError(f"need |m|,|s| <= j, got j={j}, m={m}, s={s}")
    if (tj - tm) % 2 or (tj - ts) % 2:
        raise InvalidQuantumNumbersError(f"j-m and j-s must be integers, got j={j}, m={m}, s={s}")
    # integer loop bounds: all combinations below are whole numbers
    jpm, jmm = (tj + tm) // 2, (tj - tm) // 2
    jps, jms = (tj + ts) // 2, (tj - ts) // 2
    ms = (tm - ts) // 2
    k_min = max(0, -ms)
    k_max = min(jps, jmm)
    log_pref = 0.5 * (_lf(jpm) + _lf(jmm) + _lf(jps) + _lf(jms))
    cb, sb = math.cos(beta / 2.0), math.sin(beta / 2.0)
    total = 0.0
    for k in range(k_min, k_max + 1):
        p_cos = jmm + jps - 2 * k  # = 2j + s - m - 2k
        p_sin = ms + 2 * k
        term = math.exp(log_pref - _lf(jps - k) - _lf(k) - _lf(jmm - k) - _lf(ms + k))
        sign = -1.0 if (ms + k) % 2 else 1.0
        total += sign * _signed_pow(cb, p_cos) * _signed_pow(sb, p_sin) * term
    return total


def _signed_pow(base: float, power: int) -> float:
    if power == 0:
        return 1.0
    return base ** power


def clebsch_gordan(j1, m1, j2, m2, J, M) -> float:
    """Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M>, Condon-Shortley phase.

    Selection-rule violations (M != m1+m2, triangle failure, |m| > j) return
    0.0 rather than raising; malformed inputs (off the half-integer grid,
    j-m not an integer) raise InvalidQuantumNumbersError.
    """
    tj1, tm1 = as_twice(j1), as_twice(m1)
    tj2, tm2 = as_twice(j2), as_twice(m2)
    tJ, tM = as_twice(J), as_twice(M)
    if tj1 < 0 or tj2 < 0 or tJ < 0:
        raise InvalidQuantumNumbersError("angular momenta must be nonnegative")
    if (tj1 - tm1) % 2 or (tj2 - tm2) % 2 or (tJ - tM) % 2:
        raise InvalidQuantumNumbersError("projections must differ from j by integers")
    if tM != tm1 + tm2:
        return 0.0
    if tJ < abs(tj1 - tj2) or tJ > tj1 + tj2 or (tj1 + tj2 - tJ) % 2:
        return 0.0
    if abs(tm1) > tj1 or abs(tm2) > tj2 or abs(tM) > tJ:
        return 0.0
    # all arguments below are exact integers
    a = (tj1 + tj2 - tJ) // 2
    b = (tj1 - tj2 + tJ) // 2
    c = (-tj1 + tj2 + tJ) // 2
    log_pref = 0.5 * (
        math.log(tJ + 1.0)
        + _lf(a) + _lf(b) + _lf(c) - _lf((tj1 + tj2 + tJ) // 2 + 1)
        + _lf((tJ + tM) // 2) + _lf((tJ - tM) // 2)
        + _lf((tj1 - tm1) // 2) + _lf((tj1 + tm1) // 2)
        + _lf((tj2 - tm2) // 2) + _lf((tj2 + tm2) // 2)
    )
    k_min = max(0, (tj2 - tJ - tm1) // 2, (tj1 + tm2 - tJ) // 2)
    k_max = min(a, (tj1 - tm1) // 2, (tj2 + tm2) // 2)
    total = 0.0
    for k in range(k_min, k_max + 1):
        log_den = (
            _lf(k)
            + _lf(a - k)
            + _lf((tj1 - tm1) // 2 - k)
            + _lf((tj2 + tm2) // 2 - k)
            + _lf((tJ - tj2 + tm1) // 2 + k)
            + _lf((tJ - tj1 - tm2) // 2 + k)
        )
        total += (-1.0) ** k * math.exp(log_pref - log_den)
    return total
