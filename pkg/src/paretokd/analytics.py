"""Expected maxima and record counts for random point sets.

All quantities are exact expectations under the usual models: points drawn
i.i.d. uniformly from the unit hypercube (any product distribution with
continuous marginals gives the same counts) or uniformly from the solid
simplex.  Everything reduces to generalized harmonic numbers and Gamma
ratios; precision per function is documented below.

expected_hypercube_maxima(n, d)
    mu(n, d) = (1/(d-1)) * sum_{1<=j<d} H_n^{(d-j)} mu(n, j), mu(n, 1) = 1.
    In particular mu(n, 2) is the plain harmonic number.

expected_simplex_maxima(n, d)
    nu(n, d) = n * sum_{0<=j<d} C(d-1, j) (-1)^j Gamma(n) Gamma((j+1)/d)
               / Gamma(n + (j+1)/d).  The log-Gamma difference in each
    term cancels catastrophically in double precision once n reaches the
    millions (the logs grow like n log n while their difference stays
    near a log n), so the alternating sum is evaluated in 40-digit
    arithmetic and rounded once at the end.  Guarded to n <= 10^9 and
    d <= 12; outside that documented range a ValueError is raised rather
    than returning quietly wrong digits.

expected_records(n, d)
    E(R_n) = sum_{i<=n} mu(i, d) / i, which equals mu(n, d+1): records in
    d dimensions appear exactly as often as maxima in d+1 (the arrival
    index acts as one more coordinate).
"""

from __future__ import annotations

import functools
import math

import numpy as np
from mpmath import mp
from scipy.special import digamma, zeta

# Below this the sum is taken literally (math.fsum is exactly rounded);
# above, closed forms via digamma / Hurwitz zeta keep it O(1).
_DIRECT_CUTOFF = 2048


@functools.lru_cache(maxsize=None)
def harmonic(n: int, j: int = 1) -> float:
    """Generalized harmonic number H_n^(j) = sum_{i<=n} i^-j."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if j < 1:
        raise ValueError(f"order must be >= 1, got {j}")
    if n == 0:
        return 0.0
    if n <= _DIRECT_CUTOFF:
        return math.fsum(i ** -float(j) for i in range(1, n + 1))
    if j == 1:
        return float(digamma(n + 1)) + np.euler_gamma
    return float(zeta(j) - zeta(j, n + 1))


@functools.lru_cache(maxsize=None)
def expected_hypercube_maxima(n: int, d: int) -> float:
    """Expected number of maxima among n uniform points in d dimensions."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if d == 1:
        return 1.0
    terms = [
        harmonic(n, d - j) * expected_hypercube_maxima(n, j) for j in range(1, d)
    ]
    return math.fsum(terms) / (d - 1)


@functools.lru_cache(maxsize=None)
def expected_simplex_maxima(n: int, d: int) -> float:
    """Expected number of maxima among n uniform points in the solid simplex."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    if n > 10**9 or d > 12:
        raise ValueError(
            f"(n={n}, d={d}) outside the supported range n <= 10^9, d <= 12"
        )
    with mp.workdps(40):
        lgn = mp.loggamma(n)
        total = mp.mpf(0)
        for j in range(d):
            a = mp.mpf(j + 1) / d
            t = mp.binomial(d - 1, j) * mp.gamma(a) * mp.exp(lgn - mp.loggamma(n + a))
            total += -t if j % 2 else t
        return float(n * total)


def expected_records(n: int, d: int) -> float:
    """Expected number of records in a stream of n uniform points in d dims."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    return math.fsum(expected_hypercube_maxima(i, d) / i for i in range(1, n + 1))


# CLI model names -> (callable, minimum dimension).
EXPECTATION_MODELS = {
    "hypercube-maxima": expected_hypercube_maxima,
    "simplex-maxima": expected_simplex_maxima,
    "hypercube-records": expected_records,
}


def expected_value(model: str, n: int, d: int) -> float:
    """Dispatch by model name; unknown names raise ValueError."""
    try:
        fn = EXPECTATION_MODELS[model]
    except KeyError:
        raise ValueError(
            f"unknown model {model!r}, expected one of {sorted(EXPECTATION_MODELS)}"
        ) from None
    return fn(n, d)
