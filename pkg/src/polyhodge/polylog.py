"""Numerical evaluation of classical and multiple polylogarithms.

Classical Li_m uses three regimes: the defining power series on |z| <= 1/2,
a Bernoulli-number inversion formula for large |z|, and the expansion of
Li_m(e^mu) in powers of mu = log z on the annulus in between.  All branches
are principal, with the cut of Li_m along [1, oo); values on the cut require
an explicit side (+1 for the limit from above, -1 from below).

Multiple polylogarithms are summed by vectorised nested partial sums inside
the unit polydisc.  On the boundary (arguments equal to 1, last exponent
>= 2) the tail of the outer sum grows like a polynomial in log k over a
power of k, and the limit is extracted by fitting that model to partial
sums at geometrically spaced checkpoints.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, isclose, log as _rlog

import numpy as np

from .errors import DomainError
from .settings import DEFAULT, EvalSettings

TWO_PI_I = 2j * np.pi

_CUT_TOL = 1e-14  # how close to the real axis counts as "on the cut"


@lru_cache(maxsize=None)
def bernoulli(k: int) -> Fraction:
    """Bernoulli number B_k (convention B_1 = -1/2), exact."""
    if k == 0:
        return Fraction(1)
    if k == 1:
        return Fraction(-1, 2)
    if k % 2 == 1:
        return Fraction(0)
    acc = Fraction(0)
    for j in range(k):
        acc += comb(k + 1, j) * bernoulli(j)
    return -acc / (k + 1)


@lru_cache(maxsize=None)
def zeta_int(j: int) -> float:
    """Riemann zeta at an integer j != 1 (Euler-Maclaurin for j >= 2)."""
    if j == 1:
        raise DomainError("zeta(1) diverges")
    if j == 0:
        return -0.5
    if j < 0:
        return float(-bernoulli(1 - j) / (1 - j))
    n_cut = 200
    acc = sum(n ** (-float(j)) for n in range(1, n_cut))
    acc += n_cut ** (1.0 - j) / (j - 1) + 0.5 * n_cut ** (-float(j))
    # Euler-Maclaurin correction terms with B_2, B_4, B_6, B_8
    deriv_factor = float(j)
    power = n_cut ** (-float(j) - 1)
    for r in range(1, 5):
        acc += float(bernoulli(2 * r)) / factorial(2 * r) * deriv_factor * power
        deriv_factor *= (j + 2 * r - 1) * (j + 2 * r)
        power /= n_cut * n_cut
    return acc


def _on_li_cut(z: complex) -> bool:
    return abs(z.imag) <= _CUT_TOL * max(1.0, abs(z)) and z.real >= 1.0


def _log_neg_real(w: complex, side: int) -> complex:
    """log(w) when w may be a negative real; side +1/-1 selects the branch limit."""
    if abs(w.imag) <= _CUT_TOL * max(1.0, abs(w)) and w.real < 0:
        return complex(_rlog(abs(w.real)), side * np.pi)
    return complex(np.log(complex(w)))


def li_m1(z: complex, side: int | None = None) -> complex:
    """Li_1(z) = -log(1 - z), principal branch."""
    z = complex(z)
    if z == 1:
        raise DomainError("Li_1 has a pole at z = 1")
    if _on_li_cut(z):
        if side is None:
            raise DomainError(f"z = {z} lies on the cut [1, oo); pass side=+1 or -1")
        # z + i*eps*side puts 1 - z on the -side of the negative real axis
        return -_log_neg_real(1 - z, -side)
    return -complex(np.log(1 - z))


def _li_series_scalar(m: int, z: complex, tol: float) -> complex:
    acc = 0j
    term = 1.0 + 0j
    for k in range(1, 400):
        term *= z
        inc = term / k**m
        acc += inc
        if abs(inc) < tol * 0.01 and k > 4:
            break
    return acc


def _li_log_series(m: int, z: complex, side: int | None, tol: float) -> complex:
    # Li_m(e^mu) as a series in mu = log z; valid for |mu| < 2*pi
    mu = complex(np.log(z))
    if _on_li_cut(z):
        if side is None:
            raise DomainError(f"z = {z} lies on the cut [1, oo); pass side=+1 or -1")
        log_neg_mu = _log_neg_real(-mu, -side)
    else:
        log_neg_mu = _log_neg_real(-mu, +1)  # -mu never a negative real here
    harmonic = sum(1.0 / r for r in range(1, m))
    acc = mu ** (m - 1) / factorial(m - 1) * (harmonic - log_neg_mu)
    # tail terms decay like (|mu| / 2 pi)^k; zeta(m - k) vanishes at negative
    # even arguments, so individual increments are not a stopping criterion
    ratio = max(abs(mu) / (2 * np.pi), 1e-6)
    k_top = int(_rlog(tol * 0.01) / _rlog(ratio)) + m + 8 if ratio < 0.999 else 400
    term = 1.0 + 0j  # mu^k / k!
    for k in range(0, min(k_top, 400)):
        if k != m - 1:
            acc += zeta_int(m - k) * term
        term *= mu / (k + 1)
    return acc


def _li_inversion(m: int, z: complex, side: int | None, tol: float) -> complex:
    # Li_m(z) = (-1)^(m-1) Li_m(1/z) - (2 pi i)^m / m! * B_m(1/2 + log(-z)/(2 pi i))
    if _on_li_cut(z):
        if side is None:
            raise DomainError(f"z = {z} lies on the cut [1, oo); pass side=+1 or -1")
        log_neg_z = _log_neg_real(-z, -side)
    else:
        log_neg_z = _log_neg_real(-z, +1)
    u = 0.5 + log_neg_z / TWO_PI_I
    poly = sum(comb(m, k) * float(bernoulli(k)) * u ** (m - k) for k in range(m + 1))
    sign = -1.0 if m % 2 == 0 else 1.0
    return sign * _li_series_scalar(m, 1.0 / z, tol) - TWO_PI_I**m / factorial(m) * poly


def classical_li(m: int, z: complex, side: int | None = None,
                 settings: EvalSettings = DEFAULT) -> complex:
    """Classical polylogarithm Li_m(z) on the principal branch.

    ``side`` selects the branch limit (+1 from above, -1 from below) when z
    lies on the cut [1, oo); without it such z raise DomainError.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    z = complex(z)
    if m == 1:
        return li_m1(z, side)
    if z == 0:
        return 0j
    if abs(z - 1) <= _CUT_TOL:
        return complex(zeta_int(m))
    tol = settings.series_tol
    if abs(z) <= 0.5:
        return _li_series_scalar(m, z, tol)
    if abs(z) <= 1.9:
        return _li_log_series(m, z, side, tol)
    return _li_inversion(m, z, side, tol)


def _validate_multi_index(m) -> tuple:
    m = tuple(int(v) for v in m)
    if not m or any(v < 1 for v in m):
        raise ValueError(f"multi-index entries must be positive integers, got {m}")
    return m


_CHUNK = 1 << 19


def _nested_partial_sums(m, x, k_max, checkpoints):
    """Partial sums of the nested series at the given checkpoint values of k."""
    n = len(m)
    carries = np.zeros(n, dtype=complex)  # carries[j] = A_j(k0) entering each chunk
    total = 0j
    logs = [np.log(complex(v)) if v != 0 else None for v in x]
    out = {}
    cp = sorted(checkpoints)
    cp_idx = 0
    k0 = 1
    while k0 <= k_max:
        k1 = min(k0 + _CHUNK, k_max + 1)
        k = np.arange(k0, k1, dtype=float)
        level = np.ones(len(k), dtype=complex)  # A_0 = 1
        for j in range(n):
            if logs[j] is None:
                terms = np.zeros(len(k), dtype=complex)
            else:
                terms = level * np.exp(k * logs[j]) / k ** m[j]
            if j < n - 1:
                csum = np.cumsum(terms)
                level = carries[j] + csum - terms  # exclusive prefix sum
                carries[j] += csum[-1]
            else:
                csum = np.cumsum(terms)
                while cp_idx < len(cp) and cp[cp_idx] < k1:
                    out[cp[cp_idx]] = total + csum[cp[cp_idx] - k0]
                    cp_idx += 1
                total += csum[-1]
        k0 = k1
    return total, out


def li_series(m, x, settings: EvalSettings = DEFAULT) -> complex:
    """Multiple polylogarithm by its nested power series.

    Requires |x_i| <= 1 for all i; moduli equal to 1 are only accepted when
    the coordinate is exactly 1 and the last exponent is >= 2 (the tail is
    then resummed by log-polynomial extrapolation).
    """
    m = _validate_multi_index(m)
    x = tuple(complex(v) for v in x)
    if len(m) != len(x):
        raise ValueError("multi-index and point must have equal depth")
    n = len(m)
    moduli = [abs(v) for v in x]
    if any(mod > 1 + 1e-13 for mod in moduli):
        raise DomainError(f"series diverges: |x_{moduli.index(max(moduli)) + 1}| > 1")
    # convergence is governed by the suffix products |x_i ... x_n|
    suffix = [0.0] * n
    acc = 1.0
    for i in range(n - 1, -1, -1):
        acc *= moduli[i]
        suffix[i] = acc
    if x[n - 1] == 0:
        return 0j  # every term carries x_n^{k_n}
    if moduli[n - 1] > 1 - 1e-13:
        # boundary: the tail of the outer sum decays polynomially
        if m[-1] < 2:
            raise DomainError("boundary point with last exponent 1 diverges")
        for i, mod in enumerate(moduli):
            if mod > 1 - 1e-13 and abs(x[i] - 1) > 1e-13:
                raise DomainError(
                    f"boundary evaluation only supported at x_i = 1, got x_{i + 1} = {x[i]}")
        return _li_boundary(m, x, settings)
    rho = max(suffix)
    if rho == 0:
        return 0j
    tol = settings.series_tol
    k_needed = int(_rlog(tol * (1 - rho) / (2 * n + 2)) / _rlog(rho)) + 2 * n + 10 if rho > 1e-8 else n + 10
    k_max = min(max(k_needed, 8 * n), settings.max_terms)
    total, _ = _nested_partial_sums(m, x, k_max, ())
    return total


def _li_boundary(m, x, settings: EvalSettings) -> complex:
    """Nested sum with some coordinates equal to 1: checkpointed extrapolation.

    The remainder of the outer sum behaves like sum_q c_q log^q(K) / K^p with
    p in {m_n - 1, m_n}; fitting that model at geometrically spaced K gives
    the limit far below the raw truncation error.
    """
    n = len(m)
    k_top = 1 << 23
    if settings.max_terms < k_top:
        k_top = 1 << max(14, settings.max_terms.bit_length() - 1)
    cps = [k_top >> i for i in range(10)]
    _, partial = _nested_partial_sums(m, x, k_top, cps)
    ks = np.array(sorted(partial), dtype=float)
    vals = np.array([partial[int(k)] for k in sorted(partial)])
    p = m[-1] - 1
    cols = [np.ones_like(ks)]
    for q in range(n):
        cols.append(np.log(ks) ** q / ks**p)
    for q in range(n):
        cols.append(np.log(ks) ** q / ks ** (p + 1))
    design = np.stack(cols, axis=1)
    scale = np.abs(design).max(axis=0)
    coef, *_ = np.linalg.lstsq(design / scale, vals, rcond=None)
    return complex(coef[0] / scale[0])


def mzv(m, settings: EvalSettings = DEFAULT) -> float:
    """Multiple zeta value: the nested series at (1, ..., 1); needs m_n >= 2."""
    m = _validate_multi_index(m)
    if m[-1] < 2:
        raise DomainError("multiple zeta value diverges unless the last exponent is >= 2")
    val = li_series(m, (1.0,) * len(m), settings)
    return float(val.real)


def h_aux(x: complex, y: complex) -> complex:
    """H(x, y) = Li_1(y) - Li_1(x) - log x on principal branches."""
    x, y = complex(x), complex(y)
    if x == 0:
        raise DomainError("H undefined at x = 0")
    if x == 1 or y == 1:
        raise DomainError("H undefined at x = 1 or y = 1")
    return -np.log(1 - y) + np.log(1 - x) - np.log(x)
