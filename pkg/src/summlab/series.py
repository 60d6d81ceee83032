"""Truncated power series and two-sided Fourier coefficient sequences.

A ``CoeffSeq`` stores a finitely supported complex coefficient sequence,
either one-sided ("taylor", indices 0..hi) or two-sided ("fourier",
indices lo..hi with lo <= 0).  All arithmetic states its output degree
explicitly; nothing is truncated silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "CoeffSeq",
    "taylor",
    "fourier",
    "evaluate",
    "cauchy_product",
    "series_recip",
    "series_exp",
    "series_powhalf_ratio",
    "derivative",
    "binomial",
    "one_plus_z_power",
    "one_minus_z_power",
    "one_minus_z_power_tail",
]


@dataclass(frozen=True)
class CoeffSeq:
    """Finitely supported coefficient sequence indexed lo..lo+len(coeffs)-1."""

    kind: str
    lo: int
    coeffs: np.ndarray

    def __post_init__(self):
        if self.kind not in ("taylor", "fourier"):
            raise ValueError(f"unknown kind {self.kind!r}")
        arr = np.asarray(self.coeffs, dtype=complex)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coeffs must be a non-empty 1-d array")
        if self.kind == "taylor" and self.lo != 0:
            raise ValueError("taylor sequences start at index 0")
        if self.kind == "fourier" and self.lo > 0:
            raise ValueError("fourier sequences need lo <= 0")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        """Largest absolute index carried (support may be smaller)."""
        return max(self.hi, -self.lo)

    def coeff(self, k: int) -> complex:
        """Coefficient at index k; zero outside the stored window."""
        if self.lo <= k <= self.hi:
            return complex(self.coeffs[k - self.lo])
        return 0.0 + 0.0j

    def indices(self) -> np.ndarray:
        return np.arange(self.lo, self.hi + 1)

    def __len__(self) -> int:
        return len(self.coeffs)


def taylor(coeffs) -> CoeffSeq:
    """One-sided sequence with coeffs[k] the coefficient of z^k."""
    return CoeffSeq("taylor", 0, np.asarray(coeffs, dtype=complex))


def fourier(coeffs, lo: int) -> CoeffSeq:
    """Two-sided sequence; coeffs[i] is the coefficient of index lo+i."""
    return CoeffSeq("fourier", lo, np.asarray(coeffs, dtype=complex))


def evaluate(s: CoeffSeq, r: float, theta):
    """Evaluate sum_k c_k r^|k| e^{ik theta}.

    Exact (up to roundoff) for these finite sequences, including r = 1.
    theta may be a scalar or an array; the result matches its shape.
    """
    if r < 0.0 or r > 1.0:
        raise ValueError("radius must lie in [0, 1]; the series beyond is not represented")
    ks = s.indices()
    radial = np.ones(len(ks)) if r == 1.0 else r ** np.abs(ks)
    th = np.asarray(theta, dtype=float)
    phases = np.exp(1j * th[..., None] * ks)
    out = phases @ (s.coeffs * radial)
    return complex(out) if np.isscalar(theta) or th.ndim == 0 else out


def cauchy_product(a: CoeffSeq, b: CoeffSeq, out_deg: int) -> CoeffSeq:
    """Coefficient k of the product, sum_{i+j=k} a_i b_j, for k <= out_deg."""
    if a.kind != "taylor" or b.kind != "taylor":
        raise ValueError("cauchy_product expects taylor sequences")
    if out_deg < 0:
        raise ValueError("out_deg must be >= 0")
    full = np.convolve(a.coeffs, b.coeffs)
    out = np.zeros(out_deg + 1, dtype=complex)
    n = min(len(full), out_deg + 1)
    out[:n] = full[:n]
    return taylor(out)


def series_recip(f: CoeffSeq, out_deg: int) -> CoeffSeq:
    """Multiplicative inverse g with (f g)_k = delta_{k0} for k <= out_deg.

    Standard recurrence g_k = -(sum_{i=1..k} f_i g_{k-i}) / f_0.
    """
    if f.kind != "taylor":
        raise ValueError("series_recip expects a taylor sequence")
    f0 = f.coeff(0)
    if f0 == 0:
        raise ValueError("non-invertible series (zero constant term)")
    fc = np.zeros(out_deg + 1, dtype=complex)
    n = min(len(f.coeffs), out_deg + 1)
    fc[:n] = f.coeffs[:n]
    g = np.zeros(out_deg + 1, dtype=complex)
    g[0] = 1.0 / f0
    for k in range(1, out_deg + 1):
        g[k] = -np.dot(fc[1:k + 1], g[k - 1::-1]) / f0
    return taylor(g)


def series_exp(f: CoeffSeq, out_deg: int) -> CoeffSeq:
    """Exponential of a series via k g_k = sum_{i=1..k} i f_i g_{k-i}."""
    if f.kind != "taylor":
        raise ValueError("series_exp expects a taylor sequence")
    fc = np.zeros(out_deg + 1, dtype=complex)
    n = min(len(f.coeffs), out_deg + 1)
    fc[:n] = f.coeffs[:n]
    weighted = fc * np.arange(out_deg + 1)
    g = np.zeros(out_deg + 1, dtype=complex)
    g[0] = np.exp(fc[0])
    for k in range(1, out_deg + 1):
        g[k] = np.dot(weighted[1:k + 1], g[k - 1::-1]) / k
    return taylor(g)


def series_powhalf_ratio(out_deg: int) -> CoeffSeq:
    """Coefficients of sqrt((1+z)/(1-z)) = (1+z)^{1/2} (1-z)^{-1/2}."""
    a = one_plus_z_power(0.5, out_deg)
    b = one_minus_z_power(-0.5, out_deg)
    return cauchy_product(a, b, out_deg)


def derivative(f: CoeffSeq) -> CoeffSeq:
    """Termwise derivative of a taylor sequence."""
    if f.kind != "taylor":
        raise ValueError("derivative expects a taylor sequence")
    if len(f.coeffs) == 1:
        return taylor([0.0])
    ks = np.arange(1, len(f.coeffs))
    return taylor(f.coeffs[1:] * ks)


def binomial(x: float, k) -> float:
    """Generalized binomial coefficient C(x, k) for x >= 0.

    Exact integer arithmetic when both arguments are small integers,
    log-gamma otherwise (overflow-safe past n ~ 30).  k may be a
    non-negative real as well, as in C(n + alpha, alpha).
    """
    if x < 0:
        raise ValueError("binomial requires x >= 0")
    if float(k) == 0.0:
        return 1.0
    if float(k).is_integer() and float(x).is_integer():
        xi, ki = int(round(x)), int(round(k))
        if ki > xi:
            return 0.0
        if xi <= 30:
            return float(math.comb(xi, ki))
    if k < 0 or k > x:
        raise ValueError("binomial requires 0 <= k <= x")
    return math.exp(math.lgamma(x + 1) - math.lgamma(k + 1) - math.lgamma(x - k + 1))


def one_plus_z_power(alpha: float, out_deg: int) -> CoeffSeq:
    """Binomial series of (1+z)^alpha: coefficients C(alpha, m)."""
    c = np.ones(out_deg + 1)
    for m in range(1, out_deg + 1):
        c[m] = c[m - 1] * (alpha - (m - 1)) / m
    return taylor(c)


def one_minus_z_power(alpha: float, out_deg: int) -> CoeffSeq:
    """Binomial series of (1-z)^alpha: coefficients (-1)^m C(alpha, m).

    For alpha = -beta < 0 the coefficients are C(m+beta-1, m) >= 0.
    """
    c = np.ones(out_deg + 1)
    for m in range(1, out_deg + 1):
        c[m] = c[m - 1] * ((m - 1) - alpha) / m
    return taylor(c)


def one_minus_z_power_tail(alpha: float, trunc_deg: int) -> float:
    """Upper bound on sum_{k > trunc_deg} |c_k| for (1-z)^alpha, alpha >= 0.

    Uses the ratio |c_{k+1}/c_k| = (k - alpha)/(k + 1) < 1 and the
    comparison with the integral of k^{-alpha-1}; finite because the
    coefficients decay like k^{-alpha-1}.
    """
    if alpha < 0:
        raise ValueError("tail bound assumes alpha >= 0")
    if alpha == 0:
        return 0.0
    L = trunc_deg
    if L < alpha + 2:
        raise ValueError("truncation degree too small for the tail bound")
    cs = one_minus_z_power(alpha, L + 1).coeffs
    head = abs(cs[L + 1])
    # |c_{L+1+m}| <= |c_{L+1}| ((L+2)/(L+m+2))^{alpha+1}; sum the majorant.
    slack = 1.0 + (L + 2) ** (alpha + 1) / (alpha * (L + 1) ** alpha)
    return head * slack
