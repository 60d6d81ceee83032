"""De Branges-Rovnyak ladders, Pythagorean complements, and growth profiles.

The space is presented through the Taylor coefficients c_j of its Smirnov
symbol: the monomial norms obey ||z^j||^2 = 1 + sum_{i<=j} |c_i|^2, and the
kernel-at-zero norms obey ||k_{0,j}||^2 = 1 - sum_{i<=j} |b_hat(i)|^2.

The complement construction recovers the outer function a with
|a|^2 = 1 - |b|^2 on the circle and a(0) > 0.  Boundary data of interest
here is singular at z = 1 (the symbol z/(1-z), the no-order example), so
the Fourier coefficients of the boundary log-modulus are integrated on a
mesh graded quintically toward that point; a uniform grid loses the
singular mass linearly in the grid size and cannot reach reporting
tolerances.  The completion itself is the spec of the analytic signal:
zero the negative frequencies and halve the DC term.
"""

from __future__ import annotations

import numpy as np

from .report import Report
from .series import (
    CoeffSeq,
    cauchy_product,
    evaluate,
    series_exp,
    series_powhalf_ratio,
    series_recip,
    taylor,
)

__all__ = [
    "HbSpace",
    "hb_from_phi",
    "hb_kernel0_norm",
    "outer_from_log_modulus",
    "pythag_complement",
    "phi_growth_profile",
    "phi_geometric",
    "phi_expsqrt",
    "local_dirichlet_b",
    "local_dirichlet_log_deficit",
    "expsqrt_log_modulus_of_a",
    "W0",
]

# Sarason's local-Dirichlet example: b(z) = (1-w0) z / (1 - w0 z).
W0 = (3.0 - np.sqrt(5.0)) / 2.0


class HbSpace:
    """Norm ladders of a de Branges-Rovnyak space with non-extreme symbol."""

    def __init__(self, phi_coeffs, b_coeffs=None):
        c = np.asarray(phi_coeffs, dtype=complex)
        self.phi_coeffs = c
        self._mono_sq = 1.0 + np.cumsum(np.abs(c) ** 2)
        if b_coeffs is None:
            self._b_prefix = None
        else:
            b = np.asarray(b_coeffs, dtype=complex)
            self.b_coeffs = b
            self._b_prefix = np.cumsum(np.abs(b) ** 2)

    @property
    def max_index(self) -> int:
        return len(self._mono_sq) - 1

    def monomial_norm_sq(self, j: int) -> float:
        """1 + sum_{i<=j} |c_i|^2, nondecreasing and >= 1."""
        return float(self._mono_sq[j])

    def monomial_norm(self, j: int) -> float:
        return float(np.sqrt(self._mono_sq[j]))

    def kernel0_norm_sq(self, j: int) -> float:
        """1 - sum_{i<=j} |b_hat(i)|^2, in (0, 1] for non-extreme b."""
        if self._b_prefix is None:
            raise ValueError("kernel norms need the b coefficients")
        s = float(self._b_prefix[min(j, len(self._b_prefix) - 1)])
        if s >= 1.0:
            raise ValueError("b not in unit ball at this truncation")
        return 1.0 - s

    def kernel0_norm(self, j: int) -> float:
        return float(np.sqrt(self.kernel0_norm_sq(j)))

    def kernel0_lower_bound(self) -> float:
        """1 - ||b||_{H^2}^2 at this truncation, a uniform lower bound."""
        if self._b_prefix is None:
            raise ValueError("kernel norms need the b coefficients")
        return 1.0 - float(self._b_prefix[-1])


def hb_from_phi(phi, J: int, b_coeffs=None) -> HbSpace:
    """Ladder from the symbol's Taylor coefficients up to degree J.

    phi may be a CoeffSeq, a coefficient array, or a callable deg -> CoeffSeq
    (for lazily generated symbols).
    """
    if callable(phi):
        phi = phi(J)
    c = phi.coeffs if isinstance(phi, CoeffSeq) else np.asarray(phi, dtype=complex)
    if len(c) < J + 1:
        c = np.concatenate([c, np.zeros(J + 1 - len(c), dtype=complex)])
    return HbSpace(c[:J + 1], b_coeffs=b_coeffs)


def hb_kernel0_norm(b_coeffs, j: int) -> float:
    """sqrt(1 - sum_{i<=j} |b_hat(i)|^2) from a coefficient array."""
    b = b_coeffs.coeffs if isinstance(b_coeffs, CoeffSeq) else np.asarray(b_coeffs, dtype=complex)
    s = float(np.sum(np.abs(b[:j + 1]) ** 2))
    if s >= 1.0:
        raise ValueError("b not in unit ball at this truncation")
    return float(np.sqrt(1.0 - s))


# ---------------------------------------------------------------------------
# Outer functions from boundary log-modulus
# ---------------------------------------------------------------------------


def _graded_distance(s: np.ndarray) -> np.ndarray:
    """s - (4/3) sin s + (1/6) sin 2s, evaluated stably near 0.

    Vanishes quintically: s^5/30 - s^7/252 + s^9/4320 - ...
    """
    out = np.where(
        s < 0.1,
        s ** 5 / 30.0 - s ** 7 / 252.0 + s ** 9 / 4320.0,
        s - (4.0 / 3.0) * np.sin(s) + np.sin(2.0 * s) / 6.0,
    )
    return out


def _graded_nodes(log2_size: int):
    """Signed angular distances from z = 1 and quadrature weights.

    Midpoint nodes in the grading parameter; the image nodes cluster
    quintically at the singular point without ever landing on it.
    """
    n = 1 << log2_size
    tau = (np.arange(n) + 0.5) * (2.0 * np.pi / n)
    side = np.minimum(tau, 2.0 * np.pi - tau)
    dist = _graded_distance(side)
    signed = np.where(tau <= np.pi, dist, -dist)
    weights = (2.0 / 3.0) * (1.0 - np.cos(tau)) ** 2 / n
    return signed, weights


def boundary_log_coeffs(u_fn, log2_size: int, K: int) -> np.ndarray:
    """Fourier coefficients u_hat(0..K) of a log-integrable boundary function.

    u_fn receives signed angles theta in (-pi, pi] measured from z = 1 and
    must be integrable there; any algebraic-or-log singularity at 0 is
    absorbed by the quintic grading.
    """
    sd, w = _graded_nodes(log2_size)
    uv = u_fn(sd) * w
    if not np.all(np.isfinite(uv)):
        raise ValueError("boundary log-modulus not finite at quadrature nodes")
    out = np.empty(K + 1, dtype=complex)
    phase = np.ones(len(sd), dtype=complex)
    step = np.exp(-1j * sd)
    for k in range(K + 1):
        out[k] = np.dot(phase, uv)
        phase *= step
    return out


def outer_from_log_modulus(u_fn, deg: int, log2_size: int = 14) -> CoeffSeq:
    """Taylor coefficients of the outer function with boundary modulus e^u.

    Analytic completion of u: keep frequencies 0..deg, double the positive
    ones, exponentiate in coefficient space.  The result has positive real
    constant term e^{u_hat(0)}.
    """
    c = boundary_log_coeffs(u_fn, log2_size, deg)
    F = np.empty(deg + 1, dtype=complex)
    F[0] = c[0].real
    F[1:] = 2.0 * c[1:]
    return series_exp(taylor(F), deg)


def _as_boundary_callable(b):
    if isinstance(b, CoeffSeq):
        return lambda theta: evaluate(b, 1.0, theta)
    if callable(b):
        return b
    raise TypeError("b must be a CoeffSeq, a callable, or a grid-value array")


def pythag_complement(b, grid, deg: int = 128, log_deficit=None):
    """Outer a with |a|^2 + |b|^2 = 1 on the circle, a(0) > 0, and phi = b/a.

    Returns (a_coeffs, phi_coeffs) as taylor CoeffSeq of degree ``deg``.

    b may be a CoeffSeq, a callable theta -> complex, or an array of values
    on the grid's nodes.  Callable/CoeffSeq input is resampled on the graded
    mesh, which tolerates |b| -> 1 at z = 1 (the non-extreme boundary
    singularity of the examples here).  An optional ``log_deficit`` callable
    returning log(1 - |b|^2) sidesteps the 1 - |b|^2 cancellation when a
    closed form is available.

    Array input runs entirely on the uniform grid and requires |b| < 1 at
    every node; it cannot be resampled, so boundary-singular data is
    rejected rather than silently mangled.
    """
    if isinstance(b, np.ndarray):
        return _complement_from_grid_values(b, grid, deg)
    b_fn = _as_boundary_callable(b)
    if log_deficit is not None:
        u_fn = lambda th: 0.5 * log_deficit(th)
    else:
        def u_fn(th):
            mod = np.abs(b_fn(th))
            if np.any(mod > 1.0 + 1e-12):
                raise ValueError("not non-extreme at grid resolution (|b| >= 1)")
            # 1 - |b|^2 underflows to 0 within an ulp of a boundary zero;
            # those nodes carry negligible graded weight, so a floor is safe
            d = np.maximum(1.0 - mod ** 2, 1e-300)
            return 0.5 * np.log(d)
    a = outer_from_log_modulus(u_fn, deg, grid.log2_size)
    if isinstance(b, CoeffSeq):
        bc = np.zeros(deg + 1, dtype=complex)
        n = min(len(b.coeffs), deg + 1)
        bc[:n] = b.coeffs[:n]
        b_series = taylor(bc)
    else:
        b_series = _coeffs_from_callable(b_fn, grid, deg)
    phi = cauchy_product(b_series, series_recip(a, deg), deg)
    return a, phi


def _coeffs_from_callable(b_fn, grid, deg: int) -> CoeffSeq:
    n = grid.size
    h = 2.0 * np.pi / n
    theta = (np.arange(n) + 0.5) * h
    vals = np.asarray(b_fn(theta), dtype=complex)
    c = np.fft.fft(vals) / n * np.exp(-1j * np.arange(n) * h / 2.0)
    return taylor(c[:deg + 1])


def _complement_from_grid_values(b_vals, grid, deg: int):
    """Literal uniform-grid path: completion, exponentiation, and division
    all on the grid.  Spectrally exact for band-limited, strictly
    contractive data."""
    n = grid.size
    if len(b_vals) != n:
        raise ValueError("value array must match the grid size")
    mod2 = np.abs(np.asarray(b_vals, dtype=complex)) ** 2
    if np.any(mod2 >= 1.0):
        raise ValueError("not non-extreme at grid resolution (|b| >= 1 on a node)")
    u = 0.5 * np.log1p(-mod2)
    c = np.fft.fft(u) / n
    buf = np.zeros(n, dtype=complex)
    buf[0] = c[0].real
    buf[1:n // 2] = 2.0 * c[1:n // 2]
    F = np.fft.ifft(buf) * n
    a_vals = np.exp(F)
    phi_vals = b_vals / a_vals
    ah = (np.fft.fft(a_vals) / n)[:deg + 1]
    ph = (np.fft.fft(phi_vals) / n)[:deg + 1]
    return taylor(ah), taylor(ph)


# ---------------------------------------------------------------------------
# Built-in symbols
# ---------------------------------------------------------------------------


def phi_geometric(J: int) -> CoeffSeq:
    """z/(1-z): coefficients (0, 1, 1, ...)."""
    c = np.ones(J + 1, dtype=complex)
    c[0] = 0.0
    return taylor(c)


def phi_expsqrt(J: int) -> CoeffSeq:
    """exp(sqrt((1+z)/(1-z))), the symbol no Cesaro order can handle."""
    return series_exp(series_powhalf_ratio(J), J)


def local_dirichlet_b(theta):
    """Boundary values of b(z) = (1-w0) z / (1 - w0 z) with w0 = (3-sqrt 5)/2."""
    z = np.exp(1j * np.asarray(theta, dtype=float))
    return (1.0 - W0) * z / (1.0 - W0 * z)


def local_dirichlet_log_deficit(theta):
    """log(1 - |b|^2) for the local-Dirichlet b, cancellation-free.

    1 - |b|^2 = 4 w0 sin^2(theta/2) / |1 - w0 e^{i theta}|^2 identically,
    because w0 solves w^2 - 3w + 1 = 0.
    """
    th = np.asarray(theta, dtype=float)
    num = 4.0 * W0 * np.sin(th / 2.0) ** 2
    den = 1.0 + W0 ** 2 - 2.0 * W0 * np.cos(th)
    return np.log(num / den)


def expsqrt_log_modulus_of_a(theta):
    """u = log|a| for the expsqrt symbol: -(s + log(1+e^{-2s})/2),
    s = sqrt(|cot(theta/2)|/2), from |a|^2 (1 + |phi|^2) = 1."""
    th = np.asarray(theta, dtype=float)
    s = np.sqrt(np.abs(np.cos(th / 2.0) / np.sin(th / 2.0)) / 2.0)
    return -(s + 0.5 * np.log1p(np.exp(-2.0 * s)))


# ---------------------------------------------------------------------------
# Growth profiles
# ---------------------------------------------------------------------------


def _dyadic_js(J: int):
    js = []
    j = 1
    while j <= J:
        js.append(j)
        j *= 2
    if js[-1] != J:
        js.append(J)
    return js


def phi_growth_profile(phi, alphas, J: int, js=None) -> Report:
    """Rows (j, ||z^j||, ||z^j||/j^alpha ...) over a dyadic ladder.

    An unbounded ratio column rules out norm convergence of the
    order-alpha means on the space; the per-column verdict in the
    metadata calls a column "growing" when it increases strictly over
    the last four dyadic steps and ends above its starting value.
    """
    space = hb_from_phi(phi, J)
    js = _dyadic_js(J) if js is None else sorted(int(j) for j in js)
    alphas = list(alphas)
    cols = ["j", "monomial_norm"] + [f"ratio_alpha_{a:g}" for a in alphas]
    rep = Report(columns=cols)
    for j in js:
        norm = space.monomial_norm(j)
        rep.add_row(j, norm, *[norm / float(j) ** a for a in alphas])
    for a in alphas:
        col = rep.column(f"ratio_alpha_{a:g}")
        tail = col[-min(5, len(col)):]
        increasing = all(y > x for x, y in zip(tail, tail[1:]))
        verdict = "growing" if increasing and col[-1] > col[0] else "bounded"
        rep.metadata[f"verdict_alpha_{a:g}"] = verdict
    rep.metadata["verdict_rule"] = "growing = strictly increasing over last 4 dyadic steps and above start"
    return rep
