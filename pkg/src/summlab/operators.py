"""Summation operators acting diagonally on coefficient sequences.

Row n of a summability matrix sends a sequence f to the sequence with
coefficients a_nk f_hat(k); adjoints act the same way with conjugated
entries in the Hilbert-space convention.  Classical kernels and
error-versus-n convergence studies live here too.
"""

from __future__ import annotations

import numpy as np

from .report import Report
from .series import CoeffSeq, fourier, taylor
from .summatrix import SummMatrix

__all__ = [
    "apply_row",
    "adjoint_apply",
    "dirichlet_kernel",
    "fejer_kernel",
    "coefficient_pairing",
    "convergence_study",
]


def _diagonal_apply(m: SummMatrix, n: int, f: CoeffSeq, conjugate: bool) -> CoeffSeq:
    lo_r, w = m.row(n)
    hi_r = lo_r + len(w) - 1
    if f.lo < 0 and lo_r >= 0:
        raise ValueError("one-sided row applied to a two-sided input")
    lo = max(lo_r, f.lo)
    hi = min(hi_r, f.hi)
    if lo > hi:
        out = np.zeros(1, dtype=complex)
        return taylor(out) if f.kind == "taylor" else fourier(out, 0)
    ww = w[lo - lo_r:hi - lo_r + 1]
    if conjugate:
        ww = np.conj(ww)
    vals = ww * f.coeffs[lo - f.lo:hi - f.lo + 1]
    if f.kind == "taylor":
        if lo > 0:
            vals = np.concatenate([np.zeros(lo, dtype=complex), vals])
            lo = 0
        return taylor(vals)
    return fourier(vals, lo)


def apply_row(m: SummMatrix, n: int, f: CoeffSeq) -> CoeffSeq:
    """Output coefficients a_nk f_hat(k) on the common support."""
    return _diagonal_apply(m, n, f, conjugate=False)


def adjoint_apply(m: SummMatrix, n: int, g: CoeffSeq, hilbert: bool = False) -> CoeffSeq:
    """Adjoint action; entries are conjugated when hilbert=True."""
    return _diagonal_apply(m, n, g, conjugate=hilbert)


def dirichlet_kernel(n: int) -> CoeffSeq:
    """All-ones coefficients on |k| <= n."""
    if n < 0:
        raise ValueError("kernel order must be >= 0")
    return fourier(np.ones(2 * n + 1, dtype=complex), -n)


def fejer_kernel(n: int) -> CoeffSeq:
    """Triangular coefficients 1 - |k|/(n+1) on |k| <= n."""
    if n < 0:
        raise ValueError("kernel order must be >= 0")
    ks = np.arange(-n, n + 1)
    return fourier(1.0 - np.abs(ks) / (n + 1.0), -n)


def coefficient_pairing(f: CoeffSeq, g: CoeffSeq, weights=None) -> complex:
    """Bilinear pairing sum_k f_hat(k) g_hat(k) w_k on the common support.

    w_k = 1 is the circle pairing; w_k = 1/(k+1) the Bergman/Bloch one.
    """
    lo = max(f.lo, g.lo)
    hi = min(f.hi, g.hi)
    if lo > hi:
        return 0.0 + 0.0j
    ks = np.arange(lo, hi + 1)
    w = np.ones(len(ks)) if weights is None else np.asarray([weights(k) for k in ks])
    return complex(np.sum(f.coeffs[lo - f.lo:hi - f.lo + 1]
                          * g.coeffs[lo - g.lo:hi - g.lo + 1] * w))


def convergence_study(space, m: SummMatrix, f: CoeffSeq, ns, reference="input") -> Report:
    """Error table (n, ||S_n f - ref||) for the given norm evaluator.

    ``space`` is a (name, evaluate) pair, e.g. from summlab.spaces.
    ``reference="input"`` measures against f itself; ``reference=None``
    reports the plain norms ||S_n f||, the right object for divergence
    witnesses such as the Dirichlet kernels where no limit exists.

    No convergence verdict is asserted; the report carries the measured
    values, a fitted log-log slope, and a growth flag that fires when the
    value at n_max exceeds twice the value at n_max/4.
    """
    norm_name, norm_fn = space
    ns = sorted(int(n) for n in ns)
    alpha = getattr(m, "alpha", "")
    rep = Report(columns=["n", "error", "norm_name", "method", "alpha"])
    ref = f if reference == "input" else reference
    for n in ns:
        s = apply_row(m, n, f)
        if ref is None:
            err = norm_fn(s)
        else:
            lo = min(s.lo, ref.lo)
            hi = max(s.hi, ref.hi)
            diff = np.zeros(hi - lo + 1, dtype=complex)
            diff[s.lo - lo:s.hi - lo + 1] += s.coeffs
            diff[ref.lo - lo:ref.hi - lo + 1] -= ref.coeffs
            d = taylor(diff) if f.kind == "taylor" else fourier(diff, lo)
            err = norm_fn(d)
        rep.add_row(n, float(err), norm_name, m.kind, alpha)
    errs = np.asarray(rep.column("error"), dtype=float)
    pos = errs > 0
    slope = float("nan")
    if np.count_nonzero(pos) >= 2:
        slope = float(np.polyfit(np.log(np.asarray(ns, dtype=float)[pos]), np.log(errs[pos]), 1)[0])
    rep.metadata["norm_name"] = norm_name
    rep.metadata["method"] = m.kind
    rep.metadata["alpha"] = alpha
    rep.metadata["loglog_slope"] = slope
    quarter = [e for n, e in zip(ns, errs) if n <= ns[-1] // 4]
    growth = bool(quarter and errs[-1] > 2.0 * quarter[-1])
    rep.metadata["growth_flagged"] = growth
    rep.metadata["growth_rule"] = "value(n_max) > 2*value(n_max/4)"
    return rep
