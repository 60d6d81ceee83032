"""Summability matrices, their explicit left inverses, and limitation diagnostics.

A matrix here is a row generator: ``row(n)`` returns ``(lo, weights)`` with
``weights[i]`` the entry at column ``lo + i``.  Rows are materialized lazily;
the concrete kinds are the order-alpha Cesaro matrices, the Wiener-algebra
matrices a_nk = g_hat(n-k)/gamma_n with g = 1/f, and dense user-supplied rows.
"""

from __future__ import annotations

import numpy as np

from .series import CoeffSeq, binomial, series_recip

__all__ = [
    "SummMatrix",
    "CesaroMatrix",
    "WienerMatrix",
    "DenseMatrix",
    "identity_matrix",
    "InverseMatrix",
    "cesaro_entry",
    "cesaro_row",
    "wiener_matrix",
    "wiener_left_inverse",
    "left_inverse_residual",
    "limitation_ratio",
]


class SummMatrix:
    """Base row generator; concrete kinds override ``row``."""

    kind = "abstract"
    two_sided = False

    def row(self, n: int):
        raise NotImplementedError

    def dense(self, n_max: int, k_max: int) -> np.ndarray:
        """Rows 0..n_max over columns 0..k_max as a dense array (one-sided part)."""
        out = np.zeros((n_max + 1, k_max + 1), dtype=complex)
        for n in range(n_max + 1):
            lo, w = self.row(n)
            for i, a in enumerate(w):
                k = lo + i
                if 0 <= k <= k_max:
                    out[n, k] = a
        return out


def _cesaro_weights(n: int, alpha: float) -> np.ndarray:
    """Entries a_nk for k = 0..n via the telescoping product
    C(n,k)/C(n+alpha,k) = prod_{j<k} (n-j)/(n+alpha-j).

    The cumulative product keeps every entry within a few hundred ulp,
    which the Fejer identity checks rely on; a log-gamma quotient is an
    order of magnitude noisier at n ~ 500.
    """
    if n == 0:
        return np.ones(1)
    j = np.arange(n, dtype=float)
    ratios = (n - j) / (n + alpha - j)
    out = np.ones(n + 1)
    np.cumprod(ratios, out=out[1:])
    return out


class CesaroMatrix(SummMatrix):
    """Cesaro matrix of order alpha >= 0; optionally with symmetric two-sided rows."""

    kind = "cesaro"

    def __init__(self, alpha: float, two_sided: bool = False):
        if alpha < 0:
            raise ValueError("cesaro order must satisfy alpha >= 0")
        self.alpha = float(alpha)
        self.two_sided = bool(two_sided)

    def row(self, n: int):
        if n < 0:
            raise ValueError("row index must be >= 0")
        w = _cesaro_weights(n, self.alpha)
        if not self.two_sided:
            return 0, w.astype(complex)
        full = np.concatenate([w[:0:-1], w]).astype(complex)
        return -n, full


class WienerMatrix(SummMatrix):
    """Lower-triangular matrix a_nk = (1/f)^(n-k) / gamma_n for rows 0..n_max."""

    kind = "wiener"

    def __init__(self, f: CoeffSeq, gamma, n_max: int):
        if f.kind != "taylor":
            raise ValueError("wiener matrix needs a taylor symbol f")
        if f.coeff(0) == 0:
            raise ValueError("non-invertible series (f(0) = 0)")
        g = np.asarray([gamma(n) for n in range(n_max + 1)]
                       if callable(gamma) else gamma[:n_max + 1], dtype=float)
        if len(g) != n_max + 1:
            raise ValueError("gamma sequence shorter than requested rows")
        if g[0] <= 0 or np.any(np.diff(g) < 0):
            raise ValueError("gamma must be positive and increasing")
        self.f = f
        self.gamma = g
        self.n_max = n_max
        self._recip = series_recip(f, n_max).coeffs

    def row(self, n: int):
        if not 0 <= n <= self.n_max:
            raise ValueError(f"row {n} outside materialized range 0..{self.n_max}")
        return 0, self._recip[n::-1] / self.gamma[n]


class DenseMatrix(SummMatrix):
    """Explicit rows, each a (lo, weights) pair or a plain one-sided array."""

    kind = "dense"

    def __init__(self, rows, two_sided: bool = False):
        self._rows = []
        for r in rows:
            if isinstance(r, tuple):
                lo, w = r
            else:
                lo, w = 0, r
            self._rows.append((int(lo), np.asarray(w, dtype=complex)))
        self.two_sided = two_sided

    def row(self, n: int):
        return self._rows[n]


def identity_matrix(n_max: int) -> DenseMatrix:
    """Summation matrix with a_nk = delta_nk (each row reproduces one mode)."""
    return DenseMatrix([(n, np.ones(1, dtype=complex)) for n in range(n_max + 1)])


class InverseMatrix:
    """Lower-triangular left inverse rows b_j with absolute row sums B_j."""

    def __init__(self, rows):
        self.rows = [np.asarray(r, dtype=complex) for r in rows]
        for j, r in enumerate(self.rows):
            if len(r) != j + 1:
                raise ValueError("row j must carry entries for n = 0..j")
        self.row_abs_sums = np.array([np.sum(np.abs(r)) for r in self.rows])

    def __len__(self) -> int:
        return len(self.rows)

    def B(self, j: int) -> float:
        return float(self.row_abs_sums[j])


def cesaro_entry(n: int, k: int, alpha: float) -> float:
    """Entry C(n,k)/C(n+alpha,k); exactly 1 when k = 0 or alpha = 0."""
    if alpha < 0:
        raise ValueError("cesaro order must satisfy alpha >= 0")
    if k < 0 or k > n:
        raise ValueError("entry outside the lower triangle (need 0 <= k <= n)")
    j = np.arange(k, dtype=float)
    return float(np.prod((n - j) / (n + alpha - j)))


def cesaro_row(n: int, alpha: float, two_sided: bool = False):
    """Row n as (lo, weights); symmetric in k <-> -k when two_sided."""
    return CesaroMatrix(alpha, two_sided=two_sided).row(n)


def wiener_matrix(f: CoeffSeq, gamma, n_max: int) -> WienerMatrix:
    return WienerMatrix(f, gamma, n_max)


def wiener_left_inverse(f: CoeffSeq, gamma, j_max: int) -> InverseMatrix:
    """Rows b_jn = gamma_n f_hat(j-n), 0 <= n <= j, for j = 0..j_max.

    Satisfies gamma_j |f_hat(0)| <= B_j <= gamma_j sum_l |f_hat(l)|.
    """
    if f.kind != "taylor":
        raise ValueError("wiener inverse needs a taylor symbol f")
    if f.coeff(0) == 0:
        raise ValueError("non-invertible series (f(0) = 0)")
    g = np.asarray([gamma(n) for n in range(j_max + 1)]
                   if callable(gamma) else gamma[:j_max + 1], dtype=float)
    if g[0] <= 0 or np.any(np.diff(g) < 0):
        raise ValueError("gamma must be positive and increasing")
    fc = np.zeros(j_max + 1, dtype=complex)
    m = min(len(f.coeffs), j_max + 1)
    fc[:m] = f.coeffs[:m]
    rows = [g[:j + 1] * fc[j::-1] for j in range(j_max + 1)]
    return InverseMatrix(rows)


def left_inverse_residual(A: SummMatrix, B: InverseMatrix, J: int, K: int) -> float:
    """max over j <= J, k <= K of |sum_n b_jn a_nk - delta_jk|."""
    if len(B) <= J:
        raise ValueError("inverse has too few rows")
    a = A.dense(J, K)
    b = np.zeros((J + 1, J + 1), dtype=complex)
    for j in range(J + 1):
        b[j, :j + 1] = B.rows[j]
    prod = b @ a
    d = min(J, K) + 1
    prod[np.arange(d), np.arange(d)] -= 1.0
    return float(np.max(np.abs(prod)))


def limitation_ratio(p_norms, B: InverseMatrix, J: int) -> np.ndarray:
    """Ratios r_j = ||P_j|| / B_j for j <= J.

    A convergent method forces sup_j r_j < infinity, so an unbounded
    column rules the method out on the space that supplied the norms.
    """
    p = np.asarray([p_norms(j) for j in range(J + 1)]
                   if callable(p_norms) else p_norms[:J + 1], dtype=float)
    if np.any(p <= 0):
        raise ValueError("projection norms must be positive")
    if len(B) <= J:
        raise ValueError("inverse has too few rows")
    return p / B.row_abs_sums[:J + 1]
