"""Numerical norms on the circle and the disk.

All norms are evaluated on finite-support sequences, where sampling at
r = 1 is exact; the grid values are lower bounds of the true norms that
converge as the grid is refined.  The disk integrals use the Fubini
reduction to circle integrals against the radial measure 2r dr.
"""

from __future__ import annotations

from collections import namedtuple

import numpy as np

from .series import CoeffSeq, derivative

__all__ = [
    "CircleGrid",
    "sup_norm",
    "l1_norm",
    "lp_norm",
    "hardy_norm",
    "bergman_norm",
    "bergman_norm_tensor",
    "bloch_norm",
    "projection_norm",
    "SpaceNorm",
    "sup_space",
    "l1_space",
    "hardy_space",
    "bergman_space",
    "bloch_space",
]

SpaceNorm = namedtuple("SpaceNorm", ["name", "evaluate"])


class CircleGrid:
    """Uniform samples of the unit circle plus a radial quadrature rule.

    Parameters
    ----------
    log2_size : int
        Angular node count is 2**log2_size; nodes theta_i = 2 pi i / 2^m.
    radial_nodes : int
        Gauss-Legendre node count on [0, 1] for disk integrals against
        the normalized measure 2r dr (so the weights sum to 1).
    """

    def __init__(self, log2_size: int = 12, radial_nodes: int = 64):
        if not 3 <= log2_size <= 24:
            raise ValueError("log2_size out of supported range")
        self.log2_size = int(log2_size)
        self.size = 1 << self.log2_size
        self.theta = 2.0 * np.pi * np.arange(self.size) / self.size
        x, w = np.polynomial.legendre.leggauss(radial_nodes)
        self.radial_r = 0.5 * (x + 1.0)
        self.radial_w = 0.5 * w
        mass = float(np.sum(self.radial_w * 2.0 * self.radial_r))
        if abs(mass - 1.0) > 1e-14:
            raise AssertionError("radial rule fails to integrate 2r dr to 1")

    def values(self, f: CoeffSeq, radius: float = 1.0) -> np.ndarray:
        """f(radius * e^{i theta_i}) at every node, via one FFT.

        Exact for finite support; the support must fit in the grid
        (no aliasing is tolerated).
        """
        if len(f.coeffs) > self.size:
            raise ValueError("grid too coarse for this sequence; raise log2_size")
        if radius < 0.0 or radius > 1.0:
            raise ValueError("radius must lie in [0, 1]")
        buf = np.zeros(self.size, dtype=complex)
        ks = f.indices()
        scale = f.coeffs if radius == 1.0 else f.coeffs * radius ** np.abs(ks)
        np.add.at(buf, ks % self.size, scale)
        return np.fft.ifft(buf) * self.size


def sup_norm(f: CoeffSeq, g: CircleGrid) -> float:
    """Max of |f| over the angular nodes at r = 1."""
    return float(np.max(np.abs(g.values(f))))


def l1_norm(f: CoeffSeq, g: CircleGrid) -> float:
    """Mean of |f| over the angular nodes (quadrature for dt/2pi)."""
    return float(np.mean(np.abs(g.values(f))))


def lp_norm(f: CoeffSeq, g: CircleGrid, p: float) -> float:
    """(mean |f|^p)^{1/p} over the angular nodes."""
    if p < 1:
        raise ValueError("p >= 1 required")
    return float(np.mean(np.abs(g.values(f)) ** p) ** (1.0 / p))


def hardy_norm(f: CoeffSeq, p: float, g: CircleGrid) -> float:
    """Hardy-space norm of a polynomial.

    The sup over radii is attained at r = 1 for these finite sums, so this
    is the circle L^p norm; p = 2 bypasses the grid with the coefficient
    formula (sum |f_hat(k)|^2)^{1/2}, exact by Parseval.
    """
    if p < 1:
        raise ValueError("p >= 1 required")
    if f.kind != "taylor":
        raise ValueError("hardy_norm expects a taylor sequence")
    if p == 2:
        return float(np.sqrt(np.sum(np.abs(f.coeffs) ** 2)))
    return lp_norm(f, g, p)


def bergman_norm(f: CoeffSeq, p: float, g: CircleGrid) -> float:
    """Area-measure L^p norm via the radial reduction.

    ||f||^p over the disk equals the integral of the circle norms
    ||f_r||^p against 2r dr; the radial rule is exact for p in {2, 4}
    once the rule resolves degree p*deg(f)+1.
    """
    if p < 1:
        raise ValueError("p >= 1 required")
    if f.kind != "taylor":
        raise ValueError("bergman_norm expects a taylor sequence")
    acc = 0.0
    for r, w in zip(g.radial_r, g.radial_w):
        acc += w * 2.0 * r * float(np.mean(np.abs(g.values(f, radius=r)) ** p))
    return float(acc ** (1.0 / p))


def bergman_norm_tensor(f: CoeffSeq, p: float, n_radial: int = 2048, n_angular: int = 4096) -> float:
    """Independent disk-integral oracle on a plain polar tensor grid.

    Composite Simpson radially, trapezoid angularly, Horner evaluation;
    shares no code path with bergman_norm.
    """
    if n_radial % 2 != 0:
        raise ValueError("Simpson rule needs an even interval count")
    rs = np.linspace(0.0, 1.0, n_radial + 1)
    th = 2.0 * np.pi * np.arange(n_angular) / n_angular
    zs = np.exp(1j * th)
    c = f.coeffs[::-1]
    ring_means = np.empty(len(rs))
    for i, r in enumerate(rs):
        vals = np.polyval(c, r * zs)
        ring_means[i] = np.mean(np.abs(vals) ** p)
    integrand = ring_means * 2.0 * rs
    sw = np.ones(n_radial + 1)
    sw[1:-1:2] = 4.0
    sw[2:-1:2] = 2.0
    acc = np.sum(sw * integrand) / (3.0 * n_radial)
    return float(acc ** (1.0 / p))


def bloch_norm(f: CoeffSeq, g: CircleGrid, refine_tol: float = 1e-6) -> float:
    """|f(0)| + sup over the disk of (1 - r^2) |f'(z)|.

    The sup is located on a radial sweep (max over grid angles at each
    radius) and refined around the best radius until the value moves by
    less than refine_tol.  Reported value is a lower bound of the sup.
    """
    if f.kind != "taylor":
        raise ValueError("bloch_norm expects a taylor sequence")
    df = derivative(f)

    def height(r: float) -> float:
        return (1.0 - r * r) * float(np.max(np.abs(g.values(df, radius=r))))

    lo, hi = 0.0, 1.0
    best = 0.0
    for depth in range(40):
        rs = np.linspace(lo, hi, 33)
        hs = np.array([height(r) for r in rs])
        i = int(np.argmax(hs))
        gain = float(hs[i]) - best
        best = max(best, float(hs[i]))
        lo = rs[max(i - 1, 0)]
        hi = rs[min(i + 1, len(rs) - 1)]
        if depth > 0 and gain < refine_tol:
            break
    return float(abs(f.coeff(0)) + best)


def projection_norm(space_id: str, k: int, g: CircleGrid, hb=None) -> float:
    """Norm of the rank-one mode projection, ||e_k|| ||psi_k|| / |<e_k, psi_k>|.

    Assembled from the space's own evaluators and pairing weights:

    - "ct":  sup and L1 factors with the circle pairing (all three are 1).
    - "h1":  ||z^k||_{H^1} with the bounded dual ladder treated as the
      constant it is asserted to be; the value is the H^1 factor alone.
    - "a1":  Bergman-1 and Bloch factors over the weight 1/(k+1).
    - "hb":  monomial times kernel ladder from the supplied HbSpace.
    """
    from .series import taylor as _taylor

    if k < 0:
        raise ValueError("mode index must be >= 0")
    ek = _taylor(np.concatenate([np.zeros(k), [1.0]]))
    sid = space_id.lower()
    if sid in ("ct", "c(t)"):
        return sup_norm(ek, g) * l1_norm(ek, g) / 1.0
    if sid in ("h1", "h1/bmoa"):
        return l1_norm(ek, g) / 1.0
    if sid in ("a1", "a1/bloch"):
        pairing = 1.0 / (k + 1.0)
        return bergman_norm(ek, 1, g) * bloch_norm(ek, g) / pairing
    if sid in ("hb", "h(b)"):
        if hb is None:
            raise ValueError("hb ladder required for the H(b) projection norms")
        return hb.monomial_norm(k) * hb.kernel0_norm(k) / 1.0
    raise ValueError(f"unknown space {space_id!r}")


def sup_space(g: CircleGrid) -> SpaceNorm:
    return SpaceNorm("sup", lambda f: sup_norm(f, g))


def l1_space(g: CircleGrid) -> SpaceNorm:
    return SpaceNorm("l1", lambda f: l1_norm(f, g))


def hardy_space(p: float, g: CircleGrid) -> SpaceNorm:
    return SpaceNorm(f"hardy{p:g}", lambda f: hardy_norm(f, p, g))


def bergman_space(p: float, g: CircleGrid) -> SpaceNorm:
    return SpaceNorm(f"bergman{p:g}", lambda f: bergman_norm(f, p, g))


def bloch_space(g: CircleGrid) -> SpaceNorm:
    return SpaceNorm("bloch", lambda f: bloch_norm(f, g))
