"""Built-in coefficient sequences used by the experiments and the CLI."""

from __future__ import annotations

import numpy as np

from .series import CoeffSeq, fourier, taylor

__all__ = ["abs_theta", "sawtooth", "all_ones", "random_poly"]


def abs_theta(K: int, log2_size: int = 14) -> CoeffSeq:
    """Fourier coefficients of theta -> |theta| on (-pi, pi], |k| <= K.

    Computed numerically from grid samples; the grid must oversample the
    requested band at least twofold.
    """
    n = 1 << log2_size
    if 2 * K + 1 > n // 2:
        raise ValueError("raise log2_size; the band does not fit the sample grid")
    theta = 2.0 * np.pi * np.arange(n) / n
    theta = np.where(theta > np.pi, theta - 2.0 * np.pi, theta)
    chat = np.fft.fft(np.abs(theta)) / n
    c = np.concatenate([chat[-K:], chat[:K + 1]])
    return fourier(np.roll(c, 0), -K)


def sawtooth(K: int) -> CoeffSeq:
    """Coefficients of theta -> theta on (-pi, pi): c_k = i(-1)^k / k.

    Slowly decaying; partial sums exhibit a persistent Gibbs overshoot.
    """
    ks = np.arange(-K, K + 1)
    c = np.zeros(2 * K + 1, dtype=complex)
    nz = ks != 0
    c[nz] = 1j * (-1.0) ** ks[nz] / ks[nz]
    return fourier(c, -K)


def all_ones(K: int) -> CoeffSeq:
    """All-ones coefficients on |k| <= K: the point-mass spectrum."""
    return fourier(np.ones(2 * K + 1, dtype=complex), -K)


def random_poly(deg: int, seed: int, scale: float = 1.0) -> CoeffSeq:
    """Complex Gaussian taylor polynomial, reproducible from the seed."""
    rng = np.random.default_rng(seed)
    c = rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)
    return taylor(scale * c)
