"""Finite reconstructions of the shift-based counterexamples.

Each example pins down a sequence of operators T_n whose designated gap
witness stays at exactly 1 while every fixed weak-side probe decays to
exactly 0; the truncation dimension is chosen so that no truncation
error enters and the reported values are exact.

Report semantics (columns example,n,norm_gap,max_pairing):

- shift_l2:   T_n = I + S^n on l2.  gap = ||T_n e_0 - e_0||_2; pairings
  <T_n x - x, y> over finitely supported probe pairs.
- rankone_l2: T_n = sum_{j<=n} e_j x e_j + e_n x e_0.  Same columns.
- proj_l1:    T_n = projection onto the first n coordinates of l1; the
  witness lives on the dual side: gap = ||T_n* phi0 - phi0||_inf with
  phi0 = (1,1,1,...); pairing column = max c0-probe error ||T_n* phi - phi||_inf.
- mixed_l1:   T_n = P_2n (S^n + I) on l1.  gap = |<T_n e_first - e_first, phi0>|
  (the weak* witness, identically 1); pairing column = max c0-probe error,
  which obeys ||T_n* phi - phi||_inf <= ||S*^n phi||_inf + ||P_2n phi - phi||_inf.
"""

from __future__ import annotations

import numpy as np

from .report import Report

__all__ = ["remark_example", "EXAMPLES"]

EXAMPLES = ("shift_l2", "rankone_l2", "proj_l1", "mixed_l1")


def _one_hot(i: int, dim: int) -> np.ndarray:
    v = np.zeros(dim)
    v[i] = 1.0
    return v


def _default_l2_probes(dim: int):
    x1 = _one_hot(0, dim)
    y1 = _one_hot(0, dim)
    x2 = _one_hot(0, dim) + 0.5 * _one_hot(1, dim)
    y2 = _one_hot(2, dim) - 0.25 * _one_hot(5, dim)
    return [(x1, y1), (x2, y2)]


def _default_c0_probes(dim: int):
    geo = 0.5 ** np.arange(dim)
    spike = _one_hot(7, dim)
    return [geo, spike]


def _suffix_max(v: np.ndarray) -> np.ndarray:
    return np.maximum.accumulate(np.abs(v)[::-1])[::-1]


def remark_example(which: str, n_max: int, probes=None, dim=None) -> Report:
    """Gap/pairing table for n = 1..n_max.  dim defaults to 4*n_max."""
    if which not in EXAMPLES:
        raise ValueError(f"unknown example {which!r}; choose from {EXAMPLES}")
    dim = 4 * n_max if dim is None else int(dim)
    if n_max >= dim // 2:
        raise ValueError("n_max too large for the truncation dimension")
    ns = np.arange(1, n_max + 1)

    if which in ("shift_l2", "rankone_l2"):
        pairs = _default_l2_probes(dim) if probes is None else probes
        x0 = _one_hot(0, dim)
        if which == "shift_l2":
            # ||S^n x||^2 = sum_{j < dim-n} |x_j|^2 (the shift is an index map;
            # only mass pushed past the truncation is lost).
            prefix = np.concatenate([[0.0], np.cumsum(np.abs(x0) ** 2)])
            gaps = np.sqrt(prefix[dim - ns])
            pair_cols = [_shift_pairings(x, y, ns) for x, y in pairs]
        else:
            # (T_n - I) x = -x restricted beyond n, plus x_0 e_n.
            suffix = np.concatenate([np.cumsum(np.abs(x0[::-1]) ** 2)[::-1], [0.0]])
            gaps = np.sqrt(np.abs(x0[0]) ** 2 + suffix[ns + 1])
            pair_cols = []
            for x, y in pairs:
                sdot = np.concatenate([np.cumsum((x * np.conj(y))[::-1])[::-1], [0.0]])
                pair_cols.append(np.abs(-sdot[ns + 1] + x[0] * np.conj(y[ns])))
        pair_max = np.max(pair_cols, axis=0)
    elif which == "proj_l1":
        c0 = _default_c0_probes(dim) if probes is None else probes
        phi0_gap = np.ones(len(ns))  # sup_{i >= n} 1, exact while n < dim
        sufs = [_suffix_max(phi) for phi in c0]
        gaps = phi0_gap
        pair_max = np.array([max(s[n] for s in sufs) for n in ns])
    else:  # mixed_l1
        c0 = _default_c0_probes(dim) if probes is None else probes
        # T_n e_first - e_first = e_n, so the phi0 pairing is phi0[n] = 1.
        gaps = np.ones(len(ns))
        # ||T_n* phi - phi||_inf = sup_{j >= n} |phi_j| by the index maps.
        sufs = [_suffix_max(phi) for phi in c0]
        pair_max = np.array([max(s[n] for s in sufs) for n in ns])

    rep = Report(columns=["example", "n", "norm_gap", "max_pairing"])
    for n, g, p in zip(ns, gaps, pair_max):
        rep.add_row(which, int(n), float(g), float(p))
    rep.metadata["example"] = which
    rep.metadata["dim"] = dim
    rep.metadata["n_max"] = n_max
    flagged = bool(pair_max[-1] < 1e-6 and gaps[-1] > 0.5)
    rep.metadata["weak_decay_and_norm_gap"] = flagged
    rep.metadata["flag_rule"] = "pairings below 1e-6 at n_max while the gap exceeds 0.5"
    return rep


def _shift_pairings(x: np.ndarray, y: np.ndarray, ns: np.ndarray) -> np.ndarray:
    """|<S^n x, y>| = |sum_j x_j conj(y_{j+n})| for every n, exact.

    Probes are finitely supported, so the sum runs over the support of x
    and vanishes identically once n clears both supports.
    """
    sx = np.flatnonzero(x)
    out = np.zeros(len(ns))
    dim = len(y)
    for idx, n in enumerate(ns):
        js = sx[sx + n < dim]
        if len(js):
            out[idx] = abs(np.dot(x[js], np.conj(y[js + n])))
    return out
