"""Command-line front end wiring the library into named experiments.

Each subcommand emits one deterministic report (CSV canonical, JSON
mirror) and, on request, a rendered figure next to the table.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

import numpy as np

from . import counterexamples, functions, hb, operators, spaces, summatrix
from .report import Report
from .series import binomial, one_minus_z_power, taylor

__all__ = ["main", "build_parser"]


def _dyadic(start: int, stop: int):
    ns = []
    n = start
    while n <= stop:
        ns.append(n)
        n *= 2
    if ns and ns[-1] != stop:
        ns.append(stop)
    return ns


def _parse_alphas(text: str):
    try:
        return [float(a) for a in text.split(",") if a != ""]
    except ValueError:
        raise SystemExit(f"bad --alpha list: {text!r}")


def _read_coeff_file(path: str) -> np.ndarray:
    """One coefficient per line as `re im`; the line number is the index."""
    vals = []
    with open(path) as fh:
        for ln, line in enumerate(fh):
            parts = line.split()
            if not parts:
                continue
            if len(parts) != 2:
                raise SystemExit(f"{path}:{ln + 1}: expected `re im`, got {line.strip()!r}")
            vals.append(complex(float(parts[0]), float(parts[1])))
    if not vals:
        raise SystemExit(f"{path}: empty coefficient file")
    return np.asarray(vals, dtype=complex)


def _grid_for_band(requested_log2: int, max_abs_index: int) -> int:
    need = int(np.ceil(np.log2(max(2 * max_abs_index + 2, 8)))) + 1
    return max(requested_log2, need)


def _space_norm(name: str, grid):
    table = {
        "sup": spaces.sup_space(grid),
        "l1": spaces.l1_space(grid),
        "h1": spaces.hardy_space(1, grid),
        "h2": spaces.hardy_space(2, grid),
        "a1": spaces.bergman_space(1, grid),
        "a2": spaces.bergman_space(2, grid),
        "bloch": spaces.bloch_space(grid),
    }
    if name not in table:
        raise SystemExit(f"unknown space {name!r}; choose from {sorted(table)}")
    return table[name]


def _builtin_function(name: str, n_max: int, log2: int, seed: int):
    if name == "abs-theta":
        return functions.abs_theta(2 * n_max, log2)
    if name == "sawtooth":
        return functions.sawtooth(2 * n_max)
    if name == "all-ones":
        return functions.all_ones(2 * n_max)
    if name == "random":
        return functions.random_poly(2 * n_max, seed, scale=1.0 / np.sqrt(n_max))
    raise SystemExit(f"unknown builtin function {name!r}")


def cmd_lebesgue(args) -> Report:
    log2 = _grid_for_band(args.grid_log2, args.n_max)
    grid = spaces.CircleGrid(log2)
    rep = Report(columns=["n", "dirichlet_l1", "fejer_l1"])
    for n in [0] + _dyadic(1, args.n_max):
        rep.add_row(n,
                    spaces.l1_norm(operators.dirichlet_kernel(n), grid),
                    spaces.l1_norm(operators.fejer_kernel(n), grid))
    rep.metadata["effective_grid_log2"] = log2
    return rep


def cmd_cesaro(args) -> Report:
    log2 = _grid_for_band(args.grid_log2, 2 * args.n_max)
    grid = spaces.CircleGrid(log2)
    space = _space_norm(args.space, grid)
    f = _builtin_function(args.function, args.n_max, log2, args.seed)
    ns = _dyadic(min(16, args.n_max), args.n_max)
    reference = None if args.function == "all-ones" else "input"
    out = None
    for alpha in _parse_alphas(args.alpha):
        m = summatrix.CesaroMatrix(alpha, two_sided=(f.lo < 0))
        rep = operators.convergence_study(space, m, f, ns, reference=reference)
        if out is None:
            out = rep
        else:
            out.rows.extend(rep.rows)
    out.metadata["function"] = args.function
    out.metadata["reference"] = "input" if reference == "input" else "none (norm study)"
    out.metadata["effective_grid_log2"] = log2
    return out


def _wiener_pieces(args):
    if args.coeff_file:
        f = taylor(_read_coeff_file(args.coeff_file))
        gamma = [float(n + 1) for n in range(args.j_max + 1)]
        desc = f"file:{os.path.basename(args.coeff_file)} gamma=n+1"
    else:
        alphas = _parse_alphas(args.alpha)
        if len(alphas) != 1:
            raise SystemExit("wiener/limitation take exactly one --alpha")
        a = alphas[0]
        f = one_minus_z_power(a + 1.0, args.j_max)
        gamma = [binomial(n + a, a) for n in range(args.j_max + 1)]
        desc = f"(1-z)^(alpha+1) alpha={a:g} gamma=C(n+alpha,alpha)"
    return f, gamma, desc


def cmd_wiener(args) -> Report:
    J = args.j_max
    f, gamma, desc = _wiener_pieces(args)
    A = summatrix.wiener_matrix(f, gamma, J)
    B = summatrix.wiener_left_inverse(f, gamma, J)
    a = A.dense(J, J)
    bmat = np.zeros((J + 1, J + 1), dtype=complex)
    for j in range(J + 1):
        bmat[j, :j + 1] = B.rows[j]
    resid = bmat @ a
    resid[np.arange(J + 1), np.arange(J + 1)] -= 1.0
    rep = Report(columns=["j", "gamma_j", "B_j", "B_over_gamma", "row_residual"])
    for j in range(J + 1):
        rep.add_row(j, float(gamma[j]), B.B(j), B.B(j) / float(gamma[j]),
                    float(np.max(np.abs(resid[j]))))
    rep.metadata["symbol"] = desc
    rep.metadata["max_residual"] = float(np.max(np.abs(resid)))
    return rep


def cmd_limitation(args) -> Report:
    J = args.j_max
    f, gamma, desc = _wiener_pieces(args)
    B = summatrix.wiener_left_inverse(f, gamma, J)
    grid = spaces.CircleGrid(args.grid_log2)
    sid = args.space
    if sid == "hb":
        ladder = hb.hb_from_phi(hb.phi_geometric, J)
        p = np.array([ladder.monomial_norm(j) for j in range(J + 1)])
        p_desc = "||z^j|| ladder of the z/(1-z) symbol"
    elif sid in ("ct", "h1", "a1"):
        p = np.array([spaces.projection_norm(sid, k, grid) for k in range(J + 1)])
        p_desc = f"projection norms in {sid}"
    else:
        raise SystemExit("limitation spaces: ct, h1, a1, hb")
    ratios = summatrix.limitation_ratio(p, B, J)
    rep = Report(columns=["j", "p_norm", "B_j", "ratio"])
    for j in range(J + 1):
        rep.add_row(j, float(p[j]), B.B(j), float(ratios[j]))
    rep.metadata["symbol"] = desc
    rep.metadata["p_norms"] = p_desc
    rep.metadata["sup_ratio"] = float(np.max(ratios))
    return rep


def cmd_hb(args) -> Report:
    alphas = _parse_alphas(args.alpha)
    if args.phi == "geom":
        phi = hb.phi_geometric
    elif args.phi == "expsqrt":
        phi = hb.phi_expsqrt
    elif args.coeff_file:
        coeffs = _read_coeff_file(args.coeff_file)
        phi = taylor(coeffs)
    else:
        raise SystemExit("hb needs --phi geom|expsqrt or --coeff-file")
    rep = hb.phi_growth_profile(phi, alphas, args.j_max)
    rep.metadata["phi"] = args.phi if not args.coeff_file else f"file:{os.path.basename(args.coeff_file)}"
    return rep


def cmd_counterexample(args) -> Report:
    return counterexamples.remark_example(args.which, args.n_max)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="summlab",
                                description="Summability-method experiments on function spaces")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, n_max_default=1024):
        sp.add_argument("--alpha", default="1", help="comma-separated Cesaro orders")
        sp.add_argument("--n-max", type=int, default=n_max_default)
        sp.add_argument("--grid-log2", type=int, default=12)
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", default=None, help="output path (stdout when omitted)")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--plot", action="store_true",
                        help="render a PNG figure next to --out")

    sp = sub.add_parser("lebesgue", help="Dirichlet-kernel L1 growth vs Fejer")
    common(sp, n_max_default=4096)
    sp.set_defaults(fn=cmd_lebesgue)

    sp = sub.add_parser("cesaro", help="error-vs-n study of the order-alpha means")
    common(sp, n_max_default=2048)
    sp.add_argument("--space", default="sup")
    sp.add_argument("--function", default="abs-theta",
                    choices=("abs-theta", "sawtooth", "all-ones", "random"))
    sp.set_defaults(fn=cmd_cesaro)

    sp = sub.add_parser("wiener", help="matrix/inverse/residual/B_j table")
    common(sp)
    sp.add_argument("--j-max", type=int, default=200)
    sp.add_argument("--coeff-file", default=None)
    sp.set_defaults(fn=cmd_wiener)

    sp = sub.add_parser("limitation", help="projection-norm to row-sum ratios")
    common(sp)
    sp.add_argument("--j-max", type=int, default=200)
    sp.add_argument("--space", default="ct")
    sp.add_argument("--coeff-file", default=None)
    sp.set_defaults(fn=cmd_limitation)

    sp = sub.add_parser("hb", help="monomial-norm growth profile of a symbol")
    common(sp)
    sp.add_argument("--phi", default="geom", choices=("geom", "expsqrt", "custom"))
    sp.add_argument("--j-max", type=int, default=8192)
    sp.add_argument("--coeff-file", default=None)
    sp.set_defaults(fn=cmd_hb)

    sp = sub.add_parser("counterexample", help="weak-vs-norm separation tables")
    common(sp, n_max_default=256)
    sp.add_argument("--which", default="shift_l2", choices=counterexamples.EXAMPLES)
    sp.set_defaults(fn=cmd_counterexample)

    return p


def _echo_config(rep: Report, args):
    meta = {"command": args.command}
    for key in ("alpha", "n_max", "grid_log2", "format", "seed", "space",
                "function", "j_max", "phi", "which", "coeff_file"):
        if hasattr(args, key):
            val = getattr(args, key)
            if val is not None:
                meta[key] = val
    meta.update(rep.metadata)
    rep.metadata = meta


def _write_atomic(text: str, path: str):
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".summlab-")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.chmod(tmp, 0o644)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if not 8 <= args.grid_log2 <= 20:
        raise SystemExit("--grid-log2 must lie in [8, 20]")
    if args.n_max < 1:
        raise SystemExit("--n-max must be >= 1")
    if args.plot and not args.out:
        raise SystemExit("--plot needs --out to name the figure")
    rep = args.fn(args)
    _echo_config(rep, args)
    text = rep.to_csv() if args.format == "csv" else rep.to_json()
    if args.out:
        _write_atomic(text, args.out)
        if args.plot:
            from .plotting import render_report
            stem, _ = os.path.splitext(args.out)
            render_report(rep, stem + ".png", title=args.command)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
