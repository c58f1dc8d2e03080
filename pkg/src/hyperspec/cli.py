"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import csv
import datetime as _dt
import io
import json
import sys
from pathlib import Path

from . import limits, spectra
from .eigen import snap_zero
from .errors import CapacityError, ConvergenceError, InputError, VerificationError
from .graph import max_degree, min_degree, read_graph
from .hypergraph import format_hypergraph
from .power import build_power
from .tensor import Kind

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3

# tests may set this to a callable (lam, x) -> (lam, x) to corrupt eigenpairs in `verify`
EIGENPAIR_HOOK = None


def _fmt(x: float) -> str:
    return f"{snap_zero(x):.12g}"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _json(payload: dict, args) -> str:
    if args.timestamp:
        payload["generated_at"] = _dt.datetime.now(_dt.timezone.utc).isoformat()
    return json.dumps(payload, indent=2) + "\n"


def _check_even_k(k: int) -> None:
    if k < 4 or k % 2:
        raise InputError(f"--k must be even and at least 4, got {k}")


def cmd_build(args) -> int:
    G = read_graph(args.graph)
    H, pm = build_power(G, args.k, args.s)
    Path(args.out).write_text(format_hypergraph(H))
    Path(args.out + ".json").write_text(_json(pm.to_json(), args))
    return EXIT_OK


def cmd_hspectrum(args) -> int:
    G = read_graph(args.graph)
    _check_even_k(args.k)
    spectrum = spectra.h_spectrum(G, args.k, args.operator, cap=args.cap, tol=args.tol)
    if args.format == "json":
        text = _json(spectrum.to_json(), args)
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["value", "witness"])
        for value, U in zip(spectrum.values, spectrum.provenance):
            w.writerow([_fmt(value), " ".join(map(str, U))])
        text = buf.getvalue()
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    G = read_graph(args.graph)
    _check_even_k(args.k)
    lines = []
    ok = True
    report = spectra.verify_lift_correspondence(
        G, args.k, tol=args.tol, cap=args.cap, raise_on_failure=False, eigenpair_hook=EIGENPAIR_HOOK
    )
    for kind in spectra.OPERATORS:
        checks = [c for c in report.checks if c.operator is kind]
        fails = [c for c in checks if not c.passed]
        worst = max((c.residual for c in checks), default=0.0)
        lines.append(
            f"lift {kind.value}: {len(checks)} eigenpairs, max residual {worst:.3g}: "
            + ("PASS" if not fails else f"FAIL ({len(fails)})")
        )
        for c in fails:
            lines.append(f"  failed U={list(c.U)} lambda={_fmt(c.lam)} residual={c.residual:.3g}")
        ok &= not fails

    if G.m:
        nqz_tol = min(args.tol, 1e-10)
        q_min = spectra.h_spectrum_signless_laplacian(G, args.k, cap=args.cap).min
        rho_q = spectra.power_spectral_radius(G, args.k, Kind.SIGNLESS_LAPLACIAN, nqz_tol, max_iter=args.max_iter)
        rho_a = spectra.power_spectral_radius(G, args.k, Kind.ADJACENCY, nqz_tol, max_iter=args.max_iter)
        a_max = spectra.h_spectrum_adjacency(G, args.k, cap=args.cap).max
        bounds = [
            (f"least Q eigenvalue {_fmt(q_min)} < min degree {min_degree(G)}", q_min < min_degree(G)),
            (f"Q spectral radius {_fmt(rho_q)} > max degree {max_degree(G)}", rho_q > max_degree(G)),
            (f"A spectral radius {_fmt(rho_a)} matches assembled max {_fmt(a_max)}", abs(rho_a - a_max) <= 1e-6),
        ]
        for text, passed in bounds:
            lines.append(f"bound {text}: " + ("PASS" if passed else "FAIL"))
            ok &= passed
    lines.append("verification " + ("passed" if ok else "FAILED"))
    print("\n".join(lines))
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_limits(args) -> int:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if args.mode == "alpha":
        w.writerow(["n", "beta_n", "alpha_n", "target"])
        for n in range(1, args.alpha_n + 1):
            seq = limits.beta_alpha(n)
            w.writerow([n, _fmt(seq.beta), _fmt(seq.alpha), _fmt(seq.target)])
    else:
        rows = limits.convergence_experiment(args.m_max, certify=args.extended)
        header = ["m", "lamin_T", "lamin_Ce", "gap", "target"]
        if args.extended:
            header += ["difference", "rho_T_above_2", "bracket_float", "bracket_certified"]
        w.writerow(header)
        for r in rows:
            fields = [r.m] + [_fmt(v) for v in r.csv_fields()[1:]]
            if args.extended:
                fields += [f"{r.difference:.6g}", int(r.rho_T_above_2), int(r.bracket_float), int(r.bracket_certified)]
            w.writerow(fields)
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperspec", description=__doc__.splitlines()[0])
    p.add_argument("--timestamp", action="store_true", help="add a generation time to JSON output")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="write G^{k,s} and its vertex map")
    b.add_argument("--graph", required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--s", type=int, required=True)
    b.add_argument("--out", required=True, help="hypergraph file; the map goes to OUT.json")
    b.set_defaults(func=cmd_build)

    h = sub.add_parser("hspectrum", help="assembled H-spectrum of A or Q of G^{k,k/2}")
    h.add_argument("--graph", required=True)
    h.add_argument("--k", type=int, required=True)
    h.add_argument("--operator", choices=["adjacency", "signless-laplacian"], default="adjacency")
    h.add_argument("--format", choices=["json", "csv"], default="json")
    h.add_argument("--tol", type=float, default=1e-8, help="dedup tolerance")
    h.add_argument("--cap", type=int, default=None, help="enumeration vertex cap (default 16 or $HYPERSPEC_CAP)")
    h.add_argument("--out")
    h.set_defaults(func=cmd_hspectrum)

    v = sub.add_parser("verify", help="check lifted eigenpairs and degree bounds")
    v.add_argument("--graph", required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--tol", type=float, default=1e-9)
    v.add_argument("--max-iter", type=int, default=100_000)
    v.add_argument("--cap", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    lim = sub.add_parser("limits", help="limit-point tables as CSV")
    lim.add_argument("--mode", choices=["cycle", "alpha"], default="cycle")
    lim.add_argument("--m-max", type=int, default=20)
    lim.add_argument("--alpha-n", type=int, default=20)
    lim.add_argument("--extended", action="store_true", help="add high-precision bracket columns")
    lim.add_argument("--out")
    lim.set_defaults(func=cmd_limits)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (VerificationError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
