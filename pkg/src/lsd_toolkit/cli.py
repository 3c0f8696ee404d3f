"""Command-line front end.

Subcommands: analyze (spectrum, concurrence, split summary), decompose
(full split with invariant residuals), generate (states from target
spectra), verify (randomized property suites).  Exit codes: 0 success,
2 unreadable input or bad parameters, 3 a named state invariant failed,
4 a certificate or invariant check came back negative, 5 a property
suite failed.  Set LSD_TOOLKIT_LOG=info or debug for progress logging
on stderr.
"""

import argparse
import hashlib
import json
import logging
import os
import sys
import time

import numpy as np

from .coset import CosetParams, coset_generate, params_from_json, params_to_json
from .errors import LsdToolkitError
from .lsd import (
    ls_decompose,
    lsd_to_json,
    report_to_json,
    verify_optimality,
)
from .qstate import (
    density_from_json,
    density_to_json,
    lambda_spectrum,
    spin_flip_vec,
)
from .suites import run_coset_suite, run_lsd_suite, run_wootters_suite
from .wootters import concurrence, entanglement_of_formation

log = logging.getLogger("lsd_toolkit")


def _setup_logging():
    level = os.environ.get("LSD_TOOLKIT_LOG", "off").strip().lower()
    if level in ("info", "debug"):
        logging.basicConfig(
            level=logging.INFO if level == "info" else logging.DEBUG,
            format="%(levelname)s %(name)s: %(message)s",
            stream=sys.stderr,
        )


def _load_json(path):
    """Parsed JSON plus a path label and the sha256 of the raw bytes."""
    if path is None or path == "-":
        data = sys.stdin.read().encode("utf-8")
        label = "<stdin>"
    else:
        with open(path, "rb") as fh:
            data = fh.read()
        label = path
    return json.loads(data.decode("utf-8")), label, hashlib.sha256(data).hexdigest()


def _fmt_scalar(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, float):
        return "%.6f" % v
    return str(v)


def _is_scalar(v):
    return v is None or isinstance(v, (bool, int, float, str))


def _text_lines(obj, indent):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if _is_scalar(v):
                lines.append("%s%s: %s" % (pad, k, _fmt_scalar(v)))
            elif isinstance(v, list) and all(_is_scalar(x) for x in v):
                lines.append(
                    "%s%s: [%s]" % (pad, k, ", ".join(_fmt_scalar(x) for x in v))
                )
            else:
                lines.append("%s%s:" % (pad, k))
                lines.extend(_text_lines(v, indent + 1))
    elif isinstance(obj, list):
        for v in obj:
            if _is_scalar(v):
                lines.append("%s- %s" % (pad, _fmt_scalar(v)))
            elif isinstance(v, list) and all(_is_scalar(x) for x in v):
                lines.append(
                    "%s- [%s]" % (pad, ", ".join(_fmt_scalar(x) for x in v))
                )
            else:
                lines.append("%s-" % pad)
                lines.extend(_text_lines(v, indent + 1))
    else:
        lines.append("%s%s" % (pad, _fmt_scalar(obj)))
    return lines


def _emit(payload, args):
    if args.format == "json":
        text = json.dumps(payload, indent=2)
    else:
        text = "\n".join(_text_lines(payload, 0))
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _split_invariants(rho, d):
    target = d.weight * d.sep.m
    if d.pure is not None:
        target = target + (1.0 - d.weight) * np.outer(d.pure, np.conj(d.pure))
    recon = float(np.max(np.abs(target - rho.m)))
    zsum = np.zeros((4, 4), dtype=complex)
    for z in d.zs:
        zsum = zsum + np.outer(z, np.conj(z))
    ens = float(np.max(np.abs(zsum - d.sep.m)))
    zc = max(abs(complex(np.vdot(z, spin_flip_vec(z)))) for z in d.zs)
    out = {
        "reconstruction": recon,
        "ensemble_sum": ens,
        "zero_concurrence": float(zc),
    }
    if d.rank_class == "separable":
        out["boundary"] = None
    else:
        lpp = d.lambdas_pp
        out["boundary"] = abs(float(lpp[0] - lpp[1] - lpp[2] - lpp[3]))
    return out


def cmd_analyze(args):
    obj, label, digest = _load_json(args.input)
    rho = density_from_json(obj)
    t0 = time.perf_counter()
    spec = lambda_spectrum(rho)
    c = concurrence(rho)
    eof = entanglement_of_formation(rho)
    t1 = time.perf_counter()
    d = ls_decompose(rho)
    t2 = time.perf_counter()
    if d.pure is None:
        avg = None
    else:
        ov = np.vdot(d.pure, spin_flip_vec(d.pure))
        avg = float((1.0 - d.weight) * abs(ov))
    payload = {
        "input": {"path": label, "sha256": digest},
        "spectrum": [float(x) for x in spec.lambdas],
        "concurrence": c,
        "entanglement_of_formation": eof,
        "lsd": {
            "weight": float(d.weight),
            "rank_class": d.rank_class,
            "average_concurrence": avg,
        },
        "timings": {"analyze": t1 - t0, "decompose": t2 - t1},
    }
    rc = 0
    if args.certify:
        t3 = time.perf_counter()
        rep = verify_optimality(rho, d, tol=args.tol)
        payload["optimality"] = report_to_json(rep)
        payload["timings"]["certify"] = time.perf_counter() - t3
        if not rep.verdict:
            rc = 4
    log.info("analyze finished with exit code %d", rc)
    _emit(payload, args)
    return rc


def cmd_decompose(args):
    obj, label, digest = _load_json(args.input)
    rho = density_from_json(obj)
    t0 = time.perf_counter()
    d = ls_decompose(rho)
    t1 = time.perf_counter()
    inv = _split_invariants(rho, d)
    payload = {
        "input": {"path": label, "sha256": digest},
        "decomposition": lsd_to_json(d),
        "invariants": inv,
        "timings": {"decompose": t1 - t0},
    }
    rc = 0
    if any(v is not None and v > args.tol for v in inv.values()):
        rc = 4
    if args.certify:
        t2 = time.perf_counter()
        rep = verify_optimality(rho, d, tol=args.tol)
        payload["optimality"] = report_to_json(rep)
        payload["timings"]["certify"] = time.perf_counter() - t2
        if not rep.verdict:
            rc = 4
    log.info("decompose finished with exit code %d", rc)
    _emit(payload, args)
    return rc


def _csv_floats(text, count, name):
    parts = [float(x) for x in text.split(",")]
    if len(parts) != count:
        raise ValueError("%s expects %d comma-separated values" % (name, count))
    return tuple(parts)


def _params_from_args(args):
    if args.params:
        obj, _, _ = _load_json(args.params)
        return params_from_json(obj)
    if args.lambdas is not None:
        return CosetParams(
            lambdas=_csv_floats(args.lambdas, 4, "--lambdas"),
            theta=_csv_floats(args.theta, 2, "--theta"),
            xi=_csv_floats(args.xi, 2, "--xi"),
            phi=_csv_floats(args.phi, 2, "--phi"),
        )
    rng = np.random.default_rng(args.seed)
    lam = np.sort(rng.random(4))[::-1]
    return CosetParams(
        lambdas=tuple(float(x) for x in lam),
        theta=tuple(rng.uniform(-2.0, 2.0, 2)),
        xi=tuple(rng.uniform(0.0, 2.0, 2)),
        phi=tuple(rng.uniform(-2.0, 2.0, 2)),
    )


def cmd_generate(args):
    p = _params_from_args(args)
    t0 = time.perf_counter()
    res = coset_generate(p)
    t1 = time.perf_counter()
    payload = {
        "state": density_to_json(res.rho),
        "achieved_spectrum": [float(x) for x in res.wootters.lambdas.lambdas],
        "trace_factor": float(res.trace_factor),
        "params": params_to_json(p),
        "timings": {"generate": t1 - t0},
    }
    log.info("generated state with trace factor %.6f", res.trace_factor)
    _emit(payload, args)
    return 0


_SUITES = {
    "wootters": run_wootters_suite,
    "lsd": run_lsd_suite,
    "coset": run_coset_suite,
}


def cmd_verify(args):
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    results = {}
    first_fail = None
    t0 = time.perf_counter()
    for nm in names:
        rs = _SUITES[nm](n=args.n, seed=args.seed, tol=args.tol)
        results[nm] = [
            {
                "name": r.name,
                "cases": r.cases,
                "max_residual": r.max_residual,
                "tol": r.tol,
                "passed": r.passed,
                "first_failure_seed": r.first_failure_seed,
            }
            for r in rs
        ]
        for r in rs:
            if not r.passed and first_fail is None:
                first_fail = (nm, r)
        log.info("suite %s done", nm)
    payload = {
        "suites": results,
        "passed": first_fail is None,
        "timings": {"verify": time.perf_counter() - t0},
    }
    _emit(payload, args)
    if first_fail is not None:
        nm, r = first_fail
        print(
            "suite failure: %s/%s (first failing seed %s, max residual %.3e)"
            % (nm, r.name, r.first_failure_seed, r.max_residual),
            file=sys.stderr,
        )
        return 5
    return 0


def _add_io_args(sp, with_input=True, with_tol=True, with_certify=False):
    if with_input:
        sp.add_argument(
            "--input", default="-", help="state JSON file, or - for stdin"
        )
    sp.add_argument("--output", default=None, help="write the report here")
    sp.add_argument(
        "--format", choices=("json", "text"), default="json", help="output format"
    )
    if with_tol:
        sp.add_argument(
            "--tol", type=float, default=1e-8, help="residual tolerance"
        )
    if with_certify:
        sp.add_argument(
            "--certify",
            action="store_true",
            help="run the optimality certificate as well",
        )


def _build_parser():
    p = argparse.ArgumentParser(
        prog="lsd-toolkit",
        description="Two-qubit entanglement splits, certificates, and generators.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="spectrum, concurrence, and split summary")
    _add_io_args(pa, with_certify=True)
    pa.set_defaults(func=cmd_analyze)

    pd = sub.add_parser("decompose", help="full split with invariant residuals")
    _add_io_args(pd, with_certify=True)
    pd.set_defaults(func=cmd_decompose)

    pg = sub.add_parser("generate", help="state with a target overlap spectrum")
    pg.add_argument("--params", default=None, help="parameter JSON file")
    pg.add_argument("--lambdas", default=None, help="four target values, comma-separated")
    pg.add_argument("--theta", default="0,0", help="two angles, comma-separated")
    pg.add_argument("--xi", default="0,0", help="two non-negative angles")
    pg.add_argument("--phi", default="0,0", help="two angles, comma-separated")
    pg.add_argument("--seed", type=int, default=0, help="seed for random parameters")
    _add_io_args(pg, with_input=False, with_tol=False)
    pg.set_defaults(func=cmd_generate)

    pv = sub.add_parser("verify", help="randomized property suites")
    pv.add_argument(
        "--suite",
        choices=("wootters", "lsd", "coset", "all"),
        default="all",
        help="which suite to run",
    )
    pv.add_argument("--n", type=int, default=100, help="cases per suite")
    pv.add_argument("--seed", type=int, default=0, help="base seed")
    pv.add_argument(
        "--tol",
        type=float,
        default=None,
        help="override every per-property tolerance",
    )
    pv.add_argument("--output", default=None, help="write the report here")
    pv.add_argument(
        "--format", choices=("json", "text"), default="json", help="output format"
    )
    pv.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    _setup_logging()
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LsdToolkitError as exc:
        print(
            "validation error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr
        )
        return 3
    except (ValueError, KeyError, TypeError, OSError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
