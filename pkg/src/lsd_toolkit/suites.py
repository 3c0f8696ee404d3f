"""Randomized property suites over the whole toolkit.

Each suite draws seeded random states or parameters, evaluates a fixed
set of identities, and reports the worst residual per property.  The
command-line verify subcommand and the test battery both run these.
"""

from dataclasses import dataclass

import numpy as np

from .coset import (
    CosetParams,
    build_x,
    coset_generate,
    haar_su2,
    local_unitary_action,
    so4r_image,
    y_factor,
    y_from_x,
)
from .lsd import average_concurrence, ls_decompose, ppt_check, verify_optimality
from .qstate import (
    SIGMA_YY,
    DensityMatrix,
    lambda_spectrum_raw,
    sample_random,
    spin_flip_vec,
)
from .wootters import concurrence, wootters_basis

__all__ = [
    "PropertyResult",
    "run_wootters_suite",
    "run_lsd_suite",
    "run_coset_suite",
    "run_all_suites",
]


@dataclass(frozen=True)
class PropertyResult:
    """Outcome of one property over a batch of random cases."""

    name: str
    cases: int
    max_residual: float
    tol: float
    passed: bool
    first_failure_seed: object


class _Tracker:
    def __init__(self, name, tol):
        self.name = name
        self.tol = tol
        self.cases = 0
        self.max_residual = 0.0
        self.first_failure_seed = None

    def add(self, seed, residual):
        self.cases += 1
        residual = float(residual)
        if residual > self.max_residual:
            self.max_residual = residual
        if residual > self.tol and self.first_failure_seed is None:
            self.first_failure_seed = seed

    def result(self):
        return PropertyResult(
            name=self.name,
            cases=self.cases,
            max_residual=self.max_residual,
            tol=self.tol,
            passed=self.first_failure_seed is None,
            first_failure_seed=self.first_failure_seed,
        )


def _trackers(specs, tol_override):
    return [_Tracker(name, tol if tol_override is None else tol_override) for name, tol in specs]


def run_wootters_suite(n=200, seed=0, tol=None):
    """Spectrum and basis identities on random mixed states of rank 2 to 4."""
    trk = _trackers(
        [
            ("concurrence-two-routes", 1e-9),
            ("ensemble-reconstruction", 1e-10),
            ("tilde-orthogonality", 1e-9),
            ("norm-sum", 1e-10),
            ("spectrum-scaling", 1e-9),
            ("spin-flip-involution", 1e-12),
        ],
        tol,
    )
    two_routes, recon, ortho, norms, scaling, invol = trk
    for k in range(n):
        s = seed + k
        rho = sample_random(s, rank=2 + k % 3)
        lam = lambda_spectrum_raw(rho.m)
        w = wootters_basis(rho)
        c_spec = concurrence(rho)
        c_basis = max(0.0, float(w.lambdas.lambdas[0] - np.sum(w.lambdas.lambdas[1:])))
        two_routes.add(s, abs(c_spec - c_basis))

        total = np.zeros((4, 4), dtype=complex)
        for x in w.xs:
            total = total + np.outer(x, np.conj(x))
        recon.add(s, np.max(np.abs(total - rho.m)))

        xmat = np.column_stack(w.xs)
        overlap = xmat.conj().T @ SIGMA_YY @ np.conj(xmat)
        ortho.add(s, np.max(np.abs(overlap - np.diag(w.lambdas.lambdas))))

        norms.add(s, abs(sum(float(np.vdot(x, x).real) for x in w.xs) - 1.0))

        scaling.add(
            s,
            np.max(np.abs(lambda_spectrum_raw(2.5 * rho.m) - 2.5 * lam)),
        )

        invol.add(s, np.max(np.abs(_flip_twice(rho.m) - rho.m)))
    return [t.result() for t in trk]


def _flip_twice(m):
    once = SIGMA_YY @ np.conj(m) @ SIGMA_YY
    return SIGMA_YY @ np.conj(once) @ SIGMA_YY


def _random_pure(seed):
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    v = v / np.linalg.norm(v)
    return DensityMatrix(np.outer(v, np.conj(v)))


def run_lsd_suite(n=100, seed=0, tol=None):
    """Split, ensemble, and certificate identities on random states."""
    trk = _trackers(
        [
            ("split-reconstruction", 1e-9),
            ("separable-part-ppt", 1e-10),
            ("boundary-spectrum", 1e-8),
            ("ensemble-zero-concurrence", 1e-9),
            ("average-concurrence-match", 1e-9),
            ("certificate", 1e-8),
        ],
        tol,
    )
    recon, sep_ppt, boundary, zero_c, avg_c, cert = trk
    for k in range(n):
        s = seed + k
        if k % 7 == 3:
            rho = _random_pure(s)
        else:
            rho = sample_random(s, rank=2 + k % 3)
        d = ls_decompose(rho)

        target = d.weight * d.sep.m
        if d.pure is not None:
            target = target + (1.0 - d.weight) * np.outer(d.pure, np.conj(d.pure))
        recon.add(s, np.max(np.abs(target - rho.m)))

        ppt = ppt_check(d.sep)
        sep_ppt.add(s, max(0.0, -ppt.min_pt_eigenvalue))

        if d.rank_class != "separable":
            lpp = d.lambdas_pp
            boundary.add(s, abs(float(lpp[0] - lpp[1] - lpp[2] - lpp[3])))
            avg_c.add(s, abs(average_concurrence(d) - concurrence(rho)))

        zero_c.add(
            s,
            max(abs(complex(np.vdot(z, spin_flip_vec(z)))) for z in d.zs),
        )

        rep = verify_optimality(rho, d, tol=cert.tol)
        cert.add(s, rep.max_residual if rep.verdict else max(rep.max_residual, 1.0))
    return [t.result() for t in trk]


def _random_params(seed, positive=True):
    rng = np.random.default_rng(seed)
    lam = np.sort(rng.random(4) + (0.05 if positive else 0.0))[::-1]
    return CosetParams(
        lambdas=tuple(lam),
        theta=tuple(rng.uniform(-2.0, 2.0, 2)),
        xi=tuple(rng.uniform(0.0, 2.0, 2)),
        phi=tuple(rng.uniform(-2.0, 2.0, 2)),
    )


def run_coset_suite(n=200, seed=0, tol=None):
    """Frame and generator identities over random parameter draws."""
    trk = _trackers(
        [
            ("factor-orthogonality", 1e-10),
            ("generated-spectrum", 1e-8),
            ("frame-roundtrip", 1e-12),
            ("flip-form-orthonormality", 1e-9),
            ("orbit-invariance", 1e-9),
            ("rotation-image", 1e-9),
        ],
        tol,
    )
    ortho, spectrum, roundtrip, flip_form, orbit, rot = trk
    for k in range(n):
        s = seed + k
        p = _random_params(s)
        y = y_factor(p)
        ortho.add(s, np.max(np.abs(y.m.T @ y.m - np.eye(4))))

        res = coset_generate(p)
        lam_target = np.array(p.lambdas) / res.trace_factor
        spectrum.add(
            s, np.max(np.abs(lambda_spectrum_raw(res.rho.m) - lam_target))
        )

        x = build_x(res.wootters)
        roundtrip.add(s, np.max(np.abs(y_from_x(x).m - y.m)))
        flip_form.add(s, np.max(np.abs(x.m.T @ SIGMA_YY @ x.m - np.eye(4))))

        rng = np.random.default_rng(10_000_000 + s)
        u1, u2 = haar_su2(rng), haar_su2(rng)
        rotated = local_unitary_action(u1, u2, res.rho)
        orbit.add(
            s,
            np.max(
                np.abs(lambda_spectrum_raw(rotated.m) - lambda_spectrum_raw(res.rho.m))
            ),
        )

        r1 = so4r_image(u1, u2)
        v1, v2 = haar_su2(rng), haar_su2(rng)
        r2 = so4r_image(v1, v2)
        r12 = so4r_image(u1 @ v1, u2 @ v2)
        rot.add(
            s,
            max(
                float(np.max(np.abs(r1.T @ r1 - np.eye(4)))),
                abs(float(np.linalg.det(r1)) - 1.0),
                float(np.max(np.abs(r12 - r1 @ r2))),
            ),
        )
    return [t.result() for t in trk]


def run_all_suites(n=100, seed=0, tol=None):
    """All three suites with a shared case count; returns {suite: results}."""
    return {
        "wootters": run_wootters_suite(n=n, seed=seed, tol=tol),
        "lsd": run_lsd_suite(n=n, seed=seed, tol=tol),
        "coset": run_coset_suite(n=n, seed=seed, tol=tol),
    }
