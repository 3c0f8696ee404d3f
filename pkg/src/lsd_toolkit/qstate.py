"""Two-qubit state model: validation, spin flip, and the lambda spectrum.

Basis order is |uu>, |ud>, |du>, |dd>.  The spin flip conjugates with
sigma_y (x) sigma_y, which in this basis is the real antidiagonal
(-1, 1, 1, -1).
"""

from dataclasses import dataclass

import numpy as np

from .errors import NotHermitian, NotPSD, NotUnitTrace
from .matcore import herm_eig

__all__ = [
    "SIGMA_YY",
    "DensityMatrix",
    "validate",
    "spin_flip",
    "spin_flip_matrix",
    "spin_flip_vec",
    "SpectrumLambda",
    "lambda_spectrum",
    "lambda_spectrum_raw",
    "EigenEnsemble",
    "eigen_ensemble",
    "sample_random",
    "density_to_json",
    "density_from_json",
]

SIGMA_YY = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)


@dataclass(frozen=True)
class DensityMatrix:
    """Validated 4x4 density matrix.

    Construction checks hermiticity and unit trace within 1e-10 and
    rejects eigenvalues below -1e-10.
    """

    m: np.ndarray

    def __post_init__(self):
        arr = np.array(self.m, dtype=complex)
        if arr.shape != (4, 4):
            raise ValueError("density matrix must be 4x4")
        herm = float(np.max(np.abs(arr - arr.conj().T)))
        if herm > 1e-10:
            raise NotHermitian("max|m - m^dag| = %.3e exceeds 1e-10" % herm)
        tr = complex(np.trace(arr))
        if abs(tr - 1.0) > 1e-10:
            raise NotUnitTrace("|trace - 1| = %.3e exceeds 1e-10" % abs(tr - 1.0))
        w, _ = herm_eig(arr)
        if w[-1] < -1e-10:
            raise NotPSD("eigenvalue %.3e below -1e-10" % w[-1])
        object.__setattr__(self, "m", arr)


def validate(m):
    """Validate a raw 4x4 array as a density matrix."""
    return DensityMatrix(m)


def spin_flip_matrix(m):
    """Spin flip of a raw 4x4 matrix: SIGMA_YY @ conj(m) @ SIGMA_YY."""
    return SIGMA_YY @ np.conj(m) @ SIGMA_YY


def spin_flip_vec(v):
    """Spin flip of a two-qubit vector: SIGMA_YY @ conj(v)."""
    return SIGMA_YY @ np.conj(v)


def spin_flip(rho):
    """Spin-flipped state of a density matrix, as a raw 4x4 array."""
    return spin_flip_matrix(rho.m)


@dataclass(frozen=True)
class SpectrumLambda:
    """Descending non-negative lambda spectrum of a two-qubit state."""

    lambdas: np.ndarray

    def __post_init__(self):
        arr = np.array(self.lambdas, dtype=float)
        if arr.shape != (4,):
            raise ValueError("lambda spectrum must have four entries")
        if np.any(arr < -1e-12) or np.any(arr[:-1] < arr[1:] - 1e-12):
            raise ValueError("lambda spectrum must be non-negative and descending")
        object.__setattr__(self, "lambdas", np.clip(arr, 0.0, None))


def lambda_spectrum_raw(m):
    """Lambda spectrum of a raw Hermitian PSD matrix.

    Returns the descending eigenvalues of sqrt(sqrt(m) mtilde sqrt(m))
    where mtilde is the spin flip of m.  Scales linearly with m, which is
    what lets generated states be normalized after the fact.
    """
    m = (np.array(m, dtype=complex) + np.conj(np.array(m)).T) / 2.0
    w, v = herm_eig(m)
    if w[-1] < -1e-10:
        raise NotPSD("matrix eigenvalue %.3e below -1e-10" % w[-1])
    # sqrt(m) mtilde sqrt(m) is unitarily similar to
    # diag(sqrt(w)) (V* mtilde V) diag(sqrt(w)) in the eigenbasis; with
    # eigenvalues at or below the eigen-ensemble cut zeroed, the clamped
    # rows vanish identically and the trailing lambdas of a low-rank
    # state come back as clean zeros instead of square roots of noise
    sq = np.sqrt(np.where(w > 1e-12, w, 0.0))
    core = v.conj().T @ spin_flip_matrix(m) @ v
    core = (core + core.conj().T) / 2.0
    inner = core * np.outer(sq, sq)
    w2, _ = herm_eig(inner)
    if w2[-1] < -1e-10:
        raise NotPSD("inner product matrix eigenvalue %.3e below -1e-10" % w2[-1])
    return np.sqrt(np.clip(w2, 0.0, None))


def lambda_spectrum(rho):
    """Lambda spectrum of a validated state."""
    return SpectrumLambda(lambda_spectrum_raw(rho.m))


@dataclass(frozen=True)
class EigenEnsemble:
    """Subnormalized eigenvectors v_i with sum |v_i><v_i| equal to the state."""

    vs: tuple


def eigen_ensemble(rho):
    """Eigen-ensemble of a state: v_i = sqrt(mu_i) times the i-th eigenvector.

    Eigenvalues at or below 1e-12 produce exact zero vectors, so later
    stages can rely on rank-deficient columns being identically zero.
    """
    w, v = herm_eig(rho.m)
    vs = []
    for i in range(4):
        if w[i] <= 1e-12:
            vs.append(np.zeros(4, dtype=complex))
        else:
            vs.append(np.sqrt(w[i]) * v[:, i])
    return EigenEnsemble(vs=tuple(vs))


def sample_random(seed, rank=4):
    """Random state of the given rank from a seeded complex Ginibre factor.

    The same seed always produces the same state bit for bit.
    """
    if rank not in (1, 2, 3, 4):
        raise ValueError("rank must be between 1 and 4")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((4, rank)) + 1j * rng.standard_normal((4, rank))
    m = g @ g.conj().T
    m = m / np.trace(m).real
    return DensityMatrix(m)


def _complex_to_pair(x):
    return [float(np.real(x)), float(np.imag(x))]


def density_to_json(rho):
    """JSON-ready dict for a state: 4x4 row-major [re, im] entries."""
    return {"matrix": [[_complex_to_pair(x) for x in row] for row in rho.m]}


def density_from_json(obj):
    """Parse and validate the dict form produced by density_to_json."""
    rows = obj["matrix"]
    if len(rows) != 4 or any(len(r) != 4 for r in rows):
        raise ValueError("matrix must be 4x4")
    m = np.array(
        [[complex(float(x[0]), float(x[1])) for x in row] for row in rows]
    )
    return DensityMatrix(m)
