"""Concurrence, entanglement of formation, and the tilde-orthogonal basis.

The central object is a set of four subnormalized vectors x_i with
<x_i|xtilde_j> = lambda_i delta_ij, obtained from the eigen-ensemble by a
Takagi factorization of the spin-flip overlap matrix tau.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NotNormalized
from .matcore import herm_eig, takagi
from .qstate import SIGMA_YY, SpectrumLambda, eigen_ensemble, lambda_spectrum

__all__ = [
    "TauMatrix",
    "tau_matrix",
    "WoottersDecomposition",
    "wootters_basis",
    "concurrence",
    "entanglement_of_formation",
    "pure_state_entropy",
]


@dataclass(frozen=True)
class TauMatrix:
    """Symmetric spin-flip overlap matrix tau_ij = <v_i|vtilde_j>."""

    tau: np.ndarray

    def __post_init__(self):
        arr = np.array(self.tau, dtype=complex)
        if arr.shape != (4, 4):
            raise ValueError("tau must be 4x4")
        res = float(np.max(np.abs(arr - arr.T)))
        if res > 1e-10:
            raise ValueError("tau not symmetric, max|tau - tau.T| = %.3e" % res)
        object.__setattr__(self, "tau", arr)


def tau_matrix(ens):
    """Spin-flip overlap matrix of an eigen-ensemble."""
    v = np.column_stack(ens.vs)
    tau = v.conj().T @ SIGMA_YY @ np.conj(v)
    return TauMatrix(tau=tau)


@dataclass(frozen=True)
class WoottersDecomposition:
    """Four vectors x_i with <x_i|xtilde_j> = lambda_i delta_ij.

    xs sum to the state they decompose, lambdas is its lambda spectrum,
    and u is the unitary connecting xs to the eigen-ensemble.
    Construction rechecks the tilde orthogonality, the unit trace sum,
    and the unitarity of u.
    """

    xs: tuple
    lambdas: SpectrumLambda
    u: np.ndarray

    def __post_init__(self):
        xs = tuple(np.array(x, dtype=complex).reshape(4) for x in self.xs)
        if len(xs) != 4:
            raise ValueError("need exactly four vectors")
        u = np.array(self.u, dtype=complex)
        if float(np.max(np.abs(u @ u.conj().T - np.eye(4)))) > 1e-9:
            raise ValueError("u is not unitary within 1e-9")
        lam = self.lambdas.lambdas
        x = np.column_stack(xs)
        overlap = x.conj().T @ SIGMA_YY @ np.conj(x)
        res = float(np.max(np.abs(overlap - np.diag(lam))))
        if res > 1e-9:
            raise ValueError("tilde orthogonality residual %.3e exceeds 1e-9" % res)
        tr = float(sum(np.vdot(xi, xi).real for xi in xs))
        if abs(tr - 1.0) > 1e-10:
            raise ValueError("norms sum to %.12f instead of 1" % tr)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "u", u)


def _canonical_sign(col):
    """Sign making the largest-modulus component real non-negative.

    Phase freedom per vector is a sign only, since flipping x_i must be
    absorbed by a sign flip in row i of u.
    """
    k = int(np.argmax(np.abs(col)))
    c = col[k]
    eps = 1e-13 * abs(c)
    if c.real < -eps or (abs(c.real) <= eps and c.imag < 0.0):
        return -1.0
    return 1.0


def wootters_basis(rho):
    """Tilde-orthogonal decomposition of a state.

    Builds the eigen-ensemble, Takagi-factorizes its spin-flip overlap
    matrix, and rotates the ensemble by conj(u) so that
    <x_i|xtilde_j> = lambda_i delta_ij with lambdas descending.
    """
    ens = eigen_ensemble(rho)
    tau = tau_matrix(ens)
    fac = takagi(tau.tau)
    u = fac.u.copy()
    v = np.column_stack(ens.vs)
    x = v @ u.conj().T
    for i in range(4):
        col = x[:, i]
        if float(np.max(np.abs(col))) == 0.0:
            continue
        sign = _canonical_sign(col)
        if sign < 0.0:
            x[:, i] = -col
            u[i, :] = -u[i, :]
    xs = tuple(x[:, i] for i in range(4))
    return WoottersDecomposition(xs=xs, lambdas=SpectrumLambda(fac.lambdas), u=u)


def concurrence(rho):
    """max(0, lambda1 - lambda2 - lambda3 - lambda4) of the state."""
    lam = lambda_spectrum(rho).lambdas
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def _entropy_of_weights(ws, base):
    h = 0.0
    for w in ws:
        if w > 0.0:
            h -= w * np.log(w)
    return float(h / np.log(base))


def entanglement_of_formation(rho, base=2.0):
    """Entanglement of formation from the concurrence.

    Binary entropy of (1 + sqrt(1 - C^2)) / 2, in bits by default; pass
    base=np.e for nats.
    """
    c = concurrence(rho)
    arg = max(0.0, 1.0 - c * c)
    x = 0.5 + 0.5 * np.sqrt(arg)
    return _entropy_of_weights([x, 1.0 - x], base)


def pure_state_entropy(psi, base=2.0):
    """Entropy of entanglement of a normalized two-qubit pure state.

    Reduces to the first qubit and returns the eigenvalue entropy.
    Raises NotNormalized when the norm is off by more than 1e-10.
    """
    v = np.array(psi, dtype=complex).reshape(4)
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > 1e-10:
        raise NotNormalized("|norm - 1| = %.3e exceeds 1e-10" % abs(norm - 1.0))
    a = v.reshape(2, 2)
    red = a @ a.conj().T
    w, _ = herm_eig(red)
    return _entropy_of_weights(np.clip(w, 0.0, None), base)
