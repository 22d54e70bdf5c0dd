"""Complex spectrum of H(Lambda) = diag(eps) - 1j*Lambda*outer(v,v).

The rank-one structure reduces diagonalization to the secular equation

    S(E) - i/Lambda = 0,    S(E) = sum_k v_k^2 / (E - eps_k),

whose left side times prod_k (E - eps_k) is the characteristic polynomial
p(E) = prod_k (E - eps_k) * g(E), g(E) = 1 + 1j*Lambda*S(E).  All N roots are
found simultaneously with the Ehrlich-Aberth iteration, which is Newton's
method on p with the other iterates divided out (multiplicative deflation).
p'/p is evaluated rationally,

    p'(E)/p(E) = sum_k 1/(E - eps_k) + g'(E)/g(E),

so coefficients are never expanded and the conditioning stays that of the
secular function itself.

Eigenvectors inherit the rank-one form, psi_j proportional to
v_j / (E - eps_j).  The bilinear self-overlap of that raw vector equals
-S'(E), so c-normalization (psi^T psi = 1) is division by sqrt(-S'(E)).  The
Hermitian norm of the c-normalized state is >= 1 and measures how far the
state is from the Hermitian limit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from mpmath import mp

from .errors import (
    IllConditionedNormalizationError,
    InvalidCouplingError,
    PoleProximityError,
    SolverFailureError,
)
from .models import CouplingParameter, EffectiveModel

_GOLDEN = 0.618033988749895
_NORM_FLOOR = 1e-7  # |psi^T psi|/<psi|psi> below this means the state pair is effectively defective


def _as_lambda(coupling) -> complex:
    # CouplingParameter enforces the physical quadrant; raw complex values are
    # accepted unrestricted (loops in the Lambda plane need all four quadrants).
    if isinstance(coupling, CouplingParameter):
        return coupling.value
    return complex(coupling)


def secular_eval(model: EffectiveModel, energy, coupling) -> np.ndarray | complex:
    """Evaluate F(E) = sum_k v_k^2/(E - eps_k) - i/Lambda at one or many E.

    Raises PoleProximityError if any E sits within 1e-14 of a level (relative
    to the model's energy scale), and InvalidCouplingError for lambda = 0
    where i/Lambda is undefined.
    """
    lam = _as_lambda(coupling)
    if lam == 0:
        raise InvalidCouplingError("secular function needs lambda > 0 (H is diagonal at lambda = 0)")
    e = np.asarray(energy, dtype=complex)
    scalar = e.ndim == 0
    e = np.atleast_1d(e)
    eps = model.epsilons
    v2 = model.couplings**2
    d = e[:, None] - eps[None, :]
    scale = max(1.0, float(np.max(np.abs(eps))))
    if np.min(np.abs(d)) < 1e-14 * scale:
        raise PoleProximityError("energy within 1e-14 of an unperturbed level; secular form is singular there")
    s = (v2[None, :] / d).sum(axis=1)
    out = s - 1j / lam
    return complex(out[0]) if scalar else out


# ---------------------------------------------------------------------------
# Ehrlich-Aberth engine

def _seeds(eps: np.ndarray, v2: np.ndarray, lam: complex) -> np.ndarray:
    """First-order onsite seeds, with one swapped for the collective root.

    Once |Lambda|*sum(v^2) is comparable to the level span, one eigenvalue
    separates from the cloud toward centroid - 1j*Lambda*sum(v^2); seeding it
    explicitly keeps the iteration from splitting a single deep root across
    two iterates.  Seeds closer than 1e-12*scale are jittered apart
    deterministically so the Aberth repulsion term is finite.
    """
    n = eps.size
    tot = v2.sum()
    z = (eps - 1j * lam * v2).astype(complex)
    span = (eps.max() - eps.min()) if n > 1 else 1.0
    if n > 1 and abs(lam) * tot > span / (2 * n):
        cen = (eps * v2).sum() / tot
        deep = cen - 1j * lam * tot
        j = int(np.argmin(np.abs(z - deep)))
        z[j] = deep
    scale = max(1.0, float(np.abs(z).max()))
    for _ in range(3):
        gap = np.abs(z[:, None] - z[None, :])
        np.fill_diagonal(gap, np.inf)
        bad = np.where(gap.min(axis=1) < 1e-12 * scale)[0]
        if bad.size == 0:
            break
        z[bad] += (np.arange(bad.size) + 1) * 1e-6 * scale * (0.7 + 0.7j)
    return z


def _aberth(eps, v2, lam, z0=None, maxiter=500, tol=5e-14):
    """Simultaneous root iteration; returns (roots, iterations, converged, last_step).

    Converged iterates are frozen.  A deterministic index-asymmetric kick is
    applied if the maximum step stops shrinking (the plain iteration can lock
    into a mirror-symmetric limit cycle when the true roots sit on the
    symmetry axis of the seed configuration).
    """
    n = eps.size
    z = _seeds(eps, v2, lam) if z0 is None else np.array(z0, dtype=complex)
    active = np.ones(n, dtype=bool)
    hist: list[float] = []
    twist = np.exp(2j * np.pi * _GOLDEN * np.arange(n))
    step = np.zeros(n)
    for it in range(maxiter):
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            d = z[:, None] - eps[None, :]
            s = (v2[None, :] / d).sum(axis=1)
            sp = -(v2[None, :] / d**2).sum(axis=1)
            g = 1 + 1j * lam * s
            gp = 1j * lam * sp
            plogd = (1.0 / d).sum(axis=1) + gp / g
            zz = z[:, None] - z[None, :]
            np.fill_diagonal(zz, np.inf)
            rep = (1.0 / zz).sum(axis=1)
            newt = 1.0 / plogd
            w = newt / (1.0 - newt * rep)
        w = np.where(np.isfinite(w), w, 0.0)
        step = np.abs(w) / (1.0 + np.abs(z))
        z = z - np.where(active, w, 0.0)
        active &= ~(step < tol)
        if not active.any():
            return z, it + 1, True, float(step.max(initial=0.0))
        hist.append(float(step[active].max()))
        if it >= 25 and it % 25 == 0 and hist[-1] > 0.5 * hist[-25]:
            amp = np.abs(w) + 1e-14
            z[active] += 0.35 * amp[active] * twist[active]
    return z, maxiter, False, float(step[active].max())


_STALL_ACCEPT = 1e-8  # near a defective pair no method localizes roots below ~sqrt(eps)


def _solve_roots(eps, v2, lam, warm=None, maxiter=500, tol=5e-14):
    """Aberth with warm start, LAPACK-seeded retry, and rich failure info.

    Near an exceptional point the root pair is defective and every algorithm
    saturates at O(sqrt(machine eps)) absolute error; a run that stalls with
    all steps already below _STALL_ACCEPT is returned as converged-to-limit,
    with the stalled step size reported as the residual.
    """
    z, its, ok, last = _aberth(eps, v2, lam, z0=warm, maxiter=maxiter, tol=tol)
    best = (z, its, last)
    if not ok and warm is not None:
        # warm start led the iteration astray; retry from scratch
        z, its, ok, last = _aberth(eps, v2, lam, maxiter=maxiter, tol=tol)
        if last < best[2]:
            best = (z, its, last)
    if not ok and eps.size <= 64:
        h = np.diag(eps).astype(complex) - 1j * lam * np.outer(np.sqrt(v2), np.sqrt(v2))
        z, its, ok, last = _aberth(eps, v2, lam, z0=np.linalg.eigvals(h), maxiter=maxiter, tol=tol)
        if last < best[2]:
            best = (z, its, last)
    if ok:
        return z, its, last
    if best[2] <= _STALL_ACCEPT:
        return best
    raise SolverFailureError(
        "eigenvalue iteration did not converge",
        diagnostics={
            "n": int(eps.size),
            "lambda": complex(lam),
            "iterations": best[1],
            "max_relative_step": best[2],
        },
    )


def _sorted_order(e: np.ndarray) -> np.ndarray:
    return np.lexsort((e.imag, e.real))


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues (sorted by real part, then imaginary) and per-state data.

    vectors holds c-normalized right eigenvectors as columns when requested;
    hermitian_norms are <psi|psi> of those columns (>= 1, equality only in
    the Hermitian limit); condition holds the scale-invariant ratio
    |psi^T psi| / <psi|psi> of the raw rank-one vector, which is 1 for a
    real state and vanishes exactly at an exceptional point.
    """

    energies: np.ndarray
    iterations: int
    residual: float
    vectors: np.ndarray | None = None
    hermitian_norms: np.ndarray | None = None
    condition: np.ndarray | None = None

    @property
    def widths(self) -> np.ndarray:
        """Decay widths Gamma_k = -2 Im E_k."""
        return -2.0 * self.energies.imag

    @property
    def n(self) -> int:
        return int(self.energies.size)


def eigen_spectrum(
    model: EffectiveModel,
    coupling,
    *,
    compute_vectors: bool = False,
    warm_start: np.ndarray | None = None,
    maxiter: int = 500,
    tol: float = 5e-14,
) -> Spectrum:
    """All N complex eigenvalues of H(Lambda), optionally with eigenvectors.

    lambda = 0 is exact (the unperturbed levels).  Levels with v_k = 0 are
    split off exactly: they stay at eps_k with unit basis vectors, and the
    iteration runs on the coupled subset only.  warm_start takes a length-N
    array of previous eigenvalues to continue a parameter sweep.

    Raises SolverFailureError if the iteration stalls, and (only when
    compute_vectors is set) IllConditionedNormalizationError when some state
    is too close to an exceptional point for c-normalization.
    """
    lam = _as_lambda(coupling)
    n = model.n
    eps = model.epsilons
    v = model.couplings
    if lam == 0:
        return Spectrum(
            energies=eps.astype(complex),
            iterations=0,
            residual=0.0,
            vectors=np.eye(n, dtype=complex) if compute_vectors else None,
            hermitian_norms=np.ones(n) if compute_vectors else None,
            condition=np.full(n, np.inf) if compute_vectors else None,
        )

    act = v != 0.0
    e_full = eps.astype(complex)
    its = 0
    last = 0.0
    if act.any():
        eps_a = eps[act]
        v2_a = v[act] ** 2
        if eps_a.size == 1:
            roots = np.array([eps_a[0] - 1j * lam * v2_a[0]])
        else:
            warm = None
            if warm_start is not None:
                warm_start = np.asarray(warm_start, dtype=complex)
                if warm_start.shape != (n,):
                    raise ValueError("warm_start must have one entry per level")
                warm = warm_start[act]
            roots, its, last = _solve_roots(eps_a, v2_a, lam, warm=warm, maxiter=maxiter, tol=tol)
        e_full[act] = roots

    order = _sorted_order(e_full)
    e_sorted = e_full[order]

    if not compute_vectors:
        return Spectrum(energies=e_sorted, iterations=its, residual=last)

    vec = np.zeros((n, n), dtype=complex)
    norms = np.ones(n)
    cond = np.full(n, np.inf)
    act_sorted = act[order]
    for col in np.flatnonzero(~act_sorted):
        vec[order[col], col] = 1.0  # decoupled level: exact basis state
    ill: list[int] = []
    for col in np.flatnonzero(act_sorted):
        d = e_sorted[col] - eps[act]
        raw = np.zeros(n, dtype=complex)
        raw[act] = v[act] / d
        bil = np.sum((v[act] ** 2) / d**2)  # psi^T psi of the raw vector = -S'(E)
        # scale-invariant defectiveness: |psi^T psi| / <psi|psi> is 1 for a real
        # vector and 0 exactly at a coalescence, independent of the raw scale
        cond[col] = abs(bil) / float(np.sum(np.abs(raw) ** 2))
        if cond[col] < _NORM_FLOOR:
            ill.append(int(col))
            continue
        psi = raw / np.sqrt(bil)
        pivot = int(np.argmax(np.abs(psi)))
        if psi[pivot].real < 0 or (psi[pivot].real == 0 and psi[pivot].imag < 0):
            psi = -psi
        vec[:, col] = psi
        norms[col] = float(np.sum(np.abs(psi) ** 2))
    if ill:
        raise IllConditionedNormalizationError(
            "states too close to an exceptional point for c-normalization",
            state_indices=tuple(ill),
        )
    return Spectrum(
        energies=e_sorted,
        iterations=its,
        residual=last,
        vectors=vec,
        hermitian_norms=norms,
        condition=cond,
    )


# ---------------------------------------------------------------------------
# closed forms and cross checks

def two_level_closed_form(model_or_eps1, eps2=None, omega_deg=None, coupling=None):
    """Exact pair of eigenvalues of the two-level model.

    Call as two_level_closed_form(model, coupling=...) or with explicit
    (eps1, eps2, omega_deg, coupling).  Returns (E1, E2) on the principal
    square-root branch, which reproduces (eps1, eps2) at lambda = 0 when
    eps1 < eps2.
    """
    if isinstance(model_or_eps1, EffectiveModel):
        m = model_or_eps1
        if m.n != 2:
            raise ValueError("closed form needs a two-level model")
        e1, e2 = float(m.epsilons[0]), float(m.epsilons[1])
        c2w = float(m.couplings[0] ** 2 - m.couplings[1] ** 2)  # cos(2w) for unit channel vectors
    else:
        e1 = float(model_or_eps1)
        e2 = float(eps2)
        w = np.radians(float(omega_deg))
        c2w = float(np.cos(2 * w))
    lam = _as_lambda(coupling)
    il = 1j * lam
    disc = (e1 - e2) ** 2 - 2 * il * (e1 - e2) * c2w + il**2
    root = np.sqrt(complex(disc))
    mean = (e1 + e2 - il) / 2.0
    return mean - root / 2.0, mean + root / 2.0


def _mp_trace(m) -> "mp.mpc":
    return sum(m[i, i] for i in range(m.rows))


def dense_oracle(model: EffectiveModel, coupling, dps: int = 40) -> np.ndarray:
    """Eigenvalues from the dense characteristic polynomial in 40-digit arithmetic.

    Independent route: builds H explicitly, extracts the characteristic
    polynomial with the Faddeev-LeVerrier recursion, and calls a general
    polynomial root finder.  Shares no code path with the secular iteration.
    Intended for cross checks at modest N; cost grows like N^4 multiplies.
    """
    lam = _as_lambda(coupling)
    n = model.n
    with mp.workdps(dps):
        lam_mp = mp.mpc(lam.real, lam.imag)
        h = mp.matrix(n, n)
        for i in range(n):
            for j in range(n):
                h[i, j] = -1j * lam_mp * mp.mpf(float(model.couplings[i])) * mp.mpf(float(model.couplings[j]))
            h[i, i] += mp.mpf(float(model.epsilons[i]))
        coeffs = [mp.mpc(1)]
        m = mp.eye(n)
        for k in range(1, n + 1):
            hm = h * m
            ak = -_mp_trace(hm) / k
            coeffs.append(ak)
            m = hm + ak * mp.eye(n)
        roots = mp.polyroots(coeffs, maxsteps=200, extraprec=60)
        out = np.array([complex(r) for r in roots], dtype=complex)
    return out[_sorted_order(out)]
