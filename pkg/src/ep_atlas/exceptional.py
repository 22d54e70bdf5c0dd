"""Location of exceptional points in the complex coupling plane.

At an exceptional point two eigenvalues of H(Lambda) coalesce together with
their eigenvectors.  For the rank-one family this happens exactly where the
secular equation has a double root:

    S(E) = i/Lambda    and    S'(E) = 0.

The second condition does not involve Lambda at all, so the search decouples:
the zeros of S'(E) are the roots of the polynomial

    R(E) = sum_k v_k^2 prod_{j != k} (E - eps_j)^2,

of degree 2(N-1), and each zero E* yields its coupling as Lambda = i/S(E*).
R is found with the same simultaneous Ehrlich-Aberth iteration used for the
spectrum, evaluated rationally through R'/R = S''/S' + sum_k 2/(E - eps_k),
then each pair (E*, Lambda*) is polished with a 2x2 Newton step on
(S - i/Lambda, S').

For real models R has real coefficients, so its roots come in conjugate
pairs and the exceptional couplings are closed under Lambda -> -conj(Lambda).
One member per such pair is reported, canonicalized to Re Lambda >= 0 (ties
broken toward Im Lambda >= 0); a model with N coupled levels has exactly
N - 1 representatives, 2(N-1) points in total.  Levels with v_k = 0 are
decoupled and take no part.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import IncompleteSearchError, OracleRangeError
from .models import EffectiveModel, build_picket_fence

_GOLDEN = 0.618033988749895


@dataclass(frozen=True)
class ExceptionalPoint:
    """One representative coalescence: coupling, degenerate energy, partner.

    partner is the mirror coupling -conj(coupling); pair_id numbers the
    representatives in (Re, Im) order of the coupling.
    """

    coupling: complex
    energy: complex
    partner: complex
    residual: float
    pair_id: int


def _active(model: EffectiveModel):
    act = model.couplings != 0.0
    return model.epsilons[act], model.couplings[act] ** 2


def _gap_seeds(eps: np.ndarray, v2: np.ndarray) -> np.ndarray:
    """Two seeds per adjacent gap from the local two-level closed form.

    An isolated pair (eps_k, eps_k+1) with amplitudes (v_k, v_k+1) has its
    coalescences at E = midpoint + halfgap * exp(-+ 2j*w), w = atan2 of the
    amplitudes; those points seed the full search.
    """
    mid = (eps[1:] + eps[:-1]) / 2.0
    half = (eps[1:] - eps[:-1]) / 2.0
    w = np.arctan2(np.sqrt(v2[1:]), np.sqrt(v2[:-1]))
    up = mid + half * np.exp(2j * w)
    dn = mid + half * np.exp(-2j * w)
    return np.concatenate([dn, up])


def _sder(eps, v2, z):
    """S, S', S'' at a vector of points, stacked columns over levels."""
    d = z[:, None] - eps[None, :]
    s = (v2[None, :] / d).sum(axis=1)
    sp = -(v2[None, :] / d**2).sum(axis=1)
    spp = 2.0 * (v2[None, :] / d**3).sum(axis=1)
    return s, sp, spp


def _aberth_r(eps, v2, z0, maxiter=600, tol=5e-14):
    """Simultaneous iteration on R(E); returns (roots, converged)."""
    z = np.array(z0, dtype=complex)
    n = z.size
    scale = max(1.0, float(np.abs(z).max()))
    for _ in range(3):
        gap = np.abs(z[:, None] - z[None, :])
        np.fill_diagonal(gap, np.inf)
        bad = np.where(gap.min(axis=1) < 1e-12 * scale)[0]
        if bad.size == 0:
            break
        z[bad] += (np.arange(bad.size) + 1) * 1e-6 * scale * (0.7 + 0.3j)
    active = np.ones(n, dtype=bool)
    hist: list[float] = []
    twist = np.exp(2j * np.pi * _GOLDEN * np.arange(n))
    for it in range(maxiter):
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            d = z[:, None] - eps[None, :]
            sp = -(v2[None, :] / d**2).sum(axis=1)
            spp = 2.0 * (v2[None, :] / d**3).sum(axis=1)
            rlog = spp / sp + (2.0 / d).sum(axis=1)
            zz = z[:, None] - z[None, :]
            np.fill_diagonal(zz, np.inf)
            rep = (1.0 / zz).sum(axis=1)
            newt = 1.0 / rlog
            w = newt / (1.0 - newt * rep)
        w = np.where(np.isfinite(w), w, 0.0)
        step = np.abs(w) / (1.0 + np.abs(z))
        z = z - np.where(active, w, 0.0)
        active &= ~(step < tol)
        if not active.any():
            return z, True
        hist.append(float(step[active].max()))
        if it >= 25 and it % 25 == 0 and hist[-1] > 0.5 * hist[-25]:
            amp = np.abs(w) + 1e-14
            z[active] += 0.35 * amp[active] * twist[active]
    return z, False


def _polish(eps, v2, e, lam, rounds=40):
    """Coupled Newton on (S - i/Lambda, S'); returns (E, Lambda, step residual)."""
    res = np.inf
    for _ in range(rounds):
        d = e - eps
        s = (v2 / d).sum()
        sp = -(v2 / d**2).sum()
        spp = 2.0 * (v2 / d**3).sum()
        f1 = s - 1j / lam
        de = -sp / spp
        dl = 1j * (f1 + sp * de) * lam * lam
        e = e + de
        lam = lam + dl
        res = abs(de) / (1.0 + abs(e)) + abs(dl) / (1.0 + abs(lam))
        if res < 1e-15:
            break
    return e, lam, res


def _canonical(e: complex, lam: complex) -> tuple[complex, complex]:
    """Map (E, Lambda) to the representative of its {Lambda, -conj Lambda} class."""
    tie = 1e-12 * (1.0 + abs(lam))
    if lam.real < -tie or (abs(lam.real) <= tie and lam.imag < 0):
        return np.conj(e), -np.conj(lam)
    return e, lam


def find_eps(model: EffectiveModel, *, tol: float = 5e-14, max_rounds: int = 4) -> list[ExceptionalPoint]:
    """All exceptional-point representatives of the model, one per mirror pair.

    Returns N_active - 1 points sorted by (Re, Im) of the coupling, each
    polished to a step residual well below 1e-9.  Raises
    IncompleteSearchError (carrying whatever was found) if repeated seeding
    rounds cannot account for the full set.
    """
    eps, v2 = _active(model)
    m = eps.size
    if m < 2:
        return []
    want = m - 1
    seeds = _gap_seeds(eps, v2)
    gen = np.random.Generator(np.random.PCG64(0x5EED))
    best: list[ExceptionalPoint] = []
    for _ in range(max_rounds):
        roots, ok = _aberth_r(eps, v2, seeds)
        if ok:
            pts = []
            for z in roots:
                s = (v2 / (z - eps)).sum()
                e, lam, res = _polish(eps, v2, z, 1j / s)
                pts.append(_canonical(e, lam) + (res,))
            reps = _cluster(pts, want)
            if reps is not None:
                return reps
            if len(_dedup(pts)) > len(best):
                best = _dedup(pts)
        span = float(eps.max() - eps.min()) if m > 1 else 1.0
        seeds = _gap_seeds(eps, v2) + 0.05 * span * (
            gen.standard_normal(2 * want) + 1j * gen.standard_normal(2 * want)
        )
    raise IncompleteSearchError(
        "could not account for all %d exceptional-point pairs" % want,
        found=tuple(best),
    )


def _dedup(pts) -> list[ExceptionalPoint]:
    out: list[ExceptionalPoint] = []
    for e, lam, res in sorted(pts, key=lambda p: (p[1].real, p[1].imag)):
        if any(abs(lam - q.coupling) <= 1e-6 * (1.0 + abs(lam)) for q in out):
            continue
        out.append(ExceptionalPoint(lam, e, -np.conj(lam), res, len(out)))
    return out


def _cluster(pts, want: int):
    """Group canonicalized points into mirror pairs; None if the count is off."""
    pts = sorted(pts, key=lambda p: (p[1].real, p[1].imag, p[0].real))
    groups: list[list] = []
    for p in pts:
        if groups:
            e0, l0, _ = groups[-1][0]
            if abs(p[1] - l0) <= 1e-6 * (1.0 + abs(l0)) and abs(p[0] - e0) <= 1e-6 * (1.0 + abs(e0)):
                groups[-1].append(p)
                continue
        groups.append([p])
    if len(groups) != want or any(len(g) != 2 for g in groups):
        return None
    reps = []
    for i, g in enumerate(groups):
        e = (g[0][0] + g[1][0]) / 2.0
        lam = (g[0][1] + g[1][1]) / 2.0
        res = max(g[0][2], g[1][2])
        reps.append(ExceptionalPoint(lam, e, -np.conj(lam), res, i))
    return reps


def expand_ep_set(reps: list[ExceptionalPoint]) -> np.ndarray:
    """Full coupling set (both mirror partners), sorted by (Re, Im)."""
    full = np.array([p.coupling for p in reps] + [p.partner for p in reps], dtype=complex)
    return full[np.lexsort((full.imag, full.real))]


def two_level_eps(eps1: float, eps2: float, omega_deg: float) -> ExceptionalPoint:
    """Closed-form exceptional point of the two-level model.

    The representative coupling is 1j*(eps2-eps1)*exp(-2j*w) with degenerate
    energy at midpoint + (gap/2)*exp(-2j*w); the mirror partner carries the
    opposite phase.  Levels are put in increasing order first.
    """
    if eps1 == eps2:
        raise ValueError("two-level exceptional point needs distinct energies")
    if eps1 > eps2:
        eps1, eps2 = eps2, eps1
        omega_deg = 90.0 - omega_deg
    w = math.radians(omega_deg)
    gap = eps2 - eps1
    lam = 1j * gap * np.exp(-2j * w)
    e = (eps1 + eps2) / 2.0 + (gap / 2.0) * np.exp(-2j * w)
    e, lam = _canonical(complex(e), complex(lam))
    return ExceptionalPoint(lam, e, -np.conj(lam), 0.0, 0)


def resultant_oracle(model: EffectiveModel, *, digits: int = 30) -> np.ndarray:
    """Exceptional couplings by exact elimination; independent cross check.

    Builds the characteristic polynomial symbolically, eliminates the energy
    with a Sylvester resultant against its derivative, and root-solves the
    resulting coupling polynomial of degree 2(N-1) at high precision.  Exact
    rational arithmetic throughout the elimination, so the only error is in
    the final root extraction.  Limited to N <= 6 coupled levels; raises
    OracleRangeError beyond that.
    """
    import sympy as sp

    eps, v2 = _active(model)
    m = eps.size
    if m > 6:
        raise OracleRangeError("exact elimination is limited to 6 coupled levels, got %d" % m)
    if m < 2:
        return np.zeros(0, dtype=complex)
    E, L = sp.symbols("E L")
    epsr = [sp.Rational(float(x)) for x in eps]
    v2r = [sp.Rational(float(x)) for x in v2]
    base = [sp.prod([(E - epsr[j]) for j in range(m) if j != k]) for k in range(m)]
    p = sp.expand(sp.prod([(E - e) for e in epsr]) + sp.I * L * sum(w * b for w, b in zip(v2r, base)))
    res = sp.resultant(p, sp.diff(p, E), E)
    poly = sp.Poly(sp.expand(res), L)
    roots = sp.nroots(poly, n=digits, maxsteps=200)
    out = np.array([complex(r) for r in roots], dtype=complex)
    return out[np.lexsort((out.imag, out.real))]


@dataclass(frozen=True)
class AccumulationRow:
    n: int
    n_points: int
    min_distance: float
    median_distance: float
    closest: complex
    couplings: np.ndarray
    near_axis: np.ndarray


@dataclass(frozen=True)
class AccumulationResult:
    rows: list[AccumulationRow]
    target: float
    lambda_c_estimate: float


def accumulation_scan(n_values, *, target: float | None = None) -> AccumulationResult:
    """Distance of near-axis exceptional points to the critical coupling.

    For each fence size the representatives are found, the far-from-axis
    outliers (|Im Lambda| above three times the median, the ones tied to the
    fence edges) are dropped, and the minimum distance of the rest to the
    target is recorded.  Default target is the infinite-fence critical
    coupling 1/pi.  The estimate returned is Re Lambda of the closest point
    at the largest size.
    """
    tgt = (1.0 / math.pi) if target is None else float(target)
    rows: list[AccumulationRow] = []
    closest_at_max = 0.0
    for n in sorted(int(k) for k in n_values):
        reps = find_eps(build_picket_fence(n))
        lam = np.array([p.coupling for p in reps])
        med = float(np.median(np.abs(lam.imag)))
        keep = np.abs(lam.imag) <= 3.0 * med if med > 0 else np.ones(lam.size, bool)
        lam_near = lam[keep]
        dist = np.abs(lam_near - tgt)
        j = int(np.argmin(dist))
        rows.append(
            AccumulationRow(
                n=n,
                n_points=int(lam_near.size),
                min_distance=float(dist[j]),
                median_distance=float(np.median(dist)),
                closest=complex(lam_near[j]),
                couplings=lam,
                near_axis=keep,
            )
        )
        closest_at_max = float(lam_near[j].real)
    return AccumulationResult(rows=rows, target=tgt, lambda_c_estimate=closest_at_max)
