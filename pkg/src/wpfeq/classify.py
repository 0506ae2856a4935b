"""Fit the necessary first-order ODE to samples and decide the solution family.

Any nonconstant solution of the determinant functional equation satisfies

    w'^2 = p3 w^3 + p2 w^2 + p1 w + p0,

with the linear sector  w' = l1 w + l0  covering the exponential and affine
degenerations. Both fits are linear least squares in the coefficients, so
classification reduces to comparing equation residuals and testing which
coefficients are significant. Recovered cubic coefficients map onto the
normal form W'^2 = 4 W^3 - g2 W - g3 through an affine substitution, which
identifies the invariants of the underlying function up to the manifest
scaling invariance. The shift parameter is unobservable from local samples
(it would need global pole localisation) and is not reported.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateCubic,
    DegenerateInput,
    GridNotUniform,
    IllConditionedFit,
    TooFewPoints,
)


@dataclass(frozen=True)
class SampleSet:
    """Samples (x_i, w_i), optionally with provided derivative values.

    Cubic fitting needs at least 8 points with distinct x values; uniform
    grids enable finite-difference jets when derivatives are absent.
    """

    xs: tuple[complex, ...]
    ws: tuple[complex, ...]
    dws: tuple[complex, ...] | None = None

    def __post_init__(self):
        if len(self.xs) != len(self.ws):
            raise DegenerateInput("xs and ws must have equal length")
        if self.dws is not None and len(self.dws) != len(self.xs):
            raise DegenerateInput("dws must match xs in length")
        if len(set(self.xs)) != len(self.xs):
            raise DegenerateInput("sample points must be distinct")

    def spread(self) -> float:
        """Largest deviation of w from its mean, relative to its scale."""
        mean = sum(self.ws) / len(self.ws)
        dev = max(abs(w - mean) for w in self.ws)
        return dev / max(1.0, abs(mean))

    def grid_step(self, rel_tol: float = 1e-9) -> complex:
        if len(self.xs) < 2:
            raise TooFewPoints("need at least two points for a grid step")
        h = self.xs[1] - self.xs[0]
        for a, b in zip(self.xs, self.xs[1:]):
            if abs((b - a) - h) > rel_tol * max(abs(h), 1e-300):
                raise GridNotUniform("sample grid is not uniform")
        return h


@dataclass(frozen=True)
class Thresholds:
    """Decision thresholds; defaults sit an order of magnitude above the
    residuals observed with exact jets."""

    tau_lin: float = 1e-6
    tau_cub: float = 1e-6
    coeff_eps: float = 1e-8  # significance, relative to the largest coefficient
    spread_eps: float = 1e-10  # constant detection
    cond_equilibrate: float = 1e10
    cond_reject: float = 1e14


@dataclass(frozen=True)
class FitResult:
    """Least-squares ODE coefficients with the relative RMS equation misfit."""

    model: str  # "cubic" | "linear"
    coefficients: tuple[complex, ...]  # (p0, p1, p2, p3) or (l0, l1)
    residual: float
    condition: float


@dataclass(frozen=True)
class Classification:
    family: str  # "weierstrass" | "exponential" | "linear" | "constant" | "not_a_solution"
    params: dict = field(default_factory=dict)
    evidence: tuple[FitResult, ...] = ()
    roundtrip_residual: float | None = None


def estimate_jets(samples: SampleSet, stencil_order: int = 4) -> list[tuple[complex, complex, complex]]:
    """(x, w, w') triples by central differences on a uniform grid.

    Provided derivatives pass straight through. Boundary points without a
    full stencil are dropped; the truncation error is O(h^stencil_order).
    """
    if samples.dws is not None:
        return list(zip(samples.xs, samples.ws, samples.dws))
    if stencil_order not in (2, 4):
        raise ValueError("stencil_order must be 2 or 4")
    half = stencil_order // 2
    if len(samples.xs) < stencil_order + 1:
        raise TooFewPoints(
            f"need at least {stencil_order + 1} points for the order-{stencil_order} stencil"
        )
    h = samples.grid_step()
    out = []
    ws = samples.ws
    for i in range(half, len(ws) - half):
        if stencil_order == 2:
            dw = (ws[i + 1] - ws[i - 1]) / (2.0 * h)
        else:
            dw = (-ws[i + 2] + 8.0 * ws[i + 1] - 8.0 * ws[i - 1] + ws[i - 2]) / (12.0 * h)
        out.append((samples.xs[i], ws[i], dw))
    return out


def _solve_normal(A: np.ndarray, b: np.ndarray, thresholds: Thresholds) -> tuple[np.ndarray, float]:
    """Normal-equation solve with condition estimate and column equilibration.

    Columns span scales like w^3 versus 1, so the normal matrix is
    re-equilibrated to unit column norms whenever its condition passes the
    threshold; a fit that stays above the rejection bound raises.
    """
    gram = A.conj().T @ A
    rhs = A.conj().T @ b
    cond = float(np.linalg.cond(gram))
    scales = np.ones(A.shape[1])
    if cond > thresholds.cond_equilibrate:
        scales = np.linalg.norm(A, axis=0)
        scales[scales == 0.0] = 1.0
        Aeq = A / scales
        gram = Aeq.conj().T @ Aeq
        rhs = Aeq.conj().T @ b
        cond = float(np.linalg.cond(gram))
        if cond > thresholds.cond_reject:
            raise IllConditionedFit(f"normal-equation condition {cond:.3g}")
    coeffs = np.linalg.solve(gram, rhs) / scales
    return coeffs, cond


def fit_cubic(pairs, thresholds: Thresholds = Thresholds()) -> FitResult:
    """Least squares for w'^2 = p3 w^3 + p2 w^2 + p1 w + p0."""
    pairs = list(pairs)
    if len(pairs) < 5:
        raise TooFewPoints("cubic fit needs at least 5 (w, w') pairs")
    w = np.array([complex(p[0]) for p in pairs])
    dw = np.array([complex(p[1]) for p in pairs])
    if float(np.max(np.abs(w - w.mean()))) <= thresholds.spread_eps * max(1.0, abs(w.mean())):
        raise DegenerateInput("w values are all one constant; nothing to fit")
    A = np.column_stack([np.ones_like(w), w, w**2, w**3])
    b = dw**2
    coeffs, cond = _solve_normal(A, b, thresholds)
    misfit = A @ coeffs - b
    rms = float(np.sqrt(np.mean(np.abs(misfit) ** 2)))
    scale = max(1.0, float(np.sqrt(np.mean(np.abs(b) ** 2))))
    return FitResult("cubic", tuple(coeffs), rms / scale, cond)


def fit_linear(pairs, thresholds: Thresholds = Thresholds()) -> FitResult:
    """Least squares for w' = l1 w + l0."""
    pairs = list(pairs)
    if len(pairs) < 3:
        raise TooFewPoints("linear fit needs at least 3 (w, w') pairs")
    w = np.array([complex(p[0]) for p in pairs])
    dw = np.array([complex(p[1]) for p in pairs])
    A = np.column_stack([np.ones_like(w), w])
    coeffs, cond = _solve_normal(A, dw, thresholds)
    misfit = A @ coeffs - dw
    rms = float(np.sqrt(np.mean(np.abs(misfit) ** 2)))
    scale = max(1.0, float(np.sqrt(np.mean(np.abs(dw) ** 2))))
    return FitResult("linear", tuple(coeffs), rms / scale, cond)


def to_normal_form(p0: complex, p1: complex, p2: complex, p3: complex, eps: float = 1e-12):
    """Affine change w = a W + b mapping the cubic onto W'^2 = 4W^3 - g2 W - g3.

    a = 4/p3 kills the leading coefficient mismatch and b = -p2/(3 p3)
    removes the quadratic term; returns (g2, g3, a, b). Exactness is the
    caller's to confirm by re-expansion (see reexpand_normal_form).
    """
    scale = max(abs(p0), abs(p1), abs(p2), abs(p3), 1e-300)
    if abs(p3) <= eps * scale:
        raise DegenerateCubic("leading coefficient p3 is not significant")
    a = 4.0 / p3
    b = -p2 / (3.0 * p3)
    g2 = -(3.0 * p3 * b * b + 2.0 * p2 * b + p1) / a
    g3 = -(p3 * b**3 + p2 * b * b + p1 * b + p0) / (a * a)
    return g2, g3, a, b


def reexpand_normal_form(g2: complex, g3: complex, a: complex, b: complex):
    """Coefficients (p0, p1, p2, p3) of the cubic for w = a W + b.

    Substituting W = (w - b)/a into W'^2 = 4W^3 - g2 W - g3 and scaling by
    a^2 gives the round-trip oracle for to_normal_form.
    """
    p3 = 4.0 / a
    p2 = -12.0 * b / a
    p1 = 12.0 * b * b / a - g2 * a
    p0 = -4.0 * b**3 / a + g2 * a * b - g3 * a * a
    return p0, p1, p2, p3


def classify(
    cubic: FitResult | None,
    linear: FitResult | None,
    thresholds: Thresholds = Thresholds(),
    sample_spread: float | None = None,
) -> Classification:
    """Decision tree over the two fits.

    Constant samples are decided by spread before any fit is trusted. A good
    linear fit gives Linear (l1 insignificant) or Exponential(delta = l1).
    A good cubic fit with significant p3 is the Weierstrass family in normal
    form; with p3 insignificant but p2 significant it is the trigonometric
    sector, folded into Exponential with delta = sqrt(p2). Everything else
    is NotASolution, which is a valid outcome, not an error.
    """
    evidence = tuple(r for r in (cubic, linear) if r is not None)
    if sample_spread is not None and sample_spread < thresholds.spread_eps:
        return Classification("constant", {}, evidence)
    if linear is not None and linear.residual <= thresholds.tau_lin:
        l0, l1 = linear.coefficients
        if abs(l1) <= thresholds.coeff_eps * max(1.0, abs(l0)):
            return Classification("linear", {"alpha": l0}, evidence)
        return Classification("exponential", {"delta": l1}, evidence)
    if cubic is not None and cubic.residual <= thresholds.tau_cub:
        p0, p1, p2, p3 = cubic.coefficients
        scale = max(abs(p0), abs(p1), abs(p2), abs(p3), 1e-300)
        if abs(p3) > thresholds.coeff_eps * scale:
            g2, g3, a, b = to_normal_form(p0, p1, p2, p3)
            return Classification(
                "weierstrass", {"g2": g2, "g3": g3, "a": a, "b": b}, evidence
            )
        if abs(p2) > thresholds.coeff_eps * scale:
            return Classification("exponential", {"delta": cmath.sqrt(p2)}, evidence)
    return Classification("not_a_solution", {}, evidence)


def classify_samples(
    samples: SampleSet,
    thresholds: Thresholds = Thresholds(),
    stencil_order: int = 4,
    roundtrip: bool = True,
    seed: int = 0,
) -> Classification:
    """Full pipeline: jets, both fits, decision, and the round-trip residual.

    The round trip rebuilds the decided family and scans the functional
    equation on it, attaching the max residual as independent evidence that
    the classified family really solves the equation.
    """
    if len(samples.xs) < 8:
        raise TooFewPoints("classification needs at least 8 samples")
    spread = samples.spread()
    if spread < thresholds.spread_eps:
        return Classification("constant", {"c": sum(samples.ws) / len(samples.ws)}, ())
    jets = estimate_jets(samples, stencil_order)
    pairs = [(w, dw) for _, w, dw in jets]
    cubic = linear = None
    try:
        cubic = fit_cubic(pairs, thresholds)
    except (DegenerateInput, IllConditionedFit):
        pass
    try:
        linear = fit_linear(pairs, thresholds)
    except (DegenerateInput, IllConditionedFit):
        pass
    decision = classify(cubic, linear, thresholds, sample_spread=spread)
    if roundtrip and decision.family not in ("not_a_solution", "constant"):
        rt = roundtrip_residual(decision, seed=seed)
        return Classification(decision.family, decision.params, decision.evidence, rt)
    return decision


def roundtrip_residual(decision: Classification, count: int = 64, seed: int = 0) -> float:
    """Max functional-equation residual of the reconstructed family."""
    from . import verifier
    from .elliptic import from_invariants

    if decision.family == "exponential":
        fam = verifier.Exponential(delta=decision.params["delta"])
        sampler = verifier.TripleSampler(seed=seed, count=count, box=0.8)
    elif decision.family == "linear":
        fam = verifier.Linear(alpha=decision.params.get("alpha", 1.0) or 1.0)
        sampler = verifier.TripleSampler(seed=seed, count=count, box=0.8)
    elif decision.family == "weierstrass":
        ctx = from_invariants(decision.params["g2"], decision.params["g3"])
        fam = verifier.WeierstrassShifted(ctx, 0j)
        box = 0.45 * ctx.lambda_min if math.isfinite(ctx.lambda_min) else 1.0
        sampler = verifier.TripleSampler(seed=seed, count=count, box=box)
    else:
        return 0.0
    report = verifier.scan(fam, fam, fam, sampler, tol=math.inf)
    return report.max_residual
