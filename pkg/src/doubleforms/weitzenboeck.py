"""Weitzenboeck curvature operators of a symmetric (2,2) double form.

The operator of order p is defined through the Clifford commutators
ad_{e_i.e_j} by

    N_p(w)(psi1, psi2) = (1/4) sum_{i<j, k<l} w(e_i^e_j, e_k^e_l)
                         <ad_{e_i.e_j} psi1, ad_{e_k.e_l} psi2>,

evaluated basis pair by basis pair.  That definitional sum is the trusted
oracle in this package; the closed form

    N_p(w) = { g.c(w)/(p-1) - 2 w } g^{p-2} / (p-2)!      (2 <= p <= n-2)

and every derived identity (duality, splitting, contraction orders,
mid-degree expression, adjoint) are checked against it numerically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial

import numpy as np

from .exterior import AlgebraContext, subsets
from . import clifford as cl
from .forms import (
    CurvatureTensor,
    DoubleForm,
    as_form22,
    contract,
    contract_iter,
    decomposable_coefficients,
    kn_product,
    metric,
    metric_power,
    orthonormalize,
    star,
    zero_form,
)

__all__ = [
    "FormulaRangeError",
    "KulkarniComponents",
    "OperatorMatrix",
    "SpectrumReport",
    "np_definition",
    "np_formula",
    "np_adjoint",
    "decompose_22",
    "np_split",
    "np_contraction_rhs",
    "np_contraction_einstein_rhs",
    "einstein_tensor",
    "p_curvature_form",
    "np_midpoint_formula",
    "operator_matrix",
    "jacobi_eigenvalues",
    "spectrum",
]


class FormulaRangeError(ValueError):
    """Raised when a closed form is requested outside its valid p range."""


# -- definitional operator (the oracle) ---------------------------------


@lru_cache(maxsize=64)
def _ad_table(n: int, p: int) -> np.ndarray:
    """ad_{e_i.e_j} applied to every basis p-vector, as Clifford vectors.

    Shape (C(n,p), C(n,2), 2**n); the pair axis follows the lexicographic
    order of 2-subsets, matching the row order of (2,2) coefficient
    matrices.
    """
    ctx = AlgebraContext(n)
    pairs = subsets(n, 2)
    phis = [
        cl.clifford_mul(cl.basis_vector(ctx, i), cl.basis_vector(ctx, j))
        for (i, j) in pairs
    ]
    table = np.zeros((comb(n, p), len(pairs), 2 ** n))
    for r, I in enumerate(subsets(n, p)):
        psi = cl.basis_element(ctx, I)
        for a, phi in enumerate(phis):
            table[r, a] = cl.ad(phi, psi).coeffs
    table.setflags(write=False)
    return table


def np_definition(omega, p: int) -> DoubleForm:
    """Order-p Weitzenboeck form via the Clifford commutator sum.

    Works for every 0 <= p <= n and any symmetric (2,2) input; this is the
    reference implementation everything else is measured against.
    """
    w = as_form22(omega)
    ctx = w.ctx
    if not 0 <= p <= ctx.n:
        raise ValueError(f"order must be in [0, {ctx.n}], got {p}")
    T = _ad_table(ctx.n, p)
    t = np.tensordot(w.coeffs, T, axes=([1], [1]))   # [a, J, x]
    N = np.tensordot(T, t, axes=([1, 2], [0, 2]))    # [I, J]
    N *= 0.25
    N = (N + N.T) / 2.0  # symmetric in exact arithmetic; kill roundoff skew
    return DoubleForm(p, p, N, ctx)


# -- closed forms ---------------------------------------------------------


def _check_formula_range(n: int, p: int) -> None:
    if not 2 <= p <= n - 2:
        raise FormulaRangeError(
            f"closed form only valid for 2 <= p <= n-2 (n={n}, p={p}); "
            "use np_definition outside that range"
        )


def np_formula(omega, p: int) -> DoubleForm:
    """Closed form { g.c(w)/(p-1) - 2 w } g^{p-2}/(p-2)! for Bianchi input."""
    w = as_form22(omega)
    ctx = w.ctx
    _check_formula_range(ctx.n, p)
    g = metric(ctx)
    inner_part = kn_product(g, contract(w)) / (p - 1) - 2.0 * w
    return kn_product(inner_part, metric_power(p - 2, ctx)) / factorial(p - 2)


def np_adjoint(w_pp: DoubleForm, p: int) -> DoubleForm:
    """Adjoint of the order-p transformation: (g c^{p-1}/(p-1)! - 2 c^{p-2}/(p-2)!) w."""
    if w_pp.degree != (p, p):
        raise ValueError(f"expected a ({p},{p}) form, got {w_pp.degree}")
    ctx = w_pp.ctx
    _check_formula_range(ctx.n, p)
    g = metric(ctx)
    term1 = kn_product(g, contract_iter(w_pp, p - 1)) / factorial(p - 1)
    term2 = 2.0 * contract_iter(w_pp, p - 2) / factorial(p - 2)
    return term1 - term2


# -- orthogonal decomposition of (2,2) forms -----------------------------


@dataclass(frozen=True, eq=False)
class KulkarniComponents:
    """Weyl / traceless-Ricci / scalar parts: w = w2 + g.w1 + g^2.w0."""

    omega2: DoubleForm
    omega1: DoubleForm
    omega0: float

    @property
    def ctx(self) -> AlgebraContext:
        return self.omega2.ctx


def decompose_22(omega) -> KulkarniComponents:
    """Split a curvature tensor into scalar, traceless-Ricci and Weyl parts.

    Uses the trace formulas s = c^2 w, w0 = s/(2n(n-1)),
    w1 = (c w - (s/n) g)/(n-2); only supported for n >= 4, below which the
    Weyl part degenerates.
    """
    w = as_form22(omega)
    ctx = w.ctx
    n = ctx.n
    if n < 4:
        raise ValueError(f"decomposition requires dimension >= 4, got n={n}")
    g = metric(ctx)
    ricci = contract(w)
    s = contract(ricci).scalar()
    omega0 = s / (2.0 * n * (n - 1))
    omega1 = (ricci - (s / n) * g) / (n - 2)
    omega2 = w - kn_product(g, omega1) - omega0 * metric_power(2, ctx)
    return KulkarniComponents(omega2=omega2, omega1=omega1, omega0=omega0)


def np_split(components: KulkarniComponents, p: int) -> DoubleForm:
    """Order-p operator assembled from the decomposition:

    N_p = g^{p-2} {-2 w2/(p-2)!} + g^{p-1} {(n-2p) w1/(p-1)!}
          + g^p {2(n-p) w0/(p-1)!}.
    """
    ctx = components.ctx
    n = ctx.n
    _check_formula_range(n, p)
    t2 = kn_product(metric_power(p - 2, ctx), components.omega2) * (-2.0 / factorial(p - 2))
    t1 = kn_product(metric_power(p - 1, ctx), components.omega1) * ((n - 2 * p) / factorial(p - 1))
    t0 = metric_power(p, ctx) * (2.0 * (n - p) * components.omega0 / factorial(p - 1))
    return t2 + t1 + t0


# -- contraction orders ----------------------------------------------------


def np_contraction_rhs(omega, p: int, k: int) -> DoubleForm:
    """Closed form for the k-fold contraction of the order-p operator.

    k = p gives the full contraction p (n-2)!/(n-p-1)! c^2 w (a scalar
    form), k = p-1 gives (n-3)!/(n-p-1)! {(n-2p) c w + (p-1) c^2 w g}, and
    k <= p-2 the general g-power expression.
    """
    w = as_form22(omega)
    ctx = w.ctx
    n = ctx.n
    _check_formula_range(n, p)
    if not 0 <= k <= p:
        raise ValueError(f"contraction order must be in [0, {p}], got {k}")
    g = metric(ctx)
    ricci = contract(w)
    s = contract(ricci).scalar()
    if k == p:
        value = p * factorial(n - 2) / factorial(n - p - 1) * s
        return DoubleForm(0, 0, [[value]], ctx)
    if k == p - 1:
        coef = factorial(n - 3) / factorial(n - p - 1)
        return coef * ((n - 2 * p) * ricci + (p - 1) * s * g)
    coef = factorial(n - p + k - 2) / (factorial(n - p - 2) * factorial(p - k - 2))
    a = (n - k - p - 1) / ((n - p - 1) * (p - k - 1))
    b = k / ((n - p - 1) * (p - k - 1) * (p - k))
    brace = -2.0 * w + a * kn_product(g, ricci) + (b * s) * metric_power(2, ctx)
    return coef * kn_product(metric_power(p - k - 2, ctx), brace)


def einstein_tensor(omega) -> DoubleForm:
    """E = (1/2) c^2 w g - c w, a symmetric (1,1) form."""
    w = as_form22(omega)
    ricci = contract(w)
    s = contract(ricci).scalar()
    return 0.5 * s * metric(w.ctx) - ricci


def np_contraction_einstein_rhs(omega, p: int) -> DoubleForm:
    """Alternative (p-1)-fold contraction written through the Einstein tensor:

    (n-3)!/(n-p-1)! { (n-2)/2 c^2 w g - (n-2p) E }.
    """
    w = as_form22(omega)
    ctx = w.ctx
    n = ctx.n
    _check_formula_range(n, p)
    s = contract_iter(w, 2).scalar()
    coef = factorial(n - 3) / factorial(n - p - 1)
    return coef * (((n - 2) / 2.0) * s * metric(ctx) - (n - 2 * p) * einstein_tensor(w))


# -- p-curvature and the mid-degree expression ----------------------------


def p_curvature_form(omega, p: int) -> DoubleForm:
    """The (p,p) form *(g^{n-p-2} w / (n-p-2)!) whose sectional values are
    the p-curvatures of w."""
    w = as_form22(omega)
    n = w.ctx.n
    if not 0 <= p <= n - 2:
        raise ValueError(f"p-curvature needs 0 <= p <= n-2 (n={n}), got p={p}")
    lifted = kn_product(metric_power(n - p - 2, w.ctx), w) / factorial(n - p - 2)
    return star(lifted)


def np_midpoint_formula(omega, p: int) -> tuple[DoubleForm, DoubleForm]:
    """Both sides of the order-(n+p)/2 expression through p-curvature and Weyl.

    Returns (definitional lhs, closed-form rhs) where

        rhs = C g^{(n-p)/2} { *(p(p-1)/(n-p-2)! g^{n-p-2} w)
                              - (n-1)(n-2)/(p-2)! g^{p-2} W },
        C   = 2 (p-2)! / ( ((n+p-4)/2)! (n+p-2) (n-p-1) ).
    """
    w = as_form22(omega)
    ctx = w.ctx
    n = ctx.n
    if (n + p) % 2 != 0:
        raise ValueError(f"n + p must be even, got n={n}, p={p}")
    order = (n + p) // 2
    if p < 2 or order > n - 2:
        raise ValueError(
            f"mid-degree expression needs 2 <= p and (n+p)/2 <= n-2, got n={n}, p={p}"
        )
    weyl = decompose_22(w).omega2
    star_term = (p * (p - 1) / factorial(n - p - 2)) * star(
        kn_product(metric_power(n - p - 2, ctx), w)
    )
    weyl_term = ((n - 1) * (n - 2) / factorial(p - 2)) * kn_product(
        metric_power(p - 2, ctx), weyl
    )
    C = 2.0 * factorial(p - 2) / (factorial((n + p - 4) // 2) * (n + p - 2) * (n - p - 1))
    rhs = C * kn_product(metric_power((n - p) // 2, ctx), star_term - weyl_term)
    lhs = np_definition(w, order)
    return lhs, rhs


# -- operators, spectra, sampled sectional curvature -----------------------


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """A symmetric (p,p) form viewed as a self-adjoint operator on p-vectors.

    The standard basis is orthonormal for the natural scalar product, so
    the operator matrix is just the coefficient matrix.
    """

    p: int
    matrix: np.ndarray
    ctx: AlgebraContext

    def __post_init__(self) -> None:
        mat = np.asarray(self.matrix, dtype=float)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError(f"operator matrix must be square, got {mat.shape}")
        scale = max(float(np.linalg.norm(mat)), 1.0)
        skew = float(np.max(np.abs(mat - mat.T), initial=0.0))
        if skew > 1e-12 * scale:
            raise ValueError(f"operator matrix not symmetric: max skew {skew:.3e}")
        mat = (mat + mat.T) / 2.0
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)


def operator_matrix(w_pp: DoubleForm) -> OperatorMatrix:
    """Self-adjoint operator of a symmetric (p,p) form."""
    if w_pp.p != w_pp.q:
        raise ValueError(f"expected a (p,p) form, got {w_pp.degree}")
    return OperatorMatrix(p=w_pp.p, matrix=w_pp.coeffs, ctx=w_pp.ctx)


def jacobi_eigenvalues(matrix: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps until the off-diagonal Frobenius norm drops below tol times the
    matrix norm.  Matrices here are at most C(8,4) = 70 square, where this
    converges in a handful of sweeps.
    """
    A = np.array(matrix, dtype=float)
    m = A.shape[0]
    if m <= 1:
        return np.sort(np.diag(A))
    scale = max(float(np.linalg.norm(A)), 1.0)
    for _ in range(max_sweeps):
        off = np.linalg.norm(A - np.diag(np.diag(A)))
        if off <= tol * scale:
            break
        for i in range(m - 1):
            for j in range(i + 1, m):
                if abs(A[i, j]) <= 1e-300:
                    continue
                theta = (A[j, j] - A[i, i]) / (2.0 * A[i, j])
                t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0)) if theta != 0 else 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_i = A[:, i].copy()
                col_j = A[:, j].copy()
                A[:, i] = c * col_i - s * col_j
                A[:, j] = s * col_i + c * col_j
                row_i = A[i, :].copy()
                row_j = A[j, :].copy()
                A[i, :] = c * row_i - s * row_j
                A[j, :] = s * row_i + c * row_j
                A[i, j] = 0.0
                A[j, i] = 0.0
    return np.sort(np.diag(A))


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    """Eigenvalues plus sampled sectional minima of a (p,p) operator."""

    eigenvalues: np.ndarray
    min_eigenvalue: float
    min_sampled_sectional: float | None
    sample_count: int
    seed: int
    sampled_values: np.ndarray = field(repr=False, default=None)


def sample_plane(rng: np.random.Generator, n: int, p: int, *, max_tries: int = 32) -> np.ndarray:
    """Orthonormal basis of a random p-plane from Gaussian vectors."""
    for _ in range(max_tries):
        raw = rng.standard_normal((p, n))
        try:
            return orthonormalize(raw)
        except ValueError:
            continue  # resample near-degenerate draws
    raise RuntimeError("failed to sample a nondegenerate plane")


def spectrum(M: OperatorMatrix, sample_planes: int = 100, seed: int = 0) -> SpectrumReport:
    """Full spectrum (cyclic Jacobi) and sampled sectional values.

    Sectional values are Rayleigh quotients of the operator matrix, so the
    smallest eigenvalue never exceeds the sampled sectional minimum.
    """
    eigs = jacobi_eigenvalues(M.matrix)
    rng = np.random.default_rng(seed)
    values = []
    for _ in range(sample_planes):
        if M.p == 0:
            values.append(float(M.matrix[0, 0]))
            continue
        F = sample_plane(rng, M.ctx.n, M.p)
        v = decomposable_coefficients(F, M.ctx)
        values.append(float(v @ M.matrix @ v))
    sampled = np.asarray(values)
    return SpectrumReport(
        eigenvalues=eigs,
        min_eigenvalue=float(eigs[0]) if eigs.size else 0.0,
        min_sampled_sectional=float(sampled.min()) if values else None,
        sample_count=sample_planes,
        seed=seed,
        sampled_values=sampled,
    )
