"""JSON file format for curvature tensors and general double forms.

A tensor file looks like

    {"n": 4,
     "entries": [{"ij": [1, 2], "kl": [1, 2], "value": 1.0}]}

with 1-based strictly increasing index pairs; unlisted entries are zero
and the (ij) <-> (kl) symmetry is enforced on load.  General (p,q) forms
written by save_form carry explicit "p" and "q" fields and index lists of
the matching lengths.

Loading checks the first Bianchi identity.  The default policy is to warn
on stderr and continue; "strict" rejects the file and "project" applies
the orthogonal projection onto the symmetric Bianchi subspace (the
projector is assembled once per dimension from the identity's linear
constraints).
"""

from __future__ import annotations

import json
import sys
from functools import lru_cache

import numpy as np

from .exterior import AlgebraContext, insertion_sign, subsets, _ranks
from .forms import BIANCHI_TOL, CurvatureTensor, DoubleForm, bianchi_residual

__all__ = ["load_tensor", "save_form", "bianchi_projector", "project_bianchi"]

_POLICIES = ("warn", "strict", "project")


def _parse_pair(raw, field: str, n: int, length: int) -> tuple[int, ...]:
    if not isinstance(raw, list) or len(raw) != length:
        raise ValueError(f"{field}: expected a list of {length} indices, got {raw!r}")
    try:
        idx = tuple(int(v) for v in raw)
    except (TypeError, ValueError):
        raise ValueError(f"{field}: indices must be integers, got {raw!r}") from None
    if any(not 1 <= v <= n for v in idx):
        raise ValueError(f"{field}: indices must lie in [1, {n}], got {list(idx)}")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise ValueError(f"{field}: indices must be strictly increasing, got {list(idx)}")
    return idx


def load_tensor(path, *, on_bianchi: str = "warn", bianchi_tol: float = BIANCHI_TOL) -> CurvatureTensor:
    """Read a (2,2) curvature tensor, mirroring entries across the symmetry.

    on_bianchi selects how a violated first Bianchi identity is handled:
    "warn" (report on stderr, keep the tensor), "strict" (raise) or
    "project" (orthogonal projection onto the Bianchi subspace).
    """
    if on_bianchi not in _POLICIES:
        raise ValueError(f"on_bianchi must be one of {_POLICIES}, got {on_bianchi!r}")
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise ValueError(f"{path}: top level must be an object")
    if "n" not in doc:
        raise ValueError(f"{path}: missing dimension field 'n'")
    n = doc["n"]
    if not isinstance(n, int):
        raise ValueError(f"{path}: 'n' must be an integer, got {n!r}")
    for d in ("p", "q"):
        if d in doc and doc[d] != 2:
            raise ValueError(f"{path}: curvature tensors must have {d} = 2, got {doc[d]}")
    ctx = AlgebraContext(n)
    ranks = _ranks(n, 2)
    dim = ctx.dim(2)
    mat = np.zeros((dim, dim))
    seen: dict[tuple[int, int], float] = {}
    entries = doc.get("entries", [])
    if not isinstance(entries, list):
        raise ValueError(f"{path}: 'entries' must be a list")
    for k, entry in enumerate(entries):
        where = f"{path}: entries[{k}]"
        if not isinstance(entry, dict):
            raise ValueError(f"{where}: expected an object, got {entry!r}")
        missing = {"ij", "kl", "value"} - set(entry)
        if missing:
            raise ValueError(f"{where}: missing fields {sorted(missing)}")
        ij = _parse_pair(entry["ij"], f"{where}.ij", n, 2)
        kl = _parse_pair(entry["kl"], f"{where}.kl", n, 2)
        try:
            value = float(entry["value"])
        except (TypeError, ValueError):
            raise ValueError(f"{where}.value: expected a number, got {entry['value']!r}") from None
        a, b = ranks[ij], ranks[kl]
        key = (min(a, b), max(a, b))
        if key in seen and seen[key] != value:
            raise ValueError(
                f"{where}: conflicts with an earlier entry for the same "
                f"symmetric slot ({seen[key]!r} vs {value!r})"
            )
        seen[key] = value
        mat[a, b] = value
        mat[b, a] = value
    form = DoubleForm(2, 2, mat, ctx)
    residual = bianchi_residual(form)
    limit = bianchi_tol * max(form.norm(), 1.0)
    if residual > limit:
        if on_bianchi == "strict":
            raise ValueError(
                f"{path}: first Bianchi identity violated "
                f"(residual {residual:.3e} > {limit:.3e})"
            )
        if on_bianchi == "project":
            form = project_bianchi(form)
            return CurvatureTensor(form.symmetrized(), bianchi_tol=1e-9)
        print(
            f"warning: {path}: first Bianchi identity violated "
            f"(residual {residual:.3e}); continuing",
            file=sys.stderr,
        )
        return CurvatureTensor(form, bianchi_tol=float("inf"))
    return CurvatureTensor(form)


def save_form(form, path) -> None:
    """Write a double form (or curvature tensor) as a JSON entry list."""
    if isinstance(form, CurvatureTensor):
        form = form.form
    if not isinstance(form, DoubleForm):
        raise TypeError(f"expected DoubleForm or CurvatureTensor, got {type(form).__name__}")
    n = form.ctx.n
    rows = subsets(n, form.p)
    cols = subsets(n, form.q)
    entries = []
    for a, I in enumerate(rows):
        for b, J in enumerate(cols):
            v = form.coeffs[a, b]
            if v != 0.0:
                entries.append({"ij": list(I), "kl": list(J), "value": float(v)})
    doc = {"n": n, "p": form.p, "q": form.q, "entries": entries}
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


# -- projection onto the symmetric Bianchi subspace ------------------------


@lru_cache(maxsize=None)
def bianchi_projector(n: int) -> np.ndarray:
    """Orthogonal projector (on vectorized (2,2) matrices) onto the
    symmetric first-Bianchi subspace, built from the identity's linear
    constraints plus the symmetry constraints."""
    dim = AlgebraContext(n).dim(2)
    ranks = _ranks(n, 2)
    rows = []
    # symmetry: A[a,b] - A[b,a] = 0
    for a in range(dim):
        for b in range(a + 1, dim):
            row = np.zeros(dim * dim)
            row[a * dim + b] = 1.0
            row[b * dim + a] = -1.0
            rows.append(row)
    # Bianchi: alternating sum over x-triples against every y
    for X in subsets(n, 3):
        for y in range(1, n + 1):
            row = np.zeros(dim * dim)
            nonzero = False
            for j, xj in enumerate(X, start=1):
                s = insertion_sign(xj, (y,))
                if s is None:
                    continue
                left = tuple(i for i in X if i != xj)
                right = tuple(sorted((xj, y)))
                sign = -s if j % 2 else s
                row[ranks[left] * dim + ranks[right]] += sign
                nonzero = True
            if nonzero:
                rows.append(row)
    C = np.vstack(rows)
    P = np.eye(dim * dim) - np.linalg.pinv(C) @ C
    P.setflags(write=False)
    return P


def project_bianchi(form: DoubleForm) -> DoubleForm:
    """Orthogonal projection of a (2,2) form onto the Bianchi subspace."""
    if form.degree != (2, 2):
        raise ValueError(f"expected a (2,2) form, got {form.degree}")
    n = form.ctx.n
    P = bianchi_projector(n)
    vec = P @ form.coeffs.reshape(-1)
    return DoubleForm(2, 2, vec.reshape(form.coeffs.shape), form.ctx)
