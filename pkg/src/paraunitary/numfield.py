"""Tolerance-governed dense complex linear algebra and subspace calculus.

Every rank decision in the package goes through singular values with a
single relative cutoff, and every equality is relative to
``max(1, operand norms)``.  Subspaces are stored as orthonormal frames;
the zero subspace is a frame with zero columns, never ``None``.
"""

from __future__ import annotations

import contextlib
import dataclasses

import numpy as np


class InputError(ValueError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class NumericalError(RuntimeError):
    """Validation or numerical-consistency failure (CLI exit code 1)."""


@dataclasses.dataclass(frozen=True)
class Tolerances:
    """Numerical policy shared by all modules.

    rank: relative singular-value cutoff for rank decisions.
    eq:   equality tolerance, relative to max(1, operand norms).
    trim: relative threshold below which Laurent coefficients are dropped.
    """

    rank: float = 1e-9
    eq: float = 1e-8
    trim: float = 1e-10

    def __post_init__(self):
        if not (self.rank > 0.0 and self.eq > 0.0 and self.trim > 0.0):
            raise InputError("tolerances must be strictly positive")
        if self.rank > 1e-6:
            raise InputError("rank cutoff must not exceed 1e-6")


_ACTIVE = Tolerances()


def tolerances() -> Tolerances:
    """The currently active tolerance configuration."""
    return _ACTIVE


def set_tolerances(tol: Tolerances) -> None:
    global _ACTIVE
    if not isinstance(tol, Tolerances):
        raise InputError("expected a Tolerances instance")
    _ACTIVE = tol


@contextlib.contextmanager
def tolerance_scope(**overrides):
    """Temporarily override tolerance fields (keyword form of the dataclass)."""
    previous = _ACTIVE
    set_tolerances(dataclasses.replace(previous, **overrides))
    try:
        yield tolerances()
    finally:
        set_tolerances(previous)


def as_matrix(m) -> np.ndarray:
    """Coerce to a finite complex 2-d array; reject NaN/Inf."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise InputError(f"expected a 2-d matrix, got ndim={a.ndim}")
    if not np.isfinite(a).all():
        raise InputError("matrix has non-finite entries")
    return a


def frob(m) -> float:
    return float(np.linalg.norm(m))


def mat_residual(a, b) -> float:
    """Relative distance ||a-b||_F / max(1, ||a||_F, ||b||_F)."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.shape != b.shape:
        raise InputError(f"shape mismatch {a.shape} vs {b.shape}")
    return frob(a - b) / max(1.0, frob(a), frob(b))


def mats_close(a, b) -> bool:
    return mat_residual(a, b) <= tolerances().eq


def _rank_from_singular_values(s: np.ndarray) -> int:
    # relative cutoff; an all-zero spectrum gets rank 0 (absolute floor).
    if s.size == 0 or s[0] <= tolerances().rank:
        return 0
    return int(np.count_nonzero(s > tolerances().rank * s[0]))


class Subspace:
    """Closed subspace of C^n held as a frame with orthonormal columns."""

    __slots__ = ("frame",)

    def __init__(self, frame):
        f = as_matrix(frame)
        gram = f.conj().T @ f
        if mat_residual(gram, np.eye(f.shape[1])) > tolerances().eq:
            raise InputError("frame columns are not orthonormal")
        self.frame = f

    @property
    def ambient_dim(self) -> int:
        return self.frame.shape[0]

    @property
    def dim(self) -> int:
        return self.frame.shape[1]

    def projector(self) -> np.ndarray:
        return self.frame @ self.frame.conj().T

    def contained_in(self, other: "Subspace") -> bool:
        """Inclusion test via the residual ||(I - pi_other) frame||_F."""
        return self.inclusion_residual(other) <= tolerances().eq

    def inclusion_residual(self, other: "Subspace") -> float:
        if self.ambient_dim != other.ambient_dim:
            raise InputError("ambient dimension mismatch")
        return columns_outside(self.frame, other)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def columns_outside(cols: np.ndarray, s: Subspace) -> float:
    """How far the columns of ``cols`` stick out of ``s`` (Frobenius norm)."""
    if cols.shape[0] != s.ambient_dim:
        raise InputError("ambient dimension mismatch")
    residual = cols - s.frame @ (s.frame.conj().T @ cols)
    return frob(residual)


def zero_subspace(n: int) -> Subspace:
    return Subspace(np.zeros((n, 0), dtype=np.complex128))


def full_subspace(n: int) -> Subspace:
    return Subspace(np.eye(n, dtype=np.complex128))


def orthonormal_basis(cols) -> Subspace:
    """Orthonormal frame for the numerical column space of ``cols``."""
    c = as_matrix(cols)
    if c.shape[1] == 0:
        return zero_subspace(c.shape[0])
    u, s, _ = np.linalg.svd(c, full_matrices=False)
    return Subspace(u[:, : _rank_from_singular_values(s)])


def kernel(m) -> Subspace:
    """Orthonormal basis of {x : m x = 0} from the small singular vectors."""
    a = as_matrix(m)
    rows, n = a.shape
    if rows == 0:
        return full_subspace(n)
    _, s, vh = np.linalg.svd(a, full_matrices=True)
    r = _rank_from_singular_values(s)
    return Subspace(vh[r:].conj().T)


def meet_subspace(a: Subspace, b: Subspace) -> Subspace:
    """Intersection, as the kernel of x -> ((I - pi_a)x, (I - pi_b)x)."""
    if a.ambient_dim != b.ambient_dim:
        raise InputError("ambient dimension mismatch")
    n = a.ambient_dim
    eye = np.eye(n, dtype=np.complex128)
    stacked = np.vstack([eye - a.projector(), eye - b.projector()])
    return kernel(stacked)


def join_subspace(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise InputError("ambient dimension mismatch")
    return orthonormal_basis(np.hstack([a.frame, b.frame]))


def ortho_complement(s: Subspace) -> Subspace:
    return kernel(s.frame.conj().T)


def projector(s: Subspace) -> np.ndarray:
    return s.projector()


def subspace_from_projector(p) -> Subspace:
    """Recover the subspace from a self-adjoint idempotent matrix."""
    a = as_matrix(p)
    if a.shape[0] != a.shape[1]:
        raise InputError("projector must be square")
    scale = max(1.0, frob(a))
    if frob(a - a.conj().T) > tolerances().eq * scale:
        raise InputError("matrix is not self-adjoint")
    if frob(a @ a - a) > tolerances().eq * scale:
        raise InputError("matrix is not idempotent")
    s = orthonormal_basis(a)
    if mat_residual(s.projector(), a) > tolerances().eq:
        raise NumericalError("projector round-trip failed")
    return s


def same_subspace(a: Subspace, b: Subspace) -> bool:
    return subspace_residual(a, b) <= tolerances().eq


def subspace_residual(a: Subspace, b: Subspace) -> float:
    """Relative projector distance between two subspaces."""
    if a.ambient_dim != b.ambient_dim:
        raise InputError("ambient dimension mismatch")
    return mat_residual(a.projector(), b.projector())
