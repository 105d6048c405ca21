"""Generated unital *-closed matrix algebras and their invariant subspaces.

An algebra is carried by a linear basis that is orthonormal under the
trace inner product ``<a, b> = tr(a^* b)``; no block-decomposition
structure theory is ever assumed.  The lattice of subspaces invariant
under the commutant (equivalently: whose projector lies in the algebra)
is the orthomodular lattice all higher layers are built on.
"""

from __future__ import annotations

import dataclasses

import numpy as np

from .numfield import (
    InputError,
    NumericalError,
    Subspace,
    as_matrix,
    columns_outside,
    frob,
    join_subspace,
    kernel,
    mat_residual,
    meet_subspace,
    ortho_complement,
    subspace_residual,
    tolerances,
    zero_subspace,
)
from .reporting import CheckReport, ReportBuilder, derive_seed

# relative eigenvalue-gap threshold for grouping spectral projections
CLUSTER_GAP = 1e-6


class StarAlgebra:
    """Unital *-closed subalgebra of n x n complex matrices."""

    def __init__(self, dim: int, generators, basis):
        self.dim = int(dim)
        self.generators = tuple(as_matrix(g) for g in generators)
        self.basis = tuple(as_matrix(b) for b in basis)
        for m in self.generators + self.basis:
            if m.shape != (self.dim, self.dim):
                raise InputError("algebra elements must be square of the ambient size")
        # rows are trace-orthonormal iff they are orthonormal as vectors
        self._vec = (
            np.stack([b.reshape(-1) for b in self.basis])
            if self.basis
            else np.zeros((0, self.dim * self.dim), dtype=np.complex128)
        )
        gram = self._vec.conj() @ self._vec.T
        if mat_residual(gram, np.eye(len(self.basis))) > tolerances().eq:
            raise InputError("algebra basis is not trace-orthonormal")
        if self.membership_residual(np.eye(self.dim)) > tolerances().eq:
            raise InputError("identity is not in the span of the basis")
        self._commutant = None

    @property
    def linear_dim(self) -> int:
        return len(self.basis)

    def coefficients(self, x) -> np.ndarray:
        """Expansion coefficients of x against the orthonormal basis."""
        x = as_matrix(x)
        if x.shape != (self.dim, self.dim):
            raise InputError("dimension mismatch")
        return self._vec.conj() @ x.reshape(-1)

    def project(self, x) -> np.ndarray:
        return (self.coefficients(x) @ self._vec).reshape(self.dim, self.dim)

    def membership_residual(self, x) -> float:
        x = as_matrix(x)
        return frob(x - self.project(x)) / max(1.0, frob(x))

    def contains(self, x) -> bool:
        return self.membership_residual(x) <= tolerances().eq

    @property
    def commutant(self) -> "StarAlgebra":
        if self._commutant is None:
            self._commutant = commutant(self)
        return self._commutant

    def same_span(self, other: "StarAlgebra") -> bool:
        if self.dim != other.dim or self.linear_dim != other.linear_dim:
            return False
        return all(other.contains(b) for b in self.basis)

    def closure_residual(self) -> float:
        """Worst membership residual over pairwise products and adjoints."""
        worst = 0.0
        for a in self.basis:
            worst = max(worst, self.membership_residual(a.conj().T))
            for b in self.basis:
                worst = max(worst, self.membership_residual(a @ b))
        return worst

    def hermitian_sample(self, rng: np.random.Generator) -> np.ndarray:
        """Random self-adjoint element (Gaussian coefficients on the basis)."""
        c = rng.standard_normal(self.linear_dim) + 1j * rng.standard_normal(self.linear_dim)
        x = (c @ self._vec).reshape(self.dim, self.dim)
        return (x + x.conj().T) / 2.0

    def __repr__(self):
        return f"StarAlgebra(dim={self.dim}, linear_dim={self.linear_dim})"


def _orthonormalize_span(mats, n: int) -> list[np.ndarray]:
    """Trace-orthonormal basis of the span of the given matrices."""
    if not mats:
        return []
    stacked = np.stack([m.reshape(-1) for m in mats])
    _, s, vh = np.linalg.svd(stacked, full_matrices=False)
    if s.size == 0 or s[0] <= tolerances().rank:
        return []
    r = int(np.count_nonzero(s > tolerances().rank * s[0]))
    return [vh[i].reshape(n, n) for i in range(r)]


def generate_algebra(n: int, gens) -> StarAlgebra:
    """Smallest unital *-closed algebra containing the generators.

    The closure loop multiplies all current basis pairs and
    re-orthonormalizes until the linear dimension stabilizes; since the
    dimension grows strictly until then, it terminates within n^2 rounds.
    """
    gens = [as_matrix(g) for g in gens]
    for g in gens:
        if g.shape != (n, n):
            raise InputError("generators must be n x n")
    seed_mats = [np.eye(n, dtype=np.complex128)]
    for g in gens:
        seed_mats.append(g)
        seed_mats.append(g.conj().T)
    basis = _orthonormalize_span(seed_mats, n)
    for _ in range(n * n + 1):
        k = len(basis)
        stacked = np.stack([b.reshape(-1) for b in basis])
        prods = np.einsum("aij,bjk->abik", np.stack(basis), np.stack(basis))
        candidates = np.vstack([stacked, prods.reshape(k * k, n * n)])
        basis = _orthonormalize_span(list(candidates.reshape(-1, n, n)), n)
        if len(basis) == k:
            break
    else:
        raise NumericalError("algebra closure failed to stabilize")
    return StarAlgebra(n, gens, basis)


def commutant(a: StarAlgebra) -> StarAlgebra:
    """All matrices commuting with the algebra.

    Solves x g = g x for a spanning family as one stacked kernel problem
    (row-major vec: x -> gx - xg is kron(g, I) - kron(I, g^T)).
    """
    n = a.dim
    eye = np.eye(n, dtype=np.complex128)
    # commuting is linear in the fixed side, so the basis suffices
    rows = [np.kron(g, eye) - np.kron(eye, g.T) for g in a.basis]
    stacked = (
        np.vstack(rows) if rows else np.zeros((0, n * n), dtype=np.complex128)
    )
    null = kernel(stacked)
    basis = [null.frame[:, i].reshape(n, n) for i in range(null.dim)]
    return StarAlgebra(n, basis, basis)


def contains(a: StarAlgebra, x) -> bool:
    return a.contains(x)


@dataclasses.dataclass(frozen=True, eq=False)
class InvariantSubspace:
    """A certified member of the invariant-subspace lattice of an algebra."""

    subspace: Subspace
    algebra: StarAlgebra


def is_member_XAprime(a: StarAlgebra, s: Subspace) -> bool:
    """Does the subspace belong to the lattice X(A')?

    Two criteria are evaluated: the projector lies in the algebra, and
    the subspace is invariant under a basis of the commutant.  They must
    agree; a disagreement beyond tolerance is a numerical inconsistency.
    """
    if s.ambient_dim != a.dim:
        raise InputError("ambient dimension mismatch")
    proj_residual = a.membership_residual(s.projector())
    by_projector = proj_residual <= tolerances().eq
    inv_residual = 0.0
    if s.dim > 0:
        for c in a.commutant.basis:
            moved = c @ s.frame
            inv_residual = max(
                inv_residual, columns_outside(moved, s) / max(1.0, frob(moved))
            )
    by_invariance = inv_residual <= tolerances().eq
    if by_projector != by_invariance:
        raise NumericalError(
            "membership criteria disagree: projector residual "
            f"{proj_residual:.3e}, invariance residual {inv_residual:.3e}"
        )
    return by_projector


def certify_member(a: StarAlgebra, s: Subspace) -> InvariantSubspace:
    if not is_member_XAprime(a, s):
        raise InputError("subspace is not a member of the invariant lattice")
    return InvariantSubspace(s, a)


def random_projection_in(a: StarAlgebra, seed: int) -> InvariantSubspace:
    """Seeded random member of X(A').

    Draws a random self-adjoint element of the algebra, groups its
    eigenvalues into clusters separated by more than CLUSTER_GAP times
    the spectral spread, and keeps a random subset of the cluster
    eigenspaces.  The result always certifies; degenerate draws are
    retried up to 16 times.
    """
    for attempt in range(16):
        rng = np.random.default_rng([int(seed), attempt])
        h = a.hermitian_sample(rng)
        vals, vecs = np.linalg.eigh(h)
        spread = float(vals[-1] - vals[0]) if vals.size else 0.0
        if spread <= 1e-12 * max(1.0, float(np.abs(vals).max(initial=0.0))):
            clusters = [list(range(a.dim))]
        else:
            clusters = [[0]]
            for i in range(1, a.dim):
                if vals[i] - vals[i - 1] > CLUSTER_GAP * spread:
                    clusters.append([])
                clusters[-1].append(i)
        chosen = rng.integers(0, 2, size=len(clusters)).astype(bool)
        cols = [vecs[:, idx] for c, keep in zip(clusters, chosen) if keep for idx in c]
        sub = (
            Subspace(np.column_stack(cols)) if cols else zero_subspace(a.dim)
        )
        try:
            return certify_member(a, sub)
        except (InputError, NumericalError):
            continue
    raise NumericalError("no certified spectral projection after 16 attempts")


def _same_algebra(m: InvariantSubspace, n: InvariantSubspace) -> StarAlgebra:
    if m.algebra is n.algebra or m.algebra.same_span(n.algebra):
        return m.algebra
    raise InputError("operands belong to different algebras")


def oml_meet(m: InvariantSubspace, n: InvariantSubspace) -> InvariantSubspace:
    a = _same_algebra(m, n)
    return certify_member(a, meet_subspace(m.subspace, n.subspace))


def oml_join(m: InvariantSubspace, n: InvariantSubspace) -> InvariantSubspace:
    a = _same_algebra(m, n)
    return certify_member(a, join_subspace(m.subspace, n.subspace))


def oml_complement(m: InvariantSubspace) -> InvariantSubspace:
    return certify_member(m.algebra, ortho_complement(m.subspace))


def is_perp(m: InvariantSubspace, n: InvariantSubspace) -> bool:
    _same_algebra(m, n)
    return n.subspace.contained_in(ortho_complement(m.subspace))


def partial_oplus(m: InvariantSubspace, n: InvariantSubspace):
    """Orthogonal sum; returns None when the operands are not orthogonal.

    Undefinedness is a first-class outcome of the partial operation, not
    an error.
    """
    if not is_perp(m, n):
        return None
    return oml_join(m, n)


def check_orthomodular(a: StarAlgebra, samples: int, seed: int) -> CheckReport:
    """Sampled orthomodular law: m <= n implies m v (m* ^ n) = n."""
    from .jsonio import subspace_to_json

    rb = ReportBuilder("orthomodular", samples, seed, tolerances().eq)
    for i in range(samples):
        n_member = random_projection_in(a, derive_seed(seed, i, 0))
        m_raw = random_projection_in(a, derive_seed(seed, i, 1))
        m_sub = meet_subspace(m_raw.subspace, n_member.subspace)
        lhs = join_subspace(
            m_sub, meet_subspace(ortho_complement(m_sub), n_member.subspace)
        )
        rb.record(
            subspace_residual(lhs, n_member.subspace),
            lambda m=m_sub, n=n_member: {
                "m": subspace_to_json(m),
                "n": subspace_to_json(n.subspace),
            },
        )
    return rb.build()
