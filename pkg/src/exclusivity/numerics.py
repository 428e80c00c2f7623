"""Complex linear algebra for small Hilbert spaces (dim <= 8).

State vectors and Hermitian operators are immutable wrappers around
complex128 arrays; every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, NotHermitian, NotNormalized, NotOrthogonal

NORM_TOL = 1e-9
ORTHO_TOL = 1e-9
HERMITIAN_TOL = 1e-12


def _frozen(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=np.complex128)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class StateVector:
    """A vector of complex amplitudes; unit-norm when built via `normalize`."""

    amps: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        arr = _frozen(np.asarray(self.amps).reshape(-1))
        if not np.all(np.isfinite(arr.view(np.float64))):
            raise ValueError("amplitudes must be finite")
        object.__setattr__(self, "amps", arr)

    @property
    def dim(self) -> int:
        return self.amps.shape[0]

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    @classmethod
    def normalize(cls, amps) -> "StateVector":
        arr = np.asarray(amps, dtype=np.complex128).reshape(-1)
        norm = np.linalg.norm(arr)
        if norm == 0.0 or not np.isfinite(norm):
            raise ValueError("cannot normalize a zero or non-finite vector")
        return cls(arr / norm)

    @classmethod
    def basis_state(cls, dim: int, index: int) -> "StateVector":
        arr = np.zeros(dim, dtype=np.complex128)
        arr[index] = 1.0
        return cls(arr)

    def require_unit(self, tol: float = NORM_TOL) -> None:
        if abs(self.norm - 1.0) > tol:
            raise NotNormalized(f"norm {self.norm!r} deviates from 1 by more than {tol}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.dim == other.dim and bool(np.array_equal(self.amps, other.amps))

    def __hash__(self) -> int:
        return hash(self.amps.tobytes())


@dataclass(frozen=True)
class HermitianOperator:
    """A dense Hermitian matrix, validated at construction."""

    entries: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        arr = _frozen(np.asarray(self.entries))
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("entries must form a square matrix")
        if not np.all(np.isfinite(arr.view(np.float64))):
            raise ValueError("entries must be finite")
        if np.max(np.abs(arr - arr.conj().T)) > HERMITIAN_TOL:
            raise NotHermitian("matrix deviates from its conjugate transpose")
        object.__setattr__(self, "entries", arr)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def inner_product(a: StateVector, b: StateVector) -> complex:
    """Return <a|b> with the first argument conjugated."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"dims differ: {a.dim} vs {b.dim}")
    return complex(np.vdot(a.amps, b.amps))


def probability(state: StateVector, event_vec: StateVector) -> float:
    """Born-rule probability |<event|state>|^2 for unit vectors."""
    state.require_unit()
    event_vec.require_unit()
    return float(abs(inner_product(event_vec, state)) ** 2)


def sum_of_projectors(vectors: list[StateVector]) -> HermitianOperator:
    """Sum of rank-1 projectors |v><v| over the given unit vectors."""
    if not vectors:
        raise ValueError("need at least one vector")
    dim = vectors[0].dim
    total = np.zeros((dim, dim), dtype=np.complex128)
    for v in vectors:
        if v.dim != dim:
            raise DimensionMismatch("projector vectors must share one dimension")
        total += np.outer(v.amps, v.amps.conj())
    # Symmetrize away float round-off so the Hermiticity invariant holds exactly.
    total = (total + total.conj().T) / 2.0
    return HermitianOperator(total)


def max_eigenpair(op: HermitianOperator | np.ndarray) -> tuple[float, StateVector]:
    """Largest eigenvalue and a unit eigenvector of a Hermitian operator."""
    if isinstance(op, HermitianOperator):
        mat = op.entries
    else:
        mat = np.asarray(op, dtype=np.complex128)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError("operator must be a square matrix")
        if np.max(np.abs(mat - mat.conj().T)) > HERMITIAN_TOL:
            raise NotHermitian("matrix deviates from its conjugate transpose")
    eigenvalues, eigenvectors = np.linalg.eigh(mat)
    top = StateVector(eigenvectors[:, -1])
    return float(eigenvalues[-1]), top


def orthonormal_complement(vectors: list[StateVector]) -> list[StateVector]:
    """Extend pairwise-orthogonal unit vectors to an orthonormal basis.

    Completion vectors come from Gram-Schmidt over the standard basis:
    at each step the lowest-index standard basis vector with a nonzero
    residual outside the current span is orthogonalized and appended,
    so the result is deterministic.
    """
    if not vectors:
        raise ValueError("need at least one input vector")
    dim = vectors[0].dim
    for v in vectors:
        if v.dim != dim:
            raise DimensionMismatch("inputs must share one dimension")
    for i, a in enumerate(vectors):
        for j in range(i + 1, len(vectors)):
            if abs(inner_product(a, vectors[j])) > ORTHO_TOL:
                raise NotOrthogonal(f"inputs {i} and {j} overlap beyond {ORTHO_TOL}")
    if len(vectors) >= dim:
        raise ValueError("input already spans the space; nothing to complete")

    span = [v.amps.astype(np.complex128) for v in vectors]
    completion: list[StateVector] = []
    for k in range(dim):
        if len(span) == dim:
            break
        candidate = np.zeros(dim, dtype=np.complex128)
        candidate[k] = 1.0
        # Two projection passes keep the Gram matrix at identity to ~1e-15.
        for _ in range(2):
            for basis_vec in span:
                candidate -= np.vdot(basis_vec, candidate) * basis_vec
        residual = np.linalg.norm(candidate)
        if residual <= 1e-6:
            continue
        candidate /= residual
        span.append(candidate)
        completion.append(StateVector(candidate))
    return completion
