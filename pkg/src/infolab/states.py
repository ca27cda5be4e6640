"""Qubit state representations and the Born-rule bridge to outcome statistics.

Density matrices are the canonical state representation; Bloch vectors are a
derived view (this extends cleanly to two-qubit states).  All containers are
immutable value types and every operation is pure, so everything here is safe
to share across threads.

Tolerances: algebraic identities are enforced at 1e-12, orthonormality of
measurement triads at 1e-10 (hand-typed vectors deserve a little slack).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

ATOL = 1e-12
TRIAD_ATOL = 1e-10

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULIS = np.stack([PAULI_X, PAULI_Y, PAULI_Z])
IDENTITY2 = np.eye(2, dtype=complex)


def _frozen(values, dtype) -> np.ndarray:
    arr = np.array(values, dtype=dtype, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class ProbDist:
    """Validated discrete probability distribution over n >= 2 outcomes.

    Entries must lie in [0, 1] and sum to 1, both within 1e-12.
    """

    probs: np.ndarray

    def __post_init__(self):
        probs = np.asarray(self.probs, dtype=float).reshape(-1)
        if probs.size < 2:
            raise ValueError(f"need at least 2 outcomes, got {probs.size}")
        if np.any(probs < -ATOL) or np.any(probs > 1.0 + ATOL):
            raise ValueError(f"probabilities outside [0, 1]: {probs.tolist()}")
        total = float(probs.sum())
        if abs(total - 1.0) > ATOL:
            raise ValueError(f"probabilities sum to {total!r}, expected 1")
        object.__setattr__(self, "probs", _frozen(probs, float))

    @property
    def n(self) -> int:
        return self.probs.size

    def __iter__(self):
        return iter(self.probs)


def as_probdist(p) -> ProbDist:
    """Coerce a sequence of probabilities (or pass through a ProbDist)."""
    return p if isinstance(p, ProbDist) else ProbDist(p)


@dataclass(frozen=True, eq=False)
class QubitState:
    """Single-qubit density matrix (2x2, Hermitian, unit trace, positive)."""

    rho: np.ndarray

    def __post_init__(self):
        rho = np.asarray(self.rho, dtype=complex)
        if rho.shape != (2, 2):
            raise ValueError(f"density matrix must be 2x2, got shape {rho.shape}")
        _check_density(rho, ATOL)
        object.__setattr__(self, "rho", _frozen(rho, complex))

    @property
    def bloch(self) -> np.ndarray:
        """Bloch vector r with r_k = Re tr(rho sigma_k)."""
        return np.real(np.einsum("kij,ji->k", PAULIS, self.rho))

    @property
    def purity(self) -> float:
        return float(np.real(np.trace(self.rho @ self.rho)))

    def is_pure(self, atol: float = ATOL) -> bool:
        return abs(self.purity - 1.0) <= atol


def _check_density(rho: np.ndarray, atol: float) -> None:
    if np.max(np.abs(rho - rho.conj().T)) > atol:
        raise ValueError("density matrix is not Hermitian")
    trace = complex(np.trace(rho))
    if abs(trace - 1.0) > atol:
        raise ValueError(f"density matrix trace is {trace}, expected 1")
    if float(np.min(np.linalg.eigvalsh(rho))) < -atol:
        raise ValueError("density matrix has a negative eigenvalue")


def as_qubit_state(state) -> QubitState:
    return state if isinstance(state, QubitState) else QubitState(state)


@dataclass(frozen=True, eq=False)
class Direction:
    """Unit vector in real 3-space (norm 1 within 1e-12)."""

    vec: np.ndarray

    def __post_init__(self):
        vec = np.asarray(self.vec, dtype=float).reshape(-1)
        if vec.shape != (3,):
            raise ValueError(f"direction must have 3 components, got {vec.shape}")
        norm = float(np.linalg.norm(vec))
        if abs(norm - 1.0) > ATOL:
            raise ValueError(f"direction norm is {norm!r}, expected 1")
        object.__setattr__(self, "vec", _frozen(vec, float))

    @classmethod
    def normalized(cls, values) -> "Direction":
        """Build a Direction by rescaling an arbitrary nonzero 3-vector."""
        vec = np.asarray(values, dtype=float).reshape(-1)
        norm = float(np.linalg.norm(vec))
        if norm <= 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(vec / norm)


def as_direction(d) -> Direction:
    return d if isinstance(d, Direction) else Direction(d)


X_DIR = Direction((1.0, 0.0, 0.0))
Y_DIR = Direction((0.0, 1.0, 0.0))
Z_DIR = Direction((0.0, 0.0, 1.0))


@dataclass(frozen=True, eq=False)
class MeasurementTriad:
    """Right-handed set of three mutually orthogonal measurement directions."""

    n1: Direction
    n2: Direction
    n3: Direction

    def __post_init__(self):
        object.__setattr__(self, "n1", as_direction(self.n1))
        object.__setattr__(self, "n2", as_direction(self.n2))
        object.__setattr__(self, "n3", as_direction(self.n3))
        mat = self.matrix
        gram = mat @ mat.T
        if np.max(np.abs(gram - np.eye(3))) > TRIAD_ATOL:
            raise ValueError("triad directions are not mutually orthogonal")
        det = float(np.linalg.det(mat))
        if abs(det - 1.0) > TRIAD_ATOL:
            raise ValueError(f"triad is not right-handed (det = {det!r})")

    @property
    def matrix(self) -> np.ndarray:
        """3x3 matrix whose rows are the triad directions."""
        return np.stack([self.n1.vec, self.n2.vec, self.n3.vec])

    @property
    def directions(self) -> tuple[Direction, Direction, Direction]:
        return (self.n1, self.n2, self.n3)

    @classmethod
    def from_matrix(cls, rows) -> "MeasurementTriad":
        rows = np.asarray(rows, dtype=float)
        if rows.shape != (3, 3):
            raise ValueError(f"triad matrix must be 3x3, got {rows.shape}")
        return cls(Direction(rows[0]), Direction(rows[1]), Direction(rows[2]))


CANONICAL_TRIAD = MeasurementTriad(X_DIR, Y_DIR, Z_DIR)


def bloch_from_density(state) -> np.ndarray:
    """Bloch vector of a qubit state, r_k = Re tr(rho sigma_k).

    Accepts a QubitState or a raw 2x2 matrix; raw input is validated first,
    so non-Hermitian or non-unit-trace matrices are rejected.
    """
    return as_qubit_state(state).bloch


def density_from_bloch(r) -> QubitState:
    """Qubit state (I + r . sigma) / 2 for a Bloch vector inside the unit ball."""
    r = np.asarray(r, dtype=float).reshape(-1)
    if r.shape != (3,):
        raise ValueError(f"Bloch vector must have 3 components, got {r.shape}")
    norm = float(np.linalg.norm(r))
    if norm > 1.0 + ATOL:
        raise ValueError(f"Bloch vector norm {norm!r} is outside the unit ball")
    rho = 0.5 * (IDENTITY2 + np.einsum("k,kij->ij", r, PAULIS))
    return QubitState(rho)


def born_probabilities(state, direction) -> ProbDist:
    """Spin up/down probabilities along a direction: p = (1 +- d.r) / 2."""
    r = as_qubit_state(state).bloch
    d = as_direction(direction).vec
    overlap = float(np.dot(d, r))
    return ProbDist((0.5 * (1.0 + overlap), 0.5 * (1.0 - overlap)))


# Seeded pseudo-randomness uses NumPy's default_rng (PCG64) throughout so the
# suite is reproducible: the same seed always yields the same draws.

def random_pure_state(seed=None) -> QubitState:
    """Pure qubit state drawn uniformly from the Bloch sphere surface."""
    rng = np.random.default_rng(seed)
    vec = rng.normal(size=3)
    norm = float(np.linalg.norm(vec))
    while norm < 1e-12:  # astronomically rare; keeps the draw well-defined
        vec = rng.normal(size=3)
        norm = float(np.linalg.norm(vec))
    return density_from_bloch(vec / norm)


def random_triad(seed=None) -> MeasurementTriad:
    """Measurement triad drawn uniformly from the rotation group SO(3).

    Gaussian 3x3 -> QR with the sign-fixed R diagonal gives Haar O(3);
    flipping the last row on det = -1 maps that onto uniform SO(3).
    """
    rng = np.random.default_rng(seed)
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q = q * np.sign(np.diagonal(r))
    if np.linalg.det(q) < 0.0:
        q[2, :] = -q[2, :]
    return MeasurementTriad.from_matrix(q)


_NAMED_BLOCH = {
    "plus-x": (1.0, 0.0, 0.0),
    "minus-x": (-1.0, 0.0, 0.0),
    "plus-y": (0.0, 1.0, 0.0),
    "minus-y": (0.0, -1.0, 0.0),
    "plus-z": (0.0, 0.0, 1.0),
    "minus-z": (0.0, 0.0, -1.0),
    "mixed": (0.0, 0.0, 0.0),
}


def named_state(name: str) -> QubitState:
    """Look up a named single-qubit state ("plus-z", "minus-x", ..., "mixed")."""
    try:
        return density_from_bloch(_NAMED_BLOCH[name])
    except KeyError:
        known = ", ".join(sorted(_NAMED_BLOCH))
        raise ValueError(f"unknown state name {name!r} (known: {known})") from None
