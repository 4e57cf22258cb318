"""Tuples of square non-negative-integer matrices acting like a based ring.

A MatrixModule records one rank x rank matrix per basis label (the identity
label always acts as the identity matrix).  Candidate modules produced by the
search are canonicalized by simultaneous row/column permutation so that each
equivalence class has a single representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .basedring import BasedRing

Matrix = tuple[tuple[int, ...], ...]

__all__ = [
    "Matrix",
    "MatrixModule",
    "identity_matrix",
    "zero_matrix",
    "trivial_module",
    "module_from_mats",
    "satisfies_ring_relations",
    "is_transitive",
    "canonical_module",
]


def identity_matrix(rank: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))


def zero_matrix(rank: int) -> Matrix:
    return tuple((0,) * rank for _ in range(rank))


def _mat_mul(x: Matrix, y: Matrix) -> Matrix:
    rank = len(x)
    return tuple(
        tuple(sum(x[i][p] * y[p][j] for p in range(rank)) for j in range(rank))
        for i in range(rank)
    )


@dataclass(frozen=True)
class MatrixModule:
    """A candidate transitive based module: one matrix per basis label.

    Each matrix counts direct-sum multiplicities of the action of its basis
    element.  The companion matrices counting composition multiplicities are
    the transposes taken at the involuted labels; the rings built here have
    identity involution (all basis words are palindromes), so that companion
    data adds no extra constraint and is not stored.
    """

    labels: tuple[str, ...]
    identity: int
    rank: int
    mats: tuple[Matrix, ...]

    def mat(self, label: str) -> Matrix:
        return self.mats[self.labels.index(label)]

    def trace(self, b: int | str) -> int:
        i = b if isinstance(b, int) else self.labels.index(b)
        return sum(self.mats[i][j][j] for j in range(self.rank))

    def flat(self) -> tuple[tuple[int, ...], ...]:
        """Row-major entries of every non-identity matrix, in label order."""
        return tuple(
            tuple(v for row in mat for v in row)
            for i, mat in enumerate(self.mats)
            if i != self.identity
        )

    def key(self) -> tuple:
        """Dedup/sort key: (rank, flattened non-identity matrices)."""
        return (self.rank, self.flat())


def module_from_mats(
    ring: BasedRing, rank: int, mats: dict[int, Matrix] | list[Matrix]
) -> MatrixModule:
    if isinstance(mats, dict):
        full = [
            identity_matrix(rank) if i == ring.identity else mats[i]
            for i in range(ring.size)
        ]
    else:
        full = list(mats)
    return MatrixModule(ring.labels, ring.identity, rank, tuple(full))


def trivial_module(ring: BasedRing) -> MatrixModule:
    """Rank one, every non-identity basis element acting by zero."""
    mats = {i: zero_matrix(1) for i in range(ring.size) if i != ring.identity}
    return module_from_mats(ring, 1, mats)


def satisfies_ring_relations(ring: BasedRing, module: MatrixModule) -> bool:
    """Full re-verification M_x M_y == sum_z c[x][y][z] M_z by plain matrix
    multiplication, independent of any search pruning."""
    rank = module.rank
    if module.mats[ring.identity] != identity_matrix(rank):
        return False
    if any(v < 0 for mat in module.mats for row in mat for v in row):
        return False
    for x in range(ring.size):
        for y in range(ring.size):
            product = _mat_mul(module.mats[x], module.mats[y])
            want = [[0] * rank for _ in range(rank)]
            for z in range(ring.size):
                coeff = ring.c[x][y][z]
                if coeff:
                    mz = module.mats[z]
                    for i in range(rank):
                        for j in range(rank):
                            want[i][j] += coeff * mz[i][j]
            if product != tuple(tuple(row) for row in want):
                return False
    return True


def is_transitive(module: MatrixModule) -> bool:
    """Every position (i, j) is hit by a strictly positive entry of some M_b."""
    rank = module.rank
    for i in range(rank):
        for j in range(rank):
            if not any(mat[i][j] > 0 for mat in module.mats):
                return False
    return True


def canonical_module(module: MatrixModule) -> MatrixModule:
    """Lexicographically smallest simultaneous row/column permutation."""
    rank = module.rank
    non_identity = [i for i in range(len(module.mats)) if i != module.identity]
    best: tuple | None = None
    best_mats: list[Matrix] | None = None
    for perm in permutations(range(rank)):
        permuted = [
            tuple(
                tuple(module.mats[b][perm[i]][perm[j]] for j in range(rank))
                for i in range(rank)
            )
            for b in non_identity
        ]
        flat = tuple(v for mat in permuted for row in mat for v in row)
        if best is None or flat < best:
            best = flat
            best_mats = permuted
    assert best_mats is not None
    mats = list(module.mats)
    for b, mat in zip(non_identity, best_mats):
        mats[b] = mat
    return MatrixModule(module.labels, module.identity, rank, tuple(mats))
