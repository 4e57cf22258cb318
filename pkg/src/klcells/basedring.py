"""Positively based rings with an identity basis element.

Houses the generic container (labels, non-negative integer structure
constants, an anti-involution permuting the basis) plus the two constructors
used throughout: the subquotient ring Q_n spanned by e and the KL elements
that start and end with s (with the longest-element coefficient deleted from
products), and its subring A_n spanned by e and s alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import klring
from .klring import CellPartition

__all__ = [
    "BasedRing",
    "RingError",
    "TruncationError",
    "RingFormatError",
    "RingViolation",
    "RingReport",
    "restrict_constants",
    "subquotient_qn",
    "subring_an",
    "verify",
    "cells_of",
    "ring_products",
    "ring_to_text",
    "ring_from_text",
]


class RingError(ValueError):
    """A based-ring axiom failed."""


class TruncationError(RingError):
    """A product left the expected span before truncation."""


class RingFormatError(ValueError):
    """A serialized ring file could not be parsed."""


@dataclass(frozen=True)
class BasedRing:
    """A ring with a distinguished basis and non-negative structure constants.

    c[x][y][z] is the coefficient of basis element z in the product x * y.
    The involution is a permutation of basis indices acting as an
    anti-automorphism; for the rings built here every basis word is a
    palindrome, so it is the identity permutation.
    """

    labels: tuple[str, ...]
    c: tuple[tuple[tuple[int, ...], ...], ...]
    identity: int = 0
    involution: tuple[int, ...] = field(default=())
    name: str = ""

    def __post_init__(self) -> None:
        if not self.involution:
            object.__setattr__(self, "involution", tuple(range(len(self.labels))))

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no basis element labeled {label!r}") from None

    def product(self, x: int | str, y: int | str) -> tuple[int, ...]:
        i = x if isinstance(x, int) else self.index(x)
        j = y if isinstance(y, int) else self.index(y)
        return self.c[i][j]

    def is_commutative(self) -> bool:
        return all(
            self.c[i][j] == self.c[j][i]
            for i in range(self.size)
            for j in range(i + 1, self.size)
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.c, self.identity, self.involution))


@dataclass(frozen=True)
class RingViolation:
    axiom: str
    witness: tuple
    message: str


@dataclass(frozen=True)
class RingReport:
    ok: bool
    violations: tuple[RingViolation, ...]

    def summary(self) -> str:
        if self.ok:
            return "all based-ring axioms hold"
        lines = [f"{len(self.violations)} violation(s):"]
        lines += [f"  {v.axiom} at {v.witness}: {v.message}" for v in self.violations]
        return "\n".join(lines)


def verify(ring: BasedRing) -> RingReport:
    """Re-check every based-ring axiom; returns a report with witnesses."""
    out: list[RingViolation] = []
    size = ring.size
    c = ring.c
    if sorted(ring.involution) != list(range(size)):
        out.append(RingViolation("involution", (), "not a permutation of the basis"))
        return RingReport(False, tuple(out))
    if len(set(ring.labels)) != size:
        out.append(RingViolation("labels", (), "labels are not distinct"))
    for i in range(size):
        for j in range(size):
            row = c[i][j]
            if len(row) != size:
                out.append(RingViolation("shape", (i, j), "row of wrong length"))
                return RingReport(False, tuple(out))
            for z in range(size):
                if row[z] < 0:
                    out.append(
                        RingViolation(
                            "positivity", (i, j, z), f"coefficient {row[z]} < 0"
                        )
                    )
    e = ring.identity
    for j in range(size):
        for z in range(size):
            want = 1 if z == j else 0
            if c[e][j][z] != want:
                out.append(RingViolation("left-identity", (j, z), "e*y != y"))
            if c[j][e][z] != want:
                out.append(RingViolation("right-identity", (j, z), "x*e != x"))
    for x in range(size):
        for y in range(size):
            for z in range(size):
                for v in range(size):
                    lhs = sum(c[x][y][u] * c[u][z][v] for u in range(size))
                    rhs = sum(c[y][z][u] * c[x][u][v] for u in range(size))
                    if lhs != rhs:
                        out.append(
                            RingViolation(
                                "associativity", (x, y, z, v), f"{lhs} != {rhs}"
                            )
                        )
    inv = ring.involution
    for x in range(size):
        for y in range(size):
            for z in range(size):
                if c[x][y][z] != c[inv[y]][inv[x]][inv[z]]:
                    out.append(
                        RingViolation(
                            "anti-involution",
                            (x, y, z),
                            f"{c[x][y][z]} != {c[inv[y]][inv[x]][inv[z]]}",
                        )
                    )
    return RingReport(not out, tuple(out))


def _checked(ring: BasedRing) -> BasedRing:
    report = verify(ring)
    if not report.ok:
        raise RingError(report.summary())
    return ring


def restrict_constants(
    constants: klring.KLStructureConstants,
    keep: Sequence[int],
    deletable: Sequence[int] = (),
    name: str = "",
) -> BasedRing:
    """Restrict a structure-constant table to a span, deleting coefficients at
    the deletable indices; raises if any product leaves span + deletable."""
    allowed = set(keep) | set(deletable)
    labels = tuple(constants.labels[i] for i in keep)
    table = []
    for i in keep:
        row = []
        for j in keep:
            full = constants.c[i][j]
            bad = [z for z, a in enumerate(full) if a != 0 and z not in allowed]
            if bad:
                names = [constants.labels[z] for z in bad]
                raise TruncationError(
                    f"product {constants.labels[i]}*{constants.labels[j]} has "
                    f"support outside the span: {names}"
                )
            row.append(tuple(full[z] for z in keep))
        table.append(tuple(row))
    return _checked(BasedRing(labels, tuple(table), keep.index(0) if 0 in keep else 0, name=name))


def subquotient_qn(n: int) -> BasedRing:
    """The based ring Q_n on {e} + {alternating s...s words of odd length < n}.

    Structure constants are the KL constants of ZD_2n restricted to that span,
    with the w0 coefficient deleted.  Any product whose support leaves
    span + {w0} would contradict the cell-theoretic closure and raises.
    """
    if n < 3:
        raise ValueError(f"subquotient ring needs n >= 3, got {n}")
    constants = klring.structure_constants(n)
    keep = [0] + [
        i
        for i, el in enumerate(constants.elements)
        if el.start == "s" and el.length % 2 == 1 and el.length < n
    ]
    w0 = len(constants.elements) - 1
    return restrict_constants(constants, keep, deletable=[w0], name=f"Q{n}")


def subring_an(n: int) -> BasedRing:
    """The subring A_n on {e, s}; closed in ZD_2n, no truncation involved."""
    if n < 3:
        raise ValueError(f"subring needs n >= 3, got {n}")
    constants = klring.structure_constants(n)
    return restrict_constants(constants, [0, constants.index("s")], name=f"A{n}")


def cells_of(ring: BasedRing) -> CellPartition:
    return klring.compute_cells(ring.labels, ring.c, ring.identity)


# -- serialization ------------------------------------------------------------

_FORMAT_HEADER = "basedring v1"


def ring_to_text(ring: BasedRing) -> str:
    """Serialize to the line-oriented exchange format.

    Layout: a header, the ordered labels, the identity label, the involution
    images in basis order, then one "c x y z value" line per non-zero
    structure constant, in basis order.
    """
    lines = [
        f"# {_FORMAT_HEADER}",
        "labels " + " ".join(ring.labels),
        f"identity {ring.labels[ring.identity]}",
        "involution " + " ".join(ring.labels[i] for i in ring.involution),
    ]
    for x, lx in enumerate(ring.labels):
        for y, ly in enumerate(ring.labels):
            for z, lz in enumerate(ring.labels):
                value = ring.c[x][y][z]
                if value:
                    lines.append(f"c {lx} {ly} {lz} {value}")
    return "\n".join(lines) + "\n"


def ring_products(ring: BasedRing) -> Iterable[tuple[str, str, tuple[int, ...]]]:
    """All (x label, y label, product row) triples, in basis order."""
    for x, lx in enumerate(ring.labels):
        for y, ly in enumerate(ring.labels):
            yield lx, ly, ring.c[x][y]


def ring_from_text(text: str, name: str = "custom") -> BasedRing:
    """Parse the exchange format and validate every ring axiom."""
    labels: tuple[str, ...] | None = None
    identity_label: str | None = None
    involution_labels: Sequence[str] | None = None
    quadruples: list[tuple[str, str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key, args = parts[0], parts[1:]
        if key == "labels":
            labels = tuple(args)
        elif key == "identity":
            if len(args) != 1:
                raise RingFormatError(f"line {lineno}: identity takes one label")
            identity_label = args[0]
        elif key == "involution":
            involution_labels = args
        elif key == "c":
            if len(args) != 4:
                raise RingFormatError(f"line {lineno}: expected 'c x y z value'")
            try:
                value = int(args[3])
            except ValueError:
                raise RingFormatError(
                    f"line {lineno}: coefficient {args[3]!r} is not an integer"
                ) from None
            quadruples.append((args[0], args[1], args[2], value))
        else:
            raise RingFormatError(f"line {lineno}: unknown directive {key!r}")
    if labels is None or identity_label is None:
        raise RingFormatError("file must declare 'labels' and 'identity'")
    if len(set(labels)) != len(labels):
        raise RingFormatError("labels are not distinct")
    index = {label: i for i, label in enumerate(labels)}
    if identity_label not in index:
        raise RingFormatError(f"identity {identity_label!r} is not a label")
    if involution_labels is None:
        involution = tuple(range(len(labels)))
    else:
        try:
            involution = tuple(index[label] for label in involution_labels)
        except KeyError as exc:
            raise RingFormatError(f"involution uses unknown label {exc}") from None
        if len(involution) != len(labels):
            raise RingFormatError("involution must list an image for every label")
    size = len(labels)
    table = [[[0] * size for _ in range(size)] for _ in range(size)]
    for lx, ly, lz, value in quadruples:
        try:
            x, y, z = index[lx], index[ly], index[lz]
        except KeyError as exc:
            raise RingFormatError(f"constant uses unknown label {exc}") from None
        table[x][y][z] = value
    frozen = tuple(tuple(tuple(row) for row in plane) for plane in table)
    return _checked(
        BasedRing(labels, frozen, index[identity_label], involution, name=name)
    )

