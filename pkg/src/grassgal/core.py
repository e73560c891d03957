"""Partitions, Schubert problems, and 0/1 boundary encodings on a Grassmannian.

A Schubert condition on G(k,n) is indexed by a partition fitting in the
k x (n-k) box.  A problem is a list of such conditions; it is
zero-dimensional (has a finite answer) exactly when the weights add up to
k(n-k).  Conditions are also encoded as binary strings of length n with k
ones: the one for the i-th largest part sits at position n-k+i-parts[i]
(1-indexed), so the empty partition reads 0^(n-k) 1^k and the full box reads
1^k 0^(n-k).  That bijection is what the puzzle and tournament modules
consume.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator


class BoxViolation(ValueError):
    """A partition does not fit in the k x (n-k) box of the shape."""


class DimensionError(ValueError):
    """A problem is not zero-dimensional where a finite answer is required."""


@dataclass(frozen=True)
class GrassmannianShape:
    """The Grassmannian G(k,n) of k-planes in n-space."""

    k: int
    n: int

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise ValueError(f"need 0 < k < n, got k={self.k}, n={self.n}")

    @property
    def cols(self) -> int:
        return self.n - self.k

    @property
    def dimension(self) -> int:
        return self.k * (self.n - self.k)

    def dual(self) -> "GrassmannianShape":
        return GrassmannianShape(self.n - self.k, self.n)

    def __str__(self) -> str:
        return f"G({self.k},{self.n})"

    @classmethod
    def parse(cls, text: str) -> "GrassmannianShape":
        m = re.fullmatch(r"\s*[Gg]?\s*\(?\s*(\d+)\s*,\s*(\d+)\s*\)?\s*", text)
        if m is None:
            raise ValueError(f"cannot parse Grassmannian shape from {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))


class Partition:
    """A weakly decreasing tuple of positive parts (trailing zeros dropped)."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def fits(self, shape: GrassmannianShape) -> bool:
        return len(self.parts) <= shape.k and (not self.parts or self.parts[0] <= shape.cols)

    def require_fits(self, shape: GrassmannianShape) -> None:
        if not self.fits(shape):
            raise BoxViolation(f"{self} does not fit in the {shape.k}x{shape.cols} box of {shape}")

    def contains(self, other: "Partition") -> bool:
        """Containment of Young diagrams."""
        if len(other.parts) > len(self.parts):
            return False
        return all(s >= o for s, o in zip(self.parts, other.parts))

    def sort_key(self):
        """Canonical order: heavier first, then reverse-lexicographic."""
        return (-self.weight, tuple(-p for p in self.parts))


def transpose(alpha: Partition) -> Partition:
    """Conjugate partition (column lengths of the diagram)."""
    if not alpha.parts:
        return Partition()
    cols = [0] * alpha.parts[0]
    for p in alpha.parts:
        for j in range(p):
            cols[j] += 1
    return Partition(cols)


def box_complement(alpha: Partition, shape: GrassmannianShape) -> Partition:
    """Complement of the diagram in the k x (n-k) box, rotated by a half turn.

    An involution; weights of a partition and its complement add up to the
    box area k(n-k).
    """
    alpha.require_fits(shape)
    padded = list(alpha.parts) + [0] * (shape.k - len(alpha.parts))
    return Partition(shape.cols - p for p in reversed(padded))


class BoundaryString:
    """A binary word of length n with exactly k ones.

    These words are in bijection with partitions in the k x (n-k) box and
    label the sides of puzzle boards.
    """

    __slots__ = ("bits",)

    def __init__(self, bits: str):
        if not bits or any(ch not in "01" for ch in bits):
            raise ValueError(f"boundary must be a nonempty 0/1 string, got {bits!r}")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("BoundaryString is immutable")

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def k(self) -> int:
        return self.bits.count("1")

    def reversed(self) -> "BoundaryString":
        return BoundaryString(self.bits[::-1])

    def __eq__(self, other) -> bool:
        return isinstance(other, BoundaryString) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __str__(self) -> str:
        return self.bits

    def __repr__(self) -> str:
        return f"BoundaryString({self.bits!r})"


def partition_to_boundary(alpha: Partition, shape: GrassmannianShape) -> BoundaryString:
    """Encode a box partition as its 0/1 word.

    The one for the i-th part (1-indexed, largest first, missing parts count
    as 0) lands at position n-k+i-parts[i].
    """
    alpha.require_fits(shape)
    bits = ["0"] * shape.n
    padded = list(alpha.parts) + [0] * (shape.k - len(alpha.parts))
    for i, part in enumerate(padded, start=1):
        bits[shape.cols + i - part - 1] = "1"
    return BoundaryString("".join(bits))


def boundary_to_partition(b: BoundaryString, shape: GrassmannianShape) -> Partition:
    """Inverse of :func:`partition_to_boundary`."""
    if b.n != shape.n or b.k != shape.k:
        raise ValueError(f"{b!r} is not a boundary word for {shape}")
    ones = [p for p, ch in enumerate(b.bits, start=1) if ch == "1"]
    return Partition(shape.cols + i - p for i, p in enumerate(ones, start=1))


class SchubertProblem:
    """An ordered list of nonempty box partitions on a fixed Grassmannian.

    The order is kept (choice trees depend on it) but two problems compare
    equal when their condition multisets agree.
    """

    __slots__ = ("shape", "conditions")

    def __init__(self, shape: GrassmannianShape, conditions: Iterable[Partition]):
        conditions = tuple(conditions)
        if not conditions:
            raise ValueError("a Schubert problem needs at least one condition")
        for c in conditions:
            if not c:
                raise ValueError("empty partitions are not admitted as conditions")
            c.require_fits(shape)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "conditions", conditions)

    def __setattr__(self, name, value):
        raise AttributeError("SchubertProblem is immutable")

    @property
    def total_weight(self) -> int:
        return sum(c.weight for c in self.conditions)

    def is_zero_dimensional(self) -> bool:
        return self.total_weight == self.shape.dimension

    def require_zero_dimensional(self) -> None:
        if not self.is_zero_dimensional():
            raise DimensionError(
                f"total codimension {self.total_weight} != dim {self.shape} = {self.shape.dimension}"
            )

    def canonical(self) -> "SchubertProblem":
        """Same multiset of conditions in the canonical order."""
        return SchubertProblem(self.shape, sorted(self.conditions, key=Partition.sort_key))

    def reordered(self, order: Iterable[int]) -> "SchubertProblem":
        return SchubertProblem(self.shape, (self.conditions[i] for i in order))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SchubertProblem)
            and self.shape == other.shape
            and sorted(self.conditions, key=Partition.sort_key)
            == sorted(other.conditions, key=Partition.sort_key)
        )

    def __hash__(self) -> int:
        return hash((self.shape, tuple(sorted(self.conditions, key=Partition.sort_key))))

    def __str__(self) -> str:
        return f"{self.shape}: {render_conditions(self.conditions)}"

    def __repr__(self) -> str:
        return f"SchubertProblem({self.shape}, {list(self.conditions)})"


def render_conditions(conditions) -> str:
    """Exponent notation for a condition list, e.g. ``(2,2) (1)^5``."""
    out = []
    i = 0
    conditions = list(conditions)
    while i < len(conditions):
        j = i
        while j < len(conditions) and conditions[j] == conditions[i]:
            j += 1
        out.append(str(conditions[i]) + (f"^{j - i}" if j - i > 1 else ""))
        i = j
    return " ".join(out)


_CONDITION_RE = re.compile(r"\(\s*(\d+(?:\s*,\s*\d+)*)?\s*\)(?:\s*\^\s*(\d+))?")


def parse_conditions(text: str) -> list[Partition]:
    """Parse the ``(a,b)^r (c)^s`` grammar; raises with the bad position."""
    conditions: list[Partition] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _CONDITION_RE.match(text, pos)
        if m is None:
            raise ValueError(f"syntax error in problem string at position {pos}: {text[pos:]!r}")
        body, exponent = m.group(1), m.group(2)
        if body is None:
            raise ValueError(f"empty partition at position {pos} is not a valid condition")
        parts = [int(tok) for tok in body.split(",")]
        try:
            partition = Partition(parts)
        except ValueError as exc:
            raise ValueError(f"bad partition at position {pos}: {exc}") from None
        if not partition:
            raise ValueError(f"empty partition at position {pos} is not a valid condition")
        conditions.extend([partition] * (int(exponent) if exponent else 1))
        pos = m.end()
    if not conditions:
        raise ValueError("no conditions found")
    return conditions


def parse_problem(text: str, shape: GrassmannianShape) -> SchubertProblem:
    """Parse a problem in the exponent grammar against a shape."""
    return SchubertProblem(shape, parse_conditions(text))


def box_partitions(shape: GrassmannianShape, weight: int | None = None) -> list[Partition]:
    """All partitions in the k x (n-k) box, optionally filtered by weight.

    Sorted in the canonical condition order.
    """
    found: list[Partition] = []

    def rec(prefix: list[int], maxpart: int, rows_left: int):
        found.append(Partition(prefix))
        if rows_left == 0:
            return
        for p in range(maxpart, 0, -1):
            rec(prefix + [p], p, rows_left - 1)

    rec([], shape.cols, shape.k)
    if weight is not None:
        found = [p for p in found if p.weight == weight]
    return sorted(found, key=Partition.sort_key)


def is_primitive(problem: SchubertProblem) -> bool:
    """True when no condition meets the right column or bottom row of the box.

    Such problems are not induced from a smaller Grassmannian.
    """
    k, cols = problem.shape.k, problem.shape.cols
    return all(len(c) <= k - 1 and c[0] <= cols - 1 for c in problem.conditions)


def enumerate_problems(
    shape: GrassmannianShape,
    min_conditions: int = 2,
    primitive_only: bool = False,
) -> Iterator[SchubertProblem]:
    """Yield every zero-dimensional problem on the shape exactly once.

    Each problem is a multiset of at least ``min_conditions`` nonempty box
    partitions of total weight k(n-k), emitted with conditions in canonical
    order, in a deterministic overall order.
    """
    pool = [p for p in box_partitions(shape) if p]
    target = shape.dimension

    def rec(start: int, weight_left: int, chosen: list[Partition]):
        if weight_left == 0:
            if len(chosen) >= min_conditions:
                problem = SchubertProblem(shape, chosen)
                if not primitive_only or is_primitive(problem):
                    yield problem
            return
        for i in range(start, len(pool)):
            p = pool[i]
            if p.weight <= weight_left:
                chosen.append(p)
                yield from rec(i, weight_left - p.weight, chosen)
                chosen.pop()

    yield from rec(0, target, [])
