"""Counting puzzle fillings: Littlewood-Richardson numbers and problem degrees.

A board is an upward triangle of side n whose unit edges carry labels 0 or
1.  The three legal pieces are the 0-triangle, the 1-triangle, and a rhombus
(an upward and a downward triangle glued along an edge) whose two edges
parallel to the glue on one side carry 1 and the other two carry 0; pieces
may be rotated, never reflected.  Writing word(a) for the 0/1 word of a box
partition (see core), the coefficient of gamma in the product of the classes
of alpha and beta equals the number of complete fillings of the board with

    northwest side = word(alpha) reversed   (read top to bottom),
    northeast side = word(beta)             (read top to bottom),
    south side     = word(gamma)            (read left to right);

reversing a word is the same as complementing the partition in the box.
Counting is a scanline sweep memoized on (row, frontier) in the selected
kernel; counts are exact arbitrary-precision integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import _kernel
from ._fallback import DOWN_RIGHT, UP_OPTIONS, _labels, _word
from .core import (
    BoundaryString,
    GrassmannianShape,
    Partition,
    SchubertProblem,
    boundary_to_partition,
    partition_to_boundary,
)


class BoundaryError(ValueError):
    """Puzzle side words of inconsistent length or one-count."""


def _bits(b) -> str:
    return b.bits if isinstance(b, BoundaryString) else str(b)


def count_completions(nw, ne, s) -> int:
    """Number of legal fillings of the board with the given side words."""
    nw, ne, s = _bits(nw), _bits(ne), _bits(s)
    n = len(nw)
    if len(ne) != n or len(s) != n:
        raise BoundaryError(f"side lengths differ: {len(nw)}, {len(ne)}, {len(s)}")
    if nw.count("1") != ne.count("1") or nw.count("1") != s.count("1"):
        raise BoundaryError(
            f"side one-counts differ: {nw.count('1')}, {ne.count('1')}, {s.count('1')}"
        )
    return _kernel.count_completions(n, nw, ne, s)


def lr_coefficient(
    alpha: Partition, beta: Partition, gamma: Partition, shape: GrassmannianShape
) -> int:
    """Structure constant of the product of two Schubert classes."""
    for p in (alpha, beta, gamma):
        p.require_fits(shape)
    if alpha.weight + beta.weight != gamma.weight:
        return 0
    return count_completions(
        partition_to_boundary(alpha, shape).reversed(),
        partition_to_boundary(beta, shape),
        partition_to_boundary(gamma, shape),
    )


@dataclass(frozen=True)
class Expansion:
    """A nonnegative combination of Schubert classes, as partition -> count."""

    terms: dict

    def __getitem__(self, gamma: Partition) -> int:
        return self.terms.get(gamma, 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms, key=Partition.sort_key))

    def items(self):
        return [(g, self.terms[g]) for g in self]

    def __eq__(self, other) -> bool:
        if isinstance(other, Expansion):
            return self.terms == other.terms
        return self.terms == other

    def __str__(self) -> str:
        return " + ".join(
            (f"{c}*{g}" if c != 1 else str(g)) for g, c in self.items()
        ) or "0"


def expand_pair(alpha: Partition, beta: Partition, shape: GrassmannianShape) -> Expansion:
    """Product of two Schubert classes, truncated to the box.

    Empty when the product vanishes (weight exceeds the box).
    """
    alpha.require_fits(shape)
    beta.require_fits(shape)
    if alpha.weight + beta.weight > shape.dimension:
        return Expansion({})
    nw = partition_to_boundary(alpha, shape).reversed().bits
    ne = partition_to_boundary(beta, shape).bits
    raw = _kernel.expand(shape.n, nw, ne)
    terms = {
        boundary_to_partition(BoundaryString(word), shape): c for word, c in raw.items()
    }
    return Expansion(terms)


def problem_degree(problem: SchubertProblem) -> int:
    """Answer to a zero-dimensional Schubert problem.

    Folds expand_pair over the conditions left to right and reads off the
    coefficient of the point class (the full box).
    """
    problem.require_zero_dimensional()
    shape = problem.shape
    conds = [partition_to_boundary(c, shape).bits for c in problem.conditions]
    coeffs: dict[str, int] = {conds[0]: 1}
    for beta in conds[1:]:
        nxt: dict[str, int] = {}
        for acc, c in coeffs.items():
            for word, mult in _kernel.expand(shape.n, acc[::-1], beta).items():
                nxt[word] = nxt.get(word, 0) + c * mult
        if not nxt:
            return 0
        coeffs = nxt
    box = "1" * shape.k + "0" * shape.cols
    return coeffs.get(box, 0)


@dataclass(frozen=True)
class PuzzleBoard:
    """A board of side n with fixed NW/NE words and an optional south word."""

    side: int
    nw: BoundaryString
    ne: BoundaryString
    s: BoundaryString | None = None

    def __post_init__(self):
        sides = [self.nw, self.ne] + ([self.s] if self.s is not None else [])
        for b in sides:
            if b.n != self.side:
                raise BoundaryError(f"side word {b} does not have length {self.side}")
        if len({b.k for b in sides}) != 1:
            raise BoundaryError("side words must all carry the same number of ones")

    @classmethod
    def for_product(
        cls, alpha: Partition, beta: Partition, shape: GrassmannianShape
    ) -> "PuzzleBoard":
        return cls(
            shape.n,
            partition_to_boundary(alpha, shape).reversed(),
            partition_to_boundary(beta, shape),
        )


@dataclass(frozen=True)
class PuzzleState:
    """A partially filled board: cursor position plus scanline frontier.

    ``tail`` holds the not-yet-consumed bottom labels of the previous row,
    ``prefix`` the bottom labels already laid in the current row, ``carry``
    the left edge of the upward triangle at the cursor.  ``rows`` keeps the
    completed frontier rows so a finished state can be rendered.
    """

    board: PuzzleBoard
    row: int = 0
    pos: int = 0
    carry: int = -1
    tail: tuple = ()
    prefix: tuple = ()
    rows: tuple = ()

    @classmethod
    def initial(cls, board: PuzzleBoard) -> "PuzzleState":
        return cls(board, 0, 0, _labels(board.nw.bits)[0], (), (), ())

    @property
    def is_complete(self) -> bool:
        return self.row == self.board.side

    def south_word(self) -> str:
        if not self.is_complete:
            raise ValueError("puzzle not complete")
        return _word(self.rows[-1])

    def successors(self) -> list["PuzzleState"]:
        """Legal placements at the cursor, plain triangle first.

        Placing the upward triangle also places the downward neighbour it
        forces, so every state has at most two successors.
        """
        if self.is_complete:
            return []
        board = self.board
        n = board.side
        r, i = self.row, self.pos
        last = r == n - 1
        ne = _labels(board.ne.bits)
        target = _labels(board.s.bits) if (board.s is not None and last) else None
        out = []
        for right, bottom in UP_OPTIONS[self.carry]:
            if last and bottom == 2:
                continue
            if target is not None and bottom != target[i]:
                continue
            if i == r:
                if right != ne[r]:
                    continue
                frontier = self.prefix + (bottom,)
                if last:
                    out.append(
                        PuzzleState(board, n, 0, -1, (), (), self.rows + (frontier,))
                    )
                else:
                    nw = _labels(board.nw.bits)
                    out.append(
                        PuzzleState(
                            board, r + 1, 0, nw[r + 1], frontier, (), self.rows + (frontier,)
                        )
                    )
            else:
                down = DOWN_RIGHT.get((right, self.tail[0]))
                if down is None:
                    continue
                out.append(
                    PuzzleState(
                        board, r, i + 1, down, self.tail[1:], self.prefix + (bottom,), self.rows
                    )
                )
        return out


def enumerate_completions(nw, ne, s=None, limit: int | None = None) -> Iterator[PuzzleState]:
    """Depth-first enumeration of complete fillings (small boards only)."""
    nw, ne = BoundaryString(_bits(nw)), BoundaryString(_bits(ne))
    s = BoundaryString(_bits(s)) if s is not None else None
    board = PuzzleBoard(nw.n, nw, ne, s)
    stack = [PuzzleState.initial(board)]
    found = 0
    while stack:
        state = stack.pop()
        if state.is_complete:
            yield state
            found += 1
            if limit is not None and found >= limit:
                return
        else:
            stack.extend(reversed(state.successors()))


def render_completion(state: PuzzleState) -> str:
    """Stable textual dump of a completed puzzle: n lines of edge labels.

    Line r (1-based) lists the r horizontal edge labels under row r, left to
    right: 0, 1, or x for the glued edge of a rhombus standing across two
    rows.  The lines determine the filling completely.
    """
    if not state.is_complete:
        raise ValueError("puzzle not complete")
    return "\n".join(
        "".join("x" if v == 2 else str(v) for v in row) for row in state.rows
    )
