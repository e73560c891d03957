"""Littlewood-Richardson numbers by the classical skew-tableau rule.

This module exists to cross-check the puzzle engine and deliberately shares
no code with it.  lr_oracle counts fillings of the skew diagram gamma/alpha
with content beta such that rows weakly increase, columns strictly increase,
and the reverse reading word (right to left along each row, rows top to
bottom) is a lattice word.  It is written for clarity, not speed.
"""

from __future__ import annotations

from .core import DimensionError, Partition, SchubertProblem, box_partitions


def lr_oracle(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """Number of LR skew tableaux of shape gamma/alpha and content beta."""
    if not gamma.contains(alpha):
        return 0
    if alpha.weight + beta.weight != gamma.weight:
        return 0
    if not beta:
        return 1

    # Cells in reverse reading order: rows top to bottom, right to left.
    outer = list(gamma.parts)
    inner = list(alpha.parts) + [0] * (len(outer) - len(alpha.parts))
    cells = [(r, c) for r in range(len(outer)) for c in range(outer[r] - 1, inner[r] - 1, -1)]

    nvals = len(beta.parts)
    entry: dict[tuple[int, int], int] = {}
    counts = [0] * (nvals + 1)

    def place(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        total = 0
        for v in range(1, nvals + 1):
            if counts[v] >= beta.parts[v - 1]:
                continue
            # lattice property of the reverse reading word, prefix by prefix
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            # rows weakly increase left to right
            right = entry.get((r, c + 1))
            if right is not None and v > right:
                continue
            # columns strictly increase top to bottom
            above = entry.get((r - 1, c))
            if above is not None and v <= above:
                continue
            entry[(r, c)] = v
            counts[v] += 1
            total += place(idx + 1)
            counts[v] -= 1
            del entry[(r, c)]
        return total

    return place(0)


def degree_oracle(problem: SchubertProblem) -> int:
    """Answer to a zero-dimensional problem via repeated lr_oracle expansion.

    Folds the conditions left to right, discarding intermediate partitions
    that leave the k x (n-k) box, and reads off the coefficient of the full
    box.  Same contract as puzzles.problem_degree, independent machinery.
    """
    problem.require_zero_dimensional()
    shape = problem.shape
    conditions = problem.conditions
    coeffs: dict[Partition, int] = {conditions[0]: 1}
    for beta in conditions[1:]:
        nxt: dict[Partition, int] = {}
        for delta, c in coeffs.items():
            w = delta.weight + beta.weight
            if w > shape.dimension:
                continue
            for gamma in box_partitions(shape, weight=w):
                m = lr_oracle(delta, beta, gamma)
                if m:
                    nxt[gamma] = nxt.get(gamma, 0) + c * m
        coeffs = nxt
        if not coeffs:
            return 0
    box = Partition([shape.cols] * shape.k)
    return coeffs.get(box, 0)
