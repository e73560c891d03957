"""Pure-Python counting kernel for puzzle boards and tournament chains.

The compiled extension (grassgal._speedups) implements the same three entry
points; grassgal._kernel picks one at import time.  Keep the two in sync:
the choice-tree semantics of the whole package are defined by the transition
tables below.

Boards are upward triangles of side n, filled row by row, top row first,
left to right, each upward triangle immediately followed by the downward
triangle to its right.  Edge labels are 0, 1, or 2, where 2 marks the glued
edge inside a rhombus.  Legal pieces, as (left, right, bottom) for upward
and (left, right, top) for downward triangles:

    up:   (0,0,0) (1,1,1) (1,0,2) (2,1,0) (0,2,1)
    down: (0,0,0) (1,1,1) (0,1,2) (1,2,0) (2,0,1)

A placement at the cursor is legal when the upward triangle matches its
determined edges, its bottom edge is not a glue label on the last row, and
the downward neighbour it forces (if any) admits a piece.  At most two
placements are ever legal, and exactly two only when (left, top) = (1, 0)
away from the last row; that is the binary stay/swap choice the tournament
tree records.  The tree keeps a move only when the resulting position still
completes the current board; a game none of whose moves complete is a dead
end of the whole tournament.  Branch leaf counts, however, are counted
through the full chain of games, so a kept branch can still carry zero
leaves when a later product vanishes.
"""

from __future__ import annotations

import sys

# (right, bottom) continuations of an upward triangle by its left label;
# plain triangle before rhombus half, which fixes the child order of the tree.
UP_OPTIONS = {
    0: ((0, 0), (2, 1)),
    1: ((1, 1), (0, 2)),
    2: ((1, 0),),
}

# (left, top) -> right for downward triangles.
DOWN_RIGHT = {
    (0, 0): 0,
    (1, 1): 1,
    (0, 2): 1,
    (1, 0): 2,
    (2, 1): 0,
}

_MIN_RECURSION = 50_000


def _labels(bits: str) -> tuple[int, ...]:
    return tuple(1 if ch == "1" else 0 for ch in bits)


def _word(labels) -> str:
    return "".join("1" if x == 1 else "0" for x in labels)


def _fill_row(r, n, frontier, nw_label, ne_label, target):
    """All output frontiers of row r (0-based) reachable from `frontier`.

    Distinct fill paths of a row have distinct bottom rows, so no
    multiplicities are needed.  `target` pins the bottom labels (used for a
    fixed south boundary on the last row).
    """
    last = r == n - 1
    results = []

    def step(i, carry, acc):
        if i == r:
            for right, bottom in UP_OPTIONS[carry]:
                if right != ne_label:
                    continue
                if last and bottom == 2:
                    continue
                if target is not None and bottom != target[i]:
                    continue
                results.append(acc + (bottom,))
            return
        t = frontier[i]
        for right, bottom in UP_OPTIONS[carry]:
            if last and bottom == 2:
                continue
            if target is not None and bottom != target[i]:
                continue
            down = DOWN_RIGHT.get((right, t))
            if down is None:
                continue
            step(i + 1, down, acc + (bottom,))

    step(0, nw_label, ())
    return results


def count_completions(n: int, nw: str, ne: str, s: str) -> int:
    """Exact number of legal fillings with the given side words.

    nw and ne are read top to bottom, s left to right.
    """
    nwl, nel, sl = _labels(nw), _labels(ne), _labels(s)
    frontiers = {(): 1}
    for r in range(n):
        target = sl if r == n - 1 else None
        nxt: dict[tuple, int] = {}
        for f, c in frontiers.items():
            for out in _fill_row(r, n, f, nwl[r], nel[r], target):
                nxt[out] = nxt.get(out, 0) + c
        if not nxt:
            return 0
        frontiers = nxt
    return frontiers.get(sl, 0)


def expand(n: int, nw: str, ne: str) -> dict[str, int]:
    """Completion counts of the free-bottom board, keyed by south word."""
    nwl, nel = _labels(nw), _labels(ne)
    frontiers = {(): 1}
    for r in range(n):
        nxt: dict[tuple, int] = {}
        for f, c in frontiers.items():
            for out in _fill_row(r, n, f, nwl[r], nel[r], None):
                nxt[out] = nxt.get(out, 0) + c
        if not nxt:
            return {}
        frontiers = nxt
    return {_word(f): c for f, c in frontiers.items()}


def analyze_problem(n: int, condition_words: list[str], record: bool = False):
    """Leaf count and bifurcation records of the tournament chain.

    The chain multiplies the conditions left to right; every game is the
    free-bottom board between the accumulated word (reversed onto the NW
    side) and the next condition (NE side).  Returns

        (total, records, game_values)

    where records hold one entry per distinct bifurcating state,
    ``(game_index, acc_word, state_key, left_count, right_count)``, and
    game_values maps (game_index, acc_word) to the leaf count below that
    game's start.  States are shared, so counts are exact full-tree leaf
    counts even though the unfolded tree may be huge.
    """
    m = len(condition_words)
    if m == 1:
        return 1, [], {}
    sys.setrecursionlimit(max(sys.getrecursionlimit(), _MIN_RECURSION))
    conds = [_labels(w) for w in condition_words]
    records: list[tuple] = []
    game_values: dict[tuple[int, str], int] = {}

    def cont(g: int, acc: tuple[int, ...]) -> int:
        if g == m:
            # weight bookkeeping forces the full-box word 1^k 0^(n-k) here
            assert tuple(sorted(acc, reverse=True)) == acc, acc
            return 1
        key = (g, _word(acc))
        v = game_values.get(key)
        if v is None:
            v = _game_value(g, acc)
            game_values[key] = v
        return v

    def _game_value(g: int, acc: tuple[int, ...]) -> int:
        nw = acc[::-1]
        ne = conds[g]
        memo: dict[tuple, tuple[int, bool]] = {}
        acc_word = _word(acc)

        def walk(r, i, carry, tail, prefix):
            """Chain leaf count and local completability of a fill state."""
            key = (r, i, carry, tail, prefix)
            v = memo.get(key)
            if v is not None:
                return v
            last = r == n - 1
            live = []
            if i == r:
                for right, bottom in UP_OPTIONS[carry]:
                    if right != ne[r] or (last and bottom == 2):
                        continue
                    out = prefix + (bottom,)
                    if last:
                        live.append(cont(g + 1, out))
                    else:
                        value, ok = walk(r + 1, 0, nw[r + 1], out, ())
                        if ok:
                            live.append(value)
            else:
                t = tail[0]
                for right, bottom in UP_OPTIONS[carry]:
                    if last and bottom == 2:
                        continue
                    down = DOWN_RIGHT.get((right, t))
                    if down is None:
                        continue
                    value, ok = walk(r, i + 1, down, tail[1:], prefix + (bottom,))
                    if ok:
                        live.append(value)
            v = (sum(live), bool(live))
            if record and len(live) == 2:
                records.append((g, acc_word, key, live[0], live[1]))
            memo[key] = v
            return v

        return walk(0, 0, nw[0], (), ())[0]

    total = cont(1, conds[0])
    return total, records, game_values
