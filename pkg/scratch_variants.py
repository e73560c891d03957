"""Prototype: which puzzle scan variant reproduces the paper's censuses?

Twelve scan variants per game: free side in {S, NE, NW} x operand order x
chirality (the mirrored piece tables scan rows right-to-left in disguise).
"""

import sys
import time

from grassgal.core import (
    GrassmannianShape,
    enumerate_problems,
    parse_problem,
    partition_to_boundary,
    render_conditions,
)

UP = {0: ((0, 0), (2, 1)), 1: ((1, 1), (0, 2)), 2: ((1, 0),)}
DOWN = {(0, 0): 0, (1, 1): 1, (0, 2): 1, (1, 0): 2, (2, 1): 0}
UP_M = {0: ((0, 0), (1, 2)), 1: ((1, 1), (2, 0)), 2: ((0, 1),)}
DOWN_M = {(0, 0): 0, (1, 1): 1, (1, 2): 0, (2, 0): 1, (0, 1): 2}

sys.setrecursionlimit(100000)


def labels(w):
    return tuple(1 if c == "1" else 0 for c in w)


def word(ls):
    return "".join(str(x) for x in ls)


def walk_free_s(n, nw, ne, cont, recs, up, down):
    memo = {}

    def walk(r, i, carry, tail, prefix):
        key = (r, i, carry, tail, prefix)
        if key in memo:
            return memo[key]
        last = r == n - 1
        vals = []
        if i == r:
            for right, bottom in up[carry]:
                if right != ne[r] or (last and bottom == 2):
                    continue
                out = prefix + (bottom,)
                if last:
                    vals.append(cont(word(out)))
                else:
                    value, ok = walk(r + 1, 0, nw[r + 1], out, ())
                    if ok:
                        vals.append(value)
        else:
            t = tail[0]
            for right, bottom in up[carry]:
                if last and bottom == 2:
                    continue
                d = down.get((right, t))
                if d is None:
                    continue
                value, ok = walk(r, i + 1, d, tail[1:], prefix + (bottom,))
                if ok:
                    vals.append(value)
        v = (sum(vals), bool(vals))
        if len(vals) == 2:
            recs.append((vals[0], vals[1]))
        memo[key] = v
        return v

    return walk(0, 0, nw[0], (), ())[0]


def walk_free_ne(n, nw, s, cont, recs, up, down):
    memo = {}

    def walk(r, i, carry, tail, prefix, nerow):
        key = (r, i, carry, tail, prefix, nerow)
        if key in memo:
            return memo[key]
        last = r == n - 1
        vals = []
        if i == r:
            for right, bottom in up[carry]:
                if right == 2 or (last and bottom == 2):
                    continue
                if last and bottom != s[i]:
                    continue
                out = prefix + (bottom,)
                if last:
                    vals.append(cont(word(nerow + (right,))))
                else:
                    value, ok = walk(r + 1, 0, nw[r + 1], out, (), nerow + (right,))
                    if ok:
                        vals.append(value)
        else:
            t = tail[0]
            for right, bottom in up[carry]:
                if last and bottom == 2:
                    continue
                if last and bottom != s[i]:
                    continue
                d = down.get((right, t))
                if d is None:
                    continue
                value, ok = walk(r, i + 1, d, tail[1:], prefix + (bottom,), nerow)
                if ok:
                    vals.append(value)
        v = (sum(vals), bool(vals))
        if len(vals) == 2:
            recs.append((vals[0], vals[1]))
        memo[key] = v
        return v

    return walk(0, 0, nw[0], (), (), ())[0]


def walk_free_nw(n, ne, s, cont, recs, up, down):
    memo = {}

    def start_row(r, frontier, nwrow):
        key = ("row", r, frontier, nwrow)
        if key in memo:
            return memo[key]
        vals = []
        for c0 in (0, 1):
            value, ok = walk(r, 0, c0, frontier, (), nwrow + (c0,))
            if ok:
                vals.append(value)
        v = (sum(vals), bool(vals))
        if len(vals) == 2:
            recs.append((vals[0], vals[1]))
        memo[key] = v
        return v

    def walk(r, i, carry, tail, prefix, nwrow):
        key = (r, i, carry, tail, prefix, nwrow)
        if key in memo:
            return memo[key]
        last = r == n - 1
        vals = []
        if i == r:
            for right, bottom in up[carry]:
                if right != ne[r] or (last and bottom == 2):
                    continue
                if last and bottom != s[i]:
                    continue
                out = prefix + (bottom,)
                if last:
                    vals.append(cont(word(nwrow)))
                else:
                    value, ok = start_row(r + 1, out, nwrow)
                    if ok:
                        vals.append(value)
        else:
            t = tail[0]
            for right, bottom in up[carry]:
                if last and bottom == 2:
                    continue
                if last and bottom != s[i]:
                    continue
                d = down.get((right, t))
                if d is None:
                    continue
                value, ok = walk(r, i + 1, d, tail[1:], prefix + (bottom,), nwrow)
                if ok:
                    vals.append(value)
        v = (sum(vals), bool(vals))
        if len(vals) == 2:
            recs.append((vals[0], vals[1]))
        memo[key] = v
        return v

    return start_row(0, (), ())[0]


def analyze(problem, variant):
    shape = problem.shape
    n = shape.n
    conds = [partition_to_boundary(c, shape).bits for c in problem.conditions]
    m = len(conds)
    recs = []
    game_cache = {}

    def rev(w):
        return w[::-1]

    def cont(g, acc):
        if g == m:
            return 1
        key = (g, acc)
        if key in game_cache:
            return game_cache[key]
        b = conds[g]
        nxt = lambda out: cont(g + 1, out)
        nxt_rev = lambda out: cont(g + 1, rev(out))
        if variant == "A":
            v = walk_free_s(n, labels(rev(acc)), labels(b), nxt, recs, UP, DOWN)
        elif variant == "B":
            v = walk_free_s(n, labels(rev(b)), labels(acc), nxt, recs, UP, DOWN)
        elif variant == "C":
            v = walk_free_ne(n, labels(rev(b)), labels(rev(acc)), nxt_rev, recs, UP, DOWN)
        elif variant == "D":
            v = walk_free_ne(n, labels(rev(acc)), labels(rev(b)), nxt_rev, recs, UP, DOWN)
        elif variant == "E":
            v = walk_free_nw(n, labels(acc), labels(rev(b)), nxt, recs, UP, DOWN)
        elif variant == "F":
            v = walk_free_nw(n, labels(b), labels(rev(acc)), nxt, recs, UP, DOWN)
        elif variant == "MA":
            v = walk_free_s(n, labels(b), labels(rev(acc)), nxt_rev, recs, UP_M, DOWN_M)
        elif variant == "MB":
            v = walk_free_s(n, labels(acc), labels(rev(b)), nxt_rev, recs, UP_M, DOWN_M)
        elif variant == "MC":
            v = walk_free_nw(n, labels(rev(b)), labels(acc), nxt_rev, recs, UP_M, DOWN_M)
        elif variant == "MD":
            v = walk_free_nw(n, labels(rev(acc)), labels(b), nxt_rev, recs, UP_M, DOWN_M)
        elif variant == "ME":
            v = walk_free_ne(n, labels(acc), labels(b), nxt, recs, UP_M, DOWN_M)
        elif variant == "MF":
            v = walk_free_ne(n, labels(b), labels(acc), nxt, recs, UP_M, DOWN_M)
        else:
            raise ValueError(variant)
        game_cache[key] = v
        return v

    total = cont(1, conds[0])
    return total, recs


def verdict(problem, variant):
    total, recs = analyze(problem, variant)
    bad = [p for p in recs if p[0] == p[1] and p[0] >= 2]
    return ("fail" if bad else "pass"), total, bad


VARIANTS = ["A", "B", "C", "D", "E", "F", "MA", "MB", "MC", "MD", "ME", "MF"]


def main():
    sh = GrassmannianShape(3, 6)
    problems = list(enumerate_problems(sh, min_conditions=2))
    expected = {
        parse_problem("(1)^9", sh),
        parse_problem("(2,2) (1)^5", sh),
    }
    from grassgal.tableaux import degree_oracle

    degs = {p: degree_oracle(p) for p in problems[:30]}
    for variant in VARIANTS:
        t0 = time.time()
        ok = True
        for p, d in degs.items():
            total, _ = analyze(p, variant)
            if total != d:
                print(f"variant {variant}: WRONG TOTAL on {p}: {total} != {d}")
                ok = False
                break
        if not ok:
            continue
        fails = [p for p in problems if verdict(p, variant)[0] == "fail"]
        mark = "MATCH" if set(fails) == expected else "     "
        print(f"variant {variant}: {len(fails):3d} failures {mark}  ({time.time()-t0:.1f}s)")
        if 0 < len(fails) < 10:
            for p in fails:
                print("   ", render_conditions(p.conditions))


if __name__ == "__main__":
    main()
