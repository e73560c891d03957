"""Prototype: existential certification census.

certified(S): some tournament tree (pairing choices + per-game binary
completion trees) has every out-degree-2 vertex safe: branch leaf counts
differ, or are (1,1), or a branch is dead.

listed(P): not certified, and not foldable: foldable means some pairing
gives a safe completion tree whose uncertified children are all primitive
problems (which then carry the blame themselves).
"""

import sys
from functools import lru_cache
from itertools import product as iproduct

from grassgal.core import (
    GrassmannianShape,
    Partition,
    SchubertProblem,
    boundary_to_partition,
    enumerate_problems,
    is_primitive,
    parse_problem,
    partition_to_boundary,
    render_conditions,
    BoundaryString,
)
from grassgal import _kernel

sys.setrecursionlimit(100000)


class Census:
    def __init__(self, shape):
        self.shape = shape
        self._deg = {}
        self._cert = {}
        self._exp = {}

    def key(self, conds):
        return tuple(sorted((c.parts for c in conds)))

    def expand(self, x: Partition, y: Partition):
        k = (x.parts, y.parts)
        if k not in self._exp:
            nw = partition_to_boundary(x, self.shape).reversed().bits
            ne = partition_to_boundary(y, self.shape).bits
            raw = _kernel.expand(self.shape.n, nw, ne)
            self._exp[k] = {
                boundary_to_partition(BoundaryString(w), self.shape): c
                for w, c in raw.items()
            }
        return self._exp[k]

    def degree(self, conds):
        k = self.key(conds)
        if k in self._deg:
            return self._deg[k]
        if len(conds) == 1:
            box = Partition([self.shape.cols] * self.shape.k)
            v = 1 if conds[0] == box else 0
        else:
            x, rest = conds[0], list(conds[1:])
            v = 0
            for g, c in self.expand(x, rest[0]).items():
                v += c * self.degree(tuple([g] + rest[1:]))
        self._deg[k] = v
        return v

    def certified(self, conds):
        k = self.key(conds)
        if k in self._cert:
            return self._cert[k]
        self._cert[k] = True  # break cycles optimistically; states are acyclic anyway
        v = self._certified(conds)
        self._cert[k] = v
        return v

    def _certified(self, conds):
        if self.degree(conds) <= 1 or len(conds) == 1:
            return True
        n = len(conds)
        seen_pairs = set()
        for i in range(n):
            for j in range(i + 1, n):
                pk = (conds[i].parts, conds[j].parts)
                if pk in seen_pairs:
                    continue
                seen_pairs.add(pk)
                rest = [conds[t] for t in range(n) if t not in (i, j)]
                kids = []  # (weight, multiplicity, child conds)
                ok_children = True
                for g, c in self.expand(conds[i], conds[j]).items():
                    child = tuple(rest + [g]) if rest else (g,)
                    w = self.degree(child)
                    kids.append((w, c))
                    if w > 0 and rest and not self.certified(child):
                        ok_children = False
                        break
                if not ok_children:
                    continue
                weights = []
                for w, c in kids:
                    weights.extend([w] * c)
                if safe_tree(tuple(sorted(weights))):
                    return True
        return False

    def foldable(self, conds):
        """Failure fully delegated to primitive failing subproblems."""
        n = len(conds)
        seen_pairs = set()
        for i in range(n):
            for j in range(i + 1, n):
                pk = (conds[i].parts, conds[j].parts)
                if pk in seen_pairs:
                    continue
                seen_pairs.add(pk)
                rest = [conds[t] for t in range(n) if t not in (i, j)]
                if not rest:
                    continue
                kids = []
                ok = True
                blamed = False
                for g, c in self.expand(conds[i], conds[j]).items():
                    child = tuple(rest + [g])
                    w = self.degree(child)
                    kids.append((w, c))
                    if w > 0 and not self.certified(child):
                        cp = SchubertProblem(self.shape, child)
                        if is_primitive(cp):
                            blamed = True
                        else:
                            ok = False
                            break
                if not ok or not blamed:
                    continue
                weights = []
                for w, c in kids:
                    weights.extend([w] * c)
                if safe_tree(tuple(sorted(weights))):
                    return True
        return False


@lru_cache(maxsize=None)
def safe_tree(weights):
    """Does a binary tree over these leaf weights avoid equal splits >= 2?"""
    ws = tuple(w for w in weights if w > 0)
    if len(ws) <= 1:
        return True
    # distinct values with multiplicities
    vals = sorted(set(ws))
    mult = [ws.count(v) for v in vals]
    # enumerate sub-multisets (avoid empty and full)
    for combo in iproduct(*(range(m + 1) for m in mult)):
        tot = sum(combo)
        if tot == 0 or tot == len(ws):
            continue
        left = []
        right = []
        for v, m, c in zip(vals, mult, combo):
            left.extend([v] * c)
            right.extend([v] * (m - c))
        s1, s2 = sum(left), sum(right)
        if s1 > s2:
            continue  # symmetric; only consider s1 <= s2 once
        if s1 == s2 and s1 >= 2:
            continue
        if safe_tree(tuple(left)) and safe_tree(tuple(right)):
            return True
    return False


def run(shape, primitive_only):
    cz = Census(shape)
    failures = []
    listed = []
    total = 0
    for p in enumerate_problems(shape, min_conditions=2, primitive_only=primitive_only):
        total += 1
        if not cz.certified(p.conditions):
            failures.append(p)
            if not cz.foldable(p.conditions):
                listed.append(p)
    print(f"{shape} primitive_only={primitive_only}: {total} problems, "
          f"{len(failures)} uncertified, {len(listed)} listed")
    for p in listed:
        print("   LISTED", render_conditions(p.conditions), "deg", cz.degree(p.conditions))
    extra = [p for p in failures if p not in listed]
    if extra:
        print("   folded:", "; ".join(render_conditions(p.conditions) for p in extra))


if __name__ == "__main__":
    import time
    t0 = time.time()
    run(GrassmannianShape(3, 6), False)
    print(f"[{time.time()-t0:.1f}s]")
    run(GrassmannianShape(3, 7), True)
    print(f"[{time.time()-t0:.1f}s]")
    run(GrassmannianShape(2, 7), False)
    run(GrassmannianShape(2, 8), False)
    print(f"[{time.time()-t0:.1f}s]")
