"""Prototype: certification by interleaved checker tournaments.

State = (pure partitions, ongoing games); an ongoing game is the multiset of
completions it is still committed to.  Moves: start a game on two pure
partitions (unary), split an ongoing game's multiset in two (the binary
vertex; branch counts are the state degrees), translate a singleton game to
a pure partition (unary).  A problem is certified when some strategy keeps
every split safe: different branch counts, or both <= 1.
"""

import sys
import time
from itertools import product as iproduct

from grassgal.core import (
    BoundaryString,
    GrassmannianShape,
    Partition,
    boundary_to_partition,
    enumerate_problems,
    partition_to_boundary,
    render_conditions,
)
from grassgal import _kernel

sys.setrecursionlimit(200000)


class Certifier:
    def __init__(self, shape, max_games=2):
        self.shape = shape
        self.max_games = max_games
        self._exp = {}
        self._deg_pure = {}
        self._deg = {}
        self._cert = {}

    # -- products ---------------------------------------------------------

    def expand(self, x, y):
        k = (x, y) if x <= y else (y, x)
        if k not in self._exp:
            xp, yp = Partition(k[0]), Partition(k[1])
            nw = partition_to_boundary(xp, self.shape).reversed().bits
            ne = partition_to_boundary(yp, self.shape).bits
            raw = _kernel.expand(self.shape.n, nw, ne)
            self._exp[k] = tuple(
                sorted(
                    (boundary_to_partition(BoundaryString(w), self.shape).parts, c)
                    for w, c in raw.items()
                )
            )
        return self._exp[k]

    # -- degrees ----------------------------------------------------------

    def deg_pure(self, pures):
        if pures in self._deg_pure:
            return self._deg_pure[pures]
        if len(pures) == 1:
            box = tuple([self.shape.cols] * self.shape.k)
            v = 1 if pures[0] == box else 0
        else:
            v = 0
            rest = pures[2:]
            for g, c in self.expand(pures[0], pures[1]):
                v += c * self.deg_pure(tuple(sorted(rest + (g,))))
        self._deg_pure[pures] = v
        return v

    def deg(self, pures, games):
        if not games:
            return self.deg_pure(pures)
        key = (pures, games)
        if key in self._deg:
            return self._deg[key]
        g0 = games[0]
        v = 0
        for gamma, c in g0:
            v += c * self.deg(tuple(sorted(pures + (gamma,))), games[1:])
        self._deg[key] = v
        return v

    # -- certification ----------------------------------------------------

    def certified_problem(self, problem):
        pures = tuple(sorted(c.parts for c in problem.conditions))
        return self.cert(pures, ())

    def cert(self, pures, games):
        # normalize: translate singleton games to pures
        changed = True
        while changed:
            changed = False
            for idx, g in enumerate(games):
                if len(g) == 1 and g[0][1] == 1:
                    pures = tuple(sorted(pures + (g[0][0],)))
                    games = games[:idx] + games[idx + 1:]
                    changed = True
                    break
        games = tuple(sorted(games))
        key = (pures, games)
        if key in self._cert:
            return self._cert[key]
        v = self._cert_inner(pures, games)
        self._cert[key] = v
        return v

    def _cert_inner(self, pures, games):
        if self.deg(pures, games) <= 1:
            return True
        if not games and len(pures) == 1:
            return True
        # split moves on each ongoing game
        for idx, g in enumerate(games):
            rest_games = games[:idx] + games[idx + 1:]
            for left, right in submultiset_splits(g):
                d1 = self.deg(pures, rest_games + (left,))
                d2 = self.deg(pures, rest_games + (right,))
                if d1 == d2 and d1 >= 2:
                    continue
                if self.cert(pures, rest_games + (left,)) and self.cert(
                    pures, rest_games + (right,)
                ):
                    return True
        # start moves
        if len(games) < self.max_games and len(pures) >= 2:
            seen = set()
            for i in range(len(pures)):
                for j in range(i + 1, len(pures)):
                    pk = (pures[i], pures[j])
                    if pk in seen:
                        continue
                    seen.add(pk)
                    gm = self.expand(pures[i], pures[j])
                    if not gm:
                        continue  # dead tournament branch, vacuously fine
                    np = tuple(p for t, p in enumerate(pures) if t not in (i, j))
                    if self.cert(np, games + (gm,)):
                        return True
        return False


def submultiset_splits(g):
    """All unordered splits of a completion multiset into two nonempty parts."""
    vals = [gamma for gamma, c in g]
    mults = [c for gamma, c in g]
    total = sum(mults)
    out = []
    for combo in iproduct(*(range(m + 1) for m in mults)):
        t = sum(combo)
        if t == 0 or t == total:
            continue
        left = tuple((v, c) for v, m, c in zip(vals, mults, combo) if c)
        right = tuple((v, m - c) for v, m, c in zip(vals, mults, combo) if m - c)
        if left <= right:
            out.append((left, right))
    return out


def run(shape, primitive_only, max_games=2, verbose=True):
    cz = Certifier(shape, max_games=max_games)
    listed = []
    total = 0
    for p in enumerate_problems(shape, min_conditions=2, primitive_only=primitive_only):
        total += 1
        if not cz.certified_problem(p):
            listed.append(p)
    print(f"{shape} primitive_only={primitive_only} cap={max_games}: "
          f"{total} problems, {len(listed)} NOT certified")
    if verbose:
        for p in listed:
            print("   FAIL", render_conditions(p.conditions),
                  "deg", cz.deg_pure(tuple(sorted(c.parts for c in p.conditions))))
    return listed


if __name__ == "__main__":
    t0 = time.time()
    run(GrassmannianShape(3, 6), False)
    print(f"[{time.time()-t0:.1f}s]")
    run(GrassmannianShape(3, 7), True)
    print(f"[{time.time()-t0:.1f}s]")
