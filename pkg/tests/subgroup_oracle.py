"""Brute-force subgroup census of finite abelian p-groups, the independent oracle for Hall polynomials."""

from collections import Counter
from itertools import product

from hallvertex.partitions import conjugate


def _valuation(n, p):
    e = 0
    while n % p == 0 and n > 1:
        n //= p
        e += 1
    return e


def _group_type(count_killed, p, top):
    """Partition of a p-group from the sizes |A[p^k]| = count_killed(k)."""
    sizes = [count_killed(k) for k in range(top + 1)]
    cols = [_valuation(sizes[k] // sizes[k - 1], p) for k in range(1, top + 1)]
    cols = [c for c in cols if c]
    return conjugate(tuple(cols)) if cols else ()


def subgroup_census(lam, p):
    """Counter of (cotype, type) over all subgroups B of the abelian group of type lam."""
    orders = [p ** a for a in lam]
    elements = list(product(*(range(o) for o in orders)))
    zero = tuple(0 for _ in orders)

    def add(x, y):
        return tuple((a + b) % o for a, b, o in zip(x, y, orders))

    def times(k, x):
        return tuple((k * a) % o for a, o in zip(x, orders))

    def join(H, g):
        out = set(H)
        frontier = list(H)
        while frontier:
            h = frontier.pop()
            nxt = add(h, g)
            if nxt not in out:
                out.add(nxt)
                frontier.append(nxt)
        return frozenset(out)

    seen = {frozenset([zero])}
    todo = [frozenset([zero])]
    while todo:
        H = todo.pop()
        for g in elements:
            if g not in H:
                K = join(H, g)
                if K not in seen:
                    seen.add(K)
                    todo.append(K)

    top = max(lam) if lam else 0
    census = Counter()
    for B in seen:
        sub = _group_type(lambda k: sum(1 for x in B if times(p ** k, x) == zero), p, top)
        quo = _group_type(lambda k: sum(1 for x in elements if times(p ** k, x) in B) // len(B), p, top)
        census[(quo, sub)] += 1
    return census
