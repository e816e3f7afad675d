"""Pure-Python implementations of the hot loops.

Mirrors ``_ckernels.pyx`` function by function; ``qdvolumes.kernels`` picks
whichever is available.
"""

from __future__ import annotations

from math import factorial

_CHAR_MEMO: dict = {}
_DIM_MEMO: dict = {}


def clear_caches():
    _CHAR_MEMO.clear()
    _DIM_MEMO.clear()


def cache_size() -> int:
    return len(_CHAR_MEMO)


def export_memo():
    """Snapshot of the character memo as a plain dict."""
    return dict(_CHAR_MEMO)


def import_memo(entries):
    _CHAR_MEMO.update(entries)


def rim_hooks(part: tuple, r: int) -> list:
    """All (shape, sign) obtained by removing an r-rim hook from ``part``."""
    n = len(part)
    beads = [part[i] + n - 1 - i for i in range(n)]
    occupied = set(beads)
    out = []
    for idx, b in enumerate(beads):
        t = b - r
        if t < 0 or t in occupied:
            continue
        between = 0
        for c in beads:
            if t < c < b:
                between += 1
        new = beads[:idx] + beads[idx + 1:]
        new.append(t)
        new.sort(reverse=True)
        m = len(new)
        shape = tuple(x for x in (new[i] - (m - 1 - i) for i in range(m)) if x > 0)
        out.append((shape, -1 if between & 1 else 1))
    return out


def dim(part: tuple) -> int:
    """Number of standard Young tableaux (hook length formula)."""
    v = _DIM_MEMO.get(part)
    if v is not None:
        return v
    n = sum(part)
    conj = [sum(1 for p in part if p > j) for j in range(part[0])] if part else []
    hooks = 1
    for i, row in enumerate(part):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    v = factorial(n) // hooks
    _DIM_MEMO[part] = v
    return v


def character(part: tuple, rho: tuple) -> int:
    """chi^part evaluated on the class with cycle type ``rho`` (any order).

    Parts of rho are stripped front to back; the memo is keyed by (shape, rho).
    """
    if not rho or all(r == 1 for r in rho):
        return dim(part)
    key = (part, rho)
    v = _CHAR_MEMO.get(key)
    if v is not None:
        return v
    r, rest = rho[0], rho[1:]
    total = 0
    for shape, sign in rim_hooks(part, r):
        total += sign * character(shape, rest)
    _CHAR_MEMO[key] = total
    return total


def lehmer_rank(perm) -> int:
    n = len(perm)
    rank = 0
    for i in range(n):
        smaller = 0
        pi = perm[i]
        for j in range(i + 1, n):
            if perm[j] < pi:
                smaller += 1
        rank = rank * (n - i) + smaller
    return rank


def _compose(a, b):
    # (a*b)(x) = a(b(x))
    return tuple(a[x] for x in b)


def _inverse(a):
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def _transitive(n: int, gens) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[a] = b
                comps -= 1
                if comps == 1:
                    return True
    return comps == 1


def count_product_one(n: int, fixed: tuple, candidates: list, target_mask, extra_gens=()) -> tuple:
    """Count tuples (x_1..x_k) with x_i in candidates[i] such that
    fixed * x_1 * ... * x_k * y = 1 for some y whose Lehmer rank is set in
    ``target_mask``.

    Returns (all, transitive); transitivity is tested on the group generated
    by ``extra_gens``, the x_i and y.
    """
    k = len(candidates)
    if any(len(c) == 0 for c in candidates):
        return 0, 0
    total = 0
    connected = 0
    idx = [0] * k
    sizes = [len(c) for c in candidates]
    prefix = [fixed] * (k + 1)
    for i in range(k):
        prefix[i + 1] = _compose(prefix[i], candidates[i][0])
    while True:
        y = _inverse(prefix[k])
        if target_mask[lehmer_rank(y)]:
            total += 1
            gens = list(extra_gens) + [candidates[i][idx[i]] for i in range(k)] + [y]
            if _transitive(n, gens):
                connected += 1
        i = k - 1
        while i >= 0:
            idx[i] += 1
            if idx[i] < sizes[i]:
                break
            idx[i] = 0
            i -= 1
        if i < 0:
            break
        for j in range(i, k):
            prefix[j + 1] = _compose(prefix[j], candidates[j][idx[j]])
    return total, connected


def count_torus(n: int, a: tuple, all_perms: list, candidates: list, target_mask) -> tuple:
    """Sum of count_product_one over b, with fixed = a^-1 b^-1 a b and the
    pair (a, b) added to the generators."""
    ainv = _inverse(a)
    total = 0
    connected = 0
    for b in all_perms:
        comm = _compose(_compose(ainv, _inverse(b)), _compose(a, b))
        t, c = count_product_one(n, comm, candidates, target_mask, (a, b))
        total += t
        connected += c
    return total, connected
