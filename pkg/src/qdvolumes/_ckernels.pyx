# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_pykernels``.

Character values are accumulated as Python integers so nothing overflows;
only the bead bookkeeping and permutation products run on C arrays.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

from math import factorial

cdef enum:
    MAXN = 128

cdef dict _CHAR_MEMO = {}
cdef dict _DIM_MEMO = {}


def clear_caches():
    _CHAR_MEMO.clear()
    _DIM_MEMO.clear()


def cache_size():
    return len(_CHAR_MEMO)


def export_memo():
    """Snapshot of the character memo as a plain dict."""
    return dict(_CHAR_MEMO)


def import_memo(entries):
    _CHAR_MEMO.update(entries)


cdef list _rim_hooks(tuple part, int r):
    cdef int n = len(part)
    cdef int beads[MAXN]
    cdef int newb[MAXN]
    cdef char occ[2 * MAXN + 2]
    cdef int i, j, b, t, between, m, x, pos
    cdef list out = []
    cdef list shape
    if n >= MAXN or part[0] + n >= 2 * MAXN:
        raise ValueError("partition too large for the compiled kernel")
    for i in range(n):
        beads[i] = <int>part[i] + n - 1 - i
    m = beads[0] + 1
    for i in range(m):
        occ[i] = 0
    for i in range(n):
        occ[beads[i]] = 1
    for i in range(n):
        b = beads[i]
        t = b - r
        if t < 0 or occ[t]:
            continue
        between = 0
        for j in range(t + 1, b):
            between += occ[j]
        # drop b (order is kept), then insert t at its slot
        pos = 0
        for j in range(n):
            if j != i:
                newb[pos] = beads[j]
                pos += 1
        pos = n - 1
        while pos > 0 and newb[pos - 1] < t:
            newb[pos] = newb[pos - 1]
            pos -= 1
        newb[pos] = t
        shape = []
        for j in range(n):
            x = newb[j] - (n - 1 - j)
            if x > 0:
                shape.append(x)
        out.append((tuple(shape), -1 if between & 1 else 1))
    return out


def rim_hooks(tuple part, int r):
    """All (shape, sign) obtained by removing an r-rim hook from ``part``."""
    if not part:
        return []
    return _rim_hooks(part, r)


def dim(tuple part):
    """Number of standard Young tableaux (hook length formula)."""
    cdef int n = 0, i, j, row, nrows = len(part)
    cdef int conj[MAXN * 2]
    v = _DIM_MEMO.get(part)
    if v is not None:
        return v
    if not part:
        return 1
    if part[0] >= 2 * MAXN:
        raise ValueError("partition too large for the compiled kernel")
    for i in range(part[0]):
        conj[i] = 0
    for i in range(nrows):
        row = part[i]
        n += row
        for j in range(row):
            conj[j] += 1
    hooks = 1
    for i in range(nrows):
        row = part[i]
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    v = factorial(n) // hooks
    _DIM_MEMO[part] = v
    return v


def character(tuple part, tuple rho):
    """chi^part on the class of cycle type ``rho``, stripping rho front to back."""
    cdef int r
    cdef bint trivial = True
    for x in rho:
        if x != 1:
            trivial = False
            break
    if trivial:
        return dim(part)
    key = (part, rho)
    v = _CHAR_MEMO.get(key)
    if v is not None:
        return v
    r = rho[0]
    rest = rho[1:]
    total = 0
    if part:
        for shape, sign in _rim_hooks(part, r):
            if sign > 0:
                total += character(shape, rest)
            else:
                total -= character(shape, rest)
    _CHAR_MEMO[key] = total
    return total


cdef inline long _rank(int* p, int n):
    cdef long rank = 0
    cdef int i, j, smaller
    for i in range(n):
        smaller = 0
        for j in range(i + 1, n):
            if p[j] < p[i]:
                smaller += 1
        rank = rank * (n - i) + smaller
    return rank


def lehmer_rank(perm):
    cdef int p[MAXN]
    cdef int n = len(perm), i
    for i in range(n):
        p[i] = perm[i]
    return _rank(p, n)


cdef int _find(int* parent, int x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef bint _transitive(int n, int** gens, int ngens):
    cdef int parent[MAXN]
    cdef int i, g, a, b, comps = n
    for i in range(n):
        parent[i] = i
    for g in range(ngens):
        for i in range(n):
            a = _find(parent, i)
            b = _find(parent, gens[g][i])
            if a != b:
                parent[a] = b
                comps -= 1
                if comps == 1:
                    return True
    return comps == 1


cdef int* _pack(list perms, int n) except NULL:
    cdef int m = len(perms), i, j
    cdef int* buf = <int*>malloc(sizeof(int) * (m * n + 1))
    for i in range(m):
        p = perms[i]
        for j in range(n):
            buf[i * n + j] = p[j]
    return buf


cdef tuple _count(int n, int* fixed, list candidates, const unsigned char[:] mask,
                  int* extra, int nextra):
    cdef int k = len(candidates)
    cdef int i, j, x
    cdef long total = 0, connected = 0
    cdef int** cand = <int**>malloc(sizeof(int*) * (k + 1))
    cdef int* sizes = <int*>malloc(sizeof(int) * (k + 1))
    cdef int* idx = <int*>malloc(sizeof(int) * (k + 1))
    cdef int* prefix = <int*>malloc(sizeof(int) * (k + 1) * n)
    cdef int y[MAXN]
    cdef int** gens = <int**>malloc(sizeof(int*) * (k + nextra + 2))
    try:
        for i in range(k):
            sizes[i] = len(candidates[i])
            if sizes[i] == 0:
                for j in range(i):
                    free(cand[j])
                return 0, 0
            cand[i] = _pack(candidates[i], n)
            idx[i] = 0
        memcpy(prefix, fixed, sizeof(int) * n)
        for i in range(k):
            for x in range(n):
                prefix[(i + 1) * n + x] = prefix[i * n + cand[i][x]]
        for i in range(nextra):
            gens[i] = extra + i * n
        while True:
            for x in range(n):
                y[prefix[k * n + x]] = x
            if mask[_rank(y, n)]:
                total += 1
                for i in range(k):
                    gens[nextra + i] = cand[i] + idx[i] * n
                gens[nextra + k] = y
                if _transitive(n, gens, nextra + k + 1):
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
                for x in range(n):
                    prefix[(j + 1) * n + x] = prefix[j * n + cand[j][idx[j] * n + x]]
        for i in range(k):
            free(cand[i])
        return total, connected
    finally:
        free(cand)
        free(sizes)
        free(idx)
        free(prefix)
        free(gens)


def count_product_one(int n, fixed, list candidates, mask, extra_gens=()):
    """See ``_pykernels.count_product_one``."""
    cdef int f[MAXN]
    cdef int i
    for i in range(n):
        f[i] = fixed[i]
    cdef int* extra = _pack(list(extra_gens), n)
    try:
        return _count(n, f, candidates, mask, extra, len(extra_gens))
    finally:
        free(extra)


def count_torus(int n, a, list all_perms, list candidates, mask):
    """See ``_pykernels.count_torus``."""
    cdef int av[MAXN]
    cdef int ainv[MAXN]
    cdef int bv[MAXN]
    cdef int binv[MAXN]
    cdef int comm[MAXN]
    cdef int ab[2 * MAXN]
    cdef int i
    cdef long total = 0, connected = 0
    for i in range(n):
        av[i] = a[i]
        ainv[av[i]] = i
    for b in all_perms:
        for i in range(n):
            bv[i] = b[i]
            binv[bv[i]] = i
        # comm = a^-1 b^-1 a b, (x*y)(i) = x(y(i))
        for i in range(n):
            comm[i] = ainv[binv[av[bv[i]]]]
        for i in range(n):
            ab[i] = av[i]
            ab[n + i] = bv[i]
        t, c = _count(n, comm, candidates, mask, ab, 2)
        total += t
        connected += c
    return total, connected
