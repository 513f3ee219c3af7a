"""Hot loops for list colouring over bitmask colour lists.

Every kernel is written once in a numba-compatible subset of Python. When numba
is importable and ``FLEXCOLOR_NO_NUMBA`` is unset the kernels are compiled with
``@njit``; otherwise the identical source runs as plain Python over numpy
arrays. Colours are bit positions 0..62, adjacency is CSR (``indptr``,
``indices``).
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and os.environ.get("FLEXCOLOR_NO_NUMBA", "") not in ("1", "true", "yes")

MAX_COLORS = 62


def _jit(fn):
    if USE_NUMBA:
        return numba.njit(cache=True, nogil=True)(fn)
    return fn


@_jit
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@_jit
def lowbit_index(x):
    i = 0
    while not (x >> i) & 1:
        i += 1
    return i


@_jit
def _forbidden(v, indptr, indices, color):
    m = 0
    for j in range(indptr[v], indptr[v + 1]):
        c = color[indices[j]]
        if c >= 0:
            m |= np.int64(1) << c
    return m


@_jit
def colorable_kernel(indptr, indices, lists, color):
    """Backtracking with minimum-remaining-values order, ties by id, low colour first.

    ``color`` is filled in place (bit index per vertex, -1 if uncoloured).
    Returns True iff a colouring exists.
    """
    n = lists.shape[0]
    for v in range(n):
        color[v] = -1
    if n == 0:
        return True
    sv = np.empty(n, dtype=np.int64)
    rem = np.empty(n, dtype=np.int64)
    depth = 0
    entering = True
    while True:
        if entering:
            if depth == n:
                return True
            best = -1
            bestc = 1 << 30
            besta = np.int64(0)
            for v in range(n):
                if color[v] < 0:
                    a = lists[v] & ~_forbidden(v, indptr, indices, color)
                    c = popcount(a)
                    if c < bestc:
                        best = v
                        bestc = c
                        besta = a
                        if c == 0:
                            break
            if bestc == 0:
                depth -= 1
            else:
                sv[depth] = best
                rem[depth] = besta
        if depth < 0:
            return False
        v = sv[depth]
        color[v] = -1
        if rem[depth] == 0:
            depth -= 1
            entering = False
            continue
        low = rem[depth] & -rem[depth]
        rem[depth] ^= low
        color[v] = lowbit_index(low)
        depth += 1
        entering = True


@_jit
def enumerate_kernel(indptr, indices, lists, out, cap):
    """Write colourings in lexicographic order (vertex 0 first, low colour first).

    Rows beyond ``cap`` are counted but not stored; the count stops at cap + 1
    so callers can detect overflow. Pass ``cap < 0`` to count without bound
    (nothing is stored).
    """
    n = lists.shape[0]
    color = np.full(n, -1, dtype=np.int64)
    if n == 0:
        return 1
    rem = np.empty(n, dtype=np.int64)
    count = 0
    depth = 0
    rem[0] = lists[0]
    while depth >= 0:
        v = depth
        color[v] = -1
        if rem[depth] == 0:
            depth -= 1
            continue
        low = rem[depth] & -rem[depth]
        rem[depth] ^= low
        c = lowbit_index(low)
        color[v] = c
        # forward check on later neighbours
        dead = False
        for j in range(indptr[v], indptr[v + 1]):
            u = indices[j]
            if u > v:
                if (lists[u] & ~_forbidden(u, indptr, indices, color)) == 0:
                    dead = True
                    break
        if dead:
            continue
        if depth == n - 1:
            if cap < 0 or count < cap:
                if cap >= 0:
                    for w in range(n):
                        out[count, w] = color[w]
            count += 1
            if cap >= 0 and count > cap:
                return count
            continue
        depth += 1
        rem[depth] = lists[depth] & ~_forbidden(depth, indptr, indices, color)
    return count


@_jit
def find_bad_system_kernel(indptr, indices, demand, node_limit, classes):
    """Search list systems with |L(v)| = demand[v] for one with no colouring.

    A system is a multiset of colour classes (vertex masks); classes are
    generated in non-increasing order, and the next class must contain the
    highest vertex still short of colours. A branch is cut as soon as the
    partial lists admit a colouring, since adding colours never hurts.

    Returns (status, n_classes, nodes): status 1 = uncolourable system found
    (classes[:n_classes] holds it), 0 = every system colourable, 2 = node
    budget exhausted.
    """
    n = demand.shape[0]
    lists = np.zeros(n, dtype=np.int64)
    r = demand.copy()
    color = np.full(n, -1, dtype=np.int64)
    total = 0
    for v in range(n):
        total += r[v]
    dmask = np.zeros(total + 1, dtype=np.int64)
    hbit = np.zeros(total + 1, dtype=np.int64)
    cur = np.zeros(total + 1, dtype=np.int64)
    nodes = 0
    depth = 0
    entering = True
    while True:
        if entering:
            d = np.int64(0)
            for v in range(n):
                if r[v] > 0:
                    d |= np.int64(1) << v
            if d == 0:
                if not colorable_kernel(indptr, indices, lists, color):
                    return 1, depth, nodes
                depth -= 1
                if depth < 0:
                    return 0, 0, nodes
                entering = False
                continue
            else:
                h = 63 - 1
                while not (d >> h) & 1:
                    h -= 1
                dmask[depth] = d
                hbit[depth] = h
                # cur holds the next candidate to try (0 = exhausted)
                s = d
                prev = classes[depth - 1] if depth > 0 else d
                while (s >> h) & 1 and s > prev:
                    s = (s - 1) & d
                cur[depth] = s if (s >> h) & 1 else 0
        else:
            # undo class at this depth before moving to its next candidate
            s = classes[depth]
            for v in range(n):
                if (s >> v) & 1:
                    lists[v] &= ~(np.int64(1) << depth)
                    r[v] += 1
        s = cur[depth]
        if s == 0:
            depth -= 1
            if depth < 0:
                return 0, 0, nodes
            entering = False
            continue
        d = dmask[depth]
        h = hbit[depth]
        nxt = (s - 1) & d
        cur[depth] = nxt if (nxt >> h) & 1 else 0
        nodes += 1
        if nodes > node_limit:
            return 2, 0, nodes
        classes[depth] = s
        full = True
        for v in range(n):
            if (s >> v) & 1:
                lists[v] |= np.int64(1) << depth
                r[v] -= 1
            if lists[v] == 0:
                full = False
        if full and colorable_kernel(indptr, indices, lists, color):
            entering = False
            continue
        depth += 1
        entering = True


def warmup() -> None:
    """Compile all kernels on a toy input."""
    indptr = np.array([0, 1, 2], dtype=np.int64)
    indices = np.array([1, 0], dtype=np.int64)
    lists = np.array([3, 3], dtype=np.int64)
    color = np.full(2, -1, dtype=np.int64)
    colorable_kernel(indptr, indices, lists, color)
    out = np.zeros((4, 2), dtype=np.int64)
    enumerate_kernel(indptr, indices, lists, out, 4)
    classes = np.zeros(8, dtype=np.int64)
    find_bad_system_kernel(indptr, indices, np.array([1, 1], dtype=np.int64), 100, classes)
