"""Independent reference implementations used only by the tests.

None of these import the statistic, enumeration or length code they check;
they work from the raw combinatorial definitions with brute force.
"""
from __future__ import annotations

import itertools
from collections import deque


def boxes(inner, n):
    inner = list(inner) + [0] * (n - len(inner))
    return [(i, inner[i]) for i in range(n)]


def column_ok(bx, labels, sign):
    """Direct check of the column rule: a box directly above another in its column."""
    cells = dict(zip(bx, labels))
    for (i, j), a in cells.items():
        below = cells.get((i + 1, j))
        if below is None:
            continue
        if sign == "+" and not a < below:
            return False
        if sign == "-" and not a <= below:
            return False
    return True


def brute_tableaux(inner, n, sign, max_label):
    """All valid fillings with labels in 1..max_label, by filtering every assignment."""
    bx = boxes(inner, n)
    return [labels for labels in itertools.product(range(1, max_label + 1), repeat=n)
            if column_ok(bx, labels, sign)]


def intro_dinv(inner, labels):
    """Count pairs a < b with d(y) = d(x), j > j'  or  d(y) = d(x) + 1, j < j', where d = i + j."""
    bx = boxes(inner, len(labels))
    count = 0
    for (x, a), (y, b) in itertools.permutations(zip(bx, labels), 2):
        if not a < b:
            continue
        dx, dy = sum(x), sum(y)
        if (dy == dx and x[1] > y[1]) or (dy == dx + 1 and x[1] < y[1]):
            count += 1
    return count


def column_tuple_inv(inner, labels, n, m, b, sign="+"):
    """Inversions of the filling read as a tuple of single-column shapes.

    Column j of the skew shape becomes a column of height alpha_j shifted by
    s_j = -n j - r * (number of rows whose part exceeds j); a cell at height
    h in that column has content -r h + s_j.  A pair counts when the smaller
    label sits at the larger content and the gap is below r = mn + b.
    """
    r = m * n + b
    parts = list(inner) + [0] * (n - len(inner))
    content = {}
    for j in sorted(set(parts)):
        above = sum(1 for v in parts if v > j)
        rows = [i for i in range(n) if parts[i] == j]
        s = -n * j - r * above
        for h, i in enumerate(rows):
            content[i] = -r * h + s
    less = (lambda u, v: u < v) if sign == "+" else (lambda u, v: u <= v)
    count = 0
    for x, y in itertools.permutations(range(n), 2):
        gap = content[x] - content[y]
        if 0 < gap < r and less(labels[x], labels[y]):
            count += 1
    return count


# -- affine symmetric group as permutations of Z -----------------------------


def window_of(translation, finite):
    """Window notation [f(1), ..., f(n)] of t_lam w as an affine permutation.

    t_lam w sends i + k n to w(i) + (k - lam_{w(i)}) n; this encodes the
    semidirect product independently of the library's multiplication.
    """
    n = len(finite)
    return tuple(finite[i] - n * translation[finite[i] - 1] for i in range(n))


def simple_window(n, i):
    w = list(range(1, n + 1))
    i %= n
    if i == 0:
        w[0], w[-1] = 0, n + 1
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def compose_windows(f, g):
    n = len(f)

    def ev(h, k):
        q, r = divmod(k - 1, n)
        return h[r] + q * n

    return tuple(ev(f, g[i]) for i in range(n))


def affine_inversions(f):
    """Length of an affine permutation by counting inversions (Shi's formula)."""
    n = len(f)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            d = f[j] - f[i]
            total += abs(d // n)
    return total


def bfs_lengths(n, depth):
    """Word length of every affine permutation reachable in at most depth steps."""
    start = tuple(range(1, n + 1))
    dist = {start: 0}
    queue = deque([start])
    gens = [simple_window(n, i) for i in range(n)]
    while queue:
        f = queue.popleft()
        if dist[f] == depth:
            continue
        for s in gens:
            g = compose_windows(f, s)
            if g not in dist:
                dist[g] = dist[f] + 1
                queue.append(g)
    return dist


# -- the five n = 2 tableaux (m = 1, b = 1) ------------------------------------

# (inner shape, labels top-down, dinv, corank) worked out by hand from the
# d = i + j rule: the only pair is the two boxes of the shape.
N2_TABLEAUX = [
    ((1,), (1, 1), 0, 0),
    ((1,), (1, 2), 1, 0),
    ((1,), (2, 1), 0, 0),
    ((1,), (2, 2), 0, 0),
    ((), (1, 2), 0, 1),
]
