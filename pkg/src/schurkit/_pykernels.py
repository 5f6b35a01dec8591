"""Pure Python kernels: Smith normal form and fraction-free rank.

These are the reference implementations; _kernels.pyx mirrors them on
machine integers and falls back here on overflow.
"""


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def snf(A, rows, cols, track=True, track_v=True):
    """Smith normal form of the list-of-lists matrix A.

    Returns (D, U, V, Uinv, Vinv) with U A V = D; the transforms are None
    when not tracked.  Pivot policy: smallest nonzero magnitude in the
    remaining block, first in row-major order on ties.
    """
    M = [list(r) for r in A]
    U = _identity(rows) if track else None
    Ui = _identity(rows) if track else None
    tv = track and track_v
    V = _identity(cols) if tv else None
    Vi = _identity(cols) if tv else None

    def row_add(i, j, q):
        # row_i -= q * row_j
        Mi, Mj = M[i], M[j]
        for k in range(cols):
            if Mj[k]:
                Mi[k] -= q * Mj[k]
        if track:
            Ui_, Uj = U[i], U[j]
            for k in range(rows):
                if Uj[k]:
                    Ui_[k] -= q * Uj[k]
            # inverse: col_j += q * col_i of Uinv
            for r in Ui:
                if r[i]:
                    r[j] += q * r[i]

    def row_swap(i, j):
        M[i], M[j] = M[j], M[i]
        if track:
            U[i], U[j] = U[j], U[i]
            for r in Ui:
                r[i], r[j] = r[j], r[i]

    def row_neg(i):
        M[i] = [-x for x in M[i]]
        if track:
            U[i] = [-x for x in U[i]]
            for r in Ui:
                r[i] = -r[i]

    def col_add(i, j, q):
        # col_i -= q * col_j
        for r in M:
            if r[j]:
                r[i] -= q * r[j]
        if tv:
            for r in V:
                if r[j]:
                    r[i] -= q * r[j]
            Vj, Vii = Vi[j], Vi[i]
            for k in range(cols):
                if Vii[k]:
                    Vj[k] += q * Vii[k]

    def col_swap(i, j):
        for r in M:
            r[i], r[j] = r[j], r[i]
        if tv:
            for r in V:
                r[i], r[j] = r[j], r[i]
            Vi[i], Vi[j] = Vi[j], Vi[i]

    t = 0
    n = min(rows, cols)
    while t < n:
        best = 0
        bi = bj = -1
        for i in range(t, rows):
            Mi = M[i]
            for j in range(t, cols):
                x = Mi[j]
                if x:
                    ax = x if x > 0 else -x
                    if not best or ax < best:
                        best, bi, bj = ax, i, j
                        if ax == 1:
                            break
            if best == 1:
                break
        if not best:
            break
        if bi != t:
            row_swap(t, bi)
        if bj != t:
            col_swap(t, bj)
        while True:
            p = M[t][t]
            clean = True
            for i in range(t + 1, rows):
                x = M[i][t]
                if x:
                    row_add(i, t, x // p)
                    if M[i][t]:
                        clean = False
            for j in range(t + 1, cols):
                x = M[t][j]
                if x:
                    col_add(j, t, x // p)
                    if M[t][j]:
                        clean = False
            if not clean:
                # move the smallest leftover in row t / column t to the pivot
                best, bi, bj = abs(p), t, t
                for i in range(t + 1, rows):
                    x = M[i][t]
                    if x and abs(x) < best:
                        best, bi, bj = abs(x), i, t
                for j in range(t + 1, cols):
                    x = M[t][j]
                    if x and abs(x) < best:
                        best, bi, bj = abs(x), t, j
                if bi != t:
                    row_swap(t, bi)
                if bj != t:
                    col_swap(t, bj)
                continue
            bad = -1
            for i in range(t + 1, rows):
                Mi = M[i]
                for j in range(t + 1, cols):
                    if Mi[j] % p:
                        bad = i
                        break
                if bad >= 0:
                    break
            if bad < 0:
                break
            row_add(t, bad, -1)
        if M[t][t] < 0:
            row_neg(t)
        t += 1
    return M, U, V, Ui, Vi


def bareiss_rank(M, rows, cols):
    """Rank by fraction-free Gaussian elimination (M is modified)."""
    rk = 0
    prev = 1
    for j in range(cols):
        piv = -1
        for i in range(rk, rows):
            if M[i][j]:
                piv = i
                break
        if piv < 0:
            continue
        M[rk], M[piv] = M[piv], M[rk]
        p = M[rk][j]
        R = M[rk]
        for i in range(rk + 1, rows):
            Mi = M[i]
            x = Mi[j]
            for k in range(j, cols):
                Mi[k] = (p * Mi[k] - x * R[k]) // prev
        prev = p
        rk += 1
        if rk == rows:
            break
    return rk
