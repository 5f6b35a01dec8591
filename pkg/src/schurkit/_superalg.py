"""The exterior algebra of the two term complex rho: M' -> M.

M = Z^n sits in homological degree 0 (basis e_1..e_n), M' = Z^m in degree 1
(basis f_1..f_m).  The exterior algebra of the complex is Lambda(M) (x)
Gamma(M') with basis e_S f^(nu); the swap of homogeneous a, b carries the
sign (-1)^(deg a deg b + h a h b), deg the polynomial degree and h the
homological degree (= |nu|).  The differential is the derivation with
d(f_j) = rho(f_j), so d(e_S f^(nu)) = sum_j e_S rho(f_j) f^(nu - e_j).

Labels are pairs (S, nu), S a sorted tuple in 1..n, nu an exponent vector.
"""
from itertools import combinations
from math import comb, prod

from .multilinear import _splits, shuffle_sign


def basis(n, m, p):
    """Degree p basis ordered by homological degree, then S, then nu."""
    from .partitions import multisets
    out = []
    for h in range(p + 1):
        if p - h > n:
            continue
        Ss = list(combinations(range(1, n + 1), p - h))
        if m == 0:
            nus = [()] if h == 0 else []
        else:
            nus = multisets(m, h)
        for S in Ss:
            for nu in nus:
                out.append((S, nu))
    return out


def weight(n, m):
    def w(label):
        S, nu = label
        v = [0] * (n + m)
        for i in S:
            v[i - 1] += 1
        for j, a in enumerate(nu):
            v[n + j] = a
        return tuple(v)
    return w


def hdeg(label):
    return sum(label[1])


def comult(label, a):
    """Delta'(e_S f^(nu)) in bidegree (a, p - a): list of (c, x, y)."""
    S, nu = label
    out = []
    for k in range(min(a, len(S)) + 1):
        b = a - k
        if b > sum(nu):
            continue
        for A in combinations(S, k):
            B = tuple(x for x in S if x not in A)
            s1 = shuffle_sign(A, B)
            for beta in _splits(nu, b):
                gamma = tuple(x - y for x, y in zip(nu, beta))
                # (e_A (x) e_B)(f^(beta) (x) f^(gamma)) moves e_B past f^(beta)
                sign = s1 * (-1 if (len(B) * b) & 1 else 1)
                out.append((sign, (A, beta), (B, gamma)))
    return out


def mult(x, y):
    """(e_A f^(beta)) (e_B f^(gamma)) as (c, label), or None."""
    A, beta = x
    B, gamma = y
    if set(A) & set(B):
        return None
    sign = shuffle_sign(A, B)
    if (sum(beta) * len(B)) & 1:
        sign = -sign
    c = sign * prod(comb(b + g, b) for b, g in zip(beta, gamma))
    return c, (tuple(sorted(A + B)), tuple(b + g for b, g in zip(beta, gamma)))


def differential(rho, n, m):
    """label -> {label: coeff} for the derivation extending rho."""
    cols = [[rho.data[i][j] for i in range(n)] for j in range(m)]

    def d(label):
        S, nu = label
        out = {}
        for j in range(m):
            if not nu[j]:
                continue
            nu2 = nu[:j] + (nu[j] - 1,) + nu[j + 1:]
            for i in range(n):
                c = cols[j][i]
                if not c or (i + 1) in S:
                    continue
                # e_S e_i = (-1)^{#{s in S: s > i}} e_{S + i}
                sign = -1 if sum(1 for s in S if s > i + 1) & 1 else 1
                key = (tuple(sorted(S + (i + 1,))), nu2)
                v = out.get(key, 0) + sign * c
                if v:
                    out[key] = v
                else:
                    out.pop(key)
        return out

    return d


def box_piece(n, m, u, t, v, pj, pk):
    """(m' (x) m')(1 (x) Delta' (x) 1) on the basis of the super exterior
    powers of degrees u, t, v; list of (label, {(a, b): c})."""
    out = []
    if u > pj or v > pk:
        return out
    Bu, Bt, Bv = basis(n, m, u), basis(n, m, t), basis(n, m, v)
    for x in Bu:
        for z in Bt:
            splits = comult(z, pj - u)
            for y in Bv:
                img = {}
                for c, z1, z2 in splits:
                    left = mult(x, z1)
                    if left is None:
                        continue
                    right = mult(z2, y)
                    if right is None:
                        continue
                    key = (left[1], right[1])
                    val = img.get(key, 0) + c * left[0] * right[0]
                    if val:
                        img[key] = val
                    else:
                        img.pop(key)
                out.append(((x, z, y), img))
    return out


# the super symmetric algebra Sym(M) (x) Lambda(M'), used by the image form

def ssym_mult_letters(letters, n):
    """Product of degree one letters (index, is_odd) in Sym(M) (x) Lambda(M'):
    returns (sign, (alpha, T)) or None when an odd letter repeats."""
    alpha = [0] * n
    odd = []
    for idx, is_odd in letters:
        if is_odd:
            odd.append(idx)
        else:
            alpha[idx - 1] += 1
    if len(set(odd)) != len(odd):
        return None
    inv = sum(1 for i in range(len(odd)) for j in range(i + 1, len(odd))
              if odd[i] > odd[j])
    # even letters commute with everything in the symmetric algebra
    return (-1 if inv & 1 else 1), (tuple(alpha), tuple(sorted(odd)))


def full_comult(label):
    """Iterated Delta' into degree (1, .., 1): list of (c, word) where a word
    is a tuple of letters (index, is_odd)."""
    S, nu = label
    p = len(S) + sum(nu)
    if p == 0:
        return [(1, ())]
    acc = [(1, (), label)]
    for _ in range(p - 1):
        nxt = []
        for c, word, rest in acc:
            for c2, x, y in comult(rest, 1):
                nxt.append((c * c2, word + (_letter(x),), y))
        acc = nxt
    return [(c, word + (_letter(rest),)) for c, word, rest in acc]


def _letter(label):
    S, nu = label
    if S:
        return (S[0], False)
    return (next(j for j, a in enumerate(nu) if a) + 1, True)
