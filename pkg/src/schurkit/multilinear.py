"""Exterior, symmetric and divided powers of Z^r with their Hopf structure maps.

Basis labels:
  exterior  - strictly increasing tuples S of indices in 1..r
  symmetric - exponent vectors alpha (x^alpha)
  divided   - exponent vectors alpha (e^(alpha) = prod e_i^(alpha_i))
Both kinds of label lists are in lexicographic order.  A tensor product of
spaces has the lexicographically ordered product basis.

The label level functions (ext_comult, div_mult, ...) are what the Schur
module code uses; the matrix level functions wrap them into LabeledMap.
"""
from itertools import combinations, product
from math import comb, factorial, prod

from .exact_linalg import ExactMatrix
from .partitions import multisets

EXTERIOR, SYMMETRIC, DIVIDED = "exterior", "symmetric", "divided"
KINDS = (EXTERIOR, SYMMETRIC, DIVIDED)


def shuffle_sign(A, B):
    """Sign of the permutation sorting the concatenation A + B, i.e. the
    parity of the pairs a in A, b in B with a > b."""
    inv = 0
    for a in A:
        for b in B:
            if a > b:
                inv += 1
    return -1 if inv & 1 else 1


def ext_basis(r, n):
    return list(combinations(range(1, r + 1), n))


def exp_basis(r, n):
    return multisets(r, n)


def ext_comult(S, p):
    """Delta'(e_S) restricted to degree (p, |S|-p): list of (sign, A, B)."""
    out = []
    for A in combinations(S, p):
        B = tuple(x for x in S if x not in A)
        out.append((shuffle_sign(A, B), A, B))
    return out


def ext_mult(A, B):
    """e_A * e_B as (sign, S), or None when A and B overlap."""
    if set(A) & set(B):
        return None
    return shuffle_sign(A, B), tuple(sorted(A + B))


def _splits(alpha, p):
    """All beta <= alpha entrywise with |beta| = p."""
    out = []

    def rec(i, rest, prefix):
        if i == len(alpha):
            if rest == 0:
                out.append(tuple(prefix))
            return
        tail = sum(alpha[i + 1:])
        for b in range(max(0, rest - tail), min(alpha[i], rest) + 1):
            rec(i + 1, rest - b, prefix + [b])

    rec(0, p, [])
    return out


def sym_comult(alpha, p):
    """Delta(x^alpha) in degree (p, |alpha|-p): list of (coeff, beta, gamma)."""
    out = []
    for beta in _splits(alpha, p):
        gamma = tuple(a - b for a, b in zip(alpha, beta))
        out.append((prod(comb(a, b) for a, b in zip(alpha, beta)), beta, gamma))
    return out


def sym_mult(beta, gamma):
    return 1, tuple(a + b for a, b in zip(beta, gamma))


def div_comult(alpha, p):
    """Delta''(e^(alpha)) in degree (p, |alpha|-p): list of (1, beta, gamma)."""
    return [(1, beta, tuple(a - b for a, b in zip(alpha, beta)))
            for beta in _splits(alpha, p)]


def div_mult(beta, gamma):
    """e^(beta) e^(gamma) = prod C(beta_i+gamma_i, beta_i) e^(beta+gamma)."""
    return (prod(comb(b + c, b) for b, c in zip(beta, gamma)),
            tuple(b + c for b, c in zip(beta, gamma)))


def comult_fn(kind):
    return {EXTERIOR: ext_comult, SYMMETRIC: sym_comult,
            DIVIDED: div_comult}[kind]


def mult_fn(kind):
    return {EXTERIOR: ext_mult, SYMMETRIC: sym_mult, DIVIDED: div_mult}[kind]


class PowerSpace:
    """The n-th exterior, symmetric or divided power of Z^r."""

    def __init__(self, kind, r, n):
        if kind not in KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        if r < 0 or n < 0:
            raise ValueError("rank and degree must be non-negative")
        self.kind, self.base_rank, self.degree = kind, r, n
        self.basis = ext_basis(r, n) if kind == EXTERIOR else exp_basis(r, n)
        self.index = {b: i for i, b in enumerate(self.basis)}

    @property
    def dim(self):
        return len(self.basis)

    def __eq__(self, other):
        return isinstance(other, PowerSpace) and \
            (self.kind, self.base_rank, self.degree) == \
            (other.kind, other.base_rank, other.degree)

    def __hash__(self):
        return hash((self.kind, self.base_rank, self.degree))

    def __repr__(self):
        return f"PowerSpace({self.kind!r}, {self.base_rank}, {self.degree})"

    def label_json(self, b):
        return list(b)


class TensorSpace:
    """Tensor product of PowerSpaces with the lexicographic product basis."""

    def __init__(self, *factors):
        self.factors = factors
        self.basis = list(product(*(f.basis for f in factors)))
        self.index = {b: i for i, b in enumerate(self.basis)}

    @property
    def dim(self):
        return len(self.basis)

    def __repr__(self):
        return "TensorSpace(" + ", ".join(map(repr, self.factors)) + ")"


class LabeledMap:
    """A matrix together with the spaces whose bases index its rows and
    columns."""

    def __init__(self, source, target, matrix):
        if matrix.shape != (target.dim, source.dim):
            raise ValueError("matrix does not match the bases")
        self.source, self.target, self.matrix = source, target, matrix

    def __matmul__(self, other):
        return LabeledMap(other.source, self.target, self.matrix @ other.matrix)

    def __repr__(self):
        return f"LabeledMap({self.source!r} -> {self.target!r})"

    def image(self, label):
        """The image of a source basis label as {target label: coeff}."""
        j = self.source.index[label]
        return {self.target.basis[i]: row[j]
                for i, row in enumerate(self.matrix.data) if row[j]}


def _from_function(source, target, fn):
    M = ExactMatrix.zeros(target.dim, source.dim)
    for j, b in enumerate(source.basis):
        for label, c in fn(b).items():
            M.data[target.index[label]][j] += c
    return LabeledMap(source, target, M)


def comultiplication(kind, r, p, q):
    """Delta (symmetric), Delta' (exterior) or Delta'' (divided) from degree
    p+q into the tensor product of degrees p and q."""
    src = PowerSpace(kind, r, p + q)
    tgt = TensorSpace(PowerSpace(kind, r, p), PowerSpace(kind, r, q))
    cm = comult_fn(kind)

    def fn(b):
        out = {}
        for c, x, y in cm(b, p):
            out[(x, y)] = out.get((x, y), 0) + c
        return out

    return _from_function(src, tgt, fn)


def multiplication(kind, r, p, q):
    """m (symmetric), m' (exterior) or m'' (divided)."""
    src = TensorSpace(PowerSpace(kind, r, p), PowerSpace(kind, r, q))
    tgt = PowerSpace(kind, r, p + q)
    mu = mult_fn(kind)

    def fn(b):
        res = mu(*b)
        if res is None:
            return {}
        return {res[1]: res[0]}

    return _from_function(src, tgt, fn)


def tensor_maps(f, g):
    """f (x) g on product bases (plain Kronecker product, no signs)."""
    A, B = f.matrix, g.matrix
    M = [[a * b for a in ra for b in rb] for ra in A.data for rb in B.data]
    src = TensorSpace(*_factors(f.source), *_factors(g.source))
    tgt = TensorSpace(*_factors(f.target), *_factors(g.target))
    return LabeledMap(src, tgt, ExactMatrix(M, tgt.dim, src.dim))


def identity_map(space):
    return LabeledMap(space, space, ExactMatrix.identity(space.dim))


def _factors(space):
    return space.factors if isinstance(space, TensorSpace) else (space,)


def flatten(space):
    """View a PowerSpace as a one-factor TensorSpace (labels become 1-tuples)."""
    return TensorSpace(*_factors(space))


def as_tensor(f):
    """Re-label a map so that source and target are TensorSpaces."""
    s, t = flatten(f.source), flatten(f.target)
    return LabeledMap(s, t, f.matrix)


def _shuffle_words(words):
    """Shuffle product in the tensor algebra of a list of words."""
    acc = {(): 1}
    for w in words:
        nxt = {}
        for u, c in acc.items():
            n = len(u) + len(w)
            for pos in combinations(range(n), len(w)):
                out = [None] * n
                it_w, it_u = iter(w), iter(u)
                pset = set(pos)
                for k in range(n):
                    out[k] = next(it_w) if k in pset else next(it_u)
                out = tuple(out)
                nxt[out] = nxt.get(out, 0) + c
        acc = nxt
    return acc


def alpha_beta(d, r):
    """alpha_d: Sym^d -> Gamma^d and beta_d: Gamma^d -> Sym^d with
    beta_d alpha_d = alpha_d beta_d = d! * id.

    alpha_d sends the monomial e_{i_1}...e_{i_d} to the same product taken
    in the divided power algebra; beta_d sends e^(nu) to the image in Sym^d of
    the shuffle product of the words e_j^{(x) nu_j}.
    """
    S = PowerSpace(SYMMETRIC, r, d)
    G = PowerSpace(DIVIDED, r, d)
    zero = (0,) * r

    def alpha(x):
        c, acc = 1, zero
        for i, a in enumerate(x):
            unit = tuple(int(k == i) for k in range(r))
            for _ in range(a):
                c2, acc = div_mult(acc, unit)
                c *= c2
        return {acc: c}

    def beta(nu):
        words = [(i,) * a for i, a in enumerate(nu) if a]
        out = {}
        for w, c in _shuffle_words(words).items():
            e = [0] * r
            for i in w:
                e[i] += 1
            e = tuple(e)
            out[e] = out.get(e, 0) + c
        return out

    return _from_function(S, G, alpha), _from_function(G, S, beta)


def _theta(a, b):
    """theta(e^(a) (x) e^(b)) in Gamma^d(V (x) V) for V = Z^2: the 2x2
    non-negative matrices k with row sums a and column sums b, each giving
    prod (e_i (x) e_j)^(k_ij) with coefficient 1."""
    out = []
    for k11 in range(min(a[0], b[0]) + 1):
        k12 = a[0] - k11
        k21 = b[0] - k11
        k22 = a[1] - k21
        if min(k12, k21, k22) < 0 or k12 + k22 != b[1]:
            continue
        out.append(((k11, k12, k21, k22), 1))
    return out


def _gamma_can(k):
    """Gamma^d of V (x) V -> Lambda^2 V on prod (e_i (x) e_j)^(k_ij), with
    Gamma^d(Lambda^2 Z^2) = Z omega^(d) identified with Z.

    e_1(x)e_1 and e_2(x)e_2 go to 0, e_1(x)e_2 to omega and e_2(x)e_1 to
    -omega; omega^(a) omega^(b) = C(a+b, a) omega^(a+b).
    """
    k11, k12, k21, k22 = k
    if k11 or k22:
        return 0
    return (-1) ** k21 * comb(k12 + k21, k12)


def divided_pairing(d):
    """B: Gamma^d(Z^2) (x) Gamma^d(Z^2) -> Gamma^d(Lambda^2 Z^2) = Z, the
    composite of theta and Gamma^d(can), as a 1 x (d+1)^2 LabeledMap."""
    G = PowerSpace(DIVIDED, 2, d)
    src = TensorSpace(G, G)
    tgt = PowerSpace(EXTERIOR, 1, 1)   # a rank one target, basis (1,)

    def fn(ab):
        a, b = ab
        v = sum(c * _gamma_can(k) for k, c in _theta(a, b))
        return {(1,): v} if v else {}

    return _from_function(src, tgt, fn)


def gram_matrix(d):
    """(d+1) x (d+1) Gram matrix of divided_pairing(d) in the basis of
    Gamma^d(Z^2)."""
    B = divided_pairing(d)
    n = d + 1
    row = B.matrix.data[0]
    return ExactMatrix([row[i * n:(i + 1) * n] for i in range(n)], n, n)


def is_antidiagonal(M):
    n = M.rows
    return all(M.data[i][j] == 0 for i in range(n) for j in range(n)
               if i + j != n - 1)


def factorial_identity_holds(d, r):
    a, b = alpha_beta(d, r)
    f = factorial(d)
    n = a.source.dim
    I = ExactMatrix.identity(n) * f
    return (b.matrix @ a.matrix) == I and (a.matrix @ b.matrix) == I
