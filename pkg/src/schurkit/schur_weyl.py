"""Schur and Weyl modules of Z^r as cokernels of box maps, the image form,
and rank level checks of the decomposition theorems.

For a skew shape lam/mu with column lengths p_1..p_s the Schur module is the
cokernel of the box map into Lambda^{p_1} (x) ... (x) Lambda^{p_s}; its source
is the sum over adjacent columns j and over u + v < lam^t_{j+1} - mu^t_j of

    Lambda^{p_1} (x) .. (x) Lambda^u (x) Lambda^{p_j+p_{j+1}-u-v} (x) Lambda^v (x) .. (x) Lambda^{p_s}

mapped by (m' (x) m')(1 (x) Delta' (x) 1).  The Weyl module is the same
construction on rows with divided powers, Delta'' and m''.

The cokernel is built column by column (see _tower) so that large tensor
products never have to be written down; box_map() still gives the full
matrix for small cases.
"""
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations, product
from math import comb, prod

from . import multilinear as ml
from ._tower import Factor, Tower
from .exact_linalg import (ExactMatrix, PresentedModule, StructuralError,
                           image_basis, rank, smith_normal_form)
from .partitions import (Partition, SkewShape, as_shape, conjugate,
                         partitions_of, ssyt_count, subpartitions)

SCHUR, WEYL = "schur", "weyl"


def _segments(shape, variant):
    """(lengths of the factors, bounds for the adjacent pairs)."""
    lam, mu = shape.outer, shape.inner
    if variant == SCHUR:
        lengths = shape.column_lengths()
        lt, mt = conjugate(lam), conjugate(mu)
        bounds = [lt.part(j + 1) - mt.part(j) for j in range(len(lengths) - 1)]
    elif variant == WEYL:
        lengths = shape.row_lengths()
        bounds = [lam.part(i + 1) - mu.part(i) for i in range(len(lengths) - 1)]
    else:
        raise ValueError(f"unknown variant {variant!r}")
    # drop trailing empty factors (s is the last nonzero length)
    while lengths and lengths[-1] == 0:
        lengths.pop()
    return lengths, bounds[:max(len(lengths) - 1, 0)]


def _kind(variant):
    return ml.EXTERIOR if variant == SCHUR else ml.DIVIDED


def _uv_pairs(bound):
    """(u, v) with u, v >= 0 and u + v < bound, lexicographic."""
    return [(u, v) for u in range(max(bound, 0)) for v in range(bound - u)]


def _basis(kind, r, n):
    return ml.ext_basis(r, n) if kind == ml.EXTERIOR else ml.exp_basis(r, n)


def _weight(kind, r):
    if kind == ml.EXTERIOR:
        def w(S):
            v = [0] * r
            for i in S:
                v[i - 1] += 1
            return tuple(v)
        return w
    return tuple


def _box_piece(kind, r, u, t, v, pj, pk):
    """Images of basis elements x (x) z (x) y of P^u (x) P^t (x) P^v under
    (m (x) m)(1 (x) Delta (x) 1), as a list of (label, {(a, b): c})."""
    comult, mult = ml.comult_fn(kind), ml.mult_fn(kind)
    out = []
    if u > pj or v > pk:
        return out
    for x in _basis(kind, r, u):
        for z in _basis(kind, r, t):
            splits = comult(z, pj - u)
            for y in _basis(kind, r, v):
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


def pair_relations(shape, r, variant):
    """For each adjacent pair j, the list over (u, v) lexicographic of
    ((u, v), [(label, image)])."""
    kind = _kind(variant)
    lengths, bounds = _segments(shape, variant)
    rels = []
    for j, bound in enumerate(bounds):
        pj, pk = lengths[j], lengths[j + 1]
        pieces = []
        for u, v in _uv_pairs(bound):
            t = pj + pk - u - v
            pieces.append(((u, v), _box_piece(kind, r, u, t, v, pj, pk)))
        rels.append(pieces)
    return rels


def box_map(shape, r, variant=SCHUR):
    """The full box map as a dense matrix.

    Columns: the direct sum over adjacent pairs j (ascending), then (u, v)
    lexicographic, then the product basis of the remaining factors with the
    auxiliary piece in place of factors j, j+1.  Rows: the product basis of
    the tensor product of the factors.
    """
    shape = as_shape(shape)
    kind = _kind(variant)
    lengths, _ = _segments(shape, variant)
    bases = [_basis(kind, r, p) for p in lengths]
    rows = list(product(*bases))
    index = {b: i for i, b in enumerate(rows)}
    columns = []
    for j, pieces in enumerate(pair_relations(shape, r, variant)):
        before, after = bases[:j], bases[j + 2:]
        for _, piece in pieces:
            for pre in product(*before):
                for _, img in piece:
                    for post in product(*after):
                        col = {}
                        for (a, b), c in img.items():
                            col[index[pre + (a, b) + post]] = c
                        columns.append(col)
    return ExactMatrix.from_columns(columns, len(rows))


def _factors(shape, r, variant):
    kind = _kind(variant)
    lengths, _ = _segments(shape, variant)
    w = _weight(kind, r)
    return [Factor(_basis(kind, r, p), w) for p in lengths]


class TowerModule(PresentedModule):
    """A free module presented by a Tower; the projection matrix from the
    full tensor product is only materialized on request."""

    def __init__(self, tower, factor_bases):
        super().__init__(tower.top.rank)
        self.tower = tower
        self._bases = factor_bases
        self._projection = None

    @property
    def projection(self):
        if self._projection is None:
            cols = [self.tower.project_tensor(b) for b in product(*self._bases)]
            self._projection = ExactMatrix.from_columns(cols, self.free_rank)
        return self._projection

    @projection.setter
    def projection(self, value):
        self._projection = value

    def project(self, labels):
        return self.tower.project_tensor(labels)

    def lift(self, t):
        return self.tower.lift_tensor(t)

    @property
    def weights(self):
        return self.tower.top.weights


class SchurPresentation:
    def __init__(self, shape, base_rank, variant, module):
        self.shape = shape
        self.base_rank = base_rank
        self.variant = variant
        self.module = module
        self._box = None

    @property
    def box(self):
        if self._box is None:
            self._box = box_map(self.shape, self.base_rank, self.variant)
        return self._box

    @property
    def rank(self):
        return self.module.free_rank

    def __repr__(self):
        return (f"SchurPresentation({self.variant}, {self.shape}, "
                f"r={self.base_rank}, rank={self.rank})")


def _build(shape, r, variant):
    factors = _factors(shape, r, variant)
    rels = []
    for pieces in pair_relations(shape, r, variant):
        rels.append([img for _, piece in pieces for _, img in piece if img])
    tower = Tower(factors, rels, (0,) * r)
    module = TowerModule(tower, [f.basis for f in factors])
    return SchurPresentation(shape, r, variant, module)


@lru_cache(maxsize=4096)
def _cached(key, r, variant):
    return _build(SkewShape(*key), r, variant)


def schur_module(shape, r):
    """S^{lam/mu}(Z^r).  Raises StructuralError on torsion."""
    shape = as_shape(shape)
    return _cached(shape.key(), r, SCHUR)


def weyl_module(shape, r):
    """W^{lam/mu}(Z^r).  Raises StructuralError on torsion."""
    shape = as_shape(shape)
    return _cached(shape.key(), r, WEYL)


def direct_cokernel(shape, r, variant=SCHUR):
    """Cokernel of the full box matrix; only sensible for small shapes."""
    from .exact_linalg import cokernel
    shape = as_shape(shape)
    return cokernel(box_map(shape, r, variant))


# Image form

def _column_cells(shape):
    lt, mt = conjugate(shape.outer), conjugate(shape.inner)
    cols = []
    for j in range(len(lt)):
        cols.append([(i, j) for i in range(mt.part(j), lt[j])])
    while cols and not cols[-1]:
        cols.pop()
    return cols


def _image_columns(shape, r):
    """For each basis tensor of Lambda^{lam^t/mu^t}, its image in
    Sym^{lam/mu} = (x)_i Sym^{q_i}: expand every column by the full signed
    comultiplication and multiply the entries of each row."""
    cols = _column_cells(shape)
    nrows = len(shape.outer)
    bases = [ml.ext_basis(r, len(c)) for c in cols]
    perms = [list(permutations(range(len(c)))) for c in cols]
    signs = [[_perm_sign(p) for p in ps] for ps in perms]
    out = []
    for labels in product(*bases):
        img = {}
        for choice in product(*[range(len(ps)) for ps in perms]):
            sgn = 1
            rows = [[0] * r for _ in range(nrows)]
            for k, (cells, S) in enumerate(zip(cols, labels)):
                p = perms[k][choice[k]]
                sgn *= signs[k][choice[k]]
                for (i, _), pos in zip(cells, p):
                    rows[i][S[pos] - 1] += 1
            key = tuple(tuple(x) for x in rows)
            v = img.get(key, 0) + sgn
            if v:
                img[key] = v
            else:
                img.pop(key)
        out.append((labels, img))
    return out


def _perm_sign(p):
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv & 1 else 1


def schur_as_image(shape, r):
    """Basis (columns) of the image lattice of Lambda^{lam^t/mu^t} ->
    Sym^{lam/mu}, rows indexed by the product basis of the Sym^{q_i}."""
    shape = as_shape(shape)
    row_bases = [ml.exp_basis(r, q) for q in shape.row_lengths()]
    rows = list(product(*row_bases))
    index = {b: i for i, b in enumerate(rows)}
    columns = []
    for _, img in _image_columns(shape, r):
        columns.append({index[k]: c for k, c in img.items()})
    return image_basis(ExactMatrix.from_columns(columns, len(rows)))


def image_rank(shape, r):
    """Rank of the image form, computed block by block on weights."""
    shape = as_shape(shape)
    blocks = {}
    for _, img in _image_columns(shape, r):
        if not img:
            continue
        key = next(iter(img))
        w = tuple(sum(col) for col in zip(*key))
        blocks.setdefault(w, []).append(img)
    total = 0
    for imgs in blocks.values():
        keys = sorted({k for img in imgs for k in img})
        idx = {k: i for i, k in enumerate(keys)}
        M = ExactMatrix.from_columns([{idx[k]: c for k, c in img.items()}
                                      for img in imgs], len(keys))
        total += rank(M)
    return total


# Decomposition theorems at rank level

class Report(dict):
    """{claim, lhs, rhs, terms, pass} with attribute access to pass."""

    @property
    def passed(self):
        return self["pass"]


def _report(claim, lhs, rhs, terms, extra=None):
    rep = Report(claim=claim, lhs=lhs, rhs=rhs, terms=terms, **{"pass": lhs == rhs})
    if extra:
        rep.update(extra)
    return rep


def verify_cauchy(n, a, b):
    parts = partitions_of(n)
    sym_terms = [{"lambda": list(l), "value": ssyt_count(l, a) * ssyt_count(l, b)}
                 for l in parts]
    ext_terms = [{"lambda": list(l),
                  "value": ssyt_count(l, a) * ssyt_count(conjugate(l), b)}
                 for l in parts]
    lhs_s, rhs_s = comb(a * b + n - 1, n), sum(t["value"] for t in sym_terms)
    lhs_e, rhs_e = comb(a * b, n), sum(t["value"] for t in ext_terms)
    rep = _report(f"Cauchy decomposition n={n} a={a} b={b}",
                  [lhs_s, lhs_e], [rhs_s, rhs_e],
                  {"symmetric": sym_terms, "exterior": ext_terms})
    return rep


def verify_direct_sum(shape, a, b, modules=True):
    """ssyt(lam/mu, a+b) = sum_k sum_{gamma in I_k} ssyt(gamma/mu, a)
    ssyt(lam/gamma, b).  With modules=True the graded ranks of the actual
    module S^{lam/mu}(Z^a + Z^b) are compared with each k-th sum as well."""
    shape = as_shape(shape)
    lam, mu = shape.outer, shape.inner
    terms = []
    by_k = {}
    for gamma in subpartitions(lam, mu):
        k = gamma.size - mu.size
        val = ssyt_count(SkewShape(gamma, mu), a) * ssyt_count(SkewShape(lam, gamma), b)
        terms.append({"k": k, "gamma": list(gamma), "value": val})
        by_k[k] = by_k.get(k, 0) + val
    lhs = ssyt_count(shape, a + b)
    rhs = sum(by_k.values())
    extra = {}
    ok = lhs == rhs
    if modules and a + b > 0:
        pres = schur_module(shape, a + b)
        graded = {}
        for w in pres.module.weights:
            k = sum(w[:a])
            graded[k] = graded.get(k, 0) + 1
        extra["module_graded_ranks"] = {str(k): graded.get(k, 0) for k in sorted(by_k)}
        ok = ok and all(graded.get(k, 0) == v for k, v in by_k.items()) \
            and sum(graded.values()) == lhs
    rep = _report(f"direct sum decomposition {shape} a={a} b={b}", lhs, rhs,
                  terms, extra)
    rep["pass"] = ok
    return rep


def verify_skew(shape, r):
    """ssyt(lam/mu, r) = sum_tau c^lam_{mu,tau} ssyt(tau, r) (rank form of
    the skew decomposition)."""
    from .partitions import skew_decomposition
    shape = as_shape(shape)
    taus = skew_decomposition(shape)
    terms = [{"tau": list(t), "value": ssyt_count(t, r)} for t in taus]
    return _report(f"skew decomposition {shape} r={r}", ssyt_count(shape, r),
                   sum(t["value"] for t in terms), terms)


def verify_lr(lam, nu, r):
    """ssyt(lam, r) ssyt(nu, r) = sum_gamma c^gamma_{lam,nu} ssyt(gamma, r)."""
    from .partitions import lr_product
    terms = [{"gamma": list(g), "c": c, "value": c * ssyt_count(g, r)}
             for g, c in sorted(lr_product(lam, nu).items())]
    return _report(f"LR rule {Partition(lam)} x {Partition(nu)} r={r}",
                   ssyt_count(lam, r) * ssyt_count(nu, r),
                   sum(t["value"] for t in terms), terms)


# The skew short exact sequence

def skew_ses(lam, d):
    """The map f: Lambda^d E (x) S^{lam/1}(E) -> Lambda^{d-1} E (x) S^lam(E)
    for E = Z^d, with its exactness report."""
    lam = Partition(lam)
    if not lam:
        raise ValueError("lam must be nonzero")
    lt = conjugate(lam)
    if d < 1 or lt[0] > d:
        raise ValueError("need d >= 1 and lam^t_1 <= d")
    src = schur_module(SkewShape(lam, (1,)), d)
    tgt = schur_module(lam, d)
    top = tuple(range(1, d + 1))
    lower = ml.ext_basis(d, d - 1)
    lower_index = {T: i for i, T in enumerate(lower)}
    n_src, n_tgt = src.rank, tgt.rank
    M = [[0] * n_src for _ in range(len(lower) * n_tgt)]
    for t in range(n_src):
        for labels, c in src.module.lift(t).items():
            first = labels[0] if labels else ()
            rest = labels[1:]
            # (Delta' (x) 1): Lambda^d -> Lambda^{d-1} (x) E, then E (x) first
            for sgn, T, e in ml.ext_comult(top, d - 1):
                prod_ = ml.ext_mult(e, first)
                if prod_ is None:
                    continue
                s2, S1 = prod_
                for k, val in tgt.module.project((S1,) + rest).items():
                    M[lower_index[T] * n_tgt + k][t] += c * sgn * s2 * val
    f = ExactMatrix(M, len(lower) * n_tgt, n_src)
    snf = smith_normal_form(f, track=False)
    diag = snf.invariant_factors()
    injective = len(diag) == n_src
    coker_free = all(x == 1 for x in diag)
    coker_rank = f.rows - len(diag)
    iso_case = lt[0] == d
    if iso_case:
        expected = 0
    else:
        expected = ssyt_count(conjugate(Partition((d - 1,) + tuple(lt))), d)
    ok = injective and coker_free and coker_rank == expected
    rep = _report(f"skew short exact sequence lam={lam} d={d}",
                  coker_rank, expected,
                  [{"source_rank": n_src, "target_rank": f.rows,
                    "invariant_factors": diag}],
                  {"case": "isomorphism" if iso_case else "injective",
                   "injective": injective, "cokernel_free": coker_free})
    rep["pass"] = ok
    return f, rep


# Plucker relations

def _quadric_generators(n, d):
    """Images in Sym^2(Lambda^d Z^n) of the box map of the two column shape
    (d, d): the Plucker quadrics, as {(S, T) sorted: coeff}."""
    shape = SkewShape(conjugate(Partition((d, d))))
    gens = []
    for pieces in pair_relations(shape, n, SCHUR):
        for _, piece in pieces:
            for _, img in piece:
                v = {}
                for (S, T), c in img.items():
                    key = (S, T) if S <= T else (T, S)
                    v[key] = v.get(key, 0) + c
                v = {k: c for k, c in v.items() if c}
                if v:
                    gens.append(v)
    return gens


def plucker_graded_piece(n, d, m):
    """(ideal_dim, ring_dim) in degree m of Sym(Lambda^d Z^n) modulo the
    ideal generated by the Plucker quadrics."""
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    coords = ml.ext_basis(n, d)
    monomials = sorted(combinations_with_replacement(coords, m))
    dim = len(monomials)
    if m < 2:
        ideal = 0
    else:
        index = {mono: i for i, mono in enumerate(monomials)}
        quads = _quadric_generators(n, d)
        cols = []
        seen = set()
        for base in combinations_with_replacement(coords, m - 2):
            for q in quads:
                col = {}
                for (S, T), c in q.items():
                    key = tuple(sorted(base + (S, T)))
                    col[index[key]] = col.get(index[key], 0) + c
                col = {k: c for k, c in col.items() if c}
                key = tuple(sorted(col.items()))
                if col and key not in seen:
                    seen.add(key)
                    cols.append(col)
        ideal = rank(ExactMatrix.from_columns(cols, dim)) if cols else 0
    return ideal, dim - ideal


def verify_plucker(n, d, m):
    ideal, ring = plucker_graded_piece(n, d, m)
    expected = ssyt_count(Partition((m,) * d), n)
    return _report(f"Plucker coordinate ring n={n} d={d} m={m}", ring, expected,
                   [{"ideal_dim": ideal, "ring_dim": ring}])
