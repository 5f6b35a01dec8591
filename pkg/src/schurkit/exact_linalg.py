"""Exact linear algebra over the integers (and rationals).

Matrices are dense lists of Python integers wrapped in ExactMatrix.  The main
entry points are smith_normal_form, cokernel, image_basis, ChainComplex,
homology and tensor.  SparseQuotient is the workhorse behind the Schur module
constructions: it presents a cokernel from sparse relation columns, first
eliminating generators along unit coefficients and only then running a dense
Smith form on whatever is left.

    >>> smith_normal_form(ExactMatrix([[2, 0], [0, 3]])).diagonal()
    [1, 6]
    >>> cokernel(ExactMatrix([[1, 0], [0, 3]]))
    PresentedModule(free_rank=0, torsion=[3])
"""
from fractions import Fraction
import json

from . import _backend


class StructuralError(Exception):
    """Raised when an object violates a structural invariant (d*d != 0,
    unexpected torsion, ...)."""


class ExactMatrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, rows=None, cols=None):
        data = [list(r) for r in data]
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("ragged matrix data")
        for r in data:
            for x in r:
                if isinstance(x, float):
                    raise TypeError("floating point entries are not allowed")
        self.rows, self.cols, self.data = rows, cols, data

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_columns(cls, columns, rows):
        m = cls.zeros(rows, len(columns))
        for j, col in enumerate(columns):
            for i, x in (col.items() if isinstance(col, dict) else enumerate(col)):
                m.data[i][j] = x
        return m

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __repr__(self):
        return f"ExactMatrix({self.data!r})"

    def copy(self):
        return ExactMatrix(self.data, self.rows, self.cols)

    def transpose(self):
        return ExactMatrix([list(c) for c in zip(*self.data)] if self.rows else
                           [[] for _ in range(self.cols)], self.cols, self.rows)

    T = property(transpose)

    def column(self, j):
        return [r[j] for r in self.data]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        ocols = other.cols
        for row in self.data:
            acc = [0] * ocols
            for k, a in enumerate(row):
                if a:
                    orow = other.data[k]
                    for j in range(ocols):
                        b = orow[j]
                        if b:
                            acc[j] += a * b
            out.append(acc)
        return ExactMatrix(out, self.rows, ocols)

    def __mul__(self, c):
        return ExactMatrix([[c * x for x in r] for r in self.data],
                           self.rows, self.cols)

    __rmul__ = __mul__

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return ExactMatrix([[a + b for a, b in zip(r, s)]
                            for r, s in zip(self.data, other.data)],
                           self.rows, self.cols)

    def __sub__(self, other):
        return self + other * -1

    def apply(self, vec):
        return [sum(a * b for a, b in zip(r, vec)) for r in self.data]

    def is_zero(self):
        return all(x == 0 for r in self.data for x in r)

    def submatrix(self, rows, cols):
        return ExactMatrix([[self.data[i][j] for j in cols] for i in rows],
                           len(rows), len(cols))

    def to_text(self):
        return "\n".join(" ".join(str(x) for x in r) for r in self.data)

    @classmethod
    def from_text(cls, text, cols=None):
        rows = [[int(x) for x in line.split()] for line in text.splitlines()
                if line.strip()]
        if not rows and cols is None:
            return cls([], 0, 0)
        return cls(rows, len(rows), cols if not rows else None)

    def to_json(self):
        return [[_json_num(x) for x in r] for r in self.data]

    @classmethod
    def from_json(cls, obj, cols=None):
        if isinstance(obj, str):
            obj = json.loads(obj)
        if not obj:
            return cls([], 0, cols or 0)
        return cls([[_from_json_num(x) for x in r] for r in obj])


def _json_num(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    return x


def _from_json_num(x):
    if isinstance(x, str):
        return Fraction(x)
    return int(x)


def as_matrix(A):
    return A if isinstance(A, ExactMatrix) else ExactMatrix(A)


# Smith normal form

class SmithForm:
    """U @ A @ V = D with U, V unimodular and D diagonal with d_1 | d_2 | ..."""

    __slots__ = ("U", "D", "V", "Uinv", "Vinv")

    def __init__(self, U, D, V, Uinv=None, Vinv=None):
        self.U, self.D, self.V, self.Uinv, self.Vinv = U, D, V, Uinv, Vinv

    def diagonal(self):
        return [self.D.data[i][i] for i in range(min(self.D.shape))]

    def rank(self):
        return sum(1 for d in self.diagonal() if d)

    def invariant_factors(self):
        return [d for d in self.diagonal() if d]

    def __repr__(self):
        return f"SmithForm(diagonal={self.diagonal()})"


def smith_normal_form(A, track=True):
    """Smith normal form with the smallest-magnitude pivot policy.

    With track=False only D is computed (U and V are None), which is much
    cheaper when only invariant factors are wanted.
    """
    A = as_matrix(A)
    if any(isinstance(x, Fraction) for r in A.data for x in r):
        raise TypeError("Smith form needs an integer matrix")
    D, U, V, Uinv, Vinv = _backend.snf(A.data, A.rows, A.cols, track)
    wrap = lambda M, n, m: None if M is None else ExactMatrix(M, n, m)
    return SmithForm(wrap(U, A.rows, A.rows), ExactMatrix(D, A.rows, A.cols),
                     wrap(V, A.cols, A.cols), wrap(Uinv, A.rows, A.rows),
                     wrap(Vinv, A.cols, A.cols))


def invariant_factors(A):
    return smith_normal_form(A, track=False).invariant_factors()


def rank(A):
    """Rank over Q, by fraction-free elimination (works for rational entries
    too)."""
    A = as_matrix(A)
    M = [r[:] for r in A.data]
    if any(isinstance(x, Fraction) for r in M for x in r):
        return _rank_fraction(M, A.cols)
    return _backend.bareiss_rank(M, A.rows, A.cols)


def _rank_fraction(M, cols):
    M = [[Fraction(x) for x in r] for r in M]
    rk = 0
    for j in range(cols):
        piv = next((i for i in range(rk, len(M)) if M[i][j] != 0), None)
        if piv is None:
            continue
        M[rk], M[piv] = M[piv], M[rk]
        p = M[rk][j]
        for i in range(rk + 1, len(M)):
            if M[i][j] != 0:
                f = M[i][j] / p
                M[i] = [a - f * b for a, b in zip(M[i], M[rk])]
        rk += 1
    return rk


def determinant(A):
    """Exact determinant by rational elimination; an int for integer input."""
    A = as_matrix(A)
    if A.rows != A.cols:
        raise ValueError("determinant of a non-square matrix")
    det = _det_fraction(A.data)
    return det.numerator if det.denominator == 1 else det


def _det_fraction(M):
    M = [[Fraction(x) for x in r] for r in M]
    n = len(M)
    det = Fraction(1)
    for j in range(n):
        piv = next((i for i in range(j, n) if M[i][j] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != j:
            M[j], M[piv] = M[piv], M[j]
            det = -det
        det *= M[j][j]
        for i in range(j + 1, n):
            if M[i][j] != 0:
                f = M[i][j] / M[j][j]
                M[i] = [a - f * b for a, b in zip(M[i], M[j])]
    return det


# Presented modules

class PresentedModule:
    """free_rank copies of Z plus Z/t for each t in torsion.

    projection maps the ambient free module onto the generators (free ones
    first, then the torsion ones); lifts holds one preimage per generator as a
    column of the matrix returned by lift_matrix().
    """

    def __init__(self, free_rank, torsion=(), projection=None, lifts=None):
        self.free_rank = free_rank
        self.torsion = list(torsion)
        self.projection = projection
        self.lifts = lifts
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise StructuralError("invariant factors must divide each other")

    def is_free(self):
        return not self.torsion

    def is_zero(self):
        return self.free_rank == 0 and not self.torsion

    @property
    def num_generators(self):
        return self.free_rank + len(self.torsion)

    def invariants(self):
        return (self.free_rank, tuple(self.torsion))

    def __eq__(self, other):
        return isinstance(other, PresentedModule) and \
            self.invariants() == other.invariants()

    def __repr__(self):
        return f"PresentedModule(free_rank={self.free_rank}, torsion={self.torsion})"

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) or "0"

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": self.torsion}


def cokernel(A):
    """Cokernel of the column space of A (rows = rank of the target).

    Generators are the rows of U (U A V = D) whose diagonal entry is 0 or
    greater than 1; free generators come first.
    """
    A = as_matrix(A)
    s = smith_normal_form(A)
    diag = s.diagonal()
    free_rows, tors_rows, tors = [], [], []
    for i in range(A.rows):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            free_rows.append(i)
        elif d > 1:
            tors_rows.append(i)
            tors.append(d)
    gens = free_rows + tors_rows
    proj = ExactMatrix([s.U.data[i] for i in gens], len(gens), A.rows)
    lifts = ExactMatrix([[s.Uinv.data[r][i] for i in gens]
                         for r in range(A.rows)], A.rows, len(gens))
    return PresentedModule(len(free_rows), tors, proj, lifts)


def hermite_normal_form(A):
    """Column Hermite normal form H = A @ V with V unimodular: H is in column
    echelon form, pivots positive, entries left of a pivot reduced modulo it.
    Zero columns are dropped."""
    A = as_matrix(A)
    cols = [list(c) for c in zip(*A.data)] if A.rows else []
    basis = []   # list of (pivot_row, column)
    for c in cols:
        c = c[:]
        _reduce_into_echelon(basis, c)
    basis.sort()
    # reduce entries against later pivots
    for k in range(len(basis)):
        pr, col = basis[k]
        for k2 in range(k):
            pr2, col2 = basis[k2]
            q = col2[pr] // col[pr]
            if q:
                basis[k2] = (pr2, [a - q * b for a, b in zip(col2, col)])
    return ExactMatrix.from_columns([c for _, c in basis], A.rows)


def _reduce_into_echelon(basis, c):
    """Insert column c into an integral echelon basis (list of
    (pivot_row, col)), combining with extended gcds where pivots collide."""
    while True:
        lead = next((i for i, x in enumerate(c) if x), None)
        if lead is None:
            return
        k = next((k for k, (pr, _) in enumerate(basis) if pr == lead), None)
        if k is None:
            if c[lead] < 0:
                c = [-x for x in c]
            basis.append((lead, c))
            return
        b = basis[k][1]
        x, y = b[lead], c[lead]
        if y % x == 0:
            q = y // x
            c = [ci - q * bi for ci, bi in zip(c, b)]
            continue
        g, s, t = _xgcd(x, y)
        newb = [s * bi + t * ci for bi, ci in zip(b, c)]
        c = [(x // g) * ci - (y // g) * bi for bi, ci in zip(b, c)]
        basis[k] = (lead, newb)


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def image_basis(A):
    """A basis of the image lattice (column Hermite form).  Over the
    rationals, a column echelon basis of the column space."""
    A = as_matrix(A)
    if any(isinstance(x, Fraction) for r in A.data for x in r):
        return _image_basis_fraction(A)
    return hermite_normal_form(A)


def _image_basis_fraction(A):
    cols = [[Fraction(x) for x in c] for c in zip(*A.data)] if A.rows else []
    basis = []
    for c in cols:
        for pr, b in basis:
            if c[pr] != 0:
                f = c[pr] / b[pr]
                c = [x - f * y for x, y in zip(c, b)]
        lead = next((i for i, x in enumerate(c) if x != 0), None)
        if lead is not None:
            c = [x / c[lead] for x in c]
            basis.append((lead, c))
    basis.sort()
    return ExactMatrix.from_columns([c for _, c in basis], A.rows)


def kernel_basis(A):
    """Columns spanning the integer kernel of A (a saturated lattice)."""
    A = as_matrix(A)
    s = smith_normal_form(A)
    r = s.rank()
    return ExactMatrix([row[r:] for row in s.V.data], A.cols, A.cols - r)


# Chain complexes

class ChainComplex:
    """Free modules C_a, ..., C_b with d_i: C_i -> C_{i-1}.

    differentials[i] is the matrix of d_i for a < i <= b (shape
    rank(i-1) x rank(i)).
    """

    def __init__(self, degrees, ranks, differentials, check=True):
        a, b = degrees
        if b < a:
            raise ValueError("empty degree range")
        if len(ranks) != b - a + 1:
            raise ValueError("one rank per degree is required")
        self.degrees = (a, b)
        self.ranks = list(ranks)
        if isinstance(differentials, dict):
            diffs = dict(differentials)
        else:
            diffs = {a + 1 + k: as_matrix(d) for k, d in enumerate(differentials)}
        self.differentials = {}
        for i in range(a + 1, b + 1):
            d = diffs.get(i)
            if d is None:
                d = ExactMatrix.zeros(self.rank(i - 1), self.rank(i))
            d = as_matrix(d)
            if d.shape != (self.rank(i - 1), self.rank(i)):
                # an empty matrix carries no shape information
                if d.rows * d.cols == 0 and self.rank(i - 1) * self.rank(i) == 0:
                    d = ExactMatrix.zeros(self.rank(i - 1), self.rank(i))
                else:
                    raise ValueError(f"d_{i} has shape {d.shape}")
            self.differentials[i] = d
        if check:
            self.check()

    def rank(self, i):
        a, b = self.degrees
        return self.ranks[i - a] if a <= i <= b else 0

    def d(self, i):
        a, b = self.degrees
        if a < i <= b:
            return self.differentials[i]
        return ExactMatrix.zeros(self.rank(i - 1), self.rank(i))

    def check(self):
        a, b = self.degrees
        for i in range(a + 2, b + 1):
            if not (self.d(i - 1) @ self.d(i)).is_zero():
                raise StructuralError(f"d_{i-1} d_{i} != 0")

    def euler_characteristic(self):
        a, _ = self.degrees
        return sum((-1) ** (a + k) * r for k, r in enumerate(self.ranks))

    def to_json(self):
        a, b = self.degrees
        return {"degrees": [a, b], "ranks": self.ranks,
                "differentials": [self.d(i).to_json() for i in range(a + 1, b + 1)]}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        a, b = obj["degrees"]
        ranks = obj["ranks"]
        diffs = {}
        for k, m in enumerate(obj["differentials"]):
            i = a + 1 + k
            diffs[i] = ExactMatrix.from_json(m) if m else \
                ExactMatrix.zeros(ranks[i - 1 - a], ranks[i - a])
        return cls((a, b), ranks, diffs)

    def __repr__(self):
        return f"ChainComplex(degrees={self.degrees}, ranks={self.ranks})"


def homology(C, i):
    """H_i = ker d_i / im d_{i+1} as a PresentedModule.  The projection maps
    the cycle coordinates (columns of ker_basis) onto the generators."""
    a, b = C.degrees
    if i < a or i > b:
        return PresentedModule(0)
    n = C.rank(i)
    if i > a and n:
        s = smith_normal_form(C.d(i))
        r = s.rank()
        K = [row[r:] for row in s.V.data]
        to_cycle = [s.Vinv.data[k] for k in range(r, n)]
    else:
        r = 0
        K = [[int(x == y) for y in range(n)] for x in range(n)]
        to_cycle = K
    z = n - r
    if i < b and z:
        dn = C.d(i + 1)
        coords = ExactMatrix(to_cycle, z, n) @ dn
    else:
        coords = ExactMatrix.zeros(z, 0)
    q = cokernel(coords)
    q.ker_basis = ExactMatrix(K, n, z)
    return q


def homology_all(C):
    a, b = C.degrees
    return {i: homology(C, i) for i in range(a, b + 1)}


def tensor(C, D):
    """Total complex of C (x) D with d(x(x)y) = dx(x)y + (-1)^deg(x) x(x)dy.

    The basis of degree n lists pairs (x in C_i, y in D_{n-i}) by increasing i,
    then x, then y.
    """
    a, b = C.degrees
    c, e = D.degrees
    index = {}
    ranks = []
    for n in range(a + c, b + e + 1):
        k = 0
        for i in range(a, b + 1):
            j = n - i
            for x in range(C.rank(i)):
                for y in range(D.rank(j)):
                    index[(i, x, y)] = k
                    k += 1
        ranks.append(k)
    diffs = {}
    for n in range(a + c + 1, b + e + 1):
        M = [[0] * ranks[n - a - c] for _ in range(ranks[n - 1 - a - c])]
        for i in range(a, b + 1):
            j = n - i
            for x in range(C.rank(i)):
                for y in range(D.rank(j)):
                    col = index[(i, x, y)]
                    if i > a:
                        dc = C.d(i)
                        for x2 in range(C.rank(i - 1)):
                            v = dc.data[x2][x]
                            if v:
                                M[index[(i - 1, x2, y)]][col] += v
                    if j > c:
                        dd = D.d(j)
                        sign = -1 if i % 2 else 1
                        for y2 in range(D.rank(j - 1)):
                            v = dd.data[y2][y]
                            if v:
                                M[index[(i, x, y2)]][col] += sign * v
        diffs[n] = ExactMatrix(M, ranks[n - 1 - a - c], ranks[n - a - c])
    return ChainComplex((a + c, b + e), ranks, diffs)


# Sparse cokernels

class SparseQuotient:
    """Cokernel of sparse integer relations on generators 0..n-1.

    Relations are dicts {generator: coefficient}.  Generators are first
    eliminated along relations with a unit coefficient (each such relation
    expresses one generator through the others); the relations that survive
    go through a dense Smith form on the remaining generators.

    After construction: free_rank, torsion, project(g) -> {basis index: c}
    and lift(t) -> {generator: c} with project(lift(t)) = e_t.
    """

    def __init__(self, n, relations):
        self.n = n
        subst = {}
        occurs = {}
        hard = []
        for rel in relations:
            v = self._reduce(rel, subst)
            if v:
                if not self._eliminate(v, subst, occurs):
                    hard.append(v)
        progress = True
        while hard and progress:
            progress = False
            again = []
            for v in hard:
                v = self._reduce(v, subst)
                if not v:
                    continue
                if self._eliminate(v, subst, occurs):
                    progress = True
                else:
                    again.append(v)
            hard = again
        alive = [g for g in range(n) if g not in subst]
        pos = {g: k for k, g in enumerate(alive)}
        self.alive = alive
        self.subst = subst
        if hard:
            M = [[0] * len(hard) for _ in alive]
            for j, v in enumerate(hard):
                for g, c in v.items():
                    M[pos[g]][j] = c
            D, U, _, Uinv, _ = _backend.snf(M, len(alive), len(hard), True,
                                            track_v=False)
            diag = [D[k][k] for k in range(min(len(alive), len(hard)))]
        else:
            U = Uinv = None
            diag = []
        free, tors_rows, tors = [], [], []
        for k in range(len(alive)):
            d = diag[k] if k < len(diag) else 0
            if d == 0:
                free.append(k)
            elif d > 1:
                tors_rows.append(k)
                tors.append(d)
        self.free_rank = len(free)
        self.torsion = tors
        self._gens = free + tors_rows
        self._U, self._Uinv = U, Uinv
        self._pos = pos
        self._proj_cache = {}

    @staticmethod
    def _reduce(rel, subst):
        out = {}
        for g, c in rel.items():
            if not c:
                continue
            s = subst.get(g)
            if s is None:
                out[g] = out.get(g, 0) + c
            else:
                for h, d in s.items():
                    out[h] = out.get(h, 0) + c * d
        return {g: c for g, c in out.items() if c}

    @staticmethod
    def _eliminate(v, subst, occurs):
        units = [g for g, c in v.items() if c == 1 or c == -1]
        if not units:
            return False
        # cheapest pivot: fewest substitutions to rewrite, then largest index
        p = min(units, key=lambda g: (len(occurs.get(g, ())), -g))
        c = v.pop(p)
        expr = {g: -c * d for g, d in v.items()}
        for i in occurs.pop(p, ()):
            s = subst[i]
            cp = s.pop(p, 0)
            if not cp:
                continue
            for g, d in expr.items():
                nv = s.get(g, 0) + cp * d
                if nv:
                    s[g] = nv
                    occurs.setdefault(g, set()).add(i)
                else:
                    s.pop(g, None)
        subst[p] = expr
        for g in expr:
            occurs.setdefault(g, set()).add(p)
        return True

    def project(self, g):
        """Coordinates of the image of generator g on the quotient basis."""
        r = self._proj_cache.get(g)
        if r is not None:
            return r
        s = self.subst.get(g)
        expr = {g: 1} if s is None else s
        out = {}
        if self._U is None:
            for h, c in expr.items():
                k = self._pos[h]
                # without relations every alive generator is free
                out[k] = out.get(k, 0) + c
        else:
            for t, row in enumerate(self._gens):
                Urow = self._U[row]
                acc = 0
                for h, c in expr.items():
                    acc += Urow[self._pos[h]] * c
                if acc:
                    out[t] = acc
        out = {t: c for t, c in out.items() if c}
        self._proj_cache[g] = out
        return out

    def project_vector(self, vec):
        out = {}
        for g, c in vec.items():
            for t, d in self.project(g).items():
                out[t] = out.get(t, 0) + c * d
        return {t: c for t, c in out.items() if c}

    def lift(self, t):
        """A preimage of basis element t as {generator: coefficient}."""
        if self._U is None:
            return {self.alive[t]: 1}
        col = self._gens[t]
        return {self.alive[k]: self._Uinv[k][col]
                for k in range(len(self.alive)) if self._Uinv[k][col]}
