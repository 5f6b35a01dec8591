"""Partitions, skew shapes, semistandard tableaux and Littlewood-Richardson
coefficients.

Partitions are tuples in normal form (no trailing zeros), so the builtin tuple
order is the lexicographic order used everywhere in the package::

    >>> sorted([Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))])
    [Partition((1, 1, 1)), Partition((2, 1)), Partition((3,))]
    >>> conjugate(Partition((4, 2, 1)))
    Partition((3, 2, 1, 1))
    >>> lr_coefficient((2, 1), (2, 1), (3, 2, 1))
    2
"""
from functools import lru_cache
from itertools import combinations_with_replacement
import json


class Partition(tuple):
    """A weakly decreasing sequence of non-negative integers.

    Trailing zeros are stripped; anything that is not weakly decreasing or has
    a negative entry is rejected.
    """

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 0:
                raise ValueError(f"negative part in {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"{parts} is not weakly decreasing")
        n = len(parts)
        while n and parts[n - 1] == 0:
            n -= 1
        return super().__new__(cls, parts[:n])

    @property
    def size(self):
        return sum(self)

    def part(self, i):
        """The i-th part (0-based), zero beyond the length."""
        return self[i] if i < len(self) else 0

    def padded(self, n):
        if n < len(self):
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"

    def to_text(self):
        return "λ=" + str(self)

    def to_json(self):
        return list(self)


def partition(p):
    """Coerce a tuple, list, or comma separated string into a Partition."""
    if isinstance(p, str):
        p = [int(x) for x in p.replace(" ", "").split(",") if x != ""]
    return Partition(p)


def conjugate(lam):
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p > i) for i in range(lam[0]))


def contains(lam, mu):
    """True iff mu is contained in lam (both must be partitions)."""
    lam, mu = Partition(lam), Partition(mu)
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def partitions_of(n, max_part=None, max_len=None):
    """All partitions of n in increasing lexicographic order."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n
    out = []

    def rec(rest, cap, prefix):
        if rest == 0:
            out.append(Partition(prefix))
            return
        if len(prefix) == max_len:
            return
        for p in range(min(rest, cap), 0, -1):
            rec(rest - p, p, prefix + [p])

    rec(n, max_part, [])
    out.sort()
    return out


def partitions_in_box(rows, cols):
    """All partitions fitting in a rows x cols rectangle."""
    out = []
    for n in range(rows * cols + 1):
        out.extend(partitions_of(n, cols, rows))
    return out


def subpartitions(lam, mu=()):
    """All gamma with mu contained in gamma contained in lam."""
    lam, mu = Partition(lam), Partition(mu)
    out = []

    def rec(i, prefix):
        if i == len(lam):
            out.append(Partition(prefix))
            return
        hi = lam[i] if i == 0 else min(lam[i], prefix[-1])
        for g in range(mu.part(i), hi + 1):
            rec(i + 1, prefix + [g])

    rec(0, [])
    out.sort()
    return out


class SkewShape:
    """The skew diagram outer/inner; a straight shape has inner = ()."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer, inner=()):
        outer, inner = Partition(outer), Partition(inner)
        if not contains(outer, inner):
            raise ValueError(f"{inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def __setattr__(self, name, value):
        raise AttributeError("SkewShape is immutable")

    @classmethod
    def parse(cls, text):
        """Parse "3,2,1/1" or "3,2,1"."""
        if isinstance(text, SkewShape):
            return text
        if isinstance(text, str):
            outer, _, inner = text.partition("/")
            return cls(partition(outer), partition(inner))
        return cls(text)

    def __eq__(self, other):
        return isinstance(other, SkewShape) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def key(self):
        return (tuple(self.outer), tuple(self.inner))

    def __repr__(self):
        return f"SkewShape({tuple(self.outer)!r}, {tuple(self.inner)!r})"

    def __str__(self):
        s = ",".join(map(str, self.outer)) or "0"
        if self.inner:
            s += "/" + ",".join(map(str, self.inner))
        return s

    @property
    def size(self):
        return self.outer.size - self.inner.size

    def conjugate(self):
        return SkewShape(conjugate(self.outer), conjugate(self.inner))

    def row_lengths(self):
        """q_i = lambda_i - mu_i for each row of the outer shape."""
        return [l - self.inner.part(i) for i, l in enumerate(self.outer)]

    def column_lengths(self):
        """p_j = lambda^t_j - mu^t_j for each column of the outer shape."""
        lt, mt = conjugate(self.outer), conjugate(self.inner)
        return [l - mt.part(j) for j, l in enumerate(lt)]

    def cells(self):
        """Cells (i, j), 0-based, in row reading order."""
        return [(i, j) for i, l in enumerate(self.outer)
                for j in range(self.inner.part(i), l)]

    def to_json(self):
        return {"outer": list(self.outer), "inner": list(self.inner)}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        if isinstance(obj, list):
            return cls(obj)
        return cls(obj["outer"], obj.get("inner", ()))


def as_shape(shape):
    if isinstance(shape, SkewShape):
        return shape
    if isinstance(shape, str):
        return SkewShape.parse(shape)
    return SkewShape(shape)


# Semistandard tableaux

def _horizontal_strips(outer, inner):
    """Partitions nu with inner <= nu <= outer and outer/nu a horizontal
    strip, i.e. outer_{i+1} <= nu_i <= outer_i."""
    out = []
    n = len(outer)

    def rec(i, prefix):
        if i == n:
            out.append(Partition(prefix))
            return
        lo = max(inner.part(i), outer.part(i + 1))
        for g in range(lo, outer[i] + 1):
            rec(i + 1, prefix + [g])

    rec(0, [])
    return out


@lru_cache(maxsize=None)
def _ssyt(outer, inner, r):
    if outer == inner:
        return 1
    if r == 0:
        return 0
    total = 0
    # remove the cells holding the largest entry r: a horizontal strip at the
    # bottom of outer/inner
    for nu in _horizontal_strips(outer, inner):
        total += _ssyt(nu, inner, r - 1)
    return total


def ssyt_count(shape, r):
    """Number of semistandard (column strict) tableaux of the given shape with
    entries in 1..r."""
    shape = as_shape(shape)
    if r < 0:
        raise ValueError("r must be non-negative")
    return _ssyt(shape.outer, shape.inner, r)


def semistandard_tableaux(shape, r):
    """Enumerate semistandard tableaux as dicts cell -> entry, by direct
    backtracking over cells in row order."""
    shape = as_shape(shape)
    cells = shape.cells()
    filling = {}
    out = []

    def rec(k):
        if k == len(cells):
            out.append(dict(filling))
            return
        i, j = cells[k]
        lo = 1
        if (i, j - 1) in filling:
            lo = filling[(i, j - 1)]
        if (i - 1, j) in filling:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, r + 1):
            filling[(i, j)] = v
            rec(k + 1)
            del filling[(i, j)]

    rec(0)
    return out


# Littlewood-Richardson coefficients

@lru_cache(maxsize=None)
def _lr(lam, mu, tau):
    if sum(mu) + sum(tau) != sum(lam) or not contains(lam, mu) \
            or not contains(lam, tau):
        return 0
    if not tau:
        return 1
    rows = [(i, mu.part(i), l) for i, l in enumerate(lam) if l > mu.part(i)]
    count = 0
    content = [0] * len(tau)
    placed = {}

    # fill rows top to bottom; within a row read right to left so that the
    # reverse reading word is built in order and the lattice condition can be
    # checked letter by letter
    def fill_row(r_idx):
        nonlocal count
        if r_idx == len(rows):
            if all(c == t for c, t in zip(content, tau)):
                count += 1
            return
        i, lo, hi = rows[r_idx]
        row = [0] * (hi - lo)

        def place(pos, cap):
            # pos runs from the rightmost cell leftwards; cap bounds the entry
            # from above to keep the row weakly increasing
            if pos < 0:
                for k in range(hi - lo):
                    placed[(i, lo + k)] = row[k]
                fill_row(r_idx + 1)
                for k in range(hi - lo):
                    del placed[(i, lo + k)]
                return
            j = lo + pos
            floor = 1
            above = placed.get((i - 1, j))
            if above is not None:
                floor = above + 1
            for v in range(min(cap, len(tau)), floor - 1, -1):
                if content[v - 1] >= tau[v - 1]:
                    continue
                if v > 1 and content[v - 1] + 1 > content[v - 2]:
                    continue
                content[v - 1] += 1
                row[pos] = v
                place(pos - 1, v)
                content[v - 1] -= 1
            row[pos] = 0

        place(hi - lo - 1, len(tau))

    fill_row(0)
    return count


def lr_coefficient(mu, tau, lam):
    """c^lam_{mu,tau}: the number of Littlewood-Richardson skew tableaux of
    shape lam/mu and content tau."""
    return _lr(Partition(lam), Partition(mu), Partition(tau))


def skew_decomposition(shape):
    """The partitions tau with multiplicity c^lam_{mu,tau}, in lex order."""
    shape = as_shape(shape)
    out = []
    for tau in partitions_of(shape.size):
        c = lr_coefficient(shape.inner, tau, shape.outer)
        out.extend([tau] * c)
    return out


def lr_product(lam, nu):
    """The expansion s_lam * s_nu = sum c^gamma_{lam,nu} s_gamma as a dict."""
    lam, nu = Partition(lam), Partition(nu)
    out = {}
    for gamma in partitions_of(lam.size + nu.size):
        c = lr_coefficient(lam, nu, gamma)
        if c:
            out[gamma] = c
    return out


def multisets(r, n):
    """Exponent vectors of length r summing to n, in lex order."""
    out = []
    for combo in combinations_with_replacement(range(r), n):
        a = [0] * r
        for c in combo:
            a[c] += 1
        out.append(tuple(a))
    out.sort()
    return out
