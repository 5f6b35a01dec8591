"""Bott's algorithm for line bundles on (derived) flag schemes, vanishing
criteria, and the rank identities relating Koszul and Schur complexes.

Weights are integer sequences lam = (lam_1, .., lam_n) and rho is
(n-1, .., 1, 0).  Permutations are tuples in one-line notation, 0-based:
w sends position j to position w[j].
"""
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .exact_linalg import ExactMatrix, rank
from .partitions import (Partition, conjugate, lr_coefficient, partitions_in_box,
                         partitions_of, ssyt_count)
from .schur_weyl import Report, _report

ZERO, TWIST = "zero", "twist"


@dataclass(frozen=True)
class Weight:
    entries: tuple

    def __init__(self, entries):
        if isinstance(entries, Weight):
            entries = entries.entries
        if isinstance(entries, str):
            entries = [int(x) for x in entries.split(",") if x.strip()]
        entries = tuple(int(x) for x in entries)
        if not entries:
            raise ValueError("a weight needs at least one entry")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def plus_rho(self):
        n = self.n
        return tuple(a + n - 1 - i for i, a in enumerate(self.entries))

    def is_dominant(self):
        e = self.entries
        return all(e[i] >= e[i + 1] for i in range(len(e) - 1))

    def pairing(self, i):
        """<lam, alpha_i^vee> = lam_i - lam_{i+1}, i 1-based."""
        return self.entries[i - 1] - self.entries[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"


@dataclass(frozen=True)
class BottAnswer:
    tag: str
    partition: tuple = ()
    shift: int = 0
    negative_flag: bool = False
    permutation: tuple = field(default=(), compare=False)

    @classmethod
    def zero(cls):
        return cls(ZERO)

    @property
    def is_zero(self):
        return self.tag == ZERO

    def to_json(self):
        if self.is_zero:
            return {"answer": ZERO}
        return {"answer": TWIST, "partition": list(self.partition),
                "shift": self.shift, "negative_flag": self.negative_flag}

    def to_text(self):
        if self.is_zero:
            return "0"
        s = "dSchur^(" + ",".join(map(str, self.partition)) + f")[-{self.shift}]"
        if self.negative_flag:
            s += "  (negative entries: outside the range of the theorem)"
        return s


@dataclass(frozen=True)
class GrassWeight:
    n: int
    d: int
    alpha: Partition
    beta: Partition

    def __init__(self, n, d, alpha, beta):
        alpha, beta = Partition(alpha), Partition(beta)
        if not 1 <= d <= n:
            raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
        if len(alpha) > d:
            raise ValueError(f"alpha={alpha} has more than d={d} parts")
        if len(beta) > n - d:
            raise ValueError(f"beta={beta} has more than n-d={n - d} parts")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    def weight(self):
        return Weight(self.alpha.padded(self.d) + self.beta.padded(self.n - self.d))


# permutations

def act(w, v):
    out = [None] * len(v)
    for j, x in enumerate(v):
        out[w[j]] = x
    return tuple(out)


def simple_reflection(i, n):
    """s_i (1-based) as a permutation of 0..n-1."""
    w = list(range(n))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def inversions(w):
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


def word_lengths(n):
    """Minimal length of each permutation as a word in simple reflections,
    by breadth first search on the Cayley graph."""
    start = tuple(range(n))
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(n - 1):
            # right multiplication by s_i swaps the values at positions i, i+1
            u = list(w)
            u[i], u[i + 1] = u[i + 1], u[i]
            u = tuple(u)
            if u not in dist:
                dist[u] = dist[w] + 1
                queue.append(u)
    return dist


def rho(n):
    return tuple(range(n - 1, -1, -1))


def dot(w, lam):
    """w . lam = w(lam + rho) - rho."""
    lam = Weight(lam)
    r = rho(lam.n)
    moved = act(w, lam.plus_rho())
    return Weight(tuple(a - b for a, b in zip(moved, r)))


def dot_action(i, lam):
    lam = Weight(lam)
    if not 1 <= i <= lam.n - 1:
        raise ValueError(f"simple reflection index {i} out of range 1..{lam.n - 1}")
    e = list(lam.entries)
    a, b = e[i - 1], e[i]
    e[i - 1], e[i] = b - 1, a + 1
    return Weight(e)


# Bott's algorithm

def has_repeat(lam):
    v = Weight(lam).plus_rho()
    return len(set(v)) < len(v)


def bott_algorithm(lam):
    lam = Weight(lam)
    v = lam.plus_rho()
    if len(set(v)) < len(v):
        return BottAnswer.zero()
    order = sorted(range(lam.n), key=lambda j: -v[j])
    # w sends position order[k] to k
    w = [0] * lam.n
    for k, j in enumerate(order):
        w[j] = k
    w = tuple(w)
    mu = dot(w, lam).entries
    return BottAnswer(TWIST, mu, inversions(w), any(x < 0 for x in mu), w)


def bott_brute_force(lam):
    """All w in S_n with w(lam + rho) strictly decreasing."""
    lam = Weight(lam)
    v = lam.plus_rho()
    out = []
    for w in permutations(range(lam.n)):
        u = act(w, v)
        if all(u[k] > u[k + 1] for k in range(len(u) - 1)):
            out.append(w)
    return out


def grassmann_bott(gw):
    return bott_algorithm(gw.weight())


def flag_blocks(lam, dd):
    """The blocks (lam_{d_{j-1}+1}, .., lam_{d_j}) with d_0 = 0, d_{k+1} = n."""
    lam = Weight(lam)
    dd = list(dd)
    if any(not 1 <= d <= lam.n for d in dd) or \
            any(a >= b for a, b in zip(dd, dd[1:])):
        raise ValueError(f"dd={tuple(dd)} is not increasing inside 1..{lam.n}")
    cuts = [0] + dd + ([] if dd and dd[-1] == lam.n else [lam.n])
    return [lam.entries[a:b] for a, b in zip(cuts, cuts[1:])]


def partial_flag_bott(lam, dd):
    lam = Weight(lam)
    for j, block in enumerate(flag_blocks(lam, dd), 1):
        if any(x < 0 for x in block) or \
                any(block[k] < block[k + 1] for k in range(len(block) - 1)):
            raise ValueError(f"block {j} = {block} is not a partition")
    return bott_algorithm(lam)


def char_free_vanishing(lam):
    """True when lam has consecutive entries (k - l, k^m) or (k^m, k + l)
    with 1 <= l <= m."""
    e = Weight(lam).entries
    n = len(e)
    for i in range(n):
        for m in range(1, n - i):
            # (k - l, k, .., k) at positions i .. i + m
            k = e[i + 1]
            if all(e[i + t] == k for t in range(1, m + 1)) and 1 <= k - e[i] <= m:
                return True
            # (k, .., k, k + l) at positions i .. i + m
            k = e[i]
            if all(e[i + t] == k for t in range(m)) and 1 <= e[i + m] - k <= m:
                return True
    return False


def char_p_hypothesis(lam, p):
    e = Weight(lam).entries
    n = len(e)
    if p == 0:
        return all(e[i] - e[i + 1] >= -1 for i in range(n - 1))
    return all(0 <= e[i] - e[j] - (i - j) <= p
               for i in range(n) for j in range(i + 1, n))


def char_p_variant(lam, p):
    """Symbolic pushforwards of L(w . lam) for all w in S_n under the
    hypothesis of the positive characteristic variant (p = 0 means
    characteristic zero)."""
    lam = Weight(lam)
    n = lam.n
    rep = Report(weight=list(lam.entries), p=p)
    if not char_p_hypothesis(lam, p):
        rep.update(applicable=False, case=None, answers=[])
        rep["pass"] = True
        return rep
    e = lam.entries
    case1 = any(e[i] - e[i + 1] == -1 for i in range(n - 1))
    if not case1 and not lam.is_dominant():
        rep.update(applicable=True, case=None, answers=[])
        rep["pass"] = False
        return rep
    lengths = word_lengths(n)
    answers = []
    for w in sorted(lengths):
        wl = dot(w, lam)
        if case1:
            ans = BottAnswer.zero()
        else:
            ans = BottAnswer(TWIST, e, lengths[w], any(x < 0 for x in e), w)
        answers.append({"w": list(w), "weight": list(wl.entries),
                        "answer": ans.to_json()})
    rep.update(applicable=True, case=1 if case1 else 2, answers=answers)
    rep["pass"] = True
    return rep


# the P^1 oracle

def p1_cohomology_oracle(t):
    """(h^0, h^1) of O(t) on P^1 over Q from the two chart Cech complex.

    On U_0 = Spec Q[x] the sections are x^a, a >= 0; on U_1 = Spec Q[1/x]
    they are x^a, a <= t (after trivializing by X_0^t); on the overlap all
    x^a.  Everything is graded by a, and outside [-|t| - 2, |t| + 2] the Cech
    differential is an isomorphism, so the truncated complex computes the
    cohomology.
    """
    if abs(t) > 50:
        raise ValueError("|t| must be at most 50")
    B = abs(t) + 2
    window = range(-B, B + 1)
    c0 = [(0, a) for a in window if a >= 0] + [(1, a) for a in window if a <= t]
    c1 = list(window)
    idx = {a: i for i, a in enumerate(c1)}
    M = ExactMatrix.zeros(len(c1), len(c0))
    for j, (chart, a) in enumerate(c0):
        M.data[idx[a]][j] = Fraction(1 if chart == 0 else -1)
    r = rank(M)
    return len(c0) - r, len(c1) - r


def _predicted_p1(ans):
    if ans.is_zero:
        return (0, 0)
    a, b = ans.partition
    h = [0, 0]
    h[ans.shift] = a - b + 1
    return tuple(h)


def verify_bott_p1(bound):
    """Bott for n = 2 against the Cech oracle, |lam_1 - lam_2| <= bound,
    lam_2 in 0..2 and lam_1 >= 0."""
    cases, ok = [], True
    for l2 in range(3):
        for t in range(-bound, bound + 1):
            l1 = l2 + t
            if l1 < 0:
                continue
            ans = bott_algorithm((l1, l2))
            pred = _predicted_p1(ans)
            got = p1_cohomology_oracle(t)
            good = pred == got
            ok &= good
            cases.append({"weight": [l1, l2], "bott": ans.to_json(),
                          "predicted": list(pred), "cech": list(got), "pass": good})
    return Report(claim=f"Bott vs Cech on P^1, range {bound}", cases=cases,
                  **{"pass": ok})


# Koszul complexes and Littlewood-Richardson symmetry

def _shifted_plus(k, nu, d):
    nu = Partition(nu).padded(d)
    return Partition(tuple(k + x for x in nu))


def _complement(k, mu, d):
    mu = Partition(mu).padded(d)
    if any(x > k for x in mu):
        return None
    return Partition(tuple(k - x for x in reversed(mu)))


def lr_symmetry_check(lam, mu, nu, n, d):
    """c^lam_{mu nu} against c^{(n-d)+nu}_{lam, (n-d)-mu}; the reading with
    (n+d)+nu is reported alongside."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if len(mu) > d or (mu and mu[0] > n - d) or len(nu) > d or len(lam) > d:
        raise ValueError("need mu inside the d x (n-d) box and lam, nu of length <= d")
    comp = _complement(n - d, mu, d)
    lhs = lr_coefficient(mu, nu, lam)
    rhs = lr_coefficient(lam, comp, _shifted_plus(n - d, nu, d))
    alt = lr_coefficient(lam, comp, _shifted_plus(n + d, nu, d))
    rep = _report(f"LR symmetry lam={lam} mu={mu} nu={nu} n={n} d={d}",
                  lhs, rhs, [], {"alternative": alt, "alternative_holds": alt == lhs})
    return rep


def lr_symmetry_sweep(max_size=5, max_n=5, max_d=3):
    """All (lam, mu, nu) with |lam| <= max_size; returns counts for both
    readings."""
    checked = failed = alt_failed = 0
    first = None
    for n in range(1, max_n + 1):
        for d in range(1, min(max_d, n) + 1):
            for s in range(max_size + 1):
                for lam in partitions_of(s, max_len=d):
                    for mu in partitions_in_box(d, n - d):
                        if mu.size > s:
                            continue
                        for nu in partitions_of(s - mu.size, max_len=d):
                            rep = lr_symmetry_check(lam, mu, nu, n, d)
                            checked += 1
                            if not rep["pass"]:
                                failed += 1
                                first = first or rep
                            if not rep["alternative_holds"]:
                                alt_failed += 1
    return Report(claim="LR symmetry sweep", checked=checked, failed=failed,
                  alternative_failed=alt_failed, first_failure=first,
                  **{"pass": failed == 0 and checked > 0})


def koszul_rank_formula(lam, m, n, d, k):
    lam = Partition(lam)
    total, terms = 0, []
    for mu in partitions_in_box(d, min(m, n - d)):
        if mu.size != k:
            continue
        comp = _complement(n - d, mu, d)
        for nu in partitions_of(lam.size - k, max_len=d):
            c = lr_coefficient(lam, comp, _shifted_plus(n - d, nu, d))
            if not c:
                continue
            v = ssyt_count(conjugate(mu), m) * ssyt_count(nu, n) * c
            if v:
                total += v
                terms.append({"mu": list(mu), "nu": list(nu), "value": v})
    return total, terms


def koszul_component_rank(lam, m, n, d, k):
    from .schur_complexes import schur_complex_ranks
    lam = Partition(lam)
    lt = conjugate(lam)
    if not (lt.part(0) <= d <= n - m) or not 0 <= k <= m * d:
        raise ValueError("need lam^t_1 <= d <= n - m and 0 <= k <= m d")
    lhs, terms = koszul_rank_formula(lam, m, n, d, k)
    ranks = schur_complex_ranks(lam, m, n)
    rhs = ranks[k] if k < len(ranks) else 0
    return _report(f"Koszul rank lam={lam} m={m} n={n} d={d} k={k}", lhs, rhs, terms)
