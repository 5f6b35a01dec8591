"""Column by column cokernels of box maps.

A box-map cokernel has the shape

    A_1 (x) ... (x) A_s  /  sum_j  A_1 (x) .. (x) Im(R_j -> A_j (x) A_{j+1}) (x) .. (x) A_s

and by right exactness of the tensor product it can be built one factor at a
time: Q_1 = A_1 and

    Q_{j+1} = Q_j (x) A_{j+1} / (pi_j (x) 1)(Q_{j-1} (x) Im R_j)

where pi_j: Q_{j-1} (x) A_j -> Q_j is the previous projection.  Every map
involved preserves a multi-degree ("weight") so each step splits into small
blocks, and each block is handled by SparseQuotient.

Factors may carry a differential of homological degree -1 (the factors of a
Schur complex); the quotients then inherit the induced differential
d(q (x) a) = dq (x) a + (-1)^h(q) q (x) da, computed by lifting and projecting.
"""
from .exact_linalg import SparseQuotient, StructuralError


class Factor:
    """A free module with labelled basis, weights, homological degrees and
    an optional differential label -> {label: coeff}."""

    def __init__(self, basis, weight, hdeg=None, diff=None):
        self.basis = list(basis)
        self.weight = weight
        self.hdeg = hdeg or (lambda b: 0)
        self.diff = diff


def _add(vec, key, c):
    v = vec.get(key, 0) + c
    if v:
        vec[key] = v
    else:
        vec.pop(key, None)


def _vadd(w1, w2):
    return tuple(a + b for a, b in zip(w1, w2))


class Stage:
    """One quotient Q_j: basis weights and degrees, the projection from
    Q_{j-1} (x) A_j, lifts, and the induced differential."""

    def __init__(self, weights, hdegs, proj, lifts, diff):
        self.weights = weights    # list, one per basis element
        self.hdegs = hdegs
        self.proj = proj          # {(q, a): {index: coeff}}
        self.lifts = lifts        # list of {(q, a): coeff}
        self.diff = diff          # list of {index: coeff} or None

    @property
    def rank(self):
        return len(self.weights)


class Tower:
    """Iterated quotients for factors A_1..A_s and pair relations.

    relations[j] (0-based, between factors j and j+1) is a list of dicts
    {(a_j, a_{j+1}): coeff}, each homogeneous for the weight.
    """

    def __init__(self, factors, relations, zero_weight, with_diff=False):
        self.factors = factors
        self.with_diff = with_diff
        unit = Stage([zero_weight], [0], None, [None],
                     [dict()] if with_diff else None)
        self.stages = [unit]
        for j, A in enumerate(factors):
            rels = relations[j - 1] if j >= 1 else []
            self.stages.append(self._step(j, A, rels))

    @property
    def top(self):
        return self.stages[-1]

    def _step(self, j, A, rels):
        Q = self.stages[-1]
        prevprev = self.stages[-2] if j >= 1 else None
        pi_prev = Q.proj
        blocks = {}
        for q, wq in enumerate(Q.weights):
            hq = Q.hdegs[q]
            for a in A.basis:
                w = _vadd(wq, A.weight(a))
                blk = blocks.get(w)
                if blk is None:
                    blk = blocks[w] = ([], {})
                blk[1][(q, a)] = len(blk[0])
                blk[0].append((q, a, hq + A.hdeg(a)))
        block_rels = {w: [] for w in blocks}
        if rels:
            Aprev = self.factors[j - 1]
            for y in rels:
                ay, by = next(iter(y))
                wy = _vadd(Aprev.weight(ay), A.weight(by))
                for qq, wqq in enumerate(prevprev.weights):
                    w = _vadd(wqq, wy)
                    if w not in blocks:
                        continue
                    idx = blocks[w][1]
                    vec = {}
                    for (x, z), c in y.items():
                        for q, d in pi_prev[(qq, x)].items():
                            _add(vec, idx[(q, z)], c * d)
                    if vec:
                        block_rels[w].append(vec)
        weights, hdegs, lifts = [], [], []
        proj = {}
        for w in sorted(blocks):
            pairs, idx = blocks[w]
            sq = SparseQuotient(len(pairs), block_rels[w])
            if sq.torsion:
                raise StructuralError(
                    f"torsion {sq.torsion} in an intermediate quotient (weight {w})")
            base = len(weights)
            for t in range(sq.free_rank):
                weights.append(w)
                lift = sq.lift(t)
                lifts.append({pairs[g][:2]: c for g, c in lift.items()})
                hdegs.append(pairs[next(iter(lift))][2] if lift else 0)
            for g, (q, a, _) in enumerate(pairs):
                proj[(q, a)] = {base + t: c for t, c in sq.project(g).items()}
        stage = Stage(weights, hdegs, proj, lifts, None)
        if self.with_diff:
            stage.diff = [self._induced(Q, A, proj, lift) for lift in lifts]
            # the differential is well defined on the quotient only if every
            # relation is sent into the span of the relations
            for w, vecs in block_rels.items():
                pairs = blocks[w][0]
                for vec in vecs:
                    img = self._induced(Q, A, proj, {pairs[g][:2]: c
                                                     for g, c in vec.items()})
                    if img:
                        raise StructuralError(
                            "the relations are not preserved by the differential")
        return stage

    @staticmethod
    def _induced(Q, A, proj, lift):
        out = {}
        for (q, a), c in lift.items():
            for q2, d in Q.diff[q].items():
                for t, e in proj[(q2, a)].items():
                    _add(out, t, c * d * e)
            if A.diff is not None:
                sign = -1 if Q.hdegs[q] % 2 else 1
                for a2, d in A.diff(a).items():
                    for t, e in proj[(q, a2)].items():
                        _add(out, t, sign * c * d * e)
        return out

    def project_tensor(self, labels):
        """Image of a pure tensor a_1 (x) .. (x) a_s in the top quotient."""
        vec = {0: 1}
        for stage, a in zip(self.stages[1:], labels):
            nxt = {}
            for q, c in vec.items():
                for t, d in stage.proj[(q, a)].items():
                    _add(nxt, t, c * d)
            vec = nxt
        return vec

    def lift_tensor(self, t):
        """A preimage of top basis element t as {(a_1,..,a_s): coeff}."""
        level = [(t, (), 1)]
        for stage in reversed(self.stages[1:]):
            nxt = []
            for q, tail, c in level:
                for (qq, a), d in stage.lifts[q].items():
                    nxt.append((qq, (a,) + tail, c * d))
            level = nxt
        res = {}
        for _, labels, c in level:
            _add(res, labels, c)
        return res
