"""Verification suites, one per acceptance criterion, plus the small named
suites of the command line.

A suite is a function returning a list of cases
{"inputs": .., "expected": .., "actual": .., "pass": bool}; run_suite wraps
it into a SuiteReport.  Cases of the larger suites are independent and can be
spread over worker processes (SCHURKIT_WORKERS); results are always
collected in input order so reports do not depend on the worker count.
"""
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from math import factorial

from . import bott, multilinear as ml
from .exact_linalg import StructuralError, determinant
from .partitions import (Partition, SkewShape, conjugate, lr_coefficient,
                         partitions_in_box,
                         partitions_of, ssyt_count, subpartitions)
from . import schur_complexes as sc
from . import schur_weyl as sw


def workers():
    try:
        return max(1, int(os.environ.get("SCHURKIT_WORKERS", "1")))
    except ValueError:
        return 1


def _progress(msg):
    if os.environ.get("SCHURKIT_QUIET"):
        return
    print(msg, file=sys.stderr, flush=True)


def _case(inputs, expected, actual, ok=None):
    return {"inputs": inputs, "expected": expected, "actual": actual,
            "pass": bool(expected == actual if ok is None else ok)}


def _map(fn, items, label):
    items = list(items)
    n = workers()
    if n > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=n) as ex:
            out = list(ex.map(fn, items, chunksize=max(1, len(items) // (8 * n))))
    else:
        out = []
        step = max(1, len(items) // 10)
        for i, x in enumerate(items):
            out.append(fn(x))
            if (i + 1) % step == 0:
                _progress(f"  {label}: {i + 1}/{len(items)}")
    return out


def skew_shapes(max_size):
    for N in range(max_size + 1):
        for lam in partitions_of(N):
            for mu in subpartitions(lam):
                yield SkewShape(lam, mu)


# 1. freeness and rank

def _freeness_case(args):
    key, r, variant = args
    shape = SkewShape(*key)
    expected = {"rank": ssyt_count(shape, r), "torsion": []}
    try:
        build = sw.schur_module if variant == sw.SCHUR else sw.weyl_module
        mod = build(shape, r).module
        actual = {"rank": mod.free_rank, "torsion": list(mod.torsion)}
    except StructuralError as e:
        actual = {"error": str(e)}
    return _case({"shape": str(shape), "r": r, "variant": variant}, expected, actual)


def suite_freeness(max_size=8, max_r=4):
    items = [(s.key(), r, v) for s in skew_shapes(max_size)
             for r in range(max_r + 1) for v in (sw.SCHUR, sw.WEYL)]
    return _map(_freeness_case, items, "freeness")


# 2. Cauchy

def suite_cauchy(max_n=6, max_ab=3):
    out = []
    for n in range(max_n + 1):
        for a in range(1, max_ab + 1):
            for b in range(1, max_ab + 1):
                rep = sw.verify_cauchy(n, a, b)
                out.append(_case({"n": n, "a": a, "b": b}, rep["lhs"], rep["rhs"]))
    return out


# 3. direct sum and skew decomposition

def _direct_sum_case(args):
    key, a, b = args
    shape = SkewShape(*key)
    rep = sw.verify_direct_sum(shape, a, b, modules=True)
    skew = sw.verify_skew(shape, a + b)
    expected = {"direct_sum": rep["lhs"], "skew": skew["lhs"]}
    actual = {"direct_sum": rep["rhs"], "skew": skew["rhs"]}
    if "module_graded_ranks" in rep:
        actual["module_graded_ranks"] = rep["module_graded_ranks"]
    return _case({"shape": str(shape), "a": a, "b": b}, expected, actual,
                 rep["pass"] and skew["pass"])


def suite_direct_sum(max_size=8, max_split=3):
    items = [(s.key(), a, b) for s in skew_shapes(max_size)
             for a in range(max_split + 1) for b in range(max_split + 1) if a + b]
    return _map(_direct_sum_case, items, "direct-sum")


def suite_skew(max_size=6, max_r=4):
    out = []
    for s in skew_shapes(max_size):
        for r in range(1, max_r + 1):
            rep = sw.verify_skew(s, r)
            out.append(_case({"shape": str(s), "r": r}, rep["lhs"], rep["rhs"]))
    return out


# 4. Littlewood-Richardson rule

def suite_lr(max_size=8, max_r=4):
    out = []
    for s in range(max_size + 1):
        for s1 in range(s + 1):
            for lam in partitions_of(s1):
                for nu in partitions_of(s - s1):
                    for r in range(1, max_r + 1):
                        rep = sw.verify_lr(lam, nu, r)
                        out.append(_case({"lambda": list(lam), "nu": list(nu), "r": r},
                                         rep["lhs"], rep["rhs"]))
                    # the two classical symmetries, for every gamma of the right size
                    for gamma in partitions_of(s):
                        c = lr_coefficient(lam, nu, gamma)
                        swapped = lr_coefficient(nu, lam, gamma)
                        conj = lr_coefficient(conjugate(lam), conjugate(nu),
                                              conjugate(gamma))
                        out.append(_case({"lambda": list(lam), "nu": list(nu),
                                          "gamma": list(gamma), "symmetry": True},
                                         [c, c], [swapped, conj]))
    return out


# 5. Schur complex structure

def _complex_case(args):
    key, m, n, kind, seed = args
    shape = SkewShape(*key)
    if kind == "zero":
        rho = sc.TwoTermMap.zero(m, n)
    else:
        rho = sc.random_map(m, n, random.Random(seed))
    inputs = {"shape": str(shape), "m": m, "n": n, "rho": rho.rho.to_json()}
    try:
        cx = sc.schur_complex(shape, rho)
        cx.complex.check()
    except StructuralError as e:
        return _case(inputs, "d^2 = 0", {"error": str(e)}, False)
    ranks = cx.ranks()
    f1, f2 = [], []
    for k in range(len(ranks)):
        (s1, _), (s2, _) = sc.component_rank_formulas(shape, m, n, k)
        f1.append(s1)
        f2.append(s2)
    return _case(inputs, {"I_k": f1, "J_k": f2}, {"I_k": ranks, "J_k": ranks})


def suite_schur_complex(max_size=6, max_mn=3, seed=2024):
    items = []
    k = 0
    for s in skew_shapes(max_size):
        for m in range(max_mn + 1):
            for n in range(max_mn + 1):
                for kind in ("zero", "random"):
                    items.append((s.key(), m, n, kind, seed + k))
                    k += 1
    return _map(_complex_case, items, "schur-complex")


# 6. torsion, decalage and classical truncation

def _homology_strings(shape, rho):
    return [str(h) for h in sc.derived_schur_homology(shape, rho)]


def suite_torsion(max_size=5, max_m=3, cyclic=(2, 3, 4, 6)):
    out = [
        _case({"shape": "2", "rho": [[2]]}, ["Z/2", "0", "0"],
              _homology_strings((2,), 2)),
        _case({"shape": "1,1", "rho": [[2]]}, ["0", "Z/2", "0"],
              _homology_strings((1, 1), 2)),
    ]
    for s in skew_shapes(max_size):
        for m in range(max_m + 1):
            rep = sc.verify_decalage(s, m)
            out.append(_case({"decalage": str(s), "m": m}, rep["rhs"], rep["lhs"],
                             rep["pass"]))
    for a in cyclic:
        for N in range(1, 5):
            for lam in partitions_of(N):
                for n in (1, 2, 3):
                    rho = sc.TwoTermMap([[a]] + [[0]] * (n - 1), 1, n)
                    rep = sc.verify_classical_truncation(lam, rho)
                    out.append(_case({"truncation": list(lam), "a": a, "n": n},
                                     rep["rhs"], rep["lhs"], rep["pass"]))
    return out


# 7. split acyclicity

def suite_acyclicity(count=20, seed=7, max_n=4, max_size=5):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        m = rng.randint(1, max_n - 1)
        n = rng.randint(m + 1, max_n)
        lams = [l for N in range(1, max_size + 1) for l in partitions_of(N)
                if len(l) <= n - m]
        lam = rng.choice(lams)
        rho = sc.random_split_injective(m, n, rng)
        hs = sc.derived_schur_homology(lam, rho)
        expected = [str(sc.PresentedModule(ssyt_count(lam, n - m)))] + \
            ["0"] * (len(hs) - 1)
        out.append(_case({"lambda": list(lam), "m": m, "n": n,
                          "rho": rho.rho.to_json()},
                         expected, [str(h) for h in hs]))
    return out


# 8. divided powers

def suite_divided_power(max_d=5, max_r=3, max_gram=6):
    out = []
    for d in range(max_d + 1):
        for r in range(1, max_r + 1):
            a, b = ml.alpha_beta(d, r)
            n = a.source.dim
            f = factorial(d)
            ba = (b.matrix @ a.matrix).data
            ab = (a.matrix @ b.matrix).data
            want = [[f * int(i == j) for j in range(n)] for i in range(n)]
            out.append(_case({"d": d, "r": r, "identity": "beta alpha, alpha beta"},
                             [want, want], [ba, ab]))
    for d in range(max_gram + 1):
        G = ml.gram_matrix(d)
        det = determinant(G)
        out.append(_case({"d": d, "gram": "unimodular anti-diagonal"},
                         {"antidiagonal": True, "abs_det": 1},
                         {"antidiagonal": ml.is_antidiagonal(G), "abs_det": abs(det),
                          "matrix": G.to_json()},
                         ml.is_antidiagonal(G) and abs(det) == 1))
    return out


# 9. Bott's algorithm

def _bott_case(lam, lengths):
    n = len(lam)
    ans = bott.bott_algorithm(lam)
    brute = bott.bott_brute_force(lam)
    repeat = bott.has_repeat(lam)
    checks = {}
    # exactly one of the two cases
    checks["exclusive"] = (repeat and not brute) or (not repeat and len(brute) == 1)
    checks["branch"] = ans.is_zero == repeat
    if not ans.is_zero:
        w = brute[0]
        checks["same_w"] = w == ans.permutation
        checks["length"] = ans.shift == bott.inversions(w) == lengths[w]
        mu = ans.partition
        checks["non_increasing"] = all(mu[k] >= mu[k + 1] for k in range(n - 1))
    if bott.char_free_vanishing(lam):
        checks["char_free_implies_zero"] = ans.is_zero
    for i in range(1, n):
        a = lam[i - 1] - lam[i]
        if a < -1:
            continue
        other = bott.bott_algorithm(bott.dot_action(i, lam))
        if a == -1:
            ok = ans.is_zero and other.is_zero
        elif ans.is_zero:
            ok = other.is_zero
        else:
            ok = (not other.is_zero and other.partition == ans.partition
                  and other.shift == ans.shift + 1)
        checks[f"swap_{i}"] = ok
    return _case({"weight": list(lam)}, {k: True for k in checks}, checks)


def suite_bott(max_entry=4, max_n=4):
    from itertools import product
    out = []
    for n in range(1, max_n + 1):
        lengths = bott.word_lengths(n)
        for lam in product(range(max_entry + 1), repeat=n):
            out.append(_bott_case(lam, lengths))
    return out


def suite_bott_p1(bound=8):
    rep = bott.verify_bott_p1(bound)
    return [_case({"weight": c["weight"]}, c["cech"], c["predicted"])
            for c in rep["cases"]]


# 11. Plucker

def suite_plucker(pairs=((4, 2), (5, 2)), max_m=3):
    out = []
    for n, d in pairs:
        for m in range(max_m + 1):
            ideal, ring = sw.plucker_graded_piece(n, d, m)
            out.append(_case({"n": n, "d": d, "m": m},
                             ssyt_count(Partition((m,) * d), n), ring))
    ideal, _ = sw.plucker_graded_piece(4, 2, 2)
    out.append(_case({"n": 4, "d": 2, "quadrics": True}, 1, ideal))
    return out


# 12. Koszul complexes and LR symmetry

def suite_koszul(max_size=5, max_n=5, max_d=3, koszul_m=2, koszul_size=4):
    out = []
    for n in range(1, max_n + 1):
        for d in range(1, min(max_d, n) + 1):
            for s in range(max_size + 1):
                for lam in partitions_of(s, max_len=d):
                    for mu in partitions_in_box(d, n - d):
                        if mu.size > s:
                            continue
                        for nu in partitions_of(s - mu.size, max_len=d):
                            rep = bott.lr_symmetry_check(lam, mu, nu, n, d)
                            out.append(_case({"lambda": list(lam), "mu": list(mu),
                                              "nu": list(nu), "n": n, "d": d},
                                             rep["lhs"], rep["rhs"]))
    for m in range(koszul_m + 1):
        for n in range(1, max_n + 1):
            for N in range(koszul_size + 1):
                for lam in partitions_of(N):
                    lt1 = conjugate(lam).part(0)
                    for d in range(max(lt1, 1), n - m + 1):
                        for k in range(m * d + 1):
                            rep = bott.koszul_component_rank(lam, m, n, d, k)
                            out.append(_case({"koszul": list(lam), "m": m, "n": n,
                                              "d": d, "k": k}, rep["lhs"], rep["rhs"]))
    return out


# 13. the skew short exact sequence

def suite_skew_ses(max_d=4, max_size=4):
    out = []
    for d in range(1, max_d + 1):
        for N in range(1, max_size + 1):
            for lam in partitions_of(N):
                if conjugate(lam)[0] > d:
                    continue
                _, rep = sw.skew_ses(lam, d)
                out.append(_case({"lambda": list(lam), "d": d},
                                 {"injective": True, "cokernel_free": True,
                                  "cokernel_rank": rep["rhs"]},
                                 {"injective": rep["injective"],
                                  "cokernel_free": rep["cokernel_free"],
                                  "cokernel_rank": rep["lhs"]}))
    return out


# registry: (criterion number or None, function, description)
SUITES = {
    "freeness": (1, suite_freeness, "box-map cokernels are free of rank ssyt"),
    "cauchy": (2, suite_cauchy, "Cauchy decompositions"),
    "direct-sum": (3, suite_direct_sum, "direct sum and skew decompositions"),
    "lr": (4, suite_lr, "Littlewood-Richardson rule and symmetries"),
    "schur-complex": (5, suite_schur_complex, "d^2 = 0 and component ranks"),
    "torsion": (6, suite_torsion, "torsion examples, decalage, truncation"),
    "acyclicity": (7, suite_acyclicity, "split acyclicity"),
    "divided-power": (8, suite_divided_power, "alpha/beta and the divided pairing"),
    "bott": (9, suite_bott, "Bott's algorithm, exhaustive sweep"),
    "bott-p1": (10, suite_bott_p1, "Bott against the Cech oracle on P^1"),
    "plucker": (11, suite_plucker, "Plucker coordinate ring dimensions"),
    "koszul": (12, suite_koszul, "Koszul ranks and LR symmetry"),
    "skew-ses": (13, suite_skew_ses, "the skew short exact sequence"),
    "skew": (None, suite_skew, "skew decomposition ranks"),
}


def criteria():
    """Suite names of the acceptance criteria in order."""
    return [name for name, (num, _, _) in sorted(
        SUITES.items(), key=lambda kv: (kv[1][0] is None, kv[1][0] or 0))
        if num is not None]


def run_suite(name, timing=False):
    num, fn, desc = SUITES[name]
    _progress(f"suite {name}: {desc}")
    t0 = time.perf_counter()
    cases = fn()
    elapsed = round((time.perf_counter() - t0) * 1000)
    report = {"suite": name, "criterion": num, "cases": cases,
              "passed": sum(c["pass"] for c in cases),
              "failed": sum(not c["pass"] for c in cases),
              "pass": all(c["pass"] for c in cases) and bool(cases)}
    if timing:
        report["elapsed_ms"] = elapsed
    _progress(f"suite {name}: {report['passed']}/{len(cases)} passed in {elapsed} ms")
    return report
