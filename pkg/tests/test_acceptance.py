"""End-to-end acceptance checks over the whole catalog.

The catalog is swept once per session; each criterion then reads the stored
results and logs one PASS/FAIL line (printed in the terminal summary).
"""
import time
from dataclasses import dataclass
from typing import Optional

import pytest

from u3atlas import catalog, genlib as gl
from u3atlas.chardeg import DegreeProfile, character_degrees, choose_prime, next_admissible_prime, verify_profile
from u3atlas.cyclotomic import root_of_unity
from u3atlas.engine import (MONOMIAL_STU, NON_MONOMIAL, RVW, closure, commuting_pairs, fingerprint,
                            has_cyclic_direct_factor, is_subgroup_of_su3, monomial_class)
from u3atlas.mat3 import identity

pytestmark = pytest.mark.slow

NON_MONOMIAL_SERIES = {"Xi", "XiHat", "Pi", "Theta", "Upsilon", "UpsilonPrime", "Omega"}

FINGERPRINT_PAIRS = [
    ("Xn(n=3)", "Wnm(n=1,m=2)"),
    ("Xn(n=9)", "Jm(m=1)"),
    ("Znm(n=9,m=2)", "Zpnm(n=9,m=2)"),
    ("Hnmj(n=3,m=2,j=2)", "Gmj(m=2,j=2)"),
]
DOUBLED_PAIRS = [("Xi(m=%d,j=%d)" % mj, "XiHat(m=%d,j=%d)" % mj) for mj in ((1, 3), (1, 4), (2, 3))]
FINGERPRINT_SPECS = {s for pair in FINGERPRINT_PAIRS for s in pair}

ANCHORS = {
    "Delta3n2(n=2)": {1: 3, 3: 1},
    "Delta6n2(n=2)": {1: 2, 2: 1, 3: 2},
    "Delta6n2(n=3)": {1: 2, 2: 4, 3: 4},
    "D3ll(l=3)": {1: 6, 2: 3, 3: 12, 6: 1},
    "T(r=7,k=2,m=2)": {1: 9, 3: 6},
    "Xi(m=1,j=3)": {1: 8, 3: 16, 4: 4},
    "Pi(m=1,j=2)": {1: 8, 2: 2, 3: 16, 6: 4, 8: 2},
    "Upsilon(m=2)": {1: 3, 2: 3, 3: 7, 6: 6, 8: 3, 9: 2},
    "Ytildej(j=0)": {1: 6, 2: 3, 3: 12, 6: 1},
}

# exceptional SU(3) groups reproduced by non-monomial constructions
EXCEPTIONAL = {
    "Xi(m=1,j=2)": (108, {1: 4, 3: 8, 4: 2}),
    "Theta(m=1)": (216, {1: 4, 2: 1, 3: 8, 6: 2, 8: 1}),
    "UpsilonPrime(m=2)": (648, {1: 3, 2: 3, 3: 7, 6: 6, 8: 3, 9: 2}),
}

# lowest (r, k) pairs with r <= 217
RK_TABLE = [
    (7, 2), (13, 3), (19, 7), (31, 5), (37, 10), (43, 6), (49, 18), (61, 13), (67, 29),
    (73, 8), (79, 23), (91, 9), (91, 16), (97, 35), (103, 46), (109, 45), (127, 19), (133, 11),
    (133, 30), (139, 42), (151, 32), (157, 12), (163, 58), (169, 22), (181, 48), (193, 84),
    (199, 92), (211, 14), (217, 25), (217, 67),
]

# (r, k-list, l-list) for C groups of order 3 r l^2 < 2000
C_TABLE_MULTI = [
    (3, [1], [3, 6, 9, 12]), (7, [2], range(1, 10)), (13, [3], range(1, 8)), (19, [7], range(1, 6)),
    (21, [4], [3]), (31, [5], range(1, 5)), (37, [10], range(1, 5)), (39, [16], [3]),
    (43, [6], [1, 2, 3]), (49, [18], [1, 2, 3]), (57, [7], [3]), (61, [13], [1, 2, 3]),
    (67, [29], [1, 2, 3]), (73, [8], [1, 2, 3]), (79, [23], [1, 2]), (91, [9, 16], [1, 2]),
    (97, [35], [1, 2]), (103, [46], [1, 2]), (109, [45], [1, 2]), (127, [19], [1, 2]),
    (133, [11, 30], [1, 2]), (139, [42], [1, 2]), (151, [32], [1, 2]), (157, [12], [1, 2]),
    (163, [58], [1, 2]), (169, [22], [1]), (181, [48], [1]),
]
C_TABLE_SINGLE = [
    (193, [84]), (199, [92]), (211, [14]), (217, [25, 67]), (223, [39]), (229, [94]),
    (241, [15]), (247, [68, 87]), (259, [100, 121]), (271, [28]), (277, [116]), (283, [44]),
    (301, [79, 135]), (307, [17]), (313, [98]), (331, [31]), (337, [128]), (343, [18]),
    (349, [122]), (361, [68]), (367, [83]), (373, [88]), (379, [51]), (397, [34]),
    (403, [87, 191]), (409, [53]), (421, [20]), (427, [74, 135]), (433, [198]), (439, [171]),
    (457, [133]), (463, [21]), (469, [37, 163]), (481, [100, 211]), (487, [232]), (499, [139]),
    (511, [81, 137]), (523, [60]), (541, [129]), (547, [40]), (553, [23, 102]), (559, [165, 178]),
    (571, [109]), (577, [213]), (589, [87, 273]), (601, [24]), (607, [210]), (613, [65]),
    (619, [252]), (631, [43]), (637, [165, 263]), (643, [177]), (661, [296]),
]


@dataclass
class Result:
    entry: catalog.CatalogEntry
    order: int
    su3: bool
    profile: DegreeProfile
    class_count: int
    sum_rules: bool
    shape: str
    cyclic_factor: Optional[int]
    pair_classes: Optional[int] = None
    alt_profile: Optional[DegreeProfile] = None
    fingerprint: object = None
    seconds: float = 0.0


@pytest.fixture(scope="module")
def sweep():
    results = {}
    for entry in catalog.enumerate(max_order=2000):
        t0 = time.perf_counter()
        G = catalog.build(entry.spec)
        profile = character_degrees(G)
        r = Result(entry, len(G), is_subgroup_of_su3(G), profile, G.classes.count,
                   verify_profile(profile, G), monomial_class(G), has_cyclic_direct_factor(G))
        if len(G) <= 200:
            pairs = commuting_pairs(G)
            r.pair_classes = pairs // len(G) if pairs % len(G) == 0 else -1
        if len(G) <= 300 and len(G) > 1:
            p = next_admissible_prime(G, choose_prime(G))
            r.alt_profile = character_degrees(G, p=p)
        if str(entry.spec) in FINGERPRINT_SPECS:
            r.fingerprint = fingerprint(G, profile)
        r.seconds = time.perf_counter() - t0
        results[str(entry.spec)] = r
    return results


def _log(log, num, title, failures, detail=""):
    ok = not failures
    msg = detail if ok else "%d failures, first: %s" % (len(failures), failures[0])
    log.append((num, title, ok, msg))
    print("criterion %d %s: %s" % (num, "PASS" if ok else "FAIL", msg))
    assert ok, failures[:10]


def test_c01_orders(sweep, acceptance_log):
    bad = [(s, r.entry.expected_order, r.order) for s, r in sweep.items() if r.order != r.entry.expected_order]
    times = sorted(r.seconds for r in sweep.values())
    _log(acceptance_log, 1, "group orders", bad,
         "%d entries, median %.3fs, total %.0fs" % (len(times), times[len(times) // 2], sum(times)))


def test_c02_su3_split(sweep, acceptance_log):
    bad = [(s, r.entry.expected_su3, r.su3) for s, r in sweep.items() if r.su3 != r.entry.expected_su3]
    crossover = ["Xi(m=1,j=2)", "Theta(m=1)", "UpsilonPrime(m=2)"]
    crossover += [s for s in sweep if s.startswith("Zppnm(") and s.endswith("m=2)")]
    crossover += [s for s in sweep if s.startswith("Zpnmj(") and s.endswith("m=2,j=1)")]
    bad += [(s, "expected su3", sweep[s].su3) for s in crossover if not sweep[s].su3]
    n_su3 = sum(r.su3 for r in sweep.values())
    _log(acceptance_log, 2, "SU(3)/U(3) placement", bad,
         "%d in SU(3), %d cross-over rows" % (n_su3, len(crossover)))


def test_c03_formula_profiles(sweep, acceptance_log):
    bad = []
    checked = 0
    for s, r in sweep.items():
        if r.entry.expected_profile is not None:
            checked += 1
            if r.profile != r.entry.expected_profile:
                bad.append((s, str(r.entry.expected_profile), str(r.profile)))
    for s, counts in ANCHORS.items():
        if sweep[s].profile != DegreeProfile(counts):
            bad.append((s, counts, str(sweep[s].profile)))
    _log(acceptance_log, 3, "closed-form degree profiles", bad,
         "%d entries, %d anchors" % (checked, len(ANCHORS)))


def test_c04_exceptional_fixtures(sweep, acceptance_log):
    bad = []
    for s, (order, counts) in EXCEPTIONAL.items():
        r = sweep[s]
        if r.order != order or r.profile != DegreeProfile(counts) or not r.su3:
            bad.append((s, order, counts, r.order, str(r.profile)))
    _log(acceptance_log, 4, "exceptional SU(3) fixtures", bad, ", ".join(EXCEPTIONAL))


def test_c05_sum_rules(sweep, acceptance_log):
    bad = [s for s, r in sweep.items() if not r.sum_rules]
    _log(acceptance_log, 5, "sum rules on every profile", bad, "%d entries" % len(sweep))


def test_c06_trichotomy(sweep, acceptance_log):
    bad = []
    for s, r in sweep.items():
        dims = set(r.profile.counts)
        if r.entry.spec.series in NON_MONOMIAL_SERIES:
            if r.shape != NON_MONOMIAL or dims <= {1, 2, 3, 6}:
                bad.append((s, r.shape, sorted(dims)))
        elif r.shape == RVW:
            if not dims <= {1, 3}:
                bad.append((s, r.shape, sorted(dims)))
        elif r.shape == MONOMIAL_STU:
            if not dims <= {1, 2, 3, 6}:
                bad.append((s, r.shape, sorted(dims)))
        else:
            bad.append((s, r.shape, sorted(dims)))
    _log(acceptance_log, 6, "monomial / non-monomial trichotomy", bad)


def test_c07_cyclic_factor(sweep, acceptance_log):
    bad = [(s, r.cyclic_factor) for s, r in sweep.items() if r.cyclic_factor is not None]
    a4z2 = closure([gl.gen_E(), gl.gen_L(2), -identity()])
    got = has_cyclic_direct_factor(a4z2)
    if got != 2:
        bad.append(("A4 x Z2", got))
    d12z5 = closure([gl.gen_E(), gl.gen_L(2), identity() * root_of_unity(5, 1)])
    got = has_cyclic_direct_factor(d12z5)
    if got != 5:
        bad.append(("Delta(12) x Z5", got))
    _log(acceptance_log, 7, "cyclic direct factor filter", bad)


def test_c08_parameter_tables(acceptance_log):
    bad = []
    got = catalog.rk_pairs(217)
    if list(got) != RK_TABLE:
        bad.append(("rk_pairs", got))
    expected = set()
    for r, ks, ls in C_TABLE_MULTI:
        expected |= {(r, k, l) for k in ks for l in ls}
    for r, ks in C_TABLE_SINGLE:
        expected |= {(r, k, 1) for k in ks}
    got = catalog.c_group_parameters(2000)
    if sorted(got) != sorted(expected) or len(got) != len(set(got)):
        bad.append(("c_group_parameters", sorted(set(got) ^ expected)))
    _log(acceptance_log, 8, "parameter tables", bad,
         "%d (r,k) pairs, %d C groups" % (len(RK_TABLE), len(expected)))


def test_c09_isomorphy_fingerprints(sweep, acceptance_log):
    bad = []
    for a, b in FINGERPRINT_PAIRS:
        if sweep[a].fingerprint != sweep[b].fingerprint:
            bad.append((a, b))
    for a, b in DOUBLED_PAIRS:
        if sweep[b].profile != sweep[a].profile.doubled():
            bad.append((b, "2x" + a))
    _log(acceptance_log, 9, "isomorphy spot checks", bad)


def test_c10_oracle_equivalence(sweep, acceptance_log):
    bad = []
    n_pairs = n_primes = 0
    for s, r in sweep.items():
        if r.pair_classes is not None:
            n_pairs += 1
            if r.pair_classes != r.class_count:
                bad.append((s, "classes", r.class_count, r.pair_classes))
        if r.alt_profile is not None:
            n_primes += 1
            if r.alt_profile != r.profile:
                bad.append((s, "second prime", str(r.profile), str(r.alt_profile)))
    _log(acceptance_log, 10, "brute-force and second-prime oracles", bad,
         "%d commuting-pair checks, %d second-prime checks" % (n_pairs, n_primes))
