"""Finite matrix groups: closure, Cayley table and structural invariants.

After the closure everything is index arithmetic on the multiplication table
T[a, b] = index of elements[a] @ elements[b], so the matrices themselves are
only touched once per (element, generator) pair.
"""
import hashlib
import math
from collections import Counter
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import List, Optional, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .cyclotomic import field
from .mat3 import Mat3, PERM_SIGN

DEFAULT_CAP = 100_000

RVW = "RVW"
MONOMIAL_STU = "MONOMIAL_STU"
NON_MONOMIAL = "NON_MONOMIAL"


class CapExceeded(RuntimeError):
    pass


class NonUnitaryGenerator(ValueError):
    pass


@dataclass(frozen=True)
class ConjClasses:
    class_of: np.ndarray
    reps: np.ndarray
    sizes: np.ndarray
    inverse_class: np.ndarray

    @property
    def count(self):
        return len(self.reps)


@dataclass(frozen=True)
class Fingerprint:
    order: int
    class_count: int
    center_order: int
    derived_order: int
    abelian_invariants: Tuple[int, ...]
    degree_profile: Tuple[Tuple[int, int], ...]
    element_order_counts: Tuple[Tuple[int, int], ...]
    # representation-dependent, kept for information only
    det_image_order: int = dc_field(compare=False)
    trace_multiset_digest: str = dc_field(compare=False)


def common_conductor(gens):
    n = 1
    for g in gens:
        n = math.lcm(n, g.conductor)
    return n


class GroupData:
    """A fully enumerated finite matrix group."""

    def __init__(self, elements, key_index, generators, conductor, table=None):
        self.elements = elements
        self.key_index = key_index
        self.generators = generators
        self.conductor = conductor
        self._table = table
        self._right = None

    def __len__(self):
        return len(self.elements)

    @property
    def order(self):
        return len(self.elements)

    def index(self, mat):
        return self.key_index[mat.lift(self.conductor).key()]

    @cached_property
    def table(self):
        if self._table is None:
            self._table = _cayley_from_bfs(self)
        return self._table

    @cached_property
    def inverses(self):
        t = self.table
        rows, cols = np.nonzero(t == 0)
        inv = np.empty(len(self), dtype=np.int64)
        inv[rows] = cols
        return inv

    @cached_property
    def element_orders(self):
        t = self.table
        n = len(self)
        idx = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        cur = idx.copy()
        step = 1
        while True:
            hit = (cur == 0) & (orders == 0)
            orders[hit] = step
            if orders.all():
                return orders
            cur = t[cur, idx]
            step += 1

    @cached_property
    def classes(self):
        return _conjugacy_classes(self)


def closure(gens, cap=DEFAULT_CAP, check_unitary=True):
    """Breadth-first closure; elements in discovery order, identity first."""
    gens = list(gens)
    n = common_conductor(gens) if gens else 1
    gens = [g.lift(n) for g in gens]
    if check_unitary:
        for g in gens:
            if not g.is_unitary():
                raise NonUnitaryGenerator("generator is not unitary: %r" % g)
    ident = Mat3.identity(n)
    elements = [ident]
    key_index = {ident.key(): 0}
    parent = [(-1, -1)]
    right = [[] for _ in gens]
    i = 0
    while i < len(elements):
        x = elements[i]
        for gi, g in enumerate(gens):
            y = x @ g
            k = y.key()
            j = key_index.get(k)
            if j is None:
                j = len(elements)
                if j >= cap:
                    raise CapExceeded("more than %d elements" % cap)
                elements.append(y)
                key_index[k] = j
                parent.append((i, gi))
            right[gi].append(j)
        i += 1
    gen_idx = [key_index[g.key()] for g in gens]
    G = GroupData(elements, key_index, gen_idx, n)
    G._right = [np.asarray(r, dtype=np.int64) for r in right]
    G._parent = parent
    return G


def _cayley_from_bfs(G):
    n = len(G)
    dtype = np.int16 if n < 2 ** 15 else np.int32
    # rows of u are right-multiplication maps: u[j, i] = index of x_i x_j
    u = np.empty((n, n), dtype=dtype)
    u[0] = np.arange(n)
    if G._right is None:
        raise ValueError("group was not produced by closure")
    for j in range(1, n):
        p, gi = G._parent[j]
        u[j] = G._right[gi][u[p]]
    return np.ascontiguousarray(u.T)


def subgroup(G, indices):
    """GroupData for a subset of G known to be a subgroup."""
    idx = np.sort(np.asarray(indices, dtype=np.int64))
    remap = -np.ones(len(G), dtype=np.int64)
    remap[idx] = np.arange(len(idx))
    elements = [G.elements[i] for i in idx]
    key_index = {e.key(): i for i, e in enumerate(elements)}
    table = remap[G.table[np.ix_(idx, idx)]].astype(G.table.dtype)
    H = GroupData(elements, key_index, [], G.conductor, table)
    return H


def generated_subgroup(G, seeds):
    """Indices of the subgroup of G generated by the given element indices."""
    t = G.table
    current = np.unique(np.concatenate([[0], np.asarray(seeds, dtype=np.int64)]))
    while True:
        grown = np.unique(t[np.ix_(current, current)])
        if len(grown) == len(current):
            return current
        current = grown


def order(G):
    return G.order


def element_order(G, idx):
    return int(G.element_orders[idx])


def exponent(G):
    e = 1
    for o in np.unique(G.element_orders):
        e = math.lcm(e, int(o))
    return e


def center(G):
    t = G.table
    return np.flatnonzero((t == t.T).all(axis=1))


def commutators(G, left, right=None):
    """All commutators x^-1 y^-1 x y for x in left, y in right."""
    t, inv = G.table, G.inverses
    left = np.asarray(left)
    right = np.arange(len(G)) if right is None else np.asarray(right)
    a = t[np.ix_(inv[left], inv[right])]
    b = t[np.ix_(left, right)]
    return np.unique(t[a, b])


def derived_indices(G):
    return generated_subgroup(G, commutators(G, np.arange(len(G))))


def derived_subgroup(G):
    return subgroup(G, derived_indices(G))


def lower_central_series(G):
    series = [np.arange(len(G))]
    while True:
        nxt = generated_subgroup(G, commutators(G, series[-1]))
        if len(nxt) == len(series[-1]):
            return series
        series.append(nxt)


def is_nilpotent(G):
    return len(lower_central_series(G)[-1]) == 1


def _conjugacy_classes(G):
    t, inv = G.table, G.inverses
    n = len(G)
    gens = G.generators or list(range(n))
    src, dst = [], []
    for g in gens:
        # x -> g^-1 x g
        src.append(np.arange(n))
        dst.append(t[t[inv[g], :], g])
    src = np.concatenate(src)
    dst = np.concatenate(dst)
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
    _, labels = connected_components(graph, directed=True, connection="weak")
    # relabel so classes are ordered by their lowest element index
    first = {}
    for x, lab in enumerate(labels):
        if lab not in first:
            first[lab] = len(first)
    class_of = np.array([first[lab] for lab in labels], dtype=np.int64)
    k = len(first)
    reps = np.full(k, n, dtype=np.int64)
    np.minimum.at(reps, class_of, np.arange(n))
    sizes = np.bincount(class_of, minlength=k)
    inverse_class = class_of[inv[reps]]
    return ConjClasses(class_of, reps, sizes, inverse_class)


def conjugacy_classes(G):
    return G.classes


def commuting_pairs(G):
    t = G.table
    return int((t == t.T).sum())


# abelianization ---------------------------------------------------------

def _prime_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _power_map(G, k):
    """Index of x^k for every x."""
    t = G.table
    idx = np.arange(len(G))
    result = np.zeros(len(G), dtype=np.int64)
    base = idx.copy()
    while k:
        if k & 1:
            result = t[result, base]
        base = t[base, base]
        k >>= 1
    return result


class _Abelianization:
    def __init__(self, G):
        self.G = G
        self.derived = derived_indices(G)
        t = G.table
        self.label = t[:, self.derived].min(axis=1).astype(np.int64)
        self.cosets = np.unique(self.label)
        self.size = len(self.cosets)
        in_derived = np.zeros(len(G), dtype=bool)
        in_derived[self.derived] = True
        self.in_derived = in_derived
        self._powers = {}

    def coset_orders(self):
        """Order of each coset rep in G/G'."""
        t = self.G.table
        reps = self.cosets
        orders = np.zeros(len(reps), dtype=np.int64)
        cur = reps.copy()
        step = 1
        while True:
            hit = self.in_derived[cur] & (orders == 0)
            orders[hit] = step
            if orders.all():
                return orders
            cur = t[cur, reps]
            step += 1

    def invariants(self):
        orders = self.coset_orders()
        out = []
        for p in _prime_factors(self.size):
            # counts[i] = number of elements of A killed by p^i
            counts = [1]
            while True:
                c = int(np.sum((p ** len(counts)) % orders == 0))
                if c == counts[-1]:
                    break
                counts.append(c)
            # ranks[i] = number of cyclic factors of order >= p^(i+1)
            ranks = [round(math.log(counts[i] // counts[i - 1], p)) for i in range(1, len(counts))]
            ranks.append(0)
            for i in range(len(ranks) - 1):
                out.extend([p ** (i + 1)] * (ranks[i] - ranks[i + 1]))
        return sorted(out)

    def power_map(self, k):
        if k not in self._powers:
            self._powers[k] = _power_map(self.G, k)
        return self._powers[k]

    def multiple_set(self, k):
        """Labels of the subgroup k*A."""
        return set(self.label[self.power_map(k)].tolist())

    def coset_order_of(self, x):
        t = self.G.table
        cur, step = x, 1
        while not self.in_derived[cur]:
            cur = t[cur, x]
            step += 1
        return step


def abelian_invariants(G):
    return _Abelianization(G).invariants()


def has_cyclic_direct_factor(G):
    """Largest k such that G = H x Z_k through a central cyclic factor, else None.

    For each prime p, a central z of order q = p^a splits off as a direct factor
    when its image in A = G/G' still has order q and the image of z^(q/p) has
    p-height exactly a - 1 in A (so <z'> is a pure, hence direct, summand of A).
    """
    if len(G) == 1:
        return None
    ab = _Abelianization(G)
    orders = G.element_orders
    z_all = center(G)
    result = 1
    heights = {}
    for p in _prime_factors(len(G)):
        best = 1
        for z in z_all:
            q = int(orders[z])
            if q == 1 or q % p or (q // p ** _vp(q, p)) != 1:
                continue
            if q <= best:
                continue
            if ab.coset_order_of(z) != q:
                continue
            a = _vp(q, p)
            zz = ab.power_map(p ** (a - 1))[z]
            lab = ab.label[zz]
            if (p, a) not in heights:
                heights[(p, a)] = ab.multiple_set(p ** a)
            if lab in heights[(p, a)]:
                continue
            best = q
        result *= best
    return result if result > 1 else None


def _vp(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


# representation data ------------------------------------------------------

def monomial_class(G):
    odd = False
    for e in G.elements:
        dec = e.monomial_decompose()
        if dec is None:
            return NON_MONOMIAL
        if PERM_SIGN[dec[0]] == -1:
            odd = True
    return MONOMIAL_STU if odd else RVW


def _root_order_of(c):
    f = field(c.conductor)
    e = c.root_exponent()
    if e is None:
        raise ValueError("determinant is not a root of unity")
    return f.root_order // math.gcd(f.root_order, e)


def det_image_order(G):
    o = 1
    for g in G.generators:
        o = math.lcm(o, _root_order_of(G.elements[g].det()))
    return o


def is_subgroup_of_su3(G):
    return all(G.elements[g].det() == 1 for g in G.generators)


def trace_multiset_digest(G):
    counts = Counter(e.trace().key() for e in G.elements)
    h = hashlib.sha256()
    for key, c in sorted(counts.items()):
        h.update(key + b"#%d;" % c)
    return h.hexdigest()[:16]


def fingerprint(G, profile=None):
    from .chardeg import character_degrees

    if profile is None:
        profile = character_degrees(G)
    return Fingerprint(
        order=len(G),
        class_count=G.classes.count,
        center_order=len(center(G)),
        derived_order=len(derived_indices(G)),
        abelian_invariants=tuple(abelian_invariants(G)),
        degree_profile=tuple(sorted(profile.counts.items())),
        element_order_counts=tuple(sorted(Counter(G.element_orders.tolist()).items())),
        det_image_order=det_image_order(G),
        trace_multiset_digest=trace_multiset_digest(G),
    )
