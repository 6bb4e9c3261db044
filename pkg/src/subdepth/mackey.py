"""Double-coset decompositions of the quotient module and its tensor powers,
core-based depth bounds, and the Hecke algebra of a subgroup pair.

Tensor powers are expanded by iterating the restriction-induction rule
Q_K tensor Q_H = sum over K\\G/H of Q_{K^x cap H}; each summand is labelled by
the (H,H) double cosets met along the way, so the multiset is indexed by
(n-1)-tuples with per-tuple multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .chartab import permutation_character
from .permgroup import (CoreWitness, GroupHandle, Permutation,
                        SubgroupHandle, core_and_witness, double_cosets,
                        intersection_chain)


class BudgetExceededError(RuntimeError):
    pass


@dataclass
class QSummandMultiset:
    """Multiset of subgroups S, each standing for the coset module Q of S in
    the ambient group; entries carry the double-coset tuple that produced
    them."""
    ambient: GroupHandle
    base: SubgroupHandle
    power: int
    entries: list[tuple[tuple[int, ...], SubgroupHandle]]

    def total_index(self) -> int:
        return sum(self.ambient.order // s.order for _, s in self.entries)

    def tuple_counts(self) -> dict[tuple[int, ...], int]:
        out: dict[tuple[int, ...], int] = {}
        for label, _ in self.entries:
            out[label] = out.get(label, 0) + 1
        return out

    def character(self) -> tuple[int, ...]:
        cache: dict[tuple, tuple[int, ...]] = {}
        acc = [0] * len(self.ambient.conjugacy_classes())
        for _, s in self.entries:
            k = s.key()
            if k not in cache:
                cache[k] = permutation_character(self.ambient, s)
            for i, v in enumerate(cache[k]):
                acc[i] += v
        return tuple(acc)

    def merged(self) -> list[tuple[SubgroupHandle, int]]:
        """Group summands that are conjugate with equal permutation
        characters; returns (representative, multiplicity) pairs."""
        buckets: list[tuple[SubgroupHandle, tuple[int, ...], list]] = []
        for _, s in self.entries:
            char = permutation_character(self.ambient, s)
            placed = False
            for rep, rchar, members in buckets:
                if rchar != char or rep.order != s.order:
                    continue
                if any(s.conjugate(g).key() == rep.key() for g in self.ambient.elements):
                    members.append(s)
                    placed = True
                    break
            if not placed:
                buckets.append((s, char, [s]))
        return [(rep, len(members)) for rep, _, members in buckets]

    def to_json(self) -> list[dict]:
        out = []
        for rep, mult in self.merged():
            gens = rep.generating_set()
            out.append({
                "subgroup_generators": [list(p.images) for p in gens],
                "multiplicity": mult,
                "index": self.ambient.order // rep.order,
            })
        return out


def mackey_restrict(G: GroupHandle, K: SubgroupHandle,
                    H: SubgroupHandle) -> QSummandMultiset:
    """Restriction of the coset module of K down to H: one summand
    K^{g_i} cap H per (K,H) double-coset representative g_i, read as the
    multiset of H-coset modules Q^H_{K^{g_i} cap H}."""
    dc = double_cosets(G, K, H)
    entries = []
    for idx, g in enumerate(dc.reps):
        entries.append(((idx,), K.conjugate(g).intersect(H)))
    ms = QSummandMultiset(G, K, 1, entries)
    # dimension bookkeeping: sum |H : K^g cap H| = |G : K|
    total = sum(H.order // s.order for _, s in entries)
    assert total == G.order // K.order, "Mackey restriction dimension mismatch"
    return ms


def q_tensor_decomposition(G: GroupHandle, H: SubgroupHandle, n: int,
                           budget: int = 10 ** 6) -> QSummandMultiset:
    """The n-th tensor power of the coset module of H as a multiset of
    conjugate-intersection stabilizers, indexed by (n-1)-tuples of (H,H)
    double-coset labels."""
    if n < 1:
        raise ValueError("tensor power must be >= 1")
    hdc = double_cosets(G, H, H)
    if len(hdc.reps) ** (n - 1) > budget:
        raise BudgetExceededError(
            f"|H\\G/H|^(n-1) = {len(hdc.reps) ** (n - 1)} exceeds the budget {budget}")
    label_of: dict[Permutation, int] = {}
    for idx, coset in enumerate(hdc.cosets):
        for g in coset:
            label_of[g] = idx
    entries: list[tuple[tuple[int, ...], SubgroupHandle]] = [((), H)]
    for _ in range(n - 1):
        new = []
        for label, K in entries:
            dk = double_cosets(G, K, H)
            for x in dk.reps:
                new.append((label + (label_of[x],), K.conjugate(x).intersect(H)))
                if len(new) > budget:
                    raise BudgetExceededError("tensor decomposition exceeded the budget")
        entries = new
    ms = QSummandMultiset(G, H, n, entries)
    index = G.order // H.order
    assert ms.total_index() == index ** n, "tensor power dimension mismatch"
    return ms


@dataclass(frozen=True)
class CoreDepthBound:
    core_witness: CoreWitness
    bound_dQ: int
    bound_dh: int

    @property
    def r(self) -> int:
        return self.core_witness.r


def core_depth_bound(G: GroupHandle, H: SubgroupHandle,
                     semisimple: bool = True,
                     d_h: Optional[int] = None) -> CoreDepthBound:
    """Depth bounds d(Q) <= r+1 and d_h <= 2r+3 from the minimal number r of
    conjugates intersecting H in its core.

    The bounds require the subgroup algebra to be separable; the caller
    asserts this with the semisimple flag (true in characteristic zero).
    """
    if not semisimple:
        raise ValueError("core depth bounds need a semisimple subgroup algebra")
    cw = core_and_witness(G, H)
    bound = CoreDepthBound(cw, cw.r + 1, 2 * cw.r + 3)
    if d_h is not None and d_h > bound.bound_dh:
        raise AssertionError(f"d_h = {d_h} violates the core bound {bound.bound_dh}")
    return bound


@dataclass
class HeckeAlgebra:
    """The double-coset algebra e kG e of a subgroup pair, with basis
    (ind gamma_j) e gamma_j e and exact rational structure constants."""
    group: GroupHandle
    subgroup: SubgroupHandle
    reps: tuple[Permutation, ...]
    indices: tuple[int, ...]
    mu: list[list[dict[int, Fraction]]]   # mu[i][j] maps k -> mu_ijk

    @property
    def dimension(self) -> int:
        return len(self.reps)

    def product(self, a: dict[int, Fraction], b: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, ca in a.items():
            if not ca:
                continue
            for j, cb in b.items():
                if not cb:
                    continue
                for k, m in self.mu[i][j].items():
                    out[k] = out.get(k, Fraction(0)) + ca * cb * m
        return {k: v for k, v in out.items() if v}

    def is_commutative(self) -> bool:
        return all(self.mu[i][j] == self.mu[j][i]
                   for i in range(self.dimension) for j in range(self.dimension))

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "reps": [list(g.images) for g in self.reps],
            "indices": list(self.indices),
            "mu": [[i, j, k, str(v)]
                   for i in range(self.dimension)
                   for j in range(self.dimension)
                   for k, v in sorted(self.mu[i][j].items())],
        }


def hecke_algebra(G: GroupHandle, K: SubgroupHandle) -> HeckeAlgebra:
    """Structure constants mu_ijk = |K|^-1 |K g_i K  cap  g_k K g_j^-1 K| on
    the double-coset basis; associativity and the unit are verified on
    construction."""
    dc = double_cosets(G, K, K)
    t = len(dc.reps)
    coset_sets = [set(c) for c in dc.cosets]
    indices = tuple(s // K.order for s in dc.sizes)
    # right-hand sets g_k K g_j^-1 K
    kelem = list(K.elements)
    mu: list[list[dict[int, Fraction]]] = [[{} for _ in range(t)] for _ in range(t)]
    for k in range(t):
        gk = dc.reps[k]
        for j in range(t):
            gj_inv = dc.reps[j].inverse()
            rhs = set()
            for k1 in kelem:
                a = gk * k1 * gj_inv
                for k2 in kelem:
                    rhs.add(a * k2)
            for i in range(t):
                cnt = len(coset_sets[i] & rhs)
                if cnt:
                    mu[i][j][k] = Fraction(cnt, K.order)
    alg = HeckeAlgebra(G, K, dc.reps, indices, mu)
    _verify_hecke(alg)
    return alg


def _verify_hecke(alg: HeckeAlgebra) -> None:
    t = alg.dimension
    assert alg.reps[0].is_identity(), "identity double coset must come first"
    for j in range(t):
        if alg.mu[0][j] != {j: Fraction(1)} or alg.mu[j][0] != {j: Fraction(1)}:
            raise AssertionError("identity double coset is not a two-sided unit")
    for i in range(t):
        for j in range(t):
            ij = alg.mu[i][j]
            for k in range(t):
                left = alg.product(ij, {k: Fraction(1)})
                right = alg.product({i: Fraction(1)}, alg.mu[j][k])
                if left != right:
                    raise AssertionError(
                        f"Hecke multiplication not associative at ({i},{j},{k})")


@dataclass(frozen=True)
class CombinatorialBoundReport:
    d_c_ev: int
    d_c_bracket: tuple[int, int]
    d_c_is_one: bool
    d_h: Optional[int]
    bound_holds: Optional[bool]


def combinatorial_bound_check(G: GroupHandle, H: SubgroupHandle,
                              d_h: Optional[int] = None) -> CombinatorialBoundReport:
    """Reports the even combinatorial depth and checks d_h <= d_c_ev + 1
    against a supplied h-depth."""
    ic = intersection_chain(G, H)
    holds = None
    if d_h is not None:
        holds = d_h <= ic.d_c_ev + 1
        if not holds:
            raise AssertionError(
                f"d_h = {d_h} exceeds d_c_ev + 1 = {ic.d_c_ev + 1}")
    return CombinatorialBoundReport(ic.d_c_ev, ic.d_c_bracket, ic.d_c_is_one,
                                    d_h, holds)
