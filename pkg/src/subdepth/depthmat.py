"""Depth and h-depth invariants from the inclusion matrix.

Zero-pattern stabilization of powers of B = M M^t and C = M^t M is the
operational form of the similarity conditions for semisimple pairs; the
bipartite-graph diameters are computed alongside as an independent
cross-check.  Depth 1 and h-depth 1 are not visible from M alone, so those
cases are gated by group data (adjoint test, permutation matrix test).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .chartab import (CharacterTable, InclusionMatrix, class_fusion,
                      compute_character_table, inclusion_matrix)
from .exactalg import (ExactMatrix, ExactPolynomial, factor_rational_roots,
                       is_indecomposable, minimal_polynomial,
                       pattern_stabilization_index)
from .permgroup import GroupHandle, SubgroupHandle, depth_one_adjoint_test


@dataclass
class EigenvalueSet:
    """Exact rational eigenvalue data with its provenance."""
    values: dict[Fraction, int]          # value -> multiplicity
    residual: ExactPolynomial            # nonrational part, 1 if none
    source: str                          # "class-formula" | "minpoly"
    t: Optional[int] = None              # |E| when source is class-formula
    depth_bound: Optional[int] = None
    all_classes_restrict_to_one: Optional[bool] = None

    def value_set(self) -> set[Fraction]:
        return set(self.values)

    def max_value(self) -> Fraction:
        return max(self.values)


@dataclass
class McKayQuiver:
    labels: list[str]
    edges: list[tuple[int, int, int]]    # (i, j, weight)
    indecomposable: bool
    pf_root: Optional[Fraction]

    def dot(self) -> str:
        lines = ["digraph mckay {"]
        for i, lab in enumerate(self.labels):
            lines.append(f'  v{i} [label="{lab}"];')
        for i, j, w in self.edges:
            attr = f' [label="{w}"]' if w != 1 else ""
            lines.append(f"  v{i} -> v{j}{attr};")
        lines.append("}")
        return "\n".join(lines)


@dataclass
class DepthReport:
    M: InclusionMatrix
    B: ExactMatrix
    C: ExactMatrix
    d_odd: Optional[int]
    d_ev: Optional[int]
    d_0: Optional[int]
    d_h: Optional[int]
    minpoly_B: ExactPolynomial
    minpoly_C: ExactPolynomial
    eigen_B: EigenvalueSet
    pf_check: Optional[bool]
    pf_value: Optional[Fraction]
    mckay: McKayQuiver
    indecomposable_C: bool
    white_diameter_plus_one: Optional[int]
    black_diameter_plus_one: Optional[int]
    method_tags: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        def maybe(x):
            return x if x is not None else "unbounded-within-budget"

        return {
            "M": self.M.to_lists(),
            "B": self.B.to_int_grid(),
            "C": self.C.to_int_grid(),
            "d_odd": maybe(self.d_odd),
            "d_ev": maybe(self.d_ev),
            "d_0": maybe(self.d_0),
            "d_h": maybe(self.d_h),
            "minpoly_B": self.minpoly_B.to_string(),
            "minpoly_C": self.minpoly_C.to_string(),
            "eigen_B": {
                "values": {str(k): v for k, v in sorted(self.eigen_B.values.items())},
                "residual": self.eigen_B.residual.to_string(),
                "source": self.eigen_B.source,
            },
            "pf_check": self.pf_check,
            "pf_value": str(self.pf_value) if self.pf_value is not None else None,
            "indecomposable_C": self.indecomposable_C,
            "mckay_edges": [list(e) for e in self.mckay.edges],
            "white_diameter_plus_one": self.white_diameter_plus_one,
            "black_diameter_plus_one": self.black_diameter_plus_one,
            "method_tags": dict(sorted(self.method_tags.items())),
        }


def _matpow(A: ExactMatrix, n: int) -> ExactMatrix:
    out = A
    for _ in range(n - 1):
        out = out @ A
    return out


def _bipartite_diameters(M: InclusionMatrix) -> tuple[Optional[int], Optional[int]]:
    """Max finite white-white and black-black distances in the bipartite
    inclusion graph, each plus one (the graphical depth readings)."""
    p, q = M.rows, M.cols
    n = p + q
    adj = [set() for _ in range(n)]
    for i in range(p):
        for j in range(q):
            if M.entries[i][j]:
                adj[i].add(p + j)
                adj[p + j].add(i)

    def bfs(start: int) -> dict[int, int]:
        dist = {start: 0}
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        return dist

    white = 0
    for i in range(p):
        d = bfs(i)
        white = max(white, max((v for k, v in d.items() if k < p), default=0))
    black = 0
    for j in range(q):
        d = bfs(p + j)
        black = max(black, max((v for k, v in d.items() if k >= p), default=0))
    return white + 1, black + 1


def mckay_quiver(C: ExactMatrix, labels: Optional[list[str]] = None,
                 pf_candidate: Optional[Fraction] = None) -> McKayQuiver:
    """Weighted digraph on the group irreducibles with adjacency C."""
    grid = C.to_int_grid()
    q = len(grid)
    if labels is None:
        labels = [f"U{j}" for j in range(q)]
    edges = [(i, j, grid[i][j]) for i in range(q) for j in range(q) if grid[i][j] > 0]
    indec = is_indecomposable(C)
    pf_root = None
    mp = minimal_polynomial(C)
    roots, _ = factor_rational_roots(mp)
    if roots:
        pf_root = max(roots)
    if pf_candidate is not None and pf_root is not None and pf_root != pf_candidate:
        raise AssertionError(
            f"Perron-Frobenius root {pf_root} does not match dim H / dim R = {pf_candidate}")
    return McKayQuiver(labels, edges, indec, pf_root)


def depth_report(M: InclusionMatrix,
                 group_data: Optional[tuple[GroupHandle, SubgroupHandle]] = None,
                 k_max: Optional[int] = None) -> DepthReport:
    """All depth invariants readable from M, with group-gated depth-1 cases.

    d_odd = 2n+1 for the least n >= 1 with pattern(B^n) = pattern(B^(n+1)),
    d_ev = 2n for the least n >= 1 with pattern(M C^(n-1)) = pattern(M C^n),
    d_h = 2n+1 for the least n >= 1 with pattern(C^n) = pattern(C^(n+1)),
    d_0 = min(d_ev, d_odd).
    """
    tags: dict[str, str] = {}
    Mx = M.to_exact()
    B = Mx @ Mx.transpose()
    C = Mx.transpose() @ Mx
    budget = k_max if k_max is not None else max(M.rows, M.cols, 2)

    n_odd = pattern_stabilization_index(lambda k: _matpow(B, k), budget)
    d_odd = 2 * n_odd + 1 if n_odd is not None else None
    tags["d_odd"] = "pattern-stabilization(B)"
    n_ev = pattern_stabilization_index(
        lambda k: Mx if k == 1 else Mx @ _matpow(C, k - 1), budget)
    d_ev = 2 * n_ev if n_ev is not None else None
    tags["d_ev"] = "pattern-stabilization(M C^k)"
    n_h = pattern_stabilization_index(lambda k: _matpow(C, k), budget)
    d_h = 2 * n_h + 1 if n_h is not None else None
    tags["d_h"] = "pattern-stabilization(C)"

    if Mx.is_permutation_matrix():
        # identity inclusion: the pattern rules cannot see below 3/2
        d_odd, d_ev, d_h = 1, 2, 1
        tags["d_odd"] = tags["d_h"] = "identity-inclusion"
    elif group_data is not None:
        G, H = group_data
        if depth_one_adjoint_test(G, H):
            d_odd = 1
            tags["d_odd"] = "adjoint-test"
    d_0 = min(d_ev, d_odd) if d_ev is not None and d_odd is not None else None
    tags["d_0"] = "min(d_ev, d_odd)"

    mp_b = minimal_polynomial(B)
    mp_c = minimal_polynomial(C)
    # C m(C) = 0 for m the minimal polynomial of B
    x_mp_b = ExactPolynomial((0, 1)) * mp_b
    if not x_mp_b.evaluate_matrix(C).is_zero():
        raise AssertionError("C m(C) != 0 for m = minpoly(B)")
    if mp_c not in (mp_b, x_mp_b):
        raise AssertionError("minpoly(C) is neither m nor X m for m = minpoly(B)")

    roots_b, resid_b = factor_rational_roots(mp_b)
    eigen_b = EigenvalueSet(values=roots_b, residual=resid_b, source="minpoly")
    tags["eigen_B"] = "minpoly-rational-roots"

    roots_c, resid_c = factor_rational_roots(mp_c)
    pf_value = max(roots_c) if roots_c else None
    pf_check = None
    if group_data is not None:
        G, H = group_data
        index = Fraction(G.order, H.order)
        pf_check = (resid_c.degree == 0 and mp_c.evaluate(index) == 0
                    and pf_value == index)
        tags["pf_check"] = "minpoly_C vanishes at |G:H|"

    labels = None
    quiver = mckay_quiver(C, labels,
                          pf_candidate=Fraction(group_data[0].order, group_data[1].order)
                          if group_data is not None else None)
    white_d, black_d = _bipartite_diameters(M)

    return DepthReport(M=M, B=B, C=C, d_odd=d_odd, d_ev=d_ev, d_0=d_0, d_h=d_h,
                       minpoly_B=mp_b, minpoly_C=mp_c, eigen_B=eigen_b,
                       pf_check=pf_check, pf_value=pf_value, mckay=quiver,
                       indecomposable_C=quiver.indecomposable,
                       white_diameter_plus_one=white_d,
                       black_diameter_plus_one=black_d,
                       method_tags=tags)


def depth_report_for_pair(G: GroupHandle, H: SubgroupHandle,
                          tabG: Optional[CharacterTable] = None,
                          tabH: Optional[CharacterTable] = None) -> DepthReport:
    if tabG is None:
        tabG = compute_character_table(G)
    if tabH is None:
        tabH = compute_character_table(H.as_group())
    M = inclusion_matrix(tabG, tabH, class_fusion(G, H))
    return depth_report(M, group_data=(G, H))


def eigenvalues_via_class_formula(G: GroupHandle, H: SubgroupHandle) -> EigenvalueSet:
    """The set {(|G|/|H|) |C cap H| / |C| : C a class of G meeting H} as exact
    rationals, with |E| = t and the bound d_0 <= 2t+1 (2t-1 when every class
    of G meets H in a single H-class)."""
    hset = set(H.elements)
    Hgrp = H.as_group()
    values: set[Fraction] = set()
    one_class = True
    meets_all = True
    for cls in G.conjugacy_classes():
        inter = [x for x in cls.elements if x in hset]
        if not inter:
            meets_all = False
            continue
        values.add(Fraction(G.order, H.order) * Fraction(len(inter), cls.size))
        h_classes = {Hgrp.class_index(x) for x in inter}
        if len(h_classes) > 1:
            one_class = False
    restrict_one = one_class and meets_all
    t = len(values)
    bound = 2 * t - 1 if restrict_one else 2 * t + 1
    return EigenvalueSet(values={v: 1 for v in sorted(values)},
                         residual=ExactPolynomial.one(),
                         source="class-formula", t=t, depth_bound=bound,
                         all_classes_restrict_to_one=restrict_one)


def ell_from_trivial_row(C: ExactMatrix, trivial_index: int,
                         k_max: Optional[int] = None) -> Optional[int]:
    """Stabilization index of the support of e_triv C^n; for semisimple pairs
    2*ell + 1 equals the h-depth."""
    grid = C.to_int_grid()
    q = len(grid)
    budget = k_max if k_max is not None else max(q, 2)
    support = {trivial_index}

    def step(s: set[int]) -> set[int]:
        out = set()
        for i in s:
            for j in range(q):
                if grid[i][j]:
                    out.add(j)
        return out

    cur = step(support)
    for n in range(1, budget + 1):
        nxt = step(cur)
        if nxt == cur:
            return n
        cur = nxt
    return None


def bipartite_dot(M: InclusionMatrix, white_labels: Optional[list[str]] = None,
                  black_labels: Optional[list[str]] = None) -> str:
    """The weighted bipartite inclusion graph; subgroup irreducibles are the
    white vertices, group irreducibles the black ones."""
    p, q = M.rows, M.cols
    if white_labels is None:
        white_labels = [f"V{i}" for i in range(p)]
    if black_labels is None:
        black_labels = [f"U{j}" for j in range(q)]
    lines = ["graph inclusion {"]
    for i in range(p):
        lines.append(f'  w{i} [label="{white_labels[i]}" style=filled '
                     f'fillcolor=white shape=circle];')
    for j in range(q):
        lines.append(f'  b{j} [label="{black_labels[j]}" style=filled '
                     f'fillcolor=black fontcolor=white shape=circle];')
    for i in range(p):
        for j in range(q):
            w = M.entries[i][j]
            if w:
                attr = f' [label="{w}"]' if w != 1 else ""
                lines.append(f"  w{i} -- b{j}{attr};")
    lines.append("}")
    return "\n".join(lines)
