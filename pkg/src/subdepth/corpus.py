"""Built-in catalog of small permutation groups and the sweep harness.

The catalog covers cyclic, dihedral, symmetric/alternating up to S4,
quaternion and direct-product groups up to order 24, each from explicit
generators, which is enough to reproduce every subgroup-pair computation in
the worked examples without external data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .chartab import CharacterTable, class_fusion, compute_character_table, inclusion_matrix
from .depthmat import DepthReport, depth_report, eigenvalues_via_class_formula
from .permgroup import GroupHandle, Permutation, SubgroupHandle, enumerate_group


def _cycle(n: int, shift: int = 0) -> Permutation:
    return Permutation.from_cycles(n + shift, [tuple(range(shift + 1, shift + n + 1))])


def cyclic(n: int) -> list[Permutation]:
    if n == 1:
        return []
    return [_cycle(n)]


def dihedral(n: int) -> list[Permutation]:
    """Dihedral group of order 2n acting on n points, n >= 3."""
    rot = _cycle(n)
    refl = Permutation([((n + 1 - i) % n) + 1 for i in range(1, n + 1)])
    return [rot, refl]


def symmetric(n: int) -> list[Permutation]:
    if n == 1:
        return []
    gens = [Permutation.from_cycles(n, [(1, 2)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(1, n + 1))]))
    return gens


def alternating(n: int) -> list[Permutation]:
    gens = [Permutation.from_cycles(n, [(1, 2, 3)])]
    if n == 4:
        gens.append(Permutation.from_cycles(4, [(1, 2), (3, 4)]))
    elif n == 5:
        gens.append(Permutation.from_cycles(5, [(1, 2, 3, 4, 5)]))
    return gens


def quaternion() -> list[Permutation]:
    """Q8 in its left regular representation on {1,-1,i,-i,j,-j,k,-k}."""
    elems = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"),
             (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]
    table = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"),
             ("1", "k"): (1, "k"), ("i", "1"): (1, "i"), ("j", "1"): (1, "j"),
             ("k", "1"): (1, "k"), ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"),
             ("k", "k"): (-1, "1"), ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
             ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"), ("k", "i"): (1, "j"),
             ("i", "k"): (-1, "j")}

    def mul(a, b):
        sa, la = a
        sb, lb = b
        s, l = table[(la, lb)]
        return (sa * sb * s, l)

    def left_perm(g):
        return Permutation([elems.index(mul(g, x)) + 1 for x in elems])

    return [left_perm((1, "i")), left_perm((1, "j"))]


def direct_product(gens_a: list[Permutation], deg_a: int,
                   gens_b: list[Permutation], deg_b: int) -> list[Permutation]:
    out = []
    for g in gens_a:
        out.append(Permutation(list(g.images) + list(range(deg_a + 1, deg_a + deg_b + 1))))
    for g in gens_b:
        out.append(Permutation(list(range(1, deg_a + 1)) + [x + deg_a for x in g.images]))
    return out


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    degree: int
    generators: tuple[Permutation, ...]
    order: int


def _entry(name: str, degree: int, gens: list[Permutation]) -> CatalogEntry:
    G = enumerate_group(gens, degree=degree)
    return CatalogEntry(name, degree, tuple(gens), G.order)


@lru_cache(maxsize=1)
def catalog() -> tuple[CatalogEntry, ...]:
    entries = []
    for n in range(1, 25):
        entries.append(_entry(f"C{n}", max(n, 1), cyclic(n)))
    for n in range(3, 13):
        entries.append(_entry(f"D{2 * n}", n, dihedral(n)))
    entries.append(_entry("S4", 4, symmetric(4)))
    entries.append(_entry("A4", 4, alternating(4)))
    entries.append(_entry("Q8", 8, quaternion()))
    entries.append(_entry("C2xC2", 4, direct_product(cyclic(2), 2, cyclic(2), 2)))
    entries.append(_entry("C2xC4", 6, direct_product(cyclic(2), 2, cyclic(4), 4)))
    entries.append(_entry("C2xC2xC2", 6,
                          direct_product(direct_product(cyclic(2), 2, cyclic(2), 2), 4,
                                         cyclic(2), 2)))
    entries.append(_entry("C2xC6", 8, direct_product(cyclic(2), 2, cyclic(6), 6)))
    entries.append(_entry("C3xC3", 6, direct_product(cyclic(3), 3, cyclic(3), 3)))
    entries.append(_entry("C2xD8", 6, direct_product(cyclic(2), 2, dihedral(4), 4)))
    return tuple(entries)


_GROUPS: dict[str, GroupHandle] = {}
_TABLES: dict[str, CharacterTable] = {}


def corpus_groups(max_order: int) -> list[tuple[str, GroupHandle]]:
    out = []
    for entry in catalog():
        if entry.order <= max_order:
            if entry.name not in _GROUPS:
                _GROUPS[entry.name] = enumerate_group(list(entry.generators),
                                                      degree=entry.degree)
            out.append((entry.name, _GROUPS[entry.name]))
    return out


def cached_table(name: str, G: GroupHandle) -> CharacterTable:
    if name not in _TABLES:
        _TABLES[name] = compute_character_table(G)
    return _TABLES[name]


def subgroups_up_to_conjugacy(G: GroupHandle) -> list[SubgroupHandle]:
    """One representative per conjugacy class of subgroups, smallest key."""
    seen: set[tuple] = set()
    reps = []
    for H in G.subgroups():
        if H.key() in seen:
            continue
        orbit = {H.conjugate(g).key() for g in G.elements}
        seen |= orbit
        reps.append(H)
    return reps


@dataclass
class SweepRow:
    group: str
    subgroup_index: int
    subgroup_order: int
    index: int
    d_0: Optional[int]
    d_ev: Optional[int]
    d_odd: Optional[int]
    d_h: Optional[int]
    eigen_ok: bool
    pf_ok: bool
    conjecture_ok: bool

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "subgroup_index": self.subgroup_index,
            "subgroup_order": self.subgroup_order,
            "index": self.index,
            "d_0": self.d_0, "d_ev": self.d_ev, "d_odd": self.d_odd, "d_h": self.d_h,
            "eigen_ok": self.eigen_ok, "pf_ok": self.pf_ok,
            "conjecture_ok": self.conjecture_ok,
        }


@dataclass
class SweepReport:
    max_order: int
    rows: list[SweepRow]
    violations: list[SweepRow]

    def to_json(self) -> dict:
        return {
            "max_order": self.max_order,
            "pairs": len(self.rows),
            "rows": [r.to_json() for r in self.rows],
            "violations": [r.to_json() for r in self.violations],
        }


def pair_depth_report(G: GroupHandle, H: SubgroupHandle, name: str,
                      sub_tables: dict) -> DepthReport:
    tabG = cached_table(name, G)
    key = H.key()
    if key not in sub_tables:
        sub_tables[key] = compute_character_table(H.as_group())
    tabH = sub_tables[key]
    M = inclusion_matrix(tabG, tabH, class_fusion(G, H))
    return depth_report(M, group_data=(G, H))


def run_sweep(max_order: int, check_conjecture: bool = True) -> SweepReport:
    """Depth reports for every subgroup pair of every catalog group up to the
    given order, with the class-formula eigenvalue oracle and the d_0 <= d_h
    conjecture checked on each pair."""
    rows: list[SweepRow] = []
    violations: list[SweepRow] = []
    for name, G in corpus_groups(max_order):
        sub_tables: dict = {}
        for si, H in enumerate(G.subgroups()):
            rep = pair_depth_report(G, H, name, sub_tables)
            es = eigenvalues_via_class_formula(G, H)
            nonzero_roots = {v for v in rep.eigen_B.values if v != 0}
            eigen_ok = (es.value_set() == nonzero_roots
                        and rep.eigen_B.residual.degree == 0)
            pf_ok = (rep.minpoly_C.evaluate(Fraction(G.order, H.order)) == 0
                     and rep.pf_value == Fraction(G.order, H.order))
            conj_ok = True
            if check_conjecture and rep.d_0 is not None and rep.d_h is not None:
                conj_ok = rep.d_0 <= rep.d_h
            row = SweepRow(name, si, H.order, G.order // H.order,
                           rep.d_0, rep.d_ev, rep.d_odd, rep.d_h,
                           eigen_ok, pf_ok, conj_ok)
            rows.append(row)
            if not (eigen_ok and pf_ok and conj_ok):
                violations.append(row)
    return SweepReport(max_order, rows, violations)
