"""Finite permutation group engine.

Groups are given by generators and enumerated completely (desk scale, default
cap 20160 elements).  Elements are kept in a canonical lexicographic order on
image arrays so that class representatives, coset representatives and witness
tuples are reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

DEFAULT_ORDER_CAP = 20160


class GroupTooLargeError(ValueError):
    """Enumeration exceeded the configured order cap."""


class Permutation:
    """A permutation of {1..d} stored as its 1-based image array."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, *a):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(1, degree + 1))

    @staticmethod
    def from_cycles(degree: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        images = list(range(1, degree + 1))
        for cyc in cycles:
            for i, pt in enumerate(cyc):
                images[pt - 1] = cyc[(i + 1) % len(cyc)]
        return Permutation(images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # left-to-right composition: point^(a*b) = (point^a)^b
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, img in enumerate(self.images):
            inv[img - 1] = i + 1
        return Permutation(inv)

    def conjugate_by(self, g: "Permutation") -> "Permutation":
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(i + 1 == img for i, img in enumerate(self.images))

    def order(self) -> int:
        n = 1
        p = self
        while not p.is_identity():
            p = p * self
            n += 1
        return n

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen or self.images[start - 1] == start:
                continue
            cyc = [start]
            seen.add(start)
            pt = self.images[start - 1]
            while pt != start:
                cyc.append(pt)
                seen.add(pt)
                pt = self.images[pt - 1]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation"):
        return self.images < other.images

    def __le__(self, other: "Permutation"):
        return self.images <= other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


class ConjClass(NamedTuple):
    rep: Permutation
    elements: tuple[Permutation, ...]
    size: int


class GroupHandle:
    """A fully enumerated permutation group with cached derived data."""

    def __init__(self, degree: int, generators: Sequence[Permutation],
                 elements: Sequence[Permutation]):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self.order = len(self.elements)
        self._index = {g: i for i, g in enumerate(self.elements)}
        self._classes: Optional[list[ConjClass]] = None
        self._class_of: Optional[dict[Permutation, int]] = None
        self._subgroups: Optional[list["SubgroupHandle"]] = None
        self._double_cosets: dict = {}
        self._cache: dict = {}

    def __contains__(self, p: Permutation) -> bool:
        return p in self._index

    def index_of(self, p: Permutation) -> int:
        return self._index[p]

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def exponent(self) -> int:
        from math import lcm
        e = 1
        for cls in self.conjugacy_classes():
            e = lcm(e, cls.rep.order())
        return e

    def conjugacy_classes(self) -> list[ConjClass]:
        if self._classes is None:
            seen: set[Permutation] = set()
            classes = []
            class_of: dict[Permutation, int] = {}
            gens = self.generators if self.generators else (self.identity,)
            for g in self.elements:
                if g in seen:
                    continue
                orbit = {g}
                stack = [g]
                while stack:
                    x = stack.pop()
                    for s in gens:
                        y = x.conjugate_by(s)
                        if y not in orbit:
                            orbit.add(y)
                            stack.append(y)
                members = tuple(sorted(orbit))
                for m in members:
                    class_of[m] = len(classes)
                classes.append(ConjClass(members[0], members, len(members)))
                seen |= orbit
            self._classes = classes
            self._class_of = class_of
        return self._classes

    def class_index(self, p: Permutation) -> int:
        self.conjugacy_classes()
        return self._class_of[p]

    def subgroup(self, elements: Iterable[Permutation]) -> "SubgroupHandle":
        return SubgroupHandle(self, elements)

    def subgroup_generated(self, gens: Sequence[Permutation]) -> "SubgroupHandle":
        elems = _closure(gens, self.degree, cap=self.order)
        return SubgroupHandle(self, elems)

    def trivial_subgroup(self) -> "SubgroupHandle":
        return SubgroupHandle(self, [self.identity])

    def full_subgroup(self) -> "SubgroupHandle":
        return SubgroupHandle(self, self.elements)

    def subgroups(self) -> list["SubgroupHandle"]:
        """All subgroups, found by closing known subgroups under one extra
        generator; deterministic order (by order, then element tuple)."""
        if self._subgroups is None:
            found: dict[tuple, SubgroupHandle] = {}
            triv = self.trivial_subgroup()
            found[triv.key()] = triv
            frontier = [triv]
            while frontier:
                nxt = []
                for sub in frontier:
                    have = set(sub.elements)
                    for g in self.elements:
                        if g in have:
                            continue
                        new_elems = _closure(list(sub.elements) + [g], self.degree,
                                             cap=self.order)
                        cand = SubgroupHandle(self, new_elems)
                        if cand.key() not in found:
                            found[cand.key()] = cand
                            nxt.append(cand)
                frontier = nxt
            self._subgroups = sorted(
                found.values(),
                key=lambda s: (s.order, tuple(p.images for p in s.elements)))
        return self._subgroups

    def centralizer(self, sub: "SubgroupHandle") -> "SubgroupHandle":
        gens = sub.generating_set()
        elems = [g for g in self.elements if all(g * h == h * g for h in gens)]
        return SubgroupHandle(self, elems)

    def normalizer(self, sub: "SubgroupHandle") -> "SubgroupHandle":
        hset = set(sub.elements)
        elems = [g for g in self.elements
                 if all(h.conjugate_by(g) in hset for h in sub.generating_set())]
        return SubgroupHandle(self, elems)

    def right_cosets(self, sub: "SubgroupHandle") -> list[tuple[Permutation, ...]]:
        """Right cosets Hx, each sorted, reps canonical-minimal, deterministic."""
        seen: set[Permutation] = set()
        cosets = []
        for g in self.elements:
            if g in seen:
                continue
            coset = tuple(sorted(h * g for h in sub.elements))
            seen.update(coset)
            cosets.append(coset)
        return cosets

    def __repr__(self):
        return f"GroupHandle(order={self.order}, degree={self.degree})"


class SubgroupHandle:
    """A verified subgroup of a parent GroupHandle."""

    def __init__(self, parent: GroupHandle, elements: Iterable[Permutation]):
        self.parent = parent
        elems = tuple(sorted(set(elements)))
        if not elems or not all(e in parent for e in elems):
            raise ValueError("subgroup elements must lie in the parent group")
        eset = set(elems)
        if parent.identity not in eset:
            raise ValueError("subgroup must contain the identity")
        for a in elems:
            if a.inverse() not in eset:
                raise ValueError("subgroup not closed under inverse")
            for b in elems:
                if a * b not in eset:
                    raise ValueError("subgroup not closed under composition")
        if parent.order % len(elems) != 0:
            raise ValueError("subgroup order must divide the group order")
        self.elements = elems
        self.order = len(elems)
        self._as_group: Optional[GroupHandle] = None

    def key(self) -> tuple:
        return tuple(p.images for p in self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in set(self.elements)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def generating_set(self) -> tuple[Permutation, ...]:
        # greedy small generating set, deterministic
        gens: list[Permutation] = []
        have = {self.parent.identity}
        for g in self.elements:
            if g not in have:
                gens.append(g)
                have = _closure(gens, self.parent.degree, cap=self.order)
                if len(have) == self.order:
                    break
        if not gens:
            gens = [self.parent.identity]
        return tuple(gens)

    def as_group(self) -> GroupHandle:
        if self._as_group is None:
            self._as_group = GroupHandle(self.parent.degree, self.generating_set(),
                                         self.elements)
        return self._as_group

    def conjugate(self, g: Permutation) -> "SubgroupHandle":
        return SubgroupHandle(self.parent, [h.conjugate_by(g) for h in self.elements])

    def intersect(self, other: "SubgroupHandle") -> "SubgroupHandle":
        oset = set(other.elements)
        return SubgroupHandle(self.parent, [h for h in self.elements if h in oset])

    def is_normal(self) -> bool:
        hset = set(self.elements)
        return all(h.conjugate_by(g) in hset
                   for g in self.parent.generators for h in self.generating_set())

    def contains_subgroup(self, other: "SubgroupHandle") -> bool:
        hset = set(self.elements)
        return all(e in hset for e in other.elements)

    def __eq__(self, other):
        return (isinstance(other, SubgroupHandle) and self.parent is other.parent
                and self.elements == other.elements)

    def __hash__(self):
        return hash((id(self.parent), self.key()))

    def __repr__(self):
        return f"SubgroupHandle(order={self.order} in {self.parent!r})"


def _closure(gens: Sequence[Permutation], degree: int, cap: int) -> set[Permutation]:
    elems = {Permutation.identity(degree)}
    frontier = [g for g in gens]
    for g in frontier:
        elems.add(g)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = a * g
                if c not in elems:
                    if len(elems) >= cap:
                        raise GroupTooLargeError(
                            f"group enumeration exceeded the cap of {cap}")
                    elems.add(c)
                    nxt.append(c)
        frontier = nxt
    return elems


def enumerate_group(generators: Sequence[Permutation], degree: Optional[int] = None,
                    cap: int = DEFAULT_ORDER_CAP) -> GroupHandle:
    """Enumerate the group generated by the given permutations.

    All generators must share one degree; enumeration is breadth-first closure
    and fails loudly if the cap is exceeded.
    """
    gens = list(generators)
    if degree is None:
        if not gens:
            raise ValueError("need a degree for the trivial group")
        degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators have mismatched degrees")
    elems = _closure(gens, degree, cap)
    return GroupHandle(degree, gens, elems)


def conjugacy_classes(G: GroupHandle) -> list[ConjClass]:
    return G.conjugacy_classes()


# ---------------------------------------------------------------------------
# cores, witnesses, double cosets, intersection chains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoreWitness:
    core: SubgroupHandle
    witness: tuple[Permutation, ...]

    @property
    def r(self) -> int:
        return len(self.witness)


def core_and_witness(G: GroupHandle, H: SubgroupHandle) -> CoreWitness:
    """The core of H in G together with a minimal witness tuple g_1..g_r such
    that H^{g_1} cap ... cap H^{g_r} cap H equals the core.

    Search is breadth-first over r through combinations of the distinct
    nontrivial conjugates of H, so the returned r is minimal.
    """
    conjugates: dict[tuple, tuple[SubgroupHandle, Permutation]] = {}
    for g in G.elements:
        c = H.conjugate(g)
        k = c.key()
        if k != H.key() and k not in conjugates:
            conjugates[k] = (c, g)
    core_elems = set(H.elements)
    for c, _ in conjugates.values():
        core_elems &= set(c.elements)
    core = SubgroupHandle(G, core_elems)
    if core.order == H.order:
        return CoreWitness(core, ())
    conj_list = sorted(conjugates.values(), key=lambda cg: cg[0].key())
    from itertools import combinations
    r = 1
    while True:
        for combo in combinations(conj_list, r):
            cur = set(H.elements)
            for c, _ in combo:
                cur &= set(c.elements)
                if len(cur) == core.order:
                    break
            if len(cur) == core.order:
                return CoreWitness(core, tuple(g for _, g in combo))
        r += 1


class DoubleCosets(NamedTuple):
    reps: tuple[Permutation, ...]
    cosets: tuple[tuple[Permutation, ...], ...]
    sizes: tuple[int, ...]


def double_cosets(G: GroupHandle, K: SubgroupHandle, H: SubgroupHandle) -> DoubleCosets:
    """The partition of G into K\\G/H double cosets, canonical-minimal reps."""
    cache_key = ("dc", K.key(), H.key())
    hit = G._double_cosets.get(cache_key)
    if hit is not None:
        return hit
    seen: set[Permutation] = set()
    reps, cosets, sizes = [], [], []
    for g in G.elements:
        if g in seen:
            continue
        coset = set()
        for k in K.elements:
            kg = k * g
            for h in H.elements:
                coset.add(kg * h)
        coset_t = tuple(sorted(coset))
        seen |= coset
        reps.append(g)
        cosets.append(coset_t)
        sizes.append(len(coset_t))
    assert sum(sizes) == G.order
    out = DoubleCosets(tuple(reps), tuple(cosets), tuple(sizes))
    G._double_cosets[cache_key] = out
    return out


@dataclass(frozen=True)
class IntersectionChain:
    chain: tuple[frozenset, ...]          # F_0, F_1, ... as sets of subgroup keys
    subgroups: dict                       # key -> SubgroupHandle
    d_c_ev: int
    d_c_bracket: tuple[int, int]
    d_c_is_one: bool


def intersection_chain(G: GroupHandle, H: SubgroupHandle) -> IntersectionChain:
    """The ascending chain F_i of i-fold conjugate-intersection subgroup sets,
    its stabilization point, and the derived even combinatorial depth.

    F_0 = {H}, F_{i+1} = {F cap H^x : F in F_i, x in G}; the chain is
    ascending since x = 1 repeats a subgroup.  d_c_ev = 2n for the least n
    with F_{n-1} = F_n; the true combinatorial depth lies in
    [d_c_ev - 1, d_c_ev], and equals 1 iff G = H C_G(H).
    """
    conjugates = []
    seen_keys = set()
    for g in G.elements:
        c = H.conjugate(g)
        if c.key() not in seen_keys:
            seen_keys.add(c.key())
            conjugates.append(c)
    subgroups = {H.key(): H}
    chain = [frozenset([H.key()])]
    while True:
        prev = chain[-1]
        cur = set(prev)
        for key in prev:
            F = subgroups[key]
            for c in conjugates:
                inter = F.intersect(c)
                k = inter.key()
                if k not in subgroups:
                    subgroups[k] = inter
                cur.add(k)
        cur = frozenset(cur)
        chain.append(cur)
        if cur == prev:
            break
    n = len(chain) - 1  # chain = F_0..F_n with F_{n-1} = F_n
    d_c_ev = 2 * n
    cz = G.centralizer(H)
    prods = {h * z for h in H.elements for z in cz.elements}
    is_one = len(prods) == G.order
    return IntersectionChain(tuple(chain), subgroups, d_c_ev,
                             (d_c_ev - 1, d_c_ev), is_one)


def depth_one_adjoint_test(G: GroupHandle, H: SubgroupHandle) -> bool:
    """True iff conjugation by every generator of G fixes each conjugacy class
    of H setwise (the adjoint action fixes every class sum of kH)."""
    Hg = H.as_group()
    gens = G.generators if G.generators else (G.identity,)
    for cls in Hg.conjugacy_classes():
        members = set(cls.elements)
        for g in gens:
            if {h.conjugate_by(g) for h in members} != members:
                return False
    return True


class TIStatus(NamedTuple):
    ti: bool
    normal: bool

    def __bool__(self) -> bool:
        return self.ti


def is_ti_subgroup(G: GroupHandle, H: SubgroupHandle) -> TIStatus:
    """Trivial-intersection test: H cap H^g = 1 for every g outside N_G(H).

    A normal subgroup has no such g, so it is classified not-TI-relevant and
    reported as (ti=False, normal=True).
    """
    if H.order == 1:
        raise ValueError("TI test needs a nontrivial subgroup")
    norm = G.normalizer(H)
    if norm.order == G.order:
        return TIStatus(False, True)
    nset = set(norm.elements)
    hset = set(H.elements)
    for g in G.elements:
        if g in nset:
            continue
        conj = {h.conjugate_by(g) for h in H.elements}
        if len(conj & hset) > 1:
            return TIStatus(False, False)
    return TIStatus(True, False)


# ---------------------------------------------------------------------------
# JSON input
# ---------------------------------------------------------------------------

def group_from_json(data: dict, cap: int = DEFAULT_ORDER_CAP):
    """Parse {"degree": d, "generators": [[images]...],
    "subgroups": {"H": [[images]...], ...}} into handles."""
    try:
        degree = int(data["degree"])
    except KeyError:
        raise ValueError("group JSON is missing the field 'degree'")
    gens_raw = data.get("generators")
    if gens_raw is None:
        raise ValueError("group JSON is missing the field 'generators'")
    gens = [Permutation(images) for images in gens_raw]
    G = enumerate_group(gens, degree=degree, cap=cap)
    subs = {}
    for name, sub_gens in sorted(data.get("subgroups", {}).items()):
        perms = [Permutation(images) for images in sub_gens]
        for p in perms:
            if p not in G:
                raise ValueError(f"subgroup '{name}' generator {p!r} lies outside the group")
        subs[name] = G.subgroup_generated(perms)
    return G, subs


def load_group_file(path: str, cap: int = DEFAULT_ORDER_CAP):
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    return group_from_json(data, cap=cap)
