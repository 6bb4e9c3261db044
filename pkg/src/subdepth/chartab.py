"""Exact complex character tables, class fusion, and inclusion matrices.

Tables are computed by the Dixon-Schneider method: simultaneous eigenvectors
of the class-multiplication matrices over GF(p) for a prime p = 1 (mod e),
p > 2*sqrt(|G|), lifted to Q(zeta_e) by matching discrete logarithms against
a fixed primitive root.  Everything is verified against the orthogonality
relations before a table is returned, so a bad prime or a bug can never
produce a silently wrong table.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exactalg import (Cyc, ExactMatrix, scalar_from_string, scalar_to_string)
from .permgroup import ConjClass, GroupHandle, Permutation, SubgroupHandle

CLASS_CAP = 60


class DixonInternalError(RuntimeError):
    """One prime attempt failed; the driver retries with the next prime."""


# ---------------------------------------------------------------------------
# GF(p) helpers
# ---------------------------------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _dixon_primes(exponent: int, order: int):
    bound = 2 * order ** 0.5
    p = exponent + 1
    while True:
        if p > bound and _is_prime(p):
            yield p
        p += exponent


def _primitive_root(p: int) -> int:
    qs = _prime_factors(p - 1)
    for w in range(2, p):
        if all(pow(w, (p - 1) // q, p) != 1 for q in qs):
            return w
    raise DixonInternalError(f"no primitive root mod {p}")


def _modp_kernel(rows: list[list[int]], width: int, p: int) -> list[list[int]]:
    rows = [r[:] for r in rows]
    pivots = []
    r = 0
    for c in range(width):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    pivset = set(pivots)
    basis = []
    for free in range(width):
        if free in pivset:
            continue
        v = [0] * width
        v[free] = 1
        for i, c in enumerate(pivots):
            v[c] = (-rows[i][free]) % p
        basis.append(v)
    return basis


def _modp_minpoly(mat: list[list[int]], p: int) -> list[int]:
    # lcm of Krylov relation polynomials, coefficients lowest first, monic
    n = len(mat)

    def polymul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
        return out

    def polymod(a, b):
        a = a[:]
        while len(a) >= len(b) and any(a):
            while a and a[-1] % p == 0:
                a.pop()
            if len(a) < len(b):
                break
            f = a[-1] * pow(b[-1], -1, p) % p
            off = len(a) - len(b)
            for j in range(len(b)):
                a[off + j] = (a[off + j] - f * b[j]) % p
            while a and a[-1] % p == 0:
                a.pop()
        return a or [0]

    def polylcm(a, b):
        g = a
        h = b
        while any(c % p for c in h):
            g, h = h, polymod(g, h)
        quo_len = len(a) + len(b) - len(g)
        # lcm = a*b/gcd computed by dividing a*b by g
        prod = polymul(a, b)
        out = [0] * quo_len
        rem = prod[:]
        for i in range(len(rem) - 1, len(g) - 2, -1):
            f = rem[i] * pow(g[-1], -1, p) % p
            out[i - len(g) + 1] = f
            for j in range(len(g)):
                rem[i - len(g) + 1 + j] = (rem[i - len(g) + 1 + j] - f * g[j]) % p
        return out

    m = [1]
    span_rows: list[list[int]] = []

    def in_span(v):
        rows = [r[:] for r in span_rows] + [v[:]]
        red = _modp_rank(rows, p)
        return red == _modp_rank([r[:] for r in span_rows], p)

    for start in range(n):
        e = [0] * n
        e[start] = 1
        if span_rows and in_span(e):
            continue
        krylov = [e]
        v = e
        while True:
            v = [sum(mat[i][j] * v[j] for j in range(n)) % p for i in range(n)]
            aug = krylov + [v]
            if _modp_rank([r[:] for r in aug], p) == len(krylov):
                coeffs = _modp_solve_combo(krylov, v, p)
                rel = [(-c) % p for c in coeffs] + [1]
                m = polylcm(m, rel)
                break
            krylov.append(v)
        span_rows.extend(krylov)
    lead_inv = pow(m[-1], -1, p)
    return [c * lead_inv % p for c in m]


def _modp_rank(rows: list[list[int]], p: int) -> int:
    if not rows:
        return 0
    width = len(rows[0])
    r = 0
    for c in range(width):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(r + 1, len(rows)):
            if rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def _modp_solve_combo(basis: list[list[int]], v: list[int], p: int) -> list[int]:
    # solve v = sum c_t basis[t]; basis is independent
    n = len(v)
    t = len(basis)
    rows = [[basis[j][i] for j in range(t)] + [v[i]] for i in range(n)]
    piv = []
    r = 0
    for c in range(t):
        pr = next((i for i in range(r, n) if rows[i][c] % p), None)
        if pr is None:
            raise DixonInternalError("dependent Krylov basis")
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
    for i in range(r, n):
        if rows[i][t] % p:
            raise DixonInternalError("inconsistent Krylov solve")
    sol = [0] * t
    for i, c in enumerate(piv):
        sol[c] = rows[i][t]
    return sol


# ---------------------------------------------------------------------------
# character table
# ---------------------------------------------------------------------------

@dataclass
class CharacterTable:
    group: GroupHandle
    exponent: int
    classes: list[ConjClass]
    irreducibles: list[tuple[Cyc, ...]]

    @property
    def degrees(self) -> list[int]:
        return [int(row[0].as_fraction()) for row in self.irreducibles]

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    def trivial_index(self) -> int:
        one = Cyc.one()
        for i, row in enumerate(self.irreducibles):
            if all(v == one for v in row):
                return i
        raise AssertionError("no trivial character found")

    def inner_product(self, a: Sequence[Cyc], b: Sequence[Cyc]) -> Cyc:
        """<a, b> = (1/|G|) sum_C |C| a(C) conj(b(C)), exact."""
        acc = Cyc.zero()
        for cls, x, y in zip(self.classes, a, b):
            acc = acc + x * y.conjugate() * cls.size
        return acc * Fraction(1, self.group.order)

    def verify(self) -> None:
        """Row orthogonality and the degree sum, exactly."""
        n = len(self.irreducibles)
        if sum(d * d for d in self.degrees) != self.group.order:
            raise AssertionError("sum of squared degrees does not match the group order")
        for i in range(n):
            for j in range(i, n):
                ip = self.inner_product(self.irreducibles[i], self.irreducibles[j])
                want = 1 if i == j else 0
                if ip != want:
                    raise AssertionError(f"row orthogonality failed at ({i},{j})")

    def to_json(self) -> dict:
        return {
            "exponent": self.exponent,
            "classes": [{"rep": list(c.rep.images), "size": c.size} for c in self.classes],
            "irreducibles": [[scalar_to_string(v) for v in row]
                             for row in self.irreducibles],
        }

    def __repr__(self):
        return f"CharacterTable(|G|={self.group.order}, degrees={self.degrees})"


def compute_character_table(G: GroupHandle) -> CharacterTable:
    """Exact character table of G, deterministic irreducible ordering
    (degree, then lexicographic on value coordinates over Q(zeta_e))."""
    classes = G.conjugacy_classes()
    r = len(classes)
    if r > CLASS_CAP:
        raise ValueError(f"group has {r} classes, above the cap of {CLASS_CAP}")
    e = G.exponent()
    failures = []
    for attempt, p in enumerate(_dixon_primes(e, G.order)):
        if attempt >= 8:
            raise RuntimeError(
                "character table failed for 8 primes: " + "; ".join(failures))
        try:
            irred = _dixon_schneider(G, classes, e, p)
            table = CharacterTable(G, e, classes, irred)
            table.verify()
            return table
        except DixonInternalError as exc:
            failures.append(f"p={p}: {exc}")
            continue
    raise AssertionError("unreachable")


def _dixon_schneider(G: GroupHandle, classes: list[ConjClass], e: int,
                     p: int) -> list[tuple[Cyc, ...]]:
    r = len(classes)
    order = G.order
    class_of = {g: i for i, cls in enumerate(classes) for g in cls.elements}
    inv_class = [class_of[cls.rep.inverse()] for cls in classes]

    # class-multiplication structure constants a[i][j][k]
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    for k, cls_k in enumerate(classes):
        gk = cls_k.rep
        for i, cls_i in enumerate(classes):
            for x in cls_i.elements:
                j = class_of[x.inverse() * gk]
                a[i][j][k] += 1

    # split GF(p)^r into common eigenspaces of the matrices A_i u = u_i u,
    # where (A_i)[j][k] = a[i][j][k]; each space is kept as mod-p RREF rows
    # so coordinates can be read off at the pivot positions
    spaces = [[_unit(r, i) for i in range(r)]]
    for i in range(1, r):
        if all(len(b) == 1 for b in spaces):
            break
        A = a[i]
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            d = len(basis)
            piv = [_pivot_row(v) for v in basis]
            images = [_apply_modp(A, v, p) for v in basis]
            # A b_m = sum_l R[l][m] b_l, coordinates read at pivot rows
            R = [[images[m][piv[l]] for m in range(d)] for l in range(d)]
            mp = _modp_minpoly(R, p)
            roots = [lam for lam in range(p) if _polyeval(mp, lam, p) == 0]
            covered = 0
            for lam in roots:
                shifted = [[(R[x][y] - (lam if x == y else 0)) % p
                            for y in range(d)] for x in range(d)]
                kern = _modp_kernel(shifted, d, p)
                if not kern:
                    continue
                ambient = []
                for coords in kern:
                    vec = [0] * r
                    for m, c in enumerate(coords):
                        if c:
                            for t in range(r):
                                vec[t] = (vec[t] + c * basis[m][t]) % p
                    ambient.append(vec)
                reduced = _modp_rref_rows(ambient, p)
                covered += len(reduced)
                new_spaces.append(reduced)
            if covered != d:
                raise DixonInternalError("eigenspace splitting lost dimensions")
        spaces = new_spaces
    if not all(len(b) == 1 for b in spaces):
        raise DixonInternalError("class matrices did not split the space")

    # normalize so u[identity class] = 1; the vector then holds the class
    # algebra character u_j = |C_j| chi(g_j) / chi(1) mod p
    id_class = next(i for i, c in enumerate(classes) if c.rep.is_identity())
    us = []
    for (v,) in spaces:
        if v[id_class] % p == 0:
            raise DixonInternalError("eigenvector vanishes at the identity class")
        inv = pow(v[id_class], -1, p)
        us.append([x * inv % p for x in v])

    w = _primitive_root(p)
    z = pow(w, (p - 1) // e, p)  # primitive e'th root of unity mod p
    power_class = []
    for cls in classes:
        o = cls.rep.order()
        pc = []
        g = G.identity
        for _ in range(o):
            pc.append(class_of[g])
            g = g * cls.rep
        power_class.append(pc)

    rows = []
    for u in us:
        s = 0
        for j in range(r):
            s = (s + u[j] * u[inv_class[j]] * pow(classes[j].size, -1, p)) % p
        if s == 0:
            raise DixonInternalError("degree denominator vanished")
        deg_sq = order * pow(s, -1, p) % p
        deg = _sqrt_modp(deg_sq, p)
        if deg is None:
            raise DixonInternalError("degree square root does not exist")
        deg = min(deg, p - deg)
        chi_bar = [u[j] * deg % p * pow(classes[j].size, -1, p) % p for j in range(r)]
        values = []
        for j in range(r):
            o = classes[j].rep.order()
            zo_inv = pow(z, -(e // o) % (p - 1), p)
            o_inv = pow(o, -1, p)
            powers: dict[int, int] = {}
            for k in range(o):
                mk = 0
                for l in range(o):
                    mk = (mk + chi_bar[power_class[j][l]] * pow(zo_inv, k * l, p)) % p
                mk = mk * o_inv % p
                if mk:
                    if mk > deg:
                        raise DixonInternalError("multiplicity exceeds the degree")
                    powers[(e // o) * k] = mk
            values.append(Cyc.from_power_sum(e, powers) if powers else Cyc.zero())
        if values[id_class] != deg:
            raise DixonInternalError("lifted degree mismatch")
        rows.append(tuple(values))

    # ordering convention: value tuples descending lexicographically with the
    # identity class compared last; reproduces the classical table layouts
    # (trivial character first) bit-for-bit
    rows.sort(key=lambda row: [v.lift(e).coeffs for v in row[1:] + row[:1]],
              reverse=True)
    return rows


def _modp_rref_rows(rows: list[list[int]], p: int) -> list[list[int]]:
    rows = [r[:] for r in rows]
    width = len(rows[0])
    r = 0
    for c in range(width):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
    return rows[:r]


def _unit(r: int, i: int) -> list[int]:
    v = [0] * r
    v[i] = 1
    return v


def _pivot_row(v: list[int]) -> int:
    return next(i for i, x in enumerate(v) if x)


def _apply_modp(A: list[list[int]], v: list[int], p: int) -> list[int]:
    # (A v)[j] = sum_k A[j][k] v[k]
    r = len(v)
    out = [0] * r
    for j in range(r):
        acc = 0
        for k in range(r):
            if v[k]:
                acc += A[j][k] * v[k]
        out[j] = acc % p
    return out


def _polyeval(poly: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(poly):
        acc = (acc * x + c) % p
    return acc


def _sqrt_modp(a: int, p: int) -> Optional[int]:
    a %= p
    for t in range((p + 1) // 2 + 1):
        if t * t % p == a:
            return t
    return None


# ---------------------------------------------------------------------------
# fusion, inclusion matrix, permutation character
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassFusion:
    """Map from H-class index to the G-class index containing it."""
    mapping: tuple[int, ...]


def class_fusion(G: GroupHandle, H: SubgroupHandle) -> ClassFusion:
    tab_h_classes = H.as_group().conjugacy_classes()
    mapping = []
    for cls in tab_h_classes:
        mapping.append(G.class_index(cls.rep))
    return ClassFusion(tuple(mapping))


@dataclass(frozen=True)
class InclusionMatrix:
    """Nonnegative integer matrix of irreducible restriction multiplicities;
    rows are subgroup irreducibles, columns are group irreducibles."""
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def to_exact(self) -> ExactMatrix:
        return ExactMatrix.from_rows(self.entries)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __str__(self):
        width = max(len(str(x)) for row in self.entries for x in row)
        return "\n".join(" ".join(str(x).rjust(width) for x in row)
                         for row in self.entries)


def inclusion_matrix(tabG: CharacterTable, tabH: CharacterTable,
                     fusion: ClassFusion) -> InclusionMatrix:
    """m_ij = <chi_j restricted to H, phi_i> by the exact inner product over
    H-classes.  Non-integer or negative values mean corrupted inputs and are
    a hard failure."""
    p = len(tabH.irreducibles)
    q = len(tabG.irreducibles)
    rows = []
    for i in range(p):
        row = []
        phi = tabH.irreducibles[i]
        for j in range(q):
            chi_restr = [tabG.irreducibles[j][fusion.mapping[c]]
                         for c in range(tabH.n_classes)]
            val = tabH.inner_product(chi_restr, phi)
            if not val.is_rational():
                raise AssertionError("restriction multiplicity is not rational")
            f = val.as_fraction()
            if f.denominator != 1 or f < 0:
                raise AssertionError("restriction multiplicity is not a nonnegative integer")
            row.append(int(f))
        rows.append(tuple(row))
    M = InclusionMatrix(p, q, tuple(rows))
    for i, row in enumerate(M.entries):
        if not any(row):
            raise AssertionError(f"inclusion matrix has a zero row at {i}")
    for j in range(q):
        if not any(M.entries[i][j] for i in range(p)):
            raise AssertionError(f"inclusion matrix has a zero column at {j}")
    degH, degG = tabH.degrees, tabG.degrees
    for j in range(q):
        if sum(M.entries[i][j] * degH[i] for i in range(p)) != degG[j]:
            raise AssertionError(f"column dimension identity fails at column {j}")
    return M


def permutation_character(G: GroupHandle, H: SubgroupHandle) -> tuple[int, ...]:
    """Character of the right coset module: value at a class C is the number
    of right cosets Hx fixed by a representative of C."""
    cosets = G.right_cosets(H)
    reps = [c[0] for c in cosets]
    hset = set(H.elements)
    values = []
    for cls in G.conjugacy_classes():
        g = cls.rep
        count = 0
        for x in reps:
            if x * g * x.inverse() in hset:
                count += 1
        values.append(count)
    return tuple(values)


def induce_class_function(G: GroupHandle, H: SubgroupHandle,
                          psi: Sequence[Cyc]) -> tuple[Cyc, ...]:
    """psi induced from H to G: (psi^G)(g) = (1/|H|) sum_{x in G, xgx^-1 in H}
    psi(xgx^-1)."""
    Hgrp = H.as_group()
    hset = set(H.elements)
    out = []
    for cls in G.conjugacy_classes():
        g = cls.rep
        acc = Cyc.zero()
        for x in G.elements:
            y = x * g * x.inverse()
            if y in hset:
                acc = acc + psi[Hgrp.class_index(y)]
        out.append(acc * Fraction(1, H.order))
    return tuple(out)


# ---------------------------------------------------------------------------
# import / cross-validation
# ---------------------------------------------------------------------------

def table_from_json(G: GroupHandle, data: dict) -> CharacterTable:
    """Attach an imported table to G, aligning imported classes with the
    computed class order; the result is verified like a computed table."""
    try:
        e = int(data["exponent"])
        cls_data = data["classes"]
        irr_data = data["irreducibles"]
    except KeyError as exc:
        raise ValueError(f"character table JSON is missing the field {exc}")
    classes = G.conjugacy_classes()
    if len(cls_data) != len(classes):
        raise ValueError("imported table has the wrong number of classes")
    # imported class i sits at computed position perm[i]
    perm = []
    for entry in cls_data:
        rep = Permutation(entry["rep"])
        if rep not in G:
            raise ValueError(f"imported class representative {rep!r} is not in the group")
        idx = G.class_index(rep)
        if classes[idx].size != int(entry["size"]):
            raise ValueError(f"imported class size mismatch for representative {rep!r}")
        perm.append(idx)
    if sorted(perm) != list(range(len(classes))):
        raise ValueError("imported classes do not biject with computed classes")
    irreducibles = []
    for row in irr_data:
        if len(row) != len(classes):
            raise ValueError("imported irreducible has the wrong length")
        vals = [Cyc.zero()] * len(classes)
        for i, s in enumerate(row):
            vals[perm[i]] = scalar_from_string(s)
        irreducibles.append(tuple(vals))
    table = CharacterTable(G, e, classes, irreducibles)
    table.verify()
    return table


def tables_agree_up_to_row_permutation(a: CharacterTable, b: CharacterTable) -> bool:
    if len(a.irreducibles) != len(b.irreducibles):
        return False
    e = max(a.exponent, b.exponent)

    def keyed(t):
        return sorted(tuple(v.lift(e).coeffs for v in row) for row in t.irreducibles)

    return keyed(a) == keyed(b)


def load_table_file(G: GroupHandle, path: str) -> CharacterTable:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    return table_from_json(G, data)
