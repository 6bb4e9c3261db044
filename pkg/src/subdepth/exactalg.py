"""Exact scalar and matrix arithmetic over Q and cyclotomic fields Q(zeta_n).

Scalars are elements of Q(zeta_n) stored as rational coordinate vectors in the
power basis of Q[x]/Phi_n(x).  Matrices, kernels, minimal polynomials and
zero-pattern scans are built on top, so no floating point ever enters.
Everything here is immutable after construction and all operations are pure.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence, Union

Rat = Union[int, Fraction]


class MalformedSequenceError(ValueError):
    """A matrix sequence violated the monotone fill-in precondition."""


# ---------------------------------------------------------------------------
# integer / rational polynomial helpers (coefficients lowest degree first)
# ---------------------------------------------------------------------------

def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _int_poly_div_exact(num: list[int], den: Sequence[int]) -> list[int]:
    # exact division of integer polynomials, remainder must vanish
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        assert c % lead == 0
        q = c // lead
        quot[i - dd] = q
        for j, dc in enumerate(den):
            num[i - dd + j] -= q * dc
    assert all(c == 0 for c in num)
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first, monic."""
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in _divisors(n):
        if d < n:
            num = _int_poly_div_exact(num, cyclotomic_polynomial(d))
    return tuple(num)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _xpow_table(n: int) -> tuple[tuple[int, ...], ...]:
    # x^m mod Phi_n for m = 0 .. max(n-1, 2*phi-2), integer coordinates
    phi = euler_phi(n)
    top = max(n - 1, 2 * phi - 2)
    mod = cyclotomic_polynomial(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    rows.append(tuple(cur))
    for _ in range(top):
        nxt = [0] + cur[: phi - 1] if phi > 1 else [0]
        spill = cur[phi - 1] if phi >= 1 else 0
        if phi == 1:
            nxt = [0]
            spill = cur[0]
        if spill:
            for j in range(phi):
                nxt[j] -= spill * mod[j]
        cur = nxt
        rows.append(tuple(cur))
    return tuple(rows)


# ---------------------------------------------------------------------------
# CyclotomicScalar
# ---------------------------------------------------------------------------

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Cyc:
    """An exact element of Q(zeta_n), the single scalar type for all linear
    algebra in this package.

    ``order`` is n and ``coeffs`` the phi(n) rational coordinates in the
    power basis of Q[x]/Phi_n(x).  Order-1 scalars are plain rationals.
    Mixed-order arithmetic lifts both operands to Q(zeta_lcm) first.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[Rat]):
        if order < 1:
            raise ValueError("order must be positive")
        phi = euler_phi(order)
        if len(coeffs) != phi:
            raise ValueError(f"need {phi} coefficients for order {order}, got {len(coeffs)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))

    def __setattr__(self, *a):  # immutable
        raise AttributeError("Cyc is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational(r: Rat) -> "Cyc":
        return Cyc(1, (Fraction(r),))

    @staticmethod
    def zero() -> "Cyc":
        return Cyc(1, (_ZERO,))

    @staticmethod
    def one() -> "Cyc":
        return Cyc(1, (_ONE,))

    @staticmethod
    def root_of_unity(n: int, k: int = 1) -> "Cyc":
        """zeta_n^k."""
        return Cyc.from_power_sum(n, {k % n: _ONE})

    @staticmethod
    def from_power_sum(n: int, powers: dict[int, Rat]) -> "Cyc":
        """Sum of c * zeta_n^e over the given exponent -> coefficient map."""
        phi = euler_phi(n)
        table = _xpow_table(n)
        acc = [_ZERO] * phi
        for e, c in powers.items():
            c = Fraction(c)
            if c == 0:
                continue
            row = table[e % n]
            for j in range(phi):
                if row[j]:
                    acc[j] += c * row[j]
        return Cyc(n, acc)

    # -- coercion ----------------------------------------------------------

    def lift(self, n: int) -> "Cyc":
        """Embed into Q(zeta_n); requires order | n."""
        if n == self.order:
            return self
        if n % self.order != 0:
            raise ValueError("can only lift to a multiple of the order")
        step = n // self.order
        return Cyc.from_power_sum(
            n, {i * step: c for i, c in enumerate(self.coeffs) if c != 0})

    @staticmethod
    def _pair(a: "Cyc", b: "Cyc") -> tuple["Cyc", "Cyc"]:
        if a.order == b.order:
            return a, b
        n = _lcm(a.order, b.order)
        return a.lift(n), b.lift(n)

    # -- predicates / conversions ------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> "Cyc":
        other = as_cyc(other)
        a, b = Cyc._pair(self, other)
        return Cyc(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "Cyc":
        return Cyc(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Cyc":
        return self + (-as_cyc(other))

    def __rsub__(self, other) -> "Cyc":
        return as_cyc(other) + (-self)

    def __mul__(self, other) -> "Cyc":
        other = as_cyc(other)
        a, b = Cyc._pair(self, other)
        if a.order == 1:
            return Cyc(1, (a.coeffs[0] * b.coeffs[0],))
        phi = euler_phi(a.order)
        conv = [_ZERO] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(b.coeffs):
                if y != 0:
                    conv[i + j] += x * y
        table = _xpow_table(a.order)
        acc = conv[:phi]
        for m in range(phi, 2 * phi - 1):
            c = conv[m]
            if c != 0:
                row = table[m]
                for j in range(phi):
                    if row[j]:
                        acc[j] += c * row[j]
        return Cyc(a.order, acc)

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        if self.order == 1:
            return Cyc(1, (1 / self.coeffs[0],))
        # extended Euclid against Phi_n, which is irreducible over Q
        mod = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        inv = _poly_modular_inverse(list(self.coeffs), mod)
        phi = euler_phi(self.order)
        inv = inv + [_ZERO] * (phi - len(inv))
        return Cyc(self.order, inv[:phi])

    def __truediv__(self, other) -> "Cyc":
        return self * as_cyc(other).inverse()

    def __rtruediv__(self, other) -> "Cyc":
        return as_cyc(other) * self.inverse()

    def __pow__(self, k: int) -> "Cyc":
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyc.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "Cyc":
        """Complex conjugation, the field map zeta -> zeta^(-1)."""
        if self.order <= 2:
            return self
        n = self.order
        return Cyc.from_power_sum(
            n, {(n - i) % n: c for i, c in enumerate(self.coeffs) if c != 0})

    def galois(self, k: int) -> "Cyc":
        """The field map zeta -> zeta^k; requires gcd(k, order) = 1."""
        from math import gcd
        if gcd(k, self.order) != 1:
            raise ValueError("galois exponent must be coprime to the order")
        n = self.order
        acc: dict[int, Fraction] = {}
        for i, c in enumerate(self.coeffs):
            if c != 0:
                e = (i * k) % n
                acc[e] = acc.get(e, _ZERO) + c
        return Cyc.from_power_sum(n, acc)

    # -- canonical form, comparison, hashing ---------------------------------

    def canonical(self) -> "Cyc":
        """Rewrite at the conductor, the least d | order with self in Q(zeta_d)."""
        if self.order == 1:
            return self
        for d in _divisors(self.order):
            if d == self.order:
                return self
            coords = _coords_in_subfield(self, d)
            if coords is not None:
                return Cyc(d, coords)
        return self

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyc.rational(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        c = self.canonical()
        if c.order == 1:
            return hash(c.coeffs[0])
        return hash((c.order, c.coeffs))

    def __repr__(self):
        return f"Cyc({scalar_to_string(self)!r})"


def as_cyc(x) -> Cyc:
    if isinstance(x, Cyc):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyc.rational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Cyc")


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a // gcd(a, b) * b


def _coords_in_subfield(z: Cyc, d: int) -> Optional[tuple[Fraction, ...]]:
    # solve z = sum c_i * lift(zeta_d^i) by Gaussian elimination over Q
    n, phi_n, phi_d = z.order, euler_phi(z.order), euler_phi(d)
    basis = [Cyc.root_of_unity(d, i).lift(n).coeffs for i in range(phi_d)]
    rows = [[basis[j][i] for j in range(phi_d)] + [z.coeffs[i]] for i in range(phi_n)]
    piv = []
    r = 0
    for c in range(phi_d):
        pr = next((i for i in range(r, phi_n) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(phi_n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
    for i in range(r, phi_n):
        if rows[i][phi_d] != 0:
            return None
    sol = [_ZERO] * phi_d
    for i, c in enumerate(piv):
        sol[c] = rows[i][phi_d]
    return tuple(sol)


def _poly_strip(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    _poly_strip(a)
    db, lead = len(b) - 1, b[-1]
    q = [_ZERO] * max(0, len(a) - db)
    while len(a) - 1 >= db and a:
        c = a[-1] / lead
        k = len(a) - 1 - db
        q[k] = c
        for j in range(db + 1):
            a[k + j] -= c * b[j]
        _poly_strip(a)
    return q, a


def _poly_modular_inverse(a: list[Fraction], mod: list[Fraction]) -> list[Fraction]:
    # extended Euclid: returns a^-1 modulo mod
    r0, r1 = list(mod), _poly_strip(list(a))
    s0, s1 = [_ZERO], [_ONE]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        conv = [_ZERO] * (len(q) + len(s1) - 1) if q and s1 else []
        for i, x in enumerate(q):
            for j, y in enumerate(s1):
                conv[i + j] += x * y
        s = [p - q_ for p, q_ in itertools.zip_longest(s0, conv, fillvalue=_ZERO)]
        s0, s1 = s1, _poly_strip(s)
    # r0 is the gcd, a nonzero constant since Phi_n is irreducible
    assert len(r0) == 1
    c = r0[0]
    return [x / c for x in s0]


# ---------------------------------------------------------------------------
# serialization: rationals "p/q", cyclotomics "n:[c0,c1,...]"
# ---------------------------------------------------------------------------

def scalar_to_string(z: Cyc) -> str:
    z = z.canonical()
    if z.order == 1:
        return str(z.coeffs[0])
    return f"{z.order}:[{','.join(str(c) for c in z.coeffs)}]"


def scalar_from_string(s: str) -> Cyc:
    s = s.strip()
    if ":" not in s:
        return Cyc.rational(Fraction(s))
    head, _, body = s.partition(":")
    n = int(head)
    body = body.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"malformed cyclotomic scalar string: {s!r}")
    parts = [p for p in body[1:-1].split(",") if p.strip()]
    return Cyc(n, tuple(Fraction(p) for p in parts))


# ---------------------------------------------------------------------------
# ExactMatrix
# ---------------------------------------------------------------------------

class ExactMatrix:
    """Dense matrix of Cyc entries normalized to one common order."""

    __slots__ = ("rows", "cols", "entries", "order")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if rows < 1 or cols < 1:
            raise ValueError("matrix dimensions must be positive")
        ents = [as_cyc(e) for e in entries]
        if len(ents) != rows * cols:
            raise ValueError("entry count does not match dimensions")
        order = 1
        for e in ents:
            order = _lcm(order, e.order)
        ents = [e.lift(order) for e in ents]
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(ents))
        object.__setattr__(self, "order", order)

    def __setattr__(self, *a):
        raise AttributeError("ExactMatrix is immutable")

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "ExactMatrix":
        r = len(rows)
        c = len(rows[0])
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return ExactMatrix(r, c, [x for row in rows for x in row])

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @staticmethod
    def zeros(r: int, c: int) -> "ExactMatrix":
        return ExactMatrix(r, c, [0] * (r * c))

    def at(self, i: int, j: int) -> Cyc:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Cyc, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_lists(self) -> list[list[Cyc]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_int_grid(self) -> list[list[int]]:
        out = []
        for i in range(self.rows):
            row = []
            for j in range(self.cols):
                f = self.at(i, j).as_fraction()
                if f.denominator != 1:
                    raise ValueError("matrix is not integral")
                row.append(f.numerator)
            out.append(row)
        return out

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows,
                           [self.at(i, j) for j in range(self.cols) for i in range(self.rows)])

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return ExactMatrix(self.rows, self.cols,
                           [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return ExactMatrix(self.rows, self.cols,
                           [a - b for a, b in zip(self.entries, other.entries)])

    def scale(self, c) -> "ExactMatrix":
        c = as_cyc(c)
        return ExactMatrix(self.rows, self.cols, [c * e for e in self.entries])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                acc = Cyc.zero()
                for k in range(self.cols):
                    x = ri[k]
                    if not x.is_zero():
                        acc = acc + x * other.at(k, j)
                out.append(acc)
        return ExactMatrix(self.rows, other.cols, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all((a - b).is_zero() for a, b in zip(self.entries, other.entries))

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(e.canonical().coeffs for e in self.entries)))

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def is_nonnegative_rational(self) -> bool:
        return all(e.is_rational() and e.as_fraction() >= 0 for e in self.entries)

    def zero_pattern(self) -> tuple[tuple[bool, ...], ...]:
        """Boolean support matrix: True where the entry is nonzero."""
        return tuple(tuple(not self.at(i, j).is_zero() for j in range(self.cols))
                     for i in range(self.rows))

    def is_permutation_matrix(self) -> bool:
        if self.rows != self.cols:
            return False
        pat = self.zero_pattern()
        for i in range(self.rows):
            ones = [j for j in range(self.cols) if pat[i][j]]
            if len(ones) != 1 or self.at(i, ones[0]) != 1:
                return False
        return all(sum(1 for i in range(self.rows) if pat[i][j]) == 1
                   for j in range(self.cols))

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"


# ---------------------------------------------------------------------------
# kernels and reduced row echelon machinery
# ---------------------------------------------------------------------------

def rref(rows: list[list[Cyc]]) -> tuple[list[list[Cyc]], list[int]]:
    """In-place reduced row echelon form; returns (nonzero rows, pivot columns)."""
    if not rows:
        return [], []
    width = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(width):
        pr = None
        for i in range(r, len(rows)):
            if not rows[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def solve_kernel(A: ExactMatrix) -> list[tuple[Cyc, ...]]:
    """Basis of the right kernel {v : A v = 0}, deterministic ordering.

    Vectors come out of the reduced echelon form with free columns ascending,
    each normalized with a 1 in its free coordinate.
    """
    rows = A.to_lists()
    red, pivots = rref(rows)
    pivset = set(pivots)
    basis = []
    for free in range(A.cols):
        if free in pivset:
            continue
        v = [Cyc.zero()] * A.cols
        v[free] = Cyc.one()
        for r, p in enumerate(pivots):
            v[p] = -red[r][free]
        basis.append(tuple(v))
    return basis


class RowSpace:
    """Incremental row space over the scalar field, rows as sparse dicts.

    Used for the large sparse eliminations in the Hopf-algebra module; keeps
    a reduced echelon basis keyed by pivot column.
    """

    def __init__(self, width: int):
        self.width = width
        self.pivots: dict[int, dict[int, Cyc]] = {}

    def _reduce(self, row: dict[int, Cyc]) -> dict[int, Cyc]:
        row = {c: v for c, v in row.items() if not v.is_zero()}
        changed = True
        while changed:
            changed = False
            for c in sorted(row):
                if c in self.pivots:
                    f = row[c]
                    for cc, vv in self.pivots[c].items():
                        nv = row.get(cc, Cyc.zero()) - f * vv
                        if nv.is_zero():
                            row.pop(cc, None)
                        else:
                            row[cc] = nv
                    changed = True
                    break
        return row

    def add(self, row: dict[int, Cyc]) -> bool:
        """Reduce and insert; returns True if the row enlarged the space."""
        row = self._reduce(row)
        if not row:
            return False
        p = min(row)
        inv = row[p].inverse()
        row = {c: v * inv for c, v in row.items()}
        # back-substitute into existing pivot rows
        for q, prow in self.pivots.items():
            if p in prow:
                f = prow[p]
                for cc, vv in row.items():
                    nv = prow.get(cc, Cyc.zero()) - f * vv
                    if nv.is_zero():
                        prow.pop(cc, None)
                    else:
                        prow[cc] = nv
        self.pivots[p] = row
        return True

    def contains(self, row: dict[int, Cyc]) -> bool:
        return not self._reduce(dict(row))

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def basis_rows(self) -> list[dict[int, Cyc]]:
        return [dict(self.pivots[p]) for p in sorted(self.pivots)]

    def dense_basis(self) -> list[tuple[Cyc, ...]]:
        out = []
        for p in sorted(self.pivots):
            row = self.pivots[p]
            out.append(tuple(row.get(c, Cyc.zero()) for c in range(self.width)))
        return out

    def __le__(self, other: "RowSpace") -> bool:
        return all(other.contains(r) for r in self.basis_rows())

    def equals(self, other: "RowSpace") -> bool:
        return self.rank == other.rank and self <= other


def kernel_of_sparse_columns(columns: list[dict[int, Cyc]]) -> list[tuple[Cyc, ...]]:
    """Kernel of the map x -> sum x_i * col_i for sparse columns.

    Rows of the implied matrix are deduplicated (after leading-coefficient
    normalization) before elimination, which keeps the group-algebra
    annihilator computations at desk scale.
    """
    n = len(columns)
    rows: dict[tuple, dict[int, Cyc]] = {}
    row_index: dict[int, dict[int, Cyc]] = {}
    for j, col in enumerate(columns):
        for pos, val in col.items():
            row_index.setdefault(pos, {})[j] = val
    for pos, row in row_index.items():
        lead = row[min(row)]
        inv = lead.inverse()
        key = tuple(sorted((c, scalar_to_string(v * inv)) for c, v in row.items()))
        rows.setdefault(key, row)
    mat_rows = [[row.get(j, Cyc.zero()) for j in range(n)] for row in rows.values()]
    if not mat_rows:
        return [tuple(Cyc.one() if i == j else Cyc.zero() for i in range(n)) for j in range(n)]
    red, pivots = rref(mat_rows)
    pivset = set(pivots)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        v = [Cyc.zero()] * n
        v[free] = Cyc.one()
        for r, p in enumerate(pivots):
            v[p] = -red[r][free]
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# ExactPolynomial
# ---------------------------------------------------------------------------

class ExactPolynomial:
    """Polynomial with exact rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Rat]):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("ExactPolynomial is immutable")

    @staticmethod
    def zero() -> "ExactPolynomial":
        return ExactPolynomial(())

    @staticmethod
    def one() -> "ExactPolynomial":
        return ExactPolynomial((1,))

    @staticmethod
    def x() -> "ExactPolynomial":
        return ExactPolynomial((0, 1))

    @staticmethod
    def from_roots(roots: Iterable[Rat]) -> "ExactPolynomial":
        p = ExactPolynomial.one()
        for r in roots:
            p = p * ExactPolynomial((-Fraction(r), 1))
        return p

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return len(self.coeffs) - 1

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        return ExactPolynomial([a + b for a, b in
                                itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=_ZERO)])

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        return ExactPolynomial([a - b for a, b in
                                itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=_ZERO)])

    def __mul__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        if self.is_zero() or other.is_zero():
            return ExactPolynomial.zero()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ExactPolynomial(out)

    def scale(self, c: Rat) -> "ExactPolynomial":
        return ExactPolynomial([Fraction(c) * a for a in self.coeffs])

    def divmod(self, other: "ExactPolynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q, r = _poly_divmod(list(self.coeffs), list(other.coeffs))
        return ExactPolynomial(q), ExactPolynomial(r)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self) -> "ExactPolynomial":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return ExactPolynomial([c / lead for c in self.coeffs])

    def derivative(self) -> "ExactPolynomial":
        return ExactPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def gcd(self, other: "ExactPolynomial") -> "ExactPolynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def lcm(self, other: "ExactPolynomial") -> "ExactPolynomial":
        if self.is_zero() or other.is_zero():
            return ExactPolynomial.zero()
        return ((self * other) // self.gcd(other)).monic()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def evaluate(self, x: Rat) -> Fraction:
        x = Fraction(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_matrix(self, A: ExactMatrix) -> ExactMatrix:
        n = A.rows
        acc = ExactMatrix.zeros(n, n)
        for c in reversed(self.coeffs):
            acc = acc @ A
            if c != 0:
                acc = acc + ExactMatrix.identity(n).scale(c)
        return acc

    def to_string(self, var: str = "X") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}{var}" + (f"^{i}" if i > 1 else "")
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"ExactPolynomial({self.to_string()!r})"


# ---------------------------------------------------------------------------
# minimal polynomial via Krylov relations
# ---------------------------------------------------------------------------

def minimal_polynomial(A: ExactMatrix) -> ExactPolynomial:
    """Monic least-degree m with m(A) = 0, computed exactly.

    Per starting basis vector, iterate the Krylov sequence until a linear
    relation appears; the minimal polynomial is the lcm of the relation
    polynomials.  Basis vectors already inside the accumulated Krylov span
    are skipped since their relations divide the running lcm.
    """
    if A.rows != A.cols:
        raise ValueError("minimal polynomial needs a square matrix")
    n = A.rows
    cols = [{i: A.at(i, j) for i in range(n) if not A.at(i, j).is_zero()}
            for j in range(n)]

    def apply(v: dict[int, Cyc]) -> dict[int, Cyc]:
        out: dict[int, Cyc] = {}
        for j, x in v.items():
            for i, a in cols[j].items():
                nv = out.get(i, Cyc.zero()) + a * x
                if nv.is_zero():
                    out.pop(i, None)
                else:
                    out[i] = nv
        return out

    total = RowSpace(n)
    m = ExactPolynomial.one()
    for start in range(n):
        e = {start: Cyc.one()}
        if total.contains(e):
            continue
        krylov: list[dict[int, Cyc]] = []
        reduced: list[dict[int, Cyc]] = []   # echelon form of krylov
        combos: list[list[Cyc]] = []         # reduced[r] = sum combos[r][t]*krylov[t]
        pivots: list[int] = []
        v = e
        while True:
            # reduce v against current echelon rows while tracking coefficients
            w = dict(v)
            coef = [Cyc.zero()] * len(krylov) + [Cyc.one()]
            for r, prow in enumerate(reduced):
                p = pivots[r]
                if p in w and not w[p].is_zero():
                    f = w[p]
                    for cc, vv in prow.items():
                        nv = w.get(cc, Cyc.zero()) - f * vv
                        if nv.is_zero():
                            w.pop(cc, None)
                        else:
                            w[cc] = nv
                    for t in range(len(combos[r])):
                        coef[t] = coef[t] - f * combos[r][t]
            w = {c: x for c, x in w.items() if not x.is_zero()}
            if not w:
                # relation: sum coef[t] * A^t e = 0 with coef[-1] = 1
                rel = ExactPolynomial([c.as_fraction() for c in coef])
                m = m.lcm(rel.monic())
                break
            p = min(w)
            inv = w[p].inverse()
            w = {c: x * inv for c, x in w.items()}
            coefn = [c * inv for c in coef]
            krylov.append(v)
            reduced.append(w)
            combos.append(coefn + [Cyc.zero()] * (len(krylov) - len(coefn)))
            for r in range(len(combos)):
                combos[r] = combos[r] + [Cyc.zero()] * (len(krylov) - len(combos[r]))
            pivots.append(p)
            total.add(dict(v))
            v = apply(v)
    return m.monic()


# ---------------------------------------------------------------------------
# rational root extraction
# ---------------------------------------------------------------------------

def _int_divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def factor_rational_roots(p: ExactPolynomial):
    """Extract all rational roots exactly.

    Returns (roots, residual) where roots maps each rational root to its
    multiplicity and residual is the monic cofactor with no rational roots.
    Uses the square-free part for candidate search, then divides out of the
    original polynomial for multiplicities.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    roots: dict[Fraction, int] = {}
    work = p.monic()
    # root zero first
    k = 0
    while work.coeffs[0] == 0:
        work = work // ExactPolynomial.x()
        k += 1
    if k:
        roots[_ZERO] = k
    if work.degree == 0:
        return roots, ExactPolynomial.one()
    sf = (work // work.gcd(work.derivative())).monic()
    # integerize the square-free part for the rational root test
    den = 1
    for c in sf.coeffs:
        den = _lcm(den, c.denominator)
    ic = [int(c * den) for c in sf.coeffs]
    cands: set[Fraction] = set()
    for num in _int_divisors(ic[0]):
        for d in _int_divisors(ic[-1]):
            cands.add(Fraction(num, d))
            cands.add(Fraction(-num, d))
    for r in sorted(cands):
        if sf.evaluate(r) == 0:
            mult = 0
            lin = ExactPolynomial((-r, 1))
            while True:
                q, rem = work.divmod(lin)
                if rem.is_zero():
                    work = q
                    mult += 1
                else:
                    break
            roots[r] = mult
    return roots, work.monic()


# ---------------------------------------------------------------------------
# zero-pattern scans and support connectivity
# ---------------------------------------------------------------------------

def pattern_stabilization_index(seq: Callable[[int], ExactMatrix],
                                k_max: int) -> Optional[int]:
    """Least k >= 1 with pattern(seq(k)) = pattern(seq(k+1)), or None.

    The sequence must have entrywise nonnegative rational entries with
    monotone fill-in; violations raise MalformedSequenceError.  None means
    the scan budget k_max was exhausted (unbounded within budget).
    """
    prev_mat = seq(1)
    if not prev_mat.is_nonnegative_rational():
        raise MalformedSequenceError("sequence entries must be nonnegative rationals")
    prev = prev_mat.zero_pattern()
    for k in range(1, k_max + 1):
        mat = seq(k + 1)
        if not mat.is_nonnegative_rational():
            raise MalformedSequenceError("sequence entries must be nonnegative rationals")
        cur = mat.zero_pattern()
        for r_prev, r_cur in zip(prev, cur):
            for a, b in zip(r_prev, r_cur):
                if a and not b:
                    raise MalformedSequenceError("zero pattern lost an entry; not monotone")
        if cur == prev:
            return k
        prev = cur
    return None


def is_indecomposable(A: ExactMatrix) -> bool:
    """True iff the symmetric support graph of a square nonnegative matrix is
    connected; a 1x1 zero matrix counts as connected."""
    if A.rows != A.cols:
        raise ValueError("indecomposability needs a square matrix")
    if not A.is_nonnegative_rational():
        raise ValueError("indecomposability needs nonnegative entries")
    n = A.rows
    pat = A.zero_pattern()
    adj = [set() for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if pat[i][j] or pat[j][i]:
                adj[i].add(j)
                adj[j].add(i)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n
