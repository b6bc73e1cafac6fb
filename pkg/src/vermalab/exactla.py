"""Exact scalars and sparse linear algebra over Q and Q(q).

Scalars are either ``fractions.Fraction`` (exact rationals) or
:class:`RatFunc` (reduced fractions of polynomials in one indeterminate
``q`` with rational coefficients, denominator monic).  Matrices are
sparse maps ``(row, col) -> scalar`` with zeros absent.

Kernel computations over the rationals clear denominators and run a
fraction-free (Bareiss) elimination, so intermediate values stay
integral.  Results are normalized for reproducibility: pivots take the
lowest admissible column index, and rational kernel vectors are scaled
to integer entries with gcd 1 and positive leading coordinate.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

__all__ = [
    "RatFunc",
    "SparseMat",
    "nullspace",
    "solve",
    "generalized_kernel",
    "vec_add",
    "vec_sub",
    "vec_scale",
    "vec_is_zero",
    "normalize_integer_vector",
]


# ---------------------------------------------------------------------------
# polynomials in q over Q, as tuples of Fractions (low degree first)
# ---------------------------------------------------------------------------

def _ptrim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a, b):
    n = max(len(a), len(b))
    return _ptrim(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def _pneg(a):
    return tuple(-x for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _ptrim(out)


def _pscale(c, a):
    if c == 0:
        return ()
    return _ptrim(c * x for x in a)


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(rem) >= len(b):
        c = rem[-1] / lead
        k = len(rem) - len(b)
        quo[k] = c
        for i, y in enumerate(b):
            rem[k + i] -= c * y
        while rem and rem[-1] == 0:
            rem.pop()
        if not rem:
            break
    return _ptrim(quo), _ptrim(rem)


def _pgcd(a, b):
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    if a:
        a = _pscale(1 / a[-1], a)  # monic
    return a


def _peval(a, value):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * value + c
    return acc


def _pstr(a):
    if not a:
        return "0"
    parts = []
    for i, c in enumerate(a):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append("q" if c == 1 else ("-q" if c == -1 else f"{c}*q"))
        else:
            parts.append(
                f"q^{i}" if c == 1 else (f"-q^{i}" if c == -1 else f"{c}*q^{i}")
            )
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


class RatFunc:
    """A rational function in q over Q, kept fully reduced.

    The denominator is monic and nonzero; numerator and denominator are
    coprime.  Equality is therefore plain structural equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(Fraction(1),)):
        num = _ptrim(Fraction(x) for x in num)
        den = _ptrim(Fraction(x) for x in den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if num:
            g = _pgcd(num, den)
            if len(g) > 1:
                num, _ = _pdivmod(num, g)
                den, _ = _pdivmod(den, g)
            lead = den[-1]
            if lead != 1:
                num = _pscale(1 / lead, num)
                den = _pscale(1 / lead, den)
        else:
            den = (Fraction(1),)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    # -- constructors -------------------------------------------------
    @staticmethod
    def const(c):
        return RatFunc((Fraction(c),))

    @staticmethod
    def q(power=1):
        if power >= 0:
            return RatFunc((0,) * power + (1,))
        return RatFunc((1,), (0,) * (-power) + (1,))

    @staticmethod
    def _lift(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc.const(x)
        return NotImplemented

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        other = RatFunc._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(_pneg(self.num), self.den)

    def __sub__(self, other):
        other = RatFunc._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = RatFunc._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFunc._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        return RatFunc._lift(other) / self

    def __pow__(self, k):
        if k < 0:
            return (RatFunc.const(1) / self) ** (-k)
        out = RatFunc.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self):
        return RatFunc.const(1) / self

    # -- predicates ---------------------------------------------------
    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = RatFunc._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def at(self, value):
        """Evaluate at q = value; the denominator must not vanish there."""
        d = _peval(self.den, Fraction(value))
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at q={value}")
        return _peval(self.num, Fraction(value)) / d

    def __repr__(self):
        if self.den == (Fraction(1),):
            return _pstr(self.num)
        return f"({_pstr(self.num)})/({_pstr(self.den)})"


# ---------------------------------------------------------------------------
# sparse vectors: plain dicts index -> scalar, zeros absent
# ---------------------------------------------------------------------------

def vec_add(u, v):
    out = dict(u)
    for k, x in v.items():
        y = out.get(k, 0) + x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def vec_sub(u, v):
    out = dict(u)
    for k, x in v.items():
        y = out.get(k, 0) - x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def vec_scale(c, u):
    if not c:
        return {}
    return {k: c * x for k, x in u.items()}


def vec_is_zero(u):
    return not u


def normalize_integer_vector(u):
    """Scale a rational vector to integer entries with gcd 1.

    The sign is fixed by making the highest-indexed nonzero coordinate
    positive; for kernel vectors produced by back substitution that is
    the defining free coordinate.  Keys must be sortable.
    """
    if not u:
        return {}
    den_lcm = 1
    for x in u.values():
        f = Fraction(x)
        den_lcm = den_lcm * f.denominator // gcd(den_lcm, f.denominator)
    ints = {k: int(Fraction(x) * den_lcm) for k, x in u.items()}
    g = 0
    for x in ints.values():
        g = gcd(g, abs(x))
    lead = ints[max(ints)]
    sign = -1 if lead < 0 else 1
    return {k: sign * x // g for k, x in ints.items()}


# ---------------------------------------------------------------------------
# sparse matrices
# ---------------------------------------------------------------------------

class SparseMat:
    """Sparse matrix with exact scalar entries, zeros never stored."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimension")
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            items = entries.items() if isinstance(entries, dict) else entries
            for key, val in items:
                r, c = key
                if not (0 <= r < rows and 0 <= c < cols):
                    raise IndexError(f"entry ({r},{c}) out of range {rows}x{cols}")
                if val:
                    self.entries[r, c] = val

    @staticmethod
    def identity(n, one=Fraction(1)):
        return SparseMat(n, n, {(i, i): one for i in range(n)})

    @staticmethod
    def from_rows(rows_list):
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        ent = {}
        for i, row in enumerate(rows_list):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, x in enumerate(row):
                if x:
                    ent[i, j] = Fraction(x) if isinstance(x, int) else x
        return SparseMat(rows, cols, ent)

    def to_dense(self):
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), x in self.entries.items():
            out[i][j] = x
        return out

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def __eq__(self, other):
        return (
            isinstance(other, SparseMat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def is_zero(self):
        return not self.entries

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in addition")
        ent = dict(self.entries)
        for k, x in other.entries.items():
            y = ent.get(k, 0) + x
            if y:
                ent[k] = y
            else:
                ent.pop(k, None)
        return SparseMat(self.rows, self.cols, ent)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if not c:
            return SparseMat(self.rows, self.cols)
        return SparseMat(self.rows, self.cols, {k: c * x for k, x in self.entries.items()})

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in product")
        by_row = {}
        for (i, j), x in other.entries.items():
            by_row.setdefault(i, []).append((j, x))
        ent = {}
        for (i, k), x in self.entries.items():
            for j, y in by_row.get(k, ()):
                key = (i, j)
                z = ent.get(key, 0) + x * y
                if z:
                    ent[key] = z
                else:
                    ent.pop(key, None)
        return SparseMat(self.rows, other.cols, ent)

    def __pow__(self, k):
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix power")
        out = SparseMat.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return out

    def apply(self, vec):
        """Matrix times sparse column vector (dict col -> scalar)."""
        out = {}
        by_col = {}
        for (i, j), x in self.entries.items():
            by_col.setdefault(j, []).append((i, x))
        for j, c in vec.items():
            for i, x in by_col.get(j, ()):
                y = out.get(i, 0) + x * c
                if y:
                    out[i] = y
                else:
                    out.pop(i, None)
        return out

    def transpose(self):
        return SparseMat(self.cols, self.rows, {(j, i): x for (i, j), x in self.entries.items()})

    def column(self, j):
        return {i: x for (i, jj), x in self.entries.items() if jj == j}

    def __repr__(self):
        return f"SparseMat({self.rows}x{self.cols}, {len(self.entries)} entries)"


def _is_rational_matrix(m):
    return all(isinstance(x, (int, Fraction)) for x in m.entries.values())


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------

def _echelon_fraction_free(dense):
    """Bareiss fraction-free row echelon on an integer matrix, in place.

    Returns the list of pivot columns.  Pivots are chosen at the lowest
    column index admitting a nonzero entry, rows swapped as needed.
    """
    rows = len(dense)
    cols = len(dense[0]) if rows else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if dense[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            dense[r], dense[pr] = dense[pr], dense[r]
        piv = dense[r][c]
        for i in range(r + 1, rows):
            if all(x == 0 for x in dense[i][c:]):
                continue
            xi = dense[i][c]
            for j in range(cols):
                num = piv * dense[i][j] - xi * dense[r][j]
                quo, rem = divmod(num, prev)
                assert rem == 0, "fraction-free elimination lost exactness"
                dense[i][j] = quo
        prev = piv
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def _echelon_field(dense):
    """Plain Gaussian elimination for entries in an arbitrary field."""
    rows = len(dense)
    cols = len(dense[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if dense[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            dense[r], dense[pr] = dense[pr], dense[r]
        piv = dense[r][c]
        for i in range(r + 1, rows):
            if dense[i][c]:
                factor = dense[i][c] / piv
                for j in range(c, cols):
                    dense[i][j] = dense[i][j] - factor * dense[r][j]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def _dense_int_copy(m):
    """Dense integer copy of a rational matrix (rows scaled by denominator lcm)."""
    dense = [[0] * m.cols for _ in range(m.rows)]
    row_lcm = [1] * m.rows
    for (i, _), x in m.entries.items():
        d = Fraction(x).denominator
        row_lcm[i] = row_lcm[i] * d // gcd(row_lcm[i], d)
    for (i, j), x in m.entries.items():
        dense[i][j] = int(Fraction(x) * row_lcm[i])
    return dense


def _kernel_from_echelon(dense, pivots, cols, rational):
    """Kernel basis by back substitution on an echelon form."""
    free = [c for c in range(cols) if c not in pivots]
    one = _field_one(dense) if not rational else Fraction(1)
    basis = []
    for fc in free:
        x = {fc: one}
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            s = None
            for j, xj in x.items():
                a = dense[r][j]
                if a:
                    s = a * xj if s is None else s + a * xj
            if s is not None and s:
                x[pc] = -s / dense[r][pc]
        if rational:
            basis.append(normalize_integer_vector(x))
        else:
            basis.append({k: v for k, v in x.items() if v})  # free coordinate is 1
    return basis


def _field_one(dense):
    for row in dense:
        for x in row:
            if x:
                return x / x
    return Fraction(1)


def nullspace(m):
    """Basis of ker(m), one sparse vector per free column.

    Over the rationals each basis vector has integer entries with gcd 1
    and its defining free coordinate positive.  Over other fields the
    free coordinate is normalized to 1.  The empty list means the map is
    injective.
    """
    if _is_rational_matrix(m):
        dense = _dense_int_copy(m)
        pivots = _echelon_fraction_free(dense)
        return _kernel_from_echelon(dense, pivots, m.cols, rational=True)
    dense = [[m.entries.get((i, j), _zero_like(m)) for j in range(m.cols)] for i in range(m.rows)]
    pivots = _echelon_field(dense)
    return _kernel_from_echelon(dense, pivots, m.cols, rational=False)


def _zero_like(m):
    for x in m.entries.values():
        return x - x
    return Fraction(0)


def rank(m):
    if _is_rational_matrix(m):
        dense = _dense_int_copy(m)
        return len(_echelon_fraction_free(dense))
    dense = [[m.entries.get((i, j), _zero_like(m)) for j in range(m.cols)] for i in range(m.rows)]
    return len(_echelon_field(dense))


def solve(m, b):
    """Some x with m @ x = b, or None when b is outside the image.

    b is a sparse vector over row indices; raises ValueError when an
    index of b lies outside the row range.
    """
    for i in b:
        if not (0 <= i < m.rows):
            raise ValueError(f"right-hand side index {i} out of range for {m.rows} rows")
    rational = _is_rational_matrix(m) and all(isinstance(x, (int, Fraction)) for x in b.values())
    if rational:
        dense = [[Fraction(0)] * (m.cols + 1) for _ in range(m.rows)]
        for (i, j), x in m.entries.items():
            dense[i][j] = Fraction(x)
        for i, x in b.items():
            dense[i][m.cols] = Fraction(x)
    else:
        z = _zero_like(m)
        dense = [[z] * (m.cols + 1) for _ in range(m.rows)]
        for (i, j), x in m.entries.items():
            dense[i][j] = x
        for i, x in b.items():
            dense[i][m.cols] = x
    pivots = _echelon_field(dense)
    if pivots and pivots[-1] == m.cols:
        return None  # pivot in the augmented column: inconsistent
    x = {}
    for r in range(len(pivots) - 1, -1, -1):
        pc = pivots[r]
        s = dense[r][m.cols]
        for j, xj in x.items():
            a = dense[r][j]
            if a:
                s = s - a * xj
        if s:
            x[pc] = s / dense[r][pc]
    return x


def generalized_kernel(m, power):
    """(kernel basis of m, extension to a basis of ker(m**power)).

    Every excess vector v satisfies m @ v != 0 and m**power @ v = 0,
    which is asserted before returning.
    """
    if m.rows != m.cols:
        raise ValueError("generalized kernel needs a square matrix")
    if power < 1:
        raise ValueError("power must be positive")
    kernel = nullspace(m)
    big = nullspace(m**power)
    # extend `kernel` to a basis of the larger space, keeping the order of `big`
    rows_by_lead = {}
    for v in kernel:
        w = _reduce_vec(v, rows_by_lead)
        rows_by_lead[min(w)] = w
    excess = []
    for v in big:
        w = _reduce_vec(v, rows_by_lead)
        if w:
            excess.append(v)
            rows_by_lead[min(w)] = w
    mp = m**power
    for v in excess:
        if vec_is_zero(m.apply(v)):
            raise AssertionError("excess vector lies in the plain kernel")
        if not vec_is_zero(mp.apply(v)):
            raise AssertionError("excess vector survives the matrix power")
    return kernel, excess


def _reduce_vec(v, rows_by_lead):
    """Reduce v modulo an echelon set of vectors keyed by leading index."""
    w = {k: Fraction(x) for k, x in v.items()}
    while w:
        lead = min(w)
        row = rows_by_lead.get(lead)
        if row is None:
            break
        c = w[lead] / row[lead]
        for k, x in row.items():
            y = w.get(k, Fraction(0)) - c * x
            if y:
                w[k] = y
            else:
                w.pop(k, None)
    return w
