"""Abelianization of the additive category of rational matrix objects.

Objects are double arrows A' -> A -> A'' of finite-dimensional rational
spaces (dimensions plus two composable matrices, with no exactness
assumed).  Morphisms are commuting triples, considered up to the
homotopy relation b' s1 + s2 a = alpha - beta, which only constrains the
middle components.  Kernels and cokernels are built from block
matrices; since the printed block shapes admit more than one
dimension-consistent reading, the choice is resolved behaviourally: the
candidate constructions are run against a universal-property oracle on
random instances and the unique survivor is recorded.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exactla import SparseMat, nullspace, solve

__all__ = [
    "DoubleArrow",
    "TripleMorphism",
    "Homotopy",
    "is_morphism",
    "compose",
    "identity_of",
    "zero_morphism",
    "homotopic",
    "homotopic_to_zero",
    "zero_equivalent",
    "kernel",
    "cokernel",
    "embed",
    "embed_morphism",
    "random_object",
    "random_morphism",
    "morphism_space_dimension",
    "factors_through_kernel",
    "factors_through_cokernel",
    "resolve_interpretation",
    "KERNEL_INTERPRETATIONS",
    "COKERNEL_INTERPRETATIONS",
]


@dataclass(frozen=True)
class DoubleArrow:
    """A' -> A -> A'': dimensions (d1, d2, d3) and the two matrices."""

    dims: tuple
    m1: SparseMat  # d1 -> d2
    m2: SparseMat  # d2 -> d3

    def __post_init__(self):
        d1, d2, d3 = self.dims
        if (self.m1.rows, self.m1.cols) != (d2, d1):
            raise ValueError("first arrow has wrong shape")
        if (self.m2.rows, self.m2.cols) != (d3, d2):
            raise ValueError("second arrow has wrong shape")


@dataclass(frozen=True)
class TripleMorphism:
    source: DoubleArrow
    target: DoubleArrow
    x1: SparseMat
    x2: SparseMat
    x3: SparseMat


@dataclass(frozen=True)
class Homotopy:
    s1: SparseMat  # mid(source) -> first(target)
    s2: SparseMat  # last(source) -> mid(target)


def is_morphism(t):
    """Exact check that both squares commute."""
    src, tgt = t.source, t.target
    return (t.x2 @ src.m1 == tgt.m1 @ t.x1) and (t.x3 @ src.m2 == tgt.m2 @ t.x2)


def compose(f, g):
    """f after g."""
    if g.target != f.source:
        raise ValueError("composition mismatch")
    return TripleMorphism(g.source, f.target, f.x1 @ g.x1, f.x2 @ g.x2, f.x3 @ g.x3)


def identity_of(obj):
    d1, d2, d3 = obj.dims
    return TripleMorphism(obj, obj, SparseMat.identity(d1),
                          SparseMat.identity(d2), SparseMat.identity(d3))


def zero_morphism(src, tgt):
    return TripleMorphism(
        src, tgt,
        SparseMat(tgt.dims[0], src.dims[0]),
        SparseMat(tgt.dims[1], src.dims[1]),
        SparseMat(tgt.dims[2], src.dims[2]),
    )


# ---------------------------------------------------------------------------
# the homotopy relation
# ---------------------------------------------------------------------------

def _mat_from_vars(sol, rows, cols, offset):
    ent = {}
    for r in range(rows):
        for c in range(cols):
            v = sol.get(offset + r * cols + c)
            if v:
                ent[r, c] = v
    return SparseMat(rows, cols, ent)


def homotopic(f, g):
    """A witness (s1, s2) with b' s1 + s2 a = f.x2 - g.x2, or None.

    Only the middle components enter the relation.  The witness is
    re-verified by substitution before being returned.
    """
    if f.source.dims != g.source.dims or f.target.dims != g.target.dims:
        raise ValueError("homotopy requires equal shapes")
    src, tgt = f.source, f.target
    dA = src.dims[1]
    dA2 = src.dims[2]
    dB1 = tgt.dims[0]
    dB = tgt.dims[1]
    a = src.m2       # A -> A''
    bp = tgt.m1      # B' -> B
    diff = f.x2 - g.x2

    n_s1 = dB1 * dA
    n_s2 = dB * dA2
    ent = {}
    # rows indexed by (p, q) in dB x dA
    for (p, r), x in bp.entries.items():
        for q in range(dA):
            ent[p * dA + q, r * dA + q] = x
    for (r, q), x in a.entries.items():
        for p in range(dB):
            key = (p * dA + q, n_s1 + p * dA2 + r)
            ent[key] = ent.get(key, 0) + x
    mat = SparseMat(dB * dA, n_s1 + n_s2, {k: v for k, v in ent.items() if v})
    rhs = {p * dA + q: x for (p, q), x in diff.entries.items()}
    sol = solve(mat, rhs)
    if sol is None:
        return None
    s1 = _mat_from_vars(sol, dB1, dA, 0)
    s2 = _mat_from_vars(sol, dB, dA2, n_s1)
    if bp @ s1 + s2 @ a != diff:
        raise AssertionError("homotopy witness failed re-verification")
    return Homotopy(s1, s2)


def homotopic_to_zero(f):
    return homotopic(f, zero_morphism(f.source, f.target))


def zero_equivalent(obj):
    """An object is zero in the quotient category iff its identity is
    null-homotopic."""
    return homotopic_to_zero(identity_of(obj)) is not None


# ---------------------------------------------------------------------------
# block constructions for kernel and cokernel
# ---------------------------------------------------------------------------

def _hstack(left, right):
    rows = left.rows
    if right.rows != rows:
        raise ValueError("hstack row mismatch")
    ent = dict(left.entries)
    for (r, c), x in right.entries.items():
        ent[r, c + left.cols] = x
    return SparseMat(rows, left.cols + right.cols, ent)


def _vstack(top, bottom):
    cols = top.cols
    if bottom.cols != cols:
        raise ValueError("vstack col mismatch")
    ent = dict(top.entries)
    for (r, c), x in bottom.entries.items():
        ent[r + top.rows, c] = x
    return SparseMat(top.rows + bottom.rows, cols, ent)


def _block(rows_of_blocks):
    out = None
    for row in rows_of_blocks:
        acc = None
        for blk in row:
            acc = blk if acc is None else _hstack(acc, blk)
        out = acc if out is None else _vstack(out, acc)
    return out


def _kernel_extended(t):
    """Kernel object A'+B' -> A+B' -> B+A'' with blocks
    phi = (a' 0; alpha' 1), psi = (alpha -b'; a 0), included into the
    source by coordinate projections."""
    src, tgt = t.source, t.target
    dA1, dA, dA2 = src.dims
    dB1, dB, _ = tgt.dims
    Ia = SparseMat.identity(dA)
    Ib1 = SparseMat.identity(dB1)
    Ia2 = SparseMat.identity(dA2)
    phi = _block([
        [src.m1, SparseMat(dA, dB1)],
        [t.x1, Ib1],
    ])
    psi = _block([
        [t.x2, tgt.m1.scale(-1)],
        [src.m2, SparseMat(dA2, dB1)],
    ])
    ker = DoubleArrow((dA1 + dB1, dA + dB1, dB + dA2), phi, psi)
    inc = TripleMorphism(
        ker, src,
        _hstack(SparseMat.identity(dA1), SparseMat(dA1, dB1)),
        _hstack(Ia, SparseMat(dA, dB1)),
        _hstack(SparseMat(dA2, dB), Ia2),
    )
    return ker, inc


def _kernel_middle_a(t):
    """Literal reading keeping the middle object A: A'+B' -> A -> B+A''."""
    src, tgt = t.source, t.target
    dA1, dA, dA2 = src.dims
    dB1, dB, _ = tgt.dims
    phi = _hstack(src.m1, SparseMat(dA, dB1))
    psi = _vstack(t.x2, src.m2)
    ker = DoubleArrow((dA1 + dB1, dA, dB + dA2), phi, psi)
    inc = TripleMorphism(
        ker, src,
        _hstack(SparseMat.identity(dA1), SparseMat(dA1, dB1)),
        SparseMat.identity(dA),
        _hstack(SparseMat(dA2, dB), SparseMat.identity(dA2)),
    )
    return ker, inc


def _cokernel_extended(t):
    """Cokernel object B'+A -> B+A'' -> B''+A'' with blocks
    gamma = (b' alpha; 0 -a), rho = (b alpha''; 0 -1), the target
    mapping in by coordinate inclusions."""
    src, tgt = t.source, t.target
    _, dA, dA2 = src.dims
    dB1, dB, dB2 = tgt.dims
    Ia2 = SparseMat.identity(dA2)
    gamma = _block([
        [tgt.m1, t.x2],
        [SparseMat(dA2, dB1), src.m2.scale(-1)],
    ])
    rho = _block([
        [tgt.m2, t.x3],
        [SparseMat(dA2, dB), Ia2.scale(-1)],
    ])
    cok = DoubleArrow((dB1 + dA, dB + dA2, dB2 + dA2), gamma, rho)
    proj = TripleMorphism(
        tgt, cok,
        _vstack(SparseMat.identity(dB1), SparseMat(dA, dB1)),
        _vstack(SparseMat.identity(dB), SparseMat(dA2, dB)),
        _vstack(SparseMat.identity(dB2), SparseMat(dA2, dB2)),
    )
    return cok, proj


def _cokernel_middle_b(t):
    """Literal dual reading keeping the middle object B."""
    src, tgt = t.source, t.target
    _, dA, dA2 = src.dims
    dB1, dB, dB2 = tgt.dims
    gamma = _hstack(tgt.m1, t.x2)
    rho = _vstack(tgt.m2, SparseMat(dA2, dB))
    cok = DoubleArrow((dB1 + dA, dB, dB2 + dA2), gamma, rho)
    proj = TripleMorphism(
        tgt, cok,
        _vstack(SparseMat.identity(dB1), SparseMat(dA, dB1)),
        SparseMat.identity(dB),
        _vstack(SparseMat.identity(dB2), SparseMat(dA2, dB2)),
    )
    return cok, proj


KERNEL_INTERPRETATIONS = {
    "extended-middle": _kernel_extended,
    "literal-middle": _kernel_middle_a,
}
COKERNEL_INTERPRETATIONS = {
    "extended-middle": _cokernel_extended,
    "literal-middle": _cokernel_middle_b,
}

_frozen_choice = None


def frozen_interpretation():
    """The (kernel, cokernel) block readings selected by the resolution
    procedure, read from the checked-in fixture when present."""
    global _frozen_choice
    if _frozen_choice is None:
        try:
            from .fixtures import load_adelman_fixture
            doc = load_adelman_fixture()
            _frozen_choice = (doc["kernel"], doc["cokernel"])
        except (OSError, KeyError, ValueError):
            _frozen_choice = ("extended-middle", "extended-middle")
    return _frozen_choice


def kernel(t, interpretation=None):
    """Kernel candidate (object, inclusion) for a morphism.

    The verification is behavioural and lives with the callers: the
    composite through the inclusion must be null-homotopic and every
    test morphism killed by t must factor through the candidate.
    """
    if not is_morphism(t):
        raise ValueError("kernel of a non-morphism")
    name = interpretation or frozen_interpretation()[0]
    return KERNEL_INTERPRETATIONS[name](t)


def cokernel(t, interpretation=None):
    if not is_morphism(t):
        raise ValueError("cokernel of a non-morphism")
    name = interpretation or frozen_interpretation()[1]
    return COKERNEL_INTERPRETATIONS[name](t)


def embed(dim):
    """The full embedding of a matrix object: 0 -> Q^dim -> 0."""
    return DoubleArrow((0, dim, 0), SparseMat(dim, 0), SparseMat(0, dim))


def embed_morphism(mat):
    """The embedding on morphisms; plain matrices become middle maps."""
    return TripleMorphism(
        embed(mat.cols), embed(mat.rows),
        SparseMat(0, 0), mat, SparseMat(0, 0),
    )


# ---------------------------------------------------------------------------
# random instances and the universal-property oracle
# ---------------------------------------------------------------------------

def _random_matrix(rng, rows, cols, density=0.45):
    ent = {}
    for i in range(rows):
        for j in range(cols):
            if rng.random() < density:
                ent[i, j] = Fraction(rng.choice((-2, -1, 1, 2)))
    return SparseMat(rows, cols, ent)


def random_object(rng, max_dim=3):
    """Random double arrow; mixes generic sparse arrows with embedded
    objects and identity-like arrows so morphism spaces stay rich."""
    style = rng.randrange(6)
    if style == 0:
        return embed(rng.randint(1, max_dim))
    dims = [rng.randint(0, max_dim) for _ in range(3)]
    if style == 1:
        dims[0] = 0
    if style == 2:
        dims[2] = 0
    m1 = _random_matrix(rng, dims[1], dims[0])
    m2 = _random_matrix(rng, dims[2], dims[1])
    if style == 3 and dims[0] == dims[1]:
        m1 = SparseMat.identity(dims[1])
    if style == 4 and dims[1] == dims[2]:
        m2 = SparseMat.identity(dims[1])
    return DoubleArrow(tuple(dims), m1, m2)


def _morphism_basis(src, tgt):
    """Basis of the space of commuting triples src -> tgt."""
    dA1, dA, dA2 = src.dims
    dB1, dB, dB2 = tgt.dims
    n1, n2, n3 = dB1 * dA1, dB * dA, dB2 * dA2
    total = n1 + n2 + n3

    def v1(r, c):
        return r * dA1 + c

    def v2(r, c):
        return n1 + r * dA + c

    def v3(r, c):
        return n1 + n2 + r * dA2 + c

    ent = {}
    row = 0
    # x2 m1s - m1t x1 = 0
    for p in range(dB):
        for q in range(dA1):
            for (r, c), x in src.m1.entries.items():
                if c == q:
                    key = (row, v2(p, r))
                    ent[key] = ent.get(key, 0) + x
            for (r, c), x in tgt.m1.entries.items():
                if r == p:
                    key = (row, v1(c, q))
                    ent[key] = ent.get(key, 0) - x
            row += 1
    # x3 m2s - m2t x2 = 0
    for p in range(dB2):
        for q in range(dA):
            for (r, c), x in src.m2.entries.items():
                if c == q:
                    key = (row, v3(p, r))
                    ent[key] = ent.get(key, 0) + x
            for (r, c), x in tgt.m2.entries.items():
                if r == p:
                    key = (row, v2(c, q))
                    ent[key] = ent.get(key, 0) - x
            row += 1
    mat = SparseMat(row, total, {k: v for k, v in ent.items() if v})
    basis = []
    for vec in nullspace(mat):
        x1 = _mat_from_vars(vec, dB1, dA1, 0)
        x2 = _mat_from_vars(vec, dB, dA, n1)
        x3 = _mat_from_vars(vec, dB2, dA2, n1 + n2)
        basis.append(TripleMorphism(src, tgt, x1, x2, x3))
    return basis


def morphism_space_dimension(src, tgt):
    return len(_morphism_basis(src, tgt))


def random_morphism(rng, src, tgt):
    """Random integer combination of a basis of the morphism space."""
    basis = _morphism_basis(src, tgt)
    out = zero_morphism(src, tgt)
    for f in basis:
        c = rng.randint(-2, 2)
        if c:
            out = TripleMorphism(src, tgt,
                                 out.x1 + f.x1.scale(c),
                                 out.x2 + f.x2.scale(c),
                                 out.x3 + f.x3.scale(c))
    return out


def _factors_up_to_homotopy(u, through, side):
    """Joint linear solve for v and a homotopy with through o v ~ u
    (side='kernel') or v o through ~ u (side='cokernel').

    v ranges over genuine morphisms (its commuting squares are part of
    the system), and the homotopy only constrains middle components.
    """
    if side == "kernel":
        W, K, X = u.source, through.source, through.target
        # unknowns: v: W -> K; homotopy between through o v and u in Hom(W, X)
        src_h, tgt_h = W, X
        mid_of_v_factor = through.x2  # composes on the left of v.x2
    else:
        W, K, Y = u.target, through.target, through.source
        src_h, tgt_h = Y, W
        mid_of_v_factor = through.x2  # composes on the right of v.x2

    dK1, dK, dK2 = K.dims
    dW1, dW, dW2 = W.dims
    nv1, nv2, nv3 = (dK1 * dW1, dK * dW, dK2 * dW2) if side == "kernel" else (
        dW1 * dK1, dW * dK, dW2 * dK2)
    dH_a = src_h.dims[1]      # middle of homotopy source
    dH_a2 = src_h.dims[2]
    dH_b1 = tgt_h.dims[0]
    dH_b = tgt_h.dims[1]
    ns1 = dH_b1 * dH_a
    ns2 = dH_b * dH_a2
    total = nv1 + nv2 + nv3 + ns1 + ns2

    rows = []
    ent = {}
    row = 0

    def add(r, c, x):
        key = (r, c)
        v = ent.get(key, 0) + x
        if v:
            ent[key] = v
        else:
            ent.pop(key, None)

    if side == "kernel":
        vsrc, vtgt = W, K
    else:
        vsrc, vtgt = K, W

    dv_s = vsrc.dims
    dv_t = vtgt.dims

    def pos_v1(r, c):
        return r * dv_s[0] + c

    def pos_v2(r, c):
        return nv1 + r * dv_s[1] + c

    def pos_v3(r, c):
        return nv1 + nv2 + r * dv_s[2] + c

    rhs = {}
    # v commutes: v.x2 m1(vsrc) - m1(vtgt) v.x1 = 0
    for p in range(dv_t[1]):
        for q in range(dv_s[0]):
            for (r, c), x in vsrc.m1.entries.items():
                if c == q:
                    add(row, pos_v2(p, r), x)
            for (r, c), x in vtgt.m1.entries.items():
                if r == p:
                    add(row, pos_v1(c, q), -x)
            row += 1
    # v commutes: v.x3 m2(vsrc) - m2(vtgt) v.x2 = 0
    for p in range(dv_t[2]):
        for q in range(dv_s[1]):
            for (r, c), x in vsrc.m2.entries.items():
                if c == q:
                    add(row, pos_v3(p, r), x)
            for (r, c), x in vtgt.m2.entries.items():
                if r == p:
                    add(row, pos_v2(c, q), -x)
            row += 1
    # homotopy: b' s1 + s2 a + (composite middle) = u.x2
    a = src_h.m2
    bp = tgt_h.m1
    for p in range(tgt_h.dims[1]):
        for q in range(src_h.dims[1]):
            # composite middle: through.x2 @ v.x2 (kernel) or v.x2 @ through.x2
            if side == "kernel":
                for (pp, r), x in mid_of_v_factor.entries.items():
                    if pp == p:
                        add(row, pos_v2(r, q), x)
            else:
                for (r, qq), x in mid_of_v_factor.entries.items():
                    if qq == q:
                        add(row, pos_v2(p, r), x)
            for (pp, r), x in bp.entries.items():
                if pp == p:
                    add(row, nv1 + nv2 + nv3 + r * dH_a + q, x)
            for (r, qq), x in a.entries.items():
                if qq == q:
                    add(row, nv1 + nv2 + nv3 + ns1 + p * dH_a2 + r, x)
            if u.x2[p, q]:
                rhs[row] = u.x2[p, q]
            row += 1

    mat = SparseMat(row, total, ent)
    sol = solve(mat, rhs)
    if sol is None:
        return None
    v = TripleMorphism(
        vsrc, vtgt,
        _mat_from_vars(sol, dv_t[0], dv_s[0], 0),
        _mat_from_vars(sol, dv_t[1], dv_s[1], nv1),
        _mat_from_vars(sol, dv_t[2], dv_s[2], nv1 + nv2),
    )
    if not is_morphism(v):
        raise AssertionError("factorization solver produced a non-morphism")
    composite = compose(through, v) if side == "kernel" else compose(v, through)
    if homotopic(composite, u) is None:
        raise AssertionError("factorization solver witness fails homotopy check")
    return v


def factors_through_kernel(u, inclusion):
    """A morphism v with inclusion o v ~ u, or None."""
    return _factors_up_to_homotopy(u, inclusion, "kernel")


def factors_through_cokernel(u, projection):
    """A morphism v with v o projection ~ u, or None."""
    return _factors_up_to_homotopy(u, projection, "cokernel")


def random_null_homotopic(rng, src, tgt):
    """Random morphism homotopic to zero, with its witness.

    Solves jointly for (x1, x3, s1, s2) with middle x2 := b' s1 + s2 a
    subject to both commuting squares; the constraint matrix is built by
    probing unit vectors, and a random integer combination of the
    solution space basis is returned as (morphism, Homotopy).
    """
    dA1, dA, dA2 = src.dims
    dB1, dB, dB2 = tgt.dims
    shapes = [(dB1, dA1), (dB2, dA2), (dB1, dA), (dB, dA2)]  # x1, x3, s1, s2
    sizes = [r * c for r, c in shapes]
    offsets = [sum(sizes[:i]) for i in range(len(sizes))]
    total = sum(sizes)

    def unpack(vec):
        return [_mat_from_vars(vec, shapes[i][0], shapes[i][1], offsets[i])
                for i in range(4)]

    def residual(vec):
        x1, x3, s1, s2 = unpack(vec)
        x2 = tgt.m1 @ s1 + s2 @ src.m2
        r1 = x2 @ src.m1 - tgt.m1 @ x1
        r2 = x3 @ src.m2 - tgt.m2 @ x2
        out = {}
        for (p, q), x in r1.entries.items():
            out[p * dA1 + q] = x
        base = dB * dA1
        for (p, q), x in r2.entries.items():
            out[base + p * dA + q] = x
        return out

    ent = {}
    for col in range(total):
        for r, x in residual({col: Fraction(1)}).items():
            ent[r, col] = x
    mat = SparseMat(dB * dA1 + dB2 * dA, total, ent)
    combo = {}
    for vec in nullspace(mat):
        c = rng.randint(-2, 2)
        if c:
            for k, x in vec.items():
                v = combo.get(k, 0) + c * x
                if v:
                    combo[k] = v
                else:
                    combo.pop(k, None)
    x1, x3, s1, s2 = unpack(combo)
    x2 = tgt.m1 @ s1 + s2 @ src.m2
    d = TripleMorphism(src, tgt, x1, x2, x3)
    if not is_morphism(d):
        raise AssertionError("null-homotopic construction is not a morphism")
    return d, Homotopy(s1, s2)


@dataclass
class CongruenceReport:
    trials: int
    reflexive_ok: int
    symmetric_ok: int
    transitive_ok: int
    composition_ok: int

    @property
    def ok(self):
        return all(v == self.trials for v in (
            self.reflexive_ok, self.symmetric_ok,
            self.transitive_ok, self.composition_ok))


def congruence_checks(seed, trials, max_dim=4):
    """Homotopy is reflexive, symmetric, transitive, and stable under
    pre/post-composition, exercised on seeded random instances."""
    rng = random.Random(seed)
    rep = CongruenceReport(trials, 0, 0, 0, 0)
    for _ in range(trials):
        X = random_object(rng, max_dim)
        Y = random_object(rng, max_dim)
        f = random_morphism(rng, X, Y)
        d1, _ = random_null_homotopic(rng, X, Y)
        d2, _ = random_null_homotopic(rng, X, Y)
        g = TripleMorphism(X, Y, f.x1 + d1.x1, f.x2 + d1.x2, f.x3 + d1.x3)
        h = TripleMorphism(X, Y, g.x1 + d2.x1, g.x2 + d2.x2, g.x3 + d2.x3)
        if homotopic(f, f) is not None:
            rep.reflexive_ok += 1
        if homotopic(f, g) is not None and homotopic(g, f) is not None:
            rep.symmetric_ok += 1
        if (homotopic(f, g) is not None and homotopic(g, h) is not None
                and homotopic(f, h) is not None):
            rep.transitive_ok += 1
        V = random_object(rng, max_dim)
        Z = random_object(rng, max_dim)
        u = random_morphism(rng, V, X)
        w = random_morphism(rng, Y, Z)
        if (homotopic(compose(f, u), compose(g, u)) is not None
                and homotopic(compose(w, f), compose(w, g)) is not None):
            rep.composition_ok += 1
    return rep


@dataclass
class UniversalPropertyReport:
    trials: int
    kernel_passed: int
    kernel_failed: int
    cokernel_passed: int
    cokernel_failed: int

    @property
    def ok(self):
        return self.kernel_failed == 0 and self.cokernel_failed == 0


def universal_property_trials(seed, trials, max_dim=4,
                              kernel_interpretation=None,
                              cokernel_interpretation=None):
    """Both halves of the kernel and cokernel universal properties on
    seeded random instances: the composite through the candidate is
    null-homotopic, and every test morphism killed by t factors."""
    rng = random.Random(seed)
    rep = UniversalPropertyReport(trials, 0, 0, 0, 0)
    for _ in range(trials):
        X = random_object(rng, max_dim)
        Y = random_object(rng, max_dim)
        t = random_morphism(rng, X, Y)
        W = random_object(rng, max_dim)
        ker, inc = kernel(t, kernel_interpretation)
        ok = homotopic_to_zero(compose(t, inc)) is not None
        if ok:
            tests = []
            if homotopic_to_zero(t) is not None:
                tests.append(identity_of(X))
            u = random_morphism(rng, W, X)
            if homotopic_to_zero(compose(t, u)) is not None:
                tests.append(u)
            tests.append(compose(inc, random_morphism(rng, W, ker)))
            ok = all(factors_through_kernel(u, inc) is not None for u in tests)
        rep.kernel_passed += 1 if ok else 0
        rep.kernel_failed += 0 if ok else 1

        cok, proj = cokernel(t, cokernel_interpretation)
        ok = homotopic_to_zero(compose(proj, t)) is not None
        if ok:
            tests = []
            if homotopic_to_zero(t) is not None:
                tests.append(identity_of(Y))
            u = random_morphism(rng, Y, W)
            if homotopic_to_zero(compose(u, t)) is not None:
                tests.append(u)
            tests.append(compose(random_morphism(rng, cok, W), proj))
            ok = all(factors_through_cokernel(u, proj) is not None for u in tests)
        rep.cokernel_passed += 1 if ok else 0
        rep.cokernel_failed += 0 if ok else 1
    return rep


# ---------------------------------------------------------------------------
# behavioural disambiguation of the block shapes
# ---------------------------------------------------------------------------

@dataclass
class InterpretationReport:
    kernel_choice: str
    cokernel_choice: str
    kernel_scores: dict
    cokernel_scores: dict
    trials: int
    seed: int


def resolve_interpretation(seed=1729, min_trials=24, max_trials=400, max_dim=3):
    """Run every candidate block reading against the universal-property
    oracle on seeded random instances and select the unique survivor.

    A kernel candidate fails a trial when its inclusion composite is not
    null-homotopic, or when a test morphism killed by t does not factor
    through it; dually for cokernels.  Test morphisms include random
    morphisms filtered by the kill condition, morphisms constructed
    through the competing candidates, and the identity whenever t itself
    is null-homotopic.  Trials continue past min_trials until a single
    candidate per side survives, so the selection is deterministic per
    seed and stable across seeds.
    """
    rng = random.Random(seed)

    kernel_scores = {name: 0 for name in KERNEL_INTERPRETATIONS}
    cokernel_scores = {name: 0 for name in COKERNEL_INTERPRETATIONS}

    def undecided():
        k_alive = sum(1 for v in kernel_scores.values() if v == 0)
        c_alive = sum(1 for v in cokernel_scores.values() if v == 0)
        return k_alive > 1 or c_alive > 1

    tests_per_candidate = 4
    trials = 0
    while trials < max_trials and (trials < min_trials or undecided()):
        trials += 1
        X = random_object(rng, max_dim)
        Y = random_object(rng, max_dim)
        t = random_morphism(rng, X, Y)
        W = random_object(rng, max_dim)
        sub = rng.getrandbits(32)
        # --- kernels
        candidates = {name: f(t) for name, f in KERNEL_INTERPRETATIONS.items()}
        tests = []
        r2 = random.Random(sub)
        if homotopic_to_zero(t) is not None:
            tests.append(identity_of(t.source))  # everything must factor
        for _ in range(2):
            u = random_morphism(r2, W, t.source)
            if homotopic_to_zero(compose(t, u)) is not None:
                tests.append(u)
        for ker, inc in candidates.values():
            for _ in range(tests_per_candidate):
                cand_u = compose(inc, random_morphism(r2, W, ker))
                if homotopic_to_zero(compose(t, cand_u)) is not None:
                    tests.append(cand_u)
        for name, (ker, inc) in candidates.items():
            ok = homotopic_to_zero(compose(t, inc)) is not None
            if ok:
                for u_test in tests:
                    if factors_through_kernel(u_test, inc) is None:
                        ok = False
                        break
            kernel_scores[name] += 0 if ok else 1
        # --- cokernels
        candidates = {name: f(t) for name, f in COKERNEL_INTERPRETATIONS.items()}
        tests = []
        if homotopic_to_zero(t) is not None:
            tests.append(identity_of(t.target))
        for _ in range(2):
            u = random_morphism(r2, t.target, W)
            if homotopic_to_zero(compose(u, t)) is not None:
                tests.append(u)
        for cok, proj in candidates.values():
            for _ in range(tests_per_candidate):
                cand_u = compose(random_morphism(r2, cok, W), proj)
                if homotopic_to_zero(compose(cand_u, t)) is not None:
                    tests.append(cand_u)
        for name, (cok, proj) in candidates.items():
            ok = homotopic_to_zero(compose(proj, t)) is not None
            if ok:
                for u_test in tests:
                    if factors_through_cokernel(u_test, proj) is None:
                        ok = False
                        break
            cokernel_scores[name] += 0 if ok else 1

    kernel_pass = [n for n, bad in kernel_scores.items() if bad == 0]
    cokernel_pass = [n for n, bad in cokernel_scores.items() if bad == 0]
    if len(kernel_pass) != 1 or len(cokernel_pass) != 1:
        raise AssertionError(
            f"interpretation resolution not unique after {trials} trials: "
            f"kernels {kernel_scores}, cokernels {cokernel_scores}")
    return InterpretationReport(
        kernel_choice=kernel_pass[0],
        cokernel_choice=cokernel_pass[0],
        kernel_scores=kernel_scores,
        cokernel_scores=cokernel_scores,
        trials=trials,
        seed=seed,
    )
