"""Truncated sl2-modules with exact action matrices.

Four module kinds are supported, all over exact rationals:

- ``Ln``         the (n+1)-dimensional simple module, basis v_0..v_n
- ``Verma``      the highest weight module of weight lambda on w_k = x^k
- ``TensorLnV0`` the tensor product Ln (x) Verma(0) on v_i (x) w_k
- ``Tr``         the indecomposable projective cover, realized concretely
                 inside Ln (x) Verma(0) on the generator columns
                 {f^k a} u {f^k u}

A module stores a finite slice.  Depth counts f-steps from the top of
the relevant column, so e lowers depth, f raises it by at most one, and
h preserves it.  Identity checks are meaningful only on the interior
region: the labels whose images under every operator word of length at
most ``margin`` stay inside the slice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactla import SparseMat, nullspace, solve, vec_is_zero

__all__ = [
    "TruncatedModule",
    "InteriorRegion",
    "TruncationError",
    "ConstructionError",
    "build_Ln",
    "build_verma",
    "build_tensor",
    "build_Tr",
    "casimir",
    "verify_category_I",
    "CategoryIReport",
    "apply_op",
    "apply_word",
    "module_to_json",
    "label_str",
]


class TruncationError(Exception):
    """An operation needed basis labels beyond the stored depth."""


class ConstructionError(Exception):
    """A module build produced an inconsistent linear solve."""


# Basis labels are plain tuples:
#   ("v", i)       basis vector v_i of Ln
#   ("w", k)       basis vector w_k = x^k of a Verma module
#   ("vw", i, k)   tensor basis vector v_i (x) w_k
#   ("a", k)       f^k applied to the projective generator a of Tr
#   ("u", k)       f^k applied to the highest weight generator u of Tr


def label_str(label):
    tag = label[0]
    if tag == "v":
        return f"v{label[1]}"
    if tag == "w":
        return f"w{label[1]}"
    if tag == "vw":
        return f"v{label[1]}*w{label[2]}"
    if tag in ("a", "u"):
        return f"{tag}{label[1]}"
    raise ValueError(f"unknown label {label!r}")


class TruncatedModule:
    """A finite slice of an sl2-module with exact e, f, h actions.

    ``basis`` lists the labels of depth <= depth; ``basis_ext`` extends
    one level deeper so the rectangular matrix of f is exact.  ``complete``
    marks modules without truncation (only Ln), where every identity
    holds on the whole basis.
    """

    def __init__(self, kind, params, depth, basis, basis_ext, weights, depths,
                 act, complete=False, depth_fn=None):
        self.kind = kind
        self.params = dict(params)
        self.depth = depth
        self.basis = list(basis)
        self.basis_ext = list(basis_ext)
        self.weights = dict(weights)
        self.depths = dict(depths)
        self._act = act
        self._depth_fn = depth_fn
        self.complete = complete
        self.index = {b: i for i, b in enumerate(self.basis)}
        self.index_ext = {b: i for i, b in enumerate(self.basis_ext)}

    # -- label-level exact action --------------------------------------
    def act_label(self, op, label):
        """Exact action of op in {'e','f','h'} on one basis label.

        The result is a dict label -> Fraction in the untruncated module;
        raises TruncationError when the action is not known that deep.
        """
        if op == "h":
            return {label: Fraction(self.weights[label])} if self.weights[label] else {}
        return self._act(op, label)

    def weight(self, label):
        return self.weights[label]

    def depth_of(self, label):
        d = self.depths.get(label)
        if d is None and self._depth_fn is not None:
            d = self._depth_fn(label)
        if d is None:
            raise TruncationError(f"label {label_str(label)} outside the stored slice")
        return d

    # -- matrices -------------------------------------------------------
    def act_matrix(self, op):
        """Matrix of op on the slice: square for e and h, and for f a
        rectangular map from the slice into the one-deeper slice.

        Components falling outside the codomain slice are dropped; they
        can only occur outside the interior region.
        """
        if op == "f":
            rows, row_index = self.basis_ext, self.index_ext
        else:
            rows, row_index = self.basis, self.index
        ent = {}
        for j, b in enumerate(self.basis):
            for lbl, c in self.act_label(op, b).items():
                i = row_index.get(lbl)
                if i is not None:
                    ent[i, j] = c
        return SparseMat(len(rows), len(self.basis), ent)

    @property
    def actE(self):
        return self.act_matrix("e")

    @property
    def actF(self):
        return self.act_matrix("f")

    @property
    def actH(self):
        return self.act_matrix("h")

    # -- slices ---------------------------------------------------------
    def weight_labels(self, mu, extended=False):
        src = self.basis_ext if extended else self.basis
        return [b for b in src if self.weights[b] == mu]

    def weight_space_complete(self, mu):
        """Whether the stored slice contains the whole weight-mu space."""
        if self.complete:
            return True
        if self.kind == "Verma":
            lam = self.params["lam"]
            return mu > lam - 2 * (self.depth + 1) or (mu - lam) % 2 != 0
        if self.kind == "TensorLnV0":
            n = self.params["n"]
            return (n - mu) % 2 != 0 or (n - mu) // 2 <= self.depth
        if self.kind == "Tr":
            r = self.params["r"]
            return (r - mu) % 2 != 0 or (r - mu) // 2 <= self.depth
        raise ValueError(self.kind)

    def interior(self, margin):
        return InteriorRegion(self, margin).labels

    def __repr__(self):
        return f"TruncatedModule({self.kind}, {self.params}, depth={self.depth}, dim={len(self.basis)})"


@dataclass(frozen=True)
class InteriorRegion:
    """Labels whose images under any e/f-word of length <= margin stay
    inside the slice."""

    module: TruncatedModule
    margin: int

    @property
    def labels(self):
        m = self.module
        if m.complete:
            return list(m.basis)
        return [b for b in m.basis if m.depths[b] + self.margin <= m.depth]

    def __contains__(self, label):
        m = self.module
        if m.complete:
            return label in m.index
        return label in m.index and m.depths[label] + self.margin <= m.depth


# ---------------------------------------------------------------------------
# vector-level application
# ---------------------------------------------------------------------------

def apply_op(module, op, vec):
    """Apply e, f or h to a dict label -> coefficient, exactly."""
    out = {}
    for label, c in vec.items():
        if not c:
            continue
        for lbl, x in module.act_label(op, label).items():
            y = out.get(lbl, 0) + c * x
            if y:
                out[lbl] = y
            else:
                del out[lbl]
    return out


def apply_word(module, word, vec):
    """Apply a word in {'e','f','h'} with the rightmost letter acting first."""
    for op in reversed(word):
        vec = apply_op(module, op, vec)
    return vec


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def build_Ln(n):
    """The (n+1)-dimensional simple module with highest weight n.

    f v_i = (i+1) v_{i+1},  e v_i = (n-i+1) v_{i-1},  h v_i = (n-2i) v_i.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    basis = [("v", i) for i in range(n + 1)]
    weights = {("v", i): n - 2 * i for i in range(n + 1)}
    depths = {("v", i): i for i in range(n + 1)}

    def act(op, label):
        i = label[1]
        if op == "e":
            return {("v", i - 1): Fraction(n - i + 1)} if i >= 1 else {}
        if op == "f":
            return {("v", i + 1): Fraction(i + 1)} if i < n else {}
        raise ValueError(op)

    return TruncatedModule("Ln", {"n": n}, n, basis, basis, weights, depths,
                           act, complete=True, depth_fn=lambda lbl: lbl[1])


def build_verma(lam, depth):
    """Verma module of highest weight lam on w_k = x^k, truncated at depth.

    f w_k = w_{k+1},  e w_k = k (lam - k + 1) w_{k-1},  h w_k = (lam - 2k) w_k.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    basis = [("w", k) for k in range(depth + 1)]
    basis_ext = [("w", k) for k in range(depth + 2)]
    weights = {("w", k): lam - 2 * k for k in range(depth + 2)}
    depths = {("w", k): k for k in range(depth + 2)}

    def act(op, label):
        k = label[1]
        if op == "e":
            c = Fraction(k * (lam - k + 1))
            return {("w", k - 1): c} if k >= 1 and c else {}
        if op == "f":
            return {("w", k + 1): Fraction(1)}
        raise ValueError(op)

    return TruncatedModule("Verma", {"lam": lam}, depth, basis, basis_ext,
                           weights, depths, act, depth_fn=lambda lbl: lbl[1])


def build_tensor(n, depth):
    """The slice of Ln (x) Verma(0) on v_i (x) w_k with k <= depth.

    The action comes from the coproduct x -> x (x) 1 + 1 (x) x:
        e (v_i w_k) = (n-i+1) v_{i-1} w_k - k(k-1) v_i w_{k-1}
        f (v_i w_k) = (i+1) v_{i+1} w_k + v_i w_{k+1}
        h (v_i w_k) = (n - 2i - 2k) v_i w_k
    """
    if n < 0 or depth < 0:
        raise ValueError("n and depth must be nonnegative")
    basis = [("vw", i, k) for k in range(depth + 1) for i in range(n + 1)]
    basis_ext = [("vw", i, k) for k in range(depth + 2) for i in range(n + 1)]
    weights = {("vw", i, k): n - 2 * i - 2 * k
               for k in range(depth + 2) for i in range(n + 1)}
    depths = {("vw", i, k): k for k in range(depth + 2) for i in range(n + 1)}

    def act(op, label):
        _, i, k = label
        out = {}
        if op == "e":
            if i >= 1:
                out[("vw", i - 1, k)] = Fraction(n - i + 1)
            if k >= 2:  # k(k-1) vanishes for k <= 1
                out[("vw", i, k - 1)] = Fraction(-k * (k - 1))
            return out
        if op == "f":
            if i < n:
                out[("vw", i + 1, k)] = Fraction(i + 1)
            out[("vw", i, k + 1)] = Fraction(1)
            return out
        raise ValueError(op)

    return TruncatedModule("TensorLnV0", {"n": n}, depth, basis, basis_ext,
                           weights, depths, act, depth_fn=lambda lbl: lbl[2])


def build_Tr(r, n, depth):
    """The projective cover T_r realized inside Ln (x) Verma(0).

    The basis is {f^k a : k} u {f^k u : k} where a is the weight-(-r-2)
    generator on which the shifted Casimir is nilpotent of order exactly
    two and u is the highest weight vector of weight r.  Depth counts
    f-steps from u, so label ("u", k) has depth k and ("a", k) has depth
    k + r + 1.  Actions are found by expressing the e/f/h images of the
    spanning vectors back in the spanning set with an exact linear solve;
    an inconsistent solve signals a construction bug and raises.
    """
    from . import enright  # deferred: enright builds on this module

    if depth < r + 1:
        raise ValueError(f"depth must be at least r+1={r + 1} to include the a-column")
    sets = enright.index_sets(n, 0)
    if r not in sets.Iprime:
        raise ValueError(f"r={r} is not an admissible projective index for n={n}")

    hwv = enright.highest_weight_vector(n, r)
    gen = enright.projective_generator(n, r)
    u_vec = {("vw", i, k): Fraction(c) for (i, k), c in hwv.coefficients.items()}
    a_vec = {("vw", i, k): Fraction(c) for (i, k), c in gen.final_vector.items()}

    # tensor slice deep enough to hold f^(depth+1) of both generators
    a_top = max(k for (_, k) in gen.final_vector)
    u_top = max(k for (_, k) in hwv.coefficients)
    amb = build_tensor(n, max(a_top, u_top) + depth + 3)

    def f_tower(vec, count):
        tower = [vec]
        for _ in range(count):
            tower.append(apply_op(amb, "f", tower[-1]))
        return tower

    u_tower = f_tower(u_vec, depth + 2)
    a_tower = f_tower(a_vec, depth + 2 - (r + 1))

    def labels_to_depth(d):
        out = []
        for dd in range(d + 1):
            out.append(("u", dd))
            if dd >= r + 1:
                out.append(("a", dd - r - 1))
        return out

    basis = labels_to_depth(depth)
    basis_ext = labels_to_depth(depth + 1)
    weights = {}
    depths = {}
    for lbl in basis_ext:
        k = lbl[1]
        if lbl[0] == "u":
            weights[lbl] = r - 2 * k
            depths[lbl] = k
        else:
            weights[lbl] = -r - 2 - 2 * k
            depths[lbl] = k + r + 1

    span_at_depth = {}
    for lbl in basis_ext:
        d = depths[lbl]
        span_at_depth.setdefault(d, []).append(lbl)

    def resolve(vec, d):
        """Express a tensor vector in the spanning vectors at depth d."""
        if vec_is_zero(vec):
            return {}
        span = span_at_depth.get(d)
        if span is None:
            raise TruncationError(f"depth {d} outside the stored slice")
        cols = [a_tower[l[1]] if l[0] == "a" else u_tower[l[1]] for l in span]
        coords = sorted({key for col in cols for key in col} | set(vec))
        pos = {key: i for i, key in enumerate(coords)}
        ent = {}
        for j, col in enumerate(cols):
            for key, c in col.items():
                ent[pos[key], j] = c
        mat = SparseMat(len(coords), len(span), ent)
        rhs = {pos[key]: c for key, c in vec.items()}
        x = solve(mat, rhs)
        if x is None:
            raise ConstructionError(
                f"image not expressible in the T_{r} spanning set at depth {d}")
        return {span[j]: c for j, c in x.items() if c}

    table = {}
    for lbl in basis_ext:
        k = lbl[1]
        tower = a_tower if lbl[0] == "a" else u_tower
        d = depths[lbl]
        if d <= depth:
            table["f", lbl] = {(lbl[0], k + 1): Fraction(1)}
        # e image lives one depth higher in weight; solve it back
        if d <= depth + 1:
            e_img = apply_op(amb, "e", tower[k])
            table["e", lbl] = resolve(e_img, d - 1)

    def act(op, label):
        try:
            return dict(table[op, label])
        except KeyError:
            raise TruncationError(f"{op} on {label_str(label)} exceeds depth {depth}")

    mod = TruncatedModule("Tr", {"r": r, "n": n}, depth, basis, basis_ext,
                          weights, depths, act,
                          depth_fn=lambda lbl: lbl[1] + (r + 1 if lbl[0] == "a" else 0))
    _validate_Tr(mod, r)
    return mod


def _validate_Tr(mod, r):
    """Structural checks for the realized projective cover.

    The u-column must be e/f/h-stable and carry the Verma(r) action, and
    the quotient by it must carry the Verma(-r-2) action; the single
    cross coefficient of e from the a-column into the u-column must not
    depend on the f-power.
    """
    if mod.act_label("h", ("a", 0)) != {("a", 0): Fraction(-r - 2)}:
        raise ConstructionError("generator a does not have weight -r-2")
    kappa = None
    for lbl in mod.basis:
        k = lbl[1]
        img = mod.act_label("e", lbl)
        if lbl[0] == "u":
            expect = {("u", k - 1): Fraction(k * (r - k + 1))} if k >= 1 and k != r + 1 else {}
            if img != expect:
                raise ConstructionError(f"u-column is not the Verma({r}) action at {lbl}")
        else:
            a_part = {l: c for l, c in img.items() if l[0] == "a"}
            u_part = {l: c for l, c in img.items() if l[0] == "u"}
            expect = {("a", k - 1): Fraction(-k * (k + r + 1))} if k >= 1 else {}
            if a_part != expect:
                raise ConstructionError(
                    f"a-column does not give the Verma({-r - 2}) quotient action at {lbl}")
            if set(u_part) - {("u", k + r)}:
                raise ConstructionError(f"unexpected cross terms in e at {lbl}")
            c = u_part.get(("u", k + r), Fraction(0))
            if kappa is None:
                kappa = c
            elif c != kappa:
                raise ConstructionError("cross coefficient varies along the a-column")
    mod.params["cross_coefficient"] = kappa


# ---------------------------------------------------------------------------
# operators and reports
# ---------------------------------------------------------------------------

def casimir(m):
    """Matrix of the Casimir operator h^2 + 2h + 4fe on the slice.

    Columns for labels outside the interior region with margin 2 may be
    truncated; everything inside is exact.
    """
    ent = {}
    for j, b in enumerate(m.basis):
        col = casimir_on_vector(m, {b: Fraction(1)})
        for lbl, c in col.items():
            i = m.index.get(lbl)
            if i is not None:
                ent[i, j] = c
    return SparseMat(len(m.basis), len(m.basis), ent)


def casimir_on_vector(m, vec):
    h1 = apply_op(m, "h", vec)
    out = apply_op(m, "h", h1)
    for lbl, c in h1.items():
        y = out.get(lbl, 0) + 2 * c
        if y:
            out[lbl] = y
        else:
            del out[lbl]
    fe = apply_op(m, "f", apply_op(m, "e", vec))
    for lbl, c in fe.items():
        y = out.get(lbl, 0) + 4 * c
        if y:
            out[lbl] = y
        else:
            del out[lbl]
    return out


@dataclass
class CategoryIReport:
    weights_diagonal: bool
    f_injective: bool
    e_locally_nilpotent: bool
    f_failures: list
    details: dict

    @property
    def in_category(self):
        return self.weights_diagonal and self.f_injective and self.e_locally_nilpotent


def verify_category_I(m, margin=1):
    """Check the membership criteria for Enright's category on the slice.

    h must act diagonally with the declared weights, f must be injective
    on the interior region (full column rank on every weight space), and
    e must be locally nilpotent (it raises weight, so a computable power
    kills each basis vector).
    """
    weights_ok = all(
        m.act_label("h", b) == ({b: Fraction(m.weights[b])} if m.weights[b] else {})
        for b in m.basis
    )

    interior = set(m.interior(margin))
    f_failures = []
    by_weight = {}
    for b in m.basis:
        if b in interior:
            by_weight.setdefault(m.weights[b], []).append(b)
    for mu, labels in sorted(by_weight.items(), reverse=True):
        targets = m.weight_labels(mu - 2, extended=True)
        pos = {t: i for i, t in enumerate(targets)}
        ent = {}
        for j, b in enumerate(labels):
            for lbl, c in m.act_label("f", b).items():
                ent[pos[lbl], j] = c
        ker = nullspace(SparseMat(len(targets), len(labels), ent))
        if ker:
            f_failures.append(mu)
    f_ok = not f_failures

    top = max(m.weights[b] for b in m.basis)
    e_ok = True
    for b in m.basis:
        steps = (top - m.weights[b]) // 2 + 1
        vec = {b: Fraction(1)}
        for _ in range(steps):
            vec = apply_op(m, "e", vec)
            if not vec:
                break
        if vec:
            e_ok = False
            break

    return CategoryIReport(
        weights_diagonal=weights_ok,
        f_injective=f_ok,
        e_locally_nilpotent=e_ok,
        f_failures=f_failures,
        details={"kind": m.kind, "params": dict(m.params), "margin": margin},
    )


def module_to_json(m):
    """JSON-ready document: labels, weights, and matrix triplet lists."""

    def scalar(x):
        f = Fraction(x)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"

    def triplets(mat):
        return [[i, j, scalar(x)] for (i, j), x in sorted(mat.entries.items())]

    return {
        "kind": m.kind,
        "params": {k: (v if isinstance(v, int) else scalar(v))
                   for k, v in m.params.items()},
        "depth": m.depth,
        "basis": [label_str(b) for b in m.basis],
        "basisExt": [label_str(b) for b in m.basis_ext],
        "weights": [m.weights[b] for b in m.basis],
        "actE": triplets(m.actE),
        "actF": triplets(m.actF),
        "actH": triplets(m.actH),
    }
